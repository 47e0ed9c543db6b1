#ifndef DISCOCAT_TRUTH_MODEL_HPP_
#define DISCOCAT_TRUTH_MODEL_HPP_

#include <cstddef>
#include <istream>
#include <map>
#include <string>
#include <vector>

#include "discocat/functor.hpp"
#include "discocat/tensor.hpp"

namespace discocat {

struct WeightedPair {
  std::size_t left = 0;
  std::size_t right = 0;
  double weight = 1.0;
};

// A universe of individuals spanning N, common nouns as subsets, verbs as
// weighted relations and an ownership relation (owner, possessed). The
// sentence space is one-dimensional.
class RelationalModel {
 public:
  RelationalModel() = default;
  explicit RelationalModel(std::vector<std::string> universe);

  // Sectioned text:
  //   [universe]            names, whitespace separated
  //   [noun NAME] a b c     members (names or 0-based indices)
  //   [verb NAME]           lines `i j [weight]`, weight a decimal or p/q
  //   [ownership]           lines `owner possessed [weight]`
  static RelationalModel parse(std::istream& in);
  static RelationalModel load(const std::string& path);

  void addNoun(const std::string& name, std::vector<std::size_t> members);
  void addVerb(const std::string& name, std::vector<WeightedPair> pairs);
  void addOwnership(WeightedPair pair);

  std::size_t size() const { return universe_.size(); }
  const std::vector<std::string>& universe() const { return universe_; }
  std::size_t indexOf(const std::string& individual) const;
  const Space& nounSpace() const { return noun_; }
  const Space& sentenceSpace() const { return sentence_; }
  TypeInterpretation interpretation() const { return {noun_, sentence_}; }

  const std::vector<std::size_t>& noun(const std::string& name) const;
  const std::vector<WeightedPair>& verb(const std::string& name) const;
  const std::vector<WeightedPair>& ownership() const { return ownership_; }
  const std::map<std::string, std::vector<std::size_t>>& nouns() const { return nouns_; }
  const std::map<std::string, std::vector<WeightedPair>>& verbs() const { return verbs_; }

 private:
  std::size_t resolve(const std::string& token) const;
  void checkPair(const WeightedPair& pair) const;

  std::vector<std::string> universe_;
  std::map<std::string, std::size_t> index_;
  Space noun_{"N", 1};
  Space sentence_{"S", 1};
  std::map<std::string, std::vector<std::size_t>> nouns_;
  std::map<std::string, std::vector<WeightedPair>> verbs_;
  std::vector<WeightedPair> ownership_;
};

// Sum of the basis vectors of the noun's members.
Tensor nounVector(const RelationalModel& model, const std::string& name);
// Sum of alpha_ij e_i (x) e_j over the verb's pairs.
Tensor verbMatrix(const RelationalModel& model, const std::string& name);
// The same verb with its one-dimensional sentence leg, N (x) S (x) N.
Tensor verbCube(const RelationalModel& model, const std::string& name);
// 's as the matrix sum of e_owner (x) e_possessed.
OwnershipMap ownershipMap(const RelationalModel& model);

// Weighted clause meanings by direct enumeration of members and pairs:
//   subject case: sum over h in Poss, (h,k) owned, k in Subj, (k,l) in Verb, l in Obj
//   object case:  sum over h in Poss, (h,k) owned, k in Obj,  (l,k) in Verb, l in Subj
// of weight(h,k) * alpha, accumulated on e_h.
Tensor evalPossSubjTruth(const RelationalModel& model, const std::string& possessor, const std::string& subject,
                         const std::string& verb, const std::string& object);
Tensor evalPossObjTruth(const RelationalModel& model, const std::string& possessor, const std::string& subject,
                        const std::string& verb, const std::string& object);

// Reads a weighted truth vector as 0/1 truth values: any positive amount of
// evidence counts as true.
Tensor truthValues(const Tensor& weights);

}  // namespace discocat

#endif  // DISCOCAT_TRUTH_MODEL_HPP_
