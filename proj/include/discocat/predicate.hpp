#ifndef DISCOCAT_PREDICATE_HPP_
#define DISCOCAT_PREDICATE_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "discocat/tensor.hpp"
#include "discocat/truth_model.hpp"

namespace discocat {

using Subset = boost::dynamic_bitset<>;

// A binary predicate over the universe, stored as one bitset row per left
// element.
class Relation {
 public:
  explicit Relation(std::size_t universe = 0) : rows_(universe, Subset(universe)) {}

  void insert(std::size_t left, std::size_t right);
  bool contains(std::size_t left, std::size_t right) const { return rows_[left].test(right); }
  std::size_t universeSize() const { return rows_.size(); }
  const Subset& row(std::size_t left) const { return rows_[left]; }

 private:
  std::vector<Subset> rows_;
};

// R[T]: elements related to some member of T.
Subset relationalImage(const Relation& r, const Subset& t);
// R^-1[T]: elements related to some member of T from the left.
Subset inverseImage(const Relation& r, const Subset& t);

// The 0/1 shadow of a relational model: nonzero weights read as membership.
class SetModel {
 public:
  explicit SetModel(const RelationalModel& model);

  std::size_t size() const { return universe_.size(); }
  const std::vector<std::string>& universe() const { return universe_; }
  const Subset& unary(const std::string& name) const;
  const Relation& binary(const std::string& name) const;
  const Relation& has() const { return has_; }

 private:
  std::vector<std::string> universe_;
  std::map<std::string, Subset> unary_;
  std::map<std::string, Relation> binary_;
  Relation has_;
};

// Poss ∩ Has^-1[Verb^-1[Obj] ∩ Subj]
Subset possSubjIntersection(const SetModel& model, const std::string& poss, const std::string& subj,
                            const std::string& verb, const std::string& obj);
// Poss ∩ Has^-1[Verb[Subj] ∩ Obj]
Subset possObjIntersection(const SetModel& model, const std::string& poss, const std::string& subj,
                           const std::string& verb, const std::string& obj);

// Ordinary relative clauses as intersections: "Head that Verb Object" is
// Head ∩ Verb^-1[Object], "Head that Subject Verb" is Head ∩ Verb[Subject].
Subset subjRelIntersection(const Subset& head, const Relation& verb, const Subset& obj);
Subset objRelIntersection(const Subset& head, const Relation& verb, const Subset& subj);

// Possessive clauses rewritten as "Poss that has X that ...".
Subset possSubjViaHas(const SetModel& model, const std::string& poss, const std::string& subj,
                      const std::string& verb, const std::string& obj);
Subset possObjViaHas(const SetModel& model, const std::string& poss, const std::string& subj,
                     const std::string& verb, const std::string& obj);

// Embedding of sets and relations into the space spanned by the universe:
// a subset becomes the sum of its basis vectors, a relation the sum of
// e_i (x) e_j over its pairs.
Tensor embed(const Subset& set, const Space& space);
Tensor embed(const Relation& relation, const Space& space);

// Membership through the merge map: t in T iff mu(e_t, T) = e_t.
bool containsViaMu(const Tensor& set, std::size_t element);
// Intersection through the merge map.
Tensor intersectViaMu(const Tensor& a, const Tensor& b);

}  // namespace discocat

#endif  // DISCOCAT_PREDICATE_HPP_
