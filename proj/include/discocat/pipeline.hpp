#ifndef DISCOCAT_PIPELINE_HPP_
#define DISCOCAT_PIPELINE_HPP_

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "discocat/functor.hpp"
#include "discocat/store.hpp"
#include "discocat/tensor.hpp"

namespace discocat {

using Sentence = std::vector<std::string>;

// Word x basis co-occurrence counts. Rows exist for every word seen in the
// corpus, including words that never met a basis word.
class CooccurrenceStats {
 public:
  explicit CooccurrenceStats(std::vector<std::string> basis);

  const std::vector<std::string>& basis() const { return basis_; }
  Space space() const { return Space("N", basis_.size()); }
  bool contains(const std::string& word) const { return rows_.count(word) > 0; }
  std::vector<std::string> vocabulary() const;

  std::uint64_t count(const std::string& word, const std::string& basisWord) const;
  std::uint64_t wordTotal(const std::string& word) const;
  std::uint64_t basisTotal(const std::string& basisWord) const;
  std::uint64_t grandTotal() const { return grand_; }

  void touch(const std::string& word);
  void add(const std::string& word, std::size_t basisIndex, std::uint64_t n = 1);
  // Exact integer addition; both sides must share the basis.
  void merge(const CooccurrenceStats& other);

 private:
  std::size_t basisIndex(const std::string& basisWord) const;

  std::vector<std::string> basis_;
  std::map<std::string, std::size_t> basisIndex_;
  std::map<std::string, std::vector<std::uint64_t>> rows_;
  std::vector<std::uint64_t> basisTotals_;
  std::uint64_t grand_ = 0;
};

struct CountOptions {
  std::size_t window = 5;
  bool crossSentences = false;
};

// The basisSize most frequent lemmas, ties broken lexicographically.
std::vector<std::string> selectBasis(const std::vector<Sentence>& corpus, std::size_t basisSize);

// Symmetric +-window counting against a fixed basis.
CooccurrenceStats countCooccurrences(const std::vector<Sentence>& corpus, const std::vector<std::string>& basis,
                                     const CountOptions& options = {});

CooccurrenceStats buildCooccurrence(const std::vector<Sentence>& corpus, std::size_t basisSize,
                                    const CountOptions& options = {});

// Coordinate b is grand * count(w, b) / (total(w) * total(b)), with 0/0 read as 0.
Tensor contextVector(const CooccurrenceStats& stats, const std::string& word);

// Counts file: a `basis` row, then one row of integer counts per word.
void writeCounts(std::ostream& out, const CooccurrenceStats& stats);
CooccurrenceStats readCounts(std::istream& in);
void saveCounts(const std::string& path, const CooccurrenceStats& stats);
CooccurrenceStats loadCounts(const std::string& path);

struct SvoTriple {
  std::string subject;
  std::string verb;
  std::string object;  // "-" for an intransitive use
  std::uint64_t count = 1;

  bool intransitive() const { return object == "-"; }
};

struct PossPair {
  std::string owner;
  std::string possessed;
  std::uint64_t count = 1;
};

std::vector<Sentence> readCorpus(std::istream& in);
std::vector<SvoTriple> readTriples(std::istream& in);
std::vector<PossPair> readPairs(std::istream& in);
std::vector<Sentence> loadCorpus(const std::string& path);
std::vector<SvoTriple> loadTriples(const std::string& path);
std::vector<PossPair> loadPairs(const std::string& path);

// Sum over the verb's transitive triples of count * (v_sbj (x) v_obj).
Tensor buildVerbMatrix(const std::vector<SvoTriple>& triples, const std::string& verb, const TensorTable& vectors);
// Sum over the verb's intransitive triples of count * v_sbj.
Tensor buildIntransitiveVerb(const std::vector<SvoTriple>& triples, const std::string& verb,
                             const TensorTable& vectors);

// Fills verbs and intransitive verbs of the store from every triple.
void buildVerbs(const std::vector<SvoTriple>& triples, VectorStore& store);

// Learned: sum over pairs of count * (v_owner (x) normalized(v_possessed)).
OwnershipMap buildOwnershipMap(const std::vector<PossPair>& pairs, const TensorTable& vectors,
                               OwnershipMap::Mode mode);

}  // namespace discocat

#endif  // DISCOCAT_PIPELINE_HPP_
