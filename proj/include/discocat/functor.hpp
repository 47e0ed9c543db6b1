#ifndef DISCOCAT_FUNCTOR_HPP_
#define DISCOCAT_FUNCTOR_HPP_

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "discocat/lexicon.hpp"
#include "discocat/network.hpp"
#include "discocat/pregroup.hpp"
#include "discocat/tensor.hpp"

namespace discocat {

// Sends each basic type to a space; adjoints go to the same space.
class TypeInterpretation {
 public:
  TypeInterpretation(Space noun, Space sentence);
  explicit TypeInterpretation(std::map<std::string, Space> spaces);

  const Space& space(const std::string& base) const;
  const Space& noun() const { return space("n"); }
  const Space& sentence() const { return space("s"); }

  // Unit maps to the empty shape (a scalar).
  std::vector<Space> interpretType(const PregroupType& type) const;

 private:
  std::map<std::string, Space> spaces_;
};

// A diagram fragment whose outputs line up one-to-one with the atoms of its
// pregroup type.
struct Phrase {
  ContractionNetwork network;
  PregroupType type;
};

// Throws ShapeError when the tensor legs differ from the interpreted type.
Phrase wordPhrase(const Tensor& meaning, const PregroupType& type, const TypeInterpretation& interp);

// Juxtaposes the parts, reduces the combined type to `target` (greedy, then
// search) and wires every cup as an edge. Throws Error when no reduction
// reaches the target.
Phrase reducePhrase(const std::vector<Phrase>& parts, const PregroupType& target);

Tensor evaluate(const Phrase& phrase, const ContractOptions& options = {});

// The 's box: a linear map N -> N sending a possessed noun to its owners.
// Stored as a matrix indexed (owner, possessed).
struct OwnershipMap {
  enum class Mode { Identity, Learned };

  Tensor matrix;
  Mode mode = Mode::Identity;

  static OwnershipMap identity(const Space& noun);
  static OwnershipMap learned(Tensor matrix);

  Tensor apply(const Tensor& possessed) const;
};

// Relative pronoun meanings as unmaterialized Frobenius diagrams, wired from
// caps, a merge, a copy and a unit on S. Possessive pronouns carry the 's box
// on the possessed-noun wire. Throws Error for non-pronoun tags.
Phrase buildPronounNetwork(SemanticTag tag, const OwnershipMap& ownership, const TypeInterpretation& interp);

// Contracts the pronoun diagram into its full tensor. Refuses (BudgetError)
// when any space has more than four dimensions.
Tensor materializePronoun(SemanticTag tag, const OwnershipMap& ownership, const TypeInterpretation& interp);

// Verb tensors are N (x) N matrices, N (x) S (x) N cubes, or plain N vectors
// for intransitive verbs. Lifting places a matrix verb's sentence leg on the
// first basis vector of S, so discarding S recovers the matrix.
Tensor liftToSentence(const Tensor& verb, const Space& sentence);

using MeaningLookup = std::function<Tensor(const std::string& word)>;

// Builds the phrase for a word list: pronoun entries become diagrams, other
// entries take their tensor from `lookup` (matrix verbs and has-predicates are
// lifted to carry the sentence leg). Requires the string to reduce to
// `target`.
Phrase sentencePhrase(const std::vector<std::string>& words, const Lexicon& lexicon,
                      const MeaningLookup& lookup, const OwnershipMap& ownership,
                      const TypeInterpretation& interp, const PregroupType& target);

}  // namespace discocat

#endif  // DISCOCAT_FUNCTOR_HPP_
