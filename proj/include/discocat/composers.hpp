#ifndef DISCOCAT_COMPOSERS_HPP_
#define DISCOCAT_COMPOSERS_HPP_

#include <optional>
#include <string_view>

#include "discocat/functor.hpp"
#include "discocat/tensor.hpp"

namespace discocat {

enum class ClausePattern { SubjRel, ObjRel, PossSubj, PossObj };

ClausePattern parseClausePattern(std::string_view text);
std::string_view to_string(ClausePattern pattern);
bool isPossessive(ClausePattern pattern);

// Sums out the sentence leg of an N (x) S (x) N verb; matrices and
// intransitive vectors pass through unchanged.
Tensor collapseSentence(const Tensor& verb);

// Closed forms of the yanked clause diagrams. `verb` is a matrix or a cube.
//   subject relative:   head (.) (V x obj)
//   object relative:    head (.) (sbj^T x V)
//   possessive subject: poss (.) 's(sbj (.) (V x obj))
//   possessive object:  poss (.) 's(obj (.) (sbj^T x V))
Tensor composeSubjRel(const Tensor& head, const Tensor& obj, const Tensor& verb);
Tensor composeObjRel(const Tensor& head, const Tensor& sbj, const Tensor& verb);
Tensor composePossSubj(const Tensor& poss, const Tensor& sbj, const Tensor& obj, const Tensor& verb,
                       const OwnershipMap& ownership);
Tensor composePossObj(const Tensor& poss, const Tensor& sbj, const Tensor& obj, const Tensor& verb,
                      const OwnershipMap& ownership);

// Role fillers of one relative clause. The head of a subject relative clause
// is `sbj`, of an object relative clause `obj`, and `poss` for the two
// possessive patterns. A clause without an object uses an intransitive verb
// vector.
struct ClauseSpec {
  ClausePattern pattern = ClausePattern::SubjRel;
  std::optional<Tensor> poss;
  std::optional<Tensor> sbj;
  std::optional<Tensor> obj;
  Tensor verb;

  const Tensor& head() const;
};

Tensor compose(const ClauseSpec& clause, const OwnershipMap& ownership);

// The same clause assembled as a full diagram (word tensors, unyanked pronoun
// network, cups from the pregroup reduction) and contracted.
Phrase clausePhrase(const ClauseSpec& clause, const OwnershipMap& ownership, const TypeInterpretation& interp);
Tensor composeViaNetwork(const ClauseSpec& clause, const OwnershipMap& ownership,
                         const TypeInterpretation& interp, const ContractOptions& options = {});

struct DecompositionCheck {
  Tensor lhs;  // "Possessor that has X that ..." contracted as a diagram
  Tensor rhs;  // possessive normal form with 's = has with S discarded
  double maxAbsDiff = 0.0;
};

// Compares the possessive clause with its rewriting through two ordinary
// relative pronouns and a `has` predicate (N (x) S (x) N or N (x) N).
DecompositionCheck verifyDecomposition(const ClauseSpec& clause, const Tensor& has,
                                       const TypeInterpretation& interp);

// Evaluates the possessive clause with `whose` and the possessed noun first
// composed into a single unit of relative-pronoun type.
Tensor composeLambekWhose(const ClauseSpec& clause, const OwnershipMap& ownership,
                          const TypeInterpretation& interp);

}  // namespace discocat

#endif  // DISCOCAT_COMPOSERS_HPP_
