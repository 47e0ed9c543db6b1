#include "discocat/composers.hpp"

#include <array>

#include "discocat/errors.hpp"
#include "discocat/linalg.hpp"

namespace discocat {

namespace {

constexpr std::array<std::pair<ClausePattern, std::string_view>, 4> kPatternNames{{
    {ClausePattern::SubjRel, "SUBJ_REL"},
    {ClausePattern::ObjRel, "OBJ_REL"},
    {ClausePattern::PossSubj, "POSS_SUBJ"},
    {ClausePattern::PossObj, "POSS_OBJ"},
}};

const PregroupType& nounType() {
  static const PregroupType type = parseType("n");
  return type;
}

Tensor verbMatrix(const Tensor& verb) {
  Tensor m = collapseSentence(verb);
  if (m.rank() != 2) throw ShapeError("expected a transitive verb (matrix or cube)");
  return m;
}

const Tensor& require(const std::optional<Tensor>& filler, const char* role) {
  if (!filler) throw ShapeError(std::string("clause is missing its ") + role);
  return *filler;
}

PregroupType verbType(const Tensor& verb) {
  return parseType(verb.rank() == 1 ? "n^r s" : "n^r s n^l");
}

Phrase verbPhrase(const Tensor& verb, const TypeInterpretation& interp) {
  const Tensor lifted = verb.rank() == 3 ? verb : liftToSentence(verb, interp.sentence());
  return wordPhrase(lifted, verbType(verb), interp);
}

Phrase nounPhrase(const Tensor& v, const TypeInterpretation& interp) {
  return wordPhrase(v, nounType(), interp);
}

}  // namespace

ClausePattern parseClausePattern(std::string_view text) {
  for (const auto& [pattern, name] : kPatternNames) {
    if (name == text) return pattern;
  }
  throw ParseError("unknown clause pattern '" + std::string(text) + "'");
}

std::string_view to_string(ClausePattern pattern) {
  for (const auto& [p, name] : kPatternNames) {
    if (p == pattern) return name;
  }
  return "?";
}

bool isPossessive(ClausePattern pattern) {
  return pattern == ClausePattern::PossSubj || pattern == ClausePattern::PossObj;
}

Tensor collapseSentence(const Tensor& verb) {
  if (verb.rank() != 3) return verb;
  const std::size_t rows = verb.leg(0).dim;
  const std::size_t mid = verb.leg(1).dim;
  const std::size_t cols = verb.leg(2).dim;
  std::vector<double> data(rows * cols, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t s = 0; s < mid; ++s) {
      for (std::size_t k = 0; k < cols; ++k) data[i * cols + k] += verb[(i * mid + s) * cols + k];
    }
  }
  return Tensor::matrix(verb.leg(0), verb.leg(2), std::move(data));
}

Tensor composeSubjRel(const Tensor& head, const Tensor& obj, const Tensor& verb) {
  return hadamard(head, matVec(verbMatrix(verb), obj));
}

Tensor composeObjRel(const Tensor& head, const Tensor& sbj, const Tensor& verb) {
  return hadamard(head, vecMat(sbj, verbMatrix(verb)));
}

Tensor composePossSubj(const Tensor& poss, const Tensor& sbj, const Tensor& obj, const Tensor& verb,
                       const OwnershipMap& ownership) {
  return hadamard(poss, ownership.apply(hadamard(sbj, matVec(verbMatrix(verb), obj))));
}

Tensor composePossObj(const Tensor& poss, const Tensor& sbj, const Tensor& obj, const Tensor& verb,
                      const OwnershipMap& ownership) {
  return hadamard(poss, ownership.apply(hadamard(obj, vecMat(sbj, verbMatrix(verb)))));
}

const Tensor& ClauseSpec::head() const {
  switch (pattern) {
    case ClausePattern::SubjRel:
      return require(sbj, "subject");
    case ClausePattern::ObjRel:
      return require(obj, "object");
    default:
      return require(poss, "possessor");
  }
}

Tensor compose(const ClauseSpec& clause, const OwnershipMap& ownership) {
  const bool intransitive = clause.verb.rank() == 1;
  switch (clause.pattern) {
    case ClausePattern::SubjRel:
      if (intransitive) return hadamard(clause.head(), clause.verb);
      return composeSubjRel(clause.head(), require(clause.obj, "object"), clause.verb);
    case ClausePattern::ObjRel:
      return composeObjRel(clause.head(), require(clause.sbj, "subject"), clause.verb);
    case ClausePattern::PossSubj:
      if (intransitive) {
        return hadamard(clause.head(), ownership.apply(hadamard(require(clause.sbj, "subject"), clause.verb)));
      }
      return composePossSubj(clause.head(), require(clause.sbj, "subject"), require(clause.obj, "object"),
                             clause.verb, ownership);
    case ClausePattern::PossObj:
      return composePossObj(clause.head(), require(clause.sbj, "subject"), require(clause.obj, "object"),
                            clause.verb, ownership);
  }
  throw Error("unhandled clause pattern");
}

Phrase clausePhrase(const ClauseSpec& clause, const OwnershipMap& ownership, const TypeInterpretation& interp) {
  const bool intransitive = clause.verb.rank() == 1;
  std::vector<Phrase> parts;
  parts.push_back(nounPhrase(clause.head(), interp));
  switch (clause.pattern) {
    case ClausePattern::SubjRel:
      parts.push_back(buildPronounNetwork(SemanticTag::RelSubj, ownership, interp));
      parts.push_back(verbPhrase(clause.verb, interp));
      if (!intransitive) parts.push_back(nounPhrase(require(clause.obj, "object"), interp));
      break;
    case ClausePattern::ObjRel:
      parts.push_back(buildPronounNetwork(SemanticTag::RelObj, ownership, interp));
      parts.push_back(nounPhrase(require(clause.sbj, "subject"), interp));
      parts.push_back(verbPhrase(clause.verb, interp));
      break;
    case ClausePattern::PossSubj:
      parts.push_back(buildPronounNetwork(SemanticTag::RelPossSubj, ownership, interp));
      parts.push_back(nounPhrase(require(clause.sbj, "subject"), interp));
      parts.push_back(verbPhrase(clause.verb, interp));
      if (!intransitive) parts.push_back(nounPhrase(require(clause.obj, "object"), interp));
      break;
    case ClausePattern::PossObj:
      parts.push_back(buildPronounNetwork(SemanticTag::RelPossObj, ownership, interp));
      parts.push_back(nounPhrase(require(clause.obj, "object"), interp));
      parts.push_back(nounPhrase(require(clause.sbj, "subject"), interp));
      parts.push_back(verbPhrase(clause.verb, interp));
      break;
  }
  return reducePhrase(parts, nounType());
}

Tensor composeViaNetwork(const ClauseSpec& clause, const OwnershipMap& ownership,
                         const TypeInterpretation& interp, const ContractOptions& options) {
  return evaluate(clausePhrase(clause, ownership, interp), options);
}

DecompositionCheck verifyDecomposition(const ClauseSpec& clause, const Tensor& has,
                                       const TypeInterpretation& interp) {
  if (!isPossessive(clause.pattern)) throw Error("decomposition applies to possessive clauses only");
  if (has.rank() != 2 && has.rank() != 3) throw ShapeError("has must be N (x) N or N (x) S (x) N");
  const OwnershipMap owns = OwnershipMap::learned(collapseSentence(has));
  const OwnershipMap unused = OwnershipMap::identity(interp.noun());

  // "X that Verb Object" or "X that Subject Verb", reduced to a noun.
  ClauseSpec inner = clause;
  if (clause.pattern == ClausePattern::PossSubj) {
    inner.pattern = ClausePattern::SubjRel;
  } else {
    inner.pattern = ClausePattern::ObjRel;
  }
  inner.poss.reset();
  const Phrase possessed = clausePhrase(inner, unused, interp);

  std::vector<Phrase> outer;
  outer.push_back(nounPhrase(require(clause.poss, "possessor"), interp));
  outer.push_back(buildPronounNetwork(SemanticTag::RelSubj, unused, interp));
  outer.push_back(verbPhrase(has, interp));
  outer.push_back(possessed);

  DecompositionCheck check;
  check.lhs = evaluate(reducePhrase(outer, nounType()));
  check.rhs = compose(clause, owns);
  check.maxAbsDiff = maxAbsDiff(check.lhs, check.rhs);
  return check;
}

Tensor composeLambekWhose(const ClauseSpec& clause, const OwnershipMap& ownership,
                          const TypeInterpretation& interp) {
  if (!isPossessive(clause.pattern)) throw Error("composite whose applies to possessive clauses only");
  const bool subjectCase = clause.pattern == ClausePattern::PossSubj;
  const auto tag = subjectCase ? SemanticTag::RelPossSubj : SemanticTag::RelPossObj;
  const Tensor& possessed = subjectCase ? require(clause.sbj, "subject") : require(clause.obj, "object");

  // `whose Subject` behaves as a subject `that`, `whose Object` as an object `that`.
  const Phrase unit = reducePhrase({buildPronounNetwork(tag, ownership, interp), nounPhrase(possessed, interp)},
                                   parseType(subjectCase ? "n^r n s^l n" : "n^r n n^ll s^l"));

  std::vector<Phrase> parts;
  parts.push_back(nounPhrase(clause.head(), interp));
  parts.push_back(unit);
  if (subjectCase) {
    parts.push_back(verbPhrase(clause.verb, interp));
    if (clause.verb.rank() != 1) parts.push_back(nounPhrase(require(clause.obj, "object"), interp));
  } else {
    parts.push_back(nounPhrase(require(clause.sbj, "subject"), interp));
    parts.push_back(verbPhrase(clause.verb, interp));
  }
  return evaluate(reducePhrase(parts, nounType()));
}

}  // namespace discocat
