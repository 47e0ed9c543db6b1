#include "discocat/functor.hpp"

#include "discocat/errors.hpp"
#include "discocat/linalg.hpp"

namespace discocat {

TypeInterpretation::TypeInterpretation(Space noun, Space sentence)
    : spaces_{{"n", std::move(noun)}, {"s", std::move(sentence)}} {}

TypeInterpretation::TypeInterpretation(std::map<std::string, Space> spaces) : spaces_(std::move(spaces)) {}

const Space& TypeInterpretation::space(const std::string& base) const {
  const auto it = spaces_.find(base);
  if (it == spaces_.end()) throw LookupError("no space assigned to basic type '" + base + "'");
  return it->second;
}

std::vector<Space> TypeInterpretation::interpretType(const PregroupType& type) const {
  std::vector<Space> shape;
  shape.reserve(type.size());
  for (const auto& atom : type.atoms()) shape.push_back(space(atom.base));
  return shape;
}

Phrase wordPhrase(const Tensor& meaning, const PregroupType& type, const TypeInterpretation& interp) {
  if (meaning.legs() != interp.interpretType(type)) {
    throw ShapeError("tensor legs do not match the interpretation of '" + to_string(type) + "'");
  }
  Phrase phrase;
  phrase.network.addTensor(meaning);
  phrase.type = type;
  return phrase;
}

Phrase reducePhrase(const std::vector<Phrase>& parts, const PregroupType& target) {
  Phrase out;
  std::vector<Port> ports;
  for (const auto& part : parts) {
    out.type = out.type * part.type;
    const auto mapped = out.network.absorb(part.network);
    if (mapped.size() != part.type.size()) throw ShapeError("phrase outputs do not match its type");
    ports.insert(ports.end(), mapped.begin(), mapped.end());
  }

  ReductionPlan plan = reduceGreedy(out.type);
  if (!(residualType(out.type, plan) == target)) {
    auto searched = searchReduction(out.type, target);
    if (!searched) {
      throw Error("'" + to_string(out.type) + "' does not reduce to '" + to_string(target) + "'");
    }
    plan = std::move(*searched);
  }
  for (const auto& [i, j] : plan.links) out.network.connect(ports[i], ports[j]);
  std::vector<Port> outputs;
  for (std::size_t r : plan.residual) outputs.push_back(ports[r]);
  out.network.setOutputs(std::move(outputs));
  out.type = target;
  return out;
}

Tensor evaluate(const Phrase& phrase, const ContractOptions& options) {
  return contractNetwork(phrase.network, options);
}

OwnershipMap OwnershipMap::identity(const Space& noun) { return {Tensor::identity(noun), Mode::Identity}; }

OwnershipMap OwnershipMap::learned(Tensor matrix) {
  if (matrix.rank() != 2 || matrix.leg(0) != matrix.leg(1)) {
    throw ShapeError("ownership map must be a square matrix on N");
  }
  return {std::move(matrix), Mode::Learned};
}

Tensor OwnershipMap::apply(const Tensor& possessed) const { return matVec(matrix, possessed); }

namespace {

PregroupType pronounType(SemanticTag tag) {
  switch (tag) {
    case SemanticTag::RelSubj:
      return parseType("n^r n s^l n");
    case SemanticTag::RelObj:
      return parseType("n^r n n^ll s^l");
    case SemanticTag::RelPossSubj:
      return parseType("n^r n s^l n n^l");
    case SemanticTag::RelPossObj:
      return parseType("n^r n n^ll s^l n^l");
    default:
      throw Error("'" + std::string(to_string(tag)) + "' is not a relative pronoun tag");
  }
}

// Two caps whose inner legs merge: the head wire enters on the left, the
// merged wire is the output and the right cap leg is handed to the verb.
Phrase relativePronoun(SemanticTag tag, const TypeInterpretation& interp) {
  const Space& n = interp.noun();
  Phrase phrase;
  phrase.type = pronounType(tag);
  auto& net = phrase.network;
  const auto capHead = net.addSpider(Spider(n, 0, 2));
  const auto capArg = net.addSpider(Spider(n, 0, 2));
  const auto merge = net.addSpider(Spider(n, 2, 1));
  const auto unit = net.addSpider(Spider(interp.sentence(), 0, 1));
  net.connect({capHead, 1}, {merge, 0});
  net.connect({capArg, 0}, {merge, 1});
  if (tag == SemanticTag::RelSubj) {
    net.setOutputs({{capHead, 0}, {merge, 2}, {unit, 0}, {capArg, 1}});
  } else {
    net.setOutputs({{capHead, 0}, {merge, 2}, {capArg, 1}, {unit, 0}});
  }
  return phrase;
}

// Three caps; the 's box sits on the left leg of the middle cap, a cup joins
// the middle and right caps, and the right cap's other leg is copied to the
// verb and to the possessed noun.
Phrase possessivePronoun(SemanticTag tag, const OwnershipMap& ownership, const TypeInterpretation& interp) {
  const Space& n = interp.noun();
  if (ownership.matrix.rank() != 2 || ownership.matrix.leg(0) != n || ownership.matrix.leg(1) != n) {
    throw ShapeError("ownership map must be a matrix on the noun space");
  }
  Phrase phrase;
  phrase.type = pronounType(tag);
  auto& net = phrase.network;
  const auto cap1 = net.addSpider(Spider(n, 0, 2));
  const auto cap2 = net.addSpider(Spider(n, 0, 2));
  const auto cap3 = net.addSpider(Spider(n, 0, 2));
  const auto owns = net.addTensor(ownership.matrix);
  const auto merge = net.addSpider(Spider(n, 2, 1));
  const auto unit = net.addSpider(Spider(interp.sentence(), 0, 1));
  const auto cup = net.addSpider(Spider(n, 2, 0));
  const auto copy = net.addSpider(Spider(n, 1, 2));
  net.connect({cap2, 0}, {owns, 1});
  net.connect({cap1, 1}, {merge, 0});
  net.connect({owns, 0}, {merge, 1});
  net.connect({cap2, 1}, {cup, 0});
  net.connect({cap3, 0}, {cup, 1});
  net.connect({cap3, 1}, {copy, 0});
  if (tag == SemanticTag::RelPossSubj) {
    net.setOutputs({{cap1, 0}, {merge, 2}, {unit, 0}, {copy, 1}, {copy, 2}});
  } else {
    net.setOutputs({{cap1, 0}, {merge, 2}, {copy, 1}, {unit, 0}, {copy, 2}});
  }
  return phrase;
}

}  // namespace

Phrase buildPronounNetwork(SemanticTag tag, const OwnershipMap& ownership, const TypeInterpretation& interp) {
  switch (tag) {
    case SemanticTag::RelSubj:
    case SemanticTag::RelObj:
      return relativePronoun(tag, interp);
    case SemanticTag::RelPossSubj:
    case SemanticTag::RelPossObj:
      return possessivePronoun(tag, ownership, interp);
    default:
      throw Error("'" + std::string(to_string(tag)) + "' is not a relative pronoun tag");
  }
}

Tensor materializePronoun(SemanticTag tag, const OwnershipMap& ownership, const TypeInterpretation& interp) {
  if (interp.noun().dim > 4 || interp.sentence().dim > 4) {
    throw BudgetError("pronoun tensors are only materialized for spaces of dimension <= 4");
  }
  return evaluate(buildPronounNetwork(tag, ownership, interp));
}

Tensor liftToSentence(const Tensor& verb, const Space& sentence) {
  if (verb.rank() == 2) {
    const std::size_t rows = verb.leg(0).dim;
    const std::size_t cols = verb.leg(1).dim;
    std::vector<double> data(rows * sentence.dim * cols, 0.0);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t k = 0; k < cols; ++k) data[(i * sentence.dim) * cols + k] = verb[i * cols + k];
    }
    return Tensor({verb.leg(0), sentence, verb.leg(1)}, std::move(data));
  }
  if (verb.rank() == 1) {
    std::vector<double> data(verb.size() * sentence.dim, 0.0);
    for (std::size_t i = 0; i < verb.size(); ++i) data[i * sentence.dim] = verb[i];
    return Tensor({verb.leg(0), sentence}, std::move(data));
  }
  return verb;
}

Phrase sentencePhrase(const std::vector<std::string>& words, const Lexicon& lexicon,
                      const MeaningLookup& lookup, const OwnershipMap& ownership,
                      const TypeInterpretation& interp, const PregroupType& target) {
  std::vector<Phrase> parts;
  parts.reserve(words.size());
  for (const auto& word : words) {
    const auto& entry = lexicon.at(word);
    if (isPronoun(entry.tag)) {
      Phrase pronoun = buildPronounNetwork(entry.tag, ownership, interp);
      if (!(pronoun.type == entry.type)) {
        throw ShapeError("pronoun '" + word + "' must have type '" + to_string(pronoun.type) + "'");
      }
      parts.push_back(std::move(pronoun));
      continue;
    }
    Tensor meaning = lookup(word);
    const auto expected = interp.interpretType(entry.type);
    if (meaning.legs() != expected && meaning.rank() + 1 == expected.size()) {
      meaning = liftToSentence(meaning, interp.sentence());
    }
    parts.push_back(wordPhrase(meaning, entry.type, interp));
  }
  return reducePhrase(parts, target);
}

}  // namespace discocat
