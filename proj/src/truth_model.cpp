#include "discocat/truth_model.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "discocat/errors.hpp"

namespace discocat {

RelationalModel::RelationalModel(std::vector<std::string> universe) {
  for (auto& name : universe) {
    if (!index_.emplace(name, universe_.size()).second) {
      throw ParseError("individual '" + name + "' declared twice");
    }
    universe_.push_back(std::move(name));
  }
  if (!universe_.empty()) noun_ = Space("N", universe_.size());
}

std::size_t RelationalModel::indexOf(const std::string& individual) const {
  const auto it = index_.find(individual);
  if (it == index_.end()) throw LookupError("unknown individual '" + individual + "'");
  return it->second;
}

std::size_t RelationalModel::resolve(const std::string& token) const {
  if (const auto it = index_.find(token); it != index_.end()) return it->second;
  std::size_t index = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), index);
  if (ec == std::errc() && ptr == token.data() + token.size() && index < universe_.size()) return index;
  throw LookupError("unknown individual '" + token + "'");
}

void RelationalModel::checkPair(const WeightedPair& pair) const {
  if (pair.left >= size() || pair.right >= size()) throw LookupError("relation index outside the universe");
  if (!(pair.weight >= 0.0 && pair.weight <= 1.0)) throw ParseError("relation weights must lie in [0, 1]");
}

void RelationalModel::addNoun(const std::string& name, std::vector<std::size_t> members) {
  for (std::size_t m : members) {
    if (m >= size()) throw LookupError("noun '" + name + "' has a member outside the universe");
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  nouns_[name] = std::move(members);
}

void RelationalModel::addVerb(const std::string& name, std::vector<WeightedPair> pairs) {
  for (const auto& p : pairs) checkPair(p);
  verbs_[name] = std::move(pairs);
}

void RelationalModel::addOwnership(WeightedPair pair) {
  checkPair(pair);
  ownership_.push_back(pair);
}

const std::vector<std::size_t>& RelationalModel::noun(const std::string& name) const {
  const auto it = nouns_.find(name);
  if (it == nouns_.end()) throw LookupError("undeclared noun '" + name + "'");
  return it->second;
}

const std::vector<WeightedPair>& RelationalModel::verb(const std::string& name) const {
  const auto it = verbs_.find(name);
  if (it == verbs_.end()) throw LookupError("undeclared verb '" + name + "'");
  return it->second;
}

namespace {

// A decimal or a fraction such as 1/6.
double parseWeight(const std::string& text) {
  auto number = [&](const std::string& part) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (part.empty() || used != part.size()) throw ParseError("bad weight '" + text + "'");
    return value;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return number(text);
  const double den = number(text.substr(slash + 1));
  if (den == 0.0) throw ParseError("bad weight '" + text + "'");
  return number(text.substr(0, slash)) / den;
}

}  // namespace

RelationalModel RelationalModel::parse(std::istream& in) {
  enum class Section { None, Universe, Noun, Verb, Ownership };
  std::vector<std::string> universe;
  struct Pending {
    Section section;
    std::string name;
    std::vector<std::vector<std::string>> rows;
  };
  std::vector<Pending> sections;

  std::string line;
  std::size_t lineNo = 0;
  Section current = Section::None;
  while (std::getline(in, line)) {
    ++lineNo;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first)) continue;

    std::vector<std::string> rest;
    if (first.front() == '[') {
      std::string header = first;
      while (header.back() != ']') {
        std::string more;
        if (!(tokens >> more)) throw ParseError("model line " + std::to_string(lineNo) + ": unterminated header");
        header += " " + more;
      }
      std::istringstream words(header.substr(1, header.size() - 2));
      std::string kind, name;
      words >> kind >> name;
      if (kind == "universe") {
        current = Section::Universe;
      } else if (kind == "noun" || kind == "verb") {
        if (name.empty()) throw ParseError("model line " + std::to_string(lineNo) + ": section needs a name");
        current = kind == "noun" ? Section::Noun : Section::Verb;
        sections.push_back({current, name, {}});
      } else if (kind == "ownership") {
        current = Section::Ownership;
        sections.push_back({current, "", {}});
      } else {
        throw ParseError("model line " + std::to_string(lineNo) + ": unknown section '" + kind + "'");
      }
      for (std::string tok; tokens >> tok;) rest.push_back(tok);
      if (rest.empty()) continue;
    } else {
      rest.push_back(first);
      for (std::string tok; tokens >> tok;) rest.push_back(tok);
    }

    switch (current) {
      case Section::None:
        throw ParseError("model line " + std::to_string(lineNo) + ": content before any section");
      case Section::Universe:
        universe.insert(universe.end(), rest.begin(), rest.end());
        break;
      case Section::Noun:
        sections.back().rows.push_back(rest);
        break;
      case Section::Verb:
      case Section::Ownership:
        if (rest.size() != 2 && rest.size() != 3) {
          throw ParseError("model line " + std::to_string(lineNo) + ": expected `left right [weight]`");
        }
        sections.back().rows.push_back(rest);
        break;
    }
  }

  RelationalModel model(std::move(universe));
  for (const auto& section : sections) {
    if (section.section == Section::Noun) {
      std::vector<std::size_t> members;
      for (const auto& row : section.rows) {
        for (const auto& tok : row) members.push_back(model.resolve(tok));
      }
      model.addNoun(section.name, std::move(members));
      continue;
    }
    std::vector<WeightedPair> pairs;
    for (const auto& row : section.rows) {
      WeightedPair pair{model.resolve(row[0]), model.resolve(row[1]), 1.0};
      if (row.size() == 3) pair.weight = parseWeight(row[2]);
      pairs.push_back(pair);
    }
    if (section.section == Section::Verb) {
      model.addVerb(section.name, std::move(pairs));
    } else {
      for (const auto& p : pairs) model.addOwnership(p);
    }
  }
  return model;
}

RelationalModel RelationalModel::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LookupError("cannot open model '" + path + "'");
  return parse(in);
}

Tensor nounVector(const RelationalModel& model, const std::string& name) {
  std::vector<double> data(model.size(), 0.0);
  for (std::size_t m : model.noun(name)) data[m] += 1.0;
  return Tensor::vector(model.nounSpace(), std::move(data));
}

namespace {

Tensor pairMatrix(const RelationalModel& model, const std::vector<WeightedPair>& pairs) {
  const std::size_t n = model.size();
  std::vector<double> data(n * n, 0.0);
  for (const auto& p : pairs) data[p.left * n + p.right] += p.weight;
  return Tensor::matrix(model.nounSpace(), model.nounSpace(), std::move(data));
}

// Accumulates weight(h, k) * alpha into e_h for possessors h owning some
// member k of `possessed`, where alpha(k) comes from `relationWeight`.
template <typename Weight>
Tensor sumOverOwners(const RelationalModel& model, const std::string& possessor, const std::string& possessed,
                     Weight relationWeight) {
  std::vector<bool> isPossessor(model.size(), false);
  for (std::size_t h : model.noun(possessor)) isPossessor[h] = true;
  std::vector<bool> isPossessed(model.size(), false);
  for (std::size_t k : model.noun(possessed)) isPossessed[k] = true;

  std::vector<double> out(model.size(), 0.0);
  for (const auto& owns : model.ownership()) {
    if (!isPossessor[owns.left] || !isPossessed[owns.right]) continue;
    out[owns.left] += owns.weight * relationWeight(owns.right);
  }
  return Tensor::vector(model.nounSpace(), std::move(out));
}

}  // namespace

Tensor verbMatrix(const RelationalModel& model, const std::string& name) {
  return pairMatrix(model, model.verb(name));
}

Tensor verbCube(const RelationalModel& model, const std::string& name) {
  const Tensor m = verbMatrix(model, name);
  return Tensor({model.nounSpace(), model.sentenceSpace(), model.nounSpace()},
                std::vector<double>(m.data().begin(), m.data().end()));
}

OwnershipMap ownershipMap(const RelationalModel& model) {
  return OwnershipMap::learned(pairMatrix(model, model.ownership()));
}

Tensor evalPossSubjTruth(const RelationalModel& model, const std::string& possessor, const std::string& subject,
                         const std::string& verb, const std::string& object) {
  const auto& pairs = model.verb(verb);
  std::vector<bool> isObject(model.size(), false);
  for (std::size_t l : model.noun(object)) isObject[l] = true;
  return sumOverOwners(model, possessor, subject, [&](std::size_t k) {
    double alpha = 0.0;
    for (const auto& p : pairs) {
      if (p.left == k && isObject[p.right]) alpha += p.weight;
    }
    return alpha;
  });
}

Tensor evalPossObjTruth(const RelationalModel& model, const std::string& possessor, const std::string& subject,
                        const std::string& verb, const std::string& object) {
  const auto& pairs = model.verb(verb);
  std::vector<bool> isSubject(model.size(), false);
  for (std::size_t l : model.noun(subject)) isSubject[l] = true;
  return sumOverOwners(model, possessor, object, [&](std::size_t k) {
    double alpha = 0.0;
    for (const auto& p : pairs) {
      if (p.right == k && isSubject[p.left]) alpha += p.weight;
    }
    return alpha;
  });
}

Tensor truthValues(const Tensor& weights) {
  std::vector<double> out(weights.data().begin(), weights.data().end());
  for (double& x : out) x = x > 0.0 ? 1.0 : 0.0;
  return Tensor(weights.legs(), std::move(out));
}

}  // namespace discocat
