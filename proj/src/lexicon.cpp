#include "discocat/lexicon.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include "discocat/errors.hpp"

namespace discocat {

namespace {

constexpr std::array<std::pair<SemanticTag, std::string_view>, 8> kTagNames{{
    {SemanticTag::Vector, "vector"},
    {SemanticTag::MatrixVerb, "matrix-verb"},
    {SemanticTag::CubeVerb, "cube-verb"},
    {SemanticTag::RelSubj, "rel-subj"},
    {SemanticTag::RelObj, "rel-obj"},
    {SemanticTag::RelPossSubj, "rel-poss-subj"},
    {SemanticTag::RelPossObj, "rel-poss-obj"},
    {SemanticTag::HasPredicate, "has-predicate"},
}};

std::vector<std::string> splitTabs(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, '\t')) fields.push_back(field);
  return fields;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

SemanticTag parseSemanticTag(std::string_view text) {
  for (const auto& [tag, name] : kTagNames) {
    if (name == text) return tag;
  }
  throw ParseError("unknown semantic tag '" + std::string(text) + "'");
}

std::string_view to_string(SemanticTag tag) {
  for (const auto& [t, name] : kTagNames) {
    if (t == tag) return name;
  }
  return "?";
}

bool isPronoun(SemanticTag tag) {
  return tag == SemanticTag::RelSubj || tag == SemanticTag::RelObj ||
         tag == SemanticTag::RelPossSubj || tag == SemanticTag::RelPossObj;
}

Lexicon Lexicon::parse(std::istream& in, Alphabet alphabet) {
  Lexicon lexicon(std::move(alphabet));
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (trim(line).empty() || trim(line).front() == '#') continue;
    const auto fields = splitTabs(line);
    if (fields.size() != 3) {
      throw ParseError("lexicon line " + std::to_string(lineNo) + ": expected 3 tab-separated fields");
    }
    const std::string word = trim(fields[0]);
    if (word.empty()) throw ParseError("lexicon line " + std::to_string(lineNo) + ": empty word");
    try {
      lexicon.add(word, {parseType(fields[1], lexicon.alphabet_), parseSemanticTag(trim(fields[2]))});
    } catch (const ParseError& e) {
      throw ParseError("lexicon line " + std::to_string(lineNo) + ": " + e.what());
    }
  }
  return lexicon;
}

Lexicon Lexicon::load(const std::string& path, Alphabet alphabet) {
  std::ifstream in(path);
  if (!in) throw LookupError("cannot open lexicon '" + path + "'");
  return parse(in, std::move(alphabet));
}

void Lexicon::add(const std::string& word, LexiconEntry entry) { entries_[word] = std::move(entry); }

const LexiconEntry& Lexicon::at(const std::string& word) const {
  const auto it = entries_.find(word);
  if (it == entries_.end()) throw LookupError("word '" + word + "' missing from lexicon");
  return it->second;
}

GrammarCheck checkGrammatical(const std::vector<std::string>& words, const Lexicon& lexicon,
                              const PregroupType& target) {
  GrammarCheck check;
  for (const auto& word : words) check.sentenceType = check.sentenceType * lexicon.at(word).type;

  check.plan = reduceGreedy(check.sentenceType);
  if (residualType(check.sentenceType, check.plan) == target) {
    check.grammatical = true;
    return check;
  }
  if (auto plan = searchReduction(check.sentenceType, target)) {
    check.plan = std::move(*plan);
    check.grammatical = true;
  }
  return check;
}

}  // namespace discocat
