#ifndef DISCOCAT_LEXICON_HPP_
#define DISCOCAT_LEXICON_HPP_

#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "discocat/pregroup.hpp"

namespace discocat {

enum class SemanticTag {
  Vector,
  MatrixVerb,
  CubeVerb,
  RelSubj,
  RelObj,
  RelPossSubj,
  RelPossObj,
  HasPredicate,
};

SemanticTag parseSemanticTag(std::string_view text);
std::string_view to_string(SemanticTag tag);
bool isPronoun(SemanticTag tag);

struct LexiconEntry {
  PregroupType type;
  SemanticTag tag = SemanticTag::Vector;
};

class Lexicon {
 public:
  Lexicon() = default;
  explicit Lexicon(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  // `word <TAB> type-notation <TAB> semantic-tag`; `#` starts a comment line.
  static Lexicon parse(std::istream& in, Alphabet alphabet = Alphabet());
  static Lexicon load(const std::string& path, Alphabet alphabet = Alphabet());

  void add(const std::string& word, LexiconEntry entry);
  bool contains(const std::string& word) const { return entries_.count(word) > 0; }
  const LexiconEntry& at(const std::string& word) const;
  const std::map<std::string, LexiconEntry>& entries() const { return entries_; }
  const Alphabet& alphabet() const { return alphabet_; }

 private:
  Alphabet alphabet_;
  std::map<std::string, LexiconEntry> entries_;
};

struct GrammarCheck {
  bool grammatical = false;
  PregroupType sentenceType;  // the juxtaposed word types
  ReductionPlan plan;
};

// Greedy reduction first, then exhaustive search when the greedy residual
// differs from the target.
GrammarCheck checkGrammatical(const std::vector<std::string>& words, const Lexicon& lexicon,
                              const PregroupType& target);

}  // namespace discocat

#endif  // DISCOCAT_LEXICON_HPP_
