#ifndef DISCOCAT_EVALUATION_HPP_
#define DISCOCAT_EVALUATION_HPP_

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "discocat/composers.hpp"
#include "discocat/store.hpp"
#include "discocat/tensor.hpp"

namespace discocat {

// One term/description pair; unused roles hold "-".
struct DatasetRow {
  std::string term;
  ClausePattern pattern = ClausePattern::SubjRel;
  std::string poss = "-";
  std::string sbj = "-";
  std::string verb = "-";
  std::string obj = "-";
  std::string pronoun;  // defaults to "that" or "whose"

  std::string description() const;
  std::vector<std::string> contentWords() const;
  const std::string& headNoun() const;
};

// TSV: term pattern poss sbj verb obj [pronoun]
std::vector<DatasetRow> readDataset(std::istream& in);
std::vector<DatasetRow> loadDataset(const std::string& path);

enum class Model { FrobId, FrobLearned, MultWithPron, MultWithoutPron, Add, HeadNoun };
Model parseModel(std::string_view text);
std::string_view to_string(Model model);
const std::vector<Model>& allModels();

enum class Split { All, Poss, NonPoss };
Split parseSplit(std::string_view text);
std::string_view to_string(Split split);

// Splits "game that boy like" into roles; a verb is recognised by the store.
DatasetRow parseDescription(const std::string& text, const VectorStore& store);

// Description vector of a row under a model. Throws LookupError for
// unresolvable lemmas.
Tensor describe(const DatasetRow& row, const VectorStore& store, Model model);

struct RankedItem {
  std::string label;
  std::size_t index = 0;
  double cosine = 0.0;
};

struct QueryResult {
  std::string query;
  std::size_t index = 0;
  std::vector<RankedItem> ranking;
  std::size_t rank = 0;  // 1-based rank of the query's own counterpart
};

struct DirectionMetrics {
  double mrr = 0.0;
  double accuracy = 0.0;  // P@1
};

struct EvalReport {
  std::string model;
  std::string split;
  std::vector<std::string> terms;
  std::vector<std::string> descriptions;
  std::vector<QueryResult> termQueries;         // term -> descriptions
  std::vector<QueryResult> descriptionQueries;  // description -> terms
  DirectionMetrics termToDescription;
  DirectionMetrics descriptionToTerm;
  std::vector<std::string> warnings;
};

// Ranks candidates by cosine, ties broken by the term label of the candidate
// pair and then by position. terms[i] pairs with descriptions[i].
EvalReport rankPairs(const std::vector<std::pair<std::string, Tensor>>& terms,
                     const std::vector<std::pair<std::string, Tensor>>& descriptions);

EvalReport runEvaluation(const std::vector<DatasetRow>& dataset, const VectorStore& store, Model model,
                         Split split = Split::All);

void writeReportTsv(std::ostream& out, const EvalReport& report);
void writeReportTable(std::ostream& out, const EvalReport& report);

}  // namespace discocat

#endif  // DISCOCAT_EVALUATION_HPP_
