#include "discocat/evaluation.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "discocat/errors.hpp"
#include "discocat/linalg.hpp"

namespace discocat {

namespace {

constexpr std::array<std::pair<Model, std::string_view>, 6> kModelNames{{
    {Model::FrobId, "frob-id"},
    {Model::FrobLearned, "frob-learned"},
    {Model::MultWithPron, "mult-with-pron"},
    {Model::MultWithoutPron, "mult-without-pron"},
    {Model::Add, "add"},
    {Model::HeadNoun, "head-noun"},
}};

bool used(const std::string& role) { return role != "-"; }

const std::string& defaultPronoun(ClausePattern pattern) {
  static const std::string that = "that", whose = "whose";
  return isPossessive(pattern) ? whose : that;
}

const Tensor& lookupVector(const VectorStore& store, const std::string& lemma) {
  if (!store.vectors().contains(lemma)) throw LookupError("no vector for '" + lemma + "'");
  return store.vectors().at(lemma);
}

std::optional<Tensor> optionalNoun(const VectorStore& store, const std::string& lemma) {
  if (!used(lemma)) return std::nullopt;
  return lookupVector(store, lemma);
}

Tensor verbTensor(const VectorStore& store, const DatasetRow& row) {
  if (used(row.obj) || row.pattern == ClausePattern::ObjRel || row.pattern == ClausePattern::PossObj) {
    if (!store.verbs().contains(row.verb)) throw LookupError("no verb matrix for '" + row.verb + "'");
    return store.verbs().at(row.verb);
  }
  if (!store.intransitiveVerbs().contains(row.verb)) {
    throw LookupError("no intransitive verb vector for '" + row.verb + "'");
  }
  return store.intransitiveVerbs().at(row.verb);
}

void checkRoles(const DatasetRow& row) {
  auto need = [&](const std::string& role, const char* name) {
    if (!used(role)) throw ParseError("row '" + row.term + "' is missing its " + name);
  };
  need(row.verb, "verb");
  need(row.sbj, "subject");
  switch (row.pattern) {
    case ClausePattern::SubjRel:
      break;
    case ClausePattern::ObjRel:
      need(row.obj, "object");
      break;
    case ClausePattern::PossSubj:
      need(row.poss, "possessor");
      break;
    case ClausePattern::PossObj:
      need(row.poss, "possessor");
      need(row.obj, "object");
      break;
  }
}

QueryResult rankOne(const std::string& query, std::size_t index, const Tensor& vector,
                    const std::vector<std::pair<std::string, Tensor>>& candidates,
                    const std::vector<std::pair<std::string, Tensor>>& terms) {
  QueryResult result{query, index, {}, 0};
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    result.ranking.push_back({candidates[j].first, j, cosine(vector, candidates[j].second)});
  }
  std::sort(result.ranking.begin(), result.ranking.end(), [&](const RankedItem& a, const RankedItem& b) {
    if (a.cosine != b.cosine) return a.cosine > b.cosine;
    if (terms[a.index].first != terms[b.index].first) return terms[a.index].first < terms[b.index].first;
    return a.index < b.index;
  });
  for (std::size_t r = 0; r < result.ranking.size(); ++r) {
    if (result.ranking[r].index == index) result.rank = r + 1;
  }
  return result;
}

DirectionMetrics metrics(const std::vector<QueryResult>& queries) {
  DirectionMetrics m;
  if (queries.empty()) return m;
  for (const auto& q : queries) {
    m.mrr += 1.0 / static_cast<double>(q.rank);
    if (q.rank == 1) m.accuracy += 1.0;
  }
  m.mrr /= static_cast<double>(queries.size());
  m.accuracy /= static_cast<double>(queries.size());
  return m;
}

std::vector<std::string> tabFields(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, '\t');) fields.push_back(f);
  return fields;
}

}  // namespace

std::string DatasetRow::description() const {
  const std::string& pron = pronoun.empty() ? defaultPronoun(pattern) : pronoun;
  std::vector<std::string> words;
  switch (pattern) {
    case ClausePattern::SubjRel:
      words = {sbj, pron, verb, obj};
      break;
    case ClausePattern::ObjRel:
      words = {obj, pron, sbj, verb};
      break;
    case ClausePattern::PossSubj:
      words = {poss, pron, sbj, verb, obj};
      break;
    case ClausePattern::PossObj:
      words = {poss, pron, obj, sbj, verb};
      break;
  }
  std::string text;
  for (const auto& w : words) {
    if (!used(w)) continue;
    if (!text.empty()) text += ' ';
    text += w;
  }
  return text;
}

std::vector<std::string> DatasetRow::contentWords() const {
  std::vector<std::string> words;
  for (const auto* w : {&poss, &sbj, &verb, &obj}) {
    if (used(*w)) words.push_back(*w);
  }
  return words;
}

const std::string& DatasetRow::headNoun() const {
  switch (pattern) {
    case ClausePattern::SubjRel:
      return sbj;
    case ClausePattern::ObjRel:
      return obj;
    default:
      return poss;
  }
}

std::vector<DatasetRow> readDataset(std::istream& in) {
  std::vector<DatasetRow> rows;
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto f = tabFields(line);
    if (f.size() != 6 && f.size() != 7) {
      throw ParseError("dataset line " + std::to_string(lineNo) + ": expected 6 or 7 tab-separated fields");
    }
    DatasetRow row;
    row.term = f[0];
    row.pattern = parseClausePattern(f[1]);
    row.poss = f[2];
    row.sbj = f[3];
    row.verb = f[4];
    row.obj = f[5];
    if (f.size() == 7 && used(f[6])) row.pronoun = f[6];
    checkRoles(row);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<DatasetRow> loadDataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LookupError("cannot open dataset '" + path + "'");
  return readDataset(in);
}

Model parseModel(std::string_view text) {
  for (const auto& [m, name] : kModelNames) {
    if (name == text) return m;
  }
  throw ParseError("unknown model '" + std::string(text) + "'");
}

std::string_view to_string(Model model) {
  for (const auto& [m, name] : kModelNames) {
    if (m == model) return name;
  }
  return "?";
}

const std::vector<Model>& allModels() {
  static const std::vector<Model> models{Model::FrobId,          Model::FrobLearned, Model::MultWithPron,
                                         Model::MultWithoutPron, Model::Add,         Model::HeadNoun};
  return models;
}

Split parseSplit(std::string_view text) {
  if (text == "all") return Split::All;
  if (text == "poss") return Split::Poss;
  if (text == "nonposs") return Split::NonPoss;
  throw ParseError("unknown split '" + std::string(text) + "'");
}

std::string_view to_string(Split split) {
  switch (split) {
    case Split::All:
      return "all";
    case Split::Poss:
      return "poss";
    case Split::NonPoss:
      return "nonposs";
  }
  return "?";
}

DatasetRow parseDescription(const std::string& text, const VectorStore& store) {
  std::istringstream in(text);
  std::vector<std::string> w;
  for (std::string tok; in >> tok;) w.push_back(tok);
  if (w.size() < 3) throw ParseError("description '" + text + "' is too short");

  static const std::vector<std::string> relatives{"that", "who", "whom", "which"};
  DatasetRow row;
  row.term = text;
  row.pronoun = w[1];
  auto at = [&](std::size_t i) { return i < w.size() ? w[i] : std::string("-"); };
  if (w[1] == "whose") {
    if (w.size() < 4) throw ParseError("possessive description '" + text + "' is too short");
    row.poss = w[0];
    if (store.isVerb(w[3])) {
      row.pattern = ClausePattern::PossSubj;
      row.sbj = w[2];
      row.verb = w[3];
      row.obj = at(4);
      if (w.size() > 5) throw ParseError("trailing words in '" + text + "'");
    } else {
      row.pattern = ClausePattern::PossObj;
      row.obj = w[2];
      row.sbj = w[3];
      row.verb = at(4);
      if (w.size() != 5) throw ParseError("expected `poss whose obj sbj verb` in '" + text + "'");
    }
  } else if (std::find(relatives.begin(), relatives.end(), w[1]) != relatives.end()) {
    if (store.isVerb(w[2])) {
      row.pattern = ClausePattern::SubjRel;
      row.sbj = w[0];
      row.verb = w[2];
      row.obj = at(3);
      if (w.size() > 4) throw ParseError("trailing words in '" + text + "'");
    } else {
      row.pattern = ClausePattern::ObjRel;
      row.obj = w[0];
      row.sbj = w[2];
      row.verb = at(3);
      if (w.size() != 4) throw ParseError("expected `obj that sbj verb` in '" + text + "'");
    }
  } else {
    throw ParseError("second word of '" + text + "' is not a relative pronoun");
  }
  checkRoles(row);
  return row;
}

Tensor describe(const DatasetRow& row, const VectorStore& store, Model model) {
  switch (model) {
    case Model::FrobId:
    case Model::FrobLearned: {
      OwnershipMap ownership = OwnershipMap::identity(store.space());
      if (model == Model::FrobLearned) {
        if (!store.ownership()) throw LookupError("store has no learned ownership map");
        ownership = OwnershipMap::learned(*store.ownership());
      }
      ClauseSpec clause;
      clause.pattern = row.pattern;
      clause.poss = optionalNoun(store, row.poss);
      clause.sbj = optionalNoun(store, row.sbj);
      clause.obj = optionalNoun(store, row.obj);
      clause.verb = verbTensor(store, row);
      return compose(clause, ownership);
    }
    case Model::MultWithPron:
    case Model::MultWithoutPron: {
      Tensor acc = ones(store.space());
      for (const auto& w : row.contentWords()) acc = hadamard(acc, lookupVector(store, w));
      if (model == Model::MultWithPron) {
        acc = hadamard(acc, lookupVector(store, row.pronoun.empty() ? defaultPronoun(row.pattern) : row.pronoun));
      }
      return acc;
    }
    case Model::Add: {
      Tensor acc = Tensor::zeros({store.space()});
      for (const auto& w : row.contentWords()) acc = add(acc, lookupVector(store, w));
      return acc;
    }
    case Model::HeadNoun:
      return lookupVector(store, row.headNoun());
  }
  throw Error("unhandled model");
}

EvalReport rankPairs(const std::vector<std::pair<std::string, Tensor>>& terms,
                     const std::vector<std::pair<std::string, Tensor>>& descriptions) {
  if (terms.size() != descriptions.size()) throw ShapeError("terms and descriptions must pair up");
  EvalReport report;
  for (const auto& t : terms) report.terms.push_back(t.first);
  for (const auto& d : descriptions) report.descriptions.push_back(d.first);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    report.termQueries.push_back(rankOne(terms[i].first, i, terms[i].second, descriptions, terms));
    report.descriptionQueries.push_back(rankOne(descriptions[i].first, i, descriptions[i].second, terms, terms));
  }
  report.termToDescription = metrics(report.termQueries);
  report.descriptionToTerm = metrics(report.descriptionQueries);
  return report;
}

EvalReport runEvaluation(const std::vector<DatasetRow>& dataset, const VectorStore& store, Model model,
                         Split split) {
  if (model == Model::FrobLearned && !store.ownership()) {
    throw LookupError("frob-learned needs an ownership map in the store");
  }
  std::vector<std::pair<std::string, Tensor>> terms, descriptions;
  std::vector<std::string> warnings;
  for (const auto& row : dataset) {
    const bool poss = isPossessive(row.pattern);
    if ((split == Split::Poss && !poss) || (split == Split::NonPoss && poss)) continue;
    try {
      Tensor term = lookupVector(store, row.term);
      Tensor desc = describe(row, store, model);
      terms.emplace_back(row.term, std::move(term));
      descriptions.emplace_back(row.description(), std::move(desc));
    } catch (const LookupError& e) {
      warnings.push_back("skipped '" + row.term + "': " + e.what());
    }
  }
  EvalReport report = rankPairs(terms, descriptions);
  report.model = std::string(to_string(model));
  report.split = std::string(to_string(split));
  report.warnings = std::move(warnings);
  return report;
}

void writeReportTsv(std::ostream& out, const EvalReport& report) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::fixed << std::setprecision(6);
  out << "model\tsplit\tdirection\titems\tMRR\tP@1\n";
  out << report.model << '\t' << report.split << "\tterm->description\t" << report.termQueries.size() << '\t'
      << report.termToDescription.mrr << '\t' << report.termToDescription.accuracy << '\n';
  out << report.model << '\t' << report.split << "\tdescription->term\t" << report.descriptionQueries.size()
      << '\t' << report.descriptionToTerm.mrr << '\t' << report.descriptionToTerm.accuracy << '\n';
  out << '\n' << "direction\tquery\trank\tcandidate\tcosine\tcorrect\n";
  auto rows = [&](const char* direction, const std::vector<QueryResult>& queries) {
    for (const auto& q : queries) {
      for (std::size_t r = 0; r < q.ranking.size(); ++r) {
        const auto& item = q.ranking[r];
        out << direction << '\t' << q.query << '\t' << r + 1 << '\t' << item.label << '\t' << item.cosine << '\t'
            << (item.index == q.index ? 1 : 0) << '\n';
      }
    }
  };
  rows("term->description", report.termQueries);
  rows("description->term", report.descriptionQueries);
  out.flags(flags);
  out.precision(precision);
}

void writeReportTable(std::ostream& out, const EvalReport& report) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  std::size_t termWidth = 4, descWidth = 11;
  for (const auto& t : report.terms) termWidth = std::max(termWidth, t.size());
  for (const auto& d : report.descriptions) descWidth = std::max(descWidth, d.size());

  out << "model " << report.model << ", split " << report.split << ", " << report.terms.size() << " items\n";
  out << std::left << std::setw(static_cast<int>(termWidth)) << "term" << "  "
      << std::setw(static_cast<int>(descWidth)) << "description" << "  cosine    rank\n";
  out << std::fixed << std::setprecision(4);
  for (const auto& q : report.termQueries) {
    double own = 0.0;
    for (const auto& item : q.ranking) {
      if (item.index == q.index) own = item.cosine;
    }
    out << std::left << std::setw(static_cast<int>(termWidth)) << q.query << "  "
        << std::setw(static_cast<int>(descWidth)) << report.descriptions[q.index] << "  " << std::right
        << std::setw(7) << own << "  " << std::setw(4) << q.rank << '\n';
  }
  out << std::left;
  out << "term->description  MRR " << report.termToDescription.mrr << "  P@1 " << report.termToDescription.accuracy
      << '\n';
  out << "description->term  MRR " << report.descriptionToTerm.mrr << "  P@1 " << report.descriptionToTerm.accuracy
      << '\n';
  for (const auto& w : report.warnings) out << "warning: " << w << '\n';
  out.flags(flags);
  out.precision(precision);
}

}  // namespace discocat
