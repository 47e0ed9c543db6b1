#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "discocat/errors.hpp"
#include "discocat/evaluation.hpp"
#include "discocat/linalg.hpp"
#include "support/oracles.hpp"

using namespace discocat;

namespace {

const std::string kData = DISCOCAT_DATA_DIR;

// Random positive vectors for every lemma, matrices for transitive uses and
// vectors for intransitive ones.
VectorStore store_for(const std::vector<DatasetRow>& rows, std::mt19937_64& rng, std::size_t dim = 6) {
  const Space n("N", dim);
  VectorStore store(n);
  auto put = [&](const std::string& w) {
    if (w != "-" && !store.vectors().contains(w)) store.vectors().put(w, oracle::randomVector(rng, n, 0.0, 1.0));
  };
  for (const auto& r : rows) {
    for (const auto* w : {&r.term, &r.poss, &r.sbj, &r.verb, &r.obj, &r.pronoun}) put(*w);
    if (r.obj == "-") {
      store.intransitiveVerbs().put(r.verb, oracle::randomVector(rng, n, 0.0, 1.0));
    } else {
      store.verbs().put(r.verb, oracle::randomTensor(rng, {n, n}, 0.0, 1.0));
    }
  }
  for (const char* p : {"that", "whose"}) put(p);
  store.setOwnership(oracle::randomTensor(rng, {n, n}, 0.0, 1.0));
  return store;
}

std::pair<std::string, Tensor> item(const std::string& label, const Tensor& t) { return {label, t}; }

}  // namespace

TEST_CASE("dataset file") {
  const auto rows = loadDataset(kData + "/terms.tsv");
  REQUIRE(rows.size() == 16);
  CHECK(rows[7].term == "football");
  CHECK(rows[7].description() == "game that boy like");
  CHECK(rows[9].description() == "woman whose husband die");
  CHECK(rows[13].description() == "clergy whose sermon people follow");
  CHECK(rows[0].description() == "person who rule empire");
  CHECK(rows[7].headNoun() == "game");
  CHECK(rows[13].headNoun() == "clergy");
  CHECK(rows[9].contentWords() == std::vector<std::string>{"woman", "husband", "die"});

  std::istringstream missing("widow\tPOSS_SUBJ\t-\thusband\tdie\t-\n");
  CHECK_THROWS_AS(readDataset(missing), ParseError);
  std::istringstream fields("widow\tPOSS_SUBJ\twoman\n");
  CHECK_THROWS_AS(readDataset(fields), ParseError);
  std::istringstream pattern("widow\tWHOSE\twoman\thusband\tdie\t-\n");
  CHECK_THROWS_AS(readDataset(pattern), ParseError);
  std::istringstream defaults("football\tOBJ_REL\t-\tboy\tlike\tgame\n");
  CHECK(readDataset(defaults)[0].description() == "game that boy like");
}

TEST_CASE("model and split names") {
  for (auto m : allModels()) CHECK(parseModel(to_string(m)) == m);
  CHECK_THROWS_AS(parseModel("frob"), ParseError);
  for (auto s : {Split::All, Split::Poss, Split::NonPoss}) CHECK(parseSplit(to_string(s)) == s);
  CHECK_THROWS_AS(parseSplit("some"), ParseError);
}

TEST_CASE("descriptions are split by verb position") {
  std::mt19937_64 rng(1);
  const auto rows = loadDataset(kData + "/terms.tsv");
  const auto store = store_for(rows, rng);
  for (const auto& r : rows) {
    const auto parsed = parseDescription(r.description(), store);
    CHECK(parsed.pattern == r.pattern);
    CHECK(parsed.poss == r.poss);
    CHECK(parsed.sbj == r.sbj);
    CHECK(parsed.verb == r.verb);
    CHECK(parsed.obj == r.obj);
  }
  CHECK_THROWS_AS(parseDescription("game boy like", store), ParseError);
  CHECK_THROWS_AS(parseDescription("game that", store), ParseError);
  CHECK_THROWS_AS(parseDescription("game that boy like now", store), ParseError);
}

TEST_CASE("perfect alignment") {
  std::mt19937_64 rng(2);
  const auto rows = loadDataset(kData + "/terms.tsv");
  for (auto model : allModels()) {
    // rows sharing a head noun get the same head-noun description
    if (model == Model::HeadNoun) continue;
    auto store = store_for(rows, rng);
    for (const auto& r : rows) store.vectors().put(r.term, describe(r, store, model));
    const auto report = runEvaluation(rows, store, model);
    INFO(to_string(model));
    CHECK(report.termToDescription.mrr == 1.0);
    CHECK(report.termToDescription.accuracy == 1.0);
    CHECK(report.descriptionToTerm.mrr == 1.0);
    CHECK(report.descriptionToTerm.accuracy == 1.0);
    CHECK(report.warnings.empty());
  }
}

TEST_CASE("shared heads tie under head-noun") {
  std::mt19937_64 rng(8);
  const auto rows = loadDataset(kData + "/terms.tsv");
  const auto store = store_for(rows, rng);
  std::map<std::string, int> heads;
  for (const auto& r : rows) ++heads[r.headNoun()];
  CHECK(std::any_of(heads.begin(), heads.end(), [](const auto& h) { return h.second > 1; }));
  const auto report = runEvaluation(rows, store, Model::HeadNoun);
  CHECK(report.termToDescription.accuracy < 1.0);
}

TEST_CASE("one swapped pair among four") {
  const Space n("N", 4);
  std::vector<std::pair<std::string, Tensor>> terms, descs;
  for (std::size_t i = 0; i < 4; ++i) terms.push_back(item("t" + std::to_string(i), Tensor::basis(n, i)));
  // d0 sits on t1 and d1 on t0, with a small pull towards the right term
  descs.push_back(item("d0", add(Tensor::basis(n, 1), scale(Tensor::basis(n, 0), 0.5))));
  descs.push_back(item("d1", add(Tensor::basis(n, 0), scale(Tensor::basis(n, 1), 0.5))));
  descs.push_back(item("d2", Tensor::basis(n, 2)));
  descs.push_back(item("d3", Tensor::basis(n, 3)));
  const auto report = rankPairs(terms, descs);
  CHECK(report.termToDescription.accuracy == 0.5);
  CHECK(report.termToDescription.mrr == 0.75);
  CHECK(report.descriptionToTerm.accuracy == 0.5);
  CHECK(report.descriptionToTerm.mrr == 0.75);
  CHECK(report.termQueries[0].rank == 2);
  CHECK(report.termQueries[0].ranking[0].label == "d1");
}

TEST_CASE("ties follow term order") {
  const Space n("N", 2);
  const Tensor v = Tensor::vector(n, {1, 1});
  const auto report = rankPairs({item("zebra", v), item("apple", v), item("mango", v)},
                                {item("dz", v), item("da", v), item("dm", v)});
  // every cosine is 1; candidates line up as apple, mango, zebra pairs
  for (const auto& q : report.termQueries) {
    REQUIRE(q.ranking.size() == 3);
    CHECK(q.ranking[0].label == "da");
    CHECK(q.ranking[1].label == "dm");
    CHECK(q.ranking[2].label == "dz");
  }
  CHECK(report.termQueries[0].rank == 3);
  CHECK(report.termQueries[1].rank == 1);
  CHECK(report.descriptionQueries[2].ranking[0].label == "apple");
  CHECK_THROWS_AS(rankPairs({item("a", v)}, {}), ShapeError);
}

TEST_CASE("ranks are permutations and MRR bounds accuracy") {
  std::mt19937_64 rng(3);
  const auto rows = loadDataset(kData + "/terms.tsv");
  for (int trial = 0; trial < 10; ++trial) {
    const auto store = store_for(rows, rng, 3 + trial % 4);
    for (auto model : allModels())
      for (auto split : {Split::All, Split::Poss, Split::NonPoss}) {
        const auto report = runEvaluation(rows, store, model, split);
        for (const auto& m : {report.termToDescription, report.descriptionToTerm}) {
          CHECK(m.mrr >= m.accuracy);
          CHECK(m.mrr <= 1.0);
          CHECK(m.accuracy >= 0.0);
        }
        for (const auto& q : report.termQueries) {
          std::vector<bool> seen(q.ranking.size(), false);
          for (const auto& r : q.ranking) seen[r.index] = true;
          CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
          for (std::size_t i = 1; i < q.ranking.size(); ++i) CHECK(q.ranking[i - 1].cosine >= q.ranking[i].cosine);
        }
        const std::size_t expect = split == Split::All ? 16 : split == Split::Poss ? 7 : 9;
        CHECK(report.terms.size() == expect);
      }
  }
}

TEST_CASE("all-ones pronoun makes the mult baselines coincide") {
  std::mt19937_64 rng(4);
  const auto rows = loadDataset(kData + "/terms.tsv");
  auto store = store_for(rows, rng);
  for (const char* p : {"that", "who", "which", "whose"}) store.vectors().put(p, ones(store.space()));
  for (const auto& r : rows)
    CHECK(maxAbsDiff(describe(r, store, Model::MultWithPron), describe(r, store, Model::MultWithoutPron)) == 0.0);
  std::ostringstream with, without;
  writeReportTsv(with, runEvaluation(rows, store, Model::MultWithPron));
  writeReportTsv(without, runEvaluation(rows, store, Model::MultWithoutPron));
  auto body = [](const std::string& s) { return s.substr(s.find("\n\n")); };
  CHECK(body(with.str()) == body(without.str()));
}

TEST_CASE("baseline definitions") {
  std::mt19937_64 rng(5);
  const auto rows = loadDataset(kData + "/terms.tsv");
  const auto store = store_for(rows, rng);
  const auto& r = rows[12];  // artist whose joke entertain people
  const auto& v = store.vectors();
  CHECK(maxAbsDiff(describe(r, store, Model::Add),
                   add(add(add(v.at("artist"), v.at("joke")), v.at("entertain")), v.at("people"))) <= 1e-15);
  CHECK(maxAbsDiff(describe(r, store, Model::MultWithPron),
                   hadamard(hadamard(hadamard(hadamard(v.at("artist"), v.at("joke")), v.at("entertain")),
                                     v.at("people")),
                            v.at("whose"))) <= 1e-15);
  CHECK(maxAbsDiff(describe(r, store, Model::HeadNoun), v.at("artist")) == 0.0);
  const auto owns = OwnershipMap::learned(*store.ownership());
  CHECK(maxAbsDiff(describe(r, store, Model::FrobLearned),
                   composePossSubj(v.at("artist"), v.at("joke"), v.at("people"), store.verbs().at("entertain"),
                                   owns)) == 0.0);
  CHECK(maxAbsDiff(describe(r, store, Model::FrobId),
                   composePossSubj(v.at("artist"), v.at("joke"), v.at("people"), store.verbs().at("entertain"),
                                   OwnershipMap::identity(store.space()))) == 0.0);
}

TEST_CASE("unresolvable rows are skipped with a warning") {
  std::mt19937_64 rng(6);
  auto rows = loadDataset(kData + "/terms.tsv");
  const auto store = store_for(rows, rng);
  rows[3].obj = "unobtainium";
  const auto report = runEvaluation(rows, store, Model::FrobId);
  CHECK(report.terms.size() == 15);
  REQUIRE(report.warnings.size() == 1);
  CHECK(report.warnings[0].find("plug") != std::string::npos);

  VectorStore bare(store.space());
  for (const auto& [w, t] : store.vectors().entries()) bare.vectors().put(w, t);
  CHECK_THROWS_AS(runEvaluation(rows, bare, Model::FrobLearned), LookupError);
}

TEST_CASE("reports are deterministic and carry the schema") {
  std::mt19937_64 a(7), b(7);
  const auto rows = loadDataset(kData + "/terms.tsv");
  const auto s1 = store_for(rows, a), s2 = store_for(rows, b);
  std::ostringstream t1, t2, h1, h2;
  writeReportTsv(t1, runEvaluation(rows, s1, Model::FrobId));
  writeReportTsv(t2, runEvaluation(rows, s2, Model::FrobId));
  writeReportTable(h1, runEvaluation(rows, s1, Model::FrobId));
  writeReportTable(h2, runEvaluation(rows, s2, Model::FrobId));
  CHECK(t1.str() == t2.str());
  CHECK(h1.str() == h2.str());
  CHECK(t1.str().rfind("model\tsplit\tdirection\titems\tMRR\tP@1\n", 0) == 0);
  CHECK(t1.str().find("direction\tquery\trank\tcandidate\tcosine\tcorrect\n") != std::string::npos);
  CHECK(h1.str().find("football") != std::string::npos);
  CHECK(h1.str().find("term->description  MRR") != std::string::npos);
  // 2 summary lines + 2 headers + blank + 16 * 16 * 2 ranking rows
  const std::string tsv = t1.str();
  CHECK(std::count(tsv.begin(), tsv.end(), '\n') == 5 + 16 * 16 * 2);
}
