// Command-line front end: corpus ingestion, store building, clause
// composition, similarity, the term/description evaluation and self-checks.
#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <map>
#include <random>
#include <sstream>

#include "discocat/composers.hpp"
#include "discocat/errors.hpp"
#include "discocat/evaluation.hpp"
#include "discocat/lexicon.hpp"
#include "discocat/linalg.hpp"
#include "discocat/pipeline.hpp"
#include "discocat/predicate.hpp"
#include "discocat/pregroup.hpp"
#include "discocat/truth_model.hpp"

using namespace discocat;

namespace {

void printVector(const Tensor& v) {
  std::cout << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? "\t" : "") << v[i];
  std::cout << '\n';
}

// key=value arguments of `compose`
std::map<std::string, std::string> keyValues(const std::vector<std::string>& args) {
  std::map<std::string, std::string> out;
  for (const auto& a : args) {
    const auto eq = a.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("expected key=value, got '" + a + "'");
    out[a.substr(0, eq)] = a.substr(eq + 1);
  }
  return out;
}

OwnershipMap ownershipFor(const VectorStore& store, const std::string& mode) {
  if (mode == "identity") return OwnershipMap::identity(store.space());
  if (mode == "learned") {
    if (!store.ownership()) throw LookupError("store has no learned ownership map; run `ownership` first");
    return OwnershipMap::learned(*store.ownership());
  }
  throw ParseError("ownership must be identity or learned, got '" + mode + "'");
}

Model descriptionModel(const std::string& ownership) {
  return ownership == "learned" ? Model::FrobLearned : Model::FrobId;
}

// ---- random instances for `check equivalence`

Tensor randomTensor(std::mt19937_64& rng, std::vector<Space> legs, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> data(entryCount(legs));
  for (auto& x : data) x = u(rng);
  return Tensor(std::move(legs), std::move(data));
}

ClauseSpec randomClause(std::mt19937_64& rng, ClausePattern p, const Space& n, const Space& s, bool cube) {
  ClauseSpec c;
  c.pattern = p;
  c.poss = randomTensor(rng, {n}, -1, 1);
  c.sbj = randomTensor(rng, {n}, -1, 1);
  c.obj = randomTensor(rng, {n}, -1, 1);
  c.verb = cube ? randomTensor(rng, {n, s, n}, -1, 1) : randomTensor(rng, {n, n}, -1, 1);
  return c;
}

RelationalModel randomZeroOneModel(std::mt19937_64& rng, std::size_t size) {
  std::vector<std::string> universe;
  for (std::size_t i = 0; i < size; ++i) universe.push_back("u" + std::to_string(i));
  RelationalModel m(universe);
  std::bernoulli_distribution coin(0.5), sparse(0.3);
  for (const char* noun : {"P", "S", "O"}) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < size; ++i)
      if (coin(rng)) members.push_back(i);
    m.addNoun(noun, members);
  }
  std::vector<WeightedPair> verb;
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      if (sparse(rng)) verb.push_back({i, j, 1.0});
      if (sparse(rng)) m.addOwnership({i, j, 1.0});
    }
  m.addVerb("V", verb);
  return m;
}

struct CheckTally {
  int failures = 0;
  void record(const std::string& name, int trials, double worst, double tol) {
    const bool ok = worst <= tol;
    if (!ok) ++failures;
    std::cout << (ok ? "ok  " : "FAIL") << "  " << name << "  trials=" << trials << "  max_diff=" << worst << '\n';
  }
};

int checkEquivalence(std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  CheckTally tally;
  const std::vector<ClausePattern> possessive{ClausePattern::PossSubj, ClausePattern::PossObj};

  double decomposition = 0.0, diagram = 0.0, sets = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Space n("N", 1 + t % 4), s("S", 1 + (t / 4) % 3);
    const TypeInterpretation interp(n, s);
    for (auto p : possessive) {
      const auto clause = randomClause(rng, p, n, s, t % 2 == 0);
      const Tensor has = randomTensor(rng, {n, s, n}, -1, 1);
      decomposition = std::max(decomposition, verifyDecomposition(clause, has, interp).maxAbsDiff);
      const auto owns = OwnershipMap::learned(randomTensor(rng, {n, n}, -1, 1));
      diagram = std::max(diagram, maxAbsDiff(composeViaNetwork(clause, owns, interp), compose(clause, owns)));
    }
    const auto m = randomZeroOneModel(rng, 1 + t % 6);
    const SetModel model(m);
    const Tensor subj = embed(possSubjIntersection(model, "P", "S", "V", "O"), m.nounSpace());
    const Tensor obj = embed(possObjIntersection(model, "P", "S", "V", "O"), m.nounSpace());
    sets = std::max({sets, maxAbsDiff(truthValues(evalPossSubjTruth(m, "P", "S", "V", "O")), subj),
                     maxAbsDiff(truthValues(evalPossObjTruth(m, "P", "S", "V", "O")), obj)});
  }
  tally.record("that-has-that decomposition", trials * 2, decomposition, 1e-10);
  tally.record("normal form vs diagram", trials * 2, diagram, 1e-10);
  tally.record("truth values vs set intersections", trials, sets, 0.0);
  return tally.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compositional distributional semantics for relative clauses"};
  app.require_subcommand(1);

  // ingest
  std::string corpusPath, countsPath;
  std::size_t basisSize = 2000, window = 5;
  bool crossSentences = false;
  auto* ingest = app.add_subcommand("ingest", "Count co-occurrences in a one-sentence-per-line corpus");
  ingest->add_option("--corpus", corpusPath, "Lemmatized corpus")->required();
  ingest->add_option("--out", countsPath, "Counts file to write")->required();
  ingest->add_option("--basis", basisSize, "Number of basis words")->capture_default_str();
  ingest->add_option("--window", window, "Symmetric window size")->capture_default_str();
  ingest->add_flag("--cross-sentences", crossSentences, "Let windows span sentence boundaries");

  // vectors
  std::string storeDir;
  auto* vectors = app.add_subcommand("vectors", "Write context vectors for every counted word");
  vectors->add_option("--counts", countsPath, "Counts file from ingest")->required();
  vectors->add_option("--store", storeDir, "Store directory")->required();

  // verbs
  std::string triplesPath;
  auto* verbs = app.add_subcommand("verbs", "Build verb matrices from subject-verb-object triples");
  verbs->add_option("--triples", triplesPath, "Triples TSV")->required();
  verbs->add_option("--store", storeDir, "Store directory")->required();

  // ownership
  std::string pairsPath;
  auto* ownership = app.add_subcommand("ownership", "Learn the 's map from owner/possessed pairs");
  ownership->add_option("--pairs", pairsPath, "Pairs TSV")->required();
  ownership->add_option("--store", storeDir, "Store directory")->required();

  // compose
  std::vector<std::string> clauseArgs;
  auto* compose = app.add_subcommand("compose", "Compose a clause: pattern=... poss=... sbj=... verb=... obj=...");
  compose->add_option("args", clauseArgs, "key=value pairs; ownership=identity|learned, store=DIR")->required();

  // similarity
  std::string term, description, ownershipMode = "identity";
  auto* similarity = app.add_subcommand("similarity", "Cosine between a term and a described clause");
  similarity->add_option("term", term)->required();
  similarity->add_option("description", description)->required();
  similarity->add_option("--store", storeDir, "Store directory")->required();
  similarity->add_option("--ownership", ownershipMode, "identity or learned")->capture_default_str();

  // evaluate
  std::string modelName, datasetPath, splitName = "all", outPath;
  auto* evaluate = app.add_subcommand("evaluate", "Rank terms against descriptions");
  evaluate->add_option("--model", modelName, "frob-id, frob-learned, mult-with-pron, mult-without-pron, add, head-noun")
      ->required();
  evaluate->add_option("--dataset", datasetPath, "Dataset TSV")->required();
  evaluate->add_option("--store", storeDir, "Store directory")->required();
  evaluate->add_option("--split", splitName, "all, poss or nonposs")->capture_default_str();
  evaluate->add_option("--out", outPath, "Also write the TSV report here");

  // check equivalence
  std::uint64_t seed = 7;
  int trials = 100;
  auto* check = app.add_subcommand("check", "Numerical self-checks");
  auto* equivalence = check->add_subcommand("equivalence", "Possessive decomposition, diagram and set checks");
  equivalence->add_option("--seed", seed)->capture_default_str();
  equivalence->add_option("--trials", trials)->capture_default_str()->check(CLI::PositiveNumber);
  check->require_subcommand(1);

  // grammar
  std::string lexiconPath, targetText = "s";
  std::vector<std::string> words;
  auto* grammar = app.add_subcommand("grammar", "Check a word string against a lexicon");
  grammar->add_option("--lexicon", lexiconPath)->required();
  grammar->add_option("--target", targetText, "Target type")->capture_default_str();
  grammar->add_option("words", words)->required();

  // truth
  std::string modelPath;
  std::vector<std::string> roles;
  bool objectForm = false;
  auto* truth = app.add_subcommand("truth", "Possessive clause in a relational model: POSSESSOR SUBJECT VERB OBJECT");
  truth->add_option("--model", modelPath)->required();
  truth->add_flag("--object", objectForm, "Possessive object reading");
  truth->add_option("roles", roles)->required()->expected(4);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*ingest) {
      const auto corpus = loadCorpus(corpusPath);
      const auto stats = buildCooccurrence(corpus, basisSize, {window, crossSentences});
      saveCounts(countsPath, stats);
      std::cout << "words " << stats.vocabulary().size() << "  basis " << stats.basis().size() << "  pairs "
                << stats.grandTotal() << '\n';
    } else if (*vectors) {
      const auto stats = loadCounts(countsPath);
      VectorStore store(stats.space());
      for (const auto& w : stats.vocabulary()) store.vectors().put(w, contextVector(stats, w));
      store.save(storeDir);
      std::cout << "vectors " << store.vectors().entries().size() << " dim " << store.space().dim << '\n';
    } else if (*verbs) {
      auto store = VectorStore::load(storeDir);
      buildVerbs(loadTriples(triplesPath), store);
      store.save(storeDir);
      std::cout << "transitive " << store.verbs().entries().size() << "  intransitive "
                << store.intransitiveVerbs().entries().size() << '\n';
    } else if (*ownership) {
      auto store = VectorStore::load(storeDir);
      const auto owns = buildOwnershipMap(loadPairs(pairsPath), store.vectors(), OwnershipMap::Mode::Learned);
      store.setOwnership(owns.matrix);
      store.save(storeDir);
      std::cout << "ownership map " << store.space().dim << "x" << store.space().dim << '\n';
    } else if (*compose) {
      auto kv = keyValues(clauseArgs);
      if (!kv.count("store")) throw ParseError("compose needs store=DIR");
      const auto store = VectorStore::load(kv["store"]);
      DatasetRow row;
      row.pattern = parseClausePattern(kv.count("pattern") ? kv["pattern"] : "");
      for (auto [key, field] : {std::pair{"poss", &row.poss}, {"sbj", &row.sbj}, {"verb", &row.verb}, {"obj", &row.obj}})
        if (kv.count(key)) *field = kv[key];
      printVector(describe(row, store, descriptionModel(kv.count("ownership") ? kv["ownership"] : "identity")));
    } else if (*similarity) {
      const auto store = VectorStore::load(storeDir);
      ownershipFor(store, ownershipMode);
      const auto row = parseDescription(description, store);
      const Tensor clause = describe(row, store, descriptionModel(ownershipMode));
      if (!store.vectors().contains(term)) throw LookupError("no vector for '" + term + "'");
      std::cout << std::setprecision(6) << std::fixed << cosine(store.vectors().at(term), clause) << '\n';
    } else if (*evaluate) {
      const auto store = VectorStore::load(storeDir);
      const auto report = runEvaluation(loadDataset(datasetPath), store, parseModel(modelName), parseSplit(splitName));
      for (const auto& w : report.warnings) std::cerr << "warning: " << w << '\n';
      writeReportTable(std::cout, report);
      if (!outPath.empty()) {
        std::ofstream out(outPath);
        if (!out) throw Error("cannot write '" + outPath + "'");
        writeReportTsv(out, report);
      }
    } else if (*equivalence) {
      return checkEquivalence(seed, trials);
    } else if (*grammar) {
      const auto lexicon = Lexicon::load(lexiconPath);
      const auto result = checkGrammatical(words, lexicon, parseType(targetText));
      std::cout << to_string(result.sentenceType) << "  ->  "
                << to_string(residualType(result.sentenceType, result.plan)) << '\n';
      std::cout << (result.grammatical ? "grammatical" : "not grammatical") << '\n';
      return result.grammatical ? 0 : 1;
    } else if (*truth) {
      const auto m = RelationalModel::load(modelPath);
      const Tensor out = objectForm ? evalPossObjTruth(m, roles[0], roles[1], roles[2], roles[3])
                                    : evalPossSubjTruth(m, roles[0], roles[1], roles[2], roles[3]);
      for (std::size_t i = 0; i < out.size(); ++i)
        if (out[i] != 0.0) std::cout << m.universe()[i] << '\t' << out[i] << '\n';
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
