#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <random>
#include <sstream>

#include "discocat/composers.hpp"
#include "discocat/errors.hpp"
#include "discocat/linalg.hpp"
#include "discocat/truth_model.hpp"
#include "support/oracles.hpp"

using namespace discocat;

namespace {

const std::string kData = DISCOCAT_DATA_DIR;

Tensor basis_sum(const RelationalModel& m, std::vector<std::pair<std::string, double>> terms) {
  std::vector<double> v(m.size(), 0.0);
  for (const auto& [name, w] : terms) v[m.indexOf(name)] += w;
  return Tensor::vector(m.nounSpace(), v);
}

}  // namespace

TEST_CASE("noun vectors") {
  const auto m = RelationalModel::load(kData + "/authors.model");
  CHECK(maxAbsDiff(nounVector(m, "authors"), basis_sum(m, {{"a5", 1}, {"a6", 1}, {"a7", 1}})) == 0.0);
  CHECK(maxAbsDiff(nounVector(m, "John"), Tensor::basis(m.nounSpace(), m.indexOf("john"))) == 0.0);
  auto copy = m;
  copy.addNoun("nobody", {});
  CHECK(maxAbsDiff(nounVector(copy, "nobody"), Tensor::zeros({m.nounSpace()})) == 0.0);
  CHECK_THROWS_AS(nounVector(m, "dogs"), LookupError);
}

TEST_CASE("verb matrices") {
  const auto m = RelationalModel::load(kData + "/authors.model");
  const auto w = RelationalModel::load(kData + "/authors_weighted.model");
  const Tensor plain = verbMatrix(m, "entertain");
  const Tensor graded = verbMatrix(w, "entertain");
  const std::size_t n = m.size();
  std::vector<double> expect(n * n, 0.0), expectW(n * n, 0.0);
  const std::vector<std::tuple<const char*, const char*, double>> pairs{
      {"b2", "john", 1.0 / 6}, {"b3", "john", 2.0 / 6}, {"b4", "n2", 2.0 / 6}, {"n5", "n2", 1.0 / 6}};
  for (const auto& [i, j, a] : pairs) {
    expect[m.indexOf(i) * n + m.indexOf(j)] = 1.0;
    expectW[m.indexOf(i) * n + m.indexOf(j)] = a;
  }
  CHECK(maxAbsDiff(plain, Tensor::matrix(m.nounSpace(), m.nounSpace(), expect)) == 0.0);
  CHECK(maxAbsDiff(graded, Tensor::matrix(m.nounSpace(), m.nounSpace(), expectW)) <= 1e-15);
  auto copy = m;
  copy.addVerb("ignore", {});
  CHECK(maxAbsDiff(verbMatrix(copy, "ignore"), Tensor::zeros({m.nounSpace(), m.nounSpace()})) == 0.0);
  CHECK(verbCube(m, "entertain").leg(1).dim == 1);
}

TEST_CASE("authors whose books entertained John") {
  const auto m = RelationalModel::load(kData + "/authors.model");
  const Tensor got = evalPossSubjTruth(m, "authors", "books", "entertain", "John");
  CHECK(maxAbsDiff(got, basis_sum(m, {{"a5", 1}, {"a6", 1}})) == 0.0);

  // the generic composer and the full diagram agree on the same tensors
  const Tensor viaComposer = composePossSubj(nounVector(m, "authors"), nounVector(m, "books"),
                                             nounVector(m, "John"), verbMatrix(m, "entertain"), ownershipMap(m));
  CHECK(maxAbsDiff(viaComposer, got) == 0.0);
  ClauseSpec clause{ClausePattern::PossSubj, nounVector(m, "authors"), nounVector(m, "books"),
                    nounVector(m, "John"), verbCube(m, "entertain")};
  CHECK(maxAbsDiff(composeViaNetwork(clause, ownershipMap(m), m.interpretation()), got) <= 1e-12);
}

TEST_CASE("weighted entertain") {
  const auto m = RelationalModel::load(kData + "/authors_weighted.model");
  const Tensor got = evalPossSubjTruth(m, "authors", "books", "entertain", "John");
  CHECK(maxAbsDiff(got, basis_sum(m, {{"a5", 1.0 / 6}, {"a6", 1.0 / 6}})) <= 1e-12);
}

TEST_CASE("object outside the verb's range") {
  auto m = RelationalModel::load(kData + "/authors.model");
  m.addNoun("stranger", {m.indexOf("a7")});
  CHECK(maxAbsDiff(evalPossSubjTruth(m, "authors", "books", "entertain", "stranger"),
                   Tensor::zeros({m.nounSpace()})) == 0.0);
}

TEST_CASE("possessive object instances") {
  // John read b3 and b4; a8 owns b4, n2 owns b3
  auto m = RelationalModel::load(kData + "/authors.model");
  m.addVerb("read", {{m.indexOf("john"), m.indexOf("b3"), 1.0}, {m.indexOf("john"), m.indexOf("b4"), 0.5}});
  m.addNoun("people", {m.indexOf("n2"), m.indexOf("a8"), m.indexOf("a5")});
  CHECK(maxAbsDiff(evalPossObjTruth(m, "people", "John", "read", "books"),
                   basis_sum(m, {{"n2", 1.0}, {"a8", 0.5}})) == 0.0);
  CHECK(maxAbsDiff(evalPossObjTruth(m, "authors", "John", "read", "books"), Tensor::zeros({m.nounSpace()})) == 0.0);

  std::mt19937_64 rng(90);
  for (int trial = 0; trial < 3; ++trial) {
    const auto r = oracle::randomModel(rng, 4 + trial, trial == 0);
    CHECK(maxAbsDiff(evalPossObjTruth(r, "P", "S", "V", "O"), oracle::possObjBySum(r)) <= 1e-12);
  }
}

TEST_CASE("closed forms equal the composers on random models") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = oracle::randomModel(rng, 1 + trial % 8, trial % 2 == 0);
    const Tensor P = nounVector(m, "P"), S = nounVector(m, "S"), O = nounVector(m, "O"), V = verbMatrix(m, "V");
    const auto owns = ownershipMap(m);
    const Tensor subj = evalPossSubjTruth(m, "P", "S", "V", "O");
    const Tensor obj = evalPossObjTruth(m, "P", "S", "V", "O");
    CHECK(maxAbsDiff(subj, composePossSubj(P, S, O, V, owns)) <= 1e-12);
    CHECK(maxAbsDiff(obj, composePossObj(P, S, O, V, owns)) <= 1e-12);
    CHECK(maxAbsDiff(subj, oracle::possSubjBySum(m)) <= 1e-12);
    CHECK(maxAbsDiff(obj, oracle::possObjBySum(m)) <= 1e-12);
  }
}

TEST_CASE("monotone in every weight") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = oracle::randomModel(rng, 5, false);
    const Tensor before = evalPossSubjTruth(m, "P", "S", "V", "O");
    const Tensor beforeObj = evalPossObjTruth(m, "P", "S", "V", "O");
    auto pairs = m.verb("V");
    if (pairs.empty()) continue;
    auto& p = pairs[rng() % pairs.size()];
    p.weight = std::min(1.0, p.weight + 0.3);
    auto bumped = m;
    bumped.addVerb("V", pairs);
    const Tensor after = evalPossSubjTruth(bumped, "P", "S", "V", "O");
    const Tensor afterObj = evalPossObjTruth(bumped, "P", "S", "V", "O");
    for (std::size_t i = 0; i < m.size(); ++i) {
      CHECK(after[i] >= before[i]);
      CHECK(afterObj[i] >= beforeObj[i]);
    }
  }
}

TEST_CASE("truth values") {
  const Space n("N", 4);
  CHECK(maxAbsDiff(truthValues(Tensor::vector(n, {0, 0.2, 2, 0})), Tensor::vector(n, {0, 1, 1, 0})) == 0.0);
}

TEST_CASE("model file format") {
  std::istringstream ok(
      "[universe]\n x y  # two people\n z\n"
      "[noun people] x 1\n"
      "[verb see]\n0 2 0.5\nx y\n"
      "[ownership]\nz x 1/4\n");
  const auto m = RelationalModel::parse(ok);
  CHECK(m.size() == 3);
  CHECK(m.noun("people") == std::vector<std::size_t>{0, 1});
  REQUIRE(m.verb("see").size() == 2);
  CHECK(m.verb("see")[0].weight == 0.5);
  CHECK(m.ownership()[0].weight == 0.25);

  auto bad = [](const char* text) {
    std::istringstream in(text);
    return RelationalModel::parse(in);
  };
  CHECK_THROWS_AS(bad("x y\n"), ParseError);
  CHECK_THROWS_AS(bad("[universe] x\n[verb v]\nx x 1.5\n"), ParseError);
  CHECK_THROWS_AS(bad("[universe] x\n[verb v]\nx x -0.1\n"), ParseError);
  CHECK_THROWS_AS(bad("[universe] x\n[verb v]\nx x 1/0\n"), ParseError);
  CHECK_THROWS_AS(bad("[universe] x\n[verb v]\nx\n"), ParseError);
  CHECK_THROWS_AS(bad("[universe] x\n[noun a] y\n"), LookupError);
  CHECK_THROWS_AS(bad("[universe] x x\n"), ParseError);
  CHECK_THROWS_AS(bad("[universe] x\n[adjective a] x\n"), ParseError);
  CHECK_THROWS_AS(RelationalModel::load(kData + "/missing.model"), LookupError);
}

TEST_CASE("worked example runs well under a second") {
  const auto start = std::chrono::steady_clock::now();
  const auto m = RelationalModel::load(kData + "/authors.model");
  (void)evalPossSubjTruth(m, "authors", "books", "entertain", "John");
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(1));
}
