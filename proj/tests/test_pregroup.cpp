#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "discocat/errors.hpp"
#include "discocat/lexicon.hpp"
#include "discocat/pregroup.hpp"
#include "support/oracles.hpp"

using namespace discocat;

namespace {

using Links = std::vector<std::pair<std::size_t, std::size_t>>;

PregroupType random_type(std::mt19937_64& rng, std::size_t len) {
  std::uniform_int_distribution<int> base(0, 1), order(-2, 2);
  std::vector<AtomicType> atoms;
  for (std::size_t i = 0; i < len; ++i) atoms.push_back({base(rng) ? "n" : "s", order(rng)});
  return PregroupType(atoms);
}

bool crosses(const Links& links) {
  for (auto [i, j] : links)
    for (auto [k, l] : links)
      if (i < k && k < j && j < l) return true;
  return false;
}

Lexicon sample_lexicon() {
  std::istringstream in(
      "# toy entries\n"
      "red\tn n^l\tvector\n"
      "car\tn\tvector\n"
      "men\tn\tvector\n"
      "cats\tn\tvector\n"
      "John\tn\tvector\n"
      "author\tn\tvector\n"
      "book\tn\tvector\n"
      "sneeze\tn^r s\tvector\n"
      "like\tn^r s n^l\tcube-verb\n"
      "entertained\tn^r s n^l\tcube-verb\n"
      "whose\tn^r n s^l n n^l\trel-poss-subj\n");
  return Lexicon::parse(in);
}

}  // namespace

TEST_CASE("parse type notation") {
  auto t = parseType("n^r n s^l n n^l");
  REQUIRE(t.size() == 5);
  CHECK(t[0] == AtomicType{"n", 1});
  CHECK(t[1] == AtomicType{"n", 0});
  CHECK(t[2] == AtomicType{"s", -1});
  CHECK(t[3] == AtomicType{"n", 0});
  CHECK(t[4] == AtomicType{"n", -1});

  CHECK(parseType("").isUnit());
  CHECK(parseType("   ").isUnit());

  auto obj = parseType("n^r n n^{ll} s^l n^l");
  CHECK(obj.atoms() == std::vector<AtomicType>{{"n", 1}, {"n", 0}, {"n", -2}, {"s", -1}, {"n", -1}});
  CHECK(parseType("n^{ll}") == parseType("n^ll"));
  CHECK(parseType("s^rr")[0].order == 2);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parseType("q"), ParseError);
  CHECK_THROWS_AS(parseType("n^x"), ParseError);
  CHECK_THROWS_AS(parseType("n^"), ParseError);
  CHECK_THROWS_AS(parseType("n^lr"), ParseError);
  CHECK_THROWS_AS(parseType("n^{ll"), ParseError);
  Alphabet abc({"a", "b"});
  CHECK_NOTHROW(parseType("a b^l", abc));
  CHECK_THROWS_AS(parseType("n", abc), ParseError);
}

TEST_CASE("print round trip") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    auto t = random_type(rng, trial % 7);
    CHECK(parseType(to_string(t)) == t);
  }
  CHECK(to_string(parseType("n^{rr}")) == "n^rr");
}

TEST_CASE("juxtaposition is associative with unit") {
  auto a = parseType("n"), b = parseType("n^r s"), c = parseType("n^l");
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * PregroupType() == a);
  CHECK(PregroupType() * a == a);
}

TEST_CASE("greedy reduction examples") {
  auto plan = reduceGreedy(parseType("n n^r s n^l n"));
  CHECK(plan.links == Links{{0, 1}, {3, 4}});
  CHECK(plan.residual == std::vector<std::size_t>{2});

  auto stuck = reduceGreedy(parseType("n n^l"));
  CHECK(stuck.links.empty());
  CHECK(residualType(parseType("n n^l"), stuck) == parseType("n n^l"));

  // possessor whose subject verb object, 11 atoms
  auto poss = parseType("n n^r n s^l n n^l n n^r s n^l n");
  auto p = reduceGreedy(poss);
  CHECK(p.links == Links{{0, 1}, {3, 8}, {4, 7}, {5, 6}, {9, 10}});
  CHECK(residualType(poss, p) == parseType("n"));
  CHECK(isValidPlan(poss, p));
}

TEST_CASE("search reduction examples") {
  auto t = parseType("n^l n n^r");
  auto right = searchReduction(t, parseType("n^r"));
  REQUIRE(right);
  CHECK(right->links == Links{{0, 1}});
  auto left = searchReduction(t, parseType("n^l"));
  REQUIRE(left);
  CHECK(left->links == Links{{1, 2}});
  CHECK_FALSE(searchReduction(parseType("s"), parseType("n")));
  CHECK(searchReduction(PregroupType(), PregroupType()));
}

TEST_CASE("search agrees with exhaustive rewriting") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    auto t = random_type(rng, 1 + trial % 10);
    auto all = oracle::reachable(t);
    for (const auto& target : all) {
      auto plan = searchReduction(t, PregroupType(target));
      REQUIRE(plan);
      CHECK(isValidPlan(t, *plan));
      CHECK(residualType(t, *plan).atoms() == target);
    }
    // a few targets the oracle rules out
    for (int k = 0; k < 3; ++k) {
      auto target = random_type(rng, k);
      CHECK(searchReduction(t, target).has_value() == (all.count(target.atoms()) > 0));
    }
  }
}

TEST_CASE("greedy plans are planar, sound and valid") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    auto t = random_type(rng, trial % 12);
    auto plan = reduceGreedy(t);
    CHECK_FALSE(crosses(plan.links));
    CHECK(isValidPlan(t, plan));
    for (auto [i, j] : plan.links) {
      CHECK(i < j);
      CHECK(t[i].base == t[j].base);
      CHECK(t[j].order == t[i].order + 1);
    }
    auto residual = residualType(t, plan);
    // soundness: deleting linked positions leaves the residual
    std::vector<bool> linked(t.size(), false);
    for (auto [i, j] : plan.links) linked[i] = linked[j] = true;
    std::vector<AtomicType> kept;
    for (std::size_t i = 0; i < t.size(); ++i)
      if (!linked[i]) kept.push_back(t[i]);
    CHECK(kept == residual.atoms());
    auto searched = searchReduction(t, residual);
    REQUIRE(searched);
    CHECK(searched->residual.size() == plan.residual.size());
  }
}

TEST_CASE("invalid plans are rejected") {
  auto t = parseType("n n^r s n^l n");
  CHECK_FALSE(isValidPlan(t, {{{0, 2}}, {1, 3, 4}}));
  CHECK_FALSE(isValidPlan(t, {{{0, 1}}, {2, 3}}));
  auto nested = parseType("n^l n n^r n");
  // crossing pairs (0,1),(1,2) reuse a position
  CHECK_FALSE(isValidPlan(nested, {{{0, 1}, {1, 2}}, {3}}));
}

TEST_CASE("grammaticality of sample sentences") {
  auto lex = sample_lexicon();
  CHECK(checkGrammatical({"red", "car"}, lex, parseType("n")).grammatical);
  CHECK(checkGrammatical({"men", "sneeze"}, lex, parseType("s")).grammatical);
  CHECK(checkGrammatical({"men", "like", "cats"}, lex, parseType("s")).grammatical);
  auto whose = checkGrammatical({"author", "whose", "book", "entertained", "John"}, lex, parseType("n"));
  CHECK(whose.grammatical);
  CHECK(whose.sentenceType.size() == 11);
  CHECK(residualType(whose.sentenceType, whose.plan) == parseType("n"));
  CHECK_FALSE(checkGrammatical({"car", "red"}, lex, parseType("n")).grammatical);
  CHECK_THROWS_AS(checkGrammatical({"dog"}, lex, parseType("n")), LookupError);
}

TEST_CASE("lexicon format") {
  std::istringstream bad("word\tn\n");
  CHECK_THROWS_AS(Lexicon::parse(bad), ParseError);
  std::istringstream tag("word\tn\tnoun\n");
  CHECK_THROWS_AS(Lexicon::parse(tag), ParseError);
  auto lex = sample_lexicon();
  CHECK(lex.at("whose").tag == SemanticTag::RelPossSubj);
  CHECK(isPronoun(SemanticTag::RelObj));
  CHECK_FALSE(isPronoun(SemanticTag::HasPredicate));
  CHECK(parseSemanticTag(to_string(SemanticTag::HasPredicate)) == SemanticTag::HasPredicate);
}
