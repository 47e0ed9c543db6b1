#include "discocat/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "discocat/errors.hpp"
#include "discocat/linalg.hpp"

namespace discocat {

CooccurrenceStats::CooccurrenceStats(std::vector<std::string> basis)
    : basis_(std::move(basis)), basisTotals_(basis_.size(), 0) {
  if (basis_.empty()) throw ShapeError("co-occurrence basis is empty");
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (!basisIndex_.emplace(basis_[i], i).second) throw ShapeError("basis word '" + basis_[i] + "' repeated");
  }
}

std::vector<std::string> CooccurrenceStats::vocabulary() const {
  std::vector<std::string> words;
  words.reserve(rows_.size());
  for (const auto& [word, row] : rows_) words.push_back(word);
  return words;
}

std::size_t CooccurrenceStats::basisIndex(const std::string& basisWord) const {
  const auto it = basisIndex_.find(basisWord);
  if (it == basisIndex_.end()) throw LookupError("'" + basisWord + "' is not a basis word");
  return it->second;
}

std::uint64_t CooccurrenceStats::count(const std::string& word, const std::string& basisWord) const {
  const std::size_t b = basisIndex(basisWord);
  const auto it = rows_.find(word);
  return it == rows_.end() ? 0 : it->second[b];
}

std::uint64_t CooccurrenceStats::wordTotal(const std::string& word) const {
  const auto it = rows_.find(word);
  if (it == rows_.end()) return 0;
  std::uint64_t total = 0;
  for (auto c : it->second) total += c;
  return total;
}

std::uint64_t CooccurrenceStats::basisTotal(const std::string& basisWord) const {
  return basisTotals_[basisIndex(basisWord)];
}

void CooccurrenceStats::touch(const std::string& word) {
  rows_.try_emplace(word, basis_.size(), 0);
}

void CooccurrenceStats::add(const std::string& word, std::size_t b, std::uint64_t n) {
  if (b >= basis_.size()) throw LookupError("basis index out of range");
  auto& row = rows_.try_emplace(word, basis_.size(), 0).first->second;
  row[b] += n;
  basisTotals_[b] += n;
  grand_ += n;
}

void CooccurrenceStats::merge(const CooccurrenceStats& other) {
  if (other.basis_ != basis_) throw ShapeError("cannot merge counts over different bases");
  for (const auto& [word, row] : other.rows_) {
    touch(word);
    for (std::size_t b = 0; b < row.size(); ++b) {
      if (row[b] != 0) add(word, b, row[b]);
    }
  }
}

std::vector<std::string> selectBasis(const std::vector<Sentence>& corpus, std::size_t basisSize) {
  std::map<std::string, std::uint64_t> freq;
  for (const auto& sentence : corpus) {
    for (const auto& token : sentence) ++freq[token];
  }
  if (basisSize == 0) throw ShapeError("basis size must be positive");
  if (basisSize > freq.size()) {
    throw ShapeError("basis size " + std::to_string(basisSize) + " exceeds the vocabulary of " +
                     std::to_string(freq.size()));
  }
  std::vector<std::pair<std::string, std::uint64_t>> ranked(freq.begin(), freq.end());
  // map order is lexicographic, so a stable sort on frequency keeps ties sorted
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  std::vector<std::string> basis;
  for (std::size_t i = 0; i < basisSize; ++i) basis.push_back(ranked[i].first);
  return basis;
}

namespace {

void countSpan(const Sentence& tokens, std::size_t window, const std::map<std::string, std::size_t>& index,
               CooccurrenceStats& stats) {
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    stats.touch(tokens[i]);
    const std::size_t lo = i >= window ? i - window : 0;
    const std::size_t hi = std::min(tokens.size() - 1, i + window);
    for (std::size_t j = lo; j <= hi; ++j) {
      if (j == i) continue;
      const auto it = index.find(tokens[j]);
      if (it != index.end()) stats.add(tokens[i], it->second);
    }
  }
}

}  // namespace

CooccurrenceStats countCooccurrences(const std::vector<Sentence>& corpus, const std::vector<std::string>& basis,
                                     const CountOptions& options) {
  CooccurrenceStats stats(basis);
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);

  std::size_t tokens = 0;
  for (const auto& s : corpus) tokens += s.size();
  if (tokens == 0) throw ShapeError("corpus has no tokens");

  if (options.crossSentences) {
    Sentence flat;
    flat.reserve(tokens);
    for (const auto& s : corpus) flat.insert(flat.end(), s.begin(), s.end());
    countSpan(flat, options.window, index, stats);
  } else {
    for (const auto& s : corpus) countSpan(s, options.window, index, stats);
  }
  return stats;
}

CooccurrenceStats buildCooccurrence(const std::vector<Sentence>& corpus, std::size_t basisSize,
                                    const CountOptions& options) {
  return countCooccurrences(corpus, selectBasis(corpus, basisSize), options);
}

Tensor contextVector(const CooccurrenceStats& stats, const std::string& word) {
  if (!stats.contains(word)) throw LookupError("word '" + word + "' was not seen in the corpus");
  const auto& basis = stats.basis();
  const double grand = static_cast<double>(stats.grandTotal());
  const double total = static_cast<double>(stats.wordTotal(word));
  std::vector<double> out(basis.size(), 0.0);
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const double c = static_cast<double>(stats.count(word, basis[b]));
    if (c == 0.0) continue;
    out[b] = grand * c / (total * static_cast<double>(stats.basisTotal(basis[b])));
  }
  return Tensor::vector(stats.space(), std::move(out));
}

namespace {

std::vector<std::string> tabFields(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, '\t');) fields.push_back(f);
  return fields;
}

std::uint64_t parseCount(const std::string& text, std::size_t lineNo) {
  std::uint64_t n = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (ec != std::errc() || ptr != text.data() + text.size() || n == 0) {
    throw ParseError("line " + std::to_string(lineNo) + ": count must be a positive integer, got '" + text + "'");
  }
  return n;
}

// Calls fn(fields, lineNo) for each non-blank, non-comment line.
template <typename Fn>
void eachRow(std::istream& in, Fn fn) {
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    fn(tabFields(line), lineNo);
  }
}

std::ifstream openInput(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LookupError("cannot open '" + path + "'");
  return in;
}

const Tensor& vectorFor(const TensorTable& vectors, const std::string& lemma) {
  if (!vectors.contains(lemma)) throw LookupError("no vector for '" + lemma + "'");
  return vectors.at(lemma);
}

}  // namespace

void writeCounts(std::ostream& out, const CooccurrenceStats& stats) {
  out << "# cooccurrence v1\nbasis";
  for (const auto& b : stats.basis()) out << '\t' << b;
  out << '\n';
  for (const auto& word : stats.vocabulary()) {
    out << word;
    for (const auto& b : stats.basis()) out << '\t' << stats.count(word, b);
    out << '\n';
  }
}

CooccurrenceStats readCounts(std::istream& in) {
  std::optional<CooccurrenceStats> stats;
  eachRow(in, [&](const std::vector<std::string>& f, std::size_t lineNo) {
    if (!stats) {
      if (f.empty() || f[0] != "basis") throw ParseError("counts line " + std::to_string(lineNo) + ": expected the basis row");
      stats.emplace(std::vector<std::string>(f.begin() + 1, f.end()));
      return;
    }
    if (f.size() != stats->basis().size() + 1) {
      throw ParseError("counts line " + std::to_string(lineNo) + ": expected a word and " +
                       std::to_string(stats->basis().size()) + " counts");
    }
    stats->touch(f[0]);
    for (std::size_t b = 1; b < f.size(); ++b) {
      if (f[b] == "0") continue;
      stats->add(f[0], b - 1, parseCount(f[b], lineNo));
    }
  });
  if (!stats) throw ParseError("counts file has no basis row");
  return std::move(*stats);
}

void saveCounts(const std::string& path, const CooccurrenceStats& stats) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  writeCounts(out, stats);
}

CooccurrenceStats loadCounts(const std::string& path) {
  auto in = openInput(path);
  return readCounts(in);
}

std::vector<Sentence> readCorpus(std::istream& in) {
  std::vector<Sentence> corpus;
  for (std::string line; std::getline(in, line);) {
    std::istringstream words(line);
    Sentence s;
    for (std::string w; words >> w;) s.push_back(w);
    if (!s.empty()) corpus.push_back(std::move(s));
  }
  return corpus;
}

std::vector<SvoTriple> readTriples(std::istream& in) {
  std::vector<SvoTriple> triples;
  eachRow(in, [&](const std::vector<std::string>& f, std::size_t lineNo) {
    if (f.size() != 4) throw ParseError("triples line " + std::to_string(lineNo) + ": expected 4 fields");
    triples.push_back({f[0], f[1], f[2], parseCount(f[3], lineNo)});
  });
  return triples;
}

std::vector<PossPair> readPairs(std::istream& in) {
  std::vector<PossPair> pairs;
  eachRow(in, [&](const std::vector<std::string>& f, std::size_t lineNo) {
    if (f.size() != 3) throw ParseError("pairs line " + std::to_string(lineNo) + ": expected 3 fields");
    pairs.push_back({f[0], f[1], parseCount(f[2], lineNo)});
  });
  return pairs;
}

std::vector<Sentence> loadCorpus(const std::string& path) {
  auto in = openInput(path);
  return readCorpus(in);
}

std::vector<SvoTriple> loadTriples(const std::string& path) {
  auto in = openInput(path);
  return readTriples(in);
}

std::vector<PossPair> loadPairs(const std::string& path) {
  auto in = openInput(path);
  return readPairs(in);
}

Tensor buildVerbMatrix(const std::vector<SvoTriple>& triples, const std::string& verb, const TensorTable& vectors) {
  const Space& n = vectors.space();
  Tensor m = Tensor::zeros({n, n});
  for (const auto& t : triples) {
    if (t.verb != verb || t.intransitive()) continue;
    m = add(m, scale(outer(vectorFor(vectors, t.subject), vectorFor(vectors, t.object)), static_cast<double>(t.count)));
  }
  return m;
}

Tensor buildIntransitiveVerb(const std::vector<SvoTriple>& triples, const std::string& verb,
                             const TensorTable& vectors) {
  Tensor v = Tensor::zeros({vectors.space()});
  for (const auto& t : triples) {
    if (t.verb != verb || !t.intransitive()) continue;
    v = add(v, scale(vectorFor(vectors, t.subject), static_cast<double>(t.count)));
  }
  return v;
}

void buildVerbs(const std::vector<SvoTriple>& triples, VectorStore& store) {
  std::map<std::string, bool> transitive, intransitive;
  for (const auto& t : triples) (t.intransitive() ? intransitive : transitive)[t.verb] = true;
  for (const auto& [verb, _] : transitive) store.verbs().put(verb, buildVerbMatrix(triples, verb, store.vectors()));
  for (const auto& [verb, _] : intransitive) {
    store.intransitiveVerbs().put(verb, buildIntransitiveVerb(triples, verb, store.vectors()));
  }
}

OwnershipMap buildOwnershipMap(const std::vector<PossPair>& pairs, const TensorTable& vectors,
                               OwnershipMap::Mode mode) {
  const Space& n = vectors.space();
  if (mode == OwnershipMap::Mode::Identity) return OwnershipMap::identity(n);
  if (pairs.empty()) throw Error("a learned ownership map needs at least one possessive pair");
  Tensor m = Tensor::zeros({n, n});
  for (const auto& p : pairs) {
    const Tensor term = outer(vectorFor(vectors, p.owner), normalized(vectorFor(vectors, p.possessed)));
    m = add(m, scale(term, static_cast<double>(p.count)));
  }
  return OwnershipMap::learned(std::move(m));
}

}  // namespace discocat
