#include "discocat/store.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <vector>

#include "discocat/errors.hpp"

namespace discocat {

namespace fs = std::filesystem;

namespace {

constexpr const char* kMagic = "# tensor-store v1";

std::vector<std::string> splitTabs(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, '\t')) fields.push_back(field);
  return fields;
}

double parseNumber(const std::string& text, std::size_t lineNo) {
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw ParseError("store line " + std::to_string(lineNo) + ": bad number '" + text + "'");
  }
}

std::size_t parseIndex(const std::string& text, std::size_t limit, std::size_t lineNo) {
  const double v = parseNumber(text, lineNo);
  if (v < 0 || v != static_cast<double>(static_cast<std::size_t>(v)) || static_cast<std::size_t>(v) >= limit) {
    throw ParseError("store line " + std::to_string(lineNo) + ": bad index '" + text + "'");
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

TensorTable::TensorTable(std::size_t rank, Space space) : rank_(rank), space_(std::move(space)) {
  if (rank != 1 && rank != 2) throw ShapeError("tensor tables hold rank-1 or rank-2 tensors");
}

void TensorTable::put(const std::string& label, Tensor tensor) {
  if (label.empty() || label.find_first_of("\t\n") != std::string::npos) {
    throw ParseError("store labels must be non-empty and free of tabs and newlines");
  }
  if (tensor.legs() != std::vector<Space>(rank_, space_)) {
    throw ShapeError("tensor '" + label + "' does not match the table shape");
  }
  entries_.insert_or_assign(label, std::move(tensor));
}

const Tensor& TensorTable::at(const std::string& label) const {
  const auto it = entries_.find(label);
  if (it == entries_.end()) throw LookupError("no tensor stored for '" + label + "'");
  return it->second;
}

void TensorTable::write(std::ostream& out) const {
  out << kMagic << " rank=" << rank_ << " dim=" << space_.dim << '\n';
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  const std::size_t d = space_.dim;
  for (const auto& [label, tensor] : entries_) {
    if (rank_ == 1) {
      out << label;
      for (double x : tensor.data()) out << '\t' << x;
      out << '\n';
      continue;
    }
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        const double x = tensor[i * d + j];
        if (x != 0.0) out << label << '\t' << i << '\t' << j << '\t' << x << '\n';
      }
    }
  }
}

TensorTable TensorTable::read(std::istream& in, const std::string& spaceName) {
  std::string header;
  if (!std::getline(in, header) || header.rfind(kMagic, 0) != 0) {
    throw ParseError("missing tensor-store header");
  }
  std::size_t rank = 0, dim = 0;
  std::istringstream fields(header.substr(std::string(kMagic).size()));
  for (std::string kv; fields >> kv;) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw ParseError("bad header field '" + kv + "'");
    const auto key = kv.substr(0, eq);
    const auto value = static_cast<std::size_t>(parseNumber(kv.substr(eq + 1), 1));
    if (key == "rank") rank = value;
    if (key == "dim") dim = value;
  }
  TensorTable table(rank, Space(spaceName, dim));

  std::map<std::string, std::vector<double>> matrices;
  std::string line;
  std::size_t lineNo = 1;
  while (std::getline(in, line)) {
    ++lineNo;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto cols = splitTabs(line);
    if (rank == 1) {
      if (cols.size() != dim + 1) {
        throw ParseError("store line " + std::to_string(lineNo) + ": expected label and " +
                         std::to_string(dim) + " values");
      }
      std::vector<double> values;
      for (std::size_t k = 1; k < cols.size(); ++k) values.push_back(parseNumber(cols[k], lineNo));
      table.put(cols[0], Tensor::vector(table.space_, std::move(values)));
    } else {
      if (cols.size() != 4) throw ParseError("store line " + std::to_string(lineNo) + ": expected `label i j value`");
      auto& data = matrices.try_emplace(cols[0], dim * dim, 0.0).first->second;
      const std::size_t i = parseIndex(cols[1], dim, lineNo);
      const std::size_t j = parseIndex(cols[2], dim, lineNo);
      data[i * dim + j] = parseNumber(cols[3], lineNo);
    }
  }
  for (auto& [label, data] : matrices) {
    table.put(label, Tensor::matrix(table.space_, table.space_, std::move(data)));
  }
  return table;
}

TensorTable TensorTable::load(const std::string& path, const std::string& spaceName) {
  std::ifstream in(path);
  if (!in) throw LookupError("cannot open store file '" + path + "'");
  return read(in, spaceName);
}

void TensorTable::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  write(out);
}

VectorStore::VectorStore(Space space)
    : space_(space), vectors_(1, space), verbs_(2, space), intransitive_(1, space) {}

void VectorStore::setOwnership(Tensor matrix) {
  if (matrix.legs() != std::vector<Space>{space_, space_}) throw ShapeError("ownership map must be N (x) N");
  ownership_ = std::move(matrix);
}

void VectorStore::save(const std::string& directory) const {
  fs::create_directories(directory);
  const fs::path dir(directory);
  vectors_.save((dir / "vectors.tsv").string());
  verbs_.save((dir / "verbs.tsv").string());
  intransitive_.save((dir / "intransitive.tsv").string());
  if (ownership_) {
    TensorTable table(2, space_);
    table.put(kOwnershipLabel, *ownership_);
    table.save((dir / "ownership.tsv").string());
  }
}

VectorStore VectorStore::load(const std::string& directory) {
  const fs::path dir(directory);
  TensorTable vectors = TensorTable::load((dir / "vectors.tsv").string());
  VectorStore store(vectors.space());
  store.vectors_ = std::move(vectors);
  auto loadOptional = [&](const char* name, std::size_t rank) {
    const auto path = dir / name;
    if (!fs::exists(path)) return TensorTable(rank, store.space_);
    TensorTable table = TensorTable::load(path.string());
    if (table.space() != store.space_ || table.rank() != rank) {
      throw ShapeError("'" + path.string() + "' does not match the vector dimension");
    }
    return table;
  };
  store.verbs_ = loadOptional("verbs.tsv", 2);
  store.intransitive_ = loadOptional("intransitive.tsv", 1);
  const TensorTable owns = loadOptional("ownership.tsv", 2);
  if (owns.contains(kOwnershipLabel)) store.ownership_ = owns.at(kOwnershipLabel);
  return store;
}

}  // namespace discocat
