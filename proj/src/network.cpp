#include "discocat/network.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <set>

#include "discocat/errors.hpp"

namespace discocat {

std::size_t ContractionNetwork::addTensor(Tensor tensor) {
  nodes_.emplace_back(std::move(tensor));
  return nodes_.size() - 1;
}

std::size_t ContractionNetwork::addSpider(Spider spider) {
  nodes_.emplace_back(std::move(spider));
  return nodes_.size() - 1;
}

std::size_t ContractionNetwork::legCount(std::size_t node) const {
  if (node >= nodes_.size()) throw ShapeError("node index out of range");
  return std::visit(
      [](const auto& n) -> std::size_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(n)>, Tensor>) {
          return n.rank();
        } else {
          return n.legCount();
        }
      },
      nodes_[node]);
}

const Space& ContractionNetwork::portSpace(Port port) const {
  checkPort(port);
  return std::visit(
      [&](const auto& n) -> const Space& {
        if constexpr (std::is_same_v<std::decay_t<decltype(n)>, Tensor>) {
          return n.leg(port.leg);
        } else {
          return n.space;
        }
      },
      nodes_[port.node]);
}

void ContractionNetwork::checkPort(Port port) const {
  if (port.node >= nodes_.size() || port.leg >= legCount(port.node)) {
    throw ShapeError("port (" + std::to_string(port.node) + ", " + std::to_string(port.leg) +
                     ") does not exist");
  }
}

void ContractionNetwork::connect(Port a, Port b) {
  checkPort(a);
  checkPort(b);
  if (a == b) throw ShapeError("cannot wire a port to itself");
  if (isWired(a) || isWired(b)) throw ShapeError("port is already wired");
  if (portSpace(a) != portSpace(b)) {
    throw ShapeError("edge joins space '" + portSpace(a).name + "' to '" + portSpace(b).name + "'");
  }
  edges_.emplace_back(a, b);
  partner_[a] = b;
  partner_[b] = a;
}

void ContractionNetwork::setOutputs(std::vector<Port> ports) { outputs_ = std::move(ports); }

std::vector<Port> ContractionNetwork::absorb(const ContractionNetwork& other) {
  const std::size_t offset = nodes_.size();
  nodes_.insert(nodes_.end(), other.nodes_.begin(), other.nodes_.end());
  auto shift = [offset](Port p) { return Port{p.node + offset, p.leg}; };
  for (const auto& [a, b] : other.edges_) connect(shift(a), shift(b));
  std::vector<Port> mapped;
  for (Port p : other.outputs()) mapped.push_back(shift(p));
  return mapped;
}

std::vector<Port> ContractionNetwork::openPorts() const {
  std::vector<Port> open;
  for (std::size_t node = 0; node < nodes_.size(); ++node) {
    for (std::size_t leg = 0; leg < legCount(node); ++leg) {
      if (!isWired({node, leg})) open.push_back({node, leg});
    }
  }
  return open;
}

std::vector<Port> ContractionNetwork::outputs() const {
  return outputs_ ? *outputs_ : openPorts();
}

void ContractionNetwork::validate() const {
  for (const auto& [a, b] : edges_) {
    checkPort(a);
    checkPort(b);
    if (portSpace(a) != portSpace(b)) throw ShapeError("edge endpoints carry different spaces");
  }
  if (!outputs_) return;
  auto declared = *outputs_;
  auto open = openPorts();
  std::sort(declared.begin(), declared.end());
  if (std::adjacent_find(declared.begin(), declared.end()) != declared.end()) {
    throw ShapeError("output port listed twice");
  }
  if (declared != open) throw ShapeError("outputs must be exactly the unwired ports");
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// A tensor whose legs carry index labels; equal labels are the same index.
struct Operand {
  std::vector<double> data;
  std::vector<std::size_t> labels;
};

class Contractor {
 public:
  explicit Contractor(std::vector<std::size_t> labelDims) : labelDims_(std::move(labelDims)) {}

  // out[outLabels] = sum over every other label of a[aLabels] * b[bLabels].
  // Labels may repeat within an operand or within the output (diagonals).
  Operand einsum(const Operand& a, const Operand& b, const std::vector<std::size_t>& outLabels) const {
    std::vector<std::size_t> loop;
    auto collect = [&](const std::vector<std::size_t>& labels) {
      for (std::size_t l : labels) {
        if (std::find(loop.begin(), loop.end(), l) == loop.end()) loop.push_back(l);
      }
    };
    collect(a.labels);
    collect(b.labels);
    collect(outLabels);

    const auto strideA = strides(a.labels, loop);
    const auto strideB = strides(b.labels, loop);
    const auto strideOut = strides(outLabels, loop);

    std::size_t outSize = 1;
    for (std::size_t l : outLabels) outSize *= labelDims_[l];
    Operand out{std::vector<double>(outSize, 0.0), outLabels};

    std::vector<std::size_t> counter(loop.size(), 0);
    std::size_t offA = 0, offB = 0, offOut = 0;
    while (true) {
      out.data[offOut] += a.data[offA] * b.data[offB];
      // Odometer increment, last label fastest.
      bool exhausted = true;
      for (std::size_t k = loop.size(); k-- > 0;) {
        if (++counter[k] < labelDims_[loop[k]]) {
          offA += strideA[k];
          offB += strideB[k];
          offOut += strideOut[k];
          exhausted = false;
          break;
        }
        const std::size_t wrapped = labelDims_[loop[k]] - 1;
        offA -= strideA[k] * wrapped;
        offB -= strideB[k] * wrapped;
        offOut -= strideOut[k] * wrapped;
        counter[k] = 0;
      }
      if (exhausted) return out;
    }
  }

  std::size_t size(const std::vector<std::size_t>& labels) const {
    std::size_t n = 1;
    for (std::size_t l : labels) n *= labelDims_[l];
    return n;
  }

 private:
  // Stride of each loop label inside a row-major operand; repeated labels add.
  std::vector<std::size_t> strides(const std::vector<std::size_t>& labels,
                                   const std::vector<std::size_t>& loop) const {
    std::vector<std::size_t> out(loop.size(), 0);
    std::size_t stride = 1;
    for (std::size_t p = labels.size(); p-- > 0;) {
      const auto pos = std::find(loop.begin(), loop.end(), labels[p]) - loop.begin();
      out[static_cast<std::size_t>(pos)] += stride;
      stride *= labelDims_[labels[p]];
    }
    return out;
  }

  std::vector<std::size_t> labelDims_;
};

void requireFinite(const Operand& op) {
  if (!std::all_of(op.data.begin(), op.data.end(), [](double x) { return std::isfinite(x); })) {
    throw NumericError("non-finite value produced during contraction");
  }
}

}  // namespace

Tensor contractNetwork(const ContractionNetwork& network, const ContractOptions& options) {
  network.validate();
  const auto& nodes = network.nodes();

  // One slot per leg; wired legs and the legs of one spider share an index.
  std::vector<std::size_t> firstSlot(nodes.size() + 1, 0);
  for (std::size_t n = 0; n < nodes.size(); ++n) firstSlot[n + 1] = firstSlot[n] + network.legCount(n);
  const std::size_t slotCount = firstSlot.back();
  auto slotOf = [&](Port p) { return firstSlot[p.node] + p.leg; };

  UnionFind classes(slotCount);
  std::vector<Operand> operands;
  std::vector<std::size_t> operandNode;
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    if (const auto* spider = std::get_if<Spider>(&nodes[n]); spider && options.fuseSpiders) {
      for (std::size_t leg = 1; leg < spider->legCount(); ++leg) {
        classes.unite(firstSlot[n], firstSlot[n] + leg);
      }
      continue;
    }
    const Tensor tensor = std::holds_alternative<Tensor>(nodes[n])
                              ? std::get<Tensor>(nodes[n])
                              : materializeSpider(std::get<Spider>(nodes[n]), options.spiderBudget);
    operands.push_back({{tensor.data().begin(), tensor.data().end()}, {}});
    operandNode.push_back(n);
  }
  for (const auto& [a, b] : network.edges()) classes.unite(slotOf(a), slotOf(b));

  std::vector<std::size_t> labelDims(slotCount, 0);
  std::vector<bool> labelUsed(slotCount, false);
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    for (std::size_t leg = 0; leg < network.legCount(n); ++leg) {
      labelDims[classes.find(firstSlot[n] + leg)] = network.portSpace({n, leg}).dim;
    }
  }
  for (std::size_t k = 0; k < operands.size(); ++k) {
    const std::size_t n = operandNode[k];
    for (std::size_t leg = 0; leg < network.legCount(n); ++leg) {
      const std::size_t label = classes.find(firstSlot[n] + leg);
      operands[k].labels.push_back(label);
      labelUsed[label] = true;
    }
  }

  const auto outputs = network.outputs();
  std::vector<std::size_t> outLabels;
  std::vector<Space> outLegs;
  for (Port p : outputs) {
    const std::size_t label = classes.find(slotOf(p));
    outLabels.push_back(label);
    outLegs.push_back(network.portSpace(p));
    labelUsed[label] = true;
  }

  // Fully closed spider components evaluate to the dimension of their space.
  double closedFactor = 1.0;
  std::set<std::size_t> seen;
  for (std::size_t slot = 0; slot < slotCount; ++slot) {
    const std::size_t label = classes.find(slot);
    if (!labelUsed[label] && seen.insert(label).second) {
      closedFactor *= static_cast<double>(labelDims[label]);
    }
  }

  const Contractor contractor(labelDims);
  auto neededLabels = [&](std::size_t skipA, std::size_t skipB, const Operand& a, const Operand& b) {
    std::vector<std::size_t> keep;
    auto needed = [&](std::size_t label) {
      if (std::find(outLabels.begin(), outLabels.end(), label) != outLabels.end()) return true;
      for (std::size_t k = 0; k < operands.size(); ++k) {
        if (k == skipA || k == skipB) continue;
        const auto& ls = operands[k].labels;
        if (std::find(ls.begin(), ls.end(), label) != ls.end()) return true;
      }
      return false;
    };
    for (const auto* labels : {&a.labels, &b.labels}) {
      for (std::size_t l : *labels) {
        if (std::find(keep.begin(), keep.end(), l) == keep.end() && needed(l)) keep.push_back(l);
      }
    }
    return keep;
  };

  std::mt19937_64 rng(options.seed);
  while (operands.size() > 1) {
    std::size_t i = 0, j = 1;
    if (options.order == ContractionOrder::Greedy) {
      std::size_t best = std::numeric_limits<std::size_t>::max();
      for (std::size_t x = 0; x < operands.size(); ++x) {
        for (std::size_t y = x + 1; y < operands.size(); ++y) {
          const std::size_t cost = contractor.size(neededLabels(x, y, operands[x], operands[y]));
          if (cost < best) {
            best = cost;
            i = x;
            j = y;
          }
        }
      }
    } else if (options.order == ContractionOrder::Random) {
      std::uniform_int_distribution<std::size_t> pick(0, operands.size() - 1);
      i = pick(rng);
      do {
        j = pick(rng);
      } while (j == i);
      if (i > j) std::swap(i, j);
    }
    const auto keep = neededLabels(i, j, operands[i], operands[j]);
    Operand merged = contractor.einsum(operands[i], operands[j], keep);
    requireFinite(merged);
    operands.erase(operands.begin() + static_cast<std::ptrdiff_t>(j));
    operands[i] = std::move(merged);
  }

  const Operand unit{{1.0}, {}};
  const Operand& last = operands.empty() ? unit : operands.front();
  Operand result = contractor.einsum(last, unit, outLabels);
  if (closedFactor != 1.0) {
    for (double& x : result.data) x *= closedFactor;
  }
  requireFinite(result);
  return Tensor(std::move(outLegs), std::move(result.data));
}

}  // namespace discocat
