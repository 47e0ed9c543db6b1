#ifndef DISCOCAT_NETWORK_HPP_
#define DISCOCAT_NETWORK_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "discocat/frobenius.hpp"
#include "discocat/tensor.hpp"

namespace discocat {

struct Port {
  std::size_t node = 0;
  std::size_t leg = 0;

  auto operator<=>(const Port&) const = default;
};

// A string diagram: tensors and spiders wired leg to leg. Each edge is a cup
// between two legs over the same space; the unmatched legs are the open
// ports of the diagram.
class ContractionNetwork {
 public:
  using Node = std::variant<Tensor, Spider>;

  std::size_t addTensor(Tensor tensor);
  std::size_t addSpider(Spider spider);

  // Throws ShapeError on a space mismatch or when either port is already wired.
  void connect(Port a, Port b);

  // Orders the open ports of the result. Without it the open ports are used
  // in node/leg order.
  void setOutputs(std::vector<Port> ports);

  // Copies another network in; returns its outputs as ports of this network.
  std::vector<Port> absorb(const ContractionNetwork& other);

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<std::pair<Port, Port>>& edges() const { return edges_; }
  std::size_t legCount(std::size_t node) const;
  const Space& portSpace(Port port) const;
  bool isWired(Port port) const { return partner_.count(port) > 0; }

  std::vector<Port> openPorts() const;
  std::vector<Port> outputs() const;

  // Checks the edge and output invariants; throws ShapeError on violation.
  void validate() const;

 private:
  void checkPort(Port port) const;

  std::vector<Node> nodes_;
  std::vector<std::pair<Port, Port>> edges_;
  std::map<Port, Port> partner_;
  std::optional<std::vector<Port>> outputs_;
};

enum class ContractionOrder {
  Greedy,      // cheapest pairwise contraction first
  Sequential,  // fold operands left to right in node order
  Random,      // random pair order drawn from `seed`
};

struct ContractOptions {
  ContractionOrder order = ContractionOrder::Greedy;
  std::uint64_t seed = 0;
  // Merge connected spiders into shared indices instead of materializing them.
  bool fuseSpiders = true;
  std::size_t spiderBudget = kDefaultSpiderBudget;
};

// Evaluates the diagram to a tensor over its outputs. The result does not
// depend on the contraction order beyond floating point rounding, and is
// bitwise reproducible for a fixed order and seed.
Tensor contractNetwork(const ContractionNetwork& network, const ContractOptions& options = {});

}  // namespace discocat

#endif  // DISCOCAT_NETWORK_HPP_
