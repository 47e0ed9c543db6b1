#ifndef DISCOCAT_PREGROUP_HPP_
#define DISCOCAT_PREGROUP_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace discocat {

// A basic type with an iterated adjoint. Order 0 is the plain type, negative
// orders are left adjoints (-1 = ^l, -2 = ^ll) and positive orders are right
// adjoints (+1 = ^r, +2 = ^rr).
struct AtomicType {
  std::string base;
  int order = 0;

  auto operator<=>(const AtomicType&) const = default;
};

// a^(z) cancels against a^(z+1) immediately to its right.
bool cancels(const AtomicType& left, const AtomicType& right);

class PregroupType {
 public:
  PregroupType() = default;
  explicit PregroupType(std::vector<AtomicType> atoms) : atoms_(std::move(atoms)) {}

  const std::vector<AtomicType>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool isUnit() const { return atoms_.empty(); }
  const AtomicType& operator[](std::size_t i) const { return atoms_[i]; }

  // Juxtaposition.
  PregroupType operator*(const PregroupType& other) const;

  bool operator==(const PregroupType&) const = default;

 private:
  std::vector<AtomicType> atoms_;
};

class Alphabet {
 public:
  Alphabet() : symbols_{"n", "s"} {}
  explicit Alphabet(std::set<std::string> symbols) : symbols_(std::move(symbols)) {}

  bool contains(std::string_view symbol) const {
    return symbols_.count(std::string(symbol)) > 0;
  }
  const std::set<std::string>& symbols() const { return symbols_; }

 private:
  std::set<std::string> symbols_;
};

// Whitespace separated atoms: `n`, `n^r`, `n^ll`, `n^{ll}`, ...
PregroupType parseType(std::string_view text, const Alphabet& alphabet = Alphabet());
std::string to_string(const AtomicType& atom);
std::string to_string(const PregroupType& type);

// A set of cups over the positions of a flattened type. Links are stored
// with the left position first and sorted by left position.
struct ReductionPlan {
  std::vector<std::pair<std::size_t, std::size_t>> links;
  std::vector<std::size_t> residual;

  bool operator==(const ReductionPlan&) const = default;
};

// Checks link validity, planarity (no crossing cups, no surviving atom under
// a cup) and that links and residual partition the positions.
bool isValidPlan(const PregroupType& type, const ReductionPlan& plan);

PregroupType residualType(const PregroupType& type, const ReductionPlan& plan);

// Left-to-right stack scan cancelling each incoming atom against the stack
// top whenever possible.
ReductionPlan reduceGreedy(const PregroupType& type);

// Backtracking over all planar cup choices; returns a plan whose residual is
// exactly `target`, if any exists.
std::optional<ReductionPlan> searchReduction(const PregroupType& type, const PregroupType& target);

}  // namespace discocat

#endif  // DISCOCAT_PREGROUP_HPP_
