#ifndef DISCOCAT_FROBENIUS_HPP_
#define DISCOCAT_FROBENIUS_HPP_

#include <cstddef>

#include "discocat/tensor.hpp"

namespace discocat {

// Compact closed structure on a fixed-basis space.

// Cup: inner product of two vectors on the same space.
double epsilon(const Tensor& v, const Tensor& w);
// Cap: k times the identity on `space`, as a rank-2 tensor.
Tensor eta(double k, const Space& space);

// Frobenius algebra of the copying basis.

// Copy: diagonal embedding of v.
Tensor frobDelta(const Tensor& v);
// Merge: pointwise product.
Tensor frobMu(const Tensor& v, const Tensor& w);
// Delete: coordinate sum.
double frobIota(const Tensor& v);
// Unit: the constant-k vector.
Tensor frobZeta(double k, const Space& space);

// Generalized diagonal with `inputs + outputs` legs, all on `space`. Every
// structural map above is a spider: cup (2,0), cap (0,2), copy (1,2),
// merge (2,1), delete (1,0), unit (0,1), identity (1,1).
struct Spider {
  Space space;
  std::size_t inputs = 0;
  std::size_t outputs = 0;

  Spider(Space space, std::size_t inputs, std::size_t outputs);

  std::size_t legCount() const { return inputs + outputs; }
  bool operator==(const Spider&) const = default;
};

inline constexpr std::size_t kDefaultSpiderBudget = 1'000'000;

// Throws BudgetError when dim^(inputs+outputs) exceeds `budget`.
Tensor materializeSpider(const Spider& spider, std::size_t budget = kDefaultSpiderBudget);

}  // namespace discocat

#endif  // DISCOCAT_FROBENIUS_HPP_
