#include "discocat/frobenius.hpp"

#include <limits>

#include "discocat/errors.hpp"
#include "discocat/linalg.hpp"

namespace discocat {

double epsilon(const Tensor& v, const Tensor& w) {
  if (v.rank() != 1 || w.rank() != 1) throw ShapeError("epsilon: expected two vectors");
  if (v.leg(0) != w.leg(0)) throw ShapeError("epsilon: space mismatch");
  return dot(v, w);
}

Tensor eta(double k, const Space& space) { return scale(Tensor::identity(space), k); }

Tensor frobDelta(const Tensor& v) {
  if (v.rank() != 1) throw ShapeError("frobDelta: expected a vector");
  const std::size_t d = v.leg(0).dim;
  std::vector<double> data(d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i) data[i * d + i] = v[i];
  return Tensor::matrix(v.leg(0), v.leg(0), std::move(data));
}

Tensor frobMu(const Tensor& v, const Tensor& w) {
  if (v.rank() != 1 || w.rank() != 1) throw ShapeError("frobMu: expected two vectors");
  if (v.leg(0) != w.leg(0)) throw ShapeError("frobMu: space mismatch");
  return hadamard(v, w);
}

double frobIota(const Tensor& v) {
  if (v.rank() != 1) throw ShapeError("frobIota: expected a vector");
  double sum = 0.0;
  for (double x : v.data()) sum += x;
  return sum;
}

Tensor frobZeta(double k, const Space& space) {
  return Tensor::vector(space, std::vector<double>(space.dim, k));
}

Spider::Spider(Space space, std::size_t inputs, std::size_t outputs)
    : space(std::move(space)), inputs(inputs), outputs(outputs) {
  if (inputs + outputs == 0) throw ShapeError("a spider needs at least one leg");
}

Tensor materializeSpider(const Spider& spider, std::size_t budget) {
  const std::size_t legs = spider.legCount();
  const std::size_t d = spider.space.dim;
  std::size_t entries = 1;
  for (std::size_t k = 0; k < legs; ++k) {
    if (entries > budget / d) {
      throw BudgetError("spider on '" + spider.space.name + "' with " + std::to_string(legs) +
                        " legs exceeds the materialization budget");
    }
    entries *= d;
  }
  if (entries > budget) throw BudgetError("spider exceeds the materialization budget");

  // The diagonal entry (i, i, ..., i) sits at flat offset i * (1 + d + ... + d^(legs-1)).
  std::size_t diagonalStride = 0;
  std::size_t power = 1;
  for (std::size_t k = 0; k < legs; ++k) {
    diagonalStride += power;
    power *= d;
  }
  std::vector<double> data(entries, 0.0);
  for (std::size_t i = 0; i < d; ++i) data[i * diagonalStride] = 1.0;
  return Tensor(std::vector<Space>(legs, spider.space), std::move(data));
}

}  // namespace discocat
