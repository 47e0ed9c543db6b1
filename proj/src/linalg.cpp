#include "discocat/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "discocat/errors.hpp"

namespace discocat {

namespace {

void requireVector(const Tensor& v, const char* what) {
  if (v.rank() != 1) throw ShapeError(std::string(what) + ": expected a rank-1 tensor");
}

void requireMatrix(const Tensor& m, const char* what) {
  if (m.rank() != 2) throw ShapeError(std::string(what) + ": expected a rank-2 tensor");
}

void requireSameLegs(const Tensor& a, const Tensor& b, const char* what) {
  if (a.legs() != b.legs()) throw ShapeError(std::string(what) + ": leg mismatch");
}

std::vector<double> copyData(const Tensor& t) { return {t.data().begin(), t.data().end()}; }

}  // namespace

double dot(const Tensor& v, const Tensor& w) {
  requireVector(v, "dot");
  requireSameLegs(v, w, "dot");
  double sum = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) sum += v[i] * w[i];
  return sum;
}

double norm(const Tensor& v) { return std::sqrt(dot(v, v)); }

double cosine(const Tensor& v, const Tensor& w) {
  const double denom = norm(v) * norm(w);
  if (denom == 0.0) return 0.0;
  const double c = dot(v, w) / denom;
  return std::clamp(c, -1.0, 1.0);
}

Tensor add(const Tensor& a, const Tensor& b) {
  requireSameLegs(a, b, "add");
  auto data = copyData(a);
  for (std::size_t i = 0; i < data.size(); ++i) data[i] += b[i];
  return Tensor(a.legs(), std::move(data));
}

Tensor scale(const Tensor& a, double k) {
  auto data = copyData(a);
  for (double& x : data) x *= k;
  return Tensor(a.legs(), std::move(data));
}

Tensor hadamard(const Tensor& v, const Tensor& w) {
  requireSameLegs(v, w, "hadamard");
  auto data = copyData(v);
  for (std::size_t i = 0; i < data.size(); ++i) data[i] *= w[i];
  return Tensor(v.legs(), std::move(data));
}

Tensor outer(const Tensor& v, const Tensor& w) {
  requireVector(v, "outer");
  requireVector(w, "outer");
  std::vector<double> data(v.size() * w.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) data[i * w.size() + j] = v[i] * w[j];
  }
  return Tensor::matrix(v.leg(0), w.leg(0), std::move(data));
}

Tensor normalized(const Tensor& v) {
  const double n = norm(v);
  return n == 0.0 ? v : scale(v, 1.0 / n);
}

Tensor matVec(const Tensor& m, const Tensor& v) {
  requireMatrix(m, "matVec");
  requireVector(v, "matVec");
  if (m.leg(1) != v.leg(0)) throw ShapeError("matVec: column space does not match vector");
  const std::size_t rows = m.leg(0).dim;
  const std::size_t cols = m.leg(1).dim;
  std::vector<double> out(rows, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out[i] += m[i * cols + j] * v[j];
  }
  return Tensor::vector(m.leg(0), std::move(out));
}

Tensor vecMat(const Tensor& v, const Tensor& m) {
  requireMatrix(m, "vecMat");
  requireVector(v, "vecMat");
  if (m.leg(0) != v.leg(0)) throw ShapeError("vecMat: row space does not match vector");
  const std::size_t rows = m.leg(0).dim;
  const std::size_t cols = m.leg(1).dim;
  std::vector<double> out(cols, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out[j] += v[i] * m[i * cols + j];
  }
  return Tensor::vector(m.leg(1), std::move(out));
}

Tensor transpose(const Tensor& m) {
  requireMatrix(m, "transpose");
  const std::size_t rows = m.leg(0).dim;
  const std::size_t cols = m.leg(1).dim;
  std::vector<double> out(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out[j * rows + i] = m[i * cols + j];
  }
  return Tensor::matrix(m.leg(1), m.leg(0), std::move(out));
}

Tensor ones(const Space& space) { return Tensor::vector(space, std::vector<double>(space.dim, 1.0)); }

}  // namespace discocat
