#include "discocat/tensor.hpp"

#include <algorithm>
#include <cmath>

#include "discocat/errors.hpp"

namespace discocat {

Space::Space(std::string name, std::size_t dim) : name(std::move(name)), dim(dim) {
  if (dim == 0) throw ShapeError("space '" + this->name + "' must have dimension >= 1");
}

std::size_t entryCount(const std::vector<Space>& legs) {
  std::size_t count = 1;
  for (const auto& leg : legs) count *= leg.dim;
  return count;
}

Tensor::Tensor() : data_{0.0} {}

Tensor::Tensor(std::vector<Space> legs, std::vector<double> data)
    : legs_(std::move(legs)), data_(std::move(data)) {
  if (data_.size() != entryCount(legs_)) {
    throw ShapeError("tensor data has " + std::to_string(data_.size()) + " entries, shape needs " +
                     std::to_string(entryCount(legs_)));
  }
  if (!std::all_of(data_.begin(), data_.end(), [](double x) { return std::isfinite(x); })) {
    throw NumericError("tensor entries must be finite");
  }
}

Tensor Tensor::scalar(double value) { return Tensor({}, {value}); }

Tensor Tensor::zeros(std::vector<Space> legs) {
  const std::size_t n = entryCount(legs);
  return Tensor(std::move(legs), std::vector<double>(n, 0.0));
}

Tensor Tensor::vector(const Space& space, std::vector<double> values) {
  return Tensor({space}, std::move(values));
}

Tensor Tensor::matrix(const Space& rows, const Space& cols, std::vector<double> rowMajor) {
  return Tensor({rows, cols}, std::move(rowMajor));
}

Tensor Tensor::basis(const Space& space, std::size_t index) {
  if (index >= space.dim) throw ShapeError("basis index out of range for space '" + space.name + "'");
  std::vector<double> values(space.dim, 0.0);
  values[index] = 1.0;
  return vector(space, std::move(values));
}

Tensor Tensor::identity(const Space& space) {
  std::vector<double> values(space.dim * space.dim, 0.0);
  for (std::size_t i = 0; i < space.dim; ++i) values[i * space.dim + i] = 1.0;
  return matrix(space, space, std::move(values));
}

std::vector<std::size_t> Tensor::dims() const {
  std::vector<std::size_t> out;
  out.reserve(legs_.size());
  for (const auto& leg : legs_) out.push_back(leg.dim);
  return out;
}

std::size_t Tensor::flatIndex(std::span<const std::size_t> index) const {
  if (index.size() != legs_.size()) throw ShapeError("index rank does not match tensor rank");
  std::size_t flat = 0;
  for (std::size_t k = 0; k < index.size(); ++k) {
    if (index[k] >= legs_[k].dim) throw ShapeError("index out of range");
    flat = flat * legs_[k].dim + index[k];
  }
  return flat;
}

double Tensor::at(std::span<const std::size_t> index) const { return data_[flatIndex(index)]; }

double Tensor::at(std::initializer_list<std::size_t> index) const {
  return at(std::span<const std::size_t>(index.begin(), index.size()));
}

double Tensor::value() const {
  if (!legs_.empty()) throw ShapeError("value() requires a rank-0 tensor");
  return data_.front();
}

double maxAbsDiff(const Tensor& a, const Tensor& b) {
  if (a.legs() != b.legs()) throw ShapeError("cannot compare tensors with different legs");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace discocat
