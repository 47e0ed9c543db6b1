#ifndef DISCOCAT_TENSOR_HPP_
#define DISCOCAT_TENSOR_HPP_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace discocat {

// A named real vector space with a fixed orthonormal basis. Adjoint spaces
// are identified with the space itself.
struct Space {
  std::string name;
  std::size_t dim = 1;

  Space() = default;
  Space(std::string name, std::size_t dim);

  bool operator==(const Space&) const = default;
};

// Dense row-major real tensor over an ordered list of spaces. Immutable once
// built; every entry is finite.
class Tensor {
 public:
  // Rank-0 tensor holding 0.
  Tensor();
  Tensor(std::vector<Space> legs, std::vector<double> data);

  static Tensor scalar(double value);
  static Tensor zeros(std::vector<Space> legs);
  static Tensor vector(const Space& space, std::vector<double> values);
  static Tensor matrix(const Space& rows, const Space& cols, std::vector<double> rowMajor);
  static Tensor basis(const Space& space, std::size_t index);
  static Tensor identity(const Space& space);

  std::size_t rank() const { return legs_.size(); }
  const std::vector<Space>& legs() const { return legs_; }
  const Space& leg(std::size_t i) const { return legs_[i]; }
  std::vector<std::size_t> dims() const;
  std::size_t size() const { return data_.size(); }
  std::span<const double> data() const { return data_; }

  double operator[](std::size_t flat) const { return data_[flat]; }
  double at(std::span<const std::size_t> index) const;
  double at(std::initializer_list<std::size_t> index) const;
  double value() const;  // rank-0 only

  std::size_t flatIndex(std::span<const std::size_t> index) const;

 private:
  std::vector<Space> legs_;
  std::vector<double> data_;
};

std::size_t entryCount(const std::vector<Space>& legs);

// Largest absolute entrywise difference; throws ShapeError on a leg mismatch.
double maxAbsDiff(const Tensor& a, const Tensor& b);

}  // namespace discocat

#endif  // DISCOCAT_TENSOR_HPP_
