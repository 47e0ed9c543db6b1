#ifndef DISCOCAT_LINALG_HPP_
#define DISCOCAT_LINALG_HPP_

#include "discocat/tensor.hpp"

namespace discocat {

// Small dense helpers over rank-1 and rank-2 tensors. All of them check legs
// and throw ShapeError on mismatch.

double dot(const Tensor& v, const Tensor& w);
double norm(const Tensor& v);
// <v,w> / (|v||w|), defined as 0 when either vector is zero.
double cosine(const Tensor& v, const Tensor& w);

Tensor add(const Tensor& a, const Tensor& b);
Tensor scale(const Tensor& a, double k);
Tensor hadamard(const Tensor& v, const Tensor& w);
Tensor outer(const Tensor& v, const Tensor& w);
Tensor normalized(const Tensor& v);  // zero vector stays zero

// m x v, and the row-vector product v^T x m.
Tensor matVec(const Tensor& m, const Tensor& v);
Tensor vecMat(const Tensor& v, const Tensor& m);
Tensor transpose(const Tensor& m);

Tensor ones(const Space& space);

}  // namespace discocat

#endif  // DISCOCAT_LINALG_HPP_
