#pragma once

#include <optional>
#include <vector>

#include "hcpair/scalar.hpp"

namespace hcpair {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;  // row-major

Vec vec_zero(std::size_t n, const Field& f);
Mat mat_zero(std::size_t rows, std::size_t cols, const Field& f);
Mat mat_identity(std::size_t n, const Field& f);
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_apply(const Mat& a, const Vec& v);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_scale(const Mat& a, const Scalar& c);
Mat mat_transpose(const Mat& a);
bool mat_is_zero(const Mat& a);

/// In-place reduced row echelon form; returns pivot column indices.
std::vector<std::size_t> rref(Mat& a);

std::size_t rank(Mat a);
Scalar det(Mat a);
std::optional<Mat> mat_inverse(const Mat& a);

/// Basis of { x : a x = 0 }.
std::vector<Vec> nullspace(const Mat& a);

/// One solution of a x = b, if consistent.
std::optional<Vec> solve(const Mat& a, const Vec& b);

/// Coordinates of v over the given row vectors, if v lies in their span.
std::optional<Vec> coords_in_span(const std::vector<Vec>& basis, const Vec& v);

bool in_span(const std::vector<Vec>& basis, const Vec& v);

/// Row basis of the span of the given vectors (rref, zero rows dropped).
std::vector<Vec> row_basis(std::vector<Vec> rows, std::size_t ncols,
                           const Field& f);

/// Basis of the intersection of two row spans inside k^n.
std::vector<Vec> span_intersection(const std::vector<Vec>& a,
                                   const std::vector<Vec>& b, std::size_t n,
                                   const Field& f);

}  // namespace hcpair
