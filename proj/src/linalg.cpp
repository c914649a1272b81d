#include "hcpair/linalg.hpp"

namespace hcpair {

Vec vec_zero(std::size_t n, const Field& f) {
  return Vec(n, Scalar::zero(f));
}

Mat mat_zero(std::size_t rows, std::size_t cols, const Field& f) {
  return Mat(rows, vec_zero(cols, f));
}

Mat mat_identity(std::size_t n, const Field& f) {
  Mat a = mat_zero(n, n, f);
  for (std::size_t i = 0; i < n; ++i) a[i][i] = Scalar::one(f);
  return a;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.empty() || b.empty()) return {};
  const Field& f = a[0][0].field();
  Mat r = mat_zero(a.size(), b[0].size(), f);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j)
        r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

Vec mat_apply(const Mat& a, const Vec& v) {
  Vec r;
  r.reserve(a.size());
  for (auto& row : a) {
    Scalar s = Scalar::zero(v.empty() ? row[0].field() : v[0].field());
    for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * v[j];
    r.push_back(s);
  }
  return r;
}

Mat mat_add(const Mat& a, const Mat& b) {
  Mat r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] += b[i][j];
  return r;
}

Mat mat_scale(const Mat& a, const Scalar& c) {
  Mat r = a;
  for (auto& row : r)
    for (auto& x : row) x *= c;
  return r;
}

Mat mat_transpose(const Mat& a) {
  if (a.empty()) return {};
  Mat r = mat_zero(a[0].size(), a.size(), a[0][0].field());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
  return r;
}

bool mat_is_zero(const Mat& a) {
  for (auto& row : a)
    for (auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

std::vector<std::size_t> rref(Mat& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!a[i][c].is_zero()) {
        pivot = i;
        break;
      }
    if (pivot == rows) continue;
    std::swap(a[r], a[pivot]);
    Scalar inv = a[r][c].inverse();
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Scalar factor = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= factor * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Mat a) { return rref(a).size(); }

Scalar det(Mat a) {
  if (a.empty()) throw error("det of empty matrix");
  const Field& f = a[0][0].field();
  std::size_t n = a.size();
  Scalar result = Scalar::one(f);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = n;
    for (std::size_t i = c; i < n; ++i)
      if (!a[i][c].is_zero()) {
        pivot = i;
        break;
      }
    if (pivot == n) return Scalar::zero(f);
    if (pivot != c) {
      std::swap(a[c], a[pivot]);
      result = -result;
    }
    result *= a[c][c];
    Scalar inv = a[c][c].inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      Scalar factor = a[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) a[i][j] -= factor * a[c][j];
    }
  }
  return result;
}

std::optional<Mat> mat_inverse(const Mat& a) {
  std::size_t n = a.size();
  if (n == 0) return Mat{};
  const Field& f = a[0][0].field();
  Mat work = a;
  Mat inv = mat_identity(n, f);
  for (std::size_t i = 0; i < n; ++i)
    work[i].insert(work[i].end(), inv[i].begin(), inv[i].end());
  auto pivots = rref(work);
  // invertible iff the pivots are exactly the first n columns
  if (pivots.size() < n) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    if (pivots[i] != i) return std::nullopt;
  Mat r = mat_zero(n, n, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r[i][j] = work[i][n + j];
  return r;
}

std::vector<Vec> nullspace(const Mat& a) {
  if (a.empty()) return {};
  const Field& f = a[0][0].field();
  std::size_t cols = a[0].size();
  Mat work = a;
  auto pivots = rref(work);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v = vec_zero(cols, f);
    v[free] = Scalar::one(f);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -work[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  if (a.empty()) {
    for (auto& x : b)
      if (!x.is_zero()) return std::nullopt;
    return Vec{};
  }
  const Field& f = a[0][0].field();
  std::size_t cols = a[0].size();
  Mat work = a;
  for (std::size_t i = 0; i < a.size(); ++i) work[i].push_back(b[i]);
  auto pivots = rref(work);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  Vec x = vec_zero(cols, f);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = work[i][cols];
  return x;
}

std::optional<Vec> coords_in_span(const std::vector<Vec>& basis, const Vec& v) {
  if (basis.empty()) {
    for (auto& x : v)
      if (!x.is_zero()) return std::nullopt;
    return Vec{};
  }
  return solve(mat_transpose(basis), v);
}

bool in_span(const std::vector<Vec>& basis, const Vec& v) {
  return coords_in_span(basis, v).has_value();
}

std::vector<Vec> row_basis(std::vector<Vec> rows, std::size_t ncols,
                           const Field& f) {
  if (rows.empty()) return {};
  Mat work = std::move(rows);
  auto pivots = rref(work);
  work.resize(pivots.size(), vec_zero(ncols, f));
  return work;
}

std::vector<Vec> span_intersection(const std::vector<Vec>& a,
                                   const std::vector<Vec>& b, std::size_t n,
                                   const Field& f) {
  if (a.empty() || b.empty()) return {};
  // (x, y) with x^T a = y^T b; columns of the system are the coefficients.
  Mat system = mat_zero(n, a.size() + b.size(), f);
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) system[i][j] = a[j][i];
  for (std::size_t j = 0; j < b.size(); ++j)
    for (std::size_t i = 0; i < n; ++i)
      system[i][a.size() + j] = -b[j][i];
  std::vector<Vec> result;
  for (auto& sol : nullspace(system)) {
    Vec v = vec_zero(n, f);
    for (std::size_t j = 0; j < a.size(); ++j)
      for (std::size_t i = 0; i < n; ++i) v[i] += sol[j] * a[j][i];
    result.push_back(std::move(v));
  }
  return row_basis(std::move(result), n, f);
}

}  // namespace hcpair
