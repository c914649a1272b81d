#include "hcpair/poly.hpp"

namespace hcpair {

Poly Poly::constant(std::uint32_t nvars, const Scalar& c) {
  Poly p(nvars, c.field());
  p.insert_term(std::vector<std::uint32_t>(nvars, 0), c);
  return p;
}

Poly Poly::variable(std::uint32_t nvars, const Field& f, std::uint32_t i) {
  if (i >= nvars) throw error("variable index out of range");
  Poly p(nvars, f);
  std::vector<std::uint32_t> e(nvars, 0);
  e[i] = 1;
  p.insert_term(std::move(e), Scalar::one(f));
  return p;
}

void Poly::insert_term(std::vector<std::uint32_t> exps, const Scalar& c) {
  if (exps.size() != nvars_) throw error("exponent vector has wrong length");
  if (c.is_zero()) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(std::move(exps), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (auto& [e, c] : o.terms_) r.insert_term(e, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (auto& [e, c] : o.terms_) r.insert_term(e, -c);
  return r;
}

Poly Poly::operator-() const {
  Poly r(nvars_, field_);
  for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r(nvars_, field_);
  for (auto& [e1, c1] : terms_)
    for (auto& [e2, c2] : o.terms_) {
      std::vector<std::uint32_t> e = e1;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
      r.insert_term(std::move(e), c1 * c2);
    }
  return r;
}

Poly Poly::scale(const Scalar& c) const {
  Poly r(nvars_, field_);
  if (c.is_zero()) return r;
  for (auto& [e, x] : terms_) r.insert_term(e, x * c);
  return r;
}

bool Poly::operator==(const Poly& o) const {
  return nvars_ == o.nvars_ && terms_ == o.terms_;
}

Poly Poly::derivative(std::uint32_t var) const {
  Poly r(nvars_, field_);
  for (auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    std::vector<std::uint32_t> e2 = e;
    --e2[var];
    r.insert_term(std::move(e2), c * Scalar::of(static_cast<long>(e[var]),
                                                field_));
  }
  return r;
}

Scalar Poly::eval_scalar(const std::vector<Scalar>& point) const {
  if (point.size() != nvars_) throw error("evaluation point has wrong length");
  Scalar total = Scalar::zero(field_);
  for (auto& [e, c] : terms_) {
    Scalar v = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::uint32_t k = 0; k < e[i]; ++k) v *= point[i];
    total += v;
  }
  return total;
}

GrassmannElement Poly::eval_grassmann(
    const std::vector<GrassmannElement>& point,
    const GrassmannAlgebra& a) const {
  if (point.size() != nvars_) throw error("evaluation point has wrong length");
  GrassmannElement total(a);
  for (auto& [e, c] : terms_) {
    GrassmannElement v = GrassmannElement::constant(a, c);
    for (std::size_t i = 0; i < e.size() && !v.is_zero(); ++i)
      for (std::uint32_t k = 0; k < e[i]; ++k) v = v * point[i];
    total += v;
  }
  return total;
}

Laurent Laurent::constant(std::uint32_t nvars, const Scalar& c) {
  Laurent p(nvars, c.field());
  p.insert_term(std::vector<std::int32_t>(nvars, 0), c);
  return p;
}

Laurent Laurent::monomial(std::uint32_t nvars, const Field& f,
                          std::vector<std::int32_t> exps, const Scalar& c) {
  Laurent p(nvars, f);
  p.insert_term(std::move(exps), c);
  return p;
}

bool Laurent::is_one() const {
  return terms_.size() == 1 &&
         terms_.begin()->first == std::vector<std::int32_t>(nvars_, 0) &&
         terms_.begin()->second.is_one();
}

void Laurent::insert_term(std::vector<std::int32_t> exps, const Scalar& c) {
  if (exps.size() != nvars_) throw error("exponent vector has wrong length");
  if (c.is_zero()) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(std::move(exps), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  for (auto& [e, c] : o.terms_) r.insert_term(e, c);
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
  Laurent r = *this;
  for (auto& [e, c] : o.terms_) r.insert_term(e, -c);
  return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r(nvars_, field_);
  for (auto& [e1, c1] : terms_)
    for (auto& [e2, c2] : o.terms_) {
      std::vector<std::int32_t> e = e1;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
      r.insert_term(std::move(e), c1 * c2);
    }
  return r;
}

Laurent Laurent::scale(const Scalar& c) const {
  Laurent r(nvars_, field_);
  if (c.is_zero()) return r;
  for (auto& [e, x] : terms_) r.insert_term(e, x * c);
  return r;
}

bool Laurent::operator==(const Laurent& o) const {
  return nvars_ == o.nvars_ && terms_ == o.terms_;
}

Scalar Laurent::eval_scalar(const std::vector<Scalar>& point) const {
  if (point.size() != nvars_) throw error("evaluation point has wrong length");
  Scalar total = Scalar::zero(field_);
  for (auto& [e, c] : terms_) {
    Scalar v = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] >= 0) {
        for (std::int32_t k = 0; k < e[i]; ++k) v *= point[i];
      } else {
        Scalar inv = point[i].inverse();
        for (std::int32_t k = 0; k < -e[i]; ++k) v *= inv;
      }
    }
    total += v;
  }
  return total;
}

Laurent poly_eval_laurent(const Poly& p, const std::vector<Laurent>& point) {
  if (point.size() != p.nvars()) throw error("evaluation point has wrong length");
  std::uint32_t nparams = point.empty() ? 0 : point[0].nvars();
  Laurent total(nparams, p.field());
  for (auto& [e, c] : p.terms()) {
    Laurent v = Laurent::constant(nparams, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::uint32_t k = 0; k < e[i]; ++k) v = v * point[i];
    total = total + v;
  }
  return total;
}

Poly poly_det(const std::vector<std::vector<Poly>>& m) {
  std::size_t n = m.size();
  if (n == 0) throw error("det of empty matrix");
  if (n == 1) return m[0][0];
  const Field& f = m[0][0].field();
  std::uint32_t nvars = m[0][0].nvars();
  Poly total(nvars, f);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    Poly term = m[0][j] * poly_det(minor);
    total = (j % 2) ? total - term : total + term;
  }
  return total;
}

std::vector<std::vector<Poly>> poly_adjugate(
    const std::vector<std::vector<Poly>>& m) {
  std::size_t n = m.size();
  const Field& f = m[0][0].field();
  std::uint32_t nvars = m[0][0].nvars();
  std::vector<std::vector<Poly>> adj(n, std::vector<Poly>(n, Poly(nvars, f)));
  if (n == 1) {
    adj[0][0] = Poly::constant(nvars, Scalar::one(f));
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::vector<Poly>> minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<Poly> row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != j) row.push_back(m[r][c]);
        minor.push_back(std::move(row));
      }
      Poly cof = poly_det(minor);
      if ((i + j) % 2) cof = -cof;
      adj[j][i] = cof;  // transpose of the cofactor matrix
    }
  return adj;
}

}  // namespace hcpair
