#include "hcpair/duality.hpp"

#include <bit>

namespace hcpair {

namespace {

Scalar binom2_sign(std::size_t n, const Field& f) {
  // (-1)^{C(n,2)} with C(0,2) = C(1,2) = 0
  std::size_t c = n < 2 ? 0 : n * (n - 1) / 2;
  return (c % 2) ? -Scalar::one(f) : Scalar::one(f);
}

Vec mul_coords(const HopfData& h, const Vec& u, const Vec& w) {
  Vec r = vec_zero(h.dim(), h.field);
  for (std::size_t i = 0; i < h.dim(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < h.dim(); ++j) {
      if (w[j].is_zero()) continue;
      Scalar c = u[i] * w[j];
      const Vec& p = h.product[i][j];
      for (std::size_t k = 0; k < h.dim(); ++k)
        if (!p[k].is_zero()) r[k] += c * p[k];
    }
  }
  return r;
}

Vec basis_vec(const HopfData& h, std::size_t i) {
  Vec v = vec_zero(h.dim(), h.field);
  v[i] = Scalar::one(h.field);
  return v;
}

// sparse accumulation that never default-constructs a Scalar
template <class M, class K>
void map_add(M& m, const K& key, const Scalar& v) {
  if (v.is_zero()) return;
  auto it = m.find(key);
  if (it == m.end()) {
    m.emplace(key, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) m.erase(it);
  }
}

}  // namespace

HopfData exterior_hopf(std::uint32_t dim, const Field& f) {
  if (dim > 16) throw error("exterior dimension too large");
  HopfData h;
  h.field = f;
  std::size_t n = 1ull << dim;
  h.parities.resize(n);
  h.names.resize(n);
  for (std::size_t s = 0; s < n; ++s) {
    h.parities[s] = std::popcount(s) & 1;
    std::string name;
    for (std::uint32_t b = 0; b < dim; ++b)
      if (s >> b & 1) name += "w" + std::to_string(b + 1);
    h.names[s] = name.empty() ? "1" : name;
  }
  h.product.assign(n, std::vector<Vec>(n, vec_zero(n, f)));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      if (s & t) continue;
      h.product[s][t][s | t] =
          merge_sign(s, t) < 0 ? -Scalar::one(f) : Scalar::one(f);
    }
  h.coproduct.resize(n);
  for (std::size_t s = 0; s < n; ++s) {
    // multiply out the primitives (w (x) 1 + 1 (x) w) in ascending order
    std::map<std::pair<std::uint64_t, std::uint64_t>, Scalar> tensor;
    tensor.emplace(std::make_pair(0ull, 0ull), Scalar::one(f));
    for (std::uint32_t b = 0; b < dim; ++b) {
      if (!(s >> b & 1)) continue;
      std::map<std::pair<std::uint64_t, std::uint64_t>, Scalar> next;
      for (auto& [ab, c] : tensor) {
        // (A (x) B)(w_b (x) 1) = (-1)^{|B|} A w_b (x) B
        Scalar left = (std::popcount(ab.second) & 1) ? -c : c;
        map_add(next, std::make_pair(ab.first | (1ull << b), ab.second), left);
        // (A (x) B)(1 (x) w_b) = A (x) B w_b
        map_add(next, std::make_pair(ab.first, ab.second | (1ull << b)), c);
      }
      tensor = std::move(next);
    }
    for (auto& [ab, c] : tensor)
      if (!c.is_zero()) h.coproduct[s].emplace_back(ab.first, ab.second, c);
  }
  h.unit = basis_vec(h, 0);
  h.counit = vec_zero(n, f);
  h.counit[0] = Scalar::one(f);
  h.antipode.resize(n);
  for (std::size_t s = 0; s < n; ++s) {
    // S(w_S) = (-1)^{|S|} w_S: the anti-map reversal signs cancel against
    // re-sorting the reversed wedge
    h.antipode[s] = vec_zero(n, f);
    h.antipode[s][s] =
        (std::popcount(s) & 1) ? -Scalar::one(f) : Scalar::one(f);
  }
  return h;
}

Scalar ext_pairing(const ExteriorElement& xi, const ExteriorElement& omega,
                   PairingConvention conv) {
  if (xi.algebra().n != omega.algebra().n) throw error("dimension mismatch");
  const Field& f = xi.algebra().field;
  Scalar total = Scalar::zero(f);
  for (auto& [s, c] : xi.terms()) {
    Scalar d = omega.coefficient(s);
    if (d.is_zero()) continue;
    Scalar v = c * d;
    if (conv == PairingConvention::deformed)
      v = v * binom2_sign(std::popcount(s), f);
    total += v;
  }
  return total;
}

Report check_hopf_pairing(const HopfData& l, const HopfData& h,
                          const Mat& pairing, PairingConvention conv) {
  Report report;
  const Field& f = l.field;
  std::size_t nl = l.dim(), nh = h.dim();
  auto P = [&](std::size_t i, std::size_t a) { return pairing[i][a]; };

  // <x_i, h_a h_b> = <Delta x_i, h_a (x) h_b>
  for (std::size_t i = 0; i < nl; ++i)
    for (std::size_t a = 0; a < nh; ++a)
      for (std::size_t b = 0; b < nh; ++b) {
        Scalar lhs = Scalar::zero(f);
        const Vec& prod = h.product[a][b];
        for (std::size_t c = 0; c < nh; ++c)
          if (!prod[c].is_zero()) lhs += prod[c] * P(i, c);
        Scalar rhs = Scalar::zero(f);
        for (auto& [j, k, s] : l.coproduct[i]) {
          Scalar v = s * P(j, a) * P(k, b);
          if (conv == PairingConvention::deformed && l.parities[k] &&
              h.parities[a])
            v = -v;
          rhs += v;
        }
        if (lhs != rhs)
          report.fail("pairing axiom <x, hk> fails at (" + l.names[i] + "; " +
                      h.names[a] + "," + h.names[b] + ")");
      }

  // <x_i x_j, h_a> = <x_i (x) x_j, Delta h_a>
  for (std::size_t i = 0; i < nl; ++i)
    for (std::size_t j = 0; j < nl; ++j)
      for (std::size_t a = 0; a < nh; ++a) {
        Scalar lhs = Scalar::zero(f);
        const Vec& prod = l.product[i][j];
        for (std::size_t c = 0; c < nl; ++c)
          if (!prod[c].is_zero()) lhs += prod[c] * P(c, a);
        Scalar rhs = Scalar::zero(f);
        for (auto& [b, c, s] : h.coproduct[a]) {
          Scalar v = s * P(i, b) * P(j, c);
          if (conv == PairingConvention::deformed && l.parities[j] &&
              h.parities[b])
            v = -v;
          rhs += v;
        }
        if (lhs != rhs)
          report.fail("pairing axiom <xy, h> fails at (" + l.names[i] + "," +
                      l.names[j] + "; " + h.names[a] + ")");
      }

  // <x, 1> = eps(x) and <1, h> = eps(h)
  for (std::size_t i = 0; i < nl; ++i) {
    Scalar lhs = Scalar::zero(f);
    for (std::size_t c = 0; c < nh; ++c)
      if (!h.unit[c].is_zero()) lhs += h.unit[c] * P(i, c);
    if (lhs != l.counit[i])
      report.fail("pairing axiom <x, 1> fails at " + l.names[i]);
  }
  for (std::size_t a = 0; a < nh; ++a) {
    Scalar lhs = Scalar::zero(f);
    for (std::size_t c = 0; c < nl; ++c)
      if (!l.unit[c].is_zero()) lhs += l.unit[c] * P(c, a);
    if (lhs != h.counit[a])
      report.fail("pairing axiom <1, h> fails at " + h.names[a]);
  }

  // <S(x), h> = <x, S(h)>
  for (std::size_t i = 0; i < nl; ++i)
    for (std::size_t a = 0; a < nh; ++a) {
      Scalar lhs = Scalar::zero(f), rhs = Scalar::zero(f);
      for (std::size_t c = 0; c < nl; ++c)
        if (!l.antipode[i][c].is_zero()) lhs += l.antipode[i][c] * P(c, a);
      for (std::size_t c = 0; c < nh; ++c)
        if (!h.antipode[a][c].is_zero()) rhs += h.antipode[a][c] * P(i, c);
      if (lhs != rhs)
        report.fail("antipode compatibility fails at (" + l.names[i] + "; " +
                    h.names[a] + ")");
    }
  return report;
}

Report check_hopf_axioms(const HopfData& h) {
  Report report;
  const Field& f = h.field;
  std::size_t n = h.dim();

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      int target = (h.parities[i] + h.parities[j]) & 1;
      for (std::size_t k = 0; k < n; ++k)
        if (!h.product[i][j][k].is_zero() && h.parities[k] != target)
          report.fail("product violates parity at (" + h.names[i] + "," +
                      h.names[j] + ")");
    }
    for (auto& [j, k, s] : h.coproduct[i])
      if (((h.parities[j] + h.parities[k]) & 1) != h.parities[i])
        report.fail("coproduct violates parity at " + h.names[i]);
    if (h.parities[i] && !h.counit[i].is_zero())
      report.fail("counit does not kill the odd element " + h.names[i]);
    for (std::size_t k = 0; k < n; ++k)
      if (!h.antipode[i][k].is_zero() && h.parities[k] != h.parities[i])
        report.fail("antipode violates parity at " + h.names[i]);
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (mul_coords(h, h.product[i][j], basis_vec(h, k)) !=
            mul_coords(h, basis_vec(h, i), h.product[j][k]))
          report.fail("associativity fails at (" + h.names[i] + "," +
                      h.names[j] + "," + h.names[k] + ")");
  for (std::size_t i = 0; i < n; ++i)
    if (mul_coords(h, h.unit, basis_vec(h, i)) != basis_vec(h, i) ||
        mul_coords(h, basis_vec(h, i), h.unit) != basis_vec(h, i))
      report.fail("unit fails at " + h.names[i]);

  for (std::size_t i = 0; i < n; ++i) {
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Scalar> left,
        right;
    for (auto& [j, k, s] : h.coproduct[i]) {
      for (auto& [a, b, t] : h.coproduct[j])
        map_add(left, std::make_tuple(a, b, k), s * t);
      for (auto& [a, b, t] : h.coproduct[k])
        map_add(right, std::make_tuple(j, a, b), s * t);
    }
    if (left != right) report.fail("coassociativity fails at " + h.names[i]);
  }

  for (std::size_t i = 0; i < n; ++i) {
    Vec lhs = vec_zero(n, f), rhs = vec_zero(n, f);
    for (auto& [j, k, s] : h.coproduct[i]) {
      lhs[k] += s * h.counit[j];
      rhs[j] += s * h.counit[k];
    }
    if (lhs != basis_vec(h, i) || rhs != basis_vec(h, i))
      report.fail("counit fails at " + h.names[i]);
  }

  // Delta(xy) = Delta(x) Delta(y) with (a (x) b)(c (x) d) =
  // (-1)^{|b||c|} ac (x) bd
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::map<std::pair<std::size_t, std::size_t>, Scalar> lhs, rhs;
      const Vec& prod = h.product[x][y];
      for (std::size_t i = 0; i < n; ++i) {
        if (prod[i].is_zero()) continue;
        for (auto& [j, k, s] : h.coproduct[i])
          map_add(lhs, std::make_pair(j, k), prod[i] * s);
      }
      for (auto& [a, b, s] : h.coproduct[x])
        for (auto& [c, d, t] : h.coproduct[y]) {
          Scalar v = s * t;
          if (h.parities[b] && h.parities[c]) v = -v;
          const Vec& pac = h.product[a][c];
          const Vec& pbd = h.product[b][d];
          for (std::size_t p = 0; p < n; ++p) {
            if (pac[p].is_zero()) continue;
            for (std::size_t q = 0; q < n; ++q) {
              if (pbd[q].is_zero()) continue;
              map_add(rhs, std::make_pair(p, q), v * pac[p] * pbd[q]);
            }
          }
        }
      if (lhs != rhs)
        report.fail("bialgebra compatibility fails at (" + h.names[x] + "," +
                    h.names[y] + ")");
    }

  for (std::size_t i = 0; i < n; ++i) {
    Vec lhs = vec_zero(n, f), rhs = vec_zero(n, f);
    for (auto& [j, k, s] : h.coproduct[i]) {
      Vec t1 = mul_coords(h, h.antipode[j], basis_vec(h, k));
      Vec t2 = mul_coords(h, basis_vec(h, j), h.antipode[k]);
      for (std::size_t c = 0; c < n; ++c) {
        lhs[c] += s * t1[c];
        rhs[c] += s * t2[c];
      }
    }
    Vec expect = h.unit;
    for (auto& x : expect) x *= h.counit[i];
    if (lhs != expect || rhs != expect)
      report.fail("antipode identity fails at " + h.names[i]);
  }
  return report;
}

HopfData sigma_deform_hopf(const HopfData& h) {
  HopfData r = h;
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = 0; j < h.dim(); ++j)
      if (h.parities[i] && h.parities[j])
        for (auto& x : r.product[i][j]) x = -x;
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (auto& [j, k, s] : r.coproduct[i])
      if (h.parities[j] && h.parities[k]) s = -s;
  return r;
}

HopfData dual_hopf(const HopfData& h, PairingConvention conv) {
  std::size_t n = h.dim();
  const Field& f = h.field;
  HopfData d;
  d.field = f;
  d.parities = h.parities;
  d.names.reserve(n);
  for (auto& name : h.names) d.names.push_back(name + "*");
  bool deformed = conv == PairingConvention::deformed;

  d.product.assign(n, std::vector<Vec>(n, vec_zero(n, f)));
  for (std::size_t l = 0; l < n; ++l)
    for (auto& [a, b, s] : h.coproduct[l]) {
      Scalar v = s;
      if (deformed && h.parities[a] && h.parities[b]) v = -v;
      d.product[a][b][l] += v;
    }

  d.coproduct.resize(n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Scalar c = h.product[i][j][l];
        if (c.is_zero()) continue;
        if (deformed && h.parities[i] && h.parities[j]) c = -c;
        d.coproduct[l].emplace_back(i, j, c);
      }

  d.unit = h.counit;
  d.counit = h.unit;
  d.antipode.assign(n, vec_zero(n, f));
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t i = 0; i < n; ++i) d.antipode[l][i] = h.antipode[i][l];
  return d;
}

Report nu_isomorphism(const HopfData& h) {
  auto root = sqrt_minus_one(h.field);
  if (!root) throw error("field lacks a square root of -1");
  Report report;
  const Field& f = h.field;
  std::size_t n = h.dim();
  auto nu = [&](int parity) { return parity ? *root : Scalar::one(f); };
  HopfData s = sigma_deform_hopf(h);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs = s.product[i][j];
      for (std::size_t k = 0; k < n; ++k) lhs[k] *= nu(h.parities[k]);
      Vec rhs = h.product[i][j];
      Scalar c = nu(h.parities[i]) * nu(h.parities[j]);
      for (std::size_t k = 0; k < n; ++k) rhs[k] *= c;
      if (lhs != rhs)
        report.fail("nu fails multiplicativity at (" + h.names[i] + "," +
                    h.names[j] + ")");
    }

  for (std::size_t l = 0; l < n; ++l) {
    std::map<std::pair<std::size_t, std::size_t>, Scalar> lhs, rhs;
    for (auto& [j, k, c] : s.coproduct[l])
      map_add(lhs, std::make_pair(j, k),
              c * nu(h.parities[j]) * nu(h.parities[k]));
    for (auto& [j, k, c] : h.coproduct[l])
      map_add(rhs, std::make_pair(j, k), c * nu(h.parities[l]));
    if (lhs != rhs) report.fail("nu fails comultiplicativity at " + h.names[l]);
    if (h.counit[l] * nu(h.parities[l]) != h.counit[l])
      report.fail("nu fails the counit at " + h.names[l]);
    Vec sa = s.antipode[l];
    for (std::size_t k = 0; k < n; ++k) sa[k] *= nu(h.parities[k]);
    Vec ha = h.antipode[l];
    for (std::size_t k = 0; k < n; ++k) ha[k] *= nu(h.parities[l]);
    if (sa != ha) report.fail("nu fails the antipode at " + h.names[l]);
  }
  return report;
}

Mat ext_gram_matrix(std::uint32_t dim, const Field& f,
                    PairingConvention conv) {
  std::size_t n = 1ull << dim;
  Mat g = mat_zero(n, n, f);
  GrassmannAlgebra a(dim, f);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      g[s][t] = ext_pairing(GrassmannElement::term(a, s, Scalar::one(f)),
                            GrassmannElement::term(a, t, Scalar::one(f)), conv);
  return g;
}

ExtAElement ext_a_mul(const ExtAElement& x, const ExtAElement& y,
                      const GrassmannAlgebra& a) {
  ExtAElement r;
  for (auto& [s, c] : x) {
    bool s_odd = std::popcount(s) & 1;
    for (auto& [t, d] : y) {
      if (s & t) continue;
      GrassmannElement crossed = s_odd ? d.even_part() - d.odd_part() : d;
      GrassmannElement coeff = c * crossed;
      if (merge_sign(s, t) < 0) coeff = -coeff;
      if (coeff.is_zero()) continue;
      auto it = r.find(s | t);
      if (it == r.end()) {
        r.emplace(s | t, coeff);
      } else {
        it->second += coeff;
        if (it->second.is_zero()) r.erase(it);
      }
    }
  }
  return r;
}

GrassmannElement ext_a_pair_basis(const ExtAElement& g, std::uint64_t wedge,
                                  PairingConvention conv,
                                  const GrassmannAlgebra& a) {
  auto it = g.find(wedge);
  if (it == g.end()) return GrassmannElement::zero(a);
  GrassmannElement v = it->second;
  std::size_t k = std::popcount(wedge);
  if (conv == PairingConvention::deformed && k >= 2 && (k * (k - 1) / 2) % 2)
    v = -v;
  return v;
}

}  // namespace hcpair
