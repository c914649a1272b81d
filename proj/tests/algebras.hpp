// Test-only builders for small Lie superalgebras used across suites.
#pragma once

#include "hcpair/liesuper.hpp"

namespace hcpair::testing {

inline Vec coords(const LieSuperAlgebra& g,
                  std::initializer_list<std::pair<std::size_t, long>> entries) {
  Vec v = vec_zero(g.dim(), g.field());
  for (auto& [i, c] : entries) v[i] = Scalar::of(c, g.field());
  return v;
}

/// sl2 as a purely even Lie superalgebra: [h,e] = 2e, [h,f] = -2f, [e,f] = h.
inline LieSuperAlgebra make_sl2(const Field& f = Field::rationals()) {
  LieSuperAlgebra g(f, {"h", "e", "f"}, {});
  auto set = [&](std::size_t i, std::size_t j,
                 std::initializer_list<std::pair<std::size_t, long>> val) {
    g.set_bracket(i, j, coords(g, val));
    Vec neg = coords(g, val);
    for (auto& x : neg) x = -x;
    g.set_bracket(j, i, neg);
  };
  set(0, 1, {{1, 2}});   // [h,e] = 2e
  set(0, 2, {{2, -2}});  // [h,f] = -2f
  set(1, 2, {{0, 1}});   // [e,f] = h
  return g;
}

/// osp(1|2)-type algebra assembled from the standard SL2 pair: even part
/// h,e,f as in sl2; odd part v1,v2 (row vectors) with
/// [v1,v1] = -2f, [v2,v2] = 2e, [v1,v2] = h, [v,x] = v x (row action).
inline LieSuperAlgebra make_osp12(const Field& f = Field::rationals()) {
  LieSuperAlgebra g(f, {"h", "e", "f"}, {"v1", "v2"});
  auto set = [&](std::size_t i, std::size_t j,
                 std::initializer_list<std::pair<std::size_t, long>> val,
                 bool odd_pair) {
    g.set_bracket(i, j, coords(g, val));
    if (i == j) return;
    Vec other = coords(g, val);
    if (!odd_pair)
      for (auto& x : other) x = -x;
    g.set_bracket(j, i, other);
  };
  // even-even
  set(0, 1, {{1, 2}}, false);
  set(0, 2, {{2, -2}}, false);
  set(1, 2, {{0, 1}}, false);
  // odd-odd (symmetric)
  set(3, 3, {{2, -2}}, true);  // [v1,v1] = -2f
  set(4, 4, {{1, 2}}, true);   // [v2,v2] = 2e
  set(3, 4, {{0, 1}}, true);   // [v1,v2] = h
  // odd-even: [v,x] = v <| x (row vector times matrix)
  set(3, 0, {{3, 1}}, false);   // [v1,h] = v1
  set(4, 0, {{4, -1}}, false);  // [v2,h] = -v2
  set(3, 1, {{4, 1}}, false);   // [v1,e] = v2
  set(4, 1, {}, false);         // [v2,e] = 0
  set(3, 2, {}, false);         // [v1,f] = 0
  set(4, 2, {{3, 1}}, false);   // [v2,f] = v1
  // 2-operation: v^<2> = [v,v]/2
  g.set_two_op(0, Vec{Scalar::zero(f), Scalar::zero(f), Scalar::of(-1, f)});
  g.set_two_op(1, Vec{Scalar::zero(f), Scalar::one(f), Scalar::zero(f)});
  return g;
}

/// Abelian superalgebra of signature (m|n) with zero 2-operation.
inline LieSuperAlgebra make_abelian(std::size_t m, std::size_t n,
                                    const Field& f = Field::rationals()) {
  std::vector<std::string> even, odd;
  for (std::size_t i = 0; i < m; ++i) even.push_back("x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < n; ++i) odd.push_back("v" + std::to_string(i + 1));
  return LieSuperAlgebra(f, even, odd);
}

}  // namespace hcpair::testing
