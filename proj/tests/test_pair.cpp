#include <doctest.h>

#include <random>

#include "hcpair/fixture.hpp"

using namespace hcpair;

namespace {

FixtureDocument load(const std::string& name) {
  return load_bundled_fixture(HCPAIR_FIXTURE_DIR, name);
}

const SubPair& subpair(const HCPair& pair, const std::string& name) {
  for (auto& s : pair.subpairs)
    if (s.name == name) return s;
  throw error("no such sub-pair: " + name);
}

std::vector<Vec> unit_rows(std::size_t n, const Field& f,
                           std::initializer_list<std::size_t> idx) {
  std::vector<Vec> rows;
  for (auto i : idx) {
    Vec e = vec_zero(n, f);
    e[i] = Scalar::one(f);
    rows.push_back(std::move(e));
  }
  return rows;
}

bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b,
               std::size_t n, const Field& f) {
  return row_basis(a, n, f) == row_basis(b, n, f);
}

bool span_contains(const std::vector<Vec>& big, const std::vector<Vec>& small) {
  for (auto& v : small)
    if (!in_span(big, v)) return false;
  return true;
}

}  // namespace

TEST_CASE("assemble_lie matches the declared constants on every fixture") {
  for (auto& name : bundled_fixture_names()) {
    CAPTURE(name);
    auto doc = load(name);
    LieSuperAlgebra lie = assemble_lie(doc.pair);
    CHECK(check_lie_axioms(lie).ok());
    if (doc.declared_lie) {
      for (std::size_t i = 0; i < lie.dim(); ++i)
        for (std::size_t j = 0; j < lie.dim(); ++j)
          CHECK(lie.bracket_basis(i, j) ==
                doc.declared_lie->bracket_basis(i, j));
    }
  }
}

TEST_CASE("a (G2)-violating bracket fails assembly") {
  auto doc = load("osp12");
  HCPair bad = doc.pair;
  // [v1,v1] := 2e makes v1 <| [v1,v1] = 2 v2 nonzero
  bad.odd_bracket[0][0] = {Scalar::zero(bad.group.field),
                           Scalar::of(2, bad.group.field),
                           Scalar::zero(bad.group.field)};
  CHECK_THROWS_AS(assemble_lie(bad), error);
  std::mt19937_64 rng(5);
  CHECK(!check_pair(bad, rng).ok());
}

TEST_CASE("pair axioms (G1)-(G2) and equivariance") {
  for (auto& name : bundled_fixture_names()) {
    CAPTURE(name);
    auto doc = load(name);
    std::mt19937_64 rng(7);
    CHECK(check_pair(doc.pair, rng).ok());
  }
  // (G1) sensitivity
  auto doc = load("osp12");
  HCPair bad = doc.pair;
  bad.odd_bracket[0][1][0] += Scalar::one(bad.group.field);
  std::mt19937_64 rng(7);
  auto report = check_pair(bad, rng);
  bool g1 = false;
  for (auto& f : report.failures) g1 |= f.find("(G1)") != std::string::npos;
  CHECK(g1);
}

TEST_CASE("sub-pair conditions (H1)-(H2)") {
  auto doc = load("osp12");
  std::mt19937_64 rng(9);
  for (auto& sub : doc.pair.subpairs) {
    CAPTURE(sub.name);
    CHECK(check_subpair(doc.pair, sub, rng).ok());
  }
  SUBCASE("(H1) fails when W is not stable") {
    SubPair bad = subpair(doc.pair, "borel");
    bad.w_basis = unit_rows(2, doc.pair.group.field, {0});  // span(v1)
    auto report = check_subpair(doc.pair, bad, rng);
    bool h1 = false;
    for (auto& f : report.failures) h1 |= f.find("(H1)") != std::string::npos;
    CHECK(h1);
  }
  SUBCASE("(H2) fails when the bracket escapes Lie(H)") {
    SubPair bad = subpair(doc.pair, "borel");
    bad.lie_h = {doc.pair.group.lie_basis[0]};  // span(h) only
    auto report = check_subpair(doc.pair, bad, rng);
    bool h2 = false;
    for (auto& f : report.failures) h2 |= f.find("(H2)") != std::string::npos;
    CHECK(h2);
  }
}

TEST_CASE("morphism checks (G3)-(G4)") {
  auto torus = load("torus");
  const MatrixGroup& g = torus.pair.group;
  const Field& f = g.field;

  auto identity_morphism = [&]() {
    GroupMorphism phi;
    phi.source = &g;
    phi.target = &g;
    for (std::uint32_t r = 0; r < g.m; ++r) {
      std::vector<Poly> row;
      for (std::uint32_t c = 0; c < g.m; ++c)
        row.push_back(g.coordinate(g.var_entry(r, c)));
      phi.matrix.push_back(std::move(row));
    }
    phi.d_image = g.coordinate(g.var_d());
    return phi;
  };

  SUBCASE("identity morphism passes") {
    Mat psi = mat_identity(2, f);
    std::mt19937_64 rng(15);
    CHECK(check_morphism(torus.pair, torus.pair, identity_morphism(), psi, rng)
              .ok());
  }
  SUBCASE("the coordinate swap with swapped odd map passes") {
    GroupMorphism phi;
    phi.source = &g;
    phi.target = &g;
    phi.matrix = {{g.coordinate(g.var_entry(1, 1)),
                   g.coordinate(g.var_entry(1, 0))},
                  {g.coordinate(g.var_entry(0, 1)),
                   g.coordinate(g.var_entry(0, 0))}};
    phi.d_image = g.coordinate(g.var_d());
    Mat psi = mat_zero(2, 2, f);
    psi[0][1] = Scalar::one(f);
    psi[1][0] = Scalar::one(f);
    std::mt19937_64 rng(16);
    CHECK(check_morphism(torus.pair, torus.pair, phi, psi, rng).ok());
  }
  SUBCASE("scaling the odd map breaks (G4) when the bracket is nonzero") {
    auto osp = load("osp12");
    GroupMorphism phi;
    phi.source = &osp.pair.group;
    phi.target = &osp.pair.group;
    for (std::uint32_t r = 0; r < 2; ++r) {
      std::vector<Poly> row;
      for (std::uint32_t c = 0; c < 2; ++c)
        row.push_back(osp.pair.group.coordinate(osp.pair.group.var_entry(r, c)));
      phi.matrix.push_back(std::move(row));
    }
    phi.d_image = osp.pair.group.coordinate(osp.pair.group.var_d());
    Mat psi = mat_scale(mat_identity(2, f), Scalar::of(2, f));
    std::mt19937_64 rng(17);
    auto report = check_morphism(osp.pair, osp.pair, phi, psi, rng);
    bool g4 = false;
    for (auto& x : report.failures) g4 |= x.find("(G4)") != std::string::npos;
    CHECK(g4);
  }
}

TEST_CASE("inv_submodule") {
  const Field f = Field::rationals();
  SUBCASE("H = unit, W = 0 gives all of V") {
    auto doc = load("osp12");
    auto inv = inv_submodule(doc.pair, subpair(doc.pair, "unit"), {});
    CHECK(inv.size() == 2);
  }
  SUBCASE("torus acting with distinct characters, W = 0 gives 0") {
    auto doc = load("torus");
    auto inv = inv_submodule(doc.pair, subpair(doc.pair, "line"), {});
    CHECK(inv.empty());
  }
  SUBCASE("W = V is vacuous") {
    auto doc = load("torus");
    auto all = unit_rows(2, f, {0, 1});
    auto inv = inv_submodule(doc.pair, subpair(doc.pair, "line"), all);
    CHECK(same_span(inv, all, 2, f));
  }
  SUBCASE("torus line: W itself is invariant mod W") {
    auto doc = load("torus");
    auto w = unit_rows(2, f, {0});
    auto inv = inv_submodule(doc.pair, subpair(doc.pair, "line"), w);
    CHECK(same_span(inv, w, 2, f));
  }
  SUBCASE("largest-ness certificate on the borel sub-pair") {
    auto doc = load("osp12");
    const SubPair& borel = subpair(doc.pair, "borel");
    auto inv = inv_submodule(doc.pair, borel, borel.w_basis);
    CHECK(same_span(inv, borel.w_basis, 2, f));
    // v1 lies outside: its coaction row minus the identity has a non-W
    // coefficient that is a nonzero Laurent polynomial on the chart
    std::vector<Laurent> coords;
    for (auto& r : borel.param.matrix)
      for (auto& e : r) coords.push_back(e);
    coords.push_back(borel.param.d);
    Laurent c11 = poly_eval_laurent(doc.pair.rho[0][0], coords);
    Laurent one = Laurent::constant(2, Scalar::one(f));
    CHECK(!(c11 - one).is_zero());
  }
  SUBCASE("finite point list: mu2 acts trivially on the weight-2 line") {
    auto doc = load("glq");
    auto inv = inv_submodule(doc.pair, subpair(doc.pair, "mu2"), {});
    CHECK(inv.size() == 1);
  }
}

TEST_CASE("transporter") {
  auto doc = load("osp12");
  const Field& f = doc.pair.group.field;
  auto all = unit_rows(2, f, {0, 1});
  SUBCASE("L = Lie(G) gives V") {
    auto t = transporter(doc.pair, doc.pair.group.lie_basis, all);
    CHECK(same_span(t, all, 2, f));
  }
  SUBCASE("L = 0, W = V gives 0 by nondegeneracy") {
    auto t = transporter(doc.pair, {}, all);
    CHECK(t.empty());
  }
  SUBCASE("W = 0 gives V") {
    auto t = transporter(doc.pair, {}, {});
    CHECK(same_span(t, all, 2, f));
  }
}

TEST_CASE("normalizer and centralizer pairs") {
  const Field f = Field::rationals();

  SUBCASE("whole sub-pair gives everything") {
    auto doc = load("osp12");
    auto out = normalizer_pair(doc.pair, doc.pair.whole_subpair());
    CHECK(out.odd_part.size() == 2);
    CHECK(out.lie_part.size() == 3);
  }
  SUBCASE("unit sub-pair gives the whole pair") {
    auto doc = load("osp12");
    auto out = normalizer_pair(doc.pair, subpair(doc.pair, "unit"));
    CHECK(out.odd_part.size() == 2);
    CHECK(out.lie_part.size() == 3);
    auto cent = centralizer_pair(doc.pair, subpair(doc.pair, "unit"));
    CHECK(cent.odd_part.size() == 2);
    CHECK(cent.lie_part.size() == 3);
  }
  SUBCASE("borel: odd part span(v2), Lie part span(h,e)") {
    auto doc = load("osp12");
    auto out = normalizer_pair(doc.pair, subpair(doc.pair, "borel"));
    CHECK(same_span(out.odd_part, unit_rows(2, f, {1}), 2, f));
    std::vector<Vec> expect = {Vec{Scalar::one(f), Scalar::zero(f),
                                   Scalar::zero(f)},
                               Vec{Scalar::zero(f), Scalar::one(f),
                                   Scalar::zero(f)}};
    CHECK(same_span(out.lie_part, expect, 3, f));
  }
  SUBCASE("borel centralizer collapses") {
    auto doc = load("osp12");
    auto out = centralizer_pair(doc.pair, subpair(doc.pair, "borel"));
    CHECK(out.odd_part.empty());
    CHECK(out.lie_part.empty());
  }
  SUBCASE("center of the osp pair has odd part 0") {
    auto doc = load("osp12");
    auto out = center_pair(doc.pair);
    CHECK(out.odd_part.empty());
    CHECK(out.lie_part.empty());
  }
  SUBCASE("torus line") {
    auto doc = load("torus");
    auto norm = normalizer_pair(doc.pair, subpair(doc.pair, "line"));
    CHECK(same_span(norm.odd_part, unit_rows(2, f, {0}), 2, f));
    CHECK(norm.lie_part.size() == 2);
    auto cent = centralizer_pair(doc.pair, subpair(doc.pair, "line"));
    CHECK(cent.odd_part.empty());
    // {x : v1 <| x = 0} is the second coordinate line
    std::vector<Vec> expect = {Vec{Scalar::zero(f), Scalar::one(f)}};
    CHECK(same_span(cent.lie_part, expect, 2, f));
  }
  SUBCASE("glq mu2 and whole") {
    auto doc = load("glq");
    auto norm = normalizer_pair(doc.pair, subpair(doc.pair, "mu2"));
    CHECK(norm.odd_part.size() == 1);
    CHECK(norm.lie_part.size() == 1);
    auto cent = centralizer_pair(doc.pair, subpair(doc.pair, "mu2"));
    CHECK(cent.odd_part.size() == 1);
    auto cw = centralizer_pair(doc.pair, subpair(doc.pair, "whole"));
    CHECK(cw.odd_part.empty());
    CHECK(cw.lie_part.empty());
  }
  SUBCASE("normalizer contains centralizer everywhere") {
    for (auto& name : bundled_fixture_names()) {
      CAPTURE(name);
      auto doc = load(name);
      for (auto& sub : doc.pair.subpairs) {
        auto n = normalizer_pair(doc.pair, sub);
        auto c = centralizer_pair(doc.pair, sub);
        CHECK(span_contains(n.odd_part, c.odd_part));
        CHECK(span_contains(n.lie_part, c.lie_part));
      }
    }
  }
}

TEST_CASE("membership predicates") {
  auto doc = load("osp12");
  const MatrixGroup& g = doc.pair.group;
  const Field& f = g.field;
  GrassmannAlgebra a(4, f);
  const SubPair& borel = subpair(doc.pair, "borel");

  Mat diag = {{Scalar::of(2, f), Scalar::zero(f)},
              {Scalar::zero(f), Scalar::ratio(1, 2, f)}};
  Mat lower = {{Scalar::one(f), Scalar::zero(f)},
               {Scalar::one(f), Scalar::one(f)}};

  std::mt19937_64 rng(21);
  CHECK(normalizer_member(doc.pair, borel, point_from_matrix(g, a, diag), rng));
  CHECK(!normalizer_member(doc.pair, borel, point_from_matrix(g, a, lower), rng));
  CHECK(centralizer_member(doc.pair, borel, identity_point(g, a), rng));
  CHECK(!centralizer_member(doc.pair, borel, point_from_matrix(g, a, diag), rng));
}

TEST_CASE("pair transforms") {
  auto doc = load("osp12");
  SUBCASE("negate twice is the identity") {
    auto once = hcp_transform(doc.pair, PairTransform::negate_bracket);
    auto twice = hcp_transform(once, PairTransform::negate_bracket);
    CHECK(twice.odd_bracket == doc.pair.odd_bracket);
  }
  SUBCASE("zero bracket is unchanged") {
    auto torus = load("torus");
    auto t = hcp_transform(torus.pair, PairTransform::sigma);
    CHECK(t.odd_bracket == torus.pair.odd_bracket);
  }
  SUBCASE("(G2) still holds after negation") {
    auto neg = hcp_transform(doc.pair, PairTransform::negate_bracket);
    std::mt19937_64 rng(23);
    CHECK(check_pair(neg, rng).ok());
    CHECK_NOTHROW(assemble_lie(neg));
  }
  SUBCASE("assemble after sigma equals sigma_deform_lie after assemble") {
    auto lhs = assemble_lie(hcp_transform(doc.pair, PairTransform::sigma));
    auto rhs = sigma_deform_lie(assemble_lie(doc.pair));
    CHECK(lhs == rhs);
  }
}
