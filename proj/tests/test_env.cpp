#include <doctest.h>

#include <random>
#include <set>
#include <tuple>

#include "algebras.hpp"
#include "hcpair/env.hpp"

using namespace hcpair;
using namespace hcpair::testing;

namespace {

struct Ctx {
  LieSuperAlgebra lie;
  GrassmannAlgebra gr;
  UEnvContext ctx;
  Ctx(LieSuperAlgebra g, std::uint32_t n)
      : lie(std::move(g)), gr(n, lie.field()), ctx(&lie, gr) {}
};

GrassmannElement tau(const UEnvContext& c, std::uint32_t i) {
  return GrassmannElement::generator(c.grassmann(), i);
}

UEnvElement letter(const UEnvContext* c, std::uint32_t l) {
  return UEnvElement::from_word(c, {l}, GrassmannElement::one(c->grassmann()));
}

}  // namespace

TEST_CASE("straightening the osp letters") {
  Ctx s(make_osp12(), 4);
  const UEnvContext* c = &s.ctx;
  auto one = GrassmannElement::one(s.gr);

  SUBCASE("odd square becomes the 2-operation") {
    // v1 v1 -> v1^<2> = -f
    auto got = UEnvElement::from_word(c, {3, 3}, one);
    auto expect = letter(c, 2).scale(Scalar::of(-1, s.lie.field()));
    CHECK(got == expect);
  }
  SUBCASE("out-of-order odd pair") {
    // v2 v1 -> -v1 v2 + [v2,v1] = -v1v2 + h
    auto got = UEnvElement::from_word(c, {4, 3}, one);
    UEnvElement expect(c);
    PBWMonomial m = c->unit_monomial();
    m.odd_mask = 0b11;
    expect.insert_term(m, -one);
    expect = expect + letter(c, 0);
    CHECK(got == expect);
  }
  SUBCASE("odd past even") {
    // v1 e = e v1 + [v1,e] = e v1 + v2; verified against ue_mul
    auto got = UEnvElement::from_word(c, {3, 1}, one);
    auto expect = ue_mul(letter(c, 1), letter(c, 3)) + letter(c, 4);
    CHECK(got == expect);
    CHECK(got == ue_mul(letter(c, 3), letter(c, 1)));
  }
  SUBCASE("unknown letters rejected") {
    CHECK_THROWS_AS(UEnvElement::from_word(c, {9}, one), error);
  }
}

TEST_CASE("PBW confluence: rewriting order does not matter") {
  Ctx s(make_osp12(), 4);
  const UEnvContext* c = &s.ctx;
  std::mt19937_64 rng(17);
  auto one = GrassmannElement::one(s.gr);
  for (int it = 0; it < 120; ++it) {
    std::size_t len = 1 + rng() % 6;
    Word w;
    for (std::size_t i = 0; i < len; ++i)
      w.push_back(static_cast<std::uint32_t>(rng() % s.lie.dim()));
    auto first = c->normalize_word_strategy(w, 0);
    auto last = c->normalize_word_strategy(w, 1);
    auto memoized = c->normalize_word(w);
    CHECK(first == last);
    CHECK(first == memoized);
  }
}

TEST_CASE("ue_mul basics") {
  Ctx s(make_osp12(), 4);
  const UEnvContext* c = &s.ctx;
  auto t1 = tau(*c, 0), t2 = tau(*c, 1);

  SUBCASE("e(a,v) inverse: (1 + t1 v1)(1 - t1 v1) = 1") {
    auto u = factor_e(c, t1, 0);
    auto w = factor_e(c, -t1, 0);
    CHECK(ue_mul(u, w) == UEnvElement::one(c));
  }
  SUBCASE("coefficient crossing sign") {
    // (t1 (x) v1)(t2 (x) v2) = -t1t2 (x) v1v2
    UEnvElement u(c), w(c);
    PBWMonomial mv1 = c->unit_monomial(), mv2 = c->unit_monomial();
    mv1.odd_mask = 1;
    mv2.odd_mask = 2;
    u.insert_term(mv1, t1);
    w.insert_term(mv2, t2);
    UEnvElement expect(c);
    PBWMonomial m12 = c->unit_monomial();
    m12.odd_mask = 3;
    expect.insert_term(m12, -(t1 * t2));
    CHECK(ue_mul(u, w) == expect);
  }
  SUBCASE("unit") {
    auto u = factor_e(c, t1, 0) + letter(c, 0).scale(t1 * t2);
    CHECK(ue_mul(UEnvElement::one(c), u) == u);
    CHECK(ue_mul(u, UEnvElement::one(c)) == u);
  }
}

TEST_CASE("ue_mul associativity on random triples") {
  Ctx s(make_osp12(), 4);
  const UEnvContext* c = &s.ctx;
  std::mt19937_64 rng(29);
  auto random_elt = [&]() {
    UEnvElement u(c);
    for (int t = 0; t < 3; ++t) {
      Word w;
      std::size_t len = rng() % 3;
      for (std::size_t i = 0; i < len; ++i)
        w.push_back(static_cast<std::uint32_t>(rng() % s.lie.dim()));
      GrassmannElement g(s.gr);
      std::uint64_t mask = rng() & 0xf;
      g += GrassmannElement::term(
          s.gr, mask, Scalar::of(static_cast<long>(rng() % 5) - 2, s.lie.field()));
      u = u + UEnvElement::from_word(c, w, g);
    }
    return u;
  };
  for (int it = 0; it < 60; ++it) {
    auto a = random_elt(), b = random_elt(), d = random_elt();
    CHECK(ue_mul(ue_mul(a, b), d) == ue_mul(a, ue_mul(b, d)));
  }
}

TEST_CASE("coproduct, counit, antipode") {
  Ctx s(make_osp12(), 4);
  const UEnvContext* c = &s.ctx;
  auto one = GrassmannElement::one(s.gr);

  SUBCASE("primitives") {
    auto v1 = letter(c, 3);
    auto d = ue_coproduct(v1);
    TensorUEnv expect(c);
    PBWMonomial mv1 = c->unit_monomial();
    mv1.odd_mask = 1;
    expect.insert_term(mv1, c->unit_monomial(), one);
    expect.insert_term(c->unit_monomial(), mv1, one);
    CHECK(d == expect);
    CHECK(ue_counit(v1).is_zero());
    CHECK(ue_antipode(v1) == -v1);
  }
  SUBCASE("product of primitives") {
    // Delta(v1v2) = v1v2 (x) 1 + v1 (x) v2 - v2 (x) v1 + 1 (x) v1v2
    auto v1v2 = UEnvElement::from_word(c, {3, 4}, one);
    auto d = ue_coproduct(v1v2);
    PBWMonomial mu = c->unit_monomial();
    PBWMonomial m1 = mu, m2 = mu, m12 = mu;
    m1.odd_mask = 1;
    m2.odd_mask = 2;
    m12.odd_mask = 3;
    TensorUEnv expect(c);
    expect.insert_term(m12, mu, one);
    expect.insert_term(m1, m2, one);
    expect.insert_term(m2, m1, -one);
    expect.insert_term(mu, m12, one);
    CHECK(d == expect);
  }
  SUBCASE("antipode is the super-anti-map") {
    // S(v1v2) = -S(v2)S(v1) = -v2v1, then straightened
    auto v1v2 = UEnvElement::from_word(c, {3, 4}, one);
    auto got = ue_antipode(v1v2);
    auto expect = -UEnvElement::from_word(c, {4, 3}, one);
    CHECK(got == expect);
  }
}

TEST_CASE("hopf axioms hold on random elements") {
  Ctx s(make_osp12(), 4);
  const UEnvContext* c = &s.ctx;
  std::mt19937_64 rng(41);
  auto random_elt = [&]() {
    UEnvElement u(c);
    for (int t = 0; t < 2; ++t) {
      Word w;
      std::size_t len = rng() % 3;
      for (std::size_t i = 0; i < len; ++i)
        w.push_back(static_cast<std::uint32_t>(rng() % s.lie.dim()));
      GrassmannElement g = GrassmannElement::term(
          s.gr, rng() & 0xf,
          Scalar::of(static_cast<long>(rng() % 5) - 2, s.lie.field()));
      u = u + UEnvElement::from_word(c, w, g);
    }
    return u;
  };

  for (int it = 0; it < 25; ++it) {
    auto u = random_elt();

    // coassociativity on the triple expansion
    std::map<std::tuple<PBWMonomial, PBWMonomial, PBWMonomial>, GrassmannElement>
        left, right;
    auto add = [&](auto& tgt, PBWMonomial a, PBWMonomial b, PBWMonomial d,
                   const GrassmannElement& v) {
      auto key = std::make_tuple(std::move(a), std::move(b), std::move(d));
      auto it2 = tgt.find(key);
      if (it2 == tgt.end()) {
        if (!v.is_zero()) tgt.emplace(std::move(key), v);
      } else {
        it2->second += v;
        if (it2->second.is_zero()) tgt.erase(it2);
      }
    };
    auto du = ue_coproduct(u);
    for (auto& [ab, coeff] : du.terms()) {
      auto da = ue_coproduct(UEnvElement::from_word(
          c, c->monomial_word(ab.first), GrassmannElement::one(s.gr)));
      for (auto& [a12, sc] : da.terms())
        add(left, a12.first, a12.second, ab.second, coeff * sc);
      auto db = ue_coproduct(UEnvElement::from_word(
          c, c->monomial_word(ab.second), GrassmannElement::one(s.gr)));
      for (auto& [b12, sc] : db.terms())
        add(right, ab.first, b12.first, b12.second, coeff * sc);
    }
    CHECK(left == right);

    // counit: (eps (x) id) Delta = id = (id (x) eps) Delta
    UEnvElement left_c(c), right_c(c);
    for (auto& [ab, coeff] : du.terms()) {
      if (ab.first.is_unit()) left_c.insert_term(ab.second, coeff);
      if (ab.second.is_unit()) right_c.insert_term(ab.first, coeff);
    }
    CHECK(left_c == u);
    CHECK(right_c == u);

    // antipode: m (S (x) id) Delta = unit . counit
    UEnvElement conv(c);
    for (auto& [ab, coeff] : du.terms()) {
      auto sa = ue_antipode(UEnvElement::from_word(
          c, c->monomial_word(ab.first), GrassmannElement::one(s.gr)));
      auto prod = ue_mul(sa, UEnvElement::from_word(
                                 c, c->monomial_word(ab.second),
                                 GrassmannElement::one(s.gr)));
      conv = conv + prod.scale(coeff);
    }
    UEnvElement expect(c);
    expect.insert_term(c->unit_monomial(), ue_counit(u));
    CHECK(conv == expect);
  }
}

TEST_CASE("grouplike factors") {
  Ctx s(make_osp12(), 4);
  const UEnvContext* c = &s.ctx;
  auto t1 = tau(*c, 0), t2 = tau(*c, 1);

  SUBCASE("e and f are grouplike with the stated inverses") {
    auto e = factor_e(c, t1, 0);
    CHECK(is_grouplike(e));
    CHECK(ue_mul(e, factor_e(c, -t1, 0)) == UEnvElement::one(c));
    auto f = factor_f(c, t1 * t2, 0);
    CHECK(is_grouplike(f));
    CHECK(ue_mul(f, factor_f(c, -(t1 * t2), 0)) == UEnvElement::one(c));
  }
  SUBCASE("sums of e-terms: the quadratic correction matters") {
    // 1 + t1 v1 + t2 v2 is the product e(t2,v2) e(t1,v1) only up to a
    // quadratic term; the direct coproduct computation shows the bare sum
    // fails grouplikeness while the honest product passes.
    auto u = UEnvElement::one(c);
    PBWMonomial m1 = c->unit_monomial(), m2 = c->unit_monomial();
    m1.odd_mask = 1;
    m2.odd_mask = 2;
    u.insert_term(m1, t1);
    u.insert_term(m2, t2);
    CHECK(!is_grouplike(u));
    auto prod = ue_mul(factor_e(c, t2, 1), factor_e(c, t1, 0));
    CHECK(is_grouplike(prod));
    CHECK(prod == u + UEnvElement::from_word(c, {4, 3}, t1 * t2));
    // with both coefficients drawn from one odd generator the cross terms
    // die and the two-term sum is again grouplike
    auto w = UEnvElement::one(c);
    w.insert_term(m1, t1);
    w.insert_term(m2, t1.scale(Scalar::of(3, s.lie.field())));
    CHECK(is_grouplike(w));
  }
  SUBCASE("a quadratic term is not grouplike") {
    auto u = UEnvElement::one(c);
    PBWMonomial m12 = c->unit_monomial();
    m12.odd_mask = 3;
    u.insert_term(m12, t1 * t2);
    CHECK(!is_grouplike(u));
  }
  SUBCASE("f with non-square-zero coefficient is rejected") {
    CHECK_THROWS_AS(factor_f(c, GrassmannElement::one(s.gr), 0), error);
  }
  SUBCASE("parity mismatches are rejected") {
    CHECK_THROWS_AS(factor_e(c, t1 * t2, 0), error);
    CHECK_THROWS_AS(factor_f(c, t1, 0), error);
  }
}

TEST_CASE("the four relations hold exhaustively at N = 4") {
  Ctx s(make_osp12(), 4);
  const UEnvContext* c = &s.ctx;
  std::vector<GrassmannElement> odd_gens;
  for (std::uint32_t i = 0; i < 4; ++i) odd_gens.push_back(tau(*c, i));

  for (auto& a : odd_gens)
    for (auto& b : odd_gens) {
      for (std::size_t u = 0; u < s.lie.odd_dim(); ++u) {
        for (std::size_t v = 0; v < s.lie.odd_dim(); ++v)
          CHECK(verify_relation_i(c, a, b, u, v));
        CHECK(verify_relation_ii(c, a, b, u));
      }
    }
  std::vector<GrassmannElement> eps_choices;
  for (std::uint32_t i = 0; i < 4; ++i)
    for (std::uint32_t j = i + 1; j < 4; ++j)
      eps_choices.push_back(odd_gens[i] * odd_gens[j]);
  for (auto& eps : eps_choices) {
    for (auto& a : odd_gens)
      for (std::size_t v = 0; v < s.lie.odd_dim(); ++v)
        for (std::size_t x = 0; x < s.lie.even_dim(); ++x)
          CHECK(verify_relation_iii(c, a, eps, v, x));
    for (auto& eta : eps_choices)
      for (std::size_t x = 0; x < s.lie.even_dim(); ++x)
        for (std::size_t y = 0; y < s.lie.even_dim(); ++y)
          CHECK(verify_relation_iv(c, eps, eta, x, y));
  }
}

TEST_CASE("relation (iv) over an abelian even part collapses") {
  Ctx s(make_abelian(2, 0), 4);
  const UEnvContext* c = &s.ctx;
  auto t = [&](std::uint32_t i) { return tau(*c, i); };
  auto eps = t(0) * t(1), eta = t(2) * t(3);
  CHECK(verify_relation_iv(c, eps, eta, 0, 1));
  // [x,y] = 0 so f-factors commute outright
  auto fx = factor_f(c, eps, 0), fy = factor_f(c, eta, 1);
  CHECK(ue_mul(fx, fy) == ue_mul(fy, fx));
}

TEST_CASE("hopf automorphism application") {
  Ctx s(make_osp12(), 4);
  const UEnvContext* c = &s.ctx;
  const LieSuperAlgebra& g = s.lie;
  auto t1 = tau(*c, 0);

  auto identity_images = [&]() {
    std::vector<LieSuperElementA> im;
    for (std::size_t i = 0; i < g.dim(); ++i)
      im.push_back(LieSuperElementA::basis(&g, s.gr, i));
    return im;
  };

  SUBCASE("identity action") {
    auto u = ue_mul(factor_e(c, t1, 0), letter(c, 1));
    CHECK(hopf_automorphism_apply(identity_images(), u) == u);
  }
  SUBCASE("diagonal action rescales e-factors") {
    // the adjoint action of diag(2, 1/2) on the osp fixture:
    // h -> h, e -> e/4, f -> 4f, v1 -> 2v1, v2 -> v2/2
    std::vector<LieSuperElementA> im = identity_images();
    Field q = g.field();
    im[1] = im[1].scale(GrassmannElement::constant(s.gr, Scalar::ratio(1, 4, q)));
    im[2] = im[2].scale(GrassmannElement::constant(s.gr, Scalar::of(4, q)));
    im[3] = im[3].scale(GrassmannElement::constant(s.gr, Scalar::of(2, q)));
    im[4] = im[4].scale(GrassmannElement::constant(s.gr, Scalar::ratio(1, 2, q)));

    auto e1 = factor_e(c, t1, 0);
    auto got = hopf_automorphism_apply(im, e1);
    CHECK(got == factor_e(c, t1.scale(Scalar::of(2, q)), 0));
    CHECK(is_grouplike(got));

    // multiplicativity on a monomial: image of v1v2 = image(v1) image(v2)
    auto v1v2 = UEnvElement::from_word(c, {3, 4}, GrassmannElement::one(s.gr));
    auto lhs = hopf_automorphism_apply(im, v1v2);
    auto rhs = ue_mul(hopf_automorphism_apply(im, letter(c, 3)),
                      hopf_automorphism_apply(im, letter(c, 4)));
    CHECK(lhs == rhs);

    // counit and coproduct preserved on a sample
    auto u = ue_mul(e1, factor_e(c, tau(*c, 1), 1));
    auto fu = hopf_automorphism_apply(im, u);
    CHECK(ue_counit(fu) == ue_counit(u));
    CHECK(is_grouplike(fu));
  }
  SUBCASE("parity-violating images rejected") {
    auto im = identity_images();
    im[0] = LieSuperElementA::basis(&g, s.gr, 3);  // even -> odd
    CHECK_THROWS_AS(hopf_automorphism_apply(im, letter(c, 0)), error);
  }
}

TEST_CASE("basis monomials of degree <= 1 are independent") {
  Ctx s(make_osp12(), 2);
  const UEnvContext* c = &s.ctx;
  // distinct letters map to distinct PBW monomials, and the unit differs
  std::set<PBWMonomial> seen;
  seen.insert(c->unit_monomial());
  for (std::uint32_t l = 0; l < s.lie.dim(); ++l)
    CHECK(seen.insert(c->letter_monomial(l)).second);
}
