#include "hcpair/env.hpp"

#include <bit>

namespace hcpair {

std::size_t PBWMonomial::degree() const {
  std::size_t d = std::popcount(odd_mask);
  for (auto e : even_exp) d += e;
  return d;
}

bool PBWMonomial::is_unit() const {
  if (odd_mask) return false;
  for (auto e : even_exp)
    if (e) return false;
  return true;
}

UEnvContext::UEnvContext(const LieSuperAlgebra* lie, GrassmannAlgebra a)
    : lie_(lie), gr_(a) {
  if (!(lie->field() == a.field))
    throw error("lie algebra and grassmann algebra fields differ");
}

PBWMonomial UEnvContext::unit_monomial() const {
  PBWMonomial m;
  m.even_exp.assign(lie_->even_dim(), 0);
  return m;
}

PBWMonomial UEnvContext::letter_monomial(std::uint32_t l) const {
  PBWMonomial m = unit_monomial();
  if (letter_odd(l))
    m.odd_mask = 1ull << (l - lie_->even_dim());
  else
    m.even_exp[l] = 1;
  return m;
}

Word UEnvContext::monomial_word(const PBWMonomial& mono) const {
  Word w;
  for (std::uint32_t i = 0; i < mono.even_exp.size(); ++i)
    for (std::uint32_t k = 0; k < mono.even_exp[i]; ++k) w.push_back(i);
  std::uint64_t mask = mono.odd_mask;
  while (mask) {
    std::uint32_t bit = static_cast<std::uint32_t>(std::countr_zero(mask));
    mask &= mask - 1;
    w.push_back(static_cast<std::uint32_t>(lie_->even_dim()) + bit);
  }
  return w;
}

ScalarNF UEnvContext::normalize_word(const Word& w) const {
  {
    std::lock_guard<std::mutex> lock(memo_lock_);
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
  }
  ScalarNF nf = normalize_impl(w, 0, true);
  {
    std::lock_guard<std::mutex> lock(memo_lock_);
    memo_.emplace(w, nf);
  }
  return nf;
}

ScalarNF UEnvContext::normalize_word_strategy(const Word& w,
                                              int strategy) const {
  return normalize_impl(w, strategy, false);
}

ScalarNF UEnvContext::normalize_impl(const Word& w, int strategy,
                                     bool memoize) const {
  if (memoize) {
    std::lock_guard<std::mutex> lock(memo_lock_);
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
  }
  const Field& f = gr_.field;
  std::size_t m = lie_->even_dim();

  auto is_violation = [&](std::size_t i) {
    std::uint32_t a = w[i], b = w[i + 1];
    if (a >= lie_->dim() || b >= lie_->dim()) throw error("unknown letter");
    return a > b || (a == b && letter_odd(a));
  };

  long pos = -1;
  if (w.size() >= 2) {
    if (strategy == 0) {
      for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (is_violation(i)) {
          pos = static_cast<long>(i);
          break;
        }
    } else {
      for (long i = static_cast<long>(w.size()) - 2; i >= 0; --i)
        if (is_violation(static_cast<std::size_t>(i))) {
          pos = i;
          break;
        }
    }
  }

  ScalarNF result;
  if (pos < 0) {
    PBWMonomial mono = unit_monomial();
    for (auto l : w) {
      if (l >= lie_->dim()) throw error("unknown letter");
      if (letter_odd(l))
        mono.odd_mask |= 1ull << (l - m);
      else
        ++mono.even_exp[l];
    }
    result.emplace(std::move(mono), Scalar::one(f));
  } else {
    auto add_scaled = [&](const ScalarNF& nf, const Scalar& c) {
      for (auto& [mono, s] : nf) {
        auto it = result.find(mono);
        if (it == result.end()) {
          Scalar v = s * c;
          if (!v.is_zero()) result.emplace(mono, v);
        } else {
          it->second += s * c;
          if (it->second.is_zero()) result.erase(it);
        }
      }
    };
    std::uint32_t a = w[pos], b = w[pos + 1];
    auto replaced_by = [&](std::uint32_t letter) {
      Word w2(w.begin(), w.begin() + pos);
      w2.push_back(letter);
      w2.insert(w2.end(), w.begin() + pos + 2, w.end());
      return w2;
    };
    if (a == b) {
      // v v -> v^<2>
      const Vec& t = lie_->two_op_basis(a - m);
      for (std::uint32_t k = 0; k < m; ++k)
        if (!t[k].is_zero())
          add_scaled(normalize_impl(replaced_by(k), strategy, memoize), t[k]);
    } else {
      Word ws = w;
      std::swap(ws[pos], ws[pos + 1]);
      Scalar sign = (letter_odd(a) && letter_odd(b)) ? -Scalar::one(f)
                                                     : Scalar::one(f);
      add_scaled(normalize_impl(ws, strategy, memoize), sign);
      const Vec& br = lie_->bracket_basis(a, b);
      for (std::uint32_t k = 0; k < lie_->dim(); ++k)
        if (!br[k].is_zero())
          add_scaled(normalize_impl(replaced_by(k), strategy, memoize), br[k]);
    }
  }
  if (memoize) {
    std::lock_guard<std::mutex> lock(memo_lock_);
    memo_.emplace(w, result);
  }
  return result;
}

UEnvElement UEnvElement::zero(const UEnvContext* ctx) {
  return UEnvElement(ctx);
}

UEnvElement UEnvElement::one(const UEnvContext* ctx) {
  UEnvElement r(ctx);
  r.insert_term(ctx->unit_monomial(),
                GrassmannElement::one(ctx->grassmann()));
  return r;
}

UEnvElement UEnvElement::from_word(const UEnvContext* ctx, const Word& w,
                                   const GrassmannElement& coeff) {
  UEnvElement r(ctx);
  if (coeff.is_zero()) return r;
  for (auto& [mono, s] : ctx->normalize_word(w))
    r.insert_term(mono, coeff.scale(s));
  return r;
}

void UEnvElement::insert_term(const PBWMonomial& mono,
                              const GrassmannElement& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(mono, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GrassmannElement UEnvElement::coefficient(const PBWMonomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? GrassmannElement::zero(ctx_->grassmann())
                            : it->second;
}

bool UEnvElement::has_total_parity(int p) const {
  for (auto& [mono, c] : terms_) {
    int want = (p + mono.parity()) & 1;
    for (auto& [mask, s] : c.terms())
      if ((std::popcount(mask) & 1) != want) return false;
  }
  return true;
}

UEnvElement UEnvElement::parity_part(int p) const {
  UEnvElement r(ctx_);
  for (auto& [mono, c] : terms_) {
    GrassmannElement part =
        ((p + mono.parity()) & 1) ? c.odd_part() : c.even_part();
    if (!part.is_zero()) r.terms_.emplace(mono, part);
  }
  return r;
}

UEnvElement UEnvElement::even_block() const {
  UEnvElement r(ctx_);
  for (auto& [mono, c] : terms_)
    if (mono.is_even_only()) r.terms_.emplace(mono, c);
  return r;
}

UEnvElement UEnvElement::odd_singleton_block(std::size_t odd_index) const {
  UEnvElement r(ctx_);
  std::uint64_t want = 1ull << odd_index;
  for (auto& [mono, c] : terms_) {
    if (mono.odd_mask != want) continue;
    PBWMonomial stripped = mono;
    stripped.odd_mask = 0;
    r.terms_.emplace(std::move(stripped), c);
  }
  return r;
}

bool UEnvElement::is_even_only() const {
  for (auto& [mono, c] : terms_)
    if (!mono.is_even_only()) return false;
  return true;
}

void UEnvElement::require_same(const UEnvElement& o) const {
  if (ctx_ != o.ctx_) throw error("mismatched U(g) contexts");
}

UEnvElement UEnvElement::operator+(const UEnvElement& o) const {
  require_same(o);
  UEnvElement r = *this;
  for (auto& [mono, c] : o.terms_) r.insert_term(mono, c);
  return r;
}

UEnvElement UEnvElement::operator-(const UEnvElement& o) const {
  require_same(o);
  UEnvElement r = *this;
  for (auto& [mono, c] : o.terms_) r.insert_term(mono, -c);
  return r;
}

UEnvElement UEnvElement::operator-() const {
  UEnvElement r(ctx_);
  for (auto& [mono, c] : terms_) r.terms_.emplace(mono, -c);
  return r;
}

UEnvElement UEnvElement::scale(const GrassmannElement& c) const {
  UEnvElement r(ctx_);
  for (auto& [mono, x] : terms_) r.insert_term(mono, c * x);
  return r;
}

UEnvElement UEnvElement::scale(const Scalar& c) const {
  UEnvElement r(ctx_);
  for (auto& [mono, x] : terms_) r.insert_term(mono, x.scale(c));
  return r;
}

bool UEnvElement::operator==(const UEnvElement& o) const {
  return ctx_ == o.ctx_ && terms_ == o.terms_;
}

std::string UEnvElement::str() const {
  if (terms_.empty()) return "0";
  const LieSuperAlgebra& g = ctx_->lie();
  std::string out;
  for (auto& [mono, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string word;
    for (std::size_t i = 0; i < mono.even_exp.size(); ++i) {
      if (!mono.even_exp[i]) continue;
      if (!word.empty()) word += " ";
      word += g.even_names()[i];
      if (mono.even_exp[i] > 1)
        word += "^" + std::to_string(mono.even_exp[i]);
    }
    std::uint64_t mask = mono.odd_mask;
    std::string odd;
    while (mask) {
      std::uint32_t bit = static_cast<std::uint32_t>(std::countr_zero(mask));
      mask &= mask - 1;
      odd += g.odd_names()[bit];
    }
    if (!odd.empty()) word += (word.empty() ? "" : " ") + odd;
    out += "(" + c.str() + ")" + (word.empty() ? "" : " * " + word);
  }
  return out;
}

UEnvElement ue_mul(const UEnvElement& u, const UEnvElement& w) {
  u.require_same(w);
  const UEnvContext* ctx = u.context();
  UEnvElement r(ctx);
  for (auto& [m1, c1] : u.terms()) {
    Word w1 = ctx->monomial_word(m1);
    bool m1_odd = m1.parity();
    for (auto& [m2, c2] : w.terms()) {
      GrassmannElement crossed =
          m1_odd ? c2.even_part() - c2.odd_part() : c2;
      GrassmannElement coeff = c1 * crossed;
      if (coeff.is_zero()) continue;
      Word word = w1;
      Word w2 = ctx->monomial_word(m2);
      word.insert(word.end(), w2.begin(), w2.end());
      for (auto& [mono, s] : ctx->normalize_word(word))
        r.insert_term(mono, coeff.scale(s));
    }
  }
  return r;
}

UEnvElement ue_mul(const UEnvElement& a, const UEnvElement& b,
                   const UEnvElement& c) {
  return ue_mul(ue_mul(a, b), c);
}

void TensorUEnv::insert_term(const PBWMonomial& a, const PBWMonomial& b,
                             const GrassmannElement& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(a, b);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool TensorUEnv::operator==(const TensorUEnv& o) const {
  return terms_ == o.terms_;
}

TensorUEnv ue_coproduct(const UEnvElement& u) {
  const UEnvContext* ctx = u.context();
  const Field& f = ctx->field();
  TensorUEnv result(ctx);
  for (auto& [mono, coeff] : u.terms()) {
    // scalar-level coproduct of the monomial: multiply out the primitives
    std::map<std::pair<PBWMonomial, PBWMonomial>, Scalar> tensor;
    tensor.emplace(std::make_pair(ctx->unit_monomial(), ctx->unit_monomial()),
                   Scalar::one(f));
    for (auto l : ctx->monomial_word(mono)) {
      std::map<std::pair<PBWMonomial, PBWMonomial>, Scalar> next;
      auto add = [&](std::pair<PBWMonomial, PBWMonomial> key, Scalar v) {
        if (v.is_zero()) return;
        auto it = next.find(key);
        if (it == next.end())
          next.emplace(std::move(key), v);
        else {
          it->second += v;
          if (it->second.is_zero()) next.erase(it);
        }
      };
      bool l_odd = ctx->letter_odd(l);
      for (auto& [pair, s] : tensor) {
        // (A (x) B)(l (x) 1) = (-1)^{|B||l|} A·l (x) B
        Scalar sign = (l_odd && pair.second.parity()) ? -s : s;
        Word wa = ctx->monomial_word(pair.first);
        wa.push_back(l);
        for (auto& [ma, sa] : ctx->normalize_word(wa))
          add({ma, pair.second}, sign * sa);
        // (A (x) B)(1 (x) l) = A (x) B·l
        Word wb = ctx->monomial_word(pair.second);
        wb.push_back(l);
        for (auto& [mb, sb] : ctx->normalize_word(wb))
          add({pair.first, mb}, s * sb);
      }
      tensor = std::move(next);
    }
    for (auto& [pair, s] : tensor)
      result.insert_term(pair.first, pair.second, coeff.scale(s));
  }
  return result;
}

GrassmannElement ue_counit(const UEnvElement& u) {
  return u.coefficient(u.context()->unit_monomial());
}

namespace {

ScalarNF antipode_word(const UEnvContext* ctx, const Word& w) {
  const Field& f = ctx->field();
  if (w.empty()) {
    ScalarNF r;
    r.emplace(ctx->unit_monomial(), Scalar::one(f));
    return r;
  }
  std::uint32_t head = w.front();
  Word rest(w.begin() + 1, w.end());
  int rest_parity = 0;
  for (auto l : rest) rest_parity ^= ctx->letter_odd(l) ? 1 : 0;
  ScalarNF s_rest = antipode_word(ctx, rest);
  // S(head · rest) = (-1)^{|head||rest|} S(rest) · (-head)
  Scalar factor = -Scalar::one(f);
  if (ctx->letter_odd(head) && rest_parity) factor = -factor;
  ScalarNF out;
  for (auto& [mono, s] : s_rest) {
    Word word = ctx->monomial_word(mono);
    word.push_back(head);
    for (auto& [m2, s2] : ctx->normalize_word(word)) {
      auto it = out.find(m2);
      Scalar v = s * s2 * factor;
      if (it == out.end()) {
        if (!v.is_zero()) out.emplace(m2, v);
      } else {
        it->second += v;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

}  // namespace

UEnvElement ue_antipode(const UEnvElement& u) {
  const UEnvContext* ctx = u.context();
  UEnvElement r(ctx);
  for (auto& [mono, c] : u.terms())
    for (auto& [m2, s] : antipode_word(ctx, ctx->monomial_word(mono)))
      r.insert_term(m2, c.scale(s));
  return r;
}

TensorUEnv ue_tensor(const UEnvElement& u, const UEnvElement& w) {
  const UEnvContext* ctx = u.context();
  TensorUEnv r(ctx);
  for (auto& [m1, c1] : u.terms()) {
    bool m1_odd = m1.parity();
    for (auto& [m2, c2] : w.terms()) {
      GrassmannElement crossed =
          m1_odd ? c2.even_part() - c2.odd_part() : c2;
      GrassmannElement coeff = c1 * crossed;
      r.insert_term(m1, m2, coeff);
    }
  }
  return r;
}

bool is_grouplike(const UEnvElement& u) {
  if (!u.has_total_parity(0)) return false;
  if (!ue_counit(u).is_one()) return false;
  return ue_coproduct(u) == ue_tensor(u, u);
}

UEnvElement factor_e(const UEnvContext* ctx, const GrassmannElement& a,
                     std::size_t odd_index) {
  Vec coords = vec_zero(ctx->odd_dim(), ctx->field());
  coords[odd_index] = Scalar::one(ctx->field());
  return factor_e_coords(ctx, a, coords);
}

UEnvElement factor_e_coords(const UEnvContext* ctx, const GrassmannElement& a,
                            const Vec& odd_coords) {
  if (!a.is_odd()) throw error("e-factor coefficient must be odd");
  if (odd_coords.size() != ctx->odd_dim())
    throw error("e-factor coordinates have wrong length");
  UEnvElement r = UEnvElement::one(ctx);
  PBWMonomial mono = ctx->unit_monomial();
  for (std::size_t i = 0; i < odd_coords.size(); ++i) {
    if (odd_coords[i].is_zero()) continue;
    mono.odd_mask = 1ull << i;
    r.insert_term(mono, a.scale(odd_coords[i]));
  }
  return r;
}

UEnvElement factor_f(const UEnvContext* ctx, const GrassmannElement& eps,
                     std::size_t even_index) {
  Vec coords = vec_zero(ctx->even_dim(), ctx->field());
  coords[even_index] = Scalar::one(ctx->field());
  return factor_f_coords(ctx, eps, coords);
}

UEnvElement factor_f_coords(const UEnvContext* ctx,
                            const GrassmannElement& eps,
                            const Vec& even_coords) {
  if (!eps.is_even()) throw error("f-factor coefficient must be even");
  if (!(eps * eps).is_zero())
    throw error("f-factor coefficient must square to zero");
  if (even_coords.size() != ctx->even_dim())
    throw error("f-factor coordinates have wrong length");
  UEnvElement r = UEnvElement::one(ctx);
  PBWMonomial mono = ctx->unit_monomial();
  for (std::size_t k = 0; k < even_coords.size(); ++k) {
    if (even_coords[k].is_zero()) continue;
    mono.even_exp[k] = 1;
    r.insert_term(mono, eps.scale(even_coords[k]));
    mono.even_exp[k] = 0;
  }
  return r;
}

namespace {

Vec slice_even(const LieSuperAlgebra& g, const Vec& full) {
  return Vec(full.begin(), full.begin() + g.even_dim());
}

Vec slice_odd(const LieSuperAlgebra& g, const Vec& full) {
  return Vec(full.begin() + g.even_dim(), full.end());
}

}  // namespace

bool verify_relation_i(const UEnvContext* ctx, const GrassmannElement& a,
                       const GrassmannElement& b, std::size_t u_idx,
                       std::size_t v_idx) {
  const LieSuperAlgebra& g = ctx->lie();
  std::size_t m = g.even_dim();
  UEnvElement lhs = ue_mul(factor_e(ctx, a, u_idx), factor_e(ctx, b, v_idx));
  GrassmannElement eps = -(a * b);
  UEnvElement rhs = ue_mul(
      factor_f_coords(ctx, eps,
                      slice_even(g, g.bracket_basis(m + u_idx, m + v_idx))),
      factor_e(ctx, b, v_idx), factor_e(ctx, a, u_idx));
  return lhs == rhs;
}

bool verify_relation_ii(const UEnvContext* ctx, const GrassmannElement& a,
                        const GrassmannElement& b, std::size_t v_idx) {
  UEnvElement lhs = ue_mul(factor_e(ctx, a, v_idx), factor_e(ctx, b, v_idx));
  GrassmannElement eps = -(a * b);
  UEnvElement rhs =
      ue_mul(factor_f_coords(ctx, eps, ctx->lie().two_op_basis(v_idx)),
             factor_e(ctx, a + b, v_idx));
  return lhs == rhs;
}

bool verify_relation_iii(const UEnvContext* ctx, const GrassmannElement& a,
                         const GrassmannElement& eps, std::size_t v_idx,
                         std::size_t x_idx) {
  const LieSuperAlgebra& g = ctx->lie();
  std::size_t m = g.even_dim();
  UEnvElement lhs = ue_mul(factor_e(ctx, a, v_idx), factor_f(ctx, eps, x_idx));
  UEnvElement rhs = ue_mul(
      factor_f(ctx, eps, x_idx), factor_e(ctx, a, v_idx),
      factor_e_coords(ctx, eps * a,
                      slice_odd(g, g.bracket_basis(m + v_idx, x_idx))));
  return lhs == rhs;
}

bool verify_relation_iv(const UEnvContext* ctx, const GrassmannElement& eps,
                        const GrassmannElement& eta, std::size_t x_idx,
                        std::size_t y_idx) {
  const LieSuperAlgebra& g = ctx->lie();
  UEnvElement lhs = ue_mul(factor_f(ctx, eps, x_idx), factor_f(ctx, eta, y_idx));
  UEnvElement rhs = ue_mul(
      factor_f(ctx, eta, y_idx), factor_f(ctx, eps, x_idx),
      factor_f_coords(ctx, eps * eta,
                      slice_even(g, g.bracket_basis(x_idx, y_idx))));
  return lhs == rhs;
}

UEnvElement hopf_automorphism_apply(const std::vector<LieSuperElementA>& images,
                                    const UEnvElement& u) {
  const UEnvContext* ctx = u.context();
  const LieSuperAlgebra& g = ctx->lie();
  if (images.size() != g.dim()) throw error("need one image per basis vector");
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t k = 0; k < g.dim(); ++k) {
      const GrassmannElement& c = images[i].coord(k);
      if (c.is_zero()) continue;
      if (!c.is_even() || g.parity(k) != g.parity(i))
        throw error("action image violates parity");
    }
  }
  // per-letter factors
  std::vector<UEnvElement> letter_factor;
  letter_factor.reserve(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) {
    UEnvElement e(ctx);
    for (std::size_t k = 0; k < g.dim(); ++k) {
      const GrassmannElement& c = images[i].coord(k);
      if (!c.is_zero())
        e.insert_term(ctx->letter_monomial(static_cast<std::uint32_t>(k)), c);
    }
    letter_factor.push_back(std::move(e));
  }
  UEnvElement result(ctx);
  for (auto& [mono, c] : u.terms()) {
    UEnvElement img = UEnvElement::one(ctx);
    for (auto l : ctx->monomial_word(mono)) img = ue_mul(img, letter_factor[l]);
    result = result + img.scale(c);
  }
  return result;
}

}  // namespace hcpair
