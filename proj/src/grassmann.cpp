#include "hcpair/grassmann.hpp"

#include <bit>

namespace hcpair {

GrassmannAlgebra::GrassmannAlgebra(std::uint32_t n_, Field f)
    : n(n_), field(f) {
  if (n > 64) throw error("grassmann generator count exceeds bitset capacity");
}

int merge_sign(std::uint64_t s, std::uint64_t t) {
  int inversions = 0;
  while (t) {
    std::uint32_t bit = static_cast<std::uint32_t>(std::countr_zero(t));
    t &= t - 1;
    inversions += std::popcount(s >> (bit + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

GrassmannElement GrassmannElement::zero(const GrassmannAlgebra& a) {
  return GrassmannElement(a);
}

GrassmannElement GrassmannElement::one(const GrassmannAlgebra& a) {
  return constant(a, Scalar::one(a.field));
}

GrassmannElement GrassmannElement::constant(const GrassmannAlgebra& a,
                                            const Scalar& c) {
  GrassmannElement r(a);
  r.insert_term(0, c);
  return r;
}

GrassmannElement GrassmannElement::generator(const GrassmannAlgebra& a,
                                             std::uint32_t i) {
  if (i >= a.n) throw error("generator index out of range");
  return term(a, 1ull << i, Scalar::one(a.field));
}

GrassmannElement GrassmannElement::term(const GrassmannAlgebra& a,
                                        std::uint64_t mask, const Scalar& c) {
  if (mask >> a.n) throw error("generator index out of range");
  GrassmannElement r(a);
  r.insert_term(mask, c);
  return r;
}

void GrassmannElement::insert_term(std::uint64_t mask, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(mask);
  if (it == terms_.end()) {
    terms_.emplace(mask, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool GrassmannElement::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 &&
         terms_.begin()->second.is_one();
}

bool GrassmannElement::is_even() const {
  for (auto& [m, c] : terms_)
    if (std::popcount(m) & 1) return false;
  return true;
}

bool GrassmannElement::is_odd() const {
  for (auto& [m, c] : terms_)
    if (!(std::popcount(m) & 1)) return false;
  return true;
}

int GrassmannElement::parity() const {
  if (is_even()) return 0;
  if (is_odd()) return 1;
  throw error("element is not parity-homogeneous");
}

Scalar GrassmannElement::coefficient(std::uint64_t mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Scalar::zero(alg_.field) : it->second;
}

GrassmannElement GrassmannElement::even_part() const {
  GrassmannElement r(alg_);
  for (auto& [m, c] : terms_)
    if (!(std::popcount(m) & 1)) r.terms_.emplace(m, c);
  return r;
}

GrassmannElement GrassmannElement::odd_part() const {
  GrassmannElement r(alg_);
  for (auto& [m, c] : terms_)
    if (std::popcount(m) & 1) r.terms_.emplace(m, c);
  return r;
}

void GrassmannElement::require_same(const GrassmannElement& o) const {
  if (!(alg_ == o.alg_)) throw error("mismatched grassmann algebras");
}

GrassmannElement GrassmannElement::operator+(const GrassmannElement& o) const {
  require_same(o);
  GrassmannElement r = *this;
  for (auto& [m, c] : o.terms_) r.insert_term(m, c);
  return r;
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& o) {
  require_same(o);
  for (auto& [m, c] : o.terms_) insert_term(m, c);
  return *this;
}

GrassmannElement GrassmannElement::operator-(const GrassmannElement& o) const {
  require_same(o);
  GrassmannElement r = *this;
  for (auto& [m, c] : o.terms_) r.insert_term(m, -c);
  return r;
}

GrassmannElement GrassmannElement::operator-() const {
  GrassmannElement r(alg_);
  for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

GrassmannElement GrassmannElement::operator*(const GrassmannElement& o) const {
  require_same(o);
  GrassmannElement r(alg_);
  for (auto& [s, c] : terms_) {
    for (auto& [t, d] : o.terms_) {
      if (s & t) continue;
      Scalar prod = c * d;
      if (merge_sign(s, t) < 0) prod = -prod;
      r.insert_term(s | t, prod);
    }
  }
  return r;
}

GrassmannElement GrassmannElement::scale(const Scalar& c) const {
  GrassmannElement r(alg_);
  if (c.is_zero()) return r;
  for (auto& [m, x] : terms_) r.insert_term(m, x * c);
  return r;
}

bool GrassmannElement::operator==(const GrassmannElement& o) const {
  return alg_ == o.alg_ && terms_ == o.terms_;
}

GrassmannElement GrassmannElement::inverse() const {
  Scalar c = coefficient(0);
  if (c.is_zero()) throw error("grassmann element is not invertible");
  // x = c(1 + u) with u nilpotent; invert by the finite geometric series.
  GrassmannElement u = (*this - constant(alg_, c)).scale(c.inverse());
  GrassmannElement result = one(alg_);
  GrassmannElement power = one(alg_);
  for (std::uint32_t k = 0; k < alg_.n; ++k) {
    power = power * u;
    if (power.is_zero()) break;
    result = (k & 1) ? result + power : result - power;
  }
  return result.scale(c.inverse());
}

std::string GrassmannElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (m == 0) {
      out += c.str();
      continue;
    }
    std::string gens;
    for (std::uint32_t i = 0; i < alg_.n; ++i)
      if (m >> i & 1) gens += "t" + std::to_string(i + 1);
    if (c.is_one())
      out += gens;
    else
      out += c.str() + "*" + gens;
  }
  return out;
}

GrassmannElement GrassmannElement::parse(const std::string& text,
                                         const GrassmannAlgebra& a) {
  GrassmannElement result(a);
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find('+', pos);
    std::string term =
        text.substr(pos, next == std::string::npos ? next : next - pos);
    pos = next == std::string::npos ? text.size() : next + 1;

    auto trim = [](std::string s) {
      std::size_t b = s.find_first_not_of(" \t");
      if (b == std::string::npos) return std::string();
      std::size_t e = s.find_last_not_of(" \t");
      return s.substr(b, e - b + 1);
    };
    term = trim(term);
    if (term.empty()) continue;

    std::string coeff_text = "1";
    std::string gen_text = term;
    auto star = term.find('*');
    if (star != std::string::npos) {
      coeff_text = trim(term.substr(0, star));
      gen_text = trim(term.substr(star + 1));
    } else if (term.find('t') == std::string::npos) {
      coeff_text = term;
      gen_text.clear();
    }

    Scalar c = Scalar::parse(coeff_text, a.field);
    std::uint64_t mask = 0;
    bool dead = false;
    int sign = 1;
    std::size_t gpos = 0;
    while (gpos < gen_text.size()) {
      if (gen_text[gpos] != 't') throw error("bad grassmann term: " + term);
      std::size_t digits = gpos + 1;
      while (digits < gen_text.size() && std::isdigit(gen_text[digits]))
        ++digits;
      std::uint32_t idx = std::stoul(gen_text.substr(gpos + 1, digits - gpos - 1));
      if (idx == 0 || idx > a.n) throw error("generator index out of range");
      std::uint64_t bit = 1ull << (idx - 1);
      if (mask & bit) {
        dead = true;  // repeated generator squares to zero
        break;
      }
      sign *= merge_sign(mask, bit);
      mask |= bit;
      gpos = digits;
    }
    if (dead) continue;
    result.insert_term(mask, sign < 0 ? -c : c);
  }
  return result;
}

std::pair<GrassmannElement, GrassmannElement> gr_decompose(
    const GrassmannElement& x) {
  return {x.even_part(), x.odd_part()};
}

GrassmannElement gr_extract_factor(const GrassmannElement& x,
                                   std::uint64_t t_mask) {
  GrassmannElement b(x.algebra());
  for (auto& [mask, c] : x.terms()) {
    if ((mask & t_mask) != t_mask) continue;
    std::uint64_t rest = mask & ~t_mask;
    Scalar v = c;
    if (merge_sign(t_mask, rest) < 0) v = -v;
    b.insert_term(rest, v);
  }
  return b;
}

GrassmannElement gr_hom_apply(const std::vector<GrassmannElement>& images,
                              const GrassmannAlgebra& target,
                              const GrassmannElement& x) {
  if (images.size() != x.algebra().n)
    throw error("need one image per generator");
  for (auto& im : images) {
    if (!im.is_odd()) throw error("generator image must be odd");
    if (!(im.algebra() == target)) throw error("image in wrong algebra");
  }
  GrassmannElement result(target);
  for (auto& [mask, c] : x.terms()) {
    GrassmannElement prod = GrassmannElement::constant(
        target, Scalar::one(target.field));
    std::uint64_t m = mask;
    while (m && !prod.is_zero()) {
      std::uint32_t bit = static_cast<std::uint32_t>(std::countr_zero(m));
      m &= m - 1;
      prod = prod * images[bit];
    }
    result += prod.scale(c);
  }
  return result;
}

}  // namespace hcpair
