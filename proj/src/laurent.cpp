#include "tlbasis/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tlbasis {

LaurentPoly::LaurentPoly(std::initializer_list<Term> terms) {
  std::map<int, BigInt> acc;
  for (const auto& [e, c] : terms) acc[e] += c;
  for (auto& [e, c] : acc)
    if (c != 0) terms_.emplace_back(e, std::move(c));
}

LaurentPoly LaurentPoly::constant(BigInt c) { return monomial(std::move(c), 0); }

LaurentPoly LaurentPoly::monomial(BigInt c, int exponent) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace_back(exponent, std::move(c));
  return p;
}

LaurentPoly LaurentPoly::delta() { return LaurentPoly{{-1, 1}, {1, 1}}; }

BigInt LaurentPoly::coeff(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

int LaurentPoly::min_exponent() const { return terms_.front().first; }
int LaurentPoly::max_exponent() const { return terms_.back().first; }

void LaurentPoly::normalize() {
  std::erase_if(terms_, [](const Term& t) { return t.second == 0; });
}

void LaurentPoly::add_scaled(const LaurentPoly& other, const BigInt& factor, int shift) {
  if (other.is_zero() || factor == 0) return;
  if (&other == this) {
    const LaurentPoly copy = other;
    add_scaled(copy, factor, shift);
    return;
  }
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first + shift)) {
      merged.push_back(std::move(*a));
      ++a;
    } else if (a == terms_.end() || b->first + shift < a->first) {
      merged.emplace_back(b->first + shift, b->second * factor);
      ++b;
    } else {
      BigInt c = a->second + b->second * factor;
      if (c != 0) merged.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  add_scaled(other, 1, 0);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  add_scaled(other, -1, 0);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1) {
    LaurentPoly r = a;
    for (auto& [e, c] : r.terms_) {
      e += b.terms_[0].first;
      c *= b.terms_[0].second;
    }
    return r;
  }
  if (a.terms_.size() == 1) return b * a;
  const int lo = a.min_exponent() + b.min_exponent();
  const int hi = a.max_exponent() + b.max_exponent();
  std::vector<BigInt> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) dense[ea + eb - lo] += ca * cb;
  std::vector<LaurentPoly::Term> out;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) out.emplace_back(lo + static_cast<int>(i), std::move(dense[i]));
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.first += k;
  return r;
}

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly lp_delta_pow(unsigned k) {
  // Coefficient of v^(k-2j) is binomial(k, j).
  LaurentPoly r;
  BigInt binom = 1;
  std::vector<LaurentPoly::Term> terms;
  for (unsigned j = 0; j <= k; ++j) {
    terms.emplace_back(static_cast<int>(k) - 2 * static_cast<int>(j), binom);
    binom = binom * (k - j) / (j + 1);
  }
  std::reverse(terms.begin(), terms.end());
  for (const auto& [e, c] : terms) r += LaurentPoly::monomial(c, e);
  return r;
}

MonomialClass lp_as_monomial(const LaurentPoly& p) {
  MonomialClass m;
  if (p.is_zero()) return m;
  if (p.term_count() != 1) {
    m.kind = MonomialClass::Kind::not_monomial;
    return m;
  }
  m.kind = MonomialClass::Kind::monomial;
  m.exponent = p.terms()[0].first;
  m.coefficient = p.terms()[0].second;
  return m;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (c < 0)
      out << '-';
    else if (!first)
      out << '+';
    first = false;
    if (e == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag;
    out << 'v';
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

}  // namespace tlbasis
