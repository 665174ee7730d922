#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tlbasis {

using BigInt = boost::multiprecision::cpp_int;

// Element of Z[v, v^-1]. Terms are kept sorted by exponent with no zero
// coefficient, so the zero polynomial is the empty term list and equality is
// structural.
class LaurentPoly {
 public:
  using Term = std::pair<int, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(std::initializer_list<Term> terms);

  static LaurentPoly constant(BigInt c);
  static LaurentPoly monomial(BigInt c, int exponent);
  static LaurentPoly v_power(int exponent) { return monomial(1, exponent); }
  // v + v^-1, the value of a closed loop.
  static LaurentPoly delta();

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  BigInt coeff(int exponent) const;
  int min_exponent() const;  // undefined on zero
  int max_exponent() const;  // undefined on zero

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  // In-place this += factor * v^shift * other, the hot path of matrix work.
  void add_scaled(const LaurentPoly& other, const BigInt& factor, int shift);

  LaurentPoly operator-() const;
  // Multiplication by v^k.
  LaurentPoly shifted(int k) const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  explicit LaurentPoly(std::vector<Term> sorted_terms) : terms_(std::move(sorted_terms)) {}
  void normalize();

  std::vector<Term> terms_;
};

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_delta_pow(unsigned k);

struct MonomialClass {
  enum class Kind { zero, monomial, not_monomial };
  Kind kind = Kind::zero;
  BigInt coefficient;  // set when kind == monomial
  int exponent = 0;    // set when kind == monomial
};
MonomialClass lp_as_monomial(const LaurentPoly& p);

// Human-readable form, highest exponent first: "-v^3+2v", "v^-1", "0".
std::string to_string(const LaurentPoly& p);

}  // namespace tlbasis
