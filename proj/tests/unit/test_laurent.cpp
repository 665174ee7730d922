#include <limits>
#include <random>

#include "doctest.h"
#include "oracles/oracles.hpp"
#include "tlbasis/laurent.hpp"

using namespace tlbasis;
using oracle::cpp_rational;

namespace {

const LaurentPoly v = LaurentPoly::v_power(1);
const LaurentPoly one = LaurentPoly::constant(1);
const LaurentPoly vinv = LaurentPoly::v_power(-1);

LaurentPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> exponent(-4, 4), coeff(-5, 5), count(0, 4);
  LaurentPoly p;
  for (int k = count(rng); k > 0; --k) p += LaurentPoly::monomial(coeff(rng), exponent(rng));
  return p;
}

}  // namespace

TEST_CASE("addition normalizes away cancelled terms") {
  CHECK(lp_add(v + vinv, -vinv) == v);
  CHECK(lp_add(LaurentPoly{}, v) == v);
  const LaurentPoly sum = lp_add(LaurentPoly::v_power(2) + one, one - LaurentPoly::v_power(2));
  CHECK(sum == LaurentPoly::constant(2));
  CHECK(sum.term_count() == 1);
  CHECK(oracle::eval(sum, 2) == 2);
  CHECK((v - v).is_zero());
  CHECK((v - v) == LaurentPoly{});
}

TEST_CASE("multiplication") {
  CHECK(lp_mul(v + vinv, v + vinv) == LaurentPoly({{2, 1}, {0, 2}, {-2, 1}}));
  CHECK(lp_mul(LaurentPoly::v_power(3), LaurentPoly::v_power(-3)) == one);
  const LaurentPoly p = lp_mul(v - one, vinv - one);
  CHECK(p == LaurentPoly({{0, 2}, {1, -1}, {-1, -1}}));
  for (int t : {-3, -1, 2, 5}) CHECK(oracle::eval(p, t) == cpp_rational(t - 1) * (cpp_rational(1) / t - 1));
}

TEST_CASE("delta powers are binomial") {
  CHECK(lp_delta_pow(0) == one);
  CHECK(lp_delta_pow(1) == LaurentPoly::delta());
  CHECK(lp_delta_pow(3) == LaurentPoly({{3, 1}, {1, 3}, {-1, 3}, {-3, 1}}));
  LaurentPoly running = one;
  for (unsigned k = 0; k <= 40; ++k) {
    CHECK(lp_delta_pow(k) == running);
    BigInt binom = 1;
    for (unsigned j = 0; j <= k; ++j) {
      CHECK(running.coeff(static_cast<int>(k) - 2 * static_cast<int>(j)) == binom);
      binom = binom * (k - j) / (j + 1);
    }
    running *= LaurentPoly::delta();
  }
  // Coefficients outgrow 64 bits.
  CHECK(lp_delta_pow(80).coeff(0) > BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST_CASE("monomial classification") {
  auto m = lp_as_monomial(-LaurentPoly::v_power(3));
  CHECK(m.kind == MonomialClass::Kind::monomial);
  CHECK(m.coefficient == -1);
  CHECK(m.exponent == 3);
  CHECK(lp_as_monomial(v + vinv).kind == MonomialClass::Kind::not_monomial);
  CHECK(lp_as_monomial(LaurentPoly{}).kind == MonomialClass::Kind::zero);
}

TEST_CASE("human-readable form") {
  CHECK(to_string(LaurentPoly{}) == "0");
  CHECK(to_string(vinv) == "v^-1");
  CHECK(to_string(LaurentPoly({{3, -1}, {1, 2}})) == "-v^3+2v");
  CHECK(to_string(-one) == "-1");
}

TEST_CASE("ring axioms and evaluation on random polynomials") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a - a == LaurentPoly{});
    for (int t : {-2, 3}) CHECK(oracle::eval(a * b, t) == oracle::eval(a, t) * oracle::eval(b, t));
  }
}
