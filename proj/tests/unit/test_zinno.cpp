#include "doctest.h"
#include "oracles/oracles.hpp"
#include "tlbasis/bijection.hpp"
#include "tlbasis/errors.hpp"
#include "tlbasis/zinno.hpp"

using namespace tlbasis;

namespace {

FullyCommutative fc(int n, const Word& word) { return *canonical_form(word_to_perm(word, n)); }
NoncrossingPartition nc(int n, std::vector<Block> blocks) { return NoncrossingPartition::from_blocks(n, std::move(blocks)); }

const LaurentPoly one = LaurentPoly::constant(1);
LaurentPoly vp(int k) { return LaurentPoly::v_power(k); }

}  // namespace

TEST_CASE("omega on short words") {
  const int n = 2;
  CHECK(omega_image({{1, 1}}, n) == vp(-1) * TLElement::unit(n) - TLElement::generator(1, n));
  CHECK(omega_image({{1, -1}}, n) == vp(1) * TLElement::unit(n) - TLElement::generator(1, n));

  // Z_(1,2,3) = v^-2 b_e - v^-1 b_1 - v^-1 b_2 + b_{s1 s2}.
  const auto z = zinno_element(nc(2, {{1, 2, 3}}));
  TLElement expected(n);
  expected.add_term(fc(n, {}), vp(-2));
  expected.add_term(fc(n, {1}), -vp(-1));
  expected.add_term(fc(n, {2}), -vp(-1));
  expected.add_term(fc(n, {1, 2}), one);
  CHECK(z == expected);
  CHECK(z.size() == 4);

  const auto z13 = omega_image({{2, -1}, {1, 1}, {2, 1}}, n);
  CHECK(z13.coeff(fc(n, {2, 1})) == vp(-1));
  CHECK(z13 == zinno_element(nc(2, {{1, 3}, {2}})));
}

TEST_CASE("omega agrees with full distribution") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& x : enumerate_pc(n)) {
      if (x.length() > 10) continue;
      const auto m = standard_form_braid(x);
      CHECK(omega_image(m, n) == oracle::omega_brute_force(m, n));
    }
}

TEST_CASE("basis order") {
  const auto& order = BasisOrder::get(3);
  REQUIRE(order.size() == 14);
  for (std::size_t k = 0; k < order.size(); ++k) {
    CHECK(order.position(order.partitions()[k]) == k);
    CHECK(order.position(order.fully_commutative()[k]) == k);
    CHECK(order.fully_commutative()[k] == phi(order.partitions()[k]));
    if (k) CHECK(canonical_less(order.partitions()[k - 1], order.partitions()[k]));
  }
  const auto& table = FcTable::get(3);
  for (std::size_t idx = 0; idx < table.size(); ++idx)
    CHECK(order.fully_commutative()[order.position_of_table_index(idx)] == table.element(idx));
}

TEST_CASE("rank 1 matrices") {
  const auto M = z_matrix(1);
  CHECK(M.entries.dim() == 2);
  CHECK(M.entries.at(0, 0) == one);
  CHECK(M.entries.at(0, 1) == vp(-1));
  CHECK(M.entries.at(1, 0).is_zero());
  CHECK(M.entries.at(1, 1) == -one);
  const auto H = invert_triangular(M);
  CHECK(H.kind == MatrixKind::diagram_in_zinno);
  // b_{s1} = v^-1 Z_e - Z_{s1}.
  CHECK(H.entries.at(0, 1) == vp(-1));
  CHECK(H.entries.at(1, 1) == -one);
  CHECK(H.entries.at(0, 0) == one);
}

TEST_CASE("M is triangular with the closed-form diagonal and Bruhat support") {
  for (int n = 1; n <= 5; ++n) {
    const auto& order = BasisOrder::get(n);
    const auto M = z_matrix(n);
    CHECK(M.entries.is_upper_triangular());
    for (std::size_t col = 0; col < order.size(); ++col) {
      const auto& x = order.partitions()[col];
      CHECK(M.entries.at(col, col) == diagonal_coefficient(order.fully_commutative()[col]));
      for (std::size_t row = 0; row < order.size(); ++row) {
        if (M.entries.at(row, col).is_zero()) continue;
        const auto& w = order.fully_commutative()[row];
        CHECK(bruhat_leq(w.perm(), x.perm()));
        CHECK(bruhat_leq(psi(w).perm(), x.perm()));
      }
    }
    const auto H = invert_triangular(M);
    const auto I = LaurentMatrix::identity(order.size());
    CHECK(M.entries * H.entries == I);
    CHECK(H.entries * M.entries == I);
  }
}

TEST_CASE("diagonal coefficients") {
  CHECK(diagonal_coefficient(fc(3, {2})) == -one);
  CHECK(diagonal_coefficient(fc(2, {2, 1})) == vp(-1));
  CHECK(diagonal_coefficient(fc(3, {})) == one);
}

TEST_CASE("frozen entries") {
  // h_{(1,3)}^{s2 s1} = v.
  const auto& order = BasisOrder::get(2);
  const auto H = invert_triangular(z_matrix(2));
  const auto x = nc(2, {{1, 3}, {2}});
  const auto w = fc(2, {2, 1});
  CHECK(H.entries.at(order.position(x), order.position(w)) == vp(1));
  // Non-monomial entries of M: two at rank 3.
  const auto M3 = z_matrix(3);
  std::size_t non_monomial = 0;
  for (std::size_t r = 0; r < M3.entries.dim(); ++r)
    for (std::size_t c = 0; c < M3.entries.dim(); ++c)
      non_monomial += lp_as_monomial(M3.entries.at(r, c)).kind == MonomialClass::Kind::not_monomial;
  CHECK(non_monomial == 2);
}

TEST_CASE("rank ceiling") {
  MatrixOptions options;
  options.max_n = 3;
  CHECK_THROWS_AS(z_matrix(4, options), PreconditionError);
  CHECK_THROWS_AS(z_matrix(0), PreconditionError);
}
