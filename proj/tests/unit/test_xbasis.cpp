#include <algorithm>
#include <bit>
#include <set>

#include "doctest.h"
#include "tlbasis/bijection.hpp"
#include "tlbasis/errors.hpp"
#include "tlbasis/xbasis.hpp"

using namespace tlbasis;

namespace {

FullyCommutative fc(int n, const Word& word) { return *canonical_form(word_to_perm(word, n)); }
NoncrossingPartition from_word(int n, const Word& word) {
  return NoncrossingPartition::from_permutation(word_to_perm(word, n));
}
LaurentPoly vp(int k) { return LaurentPoly::v_power(k); }
const LaurentPoly one = LaurentPoly::constant(1);

std::vector<std::vector<int>> subsets(const std::vector<int>& s) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < 1u << s.size(); ++mask) {
    std::vector<int> sub;
    for (std::size_t k = 0; k < s.size(); ++k)
      if (mask >> k & 1) sub.push_back(s[k]);
    out.push_back(sub);
  }
  return out;
}

}  // namespace

TEST_CASE("ending pairs") {
  const auto w = fc(3, {2, 1, 3});
  auto e = ending_pair({2}, {1, 3}, w);
  CHECK(e.left == std::vector<int>{2});
  CHECK(e.right == std::vector<int>{3});
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    EndingPairPolicy policy(seed);
    const auto r = ending_pair({2}, {1, 3}, w, policy);
    seen.insert({r.left, r.right});
  }
  CHECK(seen == std::set<std::pair<std::vector<int>, std::vector<int>>>{{{2}, {3}}, {{}, {1, 3}}});

  e = ending_pair({}, {}, w);
  CHECK(e.left.empty());
  CHECK(e.right.empty());
  const auto s2 = fc(3, {2});
  e = ending_pair({2}, {2}, s2);
  CHECK(e.left == std::vector<int>{2});
  CHECK(e.right.empty());
  CHECK_THROWS_AS(ending_pair({1}, {}, w), PreconditionError);
  CHECK_THROWS_AS(ending_pair({}, {2}, w), PreconditionError);
}

TEST_CASE("x_lr") {
  const auto w = fc(4, {1, 4, 3, 2});
  CHECK(x_lr(w, {}, {}) == psi(w));
  CHECK(x_lr(w, {1, 4}, {}) == from_word(4, {3, 2, 3, 4}));
  CHECK(x_lr(w, {1, 4}, {2}) == from_word(4, {2, 3, 4}));
  CHECK(x_lr(fc(3, {2}), {2}, {}) == NoncrossingPartition::identity(3));
}

TEST_CASE("Q sets") {
  const auto s1 = fc(2, {1});
  CHECK(q_set(s1) == std::vector<NoncrossingPartition>{NoncrossingPartition::identity(2), psi(s1)});
  CHECK(q_set(fc(3, {})) == std::vector<NoncrossingPartition>{NoncrossingPartition::identity(3)});

  const auto q = q_set(fc(4, {1, 4, 3, 2}));
  const std::vector<Word> cube{{1, 4, 3, 2, 3, 4}, {1, 2, 4, 3, 4}, {4, 3, 2, 3, 4}, {2, 4, 3, 4},
                               {1, 3, 2, 3, 4},    {1, 2, 3, 4},    {3, 2, 3, 4},    {2, 3, 4}};
  std::set<NoncrossingPartition> expected;
  for (const auto& word : cube) expected.insert(from_word(4, word));
  CHECK(std::set<NoncrossingPartition>(q.begin(), q.end()) == expected);
  CHECK(q.size() == 8);
}

TEST_CASE("ending-pair independence and Q set shape") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : enumerate_fc(n)) {
      const auto d = descents(w);
      const auto x = psi(w);
      for (const auto& L : subsets(d.left))
        for (const auto& R : subsets(d.right)) {
          const auto base = x_lr(w, L, R);
          for (std::uint64_t seed = 0; seed < 12; ++seed) {
            EndingPairPolicy policy(seed * 7919 + static_cast<std::uint64_t>(n));
            CHECK(x_lr(w, L, R, policy) == base);
          }
          CHECK(bruhat_leq(base.perm(), x.perm()));
          const auto e = ending_pair(L, R, w);
          CHECK(base.length() == x.length() - static_cast<int>(e.left.size() + e.right.size()));
        }
      const auto q = q_set(w);
      CHECK(std::has_single_bit(q.size()));
      if (!w.is_identity()) CHECK(q.size() >= 2);
      const std::set<NoncrossingPartition> qs(q.begin(), q.end());
      for (int s : d.left) {
        std::set<NoncrossingPartition> moved;
        for (const auto& y : q) moved.insert(NoncrossingPartition::from_permutation(y.perm().generator_times(s)));
        CHECK(moved == qs);
      }
      for (int s : d.right) {
        std::set<NoncrossingPartition> moved;
        for (const auto& y : q) moved.insert(NoncrossingPartition::from_permutation(y.perm().times_generator(s)));
        CHECK(moved == qs);
      }
    }
}

TEST_CASE("p coefficients") {
  const auto s2 = fc(3, {2});
  CHECK(p_coefficient(s2, NoncrossingPartition::identity(3)) == vp(-1));
  CHECK(p_coefficient(s2, psi(s2)) == -one);
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : enumerate_fc(n)) {
      const auto sign = w.length() % 2 ? -one : one;
      CHECK(p_coefficient(w, psi(w)) == sign);
    }
  CHECK_THROWS_AS(p_coefficient(s2, psi(fc(3, {1}))), PreconditionError);
}

TEST_CASE("X elements") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(x_element(fc(n, {})).value == TLElement::unit(n));
    for (int i = 1; i <= n; ++i) CHECK(x_element(fc(n, {i})).value == TLElement::generator(i, n));
  }
  const auto w = fc(2, {2, 1});
  CHECK(x_element(w).value != TLElement::basis(w));
}

TEST_CASE("absorption by descents") {
  const auto delta = LaurentPoly::delta();
  for (int n = 1; n <= 4; ++n)
    for (const auto& w : enumerate_fc(n)) {
      const auto X = x_element(w).value;
      const auto d = descents(w);
      for (int s : d.left) CHECK(TLElement::generator(s, n) * X == delta * X);
      for (int s : d.right) CHECK(X * TLElement::generator(s, n) == delta * X);
    }
}

TEST_CASE("F sets") {
  for (int n = 1; n <= 4; ++n) {
    const auto e = fc(n, {});
    CHECK(f_set(e) == std::vector<FullyCommutative>{e});
    for (const auto& w : enumerate_fc(n)) {
      const auto f = f_set(w);
      CHECK(std::find(f.begin(), f.end(), w) != f.end());
      for (const auto& y : f) {
        const auto fy = f_set(y);
        CHECK(std::includes(f.begin(), f.end(), fy.begin(), fy.end()));
      }
    }
  }
}

TEST_CASE("closed-form h") {
  const auto s2 = fc(3, {2});
  CHECK(closed_form_h(s2, psi(s2)) == -one);
  CHECK(closed_form_h(s2, NoncrossingPartition::identity(3)) == vp(-1));
  const auto w = fc(2, {2, 1});
  CHECK(closed_form_h(w, psi(w)) == vp(1));
  CHECK_THROWS_AS(closed_form_h(s2, psi(fc(3, {1}))), PreconditionError);
}

TEST_CASE("X in the Zinno basis") {
  for (int n = 1; n <= 5; ++n) {
    const auto& order = BasisOrder::get(n);
    const auto X = x_in_zinno_matrix(n);
    CHECK(X.kind == MatrixKind::x_in_zinno);
    CHECK(X.entries.is_upper_triangular());
    for (std::size_t k = 0; k < order.size(); ++k)
      CHECK(X.entries.at(k, k) == (order.fully_commutative()[k].length() % 2 ? -one : one));
  }
}

TEST_CASE("rank 4 entry at x = (1,5), w = s4 s3 s2 s1") {
  // Frozen from exact inversion of M. Here psi(w) = x, so x lies in Q_w.
  const auto w = fc(4, {4, 3, 2, 1});
  const auto x = NoncrossingPartition::from_blocks(4, {{1, 5}, {2}, {3}, {4}});
  CHECK(psi(w) == x);
  const auto& order = BasisOrder::get(4);
  const auto H = invert_triangular(z_matrix(4));
  CHECK(H.entries.at(order.position(x), order.position(w)) == vp(3));
  CHECK(closed_form_h(w, x) == vp(3));
}
