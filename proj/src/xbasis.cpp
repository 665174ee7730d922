#include "tlbasis/xbasis.hpp"

#include <algorithm>
#include <set>

#include "tlbasis/bijection.hpp"
#include "tlbasis/errors.hpp"

namespace tlbasis {

std::size_t EndingPairPolicy::pick(std::size_t count) {
  if (!engine_ || count <= 1) return 0;
  return std::uniform_int_distribution<std::size_t>(0, count - 1)(*engine_);
}

bool EndingPairPolicy::coin() {
  if (!engine_) return false;
  return std::uniform_int_distribution<int>(0, 1)(*engine_) == 1;
}

namespace {

bool contains(const std::vector<int>& s, int v) { return std::find(s.begin(), s.end(), v) != s.end(); }

void erase_value(std::vector<int>& s, int v) { s.erase(std::remove(s.begin(), s.end(), v), s.end()); }

bool subset_of(std::vector<int> a, const std::vector<int>& b) {
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Collision at generator j: either s_j in L and R, or s_j in L and s_{j-1} in R.
struct Collision {
  int left;
  int right;
};

int alpha(const FullyCommutative& w, const NoncrossingPartition& top, const NoncrossingPartition& x) {
  return w.length() + top.length() - x.length();
}

}  // namespace

EndingPair ending_pair(const std::vector<int>& L, const std::vector<int>& R, const FullyCommutative& w,
                       EndingPairPolicy& policy) {
  const Descents d = descents(w);
  if (!subset_of(L, d.left) || !subset_of(R, d.right))
    throw PreconditionError("(L, R) is not within the descent sets of " + to_string(w));
  EndingPair out{L, R};
  std::sort(out.left.begin(), out.left.end());
  out.left.erase(std::unique(out.left.begin(), out.left.end()), out.left.end());
  std::sort(out.right.begin(), out.right.end());
  out.right.erase(std::unique(out.right.begin(), out.right.end()), out.right.end());
  for (;;) {
    std::vector<Collision> found;
    for (int j : out.left) {
      if (contains(out.right, j)) found.push_back({j, j});
      if (contains(out.right, j - 1)) found.push_back({j, j - 1});
    }
    if (found.empty()) break;
    const Collision c = found[policy.pick(found.size())];
    if (policy.coin())
      erase_value(out.left, c.left);
    else
      erase_value(out.right, c.right);
  }
  return out;
}

EndingPair ending_pair(const std::vector<int>& L, const std::vector<int>& R, const FullyCommutative& w) {
  EndingPairPolicy policy;
  return ending_pair(L, R, w, policy);
}

NoncrossingPartition x_lr(const FullyCommutative& w, const std::vector<int>& L, const std::vector<int>& R,
                          EndingPairPolicy& policy) {
  const EndingPair e = ending_pair(L, R, w, policy);
  Permutation p = psi(w).perm();
  for (auto it = e.left.rbegin(); it != e.left.rend(); ++it) p = p.generator_times(*it);
  for (int s : e.right) p = p.times_generator(s);
  if (!absolute_leq(p, Permutation::coxeter_element(w.rank())))
    throw InvariantError("x_{L,R} left P_c for w=" + to_string(w));
  return NoncrossingPartition::from_permutation(p);
}

NoncrossingPartition x_lr(const FullyCommutative& w, const std::vector<int>& L, const std::vector<int>& R) {
  EndingPairPolicy policy;
  return x_lr(w, L, R, policy);
}

std::vector<NoncrossingPartition> q_set(const FullyCommutative& w) {
  const Descents d = descents(w);
  std::set<NoncrossingPartition> seen;
  const std::size_t nl = d.left.size();
  const std::size_t nr = d.right.size();
  for (std::size_t lm = 0; lm < (std::size_t{1} << nl); ++lm) {
    std::vector<int> L;
    for (std::size_t k = 0; k < nl; ++k)
      if (lm >> k & 1) L.push_back(d.left[k]);
    for (std::size_t rm = 0; rm < (std::size_t{1} << nr); ++rm) {
      std::vector<int> R;
      for (std::size_t k = 0; k < nr; ++k)
        if (rm >> k & 1) R.push_back(d.right[k]);
      seen.insert(x_lr(w, L, R));
    }
  }
  std::vector<NoncrossingPartition> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

namespace {

void require_in_q(const FullyCommutative& w, const NoncrossingPartition& x) {
  const auto q = q_set(w);
  if (std::find(q.begin(), q.end(), x) == q.end())
    throw PreconditionError(to_string(x) + " is not in Q_w for w=" + to_string(w));
}

LaurentPoly p_coefficient_in_q(const FullyCommutative& w, const NoncrossingPartition& top,
                               const NoncrossingPartition& x) {
  return LaurentPoly::monomial(alpha(w, top, x) % 2 ? -1 : 1, x.reflection_length() - top.reflection_length());
}

}  // namespace

LaurentPoly p_coefficient(const FullyCommutative& w, const NoncrossingPartition& x) {
  require_in_q(w, x);
  return p_coefficient_in_q(w, psi(w), x);
}

XBasisElement x_element(const FullyCommutative& w) {
  const NoncrossingPartition top = psi(w);
  XBasisElement out{w, {}, TLElement(w.rank())};
  for (const auto& x : q_set(w)) {
    LaurentPoly p = p_coefficient_in_q(w, top, x);
    out.value += p * zinno_element(x);
    out.coeffs.emplace_back(x, std::move(p));
  }
  return out;
}

std::vector<FullyCommutative> f_set(const FullyCommutative& w) {
  const Descents dw = descents(w);
  const Permutation top = psi(w).perm();
  std::vector<FullyCommutative> out;
  for (const auto& y : FcTable::get(w.rank()).elements()) {
    const Descents dy = descents(y);
    if (!std::includes(dy.left.begin(), dy.left.end(), dw.left.begin(), dw.left.end())) continue;
    if (!std::includes(dy.right.begin(), dy.right.end(), dw.right.begin(), dw.right.end())) continue;
    if (bruhat_leq(psi(y).perm(), top)) out.push_back(y);
  }
  return out;
}

LaurentPoly closed_form_h(const FullyCommutative& w, const NoncrossingPartition& x) {
  require_in_q(w, x);
  const NoncrossingPartition top = psi(w);
  const int k = zinno_extract(standard_form_braid(top)).negatives;
  return LaurentPoly::monomial(alpha(w, top, x) % 2 ? -1 : 1, 2 * k + x.reflection_length() - w.length());
}

BaseChangeMatrix x_in_zinno_matrix(int n) {
  const BasisOrder& order = BasisOrder::get(n);
  BaseChangeMatrix out{n, MatrixKind::x_in_zinno, LaurentMatrix(order.size())};
  for (std::size_t col = 0; col < order.size(); ++col) {
    const auto& w = order.fully_commutative()[col];
    const NoncrossingPartition top = psi(w);
    for (const auto& x : q_set(w)) out.entries.at(order.position(x), col) = p_coefficient_in_q(w, top, x);
  }
  return out;
}

}  // namespace tlbasis
