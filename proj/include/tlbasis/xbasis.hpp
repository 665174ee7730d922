#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "tlbasis/coxeter.hpp"
#include "tlbasis/noncross.hpp"
#include "tlbasis/tl_core.hpp"
#include "tlbasis/zinno.hpp"

namespace tlbasis {

// Chooses how collisions are resolved when reducing (L, R) to an ending pair.
// The default resolves the lowest-index collision first and always drops from
// the right set; a seeded policy picks the collision and the side at random.
class EndingPairPolicy {
 public:
  EndingPairPolicy() = default;
  explicit EndingPairPolicy(std::uint64_t seed) : engine_(std::in_place, seed) {}

  bool randomized() const noexcept { return engine_.has_value(); }
  std::size_t pick(std::size_t count);
  bool coin();

 private:
  std::optional<std::mt19937_64> engine_;
};

struct EndingPair {
  std::vector<int> left;
  std::vector<int> right;
};

// Throws PreconditionError unless L is within L(w) and R within R(w).
EndingPair ending_pair(const std::vector<int>& L, const std::vector<int>& R, const FullyCommutative& w,
                       EndingPairPolicy& policy);
EndingPair ending_pair(const std::vector<int>& L, const std::vector<int>& R, const FullyCommutative& w);

// (prod_{s in L'} s) psi(w) (prod_{s in R'} s).
NoncrossingPartition x_lr(const FullyCommutative& w, const std::vector<int>& L, const std::vector<int>& R,
                          EndingPairPolicy& policy);
NoncrossingPartition x_lr(const FullyCommutative& w, const std::vector<int>& L, const std::vector<int>& R);

// Q_w over all subset pairs of the descent sets, in canonical order.
std::vector<NoncrossingPartition> q_set(const FullyCommutative& w);

// (-1)^alpha v^beta with alpha = l(w) + l(psi(w)) - l(x), beta = l_T(x) - l_T(psi(w)).
// Throws PreconditionError unless x is in Q_w.
LaurentPoly p_coefficient(const FullyCommutative& w, const NoncrossingPartition& x);

struct XBasisElement {
  FullyCommutative w;
  std::vector<std::pair<NoncrossingPartition, LaurentPoly>> coeffs;  // x in Q_w -> p_x^w
  TLElement value;                                                   // X_w in the diagram basis
};
XBasisElement x_element(const FullyCommutative& w);

// { y in W_f : L(y) >= L(w), R(y) >= R(w), psi(y) <= psi(w) }, in (J, I) order.
std::vector<FullyCommutative> f_set(const FullyCommutative& w);

// (-1)^alpha v^(2 k_w + l_T(x) - l(w)). Throws PreconditionError unless x is in Q_w.
LaurentPoly closed_form_h(const FullyCommutative& w, const NoncrossingPartition& x);

// Column w (BasisOrder position) holds X_w in the Zinno basis.
BaseChangeMatrix x_in_zinno_matrix(int n);

}  // namespace tlbasis
