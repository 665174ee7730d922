#pragma once

#include <optional>
#include <vector>

#include "tlbasis/coxeter.hpp"
#include "tlbasis/noncross.hpp"

namespace tlbasis {

// phi: P_c -> W_f, read off from (J, I) = (D_x, U_x - 1).
FullyCommutative phi(const NoncrossingPartition& x);
// psi = phi^-1: the noncrossing partition with (D, U) = (J_w, I_w + 1).
NoncrossingPartition psi(const FullyCommutative& w);

struct Extraction {
  Word word;      // the selected letters, signs dropped
  int negatives;  // selected letters carrying sign -1
};

// Left-to-right sign selection on a standard form: for each generator index
// the sign of its first occurrence decides which occurrences are kept.
Extraction zinno_extract(const SignedWord& m);

struct PhiZinnoReport {
  int n = 0;
  std::size_t checked = 0;
  std::optional<NoncrossingPartition> counterexample;
  bool ok() const { return !counterexample.has_value(); }
};
// Compares phi(x) with the fully commutative element of the extracted word
// for every x in P_c.
PhiZinnoReport check_phi_equals_zinno(int n);

}  // namespace tlbasis
