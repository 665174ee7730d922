#include "tlbasis/bijection.hpp"

#include <map>

#include "tlbasis/errors.hpp"

namespace tlbasis {

FullyCommutative phi(const NoncrossingPartition& x) {
  DUSets s = du_sets(x);
  for (int& u : s.up) --u;
  return FullyCommutative::from_sets(x.rank(), std::move(s.down), std::move(s.up));
}

NoncrossingPartition psi(const FullyCommutative& w) {
  std::vector<int> up = w.I();
  for (int& u : up) ++u;
  return eps_inverse(w.J(), up, w.rank());
}

Extraction zinno_extract(const SignedWord& m) {
  std::map<int, int> chosen_sign;
  Extraction out{{}, 0};
  for (const auto& letter : m) {
    auto it = chosen_sign.try_emplace(letter.index, letter.sign).first;
    if (it->second != letter.sign) continue;
    out.word.push_back(letter.index);
    if (letter.sign < 0) ++out.negatives;
  }
  return out;
}

PhiZinnoReport check_phi_equals_zinno(int n) {
  PhiZinnoReport report;
  report.n = n;
  for (const auto& x : enumerate_pc(n)) {
    ++report.checked;
    const Extraction e = zinno_extract(standard_form_braid(x));
    const auto w = canonical_form(word_to_perm(e.word, n));
    if (!w || *w != phi(x) || w->length() != static_cast<int>(e.word.size())) {
      report.counterexample = x;
      break;
    }
  }
  return report;
}

}  // namespace tlbasis
