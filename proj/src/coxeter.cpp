#include "tlbasis/coxeter.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tlbasis/errors.hpp"

namespace tlbasis {

void require_rank(int n) {
  if (n < 1) throw PreconditionError("rank must be at least 1, got " + std::to_string(n));
}

Permutation::Permutation(std::vector<int> window) : window_(std::move(window)) {
  if (window_.size() < 2) throw PreconditionError("permutation must act on at least 2 points");
  std::vector<bool> seen(window_.size() + 1, false);
  for (int v : window_) {
    if (v < 1 || v > static_cast<int>(window_.size()) || seen[static_cast<std::size_t>(v)])
      throw PreconditionError("window is not a bijection of 1.." + std::to_string(window_.size()));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  require_rank(n);
  std::vector<int> w(static_cast<std::size_t>(n + 1));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p = identity(n);
  if (a < 1 || b < 1 || a > n + 1 || b > n + 1 || a == b)
    throw PreconditionError("bad transposition");
  std::swap(p.window_[static_cast<std::size_t>(a - 1)], p.window_[static_cast<std::size_t>(b - 1)]);
  return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> w = identity(n).window_;
  std::vector<bool> used(static_cast<std::size_t>(n + 2), false);
  for (const auto& cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      int a = cyc[k];
      if (a < 1 || a > n + 1 || used[static_cast<std::size_t>(a)])
        throw PreconditionError("cycles are not disjoint within 1.." + std::to_string(n + 1));
      used[static_cast<std::size_t>(a)] = true;
      w[static_cast<std::size_t>(a - 1)] = cyc[(k + 1) % cyc.size()];
    }
  }
  return Permutation(std::move(w));
}

Permutation Permutation::coxeter_element(int n) {
  std::vector<int> cyc(static_cast<std::size_t>(n + 1));
  std::iota(cyc.begin(), cyc.end(), 1);
  return from_cycles(n, {cyc});
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t k = 0; k < window_.size(); ++k)
    if (window_[k] != static_cast<int>(k) + 1) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> w(window_.size());
  for (std::size_t k = 0; k < window_.size(); ++k)
    w[static_cast<std::size_t>(window_[k] - 1)] = static_cast<int>(k) + 1;
  return Permutation(std::move(w));
}

Permutation Permutation::times_generator(int i) const {
  if (i < 1 || i > rank()) throw PreconditionError("generator index out of range");
  Permutation r = *this;
  std::swap(r.window_[static_cast<std::size_t>(i - 1)], r.window_[static_cast<std::size_t>(i)]);
  return r;
}

Permutation Permutation::generator_times(int i) const {
  if (i < 1 || i > rank()) throw PreconditionError("generator index out of range");
  Permutation r = *this;
  for (int& v : r.window_) {
    if (v == i)
      v = i + 1;
    else if (v == i + 1)
      v = i;
  }
  return r;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(window_.size() + 1, false);
  for (int start = 1; start <= degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cyc;
    for (int a = start; !seen[static_cast<std::size_t>(a)]; a = (*this)(a)) {
      seen[static_cast<std::size_t>(a)] = true;
      cyc.push_back(a);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw PreconditionError("rank mismatch in permutation product");
  std::vector<int> w(a.window_.size());
  for (std::size_t k = 0; k < w.size(); ++k) w[k] = a(b.window_[k]);
  return Permutation(std::move(w));
}

std::string to_string(const Permutation& p) {
  std::ostringstream out;
  bool any = false;
  for (const auto& cyc : p.cycles()) {
    if (cyc.size() < 2) continue;
    any = true;
    out << '(';
    for (std::size_t k = 0; k < cyc.size(); ++k) out << (k ? "," : "") << cyc[k];
    out << ')';
  }
  if (!any) out << 'e';
  return out.str();
}

std::string word_to_string(std::span<const int> w) {
  if (w.empty()) return "e";
  std::ostringstream out;
  for (std::size_t k = 0; k < w.size(); ++k) out << (k ? " " : "") << 's' << w[k];
  return out.str();
}

Permutation word_to_perm(const Word& w, int n) {
  Permutation p = Permutation::identity(n);
  for (int letter : w) {
    if (letter < 1 || letter > n)
      throw PreconditionError("letter " + std::to_string(letter) + " out of range 1.." + std::to_string(n));
    p = p.times_generator(letter);
  }
  return p;
}

int coxeter_length(const Permutation& p) {
  const auto& w = p.window();
  int inv = 0;
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b)
      if (w[a] > w[b]) ++inv;
  return inv;
}

int reflection_length(const Permutation& p) {
  return p.degree() - static_cast<int>(p.cycles().size());
}

bool absolute_leq(const Permutation& u, const Permutation& x) {
  if (u.degree() != x.degree()) throw PreconditionError("rank mismatch in absolute order");
  return reflection_length(u) + reflection_length(u.inverse() * x) == reflection_length(x);
}

bool bruhat_leq(const Permutation& u, const Permutation& x) {
  if (u.degree() != x.degree()) throw PreconditionError("rank mismatch in Bruhat order");
  const int m = u.degree();
  std::vector<int> pu;
  std::vector<int> px;
  pu.reserve(static_cast<std::size_t>(m));
  px.reserve(static_cast<std::size_t>(m));
  for (int k = 1; k < m; ++k) {
    pu.insert(std::upper_bound(pu.begin(), pu.end(), u(k)), u(k));
    px.insert(std::upper_bound(px.begin(), px.end(), x(k)), x(k));
    for (std::size_t j = 0; j < pu.size(); ++j)
      if (pu[j] > px[j]) return false;
  }
  return true;
}

bool has_left_descent(const Permutation& p, int i) {
  // s_i p < p iff the value i+1 sits left of the value i.
  const auto& w = p.window();
  auto pos_i = std::find(w.begin(), w.end(), i);
  auto pos_next = std::find(w.begin(), w.end(), i + 1);
  return pos_next < pos_i;
}

bool has_right_descent(const Permutation& p, int i) { return p(i) > p(i + 1); }

Word reduced_word(const Permutation& p) {
  Word reversed;
  Permutation cur = p;
  for (;;) {
    int found = 0;
    for (int i = 1; i <= cur.rank(); ++i) {
      if (has_right_descent(cur, i)) {
        found = i;
        break;
      }
    }
    if (found == 0) break;
    reversed.push_back(found);
    cur = cur.times_generator(found);
  }
  return Word(reversed.rbegin(), reversed.rend());
}

FullyCommutative::FullyCommutative(int n, std::vector<int> J, std::vector<int> I)
    : n_(n), j_(std::move(J)), i_(std::move(I)), perm_(Permutation::identity(n)) {
  for (std::size_t m = 0; m < j_.size(); ++m) {
    runs_.push_back({i_[m], j_[m]});
    length_ += i_[m] - j_[m] + 1;
  }
  perm_ = word_to_perm(word(), n_);
}

FullyCommutative FullyCommutative::from_sets(int n, std::vector<int> J, std::vector<int> I) {
  require_rank(n);
  if (J.size() != I.size()) throw PreconditionError("J and I must have the same size");
  for (std::size_t m = 0; m < J.size(); ++m) {
    if (J[m] < 1 || I[m] > n || J[m] > I[m])
      throw PreconditionError("need 1 <= j_m <= i_m <= n for every run");
    if (m > 0 && (J[m - 1] >= J[m] || I[m - 1] >= I[m]))
      throw PreconditionError("J and I must be strictly increasing");
  }
  return FullyCommutative(n, std::move(J), std::move(I));
}

Word FullyCommutative::word() const {
  Word w;
  w.reserve(static_cast<std::size_t>(length_));
  for (const auto& r : runs_)
    for (int k = r.top; k >= r.bottom; --k) w.push_back(k);
  return w;
}

std::string to_string(const FullyCommutative& w) {
  if (w.is_identity()) return "e";
  std::ostringstream out;
  for (const auto& r : w.runs()) {
    out << '(';
    for (int k = r.top; k >= r.bottom; --k) out << (k == r.top ? "" : " ") << 's' << k;
    out << ')';
  }
  return out.str();
}

std::optional<FullyCommutative> canonical_form(const Permutation& p) {
  const int n = p.rank();
  const Word word = reduced_word(p);
  std::vector<int> first(static_cast<std::size_t>(n + 2), -1);
  std::vector<int> last(static_cast<std::size_t>(n + 2), -1);
  for (std::size_t k = 0; k < word.size(); ++k) {
    auto idx = static_cast<std::size_t>(word[k]);
    if (first[idx] < 0) first[idx] = static_cast<int>(k);
    last[idx] = static_cast<int>(k);
  }
  std::vector<int> I;
  std::vector<int> J;
  for (int i = 1; i <= n; ++i) {
    auto idx = static_cast<std::size_t>(i);
    if (first[idx] < 0) continue;
    // i in I: no s_{i+1} before the first s_i.
    if (i == n || first[idx + 1] < 0 || first[idx + 1] > first[idx]) I.push_back(i);
    // i in J: no s_{i-1} after the last s_i.
    if (i == 1 || last[idx - 1] < last[idx]) J.push_back(i);
  }
  if (I.size() != J.size()) return std::nullopt;
  for (std::size_t m = 0; m < I.size(); ++m)
    if (J[m] > I[m]) return std::nullopt;
  FullyCommutative candidate = FullyCommutative::from_sets(n, std::move(J), std::move(I));
  if (candidate.perm() != p || candidate.length() != static_cast<int>(word.size())) return std::nullopt;
  return candidate;
}

bool is_fully_commutative(const Permutation& p) { return canonical_form(p).has_value(); }

namespace {

void extend_runs(int n, std::vector<int>& J, std::vector<int>& I, std::vector<FullyCommutative>& out) {
  out.push_back(FullyCommutative::from_sets(n, J, I));
  const int j0 = J.empty() ? 1 : J.back() + 1;
  const int i0 = I.empty() ? 1 : I.back() + 1;
  for (int j = j0; j <= n; ++j) {
    for (int i = std::max(i0, j); i <= n; ++i) {
      J.push_back(j);
      I.push_back(i);
      extend_runs(n, J, I, out);
      J.pop_back();
      I.pop_back();
    }
  }
}

}  // namespace

std::vector<FullyCommutative> enumerate_fc(int n) {
  require_rank(n);
  std::vector<FullyCommutative> out;
  std::vector<int> J;
  std::vector<int> I;
  extend_runs(n, J, I, out);
  std::sort(out.begin(), out.end());
  return out;
}

Descents descents(const FullyCommutative& w) {
  Descents d;
  for (int i = 1; i <= w.rank(); ++i) {
    if (has_left_descent(w.perm(), i)) d.left.push_back(i);
    if (has_right_descent(w.perm(), i)) d.right.push_back(i);
  }
  return d;
}

}  // namespace tlbasis
