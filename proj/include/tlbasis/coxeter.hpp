#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tlbasis {

// Sequence of generator indices 1..n; s_i is the adjacent transposition (i, i+1).
using Word = std::vector<int>;

// Throws PreconditionError unless n >= 1.
void require_rank(int n);

// Element of S_{n+1} in one-line notation: window[k-1] is the image of k.
// Products compose as functions, (a * b)(k) = a(b(k)), so the word s_1 s_2
// is the 3-cycle (1,2,3).
class Permutation {
 public:
  explicit Permutation(std::vector<int> window);
  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);
  // Each cycle (a_1, ..., a_k) maps a_1 -> a_2 -> ... -> a_k -> a_1.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  // The Coxeter element c = s_1 s_2 ... s_n = (1, 2, ..., n+1).
  static Permutation coxeter_element(int n);

  int rank() const noexcept { return static_cast<int>(window_.size()) - 1; }
  int degree() const noexcept { return static_cast<int>(window_.size()); }
  int operator()(int k) const { return window_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<int>& window() const noexcept { return window_; }
  bool is_identity() const noexcept;

  Permutation inverse() const;
  // this * s_i and s_i * this.
  Permutation times_generator(int i) const;
  Permutation generator_times(int i) const;

  // All cycles including fixed points, each starting at its minimum, sorted by minimum.
  std::vector<std::vector<int>> cycles() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.window_ <=> b.window_; }

 private:
  std::vector<int> window_;
};

std::string to_string(const Permutation& p);
std::string word_to_string(std::span<const int> w);

Permutation word_to_perm(const Word& w, int n);
int coxeter_length(const Permutation& p);
int reflection_length(const Permutation& p);
bool absolute_leq(const Permutation& u, const Permutation& x);
bool bruhat_leq(const Permutation& u, const Permutation& x);
bool has_left_descent(const Permutation& p, int i);
bool has_right_descent(const Permutation& p, int i);
// A reduced word, built by repeatedly peeling off the leftmost right descent.
Word reduced_word(const Permutation& p);

// One block (s_top s_{top-1} ... s_bottom) of the canonical word.
struct Run {
  int top;
  int bottom;
  friend bool operator==(const Run&, const Run&) = default;
};

// A fully commutative element with its canonical word
// (s_{i_1} ... s_{j_1}) ... (s_{i_l} ... s_{j_l}), i and j strictly increasing,
// j_m <= i_m. Equality and ordering go through the (J, I) pair.
class FullyCommutative {
 public:
  // Throws PreconditionError unless (J, I) is admissible.
  static FullyCommutative from_sets(int n, std::vector<int> J, std::vector<int> I);

  int rank() const noexcept { return n_; }
  const std::vector<Run>& runs() const noexcept { return runs_; }
  const std::vector<int>& J() const noexcept { return j_; }
  const std::vector<int>& I() const noexcept { return i_; }
  const Permutation& perm() const noexcept { return perm_; }
  Word word() const;
  int length() const noexcept { return length_; }
  bool is_identity() const noexcept { return runs_.empty(); }

  friend bool operator==(const FullyCommutative& a, const FullyCommutative& b) {
    return a.n_ == b.n_ && a.j_ == b.j_ && a.i_ == b.i_;
  }
  friend auto operator<=>(const FullyCommutative& a, const FullyCommutative& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.j_ <=> b.j_; c != 0) return c;
    return a.i_ <=> b.i_;
  }

 private:
  FullyCommutative(int n, std::vector<int> J, std::vector<int> I);

  int n_;
  std::vector<int> j_;
  std::vector<int> i_;
  std::vector<Run> runs_;
  Permutation perm_;
  int length_ = 0;
};

std::string to_string(const FullyCommutative& w);

std::optional<FullyCommutative> canonical_form(const Permutation& p);
bool is_fully_commutative(const Permutation& p);
// All of W_f in (J, I) lexicographic order.
std::vector<FullyCommutative> enumerate_fc(int n);

struct Descents {
  std::vector<int> left;
  std::vector<int> right;
};
Descents descents(const FullyCommutative& w);

}  // namespace tlbasis
