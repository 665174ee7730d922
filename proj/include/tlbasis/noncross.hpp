#pragma once

#include <string>
#include <vector>

#include "tlbasis/coxeter.hpp"

namespace tlbasis {

using Block = std::vector<int>;

// An element of P_c for c = s_1 ... s_n: a noncrossing partition of
// {1, ..., n+1} together with the permutation whose cycles are its blocks,
// each traversed in increasing order.
class NoncrossingPartition {
 public:
  // Throws PreconditionError if the blocks do not partition 1..n+1 or cross.
  static NoncrossingPartition from_blocks(int n, std::vector<Block> blocks);
  // Throws PreconditionError unless p lies below c in absolute order.
  static NoncrossingPartition from_permutation(const Permutation& p);
  static NoncrossingPartition identity(int n);

  int rank() const noexcept { return perm_.rank(); }
  // Every block, singletons included, sorted by minimum.
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  // Blocks with at least two vertices, ordered by ascending maximum.
  std::vector<Block> polygons() const;
  const Permutation& perm() const noexcept { return perm_; }
  int length() const { return coxeter_length(perm_); }
  int reflection_length() const { return tlbasis::reflection_length(perm_); }

  friend bool operator==(const NoncrossingPartition& a, const NoncrossingPartition& b) {
    return a.perm_ == b.perm_;
  }
  friend auto operator<=>(const NoncrossingPartition& a, const NoncrossingPartition& b) {
    return a.perm_ <=> b.perm_;
  }

 private:
  NoncrossingPartition(std::vector<Block> blocks, Permutation perm)
      : blocks_(std::move(blocks)), perm_(std::move(perm)) {}

  std::vector<Block> blocks_;
  Permutation perm_;
};

std::string to_string(const NoncrossingPartition& x);

// Ascending Coxeter length, ties broken by one-line notation.
bool canonical_less(const NoncrossingPartition& a, const NoncrossingPartition& b);

// Throws PreconditionError if the blocks are not a set partition of 1..n+1.
bool noncrossing_test(const std::vector<Block>& blocks, int n);

// P_c in canonical order, generated by direct noncrossing block enumeration.
std::vector<NoncrossingPartition> enumerate_pc(int n);
// P_c in canonical order, generated as { x in S_{n+1} : x <=_T c }.
std::vector<NoncrossingPartition> enumerate_pc_by_absolute_order(int n);

// D_x: vertices that are not terminal. U_x: vertices that are not initial.
struct DUSets {
  std::vector<int> down;
  std::vector<int> up;
  friend bool operator==(const DUSets&, const DUSets&) = default;
};
DUSets du_sets(const NoncrossingPartition& x);

// True iff (D, U) is an admissible pair over 1..n+1 (sorted, same size, d_i < u_i).
bool is_admissible_pair(const std::vector<int>& D, const std::vector<int>& U, int n);

// The unique x with du_sets(x) == (D, U). Throws PreconditionError when the
// pair is not admissible.
NoncrossingPartition eps_inverse(const std::vector<int>& D, const std::vector<int>& U, int n);

struct SignedLetter {
  int index;
  int sign;  // +1 or -1
  friend bool operator==(const SignedLetter&, const SignedLetter&) = default;
};
using SignedWord = std::vector<SignedLetter>;

std::string to_string(const SignedWord& w);

// [a, b] = s_{b-1} ... s_{a+1} s_a s_{a+1} ... s_{b-1}.
Word transposition_word(int a, int b);
// Reduced word m_x: consecutive-vertex syllables of each polygon, polygons by
// ascending maximum.
Word standard_form_word(const NoncrossingPartition& x);
// The braid word of the simple element: same letters, left part of every
// syllable inverted.
SignedWord standard_form_braid(const NoncrossingPartition& x);

}  // namespace tlbasis
