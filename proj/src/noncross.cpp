#include "tlbasis/noncross.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "tlbasis/errors.hpp"

namespace tlbasis {

namespace {

void normalize_blocks(std::vector<Block>& blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
}

bool blocks_cross(const Block& a, const Block& b) {
  // a and b are sorted; look for p < q < r < s alternating between them.
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      bool inside = false;
      bool outside = false;
      for (int y : b) {
        if (y > a[i] && y < a[j])
          inside = true;
        else
          outside = true;
      }
      if (inside && outside) return true;
    }
  return false;
}

}  // namespace

bool noncrossing_test(const std::vector<Block>& blocks, int n) {
  require_rank(n);
  std::vector<int> seen(static_cast<std::size_t>(n + 2), 0);
  for (const auto& b : blocks) {
    if (b.empty()) throw PreconditionError("empty block");
    for (int a : b) {
      if (a < 1 || a > n + 1 || seen[static_cast<std::size_t>(a)]++)
        throw PreconditionError("blocks do not partition 1.." + std::to_string(n + 1));
    }
  }
  for (int a = 1; a <= n + 1; ++a)
    if (!seen[static_cast<std::size_t>(a)])
      throw PreconditionError("blocks do not partition 1.." + std::to_string(n + 1));
  std::vector<Block> sorted = blocks;
  normalize_blocks(sorted);
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j)
      if (blocks_cross(sorted[i], sorted[j])) return false;
  return true;
}

NoncrossingPartition NoncrossingPartition::from_blocks(int n, std::vector<Block> blocks) {
  if (!noncrossing_test(blocks, n)) throw PreconditionError("blocks are crossing");
  normalize_blocks(blocks);
  Permutation perm = Permutation::from_cycles(n, blocks);
  return NoncrossingPartition(std::move(blocks), std::move(perm));
}

NoncrossingPartition NoncrossingPartition::from_permutation(const Permutation& p) {
  if (!absolute_leq(p, Permutation::coxeter_element(p.rank())))
    throw PreconditionError("permutation " + to_string(p) + " is not below c in absolute order");
  std::vector<Block> blocks = p.cycles();
  normalize_blocks(blocks);
  Permutation perm = Permutation::from_cycles(p.rank(), blocks);
  if (perm != p) throw InvariantError("cycle of an element of P_c is not increasing: " + to_string(p));
  return NoncrossingPartition(std::move(blocks), std::move(perm));
}

NoncrossingPartition NoncrossingPartition::identity(int n) {
  std::vector<Block> blocks;
  for (int a = 1; a <= n + 1; ++a) blocks.push_back({a});
  return from_blocks(n, std::move(blocks));
}

std::vector<Block> NoncrossingPartition::polygons() const {
  std::vector<Block> out;
  for (const auto& b : blocks_)
    if (b.size() >= 2) out.push_back(b);
  std::sort(out.begin(), out.end(), [](const Block& a, const Block& b) { return a.back() < b.back(); });
  return out;
}

std::string to_string(const NoncrossingPartition& x) { return to_string(x.perm()); }

bool canonical_less(const NoncrossingPartition& a, const NoncrossingPartition& b) {
  const int la = a.length();
  const int lb = b.length();
  if (la != lb) return la < lb;
  return a.perm().window() < b.perm().window();
}

namespace {

// All noncrossing partitions of the interval lo..hi.
std::vector<std::vector<Block>> interval_partitions(int lo, int hi) {
  if (lo > hi) return {{}};
  std::vector<std::vector<Block>> out;
  // Grow the block of lo one vertex at a time; each gap is filled independently.
  std::function<void(Block&, std::vector<Block>&)> grow = [&](Block& block, std::vector<Block>& rest) {
    const int last = block.back();
    for (const auto& tail : interval_partitions(last + 1, hi)) {
      std::vector<Block> full = rest;
      full.push_back(block);
      full.insert(full.end(), tail.begin(), tail.end());
      out.push_back(std::move(full));
    }
    for (int next = last + 1; next <= hi; ++next) {
      for (const auto& gap : interval_partitions(last + 1, next - 1)) {
        std::vector<Block> rest2 = rest;
        rest2.insert(rest2.end(), gap.begin(), gap.end());
        block.push_back(next);
        grow(block, rest2);
        block.pop_back();
      }
    }
  };
  Block block{lo};
  std::vector<Block> rest;
  grow(block, rest);
  return out;
}

}  // namespace

std::vector<NoncrossingPartition> enumerate_pc(int n) {
  require_rank(n);
  std::vector<NoncrossingPartition> out;
  for (auto& blocks : interval_partitions(1, n + 1)) out.push_back(NoncrossingPartition::from_blocks(n, std::move(blocks)));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<NoncrossingPartition> enumerate_pc_by_absolute_order(int n) {
  require_rank(n);
  const Permutation c = Permutation::coxeter_element(n);
  std::vector<int> w = Permutation::identity(n).window();
  std::vector<NoncrossingPartition> out;
  do {
    Permutation p(w);
    if (absolute_leq(p, c)) out.push_back(NoncrossingPartition::from_permutation(p));
  } while (std::next_permutation(w.begin(), w.end()));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

DUSets du_sets(const NoncrossingPartition& x) {
  DUSets s;
  for (const auto& b : x.blocks()) {
    if (b.size() < 2) continue;
    s.down.insert(s.down.end(), b.begin(), b.end() - 1);
    s.up.insert(s.up.end(), b.begin() + 1, b.end());
  }
  std::sort(s.down.begin(), s.down.end());
  std::sort(s.up.begin(), s.up.end());
  return s;
}

bool is_admissible_pair(const std::vector<int>& D, const std::vector<int>& U, int n) {
  if (D.size() != U.size()) return false;
  for (std::size_t k = 0; k < D.size(); ++k) {
    if (D[k] < 1 || U[k] > n + 1 || D[k] >= U[k]) return false;
    if (k > 0 && (D[k - 1] >= D[k] || U[k - 1] >= U[k])) return false;
  }
  return true;
}

NoncrossingPartition eps_inverse(const std::vector<int>& D, const std::vector<int>& U, int n) {
  require_rank(n);
  if (!is_admissible_pair(D, U, n)) throw PreconditionError("(D, U) is not an admissible pair");
  std::vector<int> common;
  std::set_intersection(D.begin(), D.end(), U.begin(), U.end(), std::back_inserter(common));
  std::vector<int> initial;
  std::vector<int> terminal;
  std::set_difference(D.begin(), D.end(), common.begin(), common.end(), std::back_inserter(initial));
  std::set_difference(U.begin(), U.end(), common.begin(), common.end(), std::back_inserter(terminal));

  // Join the largest open initial vertex to the first terminal vertex after it.
  std::vector<Block> polys;
  while (!initial.empty()) {
    const int d = initial.back();
    initial.pop_back();
    auto t = std::upper_bound(terminal.begin(), terminal.end(), d);
    if (t == terminal.end()) throw InvariantError("no terminal vertex after " + std::to_string(d));
    polys.push_back({d, *t});
    terminal.erase(t);
  }

  // Each shared vertex joins the innermost polygon it is nested in.
  for (int r : common) {
    Block* best = nullptr;
    int best_gap = 0;
    for (auto& p : polys) {
      for (std::size_t k = 1; k < p.size(); ++k) {
        if (p[k - 1] < r && r < p[k] && (best == nullptr || p[k] - p[k - 1] < best_gap)) {
          best = &p;
          best_gap = p[k] - p[k - 1];
        }
      }
    }
    if (best == nullptr) throw InvariantError("vertex " + std::to_string(r) + " is nested in no polygon");
    best->insert(std::upper_bound(best->begin(), best->end(), r), r);
  }

  std::vector<bool> used(static_cast<std::size_t>(n + 2), false);
  for (const auto& p : polys)
    for (int a : p) used[static_cast<std::size_t>(a)] = true;
  for (int a = 1; a <= n + 1; ++a)
    if (!used[static_cast<std::size_t>(a)]) polys.push_back({a});
  return NoncrossingPartition::from_blocks(n, std::move(polys));
}

std::string to_string(const SignedWord& w) {
  if (w.empty()) return "e";
  std::ostringstream out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    out << (k ? " " : "") << 's' << w[k].index;
    if (w[k].sign < 0) out << "^-1";
  }
  return out.str();
}

Word transposition_word(int a, int b) {
  Word w;
  for (int k = b - 1; k > a; --k) w.push_back(k);
  w.push_back(a);
  for (int k = a + 1; k < b; ++k) w.push_back(k);
  return w;
}

Word standard_form_word(const NoncrossingPartition& x) {
  Word w;
  for (const auto& p : x.polygons())
    for (std::size_t k = 1; k < p.size(); ++k) {
      Word syl = transposition_word(p[k - 1], p[k]);
      w.insert(w.end(), syl.begin(), syl.end());
    }
  return w;
}

SignedWord standard_form_braid(const NoncrossingPartition& x) {
  SignedWord w;
  for (const auto& p : x.polygons())
    for (std::size_t k = 1; k < p.size(); ++k) {
      const int a = p[k - 1];
      const int b = p[k];
      for (int i = b - 1; i > a; --i) w.push_back({i, -1});
      w.push_back({a, +1});
      for (int i = a + 1; i < b; ++i) w.push_back({i, +1});
    }
  return w;
}

}  // namespace tlbasis
