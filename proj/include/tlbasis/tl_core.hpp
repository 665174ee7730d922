#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tlbasis/coxeter.hpp"
#include "tlbasis/laurent.hpp"

namespace tlbasis {

// A planar perfect matching on 2(n+1) boundary points. Top point k has
// index k-1, bottom point k has index n+k.
class TLDiagram {
 public:
  static TLDiagram identity(int n);
  static TLDiagram generator(int i, int n);
  // Pairs use the same point indexing; throws PreconditionError unless the
  // pairs form a perfect matching.
  static TLDiagram from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

  int rank() const noexcept { return static_cast<int>(partner_.size()) / 2 - 1; }
  int points() const noexcept { return static_cast<int>(partner_.size()); }
  int partner(int point) const { return partner_[static_cast<std::size_t>(point)]; }
  const std::vector<std::uint8_t>& partners() const noexcept { return partner_; }
  // Each pair (a, b) with a < b, sorted.
  std::vector<std::pair<int, int>> pairs() const;
  bool is_planar() const;

  bool is_top(int point) const noexcept { return point <= rank(); }
  // 1-based label within its row.
  int label(int point) const noexcept { return is_top(point) ? point + 1 : point - rank(); }

  friend bool operator==(const TLDiagram&, const TLDiagram&) = default;
  friend auto operator<=>(const TLDiagram& a, const TLDiagram& b) { return a.partner_ <=> b.partner_; }

 private:
  explicit TLDiagram(std::vector<std::uint8_t> partner) : partner_(std::move(partner)) {}
  std::vector<std::uint8_t> partner_;
};

// "T3" / "B1" style label for a boundary point.
std::string point_label(const TLDiagram& d, int point);

struct DiagramProduct {
  TLDiagram diagram;
  int loops;
};
// top stacked above bottom; returns the composite and the closed loops removed.
DiagramProduct diagram_mul(const TLDiagram& top, const TLDiagram& bottom);

TLDiagram fc_to_diagram(const FullyCommutative& w);
FullyCommutative diagram_to_fc(const TLDiagram& d);

struct BasisWord {
  FullyCommutative basis;
  int loops;  // b_{j_1} ... b_{j_m} = delta^loops * b_basis
};
BasisWord word_to_basis(const Word& w, int n);

// Per-rank lookup tables: W_f in (J, I) order, their diagrams, the inverse
// dictionary, and products with single generators. Built once per rank and
// immutable afterwards.
class FcTable {
 public:
  static const FcTable& get(int n);

  struct Product {
    std::size_t index;
    int loops;
  };

  int rank() const noexcept { return n_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<FullyCommutative>& elements() const noexcept { return elements_; }
  const FullyCommutative& element(std::size_t idx) const { return elements_[idx]; }
  const TLDiagram& diagram(std::size_t idx) const { return diagrams_[idx]; }
  std::size_t index_of(const FullyCommutative& w) const;
  std::optional<std::size_t> find(const TLDiagram& d) const;
  std::size_t identity_index() const noexcept { return identity_; }
  // b_w * b_i and b_i * b_w.
  Product times_generator(std::size_t idx, int i) const;
  Product generator_times(int i, std::size_t idx) const;
  Product multiply(std::size_t a, std::size_t b) const;

 private:
  explicit FcTable(int n);

  int n_;
  std::vector<FullyCommutative> elements_;
  std::vector<TLDiagram> diagrams_;
  std::map<std::vector<std::uint8_t>, std::size_t> lookup_;
  std::vector<std::vector<Product>> right_;  // [i-1][idx]
  std::vector<std::vector<Product>> left_;
  std::size_t identity_ = 0;
};

// Finite Z[v, v^-1]-combination of diagram basis elements b_w.
class TLElement {
 public:
  explicit TLElement(int n);
  static TLElement unit(int n);
  static TLElement basis(const FullyCommutative& w, LaurentPoly coeff = LaurentPoly::constant(1));
  static TLElement generator(int i, int n);

  int rank() const noexcept { return n_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  // Keyed by FcTable index, i.e. by (J, I) order.
  const std::map<std::size_t, LaurentPoly>& indexed_terms() const noexcept { return terms_; }
  std::vector<std::pair<FullyCommutative, LaurentPoly>> terms() const;
  LaurentPoly coeff(const FullyCommutative& w) const;

  void add_term(std::size_t idx, const LaurentPoly& c);
  void add_term(const FullyCommutative& w, const LaurentPoly& c);

  TLElement& operator+=(const TLElement& other);
  TLElement& operator-=(const TLElement& other);
  TLElement operator-() const;
  TLElement times_generator(int i) const;
  TLElement generator_times(int i) const;

  friend TLElement operator+(TLElement a, const TLElement& b) { return a += b; }
  friend TLElement operator-(TLElement a, const TLElement& b) { return a -= b; }
  friend TLElement operator*(const LaurentPoly& p, const TLElement& a);
  friend TLElement operator*(const TLElement& a, const TLElement& b);
  friend bool operator==(const TLElement&, const TLElement&) = default;

 private:
  int n_;
  std::map<std::size_t, LaurentPoly> terms_;
};

TLElement el_add(const TLElement& a, const TLElement& b);
TLElement el_scale(const LaurentPoly& p, const TLElement& a);
TLElement el_mul(const TLElement& a, const TLElement& b);

std::string to_string(const TLElement& t);

}  // namespace tlbasis
