#pragma once

#include <map>
#include <memory>
#include <vector>

#include "tlbasis/bijection.hpp"
#include "tlbasis/laurent.hpp"
#include "tlbasis/noncross.hpp"
#include "tlbasis/tl_core.hpp"

namespace tlbasis {

// omega: s_i -> v^-1 - b_i, s_i^-1 -> v - b_i, folded left to right.
TLElement omega_image(const SignedWord& m, int n);
// Z_x, the image of the simple element of x.
TLElement zinno_element(const NoncrossingPartition& x);

// Matrix indexing shared by every base change: position k holds the k-th
// element of P_c in canonical order and its image phi(x) in W_f.
class BasisOrder {
 public:
  static const BasisOrder& get(int n);

  int rank() const noexcept { return n_; }
  std::size_t size() const noexcept { return nc_.size(); }
  const std::vector<NoncrossingPartition>& partitions() const noexcept { return nc_; }
  const std::vector<FullyCommutative>& fully_commutative() const noexcept { return fc_; }
  std::size_t position(const NoncrossingPartition& x) const;
  std::size_t position(const FullyCommutative& w) const;
  // Position of the FcTable index of a diagram basis element.
  std::size_t position_of_table_index(std::size_t table_index) const { return from_table_[table_index]; }

 private:
  explicit BasisOrder(int n);

  int n_;
  std::vector<NoncrossingPartition> nc_;
  std::vector<FullyCommutative> fc_;
  std::map<Permutation, std::size_t> nc_pos_;
  std::vector<std::size_t> from_table_;
};

// Dense square matrix of Laurent polynomials.
class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  explicit LaurentMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  static LaurentMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  LaurentPoly& at(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const LaurentPoly& at(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }
  std::size_t nonzeros() const;
  bool is_upper_triangular() const;

  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<LaurentPoly> data_;
};

// Which base change a matrix carries. Rows and columns both follow BasisOrder.
enum class MatrixKind {
  zinno_in_diagram,  // M: column x holds Z_x in the diagram basis (rows phi(x'))
  diagram_in_zinno,  // H = M^-1: column w holds b_w in the Zinno basis, H[x][w] = h_x^w
  x_in_zinno,        // column w holds X_w in the Zinno basis
  zinno_in_x,
  diagram_in_x,      // q: column w holds b_w in the X basis
  x_in_diagram,      // r: column w holds X_w in the diagram basis
};

struct BaseChangeMatrix {
  int n = 0;
  MatrixKind kind = MatrixKind::zinno_in_diagram;
  LaurentMatrix entries;
};

struct MatrixOptions {
  int max_n = 7;          // raise to 8 explicitly; larger ranks are refused
  unsigned threads = 0;   // 0 picks the hardware concurrency
};

// Builds M and checks triangularity, the Bruhat support conditions and the
// unit diagonal. A violation throws InvariantError naming (w, x).
BaseChangeMatrix z_matrix(int n, const MatrixOptions& options = {});

// Closed form for the coefficient of b_w in Z_psi(w).
LaurentPoly diagonal_coefficient(const FullyCommutative& w);

// Inverse of an upper triangular matrix whose diagonal entries are +-v^k.
LaurentMatrix invert_upper_triangular(const LaurentMatrix& m, unsigned threads = 0);
BaseChangeMatrix invert_triangular(const BaseChangeMatrix& m, unsigned threads = 0);

}  // namespace tlbasis
