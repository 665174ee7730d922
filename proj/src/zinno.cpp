#include "tlbasis/zinno.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "tlbasis/errors.hpp"

namespace tlbasis {

TLElement omega_image(const SignedWord& m, int n) {
  TLElement cur = TLElement::unit(n);
  for (const auto& letter : m) {
    if (letter.index < 1 || letter.index > n) throw PreconditionError("braid letter out of range");
    cur = LaurentPoly::v_power(-letter.sign) * cur - cur.times_generator(letter.index);
  }
  return cur;
}

TLElement zinno_element(const NoncrossingPartition& x) { return omega_image(standard_form_braid(x), x.rank()); }

BasisOrder::BasisOrder(int n) : n_(n), nc_(enumerate_pc(n)) {
  const FcTable& table = FcTable::get(n);
  from_table_.assign(table.size(), table.size());
  for (std::size_t k = 0; k < nc_.size(); ++k) {
    fc_.push_back(phi(nc_[k]));
    nc_pos_.emplace(nc_[k].perm(), k);
    from_table_[table.index_of(fc_.back())] = k;
  }
  if (std::count(from_table_.begin(), from_table_.end(), table.size()) != 0)
    throw InvariantError("phi does not hit every fully commutative element");
}

const BasisOrder& BasisOrder::get(int n) {
  require_rank(n);
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<BasisOrder>> orders;
  FcTable::get(n);
  std::lock_guard lock(mutex);
  auto& slot = orders[n];
  if (!slot) slot.reset(new BasisOrder(n));
  return *slot;
}

std::size_t BasisOrder::position(const NoncrossingPartition& x) const {
  auto it = nc_pos_.find(x.perm());
  if (it == nc_pos_.end()) throw PreconditionError("partition of the wrong rank: " + to_string(x));
  return it->second;
}

std::size_t BasisOrder::position(const FullyCommutative& w) const {
  return from_table_[FcTable::get(n_).index_of(w)];
}

LaurentMatrix LaurentMatrix::identity(std::size_t dim) {
  LaurentMatrix m(dim);
  for (std::size_t k = 0; k < dim; ++k) m.at(k, k) = LaurentPoly::constant(1);
  return m;
}

std::size_t LaurentMatrix::nonzeros() const {
  return static_cast<std::size_t>(
      std::count_if(data_.begin(), data_.end(), [](const LaurentPoly& p) { return !p.is_zero(); }));
}

bool LaurentMatrix::is_upper_triangular() const {
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < r; ++c)
      if (!at(r, c).is_zero()) return false;
  return true;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.dim_ != b.dim_) throw PreconditionError("matrix size mismatch");
  const std::size_t d = a.dim_;
  LaurentMatrix r(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      const LaurentPoly& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j) {
        const LaurentPoly& bkj = b.at(k, j);
        if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

namespace {

// Runs job(k) for k in [0, count) on a small pool.
template <typename Job>
void parallel_for(std::size_t count, unsigned threads, Job job) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    for (std::size_t k = 0; k < count; ++k) job(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < count; k = next++) {
        try {
          job(k);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  pool.clear();
  if (error) std::rethrow_exception(error);
}

bool is_unit(const LaurentPoly& p) {
  auto m = lp_as_monomial(p);
  return m.kind == MonomialClass::Kind::monomial && (m.coefficient == 1 || m.coefficient == -1);
}

}  // namespace

BaseChangeMatrix z_matrix(int n, const MatrixOptions& options) {
  require_rank(n);
  if (n > options.max_n || n > 8)
    throw PreconditionError("rank " + std::to_string(n) + " exceeds the configured maximum " +
                            std::to_string(std::min(options.max_n, 8)));
  const BasisOrder& order = BasisOrder::get(n);
  const std::size_t dim = order.size();
  BaseChangeMatrix out{n, MatrixKind::zinno_in_diagram, LaurentMatrix(dim)};

  parallel_for(dim, options.threads, [&](std::size_t col) {
    const TLElement z = zinno_element(order.partitions()[col]);
    for (const auto& [table_idx, c] : z.indexed_terms()) out.entries.at(order.position_of_table_index(table_idx), col) = c;
  });

  for (std::size_t col = 0; col < dim; ++col) {
    const auto& x = order.partitions()[col];
    for (std::size_t row = 0; row < dim; ++row) {
      if (out.entries.at(row, col).is_zero()) continue;
      const auto& w = order.fully_commutative()[row];
      const std::string where = " at (w=" + to_string(w) + ", x=" + to_string(x) + ")";
      if (row > col) throw InvariantError("M is not upper triangular" + where);
      if (!bruhat_leq(w.perm(), x.perm())) throw InvariantError("support entry with w not below x" + where);
      if (!bruhat_leq(order.partitions()[row].perm(), x.perm()))
        throw InvariantError("support entry with psi(w) not below x" + where);
    }
    if (!is_unit(out.entries.at(col, col)))
      throw InvariantError("diagonal entry is not a unit at x=" + to_string(x));
  }
  return out;
}

LaurentPoly diagonal_coefficient(const FullyCommutative& w) {
  const NoncrossingPartition x = psi(w);
  const int k = zinno_extract(standard_form_braid(x)).negatives;
  const int len = w.length();
  return LaurentPoly::monomial(len % 2 ? -1 : 1, -2 * k + len - x.reflection_length());
}

LaurentMatrix invert_upper_triangular(const LaurentMatrix& m, unsigned threads) {
  const std::size_t d = m.dim();
  std::vector<std::vector<std::size_t>> row_support(d);
  std::vector<BigInt> diag_sign(d);
  std::vector<int> diag_exp(d);
  for (std::size_t r = 0; r < d; ++r) {
    auto mono = lp_as_monomial(m.at(r, r));
    if (!is_unit(m.at(r, r))) throw InvariantError("diagonal entry " + std::to_string(r) + " is not +-v^k");
    diag_sign[r] = mono.coefficient;
    diag_exp[r] = mono.exponent;
    for (std::size_t c = 0; c < d; ++c) {
      if (m.at(r, c).is_zero()) continue;
      if (c < r) throw InvariantError("matrix is not upper triangular");
      if (c > r) row_support[r].push_back(c);
    }
  }

  LaurentMatrix inv(d);
  parallel_for(d, threads, [&](std::size_t col) {
    // Solve m * h = e_col by back substitution; h vanishes below col.
    std::vector<LaurentPoly> h(d);
    for (std::size_t i = col + 1; i-- > 0;) {
      LaurentPoly acc = i == col ? LaurentPoly::constant(1) : LaurentPoly{};
      for (std::size_t j : row_support[i]) {
        if (j > col) break;
        if (!h[j].is_zero()) acc -= m.at(i, j) * h[j];
      }
      if (acc.is_zero()) continue;
      // dividing by s v^e with s = +-1 is multiplying by s v^-e
      h[i] = diag_sign[i] == 1 ? acc.shifted(-diag_exp[i]) : (-acc).shifted(-diag_exp[i]);
    }
    for (std::size_t i = 0; i <= col; ++i) inv.at(i, col) = std::move(h[i]);
  });
  return inv;
}

BaseChangeMatrix invert_triangular(const BaseChangeMatrix& m, unsigned threads) {
  MatrixKind kind = m.kind;
  switch (m.kind) {
    case MatrixKind::zinno_in_diagram: kind = MatrixKind::diagram_in_zinno; break;
    case MatrixKind::diagram_in_zinno: kind = MatrixKind::zinno_in_diagram; break;
    case MatrixKind::x_in_zinno: kind = MatrixKind::zinno_in_x; break;
    case MatrixKind::zinno_in_x: kind = MatrixKind::x_in_zinno; break;
    case MatrixKind::diagram_in_x: kind = MatrixKind::x_in_diagram; break;
    case MatrixKind::x_in_diagram: kind = MatrixKind::diagram_in_x; break;
  }
  return {m.n, kind, invert_upper_triangular(m.entries, threads)};
}

}  // namespace tlbasis
