#include "tlbasis/tl_core.hpp"

#include <memory>
#include <mutex>
#include <sstream>

#include "tlbasis/errors.hpp"

namespace tlbasis {

TLDiagram TLDiagram::identity(int n) {
  require_rank(n);
  const int N = n + 1;
  std::vector<std::uint8_t> p(static_cast<std::size_t>(2 * N));
  for (int k = 0; k < N; ++k) {
    p[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(N + k);
    p[static_cast<std::size_t>(N + k)] = static_cast<std::uint8_t>(k);
  }
  return TLDiagram(std::move(p));
}

TLDiagram TLDiagram::generator(int i, int n) {
  if (i < 1 || i > n) throw PreconditionError("generator index " + std::to_string(i) + " out of range");
  TLDiagram d = identity(n);
  const int N = n + 1;
  auto set = [&](int a, int b) {
    d.partner_[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b);
    d.partner_[static_cast<std::size_t>(b)] = static_cast<std::uint8_t>(a);
  };
  set(i - 1, i);
  set(N + i - 1, N + i);
  return d;
}

TLDiagram TLDiagram::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  require_rank(n);
  const int P = 2 * (n + 1);
  if (static_cast<int>(pairs.size()) * 2 != P) throw PreconditionError("wrong number of pairs for a matching");
  std::vector<std::uint8_t> p(static_cast<std::size_t>(P), 0);
  std::vector<bool> used(static_cast<std::size_t>(P), false);
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= P || b >= P || a == b || used[static_cast<std::size_t>(a)] ||
        used[static_cast<std::size_t>(b)])
      throw PreconditionError("pairs do not form a perfect matching");
    used[static_cast<std::size_t>(a)] = used[static_cast<std::size_t>(b)] = true;
    p[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b);
    p[static_cast<std::size_t>(b)] = static_cast<std::uint8_t>(a);
  }
  return TLDiagram(std::move(p));
}

std::vector<std::pair<int, int>> TLDiagram::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < points(); ++a)
    if (a < partner(a)) out.emplace_back(a, partner(a));
  return out;
}

bool TLDiagram::is_planar() const {
  // Walk the boundary top-left -> top-right -> bottom-right -> bottom-left.
  const int N = rank() + 1;
  auto position = [N](int point) { return point < N ? point : 3 * N - 1 - point; };
  std::vector<int> at(static_cast<std::size_t>(2 * N));
  for (int pt = 0; pt < 2 * N; ++pt) at[static_cast<std::size_t>(position(pt))] = pt;
  std::vector<int> stack;
  for (int pos = 0; pos < 2 * N; ++pos) {
    const int other = position(partner(at[static_cast<std::size_t>(pos)]));
    if (other > pos) {
      stack.push_back(pos);
    } else {
      if (stack.empty() || stack.back() != other) return false;
      stack.pop_back();
    }
  }
  return true;
}

std::string point_label(const TLDiagram& d, int point) {
  return (d.is_top(point) ? "T" : "B") + std::to_string(d.label(point));
}

DiagramProduct diagram_mul(const TLDiagram& top, const TLDiagram& bottom) {
  if (top.rank() != bottom.rank()) throw PreconditionError("diagram size mismatch");
  const int N = top.rank() + 1;
  std::vector<bool> visited(static_cast<std::size_t>(N), false);
  std::vector<std::pair<int, int>> result;
  std::vector<bool> done(static_cast<std::size_t>(2 * N), false);

  for (int start = 0; start < 2 * N; ++start) {
    if (done[static_cast<std::size_t>(start)]) continue;
    bool in_top = start < N;
    int point = start;
    int end = -1;
    while (end < 0) {
      if (in_top) {
        const int q = top.partner(point);
        if (q < N) {
          end = q;
        } else {
          visited[static_cast<std::size_t>(q - N)] = true;
          in_top = false;
          point = q - N;
        }
      } else {
        const int q = bottom.partner(point);
        if (q >= N) {
          end = q;
        } else {
          visited[static_cast<std::size_t>(q)] = true;
          in_top = true;
          point = N + q;
        }
      }
    }
    done[static_cast<std::size_t>(start)] = done[static_cast<std::size_t>(end)] = true;
    result.emplace_back(start, end);
  }

  int loops = 0;
  for (int k = 0; k < N; ++k) {
    if (visited[static_cast<std::size_t>(k)]) continue;
    ++loops;
    int m = k;
    do {
      visited[static_cast<std::size_t>(m)] = true;
      const int m2 = top.partner(N + m) - N;
      visited[static_cast<std::size_t>(m2)] = true;
      m = bottom.partner(m2);
    } while (m != k);
  }
  return {TLDiagram::from_pairs(N - 1, result), loops};
}

TLDiagram fc_to_diagram(const FullyCommutative& w) {
  TLDiagram d = TLDiagram::identity(w.rank());
  for (int letter : w.word()) {
    auto [next, loops] = diagram_mul(d, TLDiagram::generator(letter, w.rank()));
    if (loops != 0) throw InvariantError("canonical word of " + to_string(w) + " closed a loop");
    d = std::move(next);
  }
  return d;
}

FullyCommutative diagram_to_fc(const TLDiagram& d) {
  if (!d.is_planar()) throw PreconditionError("diagram is not planar");
  const FcTable& table = FcTable::get(d.rank());
  auto idx = table.find(d);
  if (!idx) throw InvariantError("planar diagram without a fully commutative index");
  return table.element(*idx);
}

BasisWord word_to_basis(const Word& w, int n) {
  TLDiagram d = TLDiagram::identity(n);
  int loops = 0;
  for (int letter : w) {
    auto prod = diagram_mul(d, TLDiagram::generator(letter, n));
    d = std::move(prod.diagram);
    loops += prod.loops;
  }
  return {diagram_to_fc(d), loops};
}

FcTable::FcTable(int n) : n_(n), elements_(enumerate_fc(n)) {
  diagrams_.reserve(elements_.size());
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    diagrams_.push_back(fc_to_diagram(elements_[k]));
    if (!lookup_.emplace(diagrams_.back().partners(), k).second)
      throw InvariantError("two fully commutative elements share a diagram");
    if (elements_[k].is_identity()) identity_ = k;
  }
  right_.resize(static_cast<std::size_t>(n));
  left_.resize(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const TLDiagram g = TLDiagram::generator(i, n);
    for (std::size_t k = 0; k < elements_.size(); ++k) {
      auto r = diagram_mul(diagrams_[k], g);
      auto l = diagram_mul(g, diagrams_[k]);
      right_[static_cast<std::size_t>(i - 1)].push_back({lookup_.at(r.diagram.partners()), r.loops});
      left_[static_cast<std::size_t>(i - 1)].push_back({lookup_.at(l.diagram.partners()), l.loops});
    }
  }
}

const FcTable& FcTable::get(int n) {
  require_rank(n);
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<FcTable>> tables;
  std::lock_guard lock(mutex);
  auto& slot = tables[n];
  if (!slot) slot.reset(new FcTable(n));
  return *slot;
}

std::size_t FcTable::index_of(const FullyCommutative& w) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), w);
  if (it == elements_.end() || *it != w) throw PreconditionError("element of the wrong rank: " + to_string(w));
  return static_cast<std::size_t>(it - elements_.begin());
}

std::optional<std::size_t> FcTable::find(const TLDiagram& d) const {
  auto it = lookup_.find(d.partners());
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

FcTable::Product FcTable::times_generator(std::size_t idx, int i) const {
  return right_.at(static_cast<std::size_t>(i - 1)).at(idx);
}

FcTable::Product FcTable::generator_times(int i, std::size_t idx) const {
  return left_.at(static_cast<std::size_t>(i - 1)).at(idx);
}

FcTable::Product FcTable::multiply(std::size_t a, std::size_t b) const {
  auto prod = diagram_mul(diagrams_[a], diagrams_[b]);
  auto idx = find(prod.diagram);
  if (!idx) throw InvariantError("product diagram missing from the table");
  return {*idx, prod.loops};
}

TLElement::TLElement(int n) : n_(n) { require_rank(n); }

TLElement TLElement::unit(int n) {
  TLElement t(n);
  t.add_term(FcTable::get(n).identity_index(), LaurentPoly::constant(1));
  return t;
}

TLElement TLElement::basis(const FullyCommutative& w, LaurentPoly coeff) {
  TLElement t(w.rank());
  t.add_term(w, coeff);
  return t;
}

TLElement TLElement::generator(int i, int n) {
  return basis(FullyCommutative::from_sets(n, {i}, {i}));
}

std::vector<std::pair<FullyCommutative, LaurentPoly>> TLElement::terms() const {
  const FcTable& table = FcTable::get(n_);
  std::vector<std::pair<FullyCommutative, LaurentPoly>> out;
  for (const auto& [idx, c] : terms_) out.emplace_back(table.element(idx), c);
  return out;
}

LaurentPoly TLElement::coeff(const FullyCommutative& w) const {
  auto it = terms_.find(FcTable::get(n_).index_of(w));
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void TLElement::add_term(std::size_t idx, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(idx, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void TLElement::add_term(const FullyCommutative& w, const LaurentPoly& c) {
  if (w.rank() != n_) throw PreconditionError("rank mismatch in TL element");
  add_term(FcTable::get(n_).index_of(w), c);
}

TLElement& TLElement::operator+=(const TLElement& other) {
  if (other.n_ != n_) throw PreconditionError("rank mismatch in TL element sum");
  for (const auto& [idx, c] : other.terms_) add_term(idx, c);
  return *this;
}

TLElement& TLElement::operator-=(const TLElement& other) {
  if (other.n_ != n_) throw PreconditionError("rank mismatch in TL element difference");
  for (const auto& [idx, c] : other.terms_) add_term(idx, -c);
  return *this;
}

TLElement TLElement::operator-() const {
  TLElement r = *this;
  for (auto& [idx, c] : r.terms_) c = -c;
  return r;
}

TLElement TLElement::times_generator(int i) const {
  const FcTable& table = FcTable::get(n_);
  TLElement r(n_);
  for (const auto& [idx, c] : terms_) {
    auto p = table.times_generator(idx, i);
    r.add_term(p.index, p.loops ? c * lp_delta_pow(static_cast<unsigned>(p.loops)) : c);
  }
  return r;
}

TLElement TLElement::generator_times(int i) const {
  const FcTable& table = FcTable::get(n_);
  TLElement r(n_);
  for (const auto& [idx, c] : terms_) {
    auto p = table.generator_times(i, idx);
    r.add_term(p.index, p.loops ? c * lp_delta_pow(static_cast<unsigned>(p.loops)) : c);
  }
  return r;
}

TLElement operator*(const LaurentPoly& p, const TLElement& a) {
  TLElement r(a.n_);
  if (p.is_zero()) return r;
  for (const auto& [idx, c] : a.terms_) r.terms_.emplace(idx, p * c);
  return r;
}

TLElement operator*(const TLElement& a, const TLElement& b) {
  if (a.n_ != b.n_) throw PreconditionError("rank mismatch in TL product");
  const FcTable& table = FcTable::get(a.n_);
  TLElement r(a.n_);
  for (const auto& [ia, ca] : a.terms_)
    for (const auto& [ib, cb] : b.terms_) {
      auto p = table.multiply(ia, ib);
      LaurentPoly c = ca * cb;
      if (p.loops) c *= lp_delta_pow(static_cast<unsigned>(p.loops));
      r.add_term(p.index, c);
    }
  return r;
}

TLElement el_add(const TLElement& a, const TLElement& b) { return a + b; }
TLElement el_scale(const LaurentPoly& p, const TLElement& a) { return p * a; }
TLElement el_mul(const TLElement& a, const TLElement& b) { return a * b; }

std::string to_string(const TLElement& t) {
  if (t.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : t.terms()) {
    out << (first ? "" : " + ") << '(' << to_string(c) << ")*b[" << to_string(w) << ']';
    first = false;
  }
  return out.str();
}

}  // namespace tlbasis
