#ifndef FFLA_SPARSE_ELIMINATION_HPP
#define FFLA_SPARSE_ELIMINATION_HPP

#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ffla/elim/derived.hpp"
#include "ffla/matrix/sparse_matrix.hpp"

namespace ffla {

enum class PivotPolicy {
  /// Sparsest active row, then the column with fewest active nonzeros.
  Reordering,
  /// First active row with a nonzero, first nonzero in it.
  FirstNonzero,
};

struct FillStats {
  /// Nonzeros created at positions that are structurally zero in A.
  std::uint64_t fill_in = 0;
  /// All entries created by updates, wherever they land.
  std::uint64_t created = 0;
  /// Entries that became exactly zero and were dropped.
  std::uint64_t cancellations = 0;
  std::size_t steps = 0;
  std::size_t max_active_nnz = 0;
};

struct SparseEliminationOptions {
  PivotPolicy policy = PivotPolicy::Reordering;
  /// Keep the multipliers, i.e. L, for reconstruction checks.
  bool keep_multipliers = false;
  /// Hybrid switch: when set, hand the trailing block to dense PLE once its
  /// density exceeds the threshold and its dense footprint fits the budget.
  std::optional<double> density_threshold;
  std::uint64_t memory_budget = std::uint64_t{1} << 30;
  MulConfig dense;
  /// Recount rows and columns after every step and compare.
  bool check_counts = false;
};

struct SparseElimination {
  /// Pivot rows in elimination order, original column indices.
  std::vector<SparseRow> U;
  /// Row order: pivot rows in order, then the other rows ascending.
  std::vector<std::size_t> row_order;
  /// Column order: pivot columns in order, then the other columns ascending.
  std::vector<std::size_t> col_order;
  std::size_t rank = 0;
  /// sign(P) sign(Q) times the pivots (and the dense tail), square inputs only.
  std::optional<Element> det;
  FillStats fill;
  /// Step at which the dense tail took over, and its size and rank.
  std::optional<std::size_t> switch_step;
  std::size_t dense_rows = 0;
  std::size_t dense_cols = 0;
  std::size_t dense_rank = 0;
  /// (row, step, multiplier) with row_i -= multiplier * U[step].
  std::vector<Triplet> multipliers;
};

namespace detail {

inline int permutation_parity(const std::vector<std::size_t>& order) {
  std::vector<bool> seen(order.size(), false);
  std::size_t swaps = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = order[j]) {
      seen[j] = true;
      ++len;
    }
    swaps += len - 1;
  }
  return swaps % 2 ? -1 : 1;
}

inline bool row_has(const SparseRow& r, std::size_t c) {
  auto it = std::lower_bound(r.begin(), r.end(), c, [](const SparseEntry& e, std::size_t x) { return e.col < x; });
  return it != r.end() && it->col == c;
}

inline const SparseEntry* row_find(const SparseRow& r, std::size_t c) {
  auto it = std::lower_bound(r.begin(), r.end(), c, [](const SparseEntry& e, std::size_t x) { return e.col < x; });
  return it != r.end() && it->col == c ? &*it : nullptr;
}

class EliminationWorkspace {
 public:
  EliminationWorkspace(const SparseMatrix& a, const SparseEliminationOptions& opt)
      : a_(a), f_(a.field()), opt_(opt), rows_(a.rows()), active_(a.rows(), true), col_count_(a.cols(), 0),
        col_rows_(a.cols()) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      rows_[i] = a.row(i);
      for (const auto& e : rows_[i]) {
        ++col_count_[e.col];
        col_rows_[e.col].push_back(i);
      }
      by_size_.insert({rows_[i].size(), i});
      active_nnz_ += rows_[i].size();
    }
  }

  SparseElimination run() {
    SparseElimination out;
    std::vector<bool> pivot_row(a_.rows(), false), pivot_col(a_.cols(), false);
    for (;;) {
      out.fill.max_active_nnz = std::max(out.fill.max_active_nnz, active_nnz_);
      if (opt_.density_threshold && should_switch()) {
        out.switch_step = out.fill.steps;
        break;
      }
      const auto pick = choose_pivot();
      if (!pick) break;
      const auto [p, c] = *pick;
      eliminate(p, c, out);
      pivot_row[p] = pivot_col[c] = true;
      out.row_order.push_back(p);
      out.col_order.push_back(c);
      out.U.push_back(std::move(rows_[p]));
      rows_[p].clear();
      ++out.fill.steps;
      if (opt_.check_counts) verify_counts();
    }
    out.rank = out.U.size();

    // Remaining rows and columns ascending; they form the trailing block.
    std::vector<std::size_t> tail_rows, tail_cols;
    for (std::size_t i = 0; i < a_.rows(); ++i)
      if (!pivot_row[i]) tail_rows.push_back(i);
    for (std::size_t j = 0; j < a_.cols(); ++j)
      if (!pivot_col[j]) tail_cols.push_back(j);

    Element tail_det = 1;
    if (out.switch_step) {
      DenseMatrix s(f_, tail_rows.size(), tail_cols.size());
      std::vector<std::size_t> pos(a_.cols(), 0);
      for (std::size_t j = 0; j < tail_cols.size(); ++j) pos[tail_cols[j]] = j;
      for (std::size_t i = 0; i < tail_rows.size(); ++i)
        for (const auto& e : rows_[tail_rows[i]]) s(i, pos[e.col]) = e.value;
      out.dense_rows = s.rows();
      out.dense_cols = s.cols();
      const PleFactors pf = ple(s, opt_.dense);
      out.dense_rank = pf.rank;
      out.rank += pf.rank;
      if (s.square()) tail_det = determinant(s, opt_.dense);
    } else if (!tail_rows.empty() && !tail_cols.empty()) {
      tail_det = 0;  // rank deficient: the remaining rows are zero
    }

    out.row_order.insert(out.row_order.end(), tail_rows.begin(), tail_rows.end());
    out.col_order.insert(out.col_order.end(), tail_cols.begin(), tail_cols.end());
    if (a_.rows() == a_.cols()) {
      Element d = tail_det;
      for (std::size_t k = 0; k < out.U.size(); ++k) d = f_.mul(d, row_find(out.U[k], out.col_order[k])->value);
      if (permutation_parity(out.row_order) * permutation_parity(out.col_order) < 0) d = f_.neg(d);
      out.det = d;
    }
    return out;
  }

 private:
  bool should_switch() const {
    std::size_t m = 0, n = 0;
    for (auto it = by_size_.lower_bound({1, 0}); it != by_size_.end(); ++it) ++m;
    for (auto c : col_count_) n += c > 0;
    if (m == 0 || n == 0) return false;
    const double density = static_cast<double>(active_nnz_) / (static_cast<double>(m) * static_cast<double>(n));
    const long double bytes = static_cast<long double>(m) * n * sizeof(Element);
    return density > *opt_.density_threshold && bytes <= static_cast<long double>(opt_.memory_budget);
  }

  std::optional<std::pair<std::size_t, std::size_t>> choose_pivot() const {
    auto it = by_size_.lower_bound({1, 0});
    if (it == by_size_.end()) return std::nullopt;
    if (opt_.policy == PivotPolicy::FirstNonzero) {
      for (std::size_t i = 0; i < rows_.size(); ++i)
        if (active_[i] && !rows_[i].empty()) return std::pair{i, rows_[i].front().col};
      return std::nullopt;
    }
    const std::size_t p = it->second;
    std::size_t best = rows_[p].front().col;
    for (const auto& e : rows_[p])
      if (col_count_[e.col] < col_count_[best]) best = e.col;
    return std::pair{p, best};
  }

  void set_row(std::size_t i, SparseRow r) {
    by_size_.erase({rows_[i].size(), i});
    active_nnz_ -= rows_[i].size();
    rows_[i] = std::move(r);
    by_size_.insert({rows_[i].size(), i});
    active_nnz_ += rows_[i].size();
  }

  void eliminate(std::size_t p, std::size_t c, SparseElimination& out) {
    const SparseRow& pr = rows_[p];
    const Element inv = f_.inv(row_find(pr, c)->value);

    // The pivot row leaves the active set.
    by_size_.erase({pr.size(), p});
    active_nnz_ -= pr.size();
    active_[p] = false;
    for (const auto& e : pr) --col_count_[e.col];

    std::vector<std::size_t> targets;
    for (auto i : col_rows_[c])
      if (active_[i] && row_has(rows_[i], c)) targets.push_back(i);
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

    for (auto i : targets) {
      const SparseRow& ri = rows_[i];
      const Element mult = f_.mul(row_find(ri, c)->value, inv);
      if (opt_.keep_multipliers) out.multipliers.push_back({i, out.fill.steps, mult});
      const Element s = f_.neg(mult);
      SparseRow merged;
      merged.reserve(ri.size() + pr.size());
      std::size_t x = 0, y = 0;
      while (x < ri.size() || y < pr.size()) {
        if (y == pr.size() || (x < ri.size() && ri[x].col < pr[y].col)) {
          merged.push_back(ri[x++]);
        } else if (x == ri.size() || pr[y].col < ri[x].col) {
          const std::size_t col = pr[y].col;
          merged.push_back({col, f_.mul(s, pr[y].value)});
          ++col_count_[col];
          col_rows_[col].push_back(i);
          ++out.fill.created;
          if (!row_has(a_.row(i), col)) ++out.fill.fill_in;
          ++y;
        } else {
          const Element v = f_.axpy(s, pr[y].value, ri[x].value);
          if (v != 0) {
            merged.push_back({ri[x].col, v});
          } else {
            --col_count_[ri[x].col];
            if (ri[x].col != c) ++out.fill.cancellations;
          }
          ++x;
          ++y;
        }
      }
      set_row(i, std::move(merged));
    }
  }

  void verify_counts() const {
    std::vector<std::size_t> cc(col_count_.size(), 0);
    std::size_t nnz = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (!active_[i]) continue;
      nnz += rows_[i].size();
      for (const auto& e : rows_[i]) {
        if (e.value == 0) throw std::logic_error("stored zero in active row");
        ++cc[e.col];
      }
    }
    if (cc != col_count_ || nnz != active_nnz_) throw std::logic_error("elimination counts out of sync");
  }

  const SparseMatrix& a_;
  PrimeField f_;
  const SparseEliminationOptions& opt_;
  std::vector<SparseRow> rows_;
  std::vector<bool> active_;
  std::vector<std::size_t> col_count_;
  std::vector<std::vector<std::size_t>> col_rows_;
  std::set<std::pair<std::size_t, std::size_t>> by_size_;
  std::size_t active_nnz_ = 0;
};

}  // namespace detail

/// Gaussian elimination choosing the sparsest remaining row and, in it, the
/// nonzero whose column has the fewest active nonzeros.
inline SparseElimination reordered_elimination(const SparseMatrix& a, SparseEliminationOptions opt = {}) {
  opt.density_threshold.reset();
  return detail::EliminationWorkspace(a, opt).run();
}

/// Reordered elimination that finishes with dense PLE on the trailing block
/// once it is dense enough and small enough.
inline SparseElimination hybrid_elimination(const SparseMatrix& a, double density_threshold = 0.2,
                                            std::uint64_t memory_budget = std::uint64_t{1} << 30,
                                            SparseEliminationOptions opt = {}) {
  if (!(density_threshold >= 0 && density_threshold <= 1))
    throw ConfigError("density threshold must lie in [0, 1]");
  opt.density_threshold = density_threshold;
  opt.memory_budget = memory_budget;
  return detail::EliminationWorkspace(a, opt).run();
}

/// A x = b by reordered elimination: replay the recorded row operations on
/// b, check the non-pivot rows vanish, back-substitute with free variables
/// at zero.
inline SolveResult sparse_solve(const SparseMatrix& a, std::span<const Element> b) {
  detail::require_dims(b.size() == a.rows(), "solve: right-hand side length differs from row count");
  const PrimeField& f = a.field();
  SparseEliminationOptions opt;
  opt.keep_multipliers = true;
  const SparseElimination e = reordered_elimination(a, opt);
  Vector y(b.begin(), b.end());
  for (const auto& m : e.multipliers) y[m.row] = f.sub(y[m.row], f.mul(m.value, y[e.row_order[m.col]]));
  SolveResult out;
  out.rank = e.rank;
  for (std::size_t k = e.rank; k < a.rows(); ++k)
    if (y[e.row_order[k]] != 0) {
      out.inconsistent_row = e.row_order[k];
      return out;
    }
  Vector x(a.cols(), 0);
  for (std::size_t k = e.rank; k-- > 0;) {
    const std::size_t c = e.col_order[k];
    Element acc = y[e.row_order[k]];
    Element piv = 0;
    for (const auto& t : e.U[k]) {
      if (t.col == c)
        piv = t.value;
      else
        acc = f.sub(acc, f.mul(t.value, x[t.col]));
    }
    x[c] = f.mul(acc, f.inv(piv));
  }
  out.consistent = true;
  out.x = std::move(x);
  return out;
}

}  // namespace ffla

#endif  // FFLA_SPARSE_ELIMINATION_HPP
