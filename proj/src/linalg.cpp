#include "troplp/linalg.hpp"

#include <algorithm>
#include <deque>

#include "troplp/errors.hpp"

namespace troplp {

std::size_t SignedMatrix::idx(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw Error("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                ") out of range for " + std::to_string(rows_) + "x" + std::to_string(cols_));
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
}

void SignedMatrix::set(int i, int j, SignedTropical v) {
  if (v.modulus().is_finite() && v.modulus().value().arity() != arity_)
    throw ArityMismatchError("matrix entry arity " + std::to_string(v.modulus().value().arity()) +
                             ", expected " + std::to_string(arity_));
  data_[idx(i, j)] = std::move(v);
}

SignedMatrix SignedMatrix::submatrix(const std::vector<int>& row_idx,
                                     const std::vector<int>& col_idx) const {
  SignedMatrix out(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()), arity_);
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j)
      out.set(static_cast<int>(i), static_cast<int>(j), at(row_idx[i], col_idx[j]));
  return out;
}

SignedMatrix SignedMatrix::transposed() const {
  SignedMatrix out(cols_, rows_, arity_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
  return out;
}

SignedMatrix SignedMatrix::with_column(int j, const std::vector<SignedTropical>& column) const {
  if (static_cast<int>(column.size()) != rows_)
    throw ArityMismatchError("with_column: length " + std::to_string(column.size()) +
                             ", expected " + std::to_string(rows_));
  SignedMatrix out(*this);
  for (int i = 0; i < rows_; ++i) out.set(i, j, column[static_cast<std::size_t>(i)]);
  return out;
}

std::vector<SignedTropical> SignedMatrix::row(int i) const {
  std::vector<SignedTropical> out;
  out.reserve(static_cast<std::size_t>(cols_));
  for (int j = 0; j < cols_; ++j) out.push_back(at(i, j));
  return out;
}

std::vector<SignedTropical> SignedMatrix::column(int j) const {
  std::vector<SignedTropical> out;
  out.reserve(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) out.push_back(at(i, j));
  return out;
}

namespace {

// Max-weight perfect assignment on the finite entries, Hungarian style.
// Potentials live in the group itself: updates only add, subtract and
// compare, so everything stays exact. Bottom entries are absent edges.
struct Assignment {
  bool perfect = false;
  std::vector<int> row_to_col;
  std::vector<GroupValue> u, v;  // optimal potentials, u_i + v_j >= w_ij
};

Assignment solve_assignment(const SignedMatrix& m) {
  const int n = m.rows();
  Assignment res;
  res.row_to_col.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> col_to_row(static_cast<std::size_t>(n), -1);
  res.u.reserve(static_cast<std::size_t>(n));
  res.v.assign(static_cast<std::size_t>(n), GroupValue::zero(m.arity()));

  auto weight = [&](int i, int j) -> const Tropical& { return m.at(i, j).modulus(); };

  for (int i = 0; i < n; ++i) {
    std::optional<GroupValue> row_max;
    for (int j = 0; j < n; ++j)
      if (weight(i, j).is_finite())
        if (!row_max || weight(i, j).value() > *row_max) row_max = weight(i, j).value();
    if (!row_max) return res;  // all-bottom row: no perfect assignment
    res.u.push_back(std::move(*row_max));
  }

  for (int root = 0; root < n; ++root) {
    std::vector<std::optional<GroupValue>> slack(static_cast<std::size_t>(n));
    std::vector<int> slack_from(static_cast<std::size_t>(n), -1);
    std::vector<bool> in_tree(static_cast<std::size_t>(n), false);
    int cur = root;
    int arrival = -1;
    while (true) {
      for (int j = 0; j < n; ++j) {
        if (in_tree[static_cast<std::size_t>(j)] || weight(cur, j).is_bottom()) continue;
        GroupValue s = res.u[static_cast<std::size_t>(cur)] + res.v[static_cast<std::size_t>(j)] -
                       weight(cur, j).value();
        auto& sl = slack[static_cast<std::size_t>(j)];
        if (!sl || s < *sl) {
          sl = std::move(s);
          slack_from[static_cast<std::size_t>(j)] = cur;
        }
      }
      int jmin = -1;
      for (int j = 0; j < n; ++j) {
        if (in_tree[static_cast<std::size_t>(j)] || !slack[static_cast<std::size_t>(j)]) continue;
        if (jmin < 0 || *slack[static_cast<std::size_t>(j)] < *slack[static_cast<std::size_t>(jmin)])
          jmin = j;
      }
      if (jmin < 0) return res;  // unreachable columns: no perfect assignment
      GroupValue delta = *slack[static_cast<std::size_t>(jmin)];
      if (!delta.is_zero()) {
        res.u[static_cast<std::size_t>(root)] = res.u[static_cast<std::size_t>(root)] - delta;
        for (int j = 0; j < n; ++j) {
          if (in_tree[static_cast<std::size_t>(j)]) {
            int i = col_to_row[static_cast<std::size_t>(j)];
            res.u[static_cast<std::size_t>(i)] = res.u[static_cast<std::size_t>(i)] - delta;
            res.v[static_cast<std::size_t>(j)] = res.v[static_cast<std::size_t>(j)] + delta;
          } else if (slack[static_cast<std::size_t>(j)]) {
            slack[static_cast<std::size_t>(j)] = *slack[static_cast<std::size_t>(j)] - delta;
          }
        }
      }
      in_tree[static_cast<std::size_t>(jmin)] = true;
      if (col_to_row[static_cast<std::size_t>(jmin)] < 0) {
        arrival = jmin;
        break;
      }
      cur = col_to_row[static_cast<std::size_t>(jmin)];
    }
    // Augment along the alternating path recorded in slack_from.
    int j = arrival;
    while (true) {
      int i = slack_from[static_cast<std::size_t>(j)];
      int prev = res.row_to_col[static_cast<std::size_t>(i)];
      res.row_to_col[static_cast<std::size_t>(i)] = j;
      col_to_row[static_cast<std::size_t>(j)] = i;
      if (i == root) break;
      j = prev;
    }
  }
  res.perfect = true;
  return res;
}

// A bipartite graph containing a perfect matching has exactly one iff
// repeatedly matching degree-1 vertices consumes the whole graph.
bool tight_matching_unique(const std::vector<std::vector<bool>>& tight, int n) {
  std::vector<int> rdeg(static_cast<std::size_t>(n), 0), cdeg(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (tight[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
        ++rdeg[static_cast<std::size_t>(i)];
        ++cdeg[static_cast<std::size_t>(j)];
      }
  std::vector<bool> row_live(static_cast<std::size_t>(n), true), col_live(static_cast<std::size_t>(n), true);
  std::deque<std::pair<bool, int>> q;  // (is_row, index)
  for (int i = 0; i < n; ++i) {
    if (rdeg[static_cast<std::size_t>(i)] == 1) q.emplace_back(true, i);
    if (cdeg[static_cast<std::size_t>(i)] == 1) q.emplace_back(false, i);
  }
  int removed = 0;
  auto drop_pair = [&](int i, int j) {
    row_live[static_cast<std::size_t>(i)] = false;
    col_live[static_cast<std::size_t>(j)] = false;
    removed += 2;
    for (int k = 0; k < n; ++k) {
      if (col_live[static_cast<std::size_t>(k)] && tight[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] && k != j)
        if (--cdeg[static_cast<std::size_t>(k)] == 1) q.emplace_back(false, k);
      if (row_live[static_cast<std::size_t>(k)] && tight[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] && k != i)
        if (--rdeg[static_cast<std::size_t>(k)] == 1) q.emplace_back(true, k);
    }
  };
  while (!q.empty()) {
    auto [is_row, idx] = q.front();
    q.pop_front();
    if (is_row) {
      if (!row_live[static_cast<std::size_t>(idx)] || rdeg[static_cast<std::size_t>(idx)] != 1) continue;
      for (int j = 0; j < n; ++j)
        if (col_live[static_cast<std::size_t>(j)] && tight[static_cast<std::size_t>(idx)][static_cast<std::size_t>(j)]) {
          drop_pair(idx, j);
          break;
        }
    } else {
      if (!col_live[static_cast<std::size_t>(idx)] || cdeg[static_cast<std::size_t>(idx)] != 1) continue;
      for (int i = 0; i < n; ++i)
        if (row_live[static_cast<std::size_t>(i)] && tight[static_cast<std::size_t>(i)][static_cast<std::size_t>(idx)]) {
          drop_pair(i, idx);
          break;
        }
    }
  }
  return removed == 2 * n;
}

int permutation_parity(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  int transpositions = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = perm[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? +1 : -1;
}

} // namespace

PermanentResult tropical_permanent(const SignedMatrix& m) {
  if (m.rows() != m.cols()) throw Error("tropical_permanent: matrix must be square");
  const int n = m.rows();
  if (n < 1) throw Error("tropical_permanent: side must be >= 1");

  PermanentResult res;
  Assignment asg = solve_assignment(m);
  if (!asg.perfect) return res;  // bottom value, sign 0

  GroupValue total = GroupValue::zero(m.arity());
  for (int i = 0; i < n; ++i)
    total = total + m.at(i, asg.row_to_col[static_cast<std::size_t>(i)]).modulus().value();
  res.value = Tropical(std::move(total));
  res.optimal_permutation = asg.row_to_col;

  // Optimal permutations are exactly the perfect matchings of the tight
  // subgraph u_i + v_j = w_ij (complementary slackness).
  std::vector<std::vector<bool>> tight(static_cast<std::size_t>(n),
                                       std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Tropical& w = m.at(i, j).modulus();
      if (w.is_finite() &&
          w.value() == asg.u[static_cast<std::size_t>(i)] + asg.v[static_cast<std::size_t>(j)])
        tight[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
    }
  res.unique = tight_matching_unique(tight, n);

  if (res.unique) {
    int s = permutation_parity(asg.row_to_col);
    for (int i = 0; i < n; ++i) s *= m.at(i, asg.row_to_col[static_cast<std::size_t>(i)]).sign();
    res.sign = s;
  }
  return res;
}

std::vector<SignedTropical> tropical_cramer(const SignedMatrix& a,
                                            const std::vector<SignedTropical>& b) {
  if (a.rows() != a.cols()) throw Error("tropical_cramer: matrix must be square");
  const int n = a.rows();
  if (static_cast<int>(b.size()) != n)
    throw ArityMismatchError("tropical_cramer: rhs length " + std::to_string(b.size()) +
                             ", expected " + std::to_string(n));

  PermanentResult den = tropical_permanent(a);
  if (den.value.is_bottom()) throw SingularityError("tropical_cramer: singular system matrix");
  if (!den.unique) throw DegeneracyError("tropical_cramer: system permanent attained twice");

  std::vector<SignedTropical> x;
  x.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    PermanentResult num = tropical_permanent(a.with_column(j, b));
    if (num.value.is_bottom()) {
      x.push_back(SignedTropical::bottom());
      continue;
    }
    if (!num.unique)
      throw DegeneracyError("tropical_cramer: substituted permanent attained twice (column " +
                            std::to_string(j) + ")");
    x.push_back(SignedTropical::of(-num.sign * den.sign,
                                   Tropical(num.value.value() - den.value.value())));
  }
  return x;
}

int minor_sign_oracle(const SignedMatrix& m, const std::vector<int>& row_set,
                      const std::vector<int>& col_set) {
  if (row_set.empty() || row_set.size() != col_set.size())
    throw Error("minor_sign_oracle: row/column sets must be non-empty and of equal size");
  PermanentResult p = tropical_permanent(m.submatrix(row_set, col_set));
  if (p.degenerate()) throw DegeneracyError("minor_sign_oracle: degenerate minor");
  return p.sign;
}

namespace {

bool next_combination(std::vector<int>& comb, int limit) {
  const int k = static_cast<int>(comb.size());
  for (int i = k - 1; i >= 0; --i) {
    if (comb[static_cast<std::size_t>(i)] < limit - (k - i)) {
      ++comb[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

} // namespace

std::optional<std::pair<std::vector<int>, std::vector<int>>>
find_degenerate_submatrix(const SignedMatrix& m, const GenericityLimits& limits) {
  if (std::max(m.rows(), m.cols()) > limits.max_dim)
    throw SizeGuardError("genericity check rejected: " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " exceeds max dimension " +
                         std::to_string(limits.max_dim));
  const int kmax = std::min({m.rows(), m.cols(), limits.max_minor});
  for (int k = 1; k <= kmax; ++k) {
    std::vector<int> rows_sel(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) rows_sel[static_cast<std::size_t>(i)] = i;
    do {
      std::vector<int> cols_sel(static_cast<std::size_t>(k));
      for (int j = 0; j < k; ++j) cols_sel[static_cast<std::size_t>(j)] = j;
      do {
        if (tropical_permanent(m.submatrix(rows_sel, cols_sel)).degenerate())
          return std::make_pair(rows_sel, cols_sel);
      } while (next_combination(cols_sel, m.cols()));
    } while (next_combination(rows_sel, m.rows()));
  }
  return std::nullopt;
}

bool is_tropically_generic(const SignedMatrix& m, const GenericityLimits& limits) {
  return !find_degenerate_submatrix(m, limits).has_value();
}

} // namespace troplp
