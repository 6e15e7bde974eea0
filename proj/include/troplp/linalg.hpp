#ifndef TROPLP_LINALG_HPP
#define TROPLP_LINALG_HPP

#include <optional>
#include <utility>
#include <vector>

#include "troplp/tropical.hpp"

namespace troplp {

/// Dense rectangular matrix of signed tropical numbers with a shared group
/// arity. The arity is stored explicitly so that all-bottom matrices still
/// carry it.
class SignedMatrix {
public:
  SignedMatrix() : rows_(0), cols_(0), arity_(1) {}
  SignedMatrix(int rows, int cols, int arity)
      : rows_(rows), cols_(cols), arity_(arity),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int arity() const { return arity_; }

  const SignedTropical& at(int i, int j) const { return data_[idx(i, j)]; }
  void set(int i, int j, SignedTropical v);

  SignedMatrix submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;
  SignedMatrix transposed() const;
  SignedMatrix with_column(int j, const std::vector<SignedTropical>& column) const;
  std::vector<SignedTropical> row(int i) const;
  std::vector<SignedTropical> column(int j) const;

private:
  std::size_t idx(int i, int j) const;
  int rows_, cols_, arity_;
  std::vector<SignedTropical> data_;
};

/// Result of a tropical permanent computation.
///  - value: max over permutations s of sum_i |M(i, s(i))|, bottom entries
///    excluding the permutation; bottom when no permutation is finite.
///  - optimal_permutation: an argmax (row i -> column perm[i]), absent when
///    value is bottom.
///  - unique: whether exactly one permutation attains the maximum.
///  - sign: parity of the optimal permutation times the entry signs when the
///    matrix is tropically non-singular (finite value, unique attaining
///    permutation); 0 when value is bottom. A finite non-unique optimum keeps
///    sign 0 and unique = false; callers that need non-singularity must check
///    `degenerate()`.
struct PermanentResult {
  Tropical value;
  std::optional<std::vector<int>> optimal_permutation;
  bool unique = false;
  int sign = 0;

  bool nonsingular() const { return value.is_finite() && unique; }
  bool degenerate() const { return value.is_finite() && !unique; }
};

/// Tropical permanent via a max-weight perfect-assignment solve with dual
/// potentials in the group; uniqueness is decided on the tight subgraph.
PermanentResult tropical_permanent(const SignedMatrix& m);

/// Solves the n x n system "A x (+) b active in every row" by tropical Cramer
/// ratios: |x_j| = tper(A[j<-b]) - tper(A), sign(x_j) = -sign(A[j<-b]) sign(A).
/// This is the tropicalization of x = -A^{-1} b.
/// Throws SingularityError when tper(A) is bottom and DegeneracyError when a
/// required permanent is finite but not unique.
std::vector<SignedTropical> tropical_cramer(const SignedMatrix& a,
                                            const std::vector<SignedTropical>& b);

/// Sign of the tropical minor on rows I, columns J (equal sizes >= 1).
/// Throws DegeneracyError when the minor is finite but not unique.
int minor_sign_oracle(const SignedMatrix& m, const std::vector<int>& row_set,
                      const std::vector<int>& col_set);

struct GenericityLimits {
  int max_dim = 12;    // reject larger inputs outright
  int max_minor = 5;   // largest square submatrix side enumerated
};

/// Searches all square submatrices (up to the limits) for one whose permanent
/// is finite but attained by several permutations. Returns the witness
/// (rows, cols) or nullopt when none exists in the searched range.
std::optional<std::pair<std::vector<int>, std::vector<int>>>
find_degenerate_submatrix(const SignedMatrix& m, const GenericityLimits& limits = {});

/// True iff every square submatrix within the limits is bottom-permanent or
/// tropically non-singular. Exhaustive and exponential; intended for
/// desk-scale matrices. Throws SizeGuardError above limits.max_dim.
bool is_tropically_generic(const SignedMatrix& m, const GenericityLimits& limits = {});

} // namespace troplp

#endif
