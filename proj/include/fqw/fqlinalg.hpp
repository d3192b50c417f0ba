#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fqw/gfq.hpp"

namespace fqw {

/// Square matrix over F_q.  Entries are element codes; rows and columns are
/// 1-based in the public minor/factorization API to match the usual
/// linear-algebra indexing of leading principal minors.
class MatFq {
 public:
  MatFq(const FqField& f, int n) : f_(&f), n_(n), e_(static_cast<size_t>(n) * n, 0) {}

  static MatFq identity(const FqField& f, int n);
  /// Anti-diagonal of ones (the longest Weyl element).
  static MatFq w0(const FqField& f, int n);
  /// The n-cycle sending column 1 to the bottom: zero column over I_{n-1} on
  /// top, and (1, 0, ..., 0) as the last row.
  static MatFq w1(const FqField& f, int n);
  static MatFq diagonal(const FqField& f, const std::vector<i64>& d);

  const FqField& field() const { return *f_; }
  int n() const { return n_; }
  i64 at(int i, int j) const { return e_[idx(i, j)]; }          // 1-based
  void set(int i, int j, i64 code) { e_[idx(i, j)] = code; }
  const std::vector<i64>& data() const { return e_; }

  bool is_unit_upper_triangular() const;
  bool is_lower_triangular() const;
  bool is_diagonal() const;
  bool is_monomial() const;  // exactly one nonzero entry per row and column

  i64 det() const;
  MatFq inverse() const;  // throws std::invalid_argument when singular

  friend MatFq operator*(const MatFq& a, const MatFq& b);
  friend bool operator==(const MatFq& a, const MatFq& b) {
    return a.f_ == b.f_ && a.n_ == b.n_ && a.e_ == b.e_;
  }
  friend bool operator!=(const MatFq& a, const MatFq& b) { return !(a == b); }

 private:
  size_t idx(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw std::invalid_argument("MatFq: index out of range");
    return static_cast<size_t>(i - 1) * static_cast<size_t>(n_) + static_cast<size_t>(j - 1);
  }
  const FqField* f_;
  int n_;
  std::vector<i64> e_;
};

/// Block anti-diagonal monomial matrix: c_1 I_{n_1} in the top right, then
/// c_2 I_{n_2} below-left of it, down to c_s I_{n_s} in the bottom left.
struct BlockAntidiagSpec {
  std::vector<int> parts;   // positive, summing to n
  std::vector<i64> coeffs;  // units, one per part
};

MatFq block_antidiag(const FqField& f, const BlockAntidiagSpec& spec);

/// Triangular parameter array y_{k,i}, 1 <= k <= n-1, 1 <= i <= k, for the
/// factored parametrization of the unipotent group
///   u = prod_{k=1}^{n-1} (I + sum_{i=1}^{k} y_{k,i} E_{i,i+1}).
struct UnipotentParam {
  int n = 0;
  std::vector<i64> entries;  // level 1 first; level k contributes k codes

  static UnipotentParam zero(int n) {
    return UnipotentParam{n, std::vector<i64>(static_cast<size_t>(n) * (n - 1) / 2, 0)};
  }
  i64 y(int k, int i) const { return entries[idx(k, i)]; }
  void set_y(int k, int i, i64 code) { entries[idx(k, i)] = code; }

 private:
  size_t idx(int k, int i) const {
    if (k < 1 || k > n - 1 || i < 1 || i > k)
      throw std::invalid_argument("UnipotentParam: index out of range");
    return static_cast<size_t>(k) * (k - 1) / 2 + static_cast<size_t>(i - 1);
  }
};

MatFq unipotent_from_param(const FqField& f, const UnipotentParam& param);

/// Streams all of U_n in a fixed odometer order over the above-diagonal
/// entries (row-major positions, last position fastest).  Random access via
/// at_index keeps partitioned consumption deterministic.
class UnipotentEnumerator {
 public:
  UnipotentEnumerator(const FqField& f, int n, i64 cap = kDefaultEnumCap);
  i64 size() const { return size_; }
  MatFq at_index(i64 idx) const;

 private:
  const FqField* f_;
  int n_;
  i64 size_;
  std::vector<std::pair<int, int>> positions_;
};

/// Leading principal i x i minor; Delta_0 = 1 by convention.
i64 principal_minor(const MatFq& m, int i);
/// Determinant on rows {1..i} and columns {1..i-1} u {i+1}; defined for
/// 1 <= i <= n-1, and equal to the (1,2) entry when i = 1.
i64 shifted_minor(const MatFq& m, int i);
/// Determinant of an arbitrary row/column selection (1-based indices).
i64 submatrix_det(const MatFq& m, const std::vector<int>& rows, const std::vector<int>& cols);

/// Gauss-Bruhat factorization on the big cell: g = b * u with b lower
/// triangular invertible and u unit upper triangular.  Exists (uniquely) iff
/// every leading principal minor of g is nonzero; empty otherwise.
/// Throws std::invalid_argument when g is singular.
std::optional<std::pair<MatFq, MatFq>> big_cell_factorize(const MatFq& g);

/// The part of the factorization character sums consume: the diagonal of b
/// and the superdiagonal sum of u, computed in one elimination pass with no
/// matrices materialized.  No singularity pre-check; a zero pivot reports
/// "not in the big cell", which is the right answer for invertible input.
struct BigCellData {
  std::vector<i64> borel_diagonal;  // n codes, all units
  i64 superdiag_sum = 0;            // sum u_{i,i+1} as a field element
};
std::optional<BigCellData> big_cell_data(const MatFq& g);

/// Closed product formula for Delta_i(u w0):
///   (-1)^{i(i-1)/2} prod_{k=i}^{n-1} prod_{j=k-i+1}^{k} y_{k,j}.
i64 minor_formula_delta(const FqField& f, const UnipotentParam& param, int i);
/// Closed formula for Delta_{i,i+1}(u w0) / Delta_i(u w0):
///   sum_{k=i}^{n-1} prod_{m=k}^{n-1} y_{m+1,m-i+1} / y_{m,m-i+1},
/// with the boundary convention y_{n,j} = 1.
i64 minor_formula_ratio(const FqField& f, const UnipotentParam& param, int i);

/// Evaluates both sides of the two rank-recursion identities for the minors
/// of u w0 (the product recursion for Delta_i, and the ratio recursion for
/// Delta_{i,i+1}/Delta_i with y_{n-1,0} = 0) from raw determinants, and
/// reports (product identity holds, ratio identity holds).
std::pair<bool, bool> minor_recursion_check(const FqField& f, const UnipotentParam& param, int i);

/// Both sides of the Cauchy-Binet identity
///   |(MN)_{I,J}| = sum_K |M_{I,K}| |N_{K,J}|
/// over all K of the same cardinality; returned as (lhs, rhs) for the caller
/// to compare.
std::pair<i64, i64> cauchy_binet(const MatFq& m, const MatFq& n, const std::vector<int>& I,
                                 const std::vector<int>& J);

}  // namespace fqw
