#include "fqw/fqlinalg.hpp"

#include <algorithm>
#include <numeric>

namespace fqw {

MatFq MatFq::identity(const FqField& f, int n) {
  MatFq m(f, n);
  for (int i = 1; i <= n; ++i) m.set(i, i, 1);
  return m;
}

MatFq MatFq::w0(const FqField& f, int n) {
  MatFq m(f, n);
  for (int i = 1; i <= n; ++i) m.set(i, n + 1 - i, 1);
  return m;
}

MatFq MatFq::w1(const FqField& f, int n) {
  if (n < 2) throw std::invalid_argument("MatFq::w1: needs n >= 2");
  MatFq m(f, n);
  for (int i = 1; i <= n - 1; ++i) m.set(i, i + 1, 1);
  m.set(n, 1, 1);
  return m;
}

MatFq MatFq::diagonal(const FqField& f, const std::vector<i64>& d) {
  MatFq m(f, static_cast<int>(d.size()));
  for (int i = 1; i <= m.n(); ++i) m.set(i, i, d[static_cast<size_t>(i - 1)]);
  return m;
}

MatFq block_antidiag(const FqField& f, const BlockAntidiagSpec& spec) {
  if (spec.parts.empty() || spec.parts.size() != spec.coeffs.size())
    throw std::invalid_argument("block_antidiag: parts/coeffs mismatch");
  int n = 0;
  for (int part : spec.parts) {
    if (part <= 0) throw std::invalid_argument("block_antidiag: parts must be positive");
    n += part;
  }
  MatFq m(f, n);
  int row = 1;
  int col_end = n;  // the current block ends at this column
  for (size_t b = 0; b < spec.parts.size(); ++b) {
    const int nb = spec.parts[b];
    const i64 c = spec.coeffs[b];
    if (!f.is_unit(c)) throw std::invalid_argument("block_antidiag: coefficients must be units");
    const int col_start = col_end - nb + 1;
    for (int i = 0; i < nb; ++i) m.set(row + i, col_start + i, c);
    row += nb;
    col_end = col_start - 1;
  }
  return m;
}

bool MatFq::is_unit_upper_triangular() const {
  for (int i = 1; i <= n_; ++i) {
    if (at(i, i) != 1) return false;
    for (int j = 1; j < i; ++j)
      if (at(i, j) != 0) return false;
  }
  return true;
}

bool MatFq::is_lower_triangular() const {
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (at(i, j) != 0) return false;
  return true;
}

bool MatFq::is_diagonal() const {
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (i != j && at(i, j) != 0) return false;
  return true;
}

bool MatFq::is_monomial() const {
  for (int i = 1; i <= n_; ++i) {
    int nz = 0;
    for (int j = 1; j <= n_; ++j)
      if (at(i, j) != 0) ++nz;
    if (nz != 1) return false;
  }
  for (int j = 1; j <= n_; ++j) {
    int nz = 0;
    for (int i = 1; i <= n_; ++i)
      if (at(i, j) != 0) ++nz;
    if (nz != 1) return false;
  }
  return true;
}

MatFq operator*(const MatFq& a, const MatFq& b) {
  if (a.f_ != b.f_ || a.n_ != b.n_) throw std::invalid_argument("MatFq: mixed operands");
  const FqField& f = *a.f_;
  MatFq out(f, a.n_);
  for (int i = 1; i <= a.n_; ++i) {
    for (int k = 1; k <= a.n_; ++k) {
      const i64 aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 1; j <= a.n_; ++j) {
        const i64 bkj = b.at(k, j);
        if (bkj == 0) continue;
        out.set(i, j, f.add(out.at(i, j), f.mul(aik, bkj)));
      }
    }
  }
  return out;
}

namespace {

// Gaussian elimination with row pivoting; sign tracked through swaps.
i64 dense_det(const FqField& f, std::vector<i64> a, int n) {
  i64 det = 1;
  bool negate = false;
  auto at = [&](int r, int c) -> i64& { return a[static_cast<size_t>(r) * n + c]; };
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (at(r, c) != 0) { piv = r; break; }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(at(piv, j), at(c, j));
      negate = !negate;
    }
    const i64 pivot = at(c, c);
    det = f.mul(det, pivot);
    const i64 pivot_inv = f.inv(pivot);
    for (int r = c + 1; r < n; ++r) {
      const i64 factor = f.mul(at(r, c), pivot_inv);
      if (factor == 0) continue;
      for (int j = c; j < n; ++j)
        at(r, j) = f.sub(at(r, j), f.mul(factor, at(c, j)));
    }
  }
  return negate ? f.neg(det) : det;
}

}  // namespace

i64 MatFq::det() const {
  return dense_det(*f_, e_, n_);
}

MatFq MatFq::inverse() const {
  const FqField& f = *f_;
  std::vector<i64> a = e_;
  MatFq out = identity(f, n_);
  auto at = [&](int r, int c) -> i64& { return a[static_cast<size_t>(r) * n_ + c]; };
  for (int c = 0; c < n_; ++c) {
    int piv = -1;
    for (int r = c; r < n_; ++r)
      if (at(r, c) != 0) { piv = r; break; }
    if (piv < 0) throw std::invalid_argument("MatFq::inverse: singular matrix");
    if (piv != c) {
      for (int j = 0; j < n_; ++j) {
        std::swap(at(piv, j), at(c, j));
        i64 t = out.at(piv + 1, j + 1);
        out.set(piv + 1, j + 1, out.at(c + 1, j + 1));
        out.set(c + 1, j + 1, t);
      }
    }
    const i64 inv_piv = f.inv(at(c, c));
    for (int j = 0; j < n_; ++j) {
      at(c, j) = f.mul(at(c, j), inv_piv);
      out.set(c + 1, j + 1, f.mul(out.at(c + 1, j + 1), inv_piv));
    }
    for (int r = 0; r < n_; ++r) {
      if (r == c) continue;
      const i64 factor = at(r, c);
      if (factor == 0) continue;
      for (int j = 0; j < n_; ++j) {
        at(r, j) = f.sub(at(r, j), f.mul(factor, at(c, j)));
        out.set(r + 1, j + 1, f.sub(out.at(r + 1, j + 1), f.mul(factor, out.at(c + 1, j + 1))));
      }
    }
  }
  return out;
}

MatFq unipotent_from_param(const FqField& f, const UnipotentParam& param) {
  MatFq u = MatFq::identity(f, param.n);
  for (int k = 1; k <= param.n - 1; ++k) {
    MatFq factor = MatFq::identity(f, param.n);
    for (int i = 1; i <= k; ++i) factor.set(i, i + 1, param.y(k, i));
    u = u * factor;
  }
  return u;
}

UnipotentEnumerator::UnipotentEnumerator(const FqField& f, int n, i64 cap) : f_(&f), n_(n) {
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) positions_.emplace_back(i, j);
  i64 size = 1;
  for (size_t t = 0; t < positions_.size(); ++t) {
    if (size > cap / f.q() + 1) throw CapExceededError("UnipotentEnumerator: |U_n| exceeds cap");
    size *= f.q();
  }
  if (size > cap) throw CapExceededError("UnipotentEnumerator: |U_n| exceeds cap");
  size_ = size;
}

MatFq UnipotentEnumerator::at_index(i64 idx) const {
  if (idx < 0 || idx >= size_) throw std::invalid_argument("UnipotentEnumerator: index out of range");
  MatFq u = MatFq::identity(*f_, n_);
  // mixed-radix digits of idx, last position fastest
  for (size_t t = positions_.size(); t-- > 0;) {
    u.set(positions_[t].first, positions_[t].second, idx % f_->q());
    idx /= f_->q();
  }
  return u;
}

i64 submatrix_det(const MatFq& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("submatrix_det: size mismatch");
  const int k = static_cast<int>(rows.size());
  std::vector<i64> a(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      a[static_cast<size_t>(i) * k + j] = m.at(rows[static_cast<size_t>(i)], cols[static_cast<size_t>(j)]);
  return dense_det(m.field(), std::move(a), k);
}

i64 principal_minor(const MatFq& m, int i) {
  if (i < 0 || i > m.n()) throw std::invalid_argument("principal_minor: index out of range");
  if (i == 0) return 1;
  std::vector<int> idx(static_cast<size_t>(i));
  std::iota(idx.begin(), idx.end(), 1);
  return submatrix_det(m, idx, idx);
}

i64 shifted_minor(const MatFq& m, int i) {
  if (i < 1 || i > m.n() - 1) throw std::invalid_argument("shifted_minor: index out of range");
  std::vector<int> rows(static_cast<size_t>(i));
  std::iota(rows.begin(), rows.end(), 1);
  std::vector<int> cols;
  for (int j = 1; j <= i - 1; ++j) cols.push_back(j);
  cols.push_back(i + 1);
  return submatrix_det(m, rows, cols);
}

std::optional<BigCellData> big_cell_data(const MatFq& g) {
  const FqField& f = g.field();
  const int n = g.n();
  // Crout pass: lower part of `work` becomes b, strict upper part becomes u.
  std::vector<i64> work = g.data();
  auto at = [&](int r, int c) -> i64& { return work[static_cast<size_t>(r) * n + c]; };
  BigCellData out;
  out.borel_diagonal.resize(static_cast<size_t>(n));
  out.superdiag_sum = 0;
  for (int c = 0; c < n; ++c) {
    for (int r = c; r < n; ++r) {
      i64 acc = at(r, c);
      for (int k = 0; k < c; ++k) acc = f.sub(acc, f.mul(at(r, k), at(k, c)));
      at(r, c) = acc;
    }
    const i64 pivot = at(c, c);
    if (pivot == 0) return std::nullopt;
    out.borel_diagonal[static_cast<size_t>(c)] = pivot;
    const i64 pivot_inv = f.inv(pivot);
    for (int j = c + 1; j < n; ++j) {
      i64 acc = at(c, j);
      for (int k = 0; k < c; ++k) acc = f.sub(acc, f.mul(at(c, k), at(k, j)));
      at(c, j) = f.mul(acc, pivot_inv);
    }
    if (c + 1 < n) out.superdiag_sum = f.add(out.superdiag_sum, at(c, c + 1));
  }
  return out;
}

std::optional<std::pair<MatFq, MatFq>> big_cell_factorize(const MatFq& g) {
  if (g.det() == 0) throw std::invalid_argument("big_cell_factorize: singular matrix");
  const FqField& f = g.field();
  const int n = g.n();
  std::vector<i64> work = g.data();
  auto at = [&](int r, int c) -> i64& { return work[static_cast<size_t>(r) * n + c]; };
  for (int c = 0; c < n; ++c) {
    for (int r = c; r < n; ++r) {
      i64 acc = at(r, c);
      for (int k = 0; k < c; ++k) acc = f.sub(acc, f.mul(at(r, k), at(k, c)));
      at(r, c) = acc;
    }
    if (at(c, c) == 0) return std::nullopt;
    const i64 pivot_inv = f.inv(at(c, c));
    for (int j = c + 1; j < n; ++j) {
      i64 acc = at(c, j);
      for (int k = 0; k < c; ++k) acc = f.sub(acc, f.mul(at(c, k), at(k, j)));
      at(c, j) = f.mul(acc, pivot_inv);
    }
  }
  MatFq b(f, n), u = MatFq::identity(f, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j <= i) b.set(i, j, at(i - 1, j - 1));
      else u.set(i, j, at(i - 1, j - 1));
    }
  return std::make_pair(std::move(b), std::move(u));
}

i64 minor_formula_delta(const FqField& f, const UnipotentParam& param, int i) {
  const int n = param.n;
  if (i < 1 || i > n - 1) throw std::invalid_argument("minor_formula_delta: index out of range");
  i64 prod = 1;
  for (int k = i; k <= n - 1; ++k)
    for (int j = k - i + 1; j <= k; ++j) prod = f.mul(prod, param.y(k, j));
  const i64 sign_exp = static_cast<i64>(i) * (i - 1) / 2;
  return (sign_exp % 2 == 0) ? prod : f.neg(prod);
}

i64 minor_formula_ratio(const FqField& f, const UnipotentParam& param, int i) {
  const int n = param.n;
  if (i < 1 || i > n - 1) throw std::invalid_argument("minor_formula_ratio: index out of range");
  // y_{n,j} = 1 boundary
  auto y = [&](int k, int j) -> i64 { return k == n ? 1 : param.y(k, j); };
  i64 sum = 0;
  for (int k = i; k <= n - 1; ++k) {
    i64 prod = 1;
    for (int m = k; m <= n - 1; ++m) {
      const i64 den = y(m, m - i + 1);
      if (den == 0) throw std::invalid_argument("minor_formula_ratio: zero denominator entry");
      prod = f.mul(prod, f.div(y(m + 1, m - i + 1), den));
    }
    sum = f.add(sum, prod);
  }
  return sum;
}

std::pair<bool, bool> minor_recursion_check(const FqField& f, const UnipotentParam& param, int i) {
  const int n = param.n;
  if (n < 2 || i < 1 || i > n - 1) throw std::invalid_argument("minor_recursion_check: bad index");

  const MatFq big = unipotent_from_param(f, param) * MatFq::w0(f, n);

  // the rank-(n-1) truncation drops the top parameter level
  UnipotentParam small = UnipotentParam::zero(n - 1);
  for (int k = 1; k <= n - 2; ++k)
    for (int j = 1; j <= k; ++j) small.set_y(k, j, param.y(k, j));
  const MatFq small_mat = unipotent_from_param(f, small) * MatFq::w0(f, n - 1);

  // product recursion: Delta_i(big) = prod_{k=1}^{i} y_{n-1,n-k} * Delta_i(small)
  i64 prod = 1;
  for (int k = 1; k <= i; ++k) prod = f.mul(prod, param.y(n - 1, n - k));
  const bool product_ok = principal_minor(big, i) == f.mul(prod, principal_minor(small_mat, i));

  // ratio recursion, with y_{n-1,0} = 0:
  //   ratio_n(i) = 1/y_{n-1,n-i} + (y_{n-1,n-i-1}/y_{n-1,n-i}) * ratio_{n-1}(i)
  bool ratio_ok = true;
  const i64 den = param.y(n - 1, n - i);
  if (den == 0) throw std::invalid_argument("minor_recursion_check: zero denominator entry");
  const i64 delta_big = principal_minor(big, i);
  if (delta_big == 0) throw std::invalid_argument("minor_recursion_check: vanishing minor");
  const i64 lhs = f.div(shifted_minor(big, i), delta_big);
  i64 rhs = f.inv(den);
  if (i <= n - 2) {
    const i64 delta_small = principal_minor(small_mat, i);
    if (delta_small == 0) throw std::invalid_argument("minor_recursion_check: vanishing minor");
    const i64 ratio_small = f.div(shifted_minor(small_mat, i), delta_small);
    const i64 coeff = f.div(param.y(n - 1, n - i - 1), den);
    rhs = f.add(rhs, f.mul(coeff, ratio_small));
  }
  // for i = n-1 the coefficient is y_{n-1,0} = 0 and the small ratio is absent
  ratio_ok = (lhs == rhs);

  return {product_ok, ratio_ok};
}

namespace {

void subsets_rec(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int v = start; v <= n; ++v) {
    cur.push_back(v);
    subsets_rec(n, k, v + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::pair<i64, i64> cauchy_binet(const MatFq& m, const MatFq& n, const std::vector<int>& I,
                                 const std::vector<int>& J) {
  if (I.size() != J.size()) throw std::invalid_argument("cauchy_binet: |I| != |J|");
  if (I.empty()) throw std::invalid_argument("cauchy_binet: empty index sets");
  const FqField& f = m.field();
  const i64 lhs = submatrix_det(m * n, I, J);
  std::vector<std::vector<int>> ks;
  std::vector<int> cur;
  subsets_rec(m.n(), static_cast<int>(I.size()), 1, cur, ks);
  i64 rhs = 0;
  for (const auto& K : ks) rhs = f.add(rhs, f.mul(submatrix_det(m, I, K), submatrix_det(n, K, J)));
  return {lhs, rhs};
}

}  // namespace fqw
