#pragma once

#include <memory>
#include <vector>

#include "fqw/common.hpp"

namespace fqw {

class FqField;
using FqFieldPtr = std::shared_ptr<const FqField>;

/// Arithmetic in F_q, q = p^k with p an odd prime.
///
/// Elements are stored as integer codes in [0, q): the base-p digits of a
/// code are the coefficients of the element in the polynomial basis
/// 1, x, ..., x^{k-1}, least degree first.  The modulus is the
/// lexicographically smallest monic irreducible of degree k over F_p
/// (coefficients compared low-degree-first), and the generator is the first
/// unit in ascending code order of multiplicative order exactly q-1, so the
/// whole construction is reproducible across runs and platforms.
class FqField {
 public:
  /// Builds F_{p^k}.  Throws std::invalid_argument unless p is an odd prime
  /// and k >= 1; throws CapExceededError when p^k exceeds the table cap.
  static FqFieldPtr make(i64 p, int k = 1);

  i64 p() const { return p_; }
  int k() const { return k_; }
  i64 q() const { return q_; }

  /// Modulus coefficients, low degree first, size k+1, monic; empty for k=1.
  const std::vector<i64>& modulus() const { return modulus_; }
  i64 generator() const { return generator_; }

  i64 zero() const { return 0; }
  i64 one() const { return 1; }
  bool is_unit(i64 a) const { return a != 0; }

  i64 add(i64 a, i64 b) const;
  i64 sub(i64 a, i64 b) const;
  i64 neg(i64 a) const;
  i64 mul(i64 a, i64 b) const;
  i64 inv(i64 a) const;   // throws on 0
  i64 div(i64 a, i64 b) const;
  i64 pow(i64 a, i64 e) const;  // negative e allowed for units

  /// Discrete log base the generator, in [0, q-1).  Throws on 0.
  i64 dlog(i64 a) const;
  /// generator^(t mod (q-1)).
  i64 unit_from_dlog(i64 t) const;

  /// Tr(a) = a + a^p + ... + a^{p^{k-1}}, returned as an integer in [0, p).
  i64 trace(i64 a) const { return trace_[static_cast<size_t>(a)]; }

  /// Embedding of the integer x (mod p) as a prime-field element.
  i64 from_int(i64 x) const;

  /// Element from polynomial-basis coefficients (low degree first, < k of them).
  i64 from_coeffs(const std::vector<i64>& coeffs) const;
  /// i-th polynomial-basis coefficient of a.
  i64 coeff(i64 a, int i) const;

  /// All q-1 units in generator-power order: g^0, g^1, ..., g^{q-2}.
  std::vector<i64> units() const;

  void check_element(i64 a) const;

 private:
  FqField() = default;

  i64 p_ = 0;
  int k_ = 0;
  i64 q_ = 0;
  std::vector<i64> modulus_;     // empty when k == 1
  i64 generator_ = 0;
  std::vector<i64> dlog_;        // dlog_[code], defined for code != 0
  std::vector<i64> pow_;         // pow_[t] = code of generator^t, t in [0, q-1)
  std::vector<i64> trace_;       // trace_[code] in [0, p)

  i64 mul_slow(i64 a, i64 b) const;  // polynomial multiplication mod modulus
};

/// A field element with its field handle; convenience value type over the
/// code-level FqField operations.
class FqElement {
 public:
  FqElement(const FqField& f, i64 code) : f_(&f), code_(code) { f.check_element(code); }

  const FqField& field() const { return *f_; }
  i64 code() const { return code_; }
  bool is_zero() const { return code_ == 0; }
  i64 trace() const { return f_->trace(code_); }
  FqElement inverse() const { return FqElement(*f_, f_->inv(code_)); }

  friend FqElement operator+(const FqElement& a, const FqElement& b) {
    a.require_same(b);
    return FqElement(*a.f_, a.f_->add(a.code_, b.code_));
  }
  friend FqElement operator-(const FqElement& a, const FqElement& b) {
    a.require_same(b);
    return FqElement(*a.f_, a.f_->sub(a.code_, b.code_));
  }
  friend FqElement operator*(const FqElement& a, const FqElement& b) {
    a.require_same(b);
    return FqElement(*a.f_, a.f_->mul(a.code_, b.code_));
  }
  friend FqElement operator/(const FqElement& a, const FqElement& b) {
    a.require_same(b);
    return FqElement(*a.f_, a.f_->div(a.code_, b.code_));
  }
  FqElement operator-() const { return FqElement(*f_, f_->neg(code_)); }
  friend bool operator==(const FqElement& a, const FqElement& b) {
    a.require_same(b);
    return a.code_ == b.code_;
  }
  friend bool operator!=(const FqElement& a, const FqElement& b) { return !(a == b); }

 private:
  void require_same(const FqElement& o) const {
    if (f_ != o.f_) throw std::invalid_argument("FqElement: mixed fields");
  }
  const FqField* f_;
  i64 code_;
};

bool is_prime(i64 n);

}  // namespace fqw
