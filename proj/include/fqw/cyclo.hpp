#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "fqw/common.hpp"

namespace fqw {

class CycloRing;
using CycloRingPtr = std::shared_ptr<const CycloRing>;
class CycloNumber;

/// The cyclotomic field Q(zeta_m), represented as Q[x]/(Phi_m) where Phi_m
/// is the m-th cyclotomic polynomial.  Every character-sum value in this
/// library lives in such a ring (with m = p(q-1)), so equality of values is
/// exact coefficient-wise equality of canonical forms -- no tolerances.
class CycloRing {
 public:
  static CycloRingPtr make(i64 m);

  i64 conductor() const { return m_; }
  i64 degree() const { return phi_; }
  /// Phi_m coefficients, low degree first, size degree()+1, monic.
  const std::vector<BigInt>& modulus_poly() const { return phim_; }

  CycloNumber zero() const;
  CycloNumber one() const;
  /// zeta_m^(j mod m) in canonical form.
  CycloNumber root(i64 j) const;
  CycloNumber from_rational(const Rational& r) const;

  /// In-place reduction of a coefficient vector (any length) modulo Phi_m;
  /// the result is resized to degree().  Phi_m is monic, so the division is
  /// exact over the coefficient ring.
  template <typename Coeff>
  void reduce(std::vector<Coeff>& c) const {
    const size_t phi = static_cast<size_t>(phi_);
    if (c.size() < phi) {
      c.resize(phi, Coeff{0});
      return;
    }
    for (size_t i = c.size(); i-- > phi;) {
      if (c[i] == 0) continue;
      const Coeff t = c[i];
      c[i] = 0;
      for (size_t j = 0; j < phi; ++j) {
        if (phim_[j] != 0) c[i - phi + j] -= t * Coeff(phim_[j]);
      }
    }
    c.resize(phi);
  }

 private:
  CycloRing() = default;
  i64 m_ = 0;
  i64 phi_ = 0;
  std::vector<BigInt> phim_;
};

/// An exact element of Q(zeta_m): phi(m) rational coefficients in the basis
/// 1, zeta, ..., zeta^{phi(m)-1}, reduced modulo Phi_m.
class CycloNumber {
 public:
  CycloNumber(const CycloRing& ring, std::vector<Rational> coeffs);

  const CycloRing& ring() const { return *ring_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;

  CycloNumber conj() const;                 // zeta -> zeta^{-1}
  CycloNumber mul_root(i64 exponent) const; // times zeta^exponent
  std::complex<double> approx() const;

  friend CycloNumber operator+(const CycloNumber& a, const CycloNumber& b);
  friend CycloNumber operator-(const CycloNumber& a, const CycloNumber& b);
  friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b);
  friend CycloNumber operator*(const Rational& s, const CycloNumber& a);
  CycloNumber operator-() const;
  friend bool operator==(const CycloNumber& a, const CycloNumber& b);
  friend bool operator!=(const CycloNumber& a, const CycloNumber& b) { return !(a == b); }

 private:
  void require_same(const CycloNumber& o) const {
    if (ring_ != o.ring_) throw std::invalid_argument("CycloNumber: mixed rings");
  }
  const CycloRing* ring_;
  std::vector<Rational> c_;
};

/// Exact accumulator for sums of m-th roots of unity with integer
/// multiplicities: the inner loops of every character sum add single roots
/// here (integer arithmetic only) and canonicalize once at the end.
class RootOfUnitySum {
 public:
  explicit RootOfUnitySum(const CycloRing& ring)
      : ring_(&ring), counts_(static_cast<size_t>(ring.conductor()), 0) {}

  const CycloRing& ring() const { return *ring_; }

  void add_root(i64 exponent, i64 multiplicity = 1) {
    const i64 m = ring_->conductor();
    counts_[static_cast<size_t>(((exponent % m) + m) % m)] += multiplicity;
  }
  /// this += other * zeta^shift
  void add_rotated(const RootOfUnitySum& other, i64 shift);
  void add(const RootOfUnitySum& other) { add_rotated(other, 0); }

  i64 total_multiplicity() const;
  CycloNumber to_cyclo(const Rational& scale) const;

 private:
  const CycloRing* ring_;
  std::vector<i64> counts_;
};

i64 euler_phi(i64 m);
/// Coefficients of the m-th cyclotomic polynomial, low degree first.
std::vector<BigInt> cyclotomic_polynomial(i64 m);

}  // namespace fqw
