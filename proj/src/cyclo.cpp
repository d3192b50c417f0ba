#include "fqw/cyclo.hpp"

#include <cmath>
#include <numbers>

namespace fqw {

namespace {

// Practical bound: the dense coefficient representation and O(phi^2)
// multiplication stop being reasonable long before this.
constexpr i64 kConductorCap = i64{1} << 16;

// Exact division of integer polynomials, quotient must be exact (divisor monic
// up to the leading coefficient dividing everything; here divisors are monic).
std::vector<BigInt> poly_div_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
  if (den.empty() || den.back() == 0) throw std::logic_error("poly_div_exact: bad divisor");
  const auto dn = static_cast<i64>(num.size()) - 1;
  const auto dd = static_cast<i64>(den.size()) - 1;
  if (dn < dd) throw std::logic_error("poly_div_exact: degree underflow");
  std::vector<BigInt> quot(static_cast<size_t>(dn - dd + 1), 0);
  for (i64 i = dn; i >= dd; --i) {
    BigInt c = num[static_cast<size_t>(i)];
    if (c == 0) continue;
    if (c % den.back() != 0) throw std::logic_error("poly_div_exact: inexact division");
    BigInt f = c / den.back();
    quot[static_cast<size_t>(i - dd)] = f;
    for (i64 j = 0; j <= dd; ++j)
      num[static_cast<size_t>(i - dd + j)] -= f * den[static_cast<size_t>(j)];
  }
  for (const auto& c : num)
    if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
  return quot;
}

}  // namespace

i64 euler_phi(i64 m) {
  i64 out = m;
  i64 n = m;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out -= out / d;
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out -= out / n;
  return out;
}

std::vector<BigInt> cyclotomic_polynomial(i64 m) {
  // Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e, filled in over the
  // divisors of m in ascending order (every proper divisor of a divisor of m
  // divides m, so everything needed is already present).
  std::vector<i64> divisors;
  for (i64 d = 1; d <= m; ++d)
    if (m % d == 0) divisors.push_back(d);
  std::vector<std::vector<BigInt>> table;
  for (i64 d : divisors) {
    std::vector<BigInt> acc(static_cast<size_t>(d + 1), 0);
    acc[0] = -1;
    acc[static_cast<size_t>(d)] = 1;
    for (size_t i = 0; divisors[i] < d; ++i) {
      if (d % divisors[i] == 0) acc = poly_div_exact(std::move(acc), table[i]);
    }
    table.push_back(std::move(acc));
  }
  return table.back();
}

CycloRingPtr CycloRing::make(i64 m) {
  if (m < 1) throw std::invalid_argument("CycloRing: conductor must be positive");
  if (m > kConductorCap) throw CapExceededError("CycloRing: conductor exceeds cap 2^16");
  auto ring = std::shared_ptr<CycloRing>(new CycloRing());
  ring->m_ = m;
  ring->phim_ = cyclotomic_polynomial(m);
  ring->phi_ = static_cast<i64>(ring->phim_.size()) - 1;
  if (ring->phi_ != euler_phi(m)) throw std::logic_error("CycloRing: deg Phi_m != phi(m)");
  return ring;
}

CycloNumber CycloRing::zero() const {
  return CycloNumber(*this, std::vector<Rational>(static_cast<size_t>(phi_), Rational{0}));
}

CycloNumber CycloRing::one() const { return from_rational(Rational{1}); }

CycloNumber CycloRing::from_rational(const Rational& r) const {
  std::vector<Rational> c(static_cast<size_t>(phi_), Rational{0});
  c[0] = r;
  return CycloNumber(*this, std::move(c));
}

CycloNumber CycloRing::root(i64 j) const {
  const i64 e = ((j % m_) + m_) % m_;
  std::vector<Rational> c(static_cast<size_t>(e + 1), Rational{0});
  c[static_cast<size_t>(e)] = 1;
  reduce(c);
  return CycloNumber(*this, std::move(c));
}

CycloNumber::CycloNumber(const CycloRing& ring, std::vector<Rational> coeffs)
    : ring_(&ring), c_(std::move(coeffs)) {
  if (static_cast<i64>(c_.size()) > ring.degree()) ring.reduce(c_);
  c_.resize(static_cast<size_t>(ring.degree()), Rational{0});
}

bool CycloNumber::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycloNumber::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

CycloNumber CycloNumber::conj() const {
  const i64 m = ring_->conductor();
  std::vector<Rational> out(static_cast<size_t>(m), Rational{0});
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    out[static_cast<size_t>((m - static_cast<i64>(j)) % m)] += c_[j];
  }
  ring_->reduce(out);
  return CycloNumber(*ring_, std::move(out));
}

CycloNumber CycloNumber::mul_root(i64 exponent) const {
  const i64 m = ring_->conductor();
  const i64 e = ((exponent % m) + m) % m;
  std::vector<Rational> out(c_.size() + static_cast<size_t>(e), Rational{0});
  for (size_t j = 0; j < c_.size(); ++j) out[j + static_cast<size_t>(e)] = c_[j];
  ring_->reduce(out);
  return CycloNumber(*ring_, std::move(out));
}

std::complex<double> CycloNumber::approx() const {
  std::complex<double> out{0.0, 0.0};
  const double m = static_cast<double>(ring_->conductor());
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    const double cj = static_cast<double>(boost::multiprecision::numerator(c_[j])) /
                      static_cast<double>(boost::multiprecision::denominator(c_[j]));
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / m;
    out += cj * std::complex<double>(std::cos(theta), std::sin(theta));
  }
  return out;
}

CycloNumber operator+(const CycloNumber& a, const CycloNumber& b) {
  a.require_same(b);
  std::vector<Rational> c = a.c_;
  for (size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
  return CycloNumber(*a.ring_, std::move(c));
}

CycloNumber operator-(const CycloNumber& a, const CycloNumber& b) {
  a.require_same(b);
  std::vector<Rational> c = a.c_;
  for (size_t i = 0; i < c.size(); ++i) c[i] -= b.c_[i];
  return CycloNumber(*a.ring_, std::move(c));
}

CycloNumber CycloNumber::operator-() const {
  std::vector<Rational> c = c_;
  for (auto& x : c) x = -x;
  return CycloNumber(*ring_, std::move(c));
}

CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
  a.require_same(b);
  const size_t n = a.c_.size();
  std::vector<Rational> c(2 * n, Rational{0});
  for (size_t i = 0; i < n; ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < n; ++j) {
      if (b.c_[j] == 0) continue;
      c[i + j] += a.c_[i] * b.c_[j];
    }
  }
  a.ring_->reduce(c);
  return CycloNumber(*a.ring_, std::move(c));
}

CycloNumber operator*(const Rational& s, const CycloNumber& a) {
  std::vector<Rational> c = a.c_;
  for (auto& x : c) x *= s;
  return CycloNumber(*a.ring_, std::move(c));
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
  a.require_same(b);
  return a.c_ == b.c_;
}

void RootOfUnitySum::add_rotated(const RootOfUnitySum& other, i64 shift) {
  if (ring_ != other.ring_) throw std::invalid_argument("RootOfUnitySum: mixed rings");
  const i64 m = ring_->conductor();
  const i64 s = ((shift % m) + m) % m;
  for (i64 j = 0; j < m; ++j) {
    const i64 c = other.counts_[static_cast<size_t>(j)];
    if (c != 0) counts_[static_cast<size_t>((j + s) % m)] += c;
  }
}

i64 RootOfUnitySum::total_multiplicity() const {
  i64 t = 0;
  for (i64 c : counts_) t += c;
  return t;
}

CycloNumber RootOfUnitySum::to_cyclo(const Rational& scale) const {
  std::vector<BigInt> ints(counts_.begin(), counts_.end());
  ring_->reduce(ints);
  std::vector<Rational> c(ints.size());
  for (size_t i = 0; i < ints.size(); ++i) c[i] = scale * Rational(ints[i]);
  return CycloNumber(*ring_, std::move(c));
}

}  // namespace fqw
