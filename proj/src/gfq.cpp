#include "fqw/gfq.hpp"

#include <algorithm>
#include <numeric>

namespace fqw {

namespace {

// Dense polynomial over F_p, coefficients low degree first, no trailing zeros.
using Poly = std::vector<i64>;

void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b over F_p, b monic-or-not with invertible leading coefficient.
Poly poly_mod(Poly a, const Poly& b, i64 p) {
  const auto deg_b = static_cast<i64>(b.size()) - 1;
  const i64 lead = b.back() % p;
  i64 lead_inv = 1;
  for (i64 x = 1; x < p; ++x) {
    if (lead * x % p == 1) { lead_inv = x; break; }
  }
  poly_trim(a);
  while (static_cast<i64>(a.size()) - 1 >= deg_b) {
    const i64 shift = static_cast<i64>(a.size()) - 1 - deg_b;
    const i64 factor = a.back() * lead_inv % p;
    for (i64 j = 0; j <= deg_b; ++j) {
      auto& c = a[static_cast<size_t>(shift + j)];
      c = ((c - factor * b[static_cast<size_t>(j)]) % p + p) % p;
    }
    poly_trim(a);
  }
  return a;
}

// Trial division by all monic polynomials of degree 1..deg/2.
bool poly_is_irreducible(const Poly& f, i64 p) {
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg == 1) return true;
  for (int d = 1; d <= deg / 2; ++d) {
    // odometer over the d low coefficients of a monic divisor candidate
    std::vector<i64> c(static_cast<size_t>(d), 0);
    while (true) {
      Poly div(c.begin(), c.end());
      div.push_back(1);
      if (poly_mod(f, div, p).empty()) return false;
      int pos = d - 1;
      while (pos >= 0 && c[static_cast<size_t>(pos)] == p - 1) {
        c[static_cast<size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++c[static_cast<size_t>(pos)];
    }
  }
  return true;
}

std::vector<i64> prime_factors(i64 n) {
  std::vector<i64> out;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FqFieldPtr FqField::make(i64 p, int k) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("FqField: p must be an odd prime");
  if (k < 1) throw std::invalid_argument("FqField: k must be >= 1");
  i64 q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > kFieldSizeCap)
      throw CapExceededError("FqField: q = p^k exceeds the table cap 2^20");
  }

  auto field = std::shared_ptr<FqField>(new FqField());
  field->p_ = p;
  field->k_ = k;
  field->q_ = q;

  if (k > 1) {
    // lexicographically smallest monic irreducible, low-degree coefficients
    // compared first
    std::vector<i64> c(static_cast<size_t>(k), 0);
    bool found = false;
    while (!found) {
      Poly f(c.begin(), c.end());
      f.push_back(1);
      if (poly_is_irreducible(f, p)) {
        field->modulus_ = f;
        found = true;
        break;
      }
      int pos = k - 1;
      while (pos >= 0 && c[static_cast<size_t>(pos)] == p - 1) {
        c[static_cast<size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++c[static_cast<size_t>(pos)];
    }
    if (!found) throw std::logic_error("FqField: no irreducible polynomial found");
  }

  // generator: first unit in ascending code order with order exactly q-1
  const auto factors = prime_factors(q - 1);
  auto order_is_full = [&](i64 g) {
    for (i64 ell : factors) {
      // g^((q-1)/ell) by square-and-multiply over mul_slow
      i64 e = (q - 1) / ell;
      i64 acc = 1, base = g;
      while (e > 0) {
        if (e & 1) acc = field->mul_slow(acc, base);
        base = field->mul_slow(base, base);
        e >>= 1;
      }
      if (acc == 1) return false;
    }
    return true;
  };
  i64 gen = 0;
  for (i64 cand = 1; cand < q; ++cand) {
    if (order_is_full(cand)) { gen = cand; break; }
  }
  if (gen == 0) throw std::logic_error("FqField: no generator found");
  field->generator_ = gen;

  // dlog/pow tables
  field->pow_.assign(static_cast<size_t>(q - 1), 0);
  field->dlog_.assign(static_cast<size_t>(q), -1);
  i64 cur = 1;
  for (i64 t = 0; t < q - 1; ++t) {
    field->pow_[static_cast<size_t>(t)] = cur;
    field->dlog_[static_cast<size_t>(cur)] = t;
    cur = field->mul_slow(cur, gen);
  }
  if (cur != 1) throw std::logic_error("FqField: generator order mismatch");

  // trace table: Tr(a) = sum of Frobenius iterates; lands in the prime field
  field->trace_.assign(static_cast<size_t>(q), 0);
  if (k == 1) {
    for (i64 a = 0; a < q; ++a) field->trace_[static_cast<size_t>(a)] = a;
  } else {
    for (i64 a = 1; a < q; ++a) {
      i64 acc = 0, frob = a;
      for (int i = 0; i < k; ++i) {
        acc = field->add(acc, frob);
        frob = field->pow(frob, p);  // Frobenius via the dlog table
      }
      if (acc >= p) throw std::logic_error("FqField: trace left the prime field");
      field->trace_[static_cast<size_t>(a)] = acc;
    }
  }

  return field;
}

void FqField::check_element(i64 a) const {
  if (a < 0 || a >= q_) throw std::invalid_argument("FqField: element code out of range");
}

i64 FqField::add(i64 a, i64 b) const {
  if (k_ == 1) return (a + b) % p_;
  i64 out = 0, mult = 1;
  for (int i = 0; i < k_; ++i) {
    out += ((a % p_ + b % p_) % p_) * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return out;
}

i64 FqField::neg(i64 a) const {
  if (k_ == 1) return (p_ - a) % p_;
  i64 out = 0, mult = 1;
  for (int i = 0; i < k_; ++i) {
    out += ((p_ - a % p_) % p_) * mult;
    a /= p_;
    mult *= p_;
  }
  return out;
}

i64 FqField::sub(i64 a, i64 b) const { return add(a, neg(b)); }

i64 FqField::mul_slow(i64 a, i64 b) const {
  if (a == 0 || b == 0) return 0;
  if (k_ == 1) return a * b % p_;
  std::vector<i64> ca(static_cast<size_t>(k_)), cb(static_cast<size_t>(k_));
  for (int i = 0; i < k_; ++i) { ca[static_cast<size_t>(i)] = a % p_; a /= p_; }
  for (int i = 0; i < k_; ++i) { cb[static_cast<size_t>(i)] = b % p_; b /= p_; }
  std::vector<i64> prod(static_cast<size_t>(2 * k_ - 1), 0);
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j)
      prod[static_cast<size_t>(i + j)] =
          (prod[static_cast<size_t>(i + j)] + ca[static_cast<size_t>(i)] * cb[static_cast<size_t>(j)]) % p_;
  Poly r = poly_mod(prod, modulus_, p_);
  i64 out = 0, mult = 1;
  for (size_t i = 0; i < static_cast<size_t>(k_); ++i) {
    if (i < r.size()) out += r[i] * mult;
    mult *= p_;
  }
  return out;
}

i64 FqField::mul(i64 a, i64 b) const {
  if (a == 0 || b == 0) return 0;
  return pow_[static_cast<size_t>((dlog_[static_cast<size_t>(a)] + dlog_[static_cast<size_t>(b)]) % (q_ - 1))];
}

i64 FqField::inv(i64 a) const {
  if (a == 0) throw std::invalid_argument("FqField: division by zero");
  return pow_[static_cast<size_t>((q_ - 1 - dlog_[static_cast<size_t>(a)]) % (q_ - 1))];
}

i64 FqField::div(i64 a, i64 b) const { return mul(a, inv(b)); }

i64 FqField::pow(i64 a, i64 e) const {
  if (a == 0) {
    if (e < 0) throw std::invalid_argument("FqField: negative power of zero");
    return e == 0 ? 1 : 0;
  }
  const i64 ord = q_ - 1;
  i64 t = dlog_[static_cast<size_t>(a)] % ord;
  i64 em = ((e % ord) + ord) % ord;
  return pow_[static_cast<size_t>(t * em % ord)];
}

i64 FqField::dlog(i64 a) const {
  if (a == 0) throw std::invalid_argument("FqField: dlog of zero");
  return dlog_[static_cast<size_t>(a)];
}

i64 FqField::unit_from_dlog(i64 t) const {
  const i64 ord = q_ - 1;
  return pow_[static_cast<size_t>(((t % ord) + ord) % ord)];
}

i64 FqField::from_int(i64 x) const { return ((x % p_) + p_) % p_; }

i64 FqField::from_coeffs(const std::vector<i64>& coeffs) const {
  if (static_cast<int>(coeffs.size()) > k_)
    throw std::invalid_argument("FqField: too many coefficients");
  i64 out = 0, mult = 1;
  for (int i = 0; i < k_; ++i) {
    i64 c = i < static_cast<int>(coeffs.size()) ? ((coeffs[static_cast<size_t>(i)] % p_) + p_) % p_ : 0;
    out += c * mult;
    mult *= p_;
  }
  return out;
}

i64 FqField::coeff(i64 a, int i) const {
  check_element(a);
  if (i < 0 || i >= k_) throw std::invalid_argument("FqField: coefficient index out of range");
  for (int j = 0; j < i; ++j) a /= p_;
  return a % p_;
}

std::vector<i64> FqField::units() const {
  return pow_;
}

}  // namespace fqw
