#include "widecat/numeric.hpp"

#include <cassert>

namespace widecat {

namespace {

std::int64_t mod_norm(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return r;
}

// p < 2^31, so products of residues fit in a signed 64-bit word.
std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
  return (a * b) % p;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
  // Extended Euclid; a nonzero mod p, p prime.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = mod_norm(a, p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  assert(r == 1 && "mod_inv of a non-unit");
  return mod_norm(t, p);
}

}  // namespace

Coeff Coeff::rational(Rat value) {
  Coeff c;
  c.p_ = 0;
  value.canonicalize();
  c.rat_ = std::move(value);
  return c;
}

Coeff Coeff::residue(std::int64_t value, std::int64_t p) {
  assert(p > 1);
  Coeff c;
  c.p_ = p;
  c.res_ = mod_norm(value, p);
  return c;
}

Coeff Coeff::zero(std::int64_t p) {
  return p == 0 ? rational(Rat(0)) : residue(0, p);
}

Coeff Coeff::one(std::int64_t p) {
  return p == 0 ? rational(Rat(1)) : residue(1, p);
}

Coeff Coeff::of_int(const Int& n, std::int64_t p) {
  if (p == 0) return rational(Rat(n));
  Int r = n % Int(p);
  return residue(r.get_si(), p);
}

Coeff Coeff::of_fraction(const Int& a, const Int& b, std::int64_t p) {
  if (p == 0) {
    Rat q(a, b);
    q.canonicalize();
    return rational(q);
  }
  Coeff num = of_int(a, p);
  Coeff den = of_int(b, p);
  return num / den;
}

bool Coeff::is_zero() const {
  return p_ == 0 ? rat_ == 0 : res_ == 0;
}

bool Coeff::is_one() const {
  return p_ == 0 ? rat_ == 1 : res_ == 1 % p_;
}

Coeff Coeff::operator+(const Coeff& o) const {
  assert(p_ == o.p_);
  if (p_ == 0) return rational(rat_ + o.rat_);
  return residue(res_ + o.res_, p_);
}

Coeff Coeff::operator-(const Coeff& o) const {
  assert(p_ == o.p_);
  if (p_ == 0) return rational(rat_ - o.rat_);
  return residue(res_ - o.res_, p_);
}

Coeff Coeff::operator*(const Coeff& o) const {
  assert(p_ == o.p_);
  if (p_ == 0) return rational(rat_ * o.rat_);
  return residue(mod_mul(res_, o.res_, p_), p_);
}

Coeff Coeff::operator/(const Coeff& o) const {
  return *this * o.inverse();
}

Coeff Coeff::operator-() const {
  if (p_ == 0) return rational(-rat_);
  return residue(-res_, p_);
}

bool Coeff::operator==(const Coeff& o) const {
  if (p_ != o.p_) return false;
  return p_ == 0 ? rat_ == o.rat_ : res_ == o.res_;
}

Coeff Coeff::inverse() const {
  assert(!is_zero());
  if (p_ == 0) return rational(Rat(1) / rat_);
  return residue(mod_inv(res_, p_), p_);
}

std::string Coeff::str() const {
  if (p_ == 0) return rat_.get_str();
  return std::to_string(res_);
}

bool is_prime_i64(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  // Deterministic witness set for n < 3,317,044,064,679,887,385,961,981.
  std::int64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  auto mulmod_wide = [&](std::int64_t a, std::int64_t b) {
    return static_cast<std::int64_t>(
        (static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b)) %
        static_cast<unsigned __int128>(n));
  };
  auto powmod_wide = [&](std::int64_t base, std::int64_t exp) {
    std::int64_t acc = 1 % n;
    base %= n;
    while (exp > 0) {
      if (exp & 1) acc = mulmod_wide(acc, base);
      base = mulmod_wide(base, base);
      exp >>= 1;
    }
    return acc;
  };
  for (std::int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::int64_t x = powmod_wide(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_wide(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace widecat
