#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace widecat {

using Int = mpz_class;
using Rat = mpq_class;

// A coefficient in the base field: an exact rational when the
// characteristic is 0, or a residue in [0, p) when it is a prime p.
// Mixed-characteristic arithmetic is a programming error and asserts.
class Coeff {
 public:
  Coeff() : p_(0) {}  // zero of characteristic 0

  static Coeff rational(Rat value);
  static Coeff residue(std::int64_t value, std::int64_t p);
  static Coeff zero(std::int64_t p);
  static Coeff one(std::int64_t p);
  // Image of an integer (characteristic 0 or p).
  static Coeff of_int(const Int& n, std::int64_t p);
  // Image of a/b; b must be invertible in the field.
  static Coeff of_fraction(const Int& a, const Int& b, std::int64_t p);

  std::int64_t characteristic() const { return p_; }
  bool is_zero() const;
  bool is_one() const;

  Coeff operator+(const Coeff& o) const;
  Coeff operator-(const Coeff& o) const;
  Coeff operator*(const Coeff& o) const;
  Coeff operator/(const Coeff& o) const;  // o must be nonzero
  Coeff operator-() const;
  bool operator==(const Coeff& o) const;
  bool operator!=(const Coeff& o) const { return !(*this == o); }

  Coeff inverse() const;  // must be nonzero

  // Characteristic-0 value; only valid when characteristic() == 0.
  const Rat& rat() const { return rat_; }
  // Residue in [0, p); only valid when characteristic() > 0.
  std::int64_t residue_value() const { return res_; }

  std::string str() const;

 private:
  Rat rat_;
  std::int64_t res_ = 0;
  std::int64_t p_ = 0;
};

// Deterministic Miller-Rabin primality for the word-sized moduli accepted
// as coefficient-field characteristics.
bool is_prime_i64(std::int64_t n);

}  // namespace widecat
