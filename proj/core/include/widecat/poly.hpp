#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "widecat/numeric.hpp"

namespace widecat {

// Exponent vector; its length always equals the ambient variable count.
struct Monomial {
  std::vector<std::uint32_t> e;

  int total_degree() const;
  bool is_constant() const;
  bool operator==(const Monomial& o) const = default;

  static Monomial one(int nvars);
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
// a / b; b must divide a.
Monomial mono_div(const Monomial& a, const Monomial& b);
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
bool mono_coprime(const Monomial& a, const Monomial& b);

enum class OrderKind { lex, grevlex };

// A monomial order: plain lex/grevlex, or (when block > 0) an elimination
// order that compares the first `block` variables grevlex-first and breaks
// ties with `tail` on the remaining variables.  Any monomial involving a
// block variable is then greater than every block-free monomial, so a
// reduced basis meets the block-free subring in a reduced basis for the
// eliminated ideal.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  int block = 0;
  OrderKind tail = OrderKind::grevlex;

  bool operator==(const MonomialOrder& o) const = default;
};

// Three-way comparison: negative when a < b, 0 when equal, positive when
// a > b.
int mono_cmp(const Monomial& a, const Monomial& b, const MonomialOrder& ord);

struct Term {
  Monomial m;
  Coeff c;
};

// Polynomial as a strictly descending (in the carried order) list of terms
// with nonzero coefficients.  The zero polynomial has no terms.  All
// arithmetic takes the order explicitly; mixing orders on one polynomial
// is a programming error.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Term> sorted_terms)
      : terms_(std::move(sorted_terms)) {}

  static Poly zero();
  static Poly constant(const Coeff& c, int nvars);
  static Poly variable(int index, int nvars, std::int64_t characteristic);
  // Normalizes an arbitrary term list: sorts, merges, drops zeros.
  static Poly from_terms(std::vector<Term> terms, const MonomialOrder& ord);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().m; }
  const Coeff& leading_coeff() const { return terms_.front().c; }
  int total_degree() const;  // -1 for the zero polynomial

  bool operator==(const Poly& o) const;

 private:
  std::vector<Term> terms_;
};

Poly poly_add(const Poly& a, const Poly& b, const MonomialOrder& ord);
Poly poly_sub(const Poly& a, const Poly& b, const MonomialOrder& ord);
Poly poly_neg(const Poly& a);
Poly poly_scale(const Poly& a, const Coeff& c);
Poly poly_mul_term(const Poly& a, const Term& t, const MonomialOrder& ord);
Poly poly_mul(const Poly& a, const Poly& b, const MonomialOrder& ord);
Poly poly_monic(const Poly& a);
Poly poly_pow(const Poly& a, unsigned k, const MonomialOrder& ord);

// Multivariate division: f = sum_i quotients[i] * basis[i] + remainder,
// no remainder term divisible by any basis leading monomial.  Scans the
// basis in the given sequence, so the result is deterministic.
struct DivisionResult {
  Poly remainder;
  std::vector<Poly> quotients;  // empty unless track_quotients
};

DivisionResult poly_divide(const Poly& f, const std::vector<Poly>& basis,
                           const MonomialOrder& ord,
                           bool track_quotients = false);

// Exact division f / g (remainder must vanish); used by ideal quotients.
Poly poly_exact_div(const Poly& f, const Poly& g, const MonomialOrder& ord);

// Re-sorts a polynomial's terms under a different order.
Poly poly_reorder(const Poly& a, const MonomialOrder& ord);

// Total-order on polynomials for deterministic container keys: compares
// term lists lexicographically under `ord` (leading terms first).
int poly_cmp(const Poly& a, const Poly& b, const MonomialOrder& ord);

}  // namespace widecat
