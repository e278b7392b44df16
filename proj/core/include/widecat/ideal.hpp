#pragma once

#include <vector>

#include "widecat/poly.hpp"
#include "widecat/ring.hpp"

namespace widecat {

// An ideal held by its unique reduced basis: generators monic,
// interreduced (no term of one divisible by another's leading monomial),
// sorted descending by leading monomial.  Over a quotient ring k[x]/(a)
// the basis is the full ambient preimage, so it contains a's reduced
// basis; equality of ideals is literal equality of these lists.
struct IdealGB {
  RingDescriptor ring;
  std::vector<Poly> gens;

  bool is_zero() const;  // zero ideal of the (possibly quotient) ring
  bool is_unit() const;
};

// Reduced basis of (gens) + (ring.modulus).  The workhorse: degree-then-
// insertion-order pair selection with the two classical skip criteria.
IdealGB groebner_basis(const RingDescriptor& ring, std::vector<Poly> gens);

// Canonical representative of f modulo the ideal (which already includes
// the ring modulus).
Poly normal_form(const Poly& f, const IdealGB& ideal);

// Reduction of f by just the ring modulus (identity when there is none).
Poly ring_normal_form(const Poly& f, const RingDescriptor& ring);

bool ideal_contains(const IdealGB& ideal, const Poly& f);
bool ideal_eq(const IdealGB& a, const IdealGB& b);

IdealGB ideal_sum(const IdealGB& a, const IdealGB& b);
IdealGB ideal_product(const IdealGB& a, const IdealGB& b);
IdealGB ideal_intersection(const IdealGB& a, const IdealGB& b);
// (a : f) = { g : g*f in a }.
IdealGB ideal_quotient(const IdealGB& a, const Poly& f);

// f in sqrt(a), decided by adjoining a fresh variable t and testing
// whether 1 lies in a + (1 - t*f).
bool radical_member(const Poly& f, const IdealGB& a);

// Attaches a modulus to a polynomial ring: returns the quotient-ring
// descriptor whose modulus is the reduced basis of (gens).  Throws
// "unsupported-ring" when (gens) is the unit ideal (the zero ring).
RingDescriptor quotient_ring(const RingDescriptor& base,
                             const std::vector<Poly>& gens);

}  // namespace widecat
