#pragma once

#include <vector>

#include "widecat/module.hpp"

namespace widecat {

// A closed subset V(a) of the prime spectrum, carried up to radical: two
// loci are equal exactly when their ideals have the same radical.  Over a
// polynomial (quotient) ring the datum is a reduced basis of the full
// ambient preimage; over ZZ or ZZ/n it is a single canonical nonnegative
// generator g with g = gcd(g, n) when n > 0.
struct ClosedLocus {
  RingDescriptor ring;
  IdealData data;
};

ClosedLocus locus_from_ideal(const IdealGB& a);
ClosedLocus locus_from_ideal_z(const RingDescriptor& ring, const Int& g);
ClosedLocus locus_whole(const RingDescriptor& ring);
ClosedLocus locus_empty(const RingDescriptor& ring);

// Lattice operations: union is V(a*b), intersection is V(a+b).
ClosedLocus locus_union(const ClosedLocus& x, const ClosedLocus& y);
ClosedLocus locus_intersect(const ClosedLocus& x, const ClosedLocus& y);

// V(a) is contained in V(b) iff every generator of b lies in the radical
// of a.
bool locus_contained(const ClosedLocus& x, const ClosedLocus& y);
bool locus_eq(const ClosedLocus& x, const ClosedLocus& y);
bool locus_is_empty(const ClosedLocus& l);
bool locus_is_whole(const ClosedLocus& l);

// Does m lie in the radical of (g) over ZZ / ZZ-mod-n?  Equivalently:
// every prime dividing g divides m.
bool member_rad_z(const Int& m, const Int& g);

// The support of a finitely presented module, as the vanishing locus of
// its zeroth Fitting ideal (which cuts out the same closed set as the
// annihilator).
ClosedLocus support_of(const FPModule& m);

// The family of closed subsets contained in a fixed locus, i.e. the
// principal downward-closed collection the locus generates.
struct OrderIdealView {
  ClosedLocus locus;
};

bool order_ideal_member(const OrderIdealView& v, const ClosedLocus& l);
bool order_ideal_eq(const OrderIdealView& x, const OrderIdealView& y);

// --- subsets of Spec(Z) -----------------------------------------------------

// A subset of Spec(Z) built from finitely many closed points (p), their
// complements, and the generic point (0).  `points` is sorted and
// duplicate-free; `cofinite` flips its meaning to "all closed points
// except these".
struct SpecZSet {
  bool cofinite = false;
  std::vector<Int> points;
  bool generic = false;
};

SpecZSet make_specz(bool cofinite, std::vector<Int> points, bool generic);
SpecZSet specz_empty();
SpecZSet specz_all();

SpecZSet specz_union(const SpecZSet& x, const SpecZSet& y);
SpecZSet specz_intersect(const SpecZSet& x, const SpecZSet& y);
SpecZSet specz_complement(const SpecZSet& x);
// Membership of the closed point (p); the generic point is the `generic`
// flag itself.
bool specz_member(const SpecZSet& s, const Int& p);
bool specz_subset(const SpecZSet& x, const SpecZSet& y);
bool specz_eq(const SpecZSet& x, const SpecZSet& y);

}  // namespace widecat
