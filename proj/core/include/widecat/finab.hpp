#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "widecat/int_matrix.hpp"
#include "widecat/module.hpp"

namespace widecat {

// A finite abelian group in canonical form: an ascending multiset of
// prime-power cyclic orders (empty = the zero group).  Any list of cyclic
// orders normalizes to this via make_fin_ab.
struct FinAbGroup {
  std::vector<long> parts;

  bool operator==(const FinAbGroup& o) const = default;
  // Orders groups by size, then by parts; used for all deterministic sets.
  std::strong_ordering operator<=>(const FinAbGroup& o) const {
    unsigned __int128 mine = 1, theirs = 1;
    for (long p : parts) mine *= static_cast<unsigned long>(p);
    for (long p : o.parts) theirs *= static_cast<unsigned long>(p);
    if (mine != theirs) {
      return mine < theirs ? std::strong_ordering::less
                           : std::strong_ordering::greater;
    }
    return parts <=> o.parts;
  }
};

// Splits arbitrary cyclic orders (each >= 1; 1s are dropped) into prime
// powers and sorts.
FinAbGroup make_fin_ab(const std::vector<long>& cyclic_orders);

long fa_order(const FinAbGroup& g);
long fa_exponent(const FinAbGroup& g);

// All groups of order <= bound in ascending (order, parts) order; when
// exponent_divides is nonzero only groups whose exponent divides it are
// produced (i.e. the modules over ZZ/n).
std::vector<FinAbGroup> enumerate_groups(long bound, long exponent_divides = 0);

// A homomorphism between finite abelian groups, stored on the canonical
// cyclic generators: column i gives the image of dom's i-th generator in
// cod's generators.  Entry (j, i) must be a multiple of
// cod.parts[j] / gcd(dom.parts[i], cod.parts[j]) ("invalid-map").
struct GroupHom {
  FinAbGroup dom;
  FinAbGroup cod;
  IntMatrix mat;
};

GroupHom make_group_hom(FinAbGroup dom, FinAbGroup cod, IntMatrix mat);

// |Hom(a, b)| = prod gcd(a_i, b_j).
Int hom_count(const FinAbGroup& a, const FinAbGroup& b);

// Complete duplicate-free enumeration of Hom(a, b) in lexicographic matrix
// order; throws "hom-bound-exceeded" when the count exceeds max_homs.
std::vector<GroupHom> all_homs(const FinAbGroup& a, const FinAbGroup& b,
                               long max_homs = 1 << 16);

// Isomorphism types of the kernel and cokernel, computed by Smith normal
// form on the presentation lattices.
FinAbGroup kernel_of(const GroupHom& f);
FinAbGroup cokernel_of(const GroupHom& f);

// All E (up to isomorphism) fitting into 0 -> sub -> E -> quot -> 0, found
// by scanning the (memoized) subgroup/quotient pair tables of the
// candidate orders.  Throws "bound-exceeded" when |sub| * |quot| > bound.
std::vector<FinAbGroup> all_extensions(const FinAbGroup& quot,
                                       const FinAbGroup& sub, long bound);

// All pairs (subgroup type, quotient-by-it type) of g, each listed once,
// sorted; computed by exhaustive subgroup enumeration (group order capped
// at 256, "bound-exceeded" beyond) and memoized for the process lifetime.
const std::vector<std::pair<FinAbGroup, FinAbGroup>>& sub_quot_pairs(
    const FinAbGroup& g);

// Derived per-group views of the pair table.
std::vector<FinAbGroup> subgroup_types(const FinAbGroup& g);
std::vector<FinAbGroup> quotient_types(const FinAbGroup& g);

// The group as a finitely presented module over ZZ or ZZ/n; requires the
// exponent to divide a nonzero modulus ("invalid-module").
FPModule fin_ab_module(const RingDescriptor& ring, const FinAbGroup& g);

// Isomorphism type of a finite module over ZZ / ZZ-mod-n; throws
// "invalid-module" when the module has a free part (is infinite).
FinAbGroup fin_ab_of_module(const FPModule& m);

std::string fin_ab_name(const FinAbGroup& g);  // "0", "Z/2+Z/4", ...

}  // namespace widecat
