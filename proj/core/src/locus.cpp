#include "widecat/locus.hpp"

#include <algorithm>

#include "widecat/errors.hpp"

namespace widecat {

namespace {

Int canonical_z_generator(const RingDescriptor& ring, const Int& g) {
  Int a = abs(g);
  if (ring.int_modulus != 0) {
    Int c;
    mpz_gcd(c.get_mpz_t(), a.get_mpz_t(), ring.int_modulus.get_mpz_t());
    return c;
  }
  return a;
}

Int z_gcd(const Int& a, const Int& b) {
  Int c;
  mpz_gcd(c.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return c;
}

const Int& z_gen(const ClosedLocus& l) { return std::get<Int>(l.data); }

}  // namespace

ClosedLocus locus_from_ideal(const IdealGB& a) {
  if (a.ring.kind != RingKind::poly) {
    throw DomainError("unsupported-ring", "expected a polynomial-ring ideal");
  }
  return ClosedLocus{a.ring, a};
}

ClosedLocus locus_from_ideal_z(const RingDescriptor& ring, const Int& g) {
  if (ring.kind != RingKind::integer) {
    throw DomainError("unsupported-ring", "expected ZZ or ZZ/n");
  }
  return ClosedLocus{ring, canonical_z_generator(ring, g)};
}

ClosedLocus locus_whole(const RingDescriptor& ring) {
  if (ring.kind == RingKind::integer) return locus_from_ideal_z(ring, 0);
  return locus_from_ideal(groebner_basis(ring, {}));
}

ClosedLocus locus_empty(const RingDescriptor& ring) {
  if (ring.kind == RingKind::integer) return locus_from_ideal_z(ring, 1);
  return locus_from_ideal(
      groebner_basis(ring, {Poly::constant(ring.coeff_one(), ring.nvars())}));
}

ClosedLocus locus_union(const ClosedLocus& x, const ClosedLocus& y) {
  require_same_ring(x.ring, y.ring);
  if (x.ring.kind == RingKind::integer) {
    return locus_from_ideal_z(x.ring, z_gen(x) * z_gen(y));
  }
  return locus_from_ideal(
      ideal_product(std::get<IdealGB>(x.data), std::get<IdealGB>(y.data)));
}

ClosedLocus locus_intersect(const ClosedLocus& x, const ClosedLocus& y) {
  require_same_ring(x.ring, y.ring);
  if (x.ring.kind == RingKind::integer) {
    return locus_from_ideal_z(x.ring, z_gcd(z_gen(x), z_gen(y)));
  }
  return locus_from_ideal(
      ideal_sum(std::get<IdealGB>(x.data), std::get<IdealGB>(y.data)));
}

bool member_rad_z(const Int& m, const Int& g) {
  Int a = abs(g);
  Int b = abs(m);
  if (a == 0) return b == 0;
  // Strip every prime of m out of g; m lies in the radical exactly when
  // nothing else remains.
  for (;;) {
    Int d = z_gcd(a, b);
    if (d == 1) break;
    mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  }
  return a == 1;
}

bool locus_contained(const ClosedLocus& x, const ClosedLocus& y) {
  require_same_ring(x.ring, y.ring);
  if (x.ring.kind == RingKind::integer) {
    return member_rad_z(z_gen(y), z_gen(x));
  }
  const IdealGB& ax = std::get<IdealGB>(x.data);
  const IdealGB& ay = std::get<IdealGB>(y.data);
  for (const Poly& g : ay.gens) {
    if (!radical_member(g, ax)) return false;
  }
  return true;
}

bool locus_eq(const ClosedLocus& x, const ClosedLocus& y) {
  return locus_contained(x, y) && locus_contained(y, x);
}

bool locus_is_empty(const ClosedLocus& l) {
  return locus_contained(l, locus_empty(l.ring));
}

bool locus_is_whole(const ClosedLocus& l) {
  return locus_contained(locus_whole(l.ring), l);
}

ClosedLocus support_of(const FPModule& m) {
  IdealData f = fitting0(m);
  if (std::holds_alternative<Int>(f)) {
    return locus_from_ideal_z(m.ring, std::get<Int>(f));
  }
  return locus_from_ideal(std::get<IdealGB>(f));
}

bool order_ideal_member(const OrderIdealView& v, const ClosedLocus& l) {
  return locus_contained(l, v.locus);
}

bool order_ideal_eq(const OrderIdealView& x, const OrderIdealView& y) {
  return locus_eq(x.locus, y.locus);
}

// --- subsets of Spec(Z) -----------------------------------------------------

namespace {

bool is_prime_int(const Int& p) {
  if (p < 2) return false;
  return mpz_probab_prime_p(p.get_mpz_t(), 30) != 0;
}

std::vector<Int> sorted_union(const std::vector<Int>& a,
                              const std::vector<Int>& b) {
  std::vector<Int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

std::vector<Int> sorted_intersection(const std::vector<Int>& a,
                                     const std::vector<Int>& b) {
  std::vector<Int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

std::vector<Int> sorted_difference(const std::vector<Int>& a,
                                   const std::vector<Int>& b) {
  std::vector<Int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

bool specz_is_empty(const SpecZSet& s) {
  return !s.cofinite && !s.generic && s.points.empty();
}

}  // namespace

SpecZSet make_specz(bool cofinite, std::vector<Int> points, bool generic) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (const Int& p : points) {
    if (!is_prime_int(p)) {
      throw DomainError("invalid-module",
                        "closed points of Spec(Z) are prime numbers");
    }
  }
  return SpecZSet{cofinite, std::move(points), generic};
}

SpecZSet specz_empty() { return SpecZSet{false, {}, false}; }
SpecZSet specz_all() { return SpecZSet{true, {}, true}; }

SpecZSet specz_union(const SpecZSet& x, const SpecZSet& y) {
  SpecZSet out;
  out.generic = x.generic || y.generic;
  if (!x.cofinite && !y.cofinite) {
    out.cofinite = false;
    out.points = sorted_union(x.points, y.points);
  } else if (x.cofinite && y.cofinite) {
    out.cofinite = true;
    out.points = sorted_intersection(x.points, y.points);
  } else {
    const SpecZSet& fin = x.cofinite ? y : x;
    const SpecZSet& cof = x.cofinite ? x : y;
    out.cofinite = true;
    out.points = sorted_difference(cof.points, fin.points);
  }
  return out;
}

SpecZSet specz_intersect(const SpecZSet& x, const SpecZSet& y) {
  SpecZSet out;
  out.generic = x.generic && y.generic;
  if (!x.cofinite && !y.cofinite) {
    out.cofinite = false;
    out.points = sorted_intersection(x.points, y.points);
  } else if (x.cofinite && y.cofinite) {
    out.cofinite = true;
    out.points = sorted_union(x.points, y.points);
  } else {
    const SpecZSet& fin = x.cofinite ? y : x;
    const SpecZSet& cof = x.cofinite ? x : y;
    out.cofinite = false;
    out.points = sorted_difference(fin.points, cof.points);
  }
  return out;
}

SpecZSet specz_complement(const SpecZSet& x) {
  return SpecZSet{!x.cofinite, x.points, !x.generic};
}

bool specz_member(const SpecZSet& s, const Int& p) {
  bool listed = std::binary_search(s.points.begin(), s.points.end(), p);
  return s.cofinite ? !listed : listed;
}

bool specz_subset(const SpecZSet& x, const SpecZSet& y) {
  return specz_is_empty(specz_intersect(x, specz_complement(y)));
}

bool specz_eq(const SpecZSet& x, const SpecZSet& y) {
  return x.cofinite == y.cofinite && x.generic == y.generic &&
         x.points == y.points;
}

}  // namespace widecat
