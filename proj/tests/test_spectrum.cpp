// Closed loci up to radical, their lattice, the integer-side radical
// membership, and subsets of the prime spectrum of the integers.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <widecat/errors.hpp>
#include <widecat/locus.hpp>
#include <widecat/textio.hpp>

using namespace widecat;

namespace {

const RingDescriptor kQxy = parse_ring("QQ[x,y] grevlex");
const RingDescriptor kZ = parse_ring("ZZ");

ClosedLocus L(const std::string& text, const RingDescriptor& ring = kQxy) {
  return parse_locus(text, ring);
}

SpecZSet S(const std::string& text) { return parse_specz(text); }

}  // namespace

TEST_CASE("loci compare up to radical") {
  CHECK(locus_eq(L("V(x)"), L("V(x^3)")));
  CHECK(locus_eq(L("V(x*y)"), L("V(x^2*y^5)")));
  CHECK_FALSE(locus_eq(L("V(x)"), L("V(y)")));
  CHECK(locus_contained(L("V(x, y)"), L("V(x)")));
  CHECK_FALSE(locus_contained(L("V(x)"), L("V(x, y)")));
  CHECK(locus_is_empty(L("V(1)")));
  CHECK(locus_is_whole(L("V(0)")));
  CHECK(locus_is_whole(locus_whole(kQxy)));
  CHECK(locus_is_empty(locus_empty(kQxy)));
}

TEST_CASE("union and intersection of frozen loci") {
  CHECK(locus_eq(locus_intersect(L("V(x)"), L("V(y)")), L("V(x, y)")));
  CHECK(locus_eq(locus_union(L("V(x)"), L("V(y)")), L("V(x*y)")));
  // The axes' union meets the diagonal in the origin only... not quite:
  // V(xy) meet V(x - y) = V(xy, x - y) = V(x, y) up to radical.
  CHECK(locus_eq(locus_intersect(L("V(x*y)"), L("V(x - y)")),
                 L("V(x, y)")));
  // Empty and whole are the lattice bounds.
  CHECK(locus_eq(locus_union(L("V(x)"), locus_empty(kQxy)), L("V(x)")));
  CHECK(locus_eq(locus_intersect(L("V(x)"), locus_whole(kQxy)), L("V(x)")));
  CHECK(locus_is_empty(locus_intersect(L("V(x - 1)"), L("V(x - 2)"))));
}

TEST_CASE("locus lattice laws on random triples") {
  std::mt19937 rng(2024);
  std::vector<ClosedLocus> pool = {
      L("V(x)"),     L("V(y)"),       L("V(x, y)"),  L("V(x*y)"),
      L("V(x^2)"),   L("V(x - y)"),   L("V(0)"),     L("V(1)"),
      L("V(x + y)"), L("V(x*y - 1)"),
  };
  for (int trial = 0; trial < 60; ++trial) {
    const ClosedLocus& a = pool[rng() % pool.size()];
    const ClosedLocus& b = pool[rng() % pool.size()];
    const ClosedLocus& c = pool[rng() % pool.size()];

    CHECK(locus_eq(locus_union(a, a), a));
    CHECK(locus_eq(locus_intersect(a, a), a));
    CHECK(locus_eq(locus_union(a, b), locus_union(b, a)));
    CHECK(locus_eq(locus_intersect(a, b), locus_intersect(b, a)));
    CHECK(locus_eq(locus_union(a, locus_intersect(a, b)), a));
    CHECK(locus_eq(locus_intersect(a, locus_union(a, b)), a));
    CHECK(locus_eq(locus_intersect(a, locus_union(b, c)),
                   locus_union(locus_intersect(a, b),
                               locus_intersect(a, c))));
    // Containment is the lattice order.
    CHECK(locus_contained(locus_intersect(a, b), a));
    CHECK(locus_contained(a, locus_union(a, b)));
    if (locus_contained(a, b) && locus_contained(b, a)) {
      CHECK(locus_eq(a, b));
    }
  }
}

TEST_CASE("integer loci canonicalize through the gcd") {
  CHECK(locus_eq(L("V(4)", kZ), L("V(2)", kZ)));
  CHECK(locus_eq(L("V(6)", kZ), L("V(12)", kZ)));
  CHECK_FALSE(locus_eq(L("V(2)", kZ), L("V(3)", kZ)));
  CHECK(locus_contained(L("V(2)", kZ), L("V(4)", kZ)));
  CHECK(locus_contained(L("V(6)", kZ), L("V(12)", kZ)));
  CHECK_FALSE(locus_contained(L("V(2)", kZ), L("V(3)", kZ)));
  CHECK(locus_contained(L("V(2)", kZ), L("V(6)", kZ)));
  CHECK_FALSE(locus_contained(L("V(6)", kZ), L("V(2)", kZ)));
  CHECK(locus_is_empty(L("V(1)", kZ)));
  CHECK(locus_is_whole(L("V(0)", kZ)));
  CHECK(locus_eq(locus_union(L("V(2)", kZ), L("V(3)", kZ)),
                 L("V(6)", kZ)));
  CHECK(locus_eq(locus_intersect(L("V(6)", kZ), L("V(10)", kZ)),
                 L("V(2)", kZ)));
}

TEST_CASE("radical membership over the integers") {
  CHECK(member_rad_z(Int(2), Int(4)));
  CHECK(member_rad_z(Int(6), Int(12)));
  CHECK_FALSE(member_rad_z(Int(2), Int(3)));
  CHECK(member_rad_z(Int(12), Int(6)));  // primes of 6 divide 12
  CHECK(member_rad_z(Int(0), Int(0)));
  CHECK_FALSE(member_rad_z(Int(2), Int(0)));
  CHECK(member_rad_z(Int(5), Int(1)));  // unit ideal: everything
}

TEST_CASE("integer loci over a modulus fold through it") {
  RingDescriptor z12 = parse_ring("ZZ/12");
  // In ZZ/12, V(8) = V(gcd(8,12)) = V(4) = V(2) up to radical.
  CHECK(locus_eq(L("V(8)", z12), L("V(2)", z12)));
  CHECK_FALSE(locus_eq(L("V(3)", z12), L("V(2)", z12)));
  // V(5) is a unit mod 12 up to radical: gcd(5,12) = 1.
  CHECK(locus_is_empty(L("V(5)", z12)));
  CHECK(locus_is_whole(L("V(0)", z12)));
}

TEST_CASE("order-ideal views are principal down-sets") {
  OrderIdealView v{L("V(x*y)")};
  CHECK(order_ideal_member(v, L("V(x)")));
  CHECK(order_ideal_member(v, L("V(x, y)")));
  CHECK(order_ideal_member(v, L("V(x*y)")));
  CHECK_FALSE(order_ideal_member(v, L("V(x - y)")));
  CHECK(order_ideal_eq(v, OrderIdealView{L("V(x^2*y)")}));
  CHECK_FALSE(order_ideal_eq(v, OrderIdealView{L("V(x)")}));
}

TEST_CASE("spec-Z sets: construction and membership") {
  SpecZSet s = S("{2,3}");
  CHECK(specz_member(s, Int(2)));
  CHECK(specz_member(s, Int(3)));
  CHECK_FALSE(specz_member(s, Int(5)));
  CHECK_FALSE(s.generic);

  SpecZSet t = S("~{2,3}");
  CHECK_FALSE(specz_member(t, Int(2)));
  CHECK(specz_member(t, Int(5)));

  CHECK(S("{2}+generic").generic);
  CHECK(specz_eq(S("{}"), specz_empty()));
  CHECK(specz_eq(S("~{}+generic"), specz_all()));
  // Non-prime points are rejected.
  CHECK_THROWS_AS(make_specz(false, {Int(4)}, false), DomainError);
}

TEST_CASE("spec-Z boolean algebra") {
  CHECK(specz_eq(specz_union(S("{2}"), S("{3}")), S("{2,3}")));
  CHECK(specz_eq(specz_intersect(S("{2,3}"), S("{3,5}")), S("{3}")));
  CHECK(specz_eq(specz_complement(S("{}")), S("~{}+generic")));
  CHECK(specz_eq(specz_complement(S("~{2,3}")), S("{2,3}+generic")));
  CHECK(specz_eq(specz_complement(specz_complement(S("{2}+generic"))),
                 S("{2}+generic")));
  CHECK(specz_subset(S("{2}"), S("{2,3}")));
  CHECK_FALSE(specz_subset(S("~{3}"), S("{2,3}")));
  CHECK(specz_subset(S("{2,3}"), S("~{}")));

  SUBCASE("laws on random triples") {
    std::mt19937 rng(5150);
    std::vector<SpecZSet> pool = {
        S("{}"),        S("{2}"),        S("{2,3}"),     S("{5}+generic"),
        S("~{}"),       S("~{2}"),       S("~{2,5}+generic"),
        S("~{}+generic"),
    };
    for (int trial = 0; trial < 60; ++trial) {
      const SpecZSet& a = pool[rng() % pool.size()];
      const SpecZSet& b = pool[rng() % pool.size()];
      const SpecZSet& c = pool[rng() % pool.size()];
      CHECK(specz_eq(specz_union(a, b), specz_union(b, a)));
      CHECK(specz_eq(specz_intersect(a, specz_union(b, c)),
                     specz_union(specz_intersect(a, b),
                                 specz_intersect(a, c))));
      CHECK(specz_eq(specz_complement(specz_union(a, b)),
                     specz_intersect(specz_complement(a),
                                     specz_complement(b))));
      CHECK(specz_eq(specz_complement(specz_complement(a)), a));
      CHECK(specz_subset(specz_intersect(a, b), a));
      CHECK(specz_subset(a, specz_union(a, b)));
    }
  }
}

TEST_CASE("support of modules lands in the right loci") {
  CHECK(locus_eq(support_of(parse_module("R/(x, y)", kQxy)), L("V(x, y)")));
  CHECK(locus_is_whole(support_of(parse_module("R^2", kQxy))));
  CHECK(locus_is_empty(support_of(parse_module("0", kQxy))));
  CHECK(locus_eq(support_of(parse_module("Z/4", kZ)), L("V(2)", kZ)));
  CHECK(locus_is_whole(support_of(parse_module("Z", kZ))));
}
