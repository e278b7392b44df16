// Bounded free complexes: construction, homology, shifts, cones, Koszul
// complexes, presentation complexes, perfect replacements, and thick
// subcategories recorded by homology support.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <widecat/complex.hpp>
#include <widecat/errors.hpp>
#include <widecat/locus.hpp>
#include <widecat/resolution.hpp>
#include <widecat/textio.hpp>

using namespace widecat;

namespace {

const RingDescriptor kQxy = parse_ring("QQ[x,y] grevlex");
const RingDescriptor kZ = parse_ring("ZZ");

Poly P(const std::string& text, const RingDescriptor& ring = kQxy) {
  return parse_poly(text, ring);
}

FreeComplex C(const std::string& text, const RingDescriptor& ring = kQxy) {
  return parse_complex(text, ring);
}

IdealGB ann_of(const FPModule& m) {
  return std::get<IdealGB>(annihilator(m));
}

}  // namespace

TEST_CASE("complexes check the boundary identity") {
  CHECK_NOTHROW(C("{low=0; ranks=[1,2,1]; d1=[[x, y]]; d2=[[-y],[x]]}"));
  CHECK_THROWS_AS(C("{low=0; ranks=[1,2,1]; d1=[[x, y]]; d2=[[y],[x]]}"),
                  DomainError);
  try {
    C("{low=0; ranks=[1,2,1]; d1=[[x, y]]; d2=[[y],[x]]}");
  } catch (const DomainError& e) {
    CHECK(std::string(e.name()) == "not-a-complex");
  }
  // Dimension mismatches in the differentials are rejected too.
  CHECK_THROWS_AS(C("{low=0; ranks=[1, 2]; d1=[[x]]}"), DomainError);
}

TEST_CASE("one-term complexes concentrate their module") {
  FreeComplex s0 = one_term_complex(kQxy, 0, 1);
  CHECK(s0.low == 0);
  CHECK(s0.top() == 0);
  CHECK(module_to_string(complex_homology(s0, 0)) == "R");
  CHECK(is_zero_module(complex_homology(s0, 1)));
  CHECK(is_zero_module(complex_homology(s0, -1)));
  CHECK(s0.rank_at(0) == 1);
  CHECK(s0.rank_at(5) == 0);
}

TEST_CASE("shift moves homology and flips differentials") {
  FreeComplex s0 = one_term_complex(kQxy, 0, 1);
  FreeComplex s1 = shift(s0, 1);
  CHECK(s1.low == 1);
  CHECK(module_to_string(complex_homology(s1, 1)) == "R");
  CHECK(is_zero_module(complex_homology(s1, 0)));

  FreeComplex k = C("{low=0; ranks=[1,2,1]; d1=[[x, y]]; d2=[[-y],[x]]}");
  FreeComplex twice = shift(shift(k, 1), -1);
  CHECK(twice.low == k.low);
  CHECK(twice.ranks == k.ranks);
  for (size_t i = 0; i < k.diffs.size(); ++i) {
    CHECK(pm_eq(std::get<PolyMatrix>(twice.diffs[i]),
                std::get<PolyMatrix>(k.diffs[i])));
  }
  // An odd shift negates each differential.
  FreeComplex once = shift(k, 1);
  PolyMatrix d1 = std::get<PolyMatrix>(once.diffs[0]);
  CHECK(d1.at(0, 0) == P("-x"));
  CHECK(d1.at(0, 1) == P("-y"));
}

TEST_CASE("cone of the zero map is the degreewise sum") {
  FreeComplex x = C("{low=0; ranks=[1,1]; d1=[[x]]}");
  FreeComplex y = C("{low=0; ranks=[1,2,1]; d1=[[x, y]]; d2=[[-y],[x]]}");
  ChainMap zero = make_chain_map(
      x, y, 0,
      {AnyMatrix(PolyMatrix(1, 1)), AnyMatrix(PolyMatrix(2, 1))});
  FreeComplex c = cone(zero);
  // cone_n = X_(n-1) + Y_n: degrees 0..2 give 1, 2+1, 1+1.
  CHECK(c.low == 0);
  CHECK(c.ranks == std::vector<int>{1, 3, 2});
}

TEST_CASE("cone of the identity is acyclic") {
  FreeComplex x = C("{low=0; ranks=[1,2,1]; d1=[[x, y]]; d2=[[-y],[x]]}");
  std::vector<AnyMatrix> comps;
  for (int r : x.ranks) comps.push_back(AnyMatrix(PolyMatrix::identity(r, 2, 0)));
  FreeComplex c = cone(make_chain_map(x, x, 0, comps));
  for (int n = c.low - 1; n <= c.top() + 1; ++n) {
    CHECK(is_zero_module(complex_homology(c, n)));
  }
  CHECK(locus_is_empty(support_of_complex(c)));
}

TEST_CASE("cone of a presentation map computes the cokernel in degree 0") {
  // R^2 --[x y]--> R as one-term complexes; the cone's H_0 is coker.
  FreeComplex dom = one_term_complex(kQxy, 0, 2);
  FreeComplex cod = one_term_complex(kQxy, 0, 1);
  ChainMap f = make_chain_map(dom, cod, 0,
                              {AnyMatrix(parse_poly_matrix("[[x, y]]", kQxy))});
  FreeComplex c = cone(f);
  FPModule h0 = complex_homology(c, 0);
  CHECK(module_to_string(h0) == "R/(x, y)");
  CHECK(ideal_eq(ann_of(h0),
                 groebner_basis(kQxy, parse_poly_list("x, y", kQxy))));
}

TEST_CASE("chain maps must commute with the differentials") {
  FreeComplex x = C("{low=0; ranks=[1,1]; d1=[[x]]}");
  FreeComplex y = C("{low=0; ranks=[1,1]; d1=[[y]]}");
  // Identity components do not intertwine multiplication by x with y.
  std::vector<AnyMatrix> comps = {
      AnyMatrix(PolyMatrix::identity(1, 2, 0)),
      AnyMatrix(PolyMatrix::identity(1, 2, 0))};
  CHECK_THROWS_AS(make_chain_map(x, y, 0, comps), DomainError);
  try {
    make_chain_map(x, y, 0, comps);
  } catch (const DomainError& e) {
    CHECK(std::string(e.name()) == "not-a-chain-map");
  }
}

TEST_CASE("koszul complex shapes and boundary") {
  FreeComplex k1 = koszul_complex(kQxy, {P("x")});
  CHECK(k1.ranks == std::vector<int>{1, 1});
  CHECK(module_to_string(complex_homology(k1, 0)) == "R/(x)");

  FreeComplex k2 = koszul_complex(kQxy, parse_poly_list("x, y", kQxy));
  CHECK(k2.ranks == std::vector<int>{1, 2, 1});
  CHECK(pm_eq(std::get<PolyMatrix>(k2.diffs[0]),
              parse_poly_matrix("[[x, y]]", kQxy)));
  CHECK(pm_eq(std::get<PolyMatrix>(k2.diffs[1]),
              parse_poly_matrix("[[-y], [x]]", kQxy)));

  FreeComplex k0 = koszul_complex(kQxy, {});
  CHECK(k0.ranks == std::vector<int>{1});
  CHECK(module_to_string(complex_homology(k0, 0)) == "R");

  RingDescriptor q3 = parse_ring("QQ[x,y,z] grevlex");
  FreeComplex k3 = koszul_complex(q3, parse_poly_list("x, y, z", q3));
  CHECK(k3.ranks == std::vector<int>{1, 3, 3, 1});
}

TEST_CASE("koszul homology of a regular sequence vanishes above zero") {
  FreeComplex k2 = koszul_complex(kQxy, parse_poly_list("x, y", kQxy));
  CHECK(module_to_string(complex_homology(k2, 0)) == "R/(x, y)");
  CHECK(is_zero_module(complex_homology(k2, 1)));
  CHECK(is_zero_module(complex_homology(k2, 2)));
}

TEST_CASE("koszul support is the vanishing locus of the sequence") {
  FreeComplex k2 = koszul_complex(kQxy, parse_poly_list("x, y", kQxy));
  CHECK(locus_eq(support_of_complex(k2), parse_locus("V(x, y)", kQxy)));
  // Also for a non-regular sequence: K(x, xy) still supports on V(x).
  FreeComplex knr = koszul_complex(kQxy, parse_poly_list("x, x*y", kQxy));
  CHECK(locus_eq(support_of_complex(knr), parse_locus("V(x)", kQxy)));
}

TEST_CASE("integer koszul complexes") {
  FreeComplex k = koszul_complex_z(kZ, {Int(2)});
  CHECK(module_to_string(complex_homology(k, 0)) == "Z/2");
  CHECK(is_zero_module(complex_homology(k, 1)));
  FreeComplex k2 = koszul_complex_z(kZ, {Int(4), Int(6)});
  CHECK(k2.ranks == std::vector<int>{1, 2, 1});
  CHECK(locus_eq(support_of_complex(k2), parse_locus("V(2)", kZ)));
}

TEST_CASE("presentation complexes realize the module in degree zero") {
  FPModule m = parse_module("R/(x)", kQxy);
  FreeComplex p = presentation_complex(m);
  CHECK(p.low == 0);
  CHECK(p.ranks == std::vector<int>{1, 1});
  CHECK(module_to_string(complex_homology(p, 0)) == "R/(x)");
  CHECK(is_zero_module(complex_homology(p, 1)));

  FreeComplex pr = presentation_complex(parse_module("R", kQxy));
  CHECK(module_to_string(complex_homology(pr, 0)) == "R");

  // coker [x y] has the Koszul syzygy in degree 1: H_1 is a free cyclic
  // submodule of R^2, so its annihilator is zero.
  FPModule row = make_fp_module(kQxy, parse_poly_matrix("[[x, y]]", kQxy));
  FreeComplex pc = presentation_complex(row);
  FPModule h1 = complex_homology(pc, 1);
  CHECK_FALSE(is_zero_module(h1));
  CHECK(ann_of(h1).is_zero());
}

TEST_CASE("perfect replacement is exact above degree zero") {
  FPModule m = parse_module("R/(x, y)", kQxy);
  FreeComplex p = perfectize(m);
  CHECK(p.ranks == std::vector<int>{1, 2, 1});  // the Koszul shape
  CHECK(ideal_eq(ann_of(complex_homology(p, 0)), ann_of(m)));
  for (int n = 1; n <= p.top(); ++n) {
    CHECK(is_zero_module(complex_homology(p, n)));
  }

  FreeComplex pf = perfectize(parse_module("R^3", kQxy));
  CHECK(pf.ranks == std::vector<int>{3});

  RingDescriptor dual = parse_ring("Fp(2)[x]/(x^2) grevlex");
  CHECK_THROWS_AS(perfectize(parse_module("R/(x)", dual), 10), DomainError);
}

TEST_CASE("homology of integer complexes") {
  FreeComplex c = C("{low=0; ranks=[1,1]; d1=[[2]]}", kZ);
  CHECK(module_to_string(complex_homology(c, 0)) == "Z/2");
  CHECK(is_zero_module(complex_homology(c, 1)));
  // An exact complex has empty support.
  FreeComplex e = C("{low=0; ranks=[1,1]; d1=[[1]]}", kZ);
  CHECK(locus_is_empty(support_of_complex(e)));
}

TEST_CASE("thick subcategories test membership by homology support") {
  FreeComplex kx = koszul_complex(kQxy, {P("x")});
  FreeComplex kxy = koszul_complex(kQxy, parse_poly_list("x, y", kQxy));
  ThickSubcat tx = thick_generated_by(kQxy, {kx});
  ThickSubcat txy = thick_generated_by(kQxy, {kxy});

  CHECK(locus_eq(tx.datum, parse_locus("V(x)", kQxy)));
  CHECK(locus_eq(txy.datum, parse_locus("V(x, y)", kQxy)));

  CHECK(member_thick(tx, kx));
  CHECK(member_thick(tx, kxy));       // V(x,y) inside V(x)
  CHECK_FALSE(member_thick(txy, kx)); // V(x) not inside V(x,y)

  // Membership only sees the radical: V(x^2) = V(x).
  CHECK(member_thick(tx, koszul_complex(kQxy, {P("x^2")})));
  ThickSubcat ty = thick_generated_by(kQxy, {koszul_complex(kQxy, {P("y")})});
  CHECK_FALSE(member_thick(ty, kx));

  // The one-term complex R generates everything.
  ThickSubcat all = thick_generated_by(kQxy, {one_term_complex(kQxy, 0, 1)});
  CHECK(member_thick(all, one_term_complex(kQxy, 0, 1)));
  CHECK(member_thick(all, kx));
  CHECK(locus_is_whole(all.datum));

  // Exact complexes are everywhere, even in the zero subcategory.
  ThickSubcat none = thick_generated_by(kQxy, {});
  CHECK(locus_is_empty(none.datum));
  FreeComplex exact = C("{low=0; ranks=[1,1]; d1=[[1]]}");
  CHECK(member_thick(none, exact));

  CHECK(thick_eq(tx, thick_generated_by(kQxy, {kx, kxy})));
  CHECK_FALSE(thick_eq(tx, txy));
}
