// Finitely presented modules: syzygies, kernels, cokernels, images,
// annihilators, Fitting ideals, and minimal free resolutions.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <widecat/errors.hpp>
#include <widecat/locus.hpp>
#include <widecat/module.hpp>
#include <widecat/resolution.hpp>
#include <widecat/textio.hpp>

using namespace widecat;

namespace {

const RingDescriptor kQxy = parse_ring("QQ[x,y] grevlex");
const RingDescriptor kZ = parse_ring("ZZ");

Poly P(const std::string& text, const RingDescriptor& ring = kQxy) {
  return parse_poly(text, ring);
}

PolyMatrix M(const std::string& text, const RingDescriptor& ring = kQxy) {
  return parse_poly_matrix(text, ring);
}

FPModule module(const std::string& text, const RingDescriptor& ring = kQxy) {
  return parse_module(text, ring);
}

IdealGB ideal_of(const IdealData& d) { return std::get<IdealGB>(d); }

// Every column of m*s must reduce to zero against the relation span of
// the zero module, i.e. vanish identically over a plain polynomial ring.
bool kills(const PolyMatrix& m, const PolyMatrix& s,
           const RingDescriptor& ring) {
  PolyMatrix prod = pm_mul(m, s, ring.order);
  for (const Poly& f : prod.a) {
    if (!ring_normal_form(f, ring).is_zero()) return false;
  }
  return true;
}

Poly random_poly(std::mt19937& rng, const RingDescriptor& ring, int maxdeg) {
  Poly f = Poly::zero();
  int terms = 1 + static_cast<int>(rng() % 3);
  for (int t = 0; t < terms; ++t) {
    int dx = static_cast<int>(rng() % (maxdeg + 1));
    int dy = static_cast<int>(rng() % (maxdeg + 1 - dx));
    long c = static_cast<long>(rng() % 7) - 3;
    if (c == 0) c = 1;
    Poly term = poly_scale(
        poly_mul(poly_pow(P("x"), static_cast<unsigned>(dx), ring.order),
                 poly_pow(P("y"), static_cast<unsigned>(dy), ring.order),
                 ring.order),
        Coeff::rational(Rat(c)));
    f = poly_add(f, term, ring.order);
  }
  return f;
}

}  // namespace

TEST_CASE("syzygies of a two-column row") {
  PolyMatrix s = syzygy_module(M("[[x, y]]"), kQxy);
  CHECK(pm_eq(s, M("[[y], [-x]]")));
  CHECK(kills(M("[[x, y]]"), s, kQxy));
}

TEST_CASE("syzygies of random matrices annihilate") {
  std::mt19937 rng(555);
  for (int trial = 0; trial < 25; ++trial) {
    int r = 1 + static_cast<int>(rng() % 2);
    int c = 1 + static_cast<int>(rng() % 3);
    PolyMatrix m(r, c);
    for (Poly& f : m.a) f = random_poly(rng, kQxy, 2);
    CHECK(kills(m, syzygy_module(m, kQxy), kQxy));
  }
}

TEST_CASE("free columns have no syzygies") {
  CHECK(syzygy_module(PolyMatrix::identity(3, 2, 0), kQxy).cols == 0);
}

TEST_CASE("express_in_span recovers coefficients") {
  PolyMatrix basis = M("[[x, y]]");
  auto sol = express_in_span(basis, M("[[x^2*y]]"), kQxy);
  REQUIRE(sol.has_value());
  PolyMatrix prod = pm_mul(basis, *sol, kQxy.order);
  CHECK(prod.at(0, 0) == P("x^2*y"));
  CHECK_FALSE(express_in_span(basis, M("[[1]]"), kQxy).has_value());
}

TEST_CASE("module literals and zero detection") {
  CHECK(is_zero_module(module("0")));
  CHECK_FALSE(is_zero_module(module("R")));
  CHECK_FALSE(is_zero_module(module("R/(x)")));
  CHECK(module("R^3").ngens == 3);
  CHECK(module_to_string(module("R/(x, y)")) == "R/(x, y)");
  CHECK(module_to_string(direct_sum(module("R"), module("R"))) == "R^2");
}

TEST_CASE("cokernel of multiplication by x on the free rank-one module") {
  FPModule r = module("R");
  ModuleMap by_x = make_module_map(r, r, M("[[x]]"));
  FPModule c = cokernel(by_x);
  CHECK(module_to_string(c) == "R/(x)");
  CHECK(ideal_eq(ideal_of(annihilator(c)), groebner_basis(kQxy, {P("x")})));
}

TEST_CASE("kernel of multiplication by x on R/(xy)") {
  FPModule m = module("R/(x*y)");
  ModuleMap by_x = make_module_map(m, m, M("[[x]]"));
  SubmoduleResult k = kernel(by_x);
  // The kernel is (y)/(xy), a cyclic module isomorphic to R/(x).
  CHECK(ideal_eq(ideal_of(annihilator(k.mod)),
                 groebner_basis(kQxy, {P("x")})));
  CHECK_FALSE(is_zero_module(k.mod));

  // The inclusion lands in the kernel: x * (inclusion columns) must lie
  // in the relation submodule (xy)*R.
  const PolyMatrix& inc = std::get<PolyMatrix>(k.inclusion);
  for (int j = 0; j < inc.cols; ++j) {
    Poly moved = poly_mul(P("x"), inc.at(0, j), kQxy.order);
    CHECK(ideal_contains(groebner_basis(kQxy, {P("x*y")}), moved));
  }
}

TEST_CASE("image of the zero map is the zero module") {
  FPModule r = module("R^2");
  SubmoduleResult im = image(zero_map(r, r));
  CHECK(is_zero_module(im.mod));
}

TEST_CASE("map construction validates relations") {
  // R/(x) -> R has no nonzero maps: 1 |-> f needs x*f = 0 in R.
  CHECK_THROWS_AS(make_module_map(module("R/(x)"), module("R"), M("[[1]]")),
                  DomainError);
  // The x-multiple does factor: R/(x) -> R/(x^2) sending 1 to x.
  ModuleMap ok =
      make_module_map(module("R/(x)"), module("R/(x^2)"), M("[[x]]"));
  CHECK_FALSE(is_zero_module(ok.dom));
  try {
    make_module_map(module("R/(x)"), module("R"), M("[[1]]"));
  } catch (const DomainError& e) {
    CHECK(std::string(e.name()) == "invalid-map");
  }
}

TEST_CASE("kernel, image, cokernel orders compose on a frozen map") {
  // f : R/(x^2) -> R/(x^2), multiplication by x.
  FPModule m = module("R/(x^2)");
  ModuleMap f = make_module_map(m, m, M("[[x]]"));
  SubmoduleResult k = kernel(f);
  SubmoduleResult im = image(f);
  FPModule c = cokernel(f);
  // All three are isomorphic to R/(x) here; compare annihilators.
  IdealGB ix = groebner_basis(kQxy, {P("x")});
  CHECK(ideal_eq(ideal_of(annihilator(k.mod)), ix));
  CHECK(ideal_eq(ideal_of(annihilator(im.mod)), ix));
  CHECK(ideal_eq(ideal_of(annihilator(c)), ix));
}

TEST_CASE("annihilators of free and cyclic modules") {
  CHECK(ideal_of(annihilator(module("R^2"))).is_zero());
  CHECK(ideal_eq(ideal_of(annihilator(module("R/(x, y)"))),
                 groebner_basis(kQxy, parse_poly_list("x, y", kQxy))));
  CHECK(ideal_of(annihilator(module("0"))).is_unit());
}

TEST_CASE("Fitting ideal of a square presentation is the determinant") {
  FPModule m = make_fp_module(kQxy, M("[[x, y], [y, x]]"));
  IdealGB f0 = ideal_of(fitting0(m));
  CHECK(ideal_eq(f0, groebner_basis(kQxy, {P("x^2 - y^2")})));
  // Here the annihilator equals the Fitting ideal exactly.
  CHECK(ideal_eq(ideal_of(annihilator(m)), f0));
}

TEST_CASE("fitting and annihilator bound each other") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 1 + static_cast<int>(rng() % 2);
    PolyMatrix rel(n, 1 + static_cast<int>(rng() % 3));
    for (Poly& f : rel.a) f = random_poly(rng, kQxy, 2);
    FPModule m = make_fp_module(kQxy, rel);
    IdealGB f0 = ideal_of(fitting0(m));
    IdealGB ann = ideal_of(annihilator(m));
    // Fitt0 <= ann <= sqrt(Fitt0), hence V(Fitt0) = V(ann).
    for (const Poly& g : f0.gens) CHECK(ideal_contains(ann, g));
    for (const Poly& g : ann.gens) CHECK(radical_member(g, f0));
    CHECK(locus_eq(support_of(m),
                   locus_from_ideal(f0)));
  }
}

TEST_CASE("integer modules: annihilator and fitting") {
  FPModule m = module("Z/4+Z/6", kZ);
  CHECK(std::get<Int>(annihilator(m)) == 12);
  CHECK(std::get<Int>(fitting0(m)) == 24);
  CHECK(std::get<Int>(annihilator(module("Z", kZ))) == 0);
  CHECK(member_rad_z(Int(12), Int(24)));
}

TEST_CASE("integer modules: kernel and cokernel via lattices") {
  RingDescriptor z4 = parse_ring("ZZ/4");
  FPModule m = module("Z/4", z4);
  IntMatrix two(1, 1);
  two.at(0, 0) = 2;
  ModuleMap dbl = make_module_map(m, m, two);
  CHECK(fin_ab_name(fin_ab_of_module(kernel(dbl).mod)) == "Z/2");
  CHECK(fin_ab_name(fin_ab_of_module(cokernel(dbl))) == "Z/2");

  FPModule zz = module("Z", kZ);
  IntMatrix three(1, 1);
  three.at(0, 0) = 3;
  CHECK(fin_ab_name(fin_ab_of_module(
            cokernel(make_module_map(zz, zz, three)))) == "Z/3");
}

TEST_CASE("graded presentations reject inhomogeneous relations") {
  CHECK_THROWS_AS(
      make_fp_module(kQxy, M("[[x + 1]]"), std::vector<int>{0}),
      DomainError);
  FPModule ok = make_fp_module(kQxy, M("[[x + y]]"), std::vector<int>{0});
  CHECK(ok.degrees.has_value());
}

TEST_CASE("minimal resolution of the irrelevant-ideal quotient") {
  FreeResolution res = minimal_free_resolution(module("R/(x, y)"));
  CHECK(res.minimal);
  CHECK(res.ranks == std::vector<int>{1, 2, 1});
  // d1 * d2 = 0.
  PolyMatrix prod = pm_mul(res.maps[0], res.maps[1], kQxy.order);
  for (const Poly& f : prod.a) CHECK(f.is_zero());
  CHECK(projective_dimension(module("R/(x, y)")) == 2);
}

TEST_CASE("projective dimensions of frozen examples") {
  CHECK(projective_dimension(module("R/(x)")) == 1);
  CHECK(projective_dimension(module("R")) == 0);
  CHECK(projective_dimension(module("R^4")) == 0);
  RingDescriptor q3 = parse_ring("QQ[x,y,z] grevlex");
  FreeResolution koszul =
      minimal_free_resolution(module("R/(x, y, z)", q3));
  CHECK(koszul.ranks == std::vector<int>{1, 3, 3, 1});
  CHECK(projective_dimension(module("R/(x, y, z)", q3)) == 3);
}

TEST_CASE("minimal resolutions keep entries in the irrelevant ideal") {
  std::mt19937 rng(888);
  for (int trial = 0; trial < 10; ++trial) {
    // Random graded cyclic module R/(monomials).
    int k = 1 + static_cast<int>(rng() % 3);
    std::vector<Poly> gens;
    for (int t = 0; t < k; ++t) {
      int dx = static_cast<int>(rng() % 3);
      int dy = static_cast<int>(rng() % 3);
      if (dx + dy == 0) dx = 1;
      gens.push_back(poly_mul(
          poly_pow(P("x"), static_cast<unsigned>(dx), kQxy.order),
          poly_pow(P("y"), static_cast<unsigned>(dy), kQxy.order),
          kQxy.order));
    }
    FreeResolution res =
        minimal_free_resolution(fp_cyclic(groebner_basis(kQxy, gens)));
    CHECK(res.minimal);
    CHECK(static_cast<int>(res.ranks.size()) - 1 <= 2);
    for (const PolyMatrix& d : res.maps) {
      for (const Poly& f : d.a) {
        CHECK((f.is_zero() || f.total_degree() >= 1));
      }
    }
    // Consecutive maps compose to zero.
    for (size_t s = 0; s + 1 < res.maps.size(); ++s) {
      PolyMatrix prod = pm_mul(res.maps[s], res.maps[s + 1], kQxy.order);
      for (const Poly& f : prod.a) CHECK(f.is_zero());
    }
  }
}

TEST_CASE("periodic resolutions trip the length cap") {
  RingDescriptor dual = parse_ring("Fp(2)[x]/(x^2) grevlex");
  FPModule k = module("R/(x)", dual);
  CHECK_THROWS_AS(minimal_free_resolution(k, 10), DomainError);
  try {
    minimal_free_resolution(k, 10);
  } catch (const DomainError& e) {
    CHECK(std::string(e.name()) == "pd-bound-exceeded");
  }
}

TEST_CASE("resolutions over integer rings are unsupported") {
  CHECK_THROWS_AS(minimal_free_resolution(module("Z/4", kZ)), DomainError);
}

TEST_CASE("simplified presentations collapse unit pivots") {
  // One generator killed by a unit: the zero module.
  PolyMatrix unit(1, 1);
  unit.at(0, 0) = P("1");
  CHECK(is_zero_module(simplified_presentation(
      make_fp_module(kQxy, unit))));
  CHECK(module_to_string(make_fp_module(kQxy, unit)) == "0");
  // A generator expressed by another survives as a smaller presentation.
  FPModule two = make_fp_module(kQxy, M("[[1, x], [y, 0]]"));
  FPModule s = simplified_presentation(two);
  CHECK(s.ngens == 1);
  CHECK(module_to_string(s) == "R/(x*y)");
}
