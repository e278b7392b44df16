// The subcategory lattice: generation, membership, joins and meets, the
// module-side/complex-side correspondence, quotient-ring transfer, the
// equivalent classification views, and coproduct-closed subcategories of
// Z-modules.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <widecat/errors.hpp>
#include <widecat/subcat.hpp>
#include <widecat/textio.hpp>

using namespace widecat;

namespace {

const RingDescriptor kQxy = parse_ring("QQ[x,y] grevlex");

FPModule M(const std::string& text, const RingDescriptor& ring = kQxy) {
  return parse_module(text, ring);
}

WideSubcat W(const std::string& mods, const RingDescriptor& ring = kQxy) {
  return parse_wide(mods, ring);
}

ClosedLocus L(const std::string& text, const RingDescriptor& ring = kQxy) {
  return parse_locus(text, ring);
}

}  // namespace

TEST_CASE("generation fixes the datum as the union of supports") {
  CHECK(locus_is_empty(wide_generated_by(kQxy, {}).datum));
  CHECK(locus_is_whole(W("R").datum));
  CHECK(locus_eq(W("R/(x); R/(y)").datum, L("V(x*y)")));
  CHECK(locus_eq(W("R/(x, y)").datum, L("V(x, y)")));
  // Literal and programmatic construction agree.
  WideSubcat w = wide_generated_by(kQxy, {M("R/(x)"), M("R/(y)")});
  CHECK(wide_eq(w, W("wide[QQ[x,y] grevlex]{R/(x); R/(y)}")));
}

TEST_CASE("membership reads support containment") {
  WideSubcat wx = W("R/(x)");
  CHECK(wide_member(wx, M("R/(x)")));
  CHECK(wide_member(wx, M("R/(x^2)")));    // same support up to radical
  CHECK(wide_member(wx, M("R/(x, y)")));   // smaller support
  CHECK_FALSE(wide_member(wx, M("R/(y)")));
  CHECK_FALSE(wide_member(wx, M("R")));

  // The zero module belongs to every subcategory, even the empty one.
  WideSubcat zero = wide_generated_by(kQxy, {});
  CHECK(wide_member(zero, M("0")));
  CHECK_FALSE(wide_member(zero, M("R/(x)")));

  // Everything belongs to the whole category.
  CHECK(wide_member(W("R"), M("R^3")));
  CHECK(wide_member(W("R"), M("R/(x*y - 1)")));
}

TEST_CASE("joins and meets act on the data") {
  WideSubcat wx = W("R/(x)");
  WideSubcat wy = W("R/(y)");
  CHECK(locus_eq(wide_join(wx, wy).datum, L("V(x*y)")));
  CHECK(locus_eq(wide_meet(wx, wy).datum, L("V(x, y)")));

  WideSubcat zero = wide_generated_by(kQxy, {});
  CHECK(wide_eq(wide_join(wx, zero), wx));
  CHECK(wide_eq(wide_meet(wx, W("R")), wx));
  CHECK(wide_eq(wide_meet(wx, zero), zero));

  // Lattice laws on a pool of generated subcategories.
  std::vector<WideSubcat> pool = {
      wx, wy, W("R/(x, y)"), W("R/(x^2)"), W("R/(x*y)"), W("R"),
      zero, W("R/(x); R/(y)")};
  std::mt19937 rng(2026);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  for (int trial = 0; trial < 40; ++trial) {
    const WideSubcat& a = pool[pick(rng)];
    const WideSubcat& b = pool[pick(rng)];
    const WideSubcat& c = pool[pick(rng)];
    CHECK(wide_eq(wide_join(a, b), wide_join(b, a)));
    CHECK(wide_eq(wide_meet(a, b), wide_meet(b, a)));
    CHECK(wide_eq(wide_join(a, wide_meet(a, b)), a));
    CHECK(wide_eq(wide_meet(a, wide_join(a, b)), a));
    CHECK(wide_eq(wide_meet(a, wide_join(b, c)),
                  wide_join(wide_meet(a, b), wide_meet(a, c))));
    CHECK(wide_contained(wide_meet(a, b), a));
    CHECK(wide_contained(a, wide_join(a, b)));
  }
}

TEST_CASE("containment and equality") {
  CHECK(wide_contained(W("R/(x, y)"), W("R/(x)")));
  CHECK_FALSE(wide_contained(W("R/(x)"), W("R/(x, y)")));
  CHECK(wide_eq(W("R/(x)"), W("R/(x^2)")));
  CHECK_FALSE(wide_eq(W("R/(x)"), W("R/(y)")));
  // Containment both ways is equality.
  WideSubcat a = W("R/(x); R/(y)");
  WideSubcat b = W("R/(x*y)");
  CHECK(wide_contained(a, b));
  CHECK(wide_contained(b, a));
  CHECK(wide_eq(a, b));
}

TEST_CASE("mixed rings are rejected") {
  RingDescriptor qx = parse_ring("QQ[x] grevlex");
  CHECK_THROWS_AS(wide_join(W("R/(x)"), W("R/(x)", qx)), DomainError);
  try {
    wide_meet(W("R/(x)"), W("R/(x)", qx));
  } catch (const DomainError& e) {
    CHECK(std::string(e.name()) == "ring-mismatch");
  }
}

TEST_CASE("f and g are mutually inverse on classified data") {
  std::vector<WideSubcat> pool = {
      W("R/(x)"), W("R/(y)"), W("R/(x, y)"), W("R/(x*y)"),
      W("R/(x); R/(y)"), W("R"), wide_generated_by(kQxy, {})};
  for (const WideSubcat& w : pool) {
    ThickSubcat t = f_map(w);
    CHECK(locus_eq(t.datum, w.datum));
    WideSubcat back = g_map(t);
    CHECK(locus_eq(back.datum, w.datum));
    CHECK(wide_eq(back, w));
    // And the other roundtrip, starting from the thick side.
    ThickSubcat t2 = f_map(g_map(t));
    CHECK(locus_eq(t2.datum, t.datum));
  }
  // g of a thick subcategory generated directly by a Koszul complex.
  ThickSubcat t = thick_generated_by(
      kQxy, {koszul_complex(kQxy, parse_poly_list("x, y", kQxy))});
  CHECK(locus_eq(g_map(t).datum, L("V(x, y)")));
}

TEST_CASE("quotient transfer: v after u is the identity") {
  RingDescriptor rq = parse_ring("QQ[x,y]/(y^2) grevlex");
  std::vector<WideSubcat> pool = {
      W("R/(x)", rq), W("R/(y)", rq), W("R/(x, y)", rq), W("R", rq),
      wide_generated_by(rq, {}), W("R/(x); R/(y)", rq)};
  for (const WideSubcat& w : pool) {
    WideSubcat up = inflate_u(w);
    CHECK(up.ring.modulus.empty());  // lives over the ambient ring
    WideSubcat back = restrict_v(up, rq);
    CHECK(wide_eq(back, w));
  }

  // u keeps the datum inside the vanishing locus of the modulus.
  WideSubcat whole_q = W("R", rq);
  WideSubcat up = inflate_u(whole_q);
  CHECK(locus_contained(up.datum, L("V(y)")));

  // Over QQ[x,y]/(y) the image of V(x) upstairs is exactly V(x, y).
  RingDescriptor rq1 = parse_ring("QQ[x,y]/(y) grevlex");
  WideSubcat up1 = inflate_u(W("R/(x)", rq1));
  CHECK(up1.ring.modulus.empty());
  CHECK(locus_eq(up1.datum, L("V(x, y)")));

  // v of the whole ambient category is the whole quotient category.
  CHECK(locus_is_whole(restrict_v(W("R"), rq).datum));

  // u is injective: distinct data over the quotient stay distinct.  (Note
  // y is nilpotent in the quotient, so V(x) and V(x, y) agree there; pick
  // loci that genuinely differ.)
  WideSubcat a = W("R/(x)", rq);
  WideSubcat b = W("R/(x - 1)", rq);
  CHECK_FALSE(wide_eq(a, b));
  CHECK_FALSE(wide_eq(inflate_u(a), inflate_u(b)));
  CHECK_FALSE(wide_eq(inflate_u(a), inflate_u(W("R", rq))));
}

TEST_CASE("all classification views share one datum") {
  WideSubcat w = W("R/(x); R/(x, y)");
  ViewsChain v = views_chain(w);
  CHECK(locus_eq(v.wide_view.datum, w.datum));
  CHECK(locus_eq(v.serre_view.datum, w.datum));
  CHECK(locus_eq(v.torsion_view.datum, w.datum));
  CHECK(locus_eq(v.order_view.locus, w.datum));
  CHECK(v.wide_view.flavor == WideFlavor::wide);
  CHECK(v.serre_view.flavor == WideFlavor::serre);
  CHECK(v.torsion_view.flavor == WideFlavor::torsion);
  // Flavors never affect the lattice answers.
  CHECK(wide_eq(v.serre_view, v.torsion_view));
  CHECK(wide_member(v.serre_view, M("R/(x^2)")));

  OrderIdealView r = r_map(w);
  CHECK(order_ideal_member(r, L("V(x)")));
  CHECK(order_ideal_member(r, L("V(x, y - 1)")));
  CHECK_FALSE(order_ideal_member(r, L("V(y)")));
  CHECK(order_ideal_eq(r, r_map(i_map(w))));
  // The open complement is recorded by its closed boundary: here V(x).
  CHECK(order_ideal_eq(r, OrderIdealView{L("V(x)")}));
}

TEST_CASE("supports of classified Z-module summands") {
  CHECK(specz_eq(z_module_support(parse_zmodule("Q")),
                 make_specz(false, {}, true)));
  CHECK(specz_eq(z_module_support(parse_zmodule("Z")), specz_all()));
  CHECK(specz_eq(z_module_support(parse_zmodule("Z/8")),
                 make_specz(false, {Int(2)}, false)));
  CHECK(specz_eq(z_module_support(parse_zmodule("Z_(5)")),
                 make_specz(false, {Int(5)}, true)));
  CHECK(specz_eq(z_module_support(parse_zmodule("Z/12")),
                 make_specz(false, {Int(2), Int(3)}, false)));
  CHECK(specz_eq(z_module_support(parse_zmodule("0")), specz_empty()));
  // A sum supports on the union.
  CHECK(specz_eq(z_module_support(parse_zmodule("Q + Z/9")),
                 make_specz(false, {Int(3)}, true)));
}

TEST_CASE("coproduct-closed subcategories of Z-modules") {
  // Membership against a fixed subset of Spec(Z).
  CoproductWideSubcatZ gen0{parse_specz("{}+generic")};
  CoproductWideSubcatZ at5{parse_specz("{5}")};
  CoproductWideSubcatZ loc5{parse_specz("{5}+generic")};

  CHECK(member_coproduct_z(gen0, parse_zmodule("Q")));
  CHECK_FALSE(member_coproduct_z(gen0, parse_zmodule("Z")));
  CHECK(member_coproduct_z(at5, parse_zmodule("Z/5")));
  CHECK(member_coproduct_z(loc5, parse_zmodule("Z_(5)")));
  CHECK_FALSE(member_coproduct_z(gen0, parse_zmodule("Z_(5)")));

  CHECK_FALSE(member_coproduct_z(at5, parse_zmodule("Z/3")));
  CHECK(member_coproduct_z(at5, parse_zmodule("Z/25 + Z/5")));
  CHECK(member_coproduct_z(loc5, parse_zmodule("Q + Z/5")));
  CHECK(member_coproduct_z(gen0, parse_zmodule("0")));

  // Generation collects summand supports.
  CoproductWideSubcatZ g =
      coproduct_generated_by({parse_zmodule("Z/2"), parse_zmodule("Q")});
  CHECK(specz_eq(g.set, parse_specz("{2}+generic")));
  CHECK(member_coproduct_z(g, parse_zmodule("Z/4")));
  CHECK(member_coproduct_z(g, parse_zmodule("Z_(2)")));
  CHECK_FALSE(member_coproduct_z(g, parse_zmodule("Z/3")));
  CHECK_FALSE(member_coproduct_z(g, parse_zmodule("Z")));

  // Z generates everything; the empty family generates only 0.
  CoproductWideSubcatZ all = coproduct_generated_by({parse_zmodule("Z")});
  CHECK(specz_eq(all.set, specz_all()));
  CHECK(member_coproduct_z(all, parse_zmodule("Z/6 + Q")));
  CoproductWideSubcatZ none = coproduct_generated_by({});
  CHECK(member_coproduct_z(none, parse_zmodule("0")));
  CHECK_FALSE(member_coproduct_z(none, parse_zmodule("Z/2")));
}
