#include "widecat/subcat.hpp"

#include <utility>

#include "widecat/errors.hpp"

namespace widecat {

namespace {

// The canonical cyclic module R/a carried by a locus: its support is the
// locus itself.
FPModule cyclic_of_locus(const ClosedLocus& l) {
  if (l.ring.kind == RingKind::integer) {
    return fp_cyclic_z(l.ring, std::get<Int>(l.data));
  }
  return fp_cyclic(std::get<IdealGB>(l.data));
}

WideFlavor merge_flavor(WideFlavor a, WideFlavor b) {
  return a == b ? a : WideFlavor::wide;
}

}  // namespace

WideSubcat wide_generated_by(const RingDescriptor& ring,
                             std::vector<FPModule> gens, WideFlavor flavor) {
  require_supported(ring);
  ClosedLocus datum = locus_empty(ring);
  for (const FPModule& m : gens) {
    require_same_ring(ring, m.ring);
    datum = locus_union(datum, support_of(m));
  }
  return WideSubcat{ring, flavor, std::move(gens), std::move(datum)};
}

bool wide_member(const WideSubcat& w, const FPModule& m) {
  require_same_ring(w.ring, m.ring);
  return locus_contained(support_of(m), w.datum);
}

WideSubcat wide_join(const WideSubcat& a, const WideSubcat& b) {
  require_same_ring(a.ring, b.ring);
  WideSubcat out;
  out.ring = a.ring;
  out.flavor = merge_flavor(a.flavor, b.flavor);
  out.gens = a.gens;
  out.gens.insert(out.gens.end(), b.gens.begin(), b.gens.end());
  out.datum = locus_union(a.datum, b.datum);
  return out;
}

WideSubcat wide_meet(const WideSubcat& a, const WideSubcat& b) {
  require_same_ring(a.ring, b.ring);
  WideSubcat out;
  out.ring = a.ring;
  out.flavor = merge_flavor(a.flavor, b.flavor);
  out.datum = locus_intersect(a.datum, b.datum);
  out.gens = {cyclic_of_locus(out.datum)};
  return out;
}

bool wide_contained(const WideSubcat& a, const WideSubcat& b) {
  require_same_ring(a.ring, b.ring);
  return locus_contained(a.datum, b.datum);
}

bool wide_eq(const WideSubcat& a, const WideSubcat& b) {
  require_same_ring(a.ring, b.ring);
  return locus_eq(a.datum, b.datum);
}

ThickSubcat f_map(const WideSubcat& w) {
  const RingDescriptor& ring = w.ring;
  require_supported(ring);
  if (ring.kind == RingKind::integer) {
    const Int& g = std::get<Int>(w.datum.data);
    FreeComplex k = (g == 0) ? one_term_complex(ring, 0, 1)
                             : koszul_complex_z(ring, {g});
    return thick_generated_by(ring, {std::move(k)});
  }
  // Koszul complex on the datum ideal's generators; members of the ring
  // modulus vanish in the quotient and contribute nothing to the support,
  // so only the surviving generators are used.
  const IdealGB& ideal = std::get<IdealGB>(w.datum.data);
  std::vector<Poly> seq;
  for (const Poly& g : ideal.gens) {
    Poly r = ring_normal_form(g, ring);
    if (!r.is_zero()) seq.push_back(std::move(r));
  }
  FreeComplex k = seq.empty() ? one_term_complex(ring, 0, 1)
                              : koszul_complex(ring, seq);
  return thick_generated_by(ring, {std::move(k)});
}

WideSubcat g_map(const ThickSubcat& t) {
  require_supported(t.ring);
  std::vector<FPModule> gens;
  for (const FreeComplex& x : t.gens) {
    for (int n = x.low; n <= x.top(); ++n) {
      FPModule h = complex_homology(x, n);
      if (!is_zero_module(h)) gens.push_back(std::move(h));
    }
  }
  return wide_generated_by(t.ring, std::move(gens));
}

WideSubcat inflate_u(const WideSubcat& w) {
  const RingDescriptor& ring = w.ring;
  if (!ring.is_quotient()) {
    throw DomainError("ring-mismatch",
                      "inflation starts from a quotient-ring subcategory");
  }
  RingDescriptor amb = ambient_ring(ring);
  ClosedLocus datum;
  if (ring.kind == RingKind::integer) {
    // The locus generator over Z/n already names the right closed subset
    // of Spec(Z): whole Spec(Z/n) is V(n), and smaller loci keep their
    // generator.
    datum = locus_from_ideal_z(amb, std::get<Int>(w.datum.data));
  } else {
    // The stored basis is the full ambient preimage, so it is already a
    // reduced ambient basis of the same ideal.
    datum = locus_from_ideal(groebner_basis(amb, std::get<IdealGB>(w.datum.data).gens));
  }
  WideSubcat out;
  out.ring = amb;
  out.flavor = w.flavor;
  out.datum = datum;
  out.gens = {cyclic_of_locus(datum)};
  return out;
}

WideSubcat restrict_v(const WideSubcat& w, const RingDescriptor& quotient) {
  require_supported(quotient);
  if (!quotient.is_quotient() ||
      !ring_eq(ambient_ring(quotient), ambient_ring(w.ring))) {
    throw DomainError("ring-mismatch",
                      "restriction targets a quotient of the subcategory's ring");
  }
  ClosedLocus datum;
  if (quotient.kind == RingKind::integer) {
    datum = locus_from_ideal_z(quotient, std::get<Int>(w.datum.data));
  } else {
    // Rebuilding the basis over the quotient joins the modulus, which is
    // exactly intersecting the locus with V(modulus).
    datum = locus_from_ideal(
        groebner_basis(quotient, std::get<IdealGB>(w.datum.data).gens));
  }
  WideSubcat out;
  out.ring = quotient;
  out.flavor = w.flavor;
  out.datum = datum;
  out.gens = {cyclic_of_locus(datum)};
  return out;
}

OrderIdealView r_map(const WideSubcat& w) { return OrderIdealView{w.datum}; }

WideSubcat i_map(const WideSubcat& w) {
  WideSubcat out = w;
  out.flavor = WideFlavor::torsion;
  return out;
}

ViewsChain views_chain(const WideSubcat& w) {
  WideSubcat wide = w;
  wide.flavor = WideFlavor::wide;
  WideSubcat serre = w;
  serre.flavor = WideFlavor::serre;
  return ViewsChain{std::move(wide), std::move(serre), i_map(w), r_map(w)};
}

// --- subcategories of all Z-modules ----------------------------------------

SpecZSet z_summand_support(const ZSummand& s) {
  switch (s.kind) {
    case ZSummandKind::integers:
      return specz_all();  // every closed point and the generic point
    case ZSummandKind::rationals:
      return SpecZSet{false, {}, true};  // the generic point alone
    case ZSummandKind::local:
      return make_specz(false, {s.p}, true);  // (0) and (p)
    case ZSummandKind::primary:
      return make_specz(false, {s.p}, false);  // (p) alone
  }
  return specz_empty();
}

SpecZSet z_module_support(const ZModuleDescriptor& m) {
  SpecZSet acc = specz_empty();
  for (const ZSummand& s : m.summands) {
    acc = specz_union(acc, z_summand_support(s));
  }
  return acc;
}

CoproductWideSubcatZ coproduct_generated_by(
    const std::vector<ZModuleDescriptor>& gens) {
  SpecZSet acc = specz_empty();
  for (const ZModuleDescriptor& m : gens) {
    acc = specz_union(acc, z_module_support(m));
  }
  return CoproductWideSubcatZ{std::move(acc)};
}

bool member_coproduct_z(const CoproductWideSubcatZ& c,
                        const ZModuleDescriptor& m) {
  return specz_subset(z_module_support(m), c.set);
}

}  // namespace widecat
