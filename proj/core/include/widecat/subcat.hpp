#pragma once

#include <vector>

#include "widecat/complex.hpp"
#include "widecat/locus.hpp"
#include "widecat/module.hpp"

namespace widecat {

// Over the supported (noetherian, regular-enough) coefficient rings the
// abelian-plus-extension-closed subcategories, the kernel/cokernel-closed
// ones, and the hereditary torsion classes classify identically; the
// flavor records which face of that triangle a value was built as.
enum class WideFlavor { wide, serre, torsion };

// A subcategory of finitely presented modules closed under kernels,
// cokernels, and extensions, recorded by its generators and the closed
// locus their supports fill out.  Membership, joins, meets, and equality
// all read the locus.
struct WideSubcat {
  RingDescriptor ring;
  WideFlavor flavor = WideFlavor::wide;
  std::vector<FPModule> gens;
  ClosedLocus datum;
};

WideSubcat wide_generated_by(const RingDescriptor& ring,
                             std::vector<FPModule> gens,
                             WideFlavor flavor = WideFlavor::wide);
bool wide_member(const WideSubcat& w, const FPModule& m);
// Join keeps both generator lists; meet's generator is the canonical
// cyclic module carried by the intersection locus.  Mixed flavors fall
// back to the plain wide view.
WideSubcat wide_join(const WideSubcat& a, const WideSubcat& b);
WideSubcat wide_meet(const WideSubcat& a, const WideSubcat& b);
bool wide_contained(const WideSubcat& a, const WideSubcat& b);
bool wide_eq(const WideSubcat& a, const WideSubcat& b);

// The module-side / complex-side correspondence: f sends a subcategory to
// the thick subcategory generated by the Koszul complex on its datum
// ideal; g sends a thick subcategory to the wide subcategory generated by
// all homology modules of its generators.  The two are mutually inverse
// on classified data (up to locus equality).
ThickSubcat f_map(const WideSubcat& w);
WideSubcat g_map(const ThickSubcat& t);

// Quotient-ring transfer: u views a subcategory over R/a as one over R
// (same closed locus inside V(a)); v cuts a subcategory over R down to
// the modules killed by a, i.e. intersects the locus with V(a).  v o u is
// the identity on subcategories over R/a.
WideSubcat inflate_u(const WideSubcat& w);
WideSubcat restrict_v(const WideSubcat& w, const RingDescriptor& quotient);

// Order-ideal and torsion views of the same datum.
OrderIdealView r_map(const WideSubcat& w);
WideSubcat i_map(const WideSubcat& w);

// All faces of the classification at once, tied to one datum.
struct ViewsChain {
  WideSubcat wide_view;
  WideSubcat serre_view;
  WideSubcat torsion_view;
  OrderIdealView order_view;
};

ViewsChain views_chain(const WideSubcat& w);

// --- subcategories of all Z-modules (the non-noetherian coproduct side) ----

// Summands of the classified building blocks of Z-modules: Z, Q, the
// local rings Z_(p), and the primary cyclics Z/p^k.
enum class ZSummandKind { integers, rationals, local, primary };

struct ZSummand {
  ZSummandKind kind = ZSummandKind::integers;
  Int p = 0;   // local / primary
  int k = 0;   // primary: the exponent in p^k
};

// A finite direct sum of classified summands.
struct ZModuleDescriptor {
  std::vector<ZSummand> summands;
};

// A wide subcategory of (all, not just finitely presented) Z-modules
// closed under coproducts, recorded by the subset of Spec(Z) its members'
// supports may fill.
struct CoproductWideSubcatZ {
  SpecZSet set;
};

SpecZSet z_summand_support(const ZSummand& s);
SpecZSet z_module_support(const ZModuleDescriptor& m);
CoproductWideSubcatZ coproduct_generated_by(
    const std::vector<ZModuleDescriptor>& gens);
bool member_coproduct_z(const CoproductWideSubcatZ& c,
                        const ZModuleDescriptor& m);

}  // namespace widecat
