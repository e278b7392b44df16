#pragma once

#include <vector>

#include "widecat/locus.hpp"
#include "widecat/module.hpp"

namespace widecat {

// A bounded complex of finitely generated free modules, homologically
// graded: the differential lowers degree by one.  ranks[i] is the rank in
// degree low + i, and diffs[i] is the matrix of
//     d : C_(low+i+1) -> C_(low+i)      (ranks[i] x ranks[i+1]),
// so diffs has one entry fewer than ranks.  Construction checks d o d = 0.
struct FreeComplex {
  RingDescriptor ring;
  int low = 0;
  std::vector<int> ranks;
  std::vector<AnyMatrix> diffs;

  int top() const { return low + static_cast<int>(ranks.size()) - 1; }
  int rank_at(int n) const;
};

FreeComplex make_complex(const RingDescriptor& ring, int low,
                         std::vector<int> ranks, std::vector<AnyMatrix> diffs);

// The free module R^rank placed in a single degree.
FreeComplex one_term_complex(const RingDescriptor& ring, int degree, int rank);

// Shift by k: shift(X, k) has X's degree-n piece in degree n + k and the
// differentials scaled by (-1)^k.
FreeComplex shift(const FreeComplex& x, int k);

// A degreewise map of complexes commuting with the differentials
// ("not-a-chain-map" otherwise).  comps[i] is the matrix X_(low+i) ->
// Y_(low+i) where low is the common lower bound of the two complexes;
// missing degrees are zero.
struct ChainMap {
  FreeComplex dom;
  FreeComplex cod;
  int low = 0;
  std::vector<AnyMatrix> comps;

  AnyMatrix comp_at(int n) const;  // zero matrix outside the stored range
};

ChainMap make_chain_map(FreeComplex dom, FreeComplex cod, int low,
                        std::vector<AnyMatrix> comps);

// Mapping cone: cone(f)_n = X_(n-1) (+) Y_n with differential
// [ -d_X 0 ; -f d_Y ].
FreeComplex cone(const ChainMap& f);

// Koszul complex on a sequence of ring elements, supported in degrees
// 0..k.  Degree-j basis elements are the size-j subsets of {0..k-1} in
// lexicographic order; d(e_S) = sum_t (-1)^t f_(S[t]) e_(S minus S[t]).
// An empty sequence yields the one-term complex R in degree 0.
FreeComplex koszul_complex(const RingDescriptor& ring,
                           const std::vector<Poly>& seq);
FreeComplex koszul_complex_z(const RingDescriptor& ring,
                             const std::vector<Int>& seq);

// The two-term complex [relations -> generators] of a presentation,
// placed in degrees 1 and 0; its zeroth homology is the module.
FreeComplex presentation_complex(const FPModule& m);

// A finite free complex quasi-isomorphic to the module in degree 0, built
// from a free resolution (so polynomial rings only; propagates
// "pd-bound-exceeded").
FreeComplex perfectize(const FPModule& m, int max_length = 16);

// H_n(X) = ker d_n / im d_(n+1) as a finitely presented module.
FPModule complex_homology(const FreeComplex& x, int n);

// Union of the supports of all homology modules.
ClosedLocus support_of_complex(const FreeComplex& x);

// A thick subcategory of perfect complexes, recorded by the closed locus
// its generators' homology supports fill out.
struct ThickSubcat {
  RingDescriptor ring;
  std::vector<FreeComplex> gens;
  ClosedLocus datum;
};

ThickSubcat thick_generated_by(const RingDescriptor& ring,
                               std::vector<FreeComplex> gens);
// Membership test in the thick subcategory: the complex's homology
// support must lie inside the datum.
bool member_thick(const ThickSubcat& t, const FreeComplex& x);
bool thick_eq(const ThickSubcat& a, const ThickSubcat& b);

}  // namespace widecat
