#pragma once

#include <vector>

#include "widecat/module.hpp"

namespace widecat {

// A finite free resolution  P_L -> ... -> P_1 -> P_0 (-> M -> 0):
// maps[k] is the matrix of P_{k+1} -> P_k.  When `minimal` is set (graded
// input) every map entry lies in the irrelevant maximal ideal and the
// ranks are the graded Betti numbers.
struct FreeResolution {
  RingDescriptor ring;
  std::vector<int> ranks;                   // ranks[k] = rank of P_k
  std::vector<std::vector<int>> degrees;    // generator degrees per step
  std::vector<PolyMatrix> maps;             // size = ranks.size() - 1
  bool minimal = false;
};

inline constexpr int kDefaultPdCap = 16;

// Resolves coker(rel).  Graded input (module carries degrees, or they
// default to all-zero when the relations are homogeneous) yields the
// minimal resolution; ungraded input yields a non-minimal resolution.
// Throws DomainError("pd-bound-exceeded") when length would exceed
// max_length, and DomainError("unsupported-ring") for integer rings.
FreeResolution minimal_free_resolution(const FPModule& m,
                                       int max_length = kDefaultPdCap);

// Length of the minimal resolution; graded input only.
int projective_dimension(const FPModule& m, int max_length = kDefaultPdCap);

// Same module, smaller presentation: strikes invertible-entry pivots and
// drops zero relation columns; a cyclic presentation is canonicalized to
// its relation-ideal basis (so a killed generator collapses to 0).
// Integer-ring modules are returned unchanged.
FPModule simplified_presentation(const FPModule& m);

}  // namespace widecat
