#pragma once

#include <optional>
#include <string>
#include <vector>

#include "widecat/complex.hpp"
#include "widecat/finab.hpp"
#include "widecat/locus.hpp"
#include "widecat/module.hpp"
#include "widecat/poly.hpp"
#include "widecat/ring.hpp"
#include "widecat/subcat.hpp"

namespace widecat {

// One text grammar for every value that crosses the CLI boundary.  All
// parsers throw ParseError with the 1-based line and column of the
// offending token; all printers are deterministic and round-trip through
// the corresponding parser.

// ---------------------------------------------------------------- parsers

// `QQ[x,y] grevlex`, `Fp(7)[x,y] lex`, `QQ[x,y]/(y^2)`, `ZZ`, `ZZ/12`.
// The monomial order suffix is optional and defaults to grevlex.
RingDescriptor parse_ring(const std::string& text);

// `x^2 + 3/2*x*y - 1`: +, -, *, ^, parentheses, integer and fractional
// coefficients, variables as declared by the ring.
Poly parse_poly(const std::string& text, const RingDescriptor& ring);

// Comma-separated polynomials; blank text is the empty list.
std::vector<Poly> parse_poly_list(const std::string& text,
                                  const RingDescriptor& ring);

// `[[x, y], [0, 1]]` — rows in brackets, so an n x k literal presents a
// map R^k -> R^n (columns act as relations among n generators).
PolyMatrix parse_poly_matrix(const std::string& text,
                             const RingDescriptor& ring);
IntMatrix parse_int_matrix(const std::string& text);

// Comma-separated integers; blank text is the empty list.
std::vector<Int> parse_int_list(const std::string& text);

// `Z/4+Z/2`, `Z/12` (split into prime-power parts), `0`.
FinAbGroup parse_group(const std::string& text);

// Comma-separated group literals; blank text is the empty list.
std::vector<FinAbGroup> parse_group_list(const std::string& text);

// A module literal over the given ring:
//   matrix           presentation matrix in the flavor of the ring
//   R/(f1, ..., fk)  cyclic module
//   R^n              free module
//   0                zero module
//   Z^r+Z/4+...      integer rings only: canonical-decomposition literal
FPModule parse_module(const std::string& text, const RingDescriptor& ring);

// `;`-separated module literals.
std::vector<FPModule> parse_module_list(const std::string& text,
                                        const RingDescriptor& ring);

// `wide[RING]{M1; M2; ...}`, or a bare module list interpreted over
// fallback_ring (required in that form).
WideSubcat parse_wide(const std::string& text,
                      const std::optional<RingDescriptor>& fallback_ring);

// `V(f1, ..., fk)`; integer rings take integer generators, e.g. `V(6)`.
ClosedLocus parse_locus(const std::string& text, const RingDescriptor& ring);

// `{2,3}`, `~{2,3}`, `{}` with optional `+generic` suffix.
SpecZSet parse_specz(const std::string& text);

// `Z + Q + Z_(5) + Z/8` — a direct sum of classified Z-module summands;
// composite `Z/m` splits into its primary parts, `0` is the empty sum.
ZModuleDescriptor parse_zmodule(const std::string& text);

// `{low=0; ranks=[1,2,1]; d1=[[x, y]]; d2=[[-y],[x]]}` where dN is the
// differential from absolute degree N to N-1; omitted differentials are
// zero.  low defaults to 0.
FreeComplex parse_complex(const std::string& text, const RingDescriptor& ring);

// --------------------------------------------------------------- printers

std::string ring_to_string(const RingDescriptor& ring);
std::string poly_to_string(const Poly& f, const RingDescriptor& ring);
std::string poly_list_to_string(const std::vector<Poly>& fs,
                                const RingDescriptor& ring);
std::string poly_matrix_to_string(const PolyMatrix& m,
                                  const RingDescriptor& ring);
std::string int_matrix_to_string(const IntMatrix& m);
std::string any_matrix_to_string(const AnyMatrix& m,
                                 const RingDescriptor& ring);
std::string locus_to_string(const ClosedLocus& l);
// Polynomial rings print a presentation (`R/(...)`, `R^n`, or a matrix);
// integer rings print the canonical decomposition `Z^r+Z/p^k+...`.
std::string module_to_string(const FPModule& m);
std::string specz_to_string(const SpecZSet& s);
std::string complex_to_string(const FreeComplex& x);

}  // namespace widecat
