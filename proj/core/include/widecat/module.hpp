#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "widecat/ideal.hpp"
#include "widecat/int_matrix.hpp"

namespace widecat {

// Dense polynomial matrix, row-major.  Columns are module elements /
// relations throughout.
struct PolyMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Poly> a;

  PolyMatrix() = default;
  PolyMatrix(int r, int c)
      : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c)) {}

  Poly& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Poly& at(int r, int c) const {
    return a[static_cast<size_t>(r) * cols + c];
  }
  std::vector<Poly> column(int j) const;

  static PolyMatrix identity(int n, int nvars, std::int64_t characteristic);
};

PolyMatrix pm_mul(const PolyMatrix& x, const PolyMatrix& y,
                  const MonomialOrder& ord);
PolyMatrix pm_hcat(const PolyMatrix& x, const PolyMatrix& y);
bool pm_eq(const PolyMatrix& x, const PolyMatrix& y);

// Generators of { x in R^cols : m*x lies in the span of the ring modulus }
// (i.e. the syzygies of m's columns, working over the quotient when the
// ring has a modulus).  Columns of the result are the generators.
PolyMatrix syzygy_module(const PolyMatrix& m, const RingDescriptor& ring);

// Coefficients expressing each target column in the span of the basis
// columns modulo the ring modulus: returns x with basis*x == targets (as
// quotient-ring elements), or nullopt when some column is not in the span.
std::optional<PolyMatrix> express_in_span(const PolyMatrix& basis,
                                          const PolyMatrix& targets,
                                          const RingDescriptor& ring);

// --- finitely presented modules --------------------------------------------

using AnyMatrix = std::variant<PolyMatrix, IntMatrix>;
// An ideal datum in either ring flavor: a reduced polynomial basis, or a
// single nonnegative generator over ZZ / ZZ-mod-n.
using IdealData = std::variant<IdealGB, Int>;

// Cokernel presentation: ngens generators subject to the columns of rel.
// Over a quotient ring the modulus relations are implicit (every module
// operation augments with them).  Optional generator degrees support
// graded computations; when present, every relation column must be
// homogeneous with respect to them.
struct FPModule {
  RingDescriptor ring;
  int ngens = 0;
  AnyMatrix rel;
  std::optional<std::vector<int>> degrees;
};

FPModule make_fp_module(const RingDescriptor& ring, PolyMatrix rel,
                        std::optional<std::vector<int>> degrees = {});
FPModule make_fp_module_z(const RingDescriptor& ring, IntMatrix rel);
FPModule fp_free(const RingDescriptor& ring, int rank);
// R/(ideal) as a cyclic module (one generator, the ideal's basis as
// relations); integer rings take the generator of the ideal.
FPModule fp_cyclic(const IdealGB& ideal);
FPModule fp_cyclic_z(const RingDescriptor& ring, const Int& g);
FPModule fp_zero(const RingDescriptor& ring);
FPModule direct_sum(const FPModule& a, const FPModule& b);

bool is_zero_module(const FPModule& m);

// A map of finitely presented modules, stored on generators; construction
// verifies that relations map into relations ("invalid-map" otherwise).
struct ModuleMap {
  FPModule dom;
  FPModule cod;
  AnyMatrix mat;  // cod.ngens x dom.ngens
};

ModuleMap make_module_map(FPModule dom, FPModule cod, AnyMatrix mat);
ModuleMap identity_map(const FPModule& m);
ModuleMap zero_map(const FPModule& dom, const FPModule& cod);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g after f

// Kernel with its inclusion into the domain (inclusion columns are the
// kernel generators written in the domain's generators).
struct SubmoduleResult {
  FPModule mod;
  AnyMatrix inclusion;
};

SubmoduleResult kernel(const ModuleMap& f);
// Cokernel keeps the codomain's generators; the projection is the
// identity on generators.
FPModule cokernel(const ModuleMap& f);
// Image of f presented on the domain's generators, with its inclusion
// into the codomain (= f's matrix).
SubmoduleResult image(const ModuleMap& f);

// Annihilator ideal of the module.
IdealData annihilator(const FPModule& m);
// Ideal of ngens x ngens minors of the relation matrix (modulus columns
// included over quotient rings).
IdealData fitting0(const FPModule& m);

}  // namespace widecat
