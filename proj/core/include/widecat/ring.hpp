#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "widecat/numeric.hpp"
#include "widecat/poly.hpp"

namespace widecat {

enum class RingKind {
  poly,     // k[x1..xn]/(modulus), k = QQ or Fp
  integer,  // ZZ or ZZ/n
};

// Descriptor of a supported coefficient ring.  Polynomial-ring ideals and
// module data over a quotient k[x]/(a) are always carried as objects of
// the ambient polynomial ring that contain the modulus, so the descriptor
// stores the modulus as its reduced ambient basis.
struct RingDescriptor {
  RingKind kind = RingKind::poly;

  // kind == poly
  std::int64_t characteristic = 0;  // 0 => QQ, else prime p < 2^31
  std::vector<std::string> vars;
  MonomialOrder order;
  std::vector<Poly> modulus;  // reduced basis; empty => no quotient

  // kind == integer
  Int int_modulus = 0;  // 0 => ZZ, else n >= 2 for ZZ/n

  int nvars() const { return static_cast<int>(vars.size()); }
  bool is_quotient() const {
    return kind == RingKind::poly ? !modulus.empty() : int_modulus != 0;
  }

  Coeff coeff_zero() const { return Coeff::zero(characteristic); }
  Coeff coeff_one() const { return Coeff::one(characteristic); }
};

// Builds and validates a polynomial ring without a modulus.  Throws
// DomainError("unsupported-ring") for a composite or oversized
// characteristic, duplicate/empty variable lists, or bad names.
RingDescriptor make_poly_ring(std::int64_t characteristic,
                              std::vector<std::string> vars,
                              MonomialOrder order);

// Builds ZZ (n = 0) or ZZ/n (n >= 2); throws "unsupported-ring" otherwise.
RingDescriptor make_integer_ring(const Int& n);

// The ambient ring of a quotient (removes the polynomial modulus or the
// integer modulus).  Identity on non-quotient rings.
RingDescriptor ambient_ring(const RingDescriptor& r);

bool ring_eq(const RingDescriptor& a, const RingDescriptor& b);

// Throws DomainError("ring-mismatch") unless the two descriptors agree.
void require_same_ring(const RingDescriptor& a, const RingDescriptor& b);

// Re-checks the descriptor invariants (prime characteristic, modulus
// normalized, sane integer modulus); throws "unsupported-ring" on failure.
void require_supported(const RingDescriptor& r);

}  // namespace widecat
