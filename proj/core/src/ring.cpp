#include "widecat/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "widecat/errors.hpp"

namespace widecat {

RingDescriptor make_poly_ring(std::int64_t characteristic,
                              std::vector<std::string> vars,
                              MonomialOrder order) {
  if (characteristic != 0) {
    if (characteristic < 2 || characteristic >= (std::int64_t{1} << 31))
      throw DomainError("unsupported-ring",
                        "coefficient characteristic must be 0 or a prime < 2^31");
    if (!is_prime_i64(characteristic))
      throw DomainError("unsupported-ring",
                        "coefficient characteristic " +
                            std::to_string(characteristic) + " is not prime");
  }
  if (vars.empty())
    throw DomainError("unsupported-ring", "polynomial ring needs variables");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
      throw DomainError("unsupported-ring", "bad variable name '" + v + "'");
    for (char ch : v)
      if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
        throw DomainError("unsupported-ring", "bad variable name '" + v + "'");
    if (!seen.insert(v).second)
      throw DomainError("unsupported-ring", "duplicate variable '" + v + "'");
  }
  RingDescriptor r;
  r.kind = RingKind::poly;
  r.characteristic = characteristic;
  r.vars = std::move(vars);
  r.order = order;
  return r;
}

RingDescriptor make_integer_ring(const Int& n) {
  if (n < 0 || n == 1)
    throw DomainError("unsupported-ring",
                      "integer ring modulus must be 0 or >= 2");
  RingDescriptor r;
  r.kind = RingKind::integer;
  r.int_modulus = n;
  return r;
}

RingDescriptor ambient_ring(const RingDescriptor& r) {
  RingDescriptor a = r;
  if (a.kind == RingKind::poly)
    a.modulus.clear();
  else
    a.int_modulus = 0;
  return a;
}

bool ring_eq(const RingDescriptor& a, const RingDescriptor& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == RingKind::integer) return a.int_modulus == b.int_modulus;
  if (a.characteristic != b.characteristic) return false;
  if (a.vars != b.vars) return false;
  if (!(a.order == b.order)) return false;
  if (a.modulus.size() != b.modulus.size()) return false;
  for (size_t i = 0; i < a.modulus.size(); ++i)
    if (!(a.modulus[i] == b.modulus[i])) return false;
  return true;
}

void require_same_ring(const RingDescriptor& a, const RingDescriptor& b) {
  if (!ring_eq(a, b))
    throw DomainError("ring-mismatch",
                      "operands live over different rings");
}

void require_supported(const RingDescriptor& r) {
  if (r.kind == RingKind::integer) {
    if (r.int_modulus < 0 || r.int_modulus == 1)
      throw DomainError("unsupported-ring", "bad integer modulus");
    return;
  }
  if (r.characteristic != 0 &&
      (r.characteristic >= (std::int64_t{1} << 31) ||
       !is_prime_i64(r.characteristic)))
    throw DomainError("unsupported-ring", "characteristic is not prime");
  if (r.vars.empty())
    throw DomainError("unsupported-ring", "polynomial ring needs variables");
  for (const Poly& m : r.modulus) {
    if (m.is_zero())
      throw DomainError("unsupported-ring", "zero modulus generator");
    if (static_cast<int>(m.leading_monomial().e.size()) != r.nvars())
      throw DomainError("unsupported-ring", "modulus arity mismatch");
  }
}

}  // namespace widecat
