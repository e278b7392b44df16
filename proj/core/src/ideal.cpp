#include "widecat/ideal.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <set>

#include "widecat/errors.hpp"

namespace widecat {

namespace {

// --- elimination plumbing -------------------------------------------------
// Fresh variables are prepended as a grevlex-first block, so any monomial
// containing one dominates every fresh-free monomial.

MonomialOrder elim_order(int nfresh, const MonomialOrder& base) {
  assert(base.block == 0);
  MonomialOrder o;
  o.kind = OrderKind::grevlex;
  o.block = nfresh;
  o.tail = base.kind;
  return o;
}

Poly poly_extend(const Poly& f, int nfresh, const MonomialOrder& new_ord) {
  std::vector<Term> terms;
  terms.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Monomial m;
    m.e.assign(static_cast<size_t>(nfresh), 0);
    m.e.insert(m.e.end(), t.m.e.begin(), t.m.e.end());
    terms.push_back(Term{std::move(m), t.c});
  }
  return Poly::from_terms(std::move(terms), new_ord);
}

bool uses_fresh(const Poly& f, int nfresh) {
  for (const auto& t : f.terms())
    for (int i = 0; i < nfresh; ++i)
      if (t.m.e[static_cast<size_t>(i)] != 0) return true;
  return false;
}

Poly poly_restrict(const Poly& f, int nfresh, const MonomialOrder& base) {
  std::vector<Term> terms;
  terms.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Monomial m;
    m.e.assign(t.m.e.begin() + nfresh, t.m.e.end());
    terms.push_back(Term{std::move(m), t.c});
  }
  return Poly::from_terms(std::move(terms), base);
}

// --- Buchberger -----------------------------------------------------------

Poly spoly(const Poly& f, const Poly& g, const MonomialOrder& ord) {
  Monomial l = mono_lcm(f.leading_monomial(), g.leading_monomial());
  Term tf{mono_div(l, f.leading_monomial()), f.leading_coeff().inverse()};
  Term tg{mono_div(l, g.leading_monomial()), g.leading_coeff().inverse()};
  return poly_sub(poly_mul_term(f, tf, ord), poly_mul_term(g, tg, ord), ord);
}

// Pair queue entry: (lcm degree, insertion sequence, i, j).  Selection is
// lowest degree first, then first-created, which fixes the computation
// path completely.
using PairKey = std::array<long, 4>;

std::vector<Poly> buchberger(std::vector<Poly> gens,
                             const MonomialOrder& ord) {
  std::vector<Poly> g;
  for (auto& f : gens)
    if (!f.is_zero()) g.push_back(poly_monic(f));

  std::set<PairKey> queue;
  std::set<std::pair<int, int>> pending;
  long seq = 0;
  auto push_pairs = [&](int k) {
    for (int i = 0; i < k; ++i) {
      Monomial l = mono_lcm(g[i].leading_monomial(), g[k].leading_monomial());
      queue.insert({l.total_degree(), seq++, i, k});
      pending.insert({i, k});
    }
  };
  for (int k = 0; k < static_cast<int>(g.size()); ++k) push_pairs(k);

  while (!queue.empty()) {
    auto [deg, s, i, j] = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({static_cast<int>(i), static_cast<int>(j)});
    const Poly& fi = g[static_cast<size_t>(i)];
    const Poly& fj = g[static_cast<size_t>(j)];

    // First skip criterion: coprime leading monomials.
    if (mono_coprime(fi.leading_monomial(), fj.leading_monomial())) continue;

    // Second skip criterion: some other leading monomial divides this
    // lcm and both side pairs were already handled.
    Monomial l = mono_lcm(fi.leading_monomial(), fj.leading_monomial());
    bool skip = false;
    for (int k = 0; k < static_cast<int>(g.size()); ++k) {
      if (k == i || k == j) continue;
      if (!mono_divides(g[static_cast<size_t>(k)].leading_monomial(), l))
        continue;
      std::pair<int, int> p1 = std::minmax(static_cast<int>(i), k);
      std::pair<int, int> p2 = std::minmax(static_cast<int>(j), k);
      if (!pending.count(p1) && !pending.count(p2)) {
        skip = true;
        break;
      }
    }
    if (skip) continue;

    Poly r = poly_divide(spoly(fi, fj, ord), g, ord).remainder;
    if (r.is_zero()) continue;
    g.push_back(poly_monic(r));
    push_pairs(static_cast<int>(g.size()) - 1);
  }
  return g;
}

std::vector<Poly> reduce_basis(std::vector<Poly> g, const MonomialOrder& ord) {
  std::erase_if(g, [](const Poly& f) { return f.is_zero(); });
  for (auto& f : g) f = poly_monic(f);

  // Minimalize: drop any element whose leading monomial another one's
  // divides.  Ascending scan sees potential divisors first.
  std::sort(g.begin(), g.end(), [&](const Poly& a, const Poly& b) {
    return mono_cmp(a.leading_monomial(), b.leading_monomial(), ord) < 0;
  });
  std::vector<Poly> kept;
  for (const Poly& f : g) {
    bool divisible = false;
    for (const Poly& h : kept)
      if (mono_divides(h.leading_monomial(), f.leading_monomial()) &&
          !(h.leading_monomial() == f.leading_monomial())) {
        divisible = true;
        break;
      }
    // Equal leading monomials: the first survives, later ones reduce away.
    if (!divisible)
      for (const Poly& h : kept)
        if (h.leading_monomial() == f.leading_monomial()) {
          divisible = true;
          break;
        }
    if (!divisible) kept.push_back(f);
  }

  // Autoreduce until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < kept.size(); ++i) {
      std::vector<Poly> others;
      others.reserve(kept.size() - 1);
      for (size_t k = 0; k < kept.size(); ++k)
        if (k != i) others.push_back(kept[k]);
      Poly r = poly_divide(kept[i], others, ord).remainder;
      if (!(r == kept[i])) {
        changed = true;
        if (r.is_zero()) {
          kept.erase(kept.begin() + static_cast<long>(i));
          --i;
        } else {
          kept[i] = poly_monic(r);
        }
      }
    }
  }

  std::sort(kept.begin(), kept.end(), [&](const Poly& a, const Poly& b) {
    return mono_cmp(a.leading_monomial(), b.leading_monomial(), ord) > 0;
  });
  return kept;
}

void require_poly_ring(const RingDescriptor& ring) {
  if (ring.kind != RingKind::poly)
    throw DomainError("unsupported-ring",
                      "operation requires a polynomial ring");
}

}  // namespace

bool IdealGB::is_zero() const {
  // Zero ideal of the quotient ring: ambient basis equals the modulus.
  if (gens.size() != ring.modulus.size()) return false;
  for (size_t i = 0; i < gens.size(); ++i)
    if (!(gens[i] == ring.modulus[i])) return false;
  return true;
}

bool IdealGB::is_unit() const {
  return gens.size() == 1 && !gens[0].is_zero() &&
         gens[0].leading_monomial().is_constant();
}

IdealGB groebner_basis(const RingDescriptor& ring, std::vector<Poly> gens) {
  require_poly_ring(ring);
  for (const Poly& m : ring.modulus) gens.push_back(m);
  std::vector<Poly> gb = buchberger(std::move(gens), ring.order);
  return IdealGB{ring, reduce_basis(std::move(gb), ring.order)};
}

Poly normal_form(const Poly& f, const IdealGB& ideal) {
  return poly_divide(f, ideal.gens, ideal.ring.order).remainder;
}

Poly ring_normal_form(const Poly& f, const RingDescriptor& ring) {
  if (ring.kind != RingKind::poly || ring.modulus.empty()) return f;
  return poly_divide(f, ring.modulus, ring.order).remainder;
}

bool ideal_contains(const IdealGB& ideal, const Poly& f) {
  return normal_form(f, ideal).is_zero();
}

bool ideal_eq(const IdealGB& a, const IdealGB& b) {
  if (!ring_eq(a.ring, b.ring)) return false;
  if (a.gens.size() != b.gens.size()) return false;
  for (size_t i = 0; i < a.gens.size(); ++i)
    if (!(a.gens[i] == b.gens[i])) return false;
  return true;
}

IdealGB ideal_sum(const IdealGB& a, const IdealGB& b) {
  require_same_ring(a.ring, b.ring);
  std::vector<Poly> gens = a.gens;
  gens.insert(gens.end(), b.gens.begin(), b.gens.end());
  return groebner_basis(a.ring, std::move(gens));
}

IdealGB ideal_product(const IdealGB& a, const IdealGB& b) {
  require_same_ring(a.ring, b.ring);
  std::vector<Poly> gens;
  for (const Poly& f : a.gens)
    for (const Poly& g : b.gens)
      gens.push_back(poly_mul(f, g, a.ring.order));
  return groebner_basis(a.ring, std::move(gens));
}

IdealGB ideal_intersection(const IdealGB& a, const IdealGB& b) {
  require_same_ring(a.ring, b.ring);
  const RingDescriptor& ring = a.ring;
  MonomialOrder eord = elim_order(1, ring.order);
  int nv = ring.nvars() + 1;
  Poly t = Poly::variable(0, nv, ring.characteristic);
  Poly one = Poly::constant(ring.coeff_one(), nv);
  Poly omt = poly_sub(one, t, eord);  // 1 - t

  std::vector<Poly> gens;
  for (const Poly& f : a.gens)
    gens.push_back(poly_mul(t, poly_extend(f, 1, eord), eord));
  for (const Poly& g : b.gens)
    gens.push_back(poly_mul(omt, poly_extend(g, 1, eord), eord));

  std::vector<Poly> gb = reduce_basis(buchberger(std::move(gens), eord), eord);
  std::vector<Poly> restricted;
  for (const Poly& f : gb)
    if (!uses_fresh(f, 1)) restricted.push_back(poly_restrict(f, 1, ring.order));
  return groebner_basis(ring, std::move(restricted));
}

IdealGB ideal_quotient(const IdealGB& a, const Poly& f) {
  Poly fn = ring_normal_form(f, a.ring);
  if (fn.is_zero()) {
    // (a : 0) is the whole ring.
    return groebner_basis(a.ring,
                          {Poly::constant(a.ring.coeff_one(), a.ring.nvars())});
  }
  // Work in the ambient ring: (A : f) = (1/f) * (A  meet  (f)), where A is
  // the full ambient ideal (it already contains the modulus).
  RingDescriptor amb = ambient_ring(a.ring);
  IdealGB a_amb{amb, a.gens};
  IdealGB f_amb = groebner_basis(amb, {fn});
  IdealGB meet = ideal_intersection(a_amb, f_amb);
  std::vector<Poly> gens;
  for (const Poly& h : meet.gens)
    gens.push_back(poly_exact_div(h, fn, amb.order));
  return groebner_basis(a.ring, std::move(gens));
}

bool radical_member(const Poly& f, const IdealGB& a) {
  Poly fn = normal_form(f, a);
  if (fn.is_zero()) return true;
  const RingDescriptor& ring = a.ring;
  MonomialOrder eord = elim_order(1, ring.order);
  int nv = ring.nvars() + 1;
  Poly t = Poly::variable(0, nv, ring.characteristic);
  Poly one = Poly::constant(ring.coeff_one(), nv);

  std::vector<Poly> gens;
  for (const Poly& g : a.gens) gens.push_back(poly_extend(g, 1, eord));
  gens.push_back(poly_sub(one, poly_mul(t, poly_extend(fn, 1, eord), eord), eord));

  std::vector<Poly> gb = reduce_basis(buchberger(std::move(gens), eord), eord);
  return gb.size() == 1 && gb[0].leading_monomial().is_constant();
}

RingDescriptor quotient_ring(const RingDescriptor& base,
                             const std::vector<Poly>& gens) {
  require_poly_ring(base);
  IdealGB gb = groebner_basis(base, gens);
  if (gb.is_unit())
    throw DomainError("unsupported-ring",
                      "modulus is the unit ideal (zero ring)");
  RingDescriptor q = base;
  q.modulus = gb.gens;
  return q;
}

}  // namespace widecat
