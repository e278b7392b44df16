#include "widecat/poly.hpp"

#include <algorithm>
#include <cassert>

namespace widecat {

int Monomial::total_degree() const {
  int d = 0;
  for (auto x : e) d += static_cast<int>(x);
  return d;
}

bool Monomial::is_constant() const {
  return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

Monomial Monomial::one(int nvars) {
  Monomial m;
  m.e.assign(static_cast<size_t>(nvars), 0);
  return m;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  assert(a.e.size() == b.e.size());
  Monomial m = a;
  for (size_t i = 0; i < m.e.size(); ++i) m.e[i] += b.e[i];
  return m;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  assert(a.e.size() == b.e.size());
  Monomial m = a;
  for (size_t i = 0; i < m.e.size(); ++i) {
    assert(m.e[i] >= b.e[i]);
    m.e[i] -= b.e[i];
  }
  return m;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  assert(a.e.size() == b.e.size());
  Monomial m = a;
  for (size_t i = 0; i < m.e.size(); ++i) m.e[i] = std::max(m.e[i], b.e[i]);
  return m;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  assert(a.e.size() == b.e.size());
  for (size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  assert(a.e.size() == b.e.size());
  for (size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > 0 && b.e[i] > 0) return false;
  return true;
}

namespace {

int cmp_lex(const std::uint32_t* a, const std::uint32_t* b, size_t n) {
  for (size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

int cmp_grevlex(const std::uint32_t* a, const std::uint32_t* b, size_t n) {
  long da = 0, db = 0;
  for (size_t i = 0; i < n; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  // Equal degree: the last position where they differ decides, and the
  // monomial with the smaller exponent there is the larger one.
  for (size_t i = n; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int cmp_kind(OrderKind k, const std::uint32_t* a, const std::uint32_t* b,
             size_t n) {
  return k == OrderKind::lex ? cmp_lex(a, b, n) : cmp_grevlex(a, b, n);
}

}  // namespace

int mono_cmp(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
  assert(a.e.size() == b.e.size());
  size_t n = a.e.size();
  if (ord.block <= 0) return cmp_kind(ord.kind, a.e.data(), b.e.data(), n);
  size_t k = std::min(static_cast<size_t>(ord.block), n);
  int c = cmp_grevlex(a.e.data(), b.e.data(), k);
  if (c != 0) return c;
  return cmp_kind(ord.tail, a.e.data() + k, b.e.data() + k, n - k);
}

Poly Poly::zero() { return Poly(); }

Poly Poly::constant(const Coeff& c, int nvars) {
  if (c.is_zero()) return Poly();
  return Poly({Term{Monomial::one(nvars), c}});
}

Poly Poly::variable(int index, int nvars, std::int64_t characteristic) {
  Monomial m = Monomial::one(nvars);
  m.e[static_cast<size_t>(index)] = 1;
  return Poly({Term{std::move(m), Coeff::one(characteristic)}});
}

Poly Poly::from_terms(std::vector<Term> terms, const MonomialOrder& ord) {
  std::sort(terms.begin(), terms.end(), [&](const Term& x, const Term& y) {
    return mono_cmp(x.m, y.m, ord) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().m == t.m) {
      out.back().c = out.back().c + t.c;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const Term& t) { return t.c.is_zero(); });
  return Poly(std::move(out));
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.m.total_degree());
  return d;
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].m == o.terms_[i].m) || terms_[i].c != o.terms_[i].c)
      return false;
  }
  return true;
}

Poly poly_add(const Poly& a, const Poly& b, const MonomialOrder& ord) {
  std::vector<Term> out;
  out.reserve(a.terms().size() + b.terms().size());
  size_t i = 0, j = 0;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  while (i < ta.size() && j < tb.size()) {
    int c = mono_cmp(ta[i].m, tb[j].m, ord);
    if (c > 0) {
      out.push_back(ta[i++]);
    } else if (c < 0) {
      out.push_back(tb[j++]);
    } else {
      Coeff s = ta[i].c + tb[j].c;
      if (!s.is_zero()) out.push_back(Term{ta[i].m, s});
      ++i;
      ++j;
    }
  }
  for (; i < ta.size(); ++i) out.push_back(ta[i]);
  for (; j < tb.size(); ++j) out.push_back(tb[j]);
  return Poly(std::move(out));
}

Poly poly_neg(const Poly& a) {
  std::vector<Term> out = a.terms();
  for (auto& t : out) t.c = -t.c;
  return Poly(std::move(out));
}

Poly poly_sub(const Poly& a, const Poly& b, const MonomialOrder& ord) {
  return poly_add(a, poly_neg(b), ord);
}

Poly poly_scale(const Poly& a, const Coeff& c) {
  if (c.is_zero()) return Poly::zero();
  std::vector<Term> out = a.terms();
  for (auto& t : out) t.c = t.c * c;
  return Poly(std::move(out));
}

Poly poly_mul_term(const Poly& a, const Term& t, const MonomialOrder&) {
  if (t.c.is_zero()) return Poly::zero();
  // Multiplying every monomial by a fixed monomial preserves the order,
  // so the term list stays sorted.
  std::vector<Term> out;
  out.reserve(a.terms().size());
  for (const auto& s : a.terms())
    out.push_back(Term{mono_mul(s.m, t.m), s.c * t.c});
  return Poly(std::move(out));
}

Poly poly_mul(const Poly& a, const Poly& b, const MonomialOrder& ord) {
  Poly acc = Poly::zero();
  for (const auto& t : b.terms())
    acc = poly_add(acc, poly_mul_term(a, t, ord), ord);
  return acc;
}

Poly poly_monic(const Poly& a) {
  if (a.is_zero()) return a;
  return poly_scale(a, a.leading_coeff().inverse());
}

Poly poly_pow(const Poly& a, unsigned k, const MonomialOrder& ord) {
  assert(!a.is_zero() || k > 0);
  size_t nvars = a.is_zero() ? 0 : a.terms().front().m.e.size();
  std::int64_t p = a.is_zero() ? 0 : a.leading_coeff().characteristic();
  Poly acc = Poly::constant(Coeff::one(p), static_cast<int>(nvars));
  for (unsigned i = 0; i < k; ++i) acc = poly_mul(acc, a, ord);
  return acc;
}

DivisionResult poly_divide(const Poly& f, const std::vector<Poly>& basis,
                           const MonomialOrder& ord, bool track_quotients) {
  DivisionResult res;
  if (track_quotients) res.quotients.assign(basis.size(), Poly::zero());
  Poly p = f;
  std::vector<Term> rem;
  while (!p.is_zero()) {
    const Term& lt = p.leading();
    bool reduced = false;
    for (size_t i = 0; i < basis.size(); ++i) {
      const Poly& g = basis[i];
      if (g.is_zero()) continue;
      if (!mono_divides(g.leading_monomial(), lt.m)) continue;
      Term q{mono_div(lt.m, g.leading_monomial()), lt.c / g.leading_coeff()};
      p = poly_sub(p, poly_mul_term(g, q, ord), ord);
      if (track_quotients)
        res.quotients[i] =
            poly_add(res.quotients[i], Poly({q}), ord);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.push_back(lt);
      p = Poly(std::vector<Term>(p.terms().begin() + 1, p.terms().end()));
    }
  }
  res.remainder = Poly(std::move(rem));
  return res;
}

Poly poly_exact_div(const Poly& f, const Poly& g, const MonomialOrder& ord) {
  DivisionResult r = poly_divide(f, {g}, ord, true);
  assert(r.remainder.is_zero() && "exact division with nonzero remainder");
  return r.quotients[0];
}

Poly poly_reorder(const Poly& a, const MonomialOrder& ord) {
  return Poly::from_terms(a.terms(), ord);
}

int poly_cmp(const Poly& a, const Poly& b, const MonomialOrder& ord) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  size_t n = std::min(ta.size(), tb.size());
  for (size_t i = 0; i < n; ++i) {
    int c = mono_cmp(ta[i].m, tb[i].m, ord);
    if (c != 0) return c;
    if (ta[i].c != tb[i].c) {
      // Any fixed tie-break works; compare printed coefficients.
      std::string sa = ta[i].c.str(), sb = tb[i].c.str();
      return sa < sb ? -1 : 1;
    }
  }
  if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
  return 0;
}

}  // namespace widecat
