#include "widecat/module.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <set>

#include "widecat/errors.hpp"

namespace widecat {

// --- polynomial matrices ----------------------------------------------------

std::vector<Poly> PolyMatrix::column(int j) const {
  std::vector<Poly> col;
  col.reserve(static_cast<size_t>(rows));
  for (int i = 0; i < rows; ++i) col.push_back(at(i, j));
  return col;
}

PolyMatrix PolyMatrix::identity(int n, int nvars, std::int64_t characteristic) {
  PolyMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    m.at(i, i) = Poly::constant(Coeff::one(characteristic), nvars);
  return m;
}

PolyMatrix pm_mul(const PolyMatrix& x, const PolyMatrix& y,
                  const MonomialOrder& ord) {
  if (x.cols != y.rows)
    throw DomainError("dimension-mismatch", "matrix product shape mismatch");
  PolyMatrix z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < y.cols; ++j) {
      Poly acc;
      for (int k = 0; k < x.cols; ++k) {
        if (x.at(i, k).is_zero() || y.at(k, j).is_zero()) continue;
        acc = poly_add(acc, poly_mul(x.at(i, k), y.at(k, j), ord), ord);
      }
      z.at(i, j) = std::move(acc);
    }
  return z;
}

PolyMatrix pm_hcat(const PolyMatrix& x, const PolyMatrix& y) {
  if (x.rows != y.rows)
    throw DomainError("dimension-mismatch", "hcat row mismatch");
  PolyMatrix z(x.rows, x.cols + y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) z.at(i, j) = x.at(i, j);
    for (int j = 0; j < y.cols; ++j) z.at(i, x.cols + j) = y.at(i, j);
  }
  return z;
}

bool pm_eq(const PolyMatrix& x, const PolyMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) return false;
  for (size_t i = 0; i < x.a.size(); ++i)
    if (!(x.a[i] == y.a[i])) return false;
  return true;
}

// --- free-module Groebner engine ---------------------------------------------
// Elements of R^rank as sparse term lists ordered position-over-term with
// position 0 greatest.  Everything below is deterministic: fixed input
// sequence, lowest-degree-then-oldest pair selection, index-order
// reduction scans.

namespace {

struct ModTerm {
  int pos;
  Monomial m;
  Coeff c;
};

int key_cmp(int pa, const Monomial& ma, int pb, const Monomial& mb,
            const MonomialOrder& ord) {
  if (pa != pb) return pa < pb ? 1 : -1;  // lower position = greater
  return mono_cmp(ma, mb, ord);
}

struct ModVec {
  std::vector<ModTerm> terms;  // strictly descending

  bool is_zero() const { return terms.empty(); }
  const ModTerm& leading() const { return terms.front(); }
};

ModVec mv_from_terms(std::vector<ModTerm> ts, const MonomialOrder& ord) {
  std::sort(ts.begin(), ts.end(), [&](const ModTerm& a, const ModTerm& b) {
    return key_cmp(a.pos, a.m, b.pos, b.m, ord) > 0;
  });
  std::vector<ModTerm> out;
  out.reserve(ts.size());
  for (auto& t : ts) {
    if (!out.empty() && out.back().pos == t.pos && out.back().m == t.m)
      out.back().c = out.back().c + t.c;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const ModTerm& t) { return t.c.is_zero(); });
  return ModVec{std::move(out)};
}

ModVec mv_add(const ModVec& a, const ModVec& b, const MonomialOrder& ord) {
  std::vector<ModTerm> out;
  out.reserve(a.terms.size() + b.terms.size());
  size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    int c = key_cmp(a.terms[i].pos, a.terms[i].m, b.terms[j].pos,
                    b.terms[j].m, ord);
    if (c > 0) {
      out.push_back(a.terms[i++]);
    } else if (c < 0) {
      out.push_back(b.terms[j++]);
    } else {
      Coeff s = a.terms[i].c + b.terms[j].c;
      if (!s.is_zero()) out.push_back(ModTerm{a.terms[i].pos, a.terms[i].m, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms.size(); ++i) out.push_back(a.terms[i]);
  for (; j < b.terms.size(); ++j) out.push_back(b.terms[j]);
  return ModVec{std::move(out)};
}

ModVec mv_scale(const ModVec& a, const Coeff& c) {
  if (c.is_zero()) return ModVec{};
  ModVec out = a;
  for (auto& t : out.terms) t.c = t.c * c;
  return out;
}

// Multiplication by a single ring term keeps the list sorted.
ModVec mv_mul_term(const ModVec& a, const Term& t) {
  if (t.c.is_zero()) return ModVec{};
  ModVec out;
  out.terms.reserve(a.terms.size());
  for (const auto& s : a.terms)
    out.terms.push_back(ModTerm{s.pos, mono_mul(s.m, t.m), s.c * t.c});
  return out;
}

ModVec mv_sub_mul(const ModVec& a, const ModVec& b, const Term& t,
                  const MonomialOrder& ord) {
  Term neg{t.m, -t.c};
  return mv_add(a, mv_mul_term(b, neg), ord);
}

ModVec mv_from_column(const std::vector<Poly>& col, const MonomialOrder& ord) {
  std::vector<ModTerm> ts;
  for (size_t i = 0; i < col.size(); ++i)
    for (const auto& t : col[i].terms())
      ts.push_back(ModTerm{static_cast<int>(i), t.m, t.c});
  return mv_from_terms(std::move(ts), ord);
}

Poly mv_component(const ModVec& v, int pos, const MonomialOrder& ord) {
  std::vector<Term> ts;
  for (const auto& t : v.terms)
    if (t.pos == pos) ts.push_back(Term{t.m, t.c});
  return Poly::from_terms(std::move(ts), ord);
}

// Reduction step log: (basis index, subtracted term).
using Steps = std::vector<std::pair<int, Term>>;

ModVec mv_reduce(ModVec v, const std::vector<ModVec>& g,
                 const MonomialOrder& ord, Steps* steps) {
  std::vector<ModTerm> rem;
  while (!v.is_zero()) {
    const ModTerm lt = v.leading();
    bool hit = false;
    for (size_t i = 0; i < g.size(); ++i) {
      if (g[i].is_zero()) continue;
      const ModTerm& gl = g[i].leading();
      if (gl.pos != lt.pos || !mono_divides(gl.m, lt.m)) continue;
      Term q{mono_div(lt.m, gl.m), lt.c / gl.c};
      v = mv_sub_mul(v, g[i], q, ord);
      if (steps) steps->push_back({static_cast<int>(i), q});
      hit = true;
      break;
    }
    if (!hit) {
      rem.push_back(lt);
      v.terms.erase(v.terms.begin());
    }
  }
  return ModVec{std::move(rem)};
}

// Representation vectors: coefficients of each basis element on the
// original inputs.
using Rep = std::vector<Poly>;

void rep_sub_scaled(Rep& r, const Term& q, const Rep& s,
                    const MonomialOrder& ord) {
  for (size_t i = 0; i < r.size(); ++i) {
    if (s[i].is_zero()) continue;
    r[i] = poly_sub(r[i], poly_mul_term(s[i], q, ord), ord);
  }
}

struct MGB {
  std::vector<ModVec> g;
  std::vector<Rep> reps;  // parallel to g when tracking, else empty
};

MGB module_groebner(const std::vector<ModVec>& inputs,
                    const MonomialOrder& ord, bool track, int nvars,
                    std::int64_t characteristic) {
  MGB out;
  const size_t nin = inputs.size();
  auto unit_rep = [&](size_t i, const Coeff& scale) {
    Rep r(nin, Poly::zero());
    r[i] = Poly::constant(scale, nvars);
    return r;
  };

  for (size_t i = 0; i < nin; ++i) {
    if (inputs[i].is_zero()) continue;
    Coeff lc = inputs[i].leading().c;
    out.g.push_back(mv_scale(inputs[i], lc.inverse()));
    if (track) out.reps.push_back(unit_rep(i, lc.inverse()));
  }

  // Pair queue keyed by (lcm total degree, creation sequence).
  std::set<std::array<long, 4>> queue;
  long seq = 0;
  auto push_pairs = [&](int k) {
    for (int i = 0; i < k; ++i) {
      const ModTerm& a = out.g[static_cast<size_t>(i)].leading();
      const ModTerm& b = out.g[static_cast<size_t>(k)].leading();
      if (a.pos != b.pos) continue;
      queue.insert({mono_lcm(a.m, b.m).total_degree(), seq++, i, k});
    }
  };
  for (int k = 0; k < static_cast<int>(out.g.size()); ++k) push_pairs(k);

  while (!queue.empty()) {
    auto [deg, s, li, lj] = *queue.begin();
    queue.erase(queue.begin());
    auto i = static_cast<size_t>(li);
    auto j = static_cast<size_t>(lj);
    const ModTerm& a = out.g[i].leading();
    const ModTerm& b = out.g[j].leading();
    Monomial l = mono_lcm(a.m, b.m);
    Term qi{mono_div(l, a.m), Coeff::one(characteristic)};
    Term qj{mono_div(l, b.m), Coeff::one(characteristic)};
    ModVec sp = mv_add(mv_mul_term(out.g[i], qi),
                       mv_scale(mv_mul_term(out.g[j], qj),
                                -Coeff::one(characteristic)),
                       ord);
    Steps steps;
    ModVec r = mv_reduce(std::move(sp), out.g, ord, track ? &steps : nullptr);
    if (r.is_zero()) continue;
    Coeff lc = r.leading().c;
    if (track) {
      Rep rep(nin, Poly::zero());
      for (size_t t = 0; t < nin; ++t) {
        Poly x = poly_mul_term(out.reps[i][t], qi, ord);
        Poly y = poly_mul_term(out.reps[j][t], qj, ord);
        rep[t] = poly_sub(x, y, ord);
      }
      for (const auto& [idx, q] : steps)
        rep_sub_scaled(rep, q, out.reps[static_cast<size_t>(idx)], ord);
      for (auto& p : rep) p = poly_scale(p, lc.inverse());
      out.reps.push_back(std::move(rep));
    }
    out.g.push_back(mv_scale(r, lc.inverse()));
    push_pairs(static_cast<int>(out.g.size()) - 1);
  }
  return out;
}

void reduce_module_gb(MGB& gb, const MonomialOrder& ord) {
  bool track = !gb.reps.empty();
  // Minimalize: drop elements whose leading term another's divides.
  std::vector<size_t> order_idx(gb.g.size());
  for (size_t i = 0; i < order_idx.size(); ++i) order_idx[i] = i;
  std::sort(order_idx.begin(), order_idx.end(), [&](size_t x, size_t y) {
    const ModTerm& a = gb.g[x].leading();
    const ModTerm& b = gb.g[y].leading();
    int c = key_cmp(a.pos, a.m, b.pos, b.m, ord);
    return c != 0 ? c < 0 : x < y;
  });
  std::vector<ModVec> kept;
  std::vector<Rep> kept_reps;
  for (size_t idx : order_idx) {
    const ModTerm& lt = gb.g[idx].leading();
    bool drop = false;
    for (const auto& h : kept) {
      const ModTerm& hl = h.leading();
      if (hl.pos == lt.pos && mono_divides(hl.m, lt.m)) {
        drop = true;
        break;
      }
    }
    if (!drop) {
      kept.push_back(gb.g[idx]);
      if (track) kept_reps.push_back(gb.reps[idx]);
    }
  }

  // Autoreduce until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < kept.size(); ++i) {
      std::vector<ModVec> others;
      std::vector<size_t> omap;
      for (size_t k = 0; k < kept.size(); ++k)
        if (k != i) {
          others.push_back(kept[k]);
          omap.push_back(k);
        }
      Steps steps;
      ModVec r = mv_reduce(kept[i], others, ord, track ? &steps : nullptr);
      bool same = r.terms.size() == kept[i].terms.size();
      if (same)
        for (size_t t = 0; t < r.terms.size(); ++t)
          if (!(r.terms[t].pos == kept[i].terms[t].pos &&
                r.terms[t].m == kept[i].terms[t].m &&
                r.terms[t].c == kept[i].terms[t].c)) {
            same = false;
            break;
          }
      if (same) continue;
      changed = true;
      if (track) {
        Rep rep = kept_reps[i];
        for (const auto& [idx, q] : steps)
          rep_sub_scaled(rep, q, kept_reps[omap[static_cast<size_t>(idx)]],
                         ord);
        kept_reps[i] = std::move(rep);
      }
      if (r.is_zero()) {
        kept.erase(kept.begin() + static_cast<long>(i));
        if (track) kept_reps.erase(kept_reps.begin() + static_cast<long>(i));
        --i;
      } else {
        Coeff lc = r.leading().c;
        kept[i] = mv_scale(r, lc.inverse());
        if (track)
          for (auto& p : kept_reps[i]) p = poly_scale(p, lc.inverse());
      }
    }
  }

  // Canonical final order: descending leading terms.
  std::vector<size_t> fin(kept.size());
  for (size_t i = 0; i < fin.size(); ++i) fin[i] = i;
  std::sort(fin.begin(), fin.end(), [&](size_t x, size_t y) {
    const ModTerm& a = kept[x].leading();
    const ModTerm& b = kept[y].leading();
    int c = key_cmp(a.pos, a.m, b.pos, b.m, ord);
    return c != 0 ? c > 0 : x < y;
  });
  MGB out;
  for (size_t i : fin) {
    out.g.push_back(std::move(kept[i]));
    if (track) out.reps.push_back(std::move(kept_reps[i]));
  }
  gb = std::move(out);
}

// Modulus relations a_t * e_i as module elements of R^rank.
std::vector<ModVec> modulus_columns(int rank, const RingDescriptor& ring) {
  std::vector<ModVec> out;
  for (const Poly& m : ring.modulus)
    for (int i = 0; i < rank; ++i) {
      std::vector<ModTerm> ts;
      for (const auto& t : m.terms()) ts.push_back(ModTerm{i, t.m, t.c});
      out.push_back(mv_from_terms(std::move(ts), ring.order));
    }
  return out;
}

void require_poly(const RingDescriptor& ring) {
  if (ring.kind != RingKind::poly)
    throw DomainError("unsupported-ring", "polynomial-ring operation");
}

// Drops zero columns, preserving order.
PolyMatrix prune_zero_columns(const PolyMatrix& m) {
  std::vector<int> keep;
  for (int j = 0; j < m.cols; ++j) {
    bool nz = false;
    for (int i = 0; i < m.rows; ++i)
      if (!m.at(i, j).is_zero()) {
        nz = true;
        break;
      }
    if (nz) keep.push_back(j);
  }
  PolyMatrix out(m.rows, static_cast<int>(keep.size()));
  for (int j = 0; j < out.cols; ++j)
    for (int i = 0; i < m.rows; ++i) out.at(i, j) = m.at(i, keep[j]);
  return out;
}

}  // namespace

PolyMatrix syzygy_module(const PolyMatrix& m, const RingDescriptor& ring) {
  require_poly(ring);
  const int n = m.rows;
  const int c = m.cols;
  const int rank = n + c;

  std::vector<ModVec> inputs;
  inputs.reserve(static_cast<size_t>(c));
  for (int j = 0; j < c; ++j) {
    std::vector<ModTerm> ts;
    for (int i = 0; i < n; ++i)
      for (const auto& t : m.at(i, j).terms())
        ts.push_back(ModTerm{i, t.m, t.c});
    ts.push_back(ModTerm{n + j, Monomial::one(ring.nvars()), ring.coeff_one()});
    inputs.push_back(mv_from_terms(std::move(ts), ring.order));
  }
  for (auto& mc : modulus_columns(n, ring)) inputs.push_back(std::move(mc));

  MGB gb = module_groebner(inputs, ring.order, false, ring.nvars(),
                           ring.characteristic);
  reduce_module_gb(gb, ring.order);

  std::vector<std::vector<Poly>> cols;
  for (const auto& v : gb.g) {
    if (v.is_zero() || v.leading().pos < n) continue;
    std::vector<Poly> col;
    col.reserve(static_cast<size_t>(c));
    for (int j = 0; j < c; ++j)
      col.push_back(ring_normal_form(mv_component(v, n + j, ring.order), ring));
    cols.push_back(std::move(col));
  }
  PolyMatrix out(c, static_cast<int>(cols.size()));
  for (int j = 0; j < out.cols; ++j)
    for (int i = 0; i < c; ++i) out.at(i, j) = cols[static_cast<size_t>(j)][i];
  return prune_zero_columns(out);
}

std::optional<PolyMatrix> express_in_span(const PolyMatrix& basis,
                                          const PolyMatrix& targets,
                                          const RingDescriptor& ring) {
  require_poly(ring);
  if (basis.rows != targets.rows)
    throw DomainError("dimension-mismatch", "express: row mismatch");
  const int n = basis.rows;
  const int k = basis.cols;

  std::vector<ModVec> inputs;
  for (int j = 0; j < k; ++j)
    inputs.push_back(mv_from_column(basis.column(j), ring.order));
  for (auto& mc : modulus_columns(n, ring)) inputs.push_back(std::move(mc));

  MGB gb = module_groebner(inputs, ring.order, true, ring.nvars(),
                           ring.characteristic);
  reduce_module_gb(gb, ring.order);

  PolyMatrix x(k, targets.cols);
  for (int j = 0; j < targets.cols; ++j) {
    Steps steps;
    ModVec r = mv_reduce(mv_from_column(targets.column(j), ring.order), gb.g,
                         ring.order, &steps);
    if (!r.is_zero()) return std::nullopt;
    std::vector<Poly> acc(static_cast<size_t>(k), Poly::zero());
    for (const auto& [idx, q] : steps) {
      const Rep& rep = gb.reps[static_cast<size_t>(idx)];
      for (int i = 0; i < k; ++i) {
        if (rep[static_cast<size_t>(i)].is_zero()) continue;
        acc[static_cast<size_t>(i)] = poly_add(
            acc[static_cast<size_t>(i)],
            poly_mul_term(rep[static_cast<size_t>(i)], q, ring.order),
            ring.order);
      }
    }
    for (int i = 0; i < k; ++i)
      x.at(i, j) = ring_normal_form(acc[static_cast<size_t>(i)], ring);
  }
  return x;
}

// --- finitely presented modules ----------------------------------------------

namespace {

bool poly_homogeneous(const Poly& f, int* deg_out) {
  if (f.is_zero()) {
    *deg_out = -1;
    return true;
  }
  int d = f.terms().front().m.total_degree();
  for (const auto& t : f.terms())
    if (t.m.total_degree() != d) return false;
  *deg_out = d;
  return true;
}

void validate_degrees(const PolyMatrix& rel, const std::vector<int>& degrees) {
  if (static_cast<int>(degrees.size()) != rel.rows)
    throw DomainError("invalid-module", "degree list length != generators");
  for (int j = 0; j < rel.cols; ++j) {
    bool have_cd = false;
    int cd = 0;
    for (int i = 0; i < rel.rows; ++i) {
      const Poly& e = rel.at(i, j);
      if (e.is_zero()) continue;
      int d;
      if (!poly_homogeneous(e, &d))
        throw DomainError("invalid-module",
                          "relation entry is not homogeneous");
      int this_cd = d + degrees[static_cast<size_t>(i)];
      if (!have_cd) {
        cd = this_cd;
        have_cd = true;
      } else if (cd != this_cd) {
        throw DomainError("invalid-module",
                          "relation column is not homogeneous");
      }
    }
  }
}

const PolyMatrix& prel(const FPModule& m) {
  return std::get<PolyMatrix>(m.rel);
}
const IntMatrix& zrel(const FPModule& m) { return std::get<IntMatrix>(m.rel); }

bool columns_in_span(const PolyMatrix& basis, const PolyMatrix& targets,
                     const RingDescriptor& ring) {
  std::vector<ModVec> inputs;
  for (int j = 0; j < basis.cols; ++j)
    inputs.push_back(mv_from_column(basis.column(j), ring.order));
  for (auto& mc : modulus_columns(basis.rows, ring))
    inputs.push_back(std::move(mc));
  MGB gb = module_groebner(inputs, ring.order, false, ring.nvars(),
                           ring.characteristic);
  reduce_module_gb(gb, ring.order);
  for (int j = 0; j < targets.cols; ++j) {
    ModVec r = mv_reduce(mv_from_column(targets.column(j), ring.order), gb.g,
                         ring.order, nullptr);
    if (!r.is_zero()) return false;
  }
  return true;
}

// Integer relation lattice of a presentation: relation columns plus n*I
// over ZZ/n.
IntMatrix z_relation_lattice(const FPModule& m) {
  const IntMatrix& rel = zrel(m);
  if (m.ring.int_modulus == 0) return rel;
  IntMatrix nid(m.ngens, m.ngens);
  for (int i = 0; i < m.ngens; ++i) nid.at(i, i) = m.ring.int_modulus;
  return mat_hcat(rel, nid);
}

bool z_columns_in_lattice(const IntMatrix& lattice, const IntMatrix& targets) {
  for (int j = 0; j < targets.cols; ++j) {
    std::vector<Int> b;
    b.reserve(static_cast<size_t>(targets.rows));
    for (int i = 0; i < targets.rows; ++i) b.push_back(targets.at(i, j));
    if (!solve_linear_z(lattice, b)) return false;
  }
  return true;
}

IntMatrix z_take_rows(const IntMatrix& m, int nrows) {
  IntMatrix out(nrows, m.cols);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < m.cols; ++j) out.at(i, j) = m.at(i, j);
  return out;
}

IntMatrix z_prune_zero_columns(const IntMatrix& m) {
  std::vector<int> keep;
  for (int j = 0; j < m.cols; ++j) {
    bool nz = false;
    for (int i = 0; i < m.rows; ++i)
      if (m.at(i, j) != 0) {
        nz = true;
        break;
      }
    if (nz) keep.push_back(j);
  }
  IntMatrix out(m.rows, static_cast<int>(keep.size()));
  for (int j = 0; j < out.cols; ++j)
    for (int i = 0; i < m.rows; ++i) out.at(i, j) = m.at(i, keep[j]);
  return out;
}

// Reduce entries of a ZZ/n matrix into [0, n).
IntMatrix z_normalize_entries(IntMatrix m, const Int& n) {
  if (n == 0) return m;
  for (auto& x : m.a) {
    x %= n;
    if (x < 0) x += n;
  }
  return m;
}

}  // namespace

FPModule make_fp_module(const RingDescriptor& ring, PolyMatrix rel,
                        std::optional<std::vector<int>> degrees) {
  require_poly(ring);
  for (auto& e : rel.a) e = ring_normal_form(e, ring);
  if (degrees) validate_degrees(rel, *degrees);
  FPModule m;
  m.ring = ring;
  m.ngens = rel.rows;
  m.rel = std::move(rel);
  m.degrees = std::move(degrees);
  return m;
}

FPModule make_fp_module_z(const RingDescriptor& ring, IntMatrix rel) {
  if (ring.kind != RingKind::integer)
    throw DomainError("unsupported-ring", "integer presentation over non-integer ring");
  FPModule m;
  m.ring = ring;
  m.ngens = rel.rows;
  m.rel = z_normalize_entries(std::move(rel), ring.int_modulus);
  return m;
}

FPModule fp_free(const RingDescriptor& ring, int rank) {
  if (ring.kind == RingKind::poly)
    return make_fp_module(ring, PolyMatrix(rank, 0));
  return make_fp_module_z(ring, IntMatrix(rank, 0));
}

FPModule fp_cyclic(const IdealGB& ideal) {
  PolyMatrix rel(1, static_cast<int>(ideal.gens.size()));
  for (int j = 0; j < rel.cols; ++j)
    rel.at(0, j) = ideal.gens[static_cast<size_t>(j)];
  return make_fp_module(ideal.ring, std::move(rel));
}

FPModule fp_cyclic_z(const RingDescriptor& ring, const Int& g) {
  IntMatrix rel(1, g == 0 ? 0 : 1);
  if (g != 0) rel.at(0, 0) = g;
  return make_fp_module_z(ring, std::move(rel));
}

FPModule fp_zero(const RingDescriptor& ring) {
  if (ring.kind == RingKind::poly)
    return make_fp_module(ring, PolyMatrix(0, 0));
  return make_fp_module_z(ring, IntMatrix(0, 0));
}

FPModule direct_sum(const FPModule& a, const FPModule& b) {
  require_same_ring(a.ring, b.ring);
  FPModule m;
  m.ring = a.ring;
  m.ngens = a.ngens + b.ngens;
  if (a.ring.kind == RingKind::poly) {
    const PolyMatrix& ra = prel(a);
    const PolyMatrix& rb = prel(b);
    PolyMatrix rel(m.ngens, ra.cols + rb.cols);
    for (int i = 0; i < ra.rows; ++i)
      for (int j = 0; j < ra.cols; ++j) rel.at(i, j) = ra.at(i, j);
    for (int i = 0; i < rb.rows; ++i)
      for (int j = 0; j < rb.cols; ++j)
        rel.at(a.ngens + i, ra.cols + j) = rb.at(i, j);
    m.rel = std::move(rel);
    if (a.degrees && b.degrees) {
      std::vector<int> deg = *a.degrees;
      deg.insert(deg.end(), b.degrees->begin(), b.degrees->end());
      m.degrees = std::move(deg);
    }
  } else {
    const IntMatrix& ra = zrel(a);
    const IntMatrix& rb = zrel(b);
    IntMatrix rel(m.ngens, ra.cols + rb.cols);
    for (int i = 0; i < ra.rows; ++i)
      for (int j = 0; j < ra.cols; ++j) rel.at(i, j) = ra.at(i, j);
    for (int i = 0; i < rb.rows; ++i)
      for (int j = 0; j < rb.cols; ++j)
        rel.at(a.ngens + i, ra.cols + j) = rb.at(i, j);
    m.rel = std::move(rel);
  }
  return m;
}

bool is_zero_module(const FPModule& m) {
  if (m.ngens == 0) return true;
  if (m.ring.kind == RingKind::poly) {
    return columns_in_span(
        prel(m),
        PolyMatrix::identity(m.ngens, m.ring.nvars(), m.ring.characteristic),
        m.ring);
  }
  SmithDecomposition s = smith_normal_form(z_relation_lattice(m));
  int n = std::min(s.d.rows, s.d.cols);
  if (n < m.ngens) return false;
  for (int i = 0; i < m.ngens; ++i)
    if (s.d.at(i, i) != 1) return false;
  return true;
}

ModuleMap make_module_map(FPModule dom, FPModule cod, AnyMatrix mat) {
  require_same_ring(dom.ring, cod.ring);
  if (dom.ring.kind == RingKind::poly) {
    const PolyMatrix& f = std::get<PolyMatrix>(mat);
    if (f.rows != cod.ngens || f.cols != dom.ngens)
      throw DomainError("invalid-map", "matrix shape does not match modules");
    PolyMatrix moved = pm_mul(f, prel(dom), dom.ring.order);
    if (!columns_in_span(prel(cod), moved, dom.ring))
      throw DomainError("invalid-map",
                        "matrix does not carry relations into relations");
  } else {
    const IntMatrix& f = std::get<IntMatrix>(mat);
    if (f.rows != cod.ngens || f.cols != dom.ngens)
      throw DomainError("invalid-map", "matrix shape does not match modules");
    IntMatrix moved = mat_mul(f, zrel(dom));
    if (!z_columns_in_lattice(z_relation_lattice(cod), moved))
      throw DomainError("invalid-map",
                        "matrix does not carry relations into relations");
  }
  return ModuleMap{std::move(dom), std::move(cod), std::move(mat)};
}

ModuleMap identity_map(const FPModule& m) {
  AnyMatrix mat;
  if (m.ring.kind == RingKind::poly)
    mat = PolyMatrix::identity(m.ngens, m.ring.nvars(), m.ring.characteristic);
  else
    mat = IntMatrix::identity(m.ngens);
  return ModuleMap{m, m, std::move(mat)};
}

ModuleMap zero_map(const FPModule& dom, const FPModule& cod) {
  require_same_ring(dom.ring, cod.ring);
  AnyMatrix mat;
  if (dom.ring.kind == RingKind::poly)
    mat = PolyMatrix(cod.ngens, dom.ngens);
  else
    mat = IntMatrix(cod.ngens, dom.ngens);
  return ModuleMap{dom, cod, std::move(mat)};
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  require_same_ring(f.cod.ring, g.dom.ring);
  if (f.cod.ngens != g.dom.ngens)
    throw DomainError("invalid-map", "composition shape mismatch");
  AnyMatrix mat;
  if (f.dom.ring.kind == RingKind::poly)
    mat = pm_mul(std::get<PolyMatrix>(g.mat), std::get<PolyMatrix>(f.mat),
                 f.dom.ring.order);
  else
    mat = mat_mul(std::get<IntMatrix>(g.mat), std::get<IntMatrix>(f.mat));
  return ModuleMap{f.dom, g.cod, std::move(mat)};
}

SubmoduleResult kernel(const ModuleMap& f) {
  const RingDescriptor& ring = f.dom.ring;
  if (ring.kind == RingKind::poly) {
    const PolyMatrix& mat = std::get<PolyMatrix>(f.mat);
    // Generators: x with mat*x in the span of the codomain relations.
    PolyMatrix syz = syzygy_module(pm_hcat(mat, prel(f.cod)), ring);
    PolyMatrix gens(f.dom.ngens, syz.cols);
    for (int i = 0; i < f.dom.ngens; ++i)
      for (int j = 0; j < syz.cols; ++j) gens.at(i, j) = syz.at(i, j);
    gens = prune_zero_columns(gens);
    // Relations among those generators inside the domain.
    PolyMatrix rsyz = syzygy_module(pm_hcat(gens, prel(f.dom)), ring);
    PolyMatrix rel(gens.cols, rsyz.cols);
    for (int i = 0; i < gens.cols; ++i)
      for (int j = 0; j < rsyz.cols; ++j) rel.at(i, j) = rsyz.at(i, j);
    rel = prune_zero_columns(rel);
    FPModule ker = make_fp_module(ring, std::move(rel));
    return SubmoduleResult{std::move(ker), std::move(gens)};
  }
  const IntMatrix& mat = std::get<IntMatrix>(f.mat);
  IntMatrix big = kernel_basis_z(mat_hcat(mat, z_relation_lattice(f.cod)));
  IntMatrix gens = z_prune_zero_columns(z_take_rows(big, f.dom.ngens));
  IntMatrix rbig = kernel_basis_z(mat_hcat(gens, z_relation_lattice(f.dom)));
  IntMatrix rel = z_prune_zero_columns(z_take_rows(rbig, gens.cols));
  FPModule ker;
  ker.ring = ring;
  ker.ngens = gens.cols;
  ker.rel = z_normalize_entries(std::move(rel), ring.int_modulus);
  return SubmoduleResult{std::move(ker),
                         z_normalize_entries(std::move(gens), ring.int_modulus)};
}

FPModule cokernel(const ModuleMap& f) {
  const RingDescriptor& ring = f.dom.ring;
  if (ring.kind == RingKind::poly)
    return make_fp_module(ring,
                          pm_hcat(prel(f.cod), std::get<PolyMatrix>(f.mat)));
  return make_fp_module_z(ring,
                          mat_hcat(zrel(f.cod), std::get<IntMatrix>(f.mat)));
}

SubmoduleResult image(const ModuleMap& f) {
  const RingDescriptor& ring = f.dom.ring;
  if (ring.kind == RingKind::poly) {
    const PolyMatrix& mat = std::get<PolyMatrix>(f.mat);
    PolyMatrix syz = syzygy_module(pm_hcat(mat, prel(f.cod)), ring);
    PolyMatrix rel(f.dom.ngens, syz.cols);
    for (int i = 0; i < f.dom.ngens; ++i)
      for (int j = 0; j < syz.cols; ++j) rel.at(i, j) = syz.at(i, j);
    rel = prune_zero_columns(rel);
    return SubmoduleResult{make_fp_module(ring, std::move(rel)), mat};
  }
  const IntMatrix& mat = std::get<IntMatrix>(f.mat);
  IntMatrix big = kernel_basis_z(mat_hcat(mat, z_relation_lattice(f.cod)));
  IntMatrix rel = z_prune_zero_columns(z_take_rows(big, f.dom.ngens));
  FPModule img;
  img.ring = ring;
  img.ngens = f.dom.ngens;
  img.rel = z_normalize_entries(std::move(rel), ring.int_modulus);
  return SubmoduleResult{std::move(img), mat};
}

IdealData annihilator(const FPModule& m) {
  if (m.ring.kind == RingKind::poly) {
    // Unit ideal for the zero module, else the meet of the per-generator
    // transporters (relations : e_i).
    IdealGB ann = groebner_basis(
        m.ring, {Poly::constant(m.ring.coeff_one(), m.ring.nvars())});
    const PolyMatrix& rel = prel(m);
    for (int i = 0; i < m.ngens; ++i) {
      PolyMatrix ei(m.ngens, 1);
      ei.at(i, 0) = Poly::constant(m.ring.coeff_one(), m.ring.nvars());
      PolyMatrix syz = syzygy_module(pm_hcat(ei, rel), m.ring);
      std::vector<Poly> gens;
      for (int j = 0; j < syz.cols; ++j) gens.push_back(syz.at(0, j));
      ann = ideal_intersection(ann, groebner_basis(m.ring, std::move(gens)));
    }
    return ann;
  }
  const Int n = m.ring.int_modulus;
  Int acc = 1;  // annihilator generator = lcm over generators
  const IntMatrix lattice = z_relation_lattice(m);
  for (int i = 0; i < m.ngens; ++i) {
    IntMatrix ei(m.ngens, 1);
    ei.at(i, 0) = 1;
    IntMatrix k = kernel_basis_z(mat_hcat(ei, lattice));
    Int g = 0;
    for (int j = 0; j < k.cols; ++j) g = gcd(g, k.at(0, j));
    if (g == 0) {
      acc = 0;  // a free direction: nothing kills this generator
    } else if (acc != 0) {
      acc = lcm(acc, g);
    }
  }
  if (acc < 0) acc = -acc;
  if (n != 0) acc = gcd(acc == 0 ? n : acc, n);
  return acc;
}

namespace {

Poly pm_det(const PolyMatrix& m, const MonomialOrder& ord) {
  const int n = m.rows;
  if (n == 0) {
    // Empty determinant is 1; the caller supplies the characteristic via
    // a nonempty matrix, so this case is handled by fitting0 directly.
    return Poly::zero();
  }
  if (n == 1) return m.at(0, 0);
  Poly acc;
  for (int j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    PolyMatrix sub(n - 1, n - 1);
    for (int i = 1; i < n; ++i) {
      int cc = 0;
      for (int k = 0; k < n; ++k) {
        if (k == j) continue;
        sub.at(i - 1, cc++) = m.at(i, k);
      }
    }
    Poly term = poly_mul(m.at(0, j), pm_det(sub, ord), ord);
    acc = (j % 2 == 0) ? poly_add(acc, term, ord) : poly_sub(acc, term, ord);
  }
  return acc;
}

}  // namespace

IdealData fitting0(const FPModule& m) {
  if (m.ring.kind == RingKind::poly) {
    const RingDescriptor& ring = m.ring;
    if (m.ngens == 0)
      return groebner_basis(ring,
                            {Poly::constant(ring.coeff_one(), ring.nvars())});
    // Presentation columns plus the modulus relations.
    PolyMatrix full = prel(m);
    for (const Poly& a : ring.modulus) {
      PolyMatrix mc(m.ngens, m.ngens);
      for (int i = 0; i < m.ngens; ++i) mc.at(i, i) = a;
      full = pm_hcat(full, mc);
    }
    if (full.cols < m.ngens) return groebner_basis(ring, {});
    std::vector<Poly> minors;
    std::vector<int> pick(static_cast<size_t>(m.ngens));
    for (int i = 0; i < m.ngens; ++i) pick[static_cast<size_t>(i)] = i;
    for (;;) {
      PolyMatrix sub(m.ngens, m.ngens);
      for (int i = 0; i < m.ngens; ++i)
        for (int j = 0; j < m.ngens; ++j)
          sub.at(i, j) = full.at(i, pick[static_cast<size_t>(j)]);
      minors.push_back(pm_det(sub, ring.order));
      // next combination
      int t = m.ngens - 1;
      while (t >= 0 && pick[static_cast<size_t>(t)] == full.cols - m.ngens + t)
        --t;
      if (t < 0) break;
      ++pick[static_cast<size_t>(t)];
      for (int u = t + 1; u < m.ngens; ++u)
        pick[static_cast<size_t>(u)] = pick[static_cast<size_t>(u - 1)] + 1;
    }
    return groebner_basis(ring, std::move(minors));
  }
  const Int n = m.ring.int_modulus;
  if (m.ngens == 0) return n == 0 ? Int(1) : gcd(Int(1), n);
  IntMatrix full = z_relation_lattice(m);
  if (full.cols < m.ngens) return n == 0 ? Int(0) : n;
  Int g = 0;
  std::vector<int> pick(static_cast<size_t>(m.ngens));
  for (int i = 0; i < m.ngens; ++i) pick[static_cast<size_t>(i)] = i;
  for (;;) {
    IntMatrix sub(m.ngens, m.ngens);
    for (int i = 0; i < m.ngens; ++i)
      for (int j = 0; j < m.ngens; ++j)
        sub.at(i, j) = full.at(i, pick[static_cast<size_t>(j)]);
    g = gcd(g, determinant(sub));
    int t = m.ngens - 1;
    while (t >= 0 && pick[static_cast<size_t>(t)] == full.cols - m.ngens + t)
      --t;
    if (t < 0) break;
    ++pick[static_cast<size_t>(t)];
    for (int u = t + 1; u < m.ngens; ++u)
      pick[static_cast<size_t>(u)] = pick[static_cast<size_t>(u - 1)] + 1;
  }
  if (g < 0) g = -g;
  if (n != 0) g = gcd(g == 0 ? n : g, n);
  return g;
}

}  // namespace widecat
