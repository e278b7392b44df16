#include "widecat/complex.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "widecat/errors.hpp"
#include "widecat/resolution.hpp"

namespace widecat {

namespace {

bool pm_is_zero_mod(const PolyMatrix& m, const RingDescriptor& ring) {
  for (const Poly& e : m.a) {
    if (!ring_normal_form(e, ring).is_zero()) return false;
  }
  return true;
}

bool im_is_zero_mod(const IntMatrix& m, const Int& n) {
  for (const Int& e : m.a) {
    if (n == 0 ? e != 0 : (e % n) != 0) return false;
  }
  return true;
}

void check_flavor(const RingDescriptor& ring, const AnyMatrix& m) {
  const bool want_poly = ring.kind == RingKind::poly;
  if (want_poly != std::holds_alternative<PolyMatrix>(m)) {
    throw DomainError("ring-mismatch",
                      "matrix flavor does not match the coefficient ring");
  }
}

int any_rows(const AnyMatrix& m) {
  return std::holds_alternative<PolyMatrix>(m) ? std::get<PolyMatrix>(m).rows
                                               : std::get<IntMatrix>(m).rows;
}

int any_cols(const AnyMatrix& m) {
  return std::holds_alternative<PolyMatrix>(m) ? std::get<PolyMatrix>(m).cols
                                               : std::get<IntMatrix>(m).cols;
}

AnyMatrix any_zero(const RingDescriptor& ring, int rows, int cols) {
  if (ring.kind == RingKind::poly) return PolyMatrix(rows, cols);
  return IntMatrix(rows, cols);
}

AnyMatrix any_mul(const RingDescriptor& ring, const AnyMatrix& a,
                  const AnyMatrix& b) {
  if (ring.kind == RingKind::poly) {
    return pm_mul(std::get<PolyMatrix>(a), std::get<PolyMatrix>(b), ring.order);
  }
  return mat_mul(std::get<IntMatrix>(a), std::get<IntMatrix>(b));
}

bool any_is_zero_mod(const RingDescriptor& ring, const AnyMatrix& m) {
  if (ring.kind == RingKind::poly) {
    return pm_is_zero_mod(std::get<PolyMatrix>(m), ring);
  }
  return im_is_zero_mod(std::get<IntMatrix>(m), ring.int_modulus);
}

AnyMatrix any_neg(const RingDescriptor& ring, const AnyMatrix& m) {
  if (ring.kind == RingKind::poly) {
    PolyMatrix out = std::get<PolyMatrix>(m);
    for (Poly& e : out.a) e = poly_neg(e);
    return out;
  }
  IntMatrix out = std::get<IntMatrix>(m);
  for (Int& e : out.a) e = -e;
  return out;
}

// Canonicalizes entries: polynomial entries are reduced by the ring
// modulus, integer entries into [0, n).
AnyMatrix any_normalize(const RingDescriptor& ring, AnyMatrix m) {
  if (ring.kind == RingKind::poly) {
    PolyMatrix& p = std::get<PolyMatrix>(m);
    for (Poly& e : p.a) e = ring_normal_form(e, ring);
  } else if (ring.int_modulus != 0) {
    IntMatrix& z = std::get<IntMatrix>(m);
    for (Int& e : z.a) {
      e %= ring.int_modulus;
      if (e < 0) e += ring.int_modulus;
    }
  }
  return m;
}

// The matrix of d_n : X_n -> X_(n-1), materialized as a zero matrix when
// n is outside the stored range.
AnyMatrix diff_at(const FreeComplex& x, int n) {
  int i = n - x.low - 1;
  if (i >= 0 && i < static_cast<int>(x.diffs.size())) return x.diffs[i];
  return any_zero(x.ring, x.rank_at(n - 1), x.rank_at(n));
}

}  // namespace

int FreeComplex::rank_at(int n) const {
  int i = n - low;
  if (i < 0 || i >= static_cast<int>(ranks.size())) return 0;
  return ranks[static_cast<size_t>(i)];
}

FreeComplex make_complex(const RingDescriptor& ring, int low,
                         std::vector<int> ranks,
                         std::vector<AnyMatrix> diffs) {
  require_supported(ring);
  for (int r : ranks) {
    if (r < 0) throw DomainError("dimension-mismatch", "negative rank");
  }
  size_t expected = ranks.empty() ? 0 : ranks.size() - 1;
  if (diffs.size() != expected) {
    throw DomainError("dimension-mismatch",
                      "a complex on k degrees carries k - 1 differentials");
  }
  for (size_t i = 0; i < diffs.size(); ++i) {
    check_flavor(ring, diffs[i]);
    if (any_rows(diffs[i]) != ranks[i] || any_cols(diffs[i]) != ranks[i + 1]) {
      throw DomainError("dimension-mismatch", "differential shape mismatch");
    }
    diffs[i] = any_normalize(ring, std::move(diffs[i]));
  }
  for (size_t i = 0; i + 1 < diffs.size(); ++i) {
    if (!any_is_zero_mod(ring, any_mul(ring, diffs[i], diffs[i + 1]))) {
      throw DomainError("not-a-complex",
                        "consecutive differentials do not compose to zero");
    }
  }
  FreeComplex x;
  x.ring = ring;
  x.low = low;
  x.ranks = std::move(ranks);
  x.diffs = std::move(diffs);
  return x;
}

FreeComplex one_term_complex(const RingDescriptor& ring, int degree,
                             int rank) {
  return make_complex(ring, degree, {rank}, {});
}

FreeComplex shift(const FreeComplex& x, int k) {
  FreeComplex out = x;
  out.low += k;
  if (k % 2 != 0) {
    for (AnyMatrix& d : out.diffs) d = any_neg(x.ring, d);
  }
  return out;
}

AnyMatrix ChainMap::comp_at(int n) const {
  int i = n - low;
  if (i >= 0 && i < static_cast<int>(comps.size())) return comps[i];
  return any_zero(dom.ring, cod.rank_at(n), dom.rank_at(n));
}

ChainMap make_chain_map(FreeComplex dom, FreeComplex cod, int low,
                        std::vector<AnyMatrix> comps) {
  require_same_ring(dom.ring, cod.ring);
  const RingDescriptor& ring = dom.ring;

  ChainMap f;
  f.dom = std::move(dom);
  f.cod = std::move(cod);

  // Canonical storage: one component per degree across both complexes
  // (empty complexes contribute no degrees).
  int lo = 0;
  int hi = -1;
  if (!f.dom.ranks.empty() && !f.cod.ranks.empty()) {
    lo = std::min(f.dom.low, f.cod.low);
    hi = std::max(f.dom.top(), f.cod.top());
  } else if (!f.dom.ranks.empty()) {
    lo = f.dom.low;
    hi = f.dom.top();
  } else if (!f.cod.ranks.empty()) {
    lo = f.cod.low;
    hi = f.cod.top();
  }
  f.low = lo;
  f.comps.clear();
  for (int n = lo; n <= hi; ++n) {
    int i = n - low;
    AnyMatrix c = (i >= 0 && i < static_cast<int>(comps.size()))
                      ? comps[static_cast<size_t>(i)]
                      : any_zero(ring, f.cod.rank_at(n), f.dom.rank_at(n));
    check_flavor(ring, c);
    if (any_rows(c) != f.cod.rank_at(n) || any_cols(c) != f.dom.rank_at(n)) {
      throw DomainError("dimension-mismatch", "chain map component shape mismatch");
    }
    f.comps.push_back(any_normalize(ring, std::move(c)));
  }

  for (int n = lo; n <= hi + 1; ++n) {
    // f_(n-1) d_n  ==  d_n f_n.
    AnyMatrix lhs = any_mul(ring, f.comp_at(n - 1), diff_at(f.dom, n));
    AnyMatrix rhs = any_mul(ring, diff_at(f.cod, n), f.comp_at(n));
    AnyMatrix dif = ring.kind == RingKind::poly
                        ? AnyMatrix(PolyMatrix(any_rows(lhs), any_cols(lhs)))
                        : AnyMatrix(IntMatrix(any_rows(lhs), any_cols(lhs)));
    if (ring.kind == RingKind::poly) {
      PolyMatrix& d = std::get<PolyMatrix>(dif);
      const PolyMatrix& a = std::get<PolyMatrix>(lhs);
      const PolyMatrix& b = std::get<PolyMatrix>(rhs);
      for (size_t t = 0; t < d.a.size(); ++t) {
        d.a[t] = poly_sub(a.a[t], b.a[t], ring.order);
      }
    } else {
      IntMatrix& d = std::get<IntMatrix>(dif);
      const IntMatrix& a = std::get<IntMatrix>(lhs);
      const IntMatrix& b = std::get<IntMatrix>(rhs);
      for (size_t t = 0; t < d.a.size(); ++t) d.a[t] = a.a[t] - b.a[t];
    }
    if (!any_is_zero_mod(ring, dif)) {
      throw DomainError("not-a-chain-map",
                        "components do not commute with the differentials");
    }
  }
  return f;
}

FreeComplex cone(const ChainMap& f) {
  const RingDescriptor& ring = f.dom.ring;
  const FreeComplex& x = f.dom;
  const FreeComplex& y = f.cod;
  if (x.ranks.empty() && y.ranks.empty()) {
    return make_complex(ring, 0, {}, {});
  }

  int lo = y.ranks.empty() ? x.low + 1
           : x.ranks.empty() ? y.low
                             : std::min(y.low, x.low + 1);
  int hi = y.ranks.empty() ? x.top() + 1
           : x.ranks.empty() ? y.top()
                             : std::max(y.top(), x.top() + 1);

  std::vector<int> ranks;
  for (int n = lo; n <= hi; ++n) {
    ranks.push_back(x.rank_at(n - 1) + y.rank_at(n));
  }

  std::vector<AnyMatrix> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    int rx_top = x.rank_at(n - 2), rx = x.rank_at(n - 1);
    int ry_top = y.rank_at(n - 1), ry = y.rank_at(n);
    AnyMatrix dx = diff_at(x, n - 1);
    AnyMatrix dy = diff_at(y, n);
    AnyMatrix fm = f.comp_at(n - 1);
    if (ring.kind == RingKind::poly) {
      PolyMatrix d(rx_top + ry_top, rx + ry);
      const PolyMatrix& a = std::get<PolyMatrix>(dx);
      const PolyMatrix& b = std::get<PolyMatrix>(dy);
      const PolyMatrix& c = std::get<PolyMatrix>(fm);
      for (int i = 0; i < rx_top; ++i)
        for (int j = 0; j < rx; ++j) d.at(i, j) = poly_neg(a.at(i, j));
      for (int i = 0; i < ry_top; ++i)
        for (int j = 0; j < rx; ++j) d.at(rx_top + i, j) = poly_neg(c.at(i, j));
      for (int i = 0; i < ry_top; ++i)
        for (int j = 0; j < ry; ++j) d.at(rx_top + i, rx + j) = b.at(i, j);
      diffs.emplace_back(std::move(d));
    } else {
      IntMatrix d(rx_top + ry_top, rx + ry);
      const IntMatrix& a = std::get<IntMatrix>(dx);
      const IntMatrix& b = std::get<IntMatrix>(dy);
      const IntMatrix& c = std::get<IntMatrix>(fm);
      for (int i = 0; i < rx_top; ++i)
        for (int j = 0; j < rx; ++j) d.at(i, j) = -a.at(i, j);
      for (int i = 0; i < ry_top; ++i)
        for (int j = 0; j < rx; ++j) d.at(rx_top + i, j) = -c.at(i, j);
      for (int i = 0; i < ry_top; ++i)
        for (int j = 0; j < ry; ++j) d.at(rx_top + i, rx + j) = b.at(i, j);
      diffs.emplace_back(std::move(d));
    }
  }
  return make_complex(ring, lo, std::move(ranks), std::move(diffs));
}

namespace {

// Size-j subsets of {0..k-1}, ascending within a subset, subsets in
// lexicographic order.
std::vector<std::vector<int>> subsets_of_size(int k, int j) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == j) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < k; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

FreeComplex koszul_complex(const RingDescriptor& ring,
                           const std::vector<Poly>& seq) {
  if (ring.kind != RingKind::poly) {
    throw DomainError("ring-mismatch",
                      "polynomial Koszul data over a non-polynomial ring");
  }
  int k = static_cast<int>(seq.size());
  if (k == 0) return one_term_complex(ring, 0, 1);

  std::vector<int> ranks;
  std::vector<std::vector<std::vector<int>>> bases;
  for (int j = 0; j <= k; ++j) {
    bases.push_back(subsets_of_size(k, j));
    ranks.push_back(static_cast<int>(bases.back().size()));
  }
  std::vector<AnyMatrix> diffs;
  for (int j = 1; j <= k; ++j) {
    std::map<std::vector<int>, int> row_index;
    for (size_t r = 0; r < bases[j - 1].size(); ++r) {
      row_index[bases[j - 1][r]] = static_cast<int>(r);
    }
    PolyMatrix d(ranks[j - 1], ranks[j]);
    for (size_t col = 0; col < bases[j].size(); ++col) {
      const std::vector<int>& s = bases[j][col];
      for (size_t t = 0; t < s.size(); ++t) {
        std::vector<int> rest = s;
        rest.erase(rest.begin() + static_cast<long>(t));
        Poly entry = seq[static_cast<size_t>(s[t])];
        if (t % 2 == 1) entry = poly_neg(entry);
        d.at(row_index.at(rest), static_cast<int>(col)) =
            poly_add(d.at(row_index.at(rest), static_cast<int>(col)), entry,
                     ring.order);
      }
    }
    diffs.emplace_back(std::move(d));
  }
  // diffs[i] maps degree i+1 to degree i, matching the complex layout.
  return make_complex(ring, 0, std::move(ranks), std::move(diffs));
}

FreeComplex koszul_complex_z(const RingDescriptor& ring,
                             const std::vector<Int>& seq) {
  if (ring.kind != RingKind::integer) {
    throw DomainError("ring-mismatch", "integer Koszul data over a non-integer ring");
  }
  int k = static_cast<int>(seq.size());
  if (k == 0) return one_term_complex(ring, 0, 1);

  std::vector<int> ranks;
  std::vector<std::vector<std::vector<int>>> bases;
  for (int j = 0; j <= k; ++j) {
    bases.push_back(subsets_of_size(k, j));
    ranks.push_back(static_cast<int>(bases.back().size()));
  }
  std::vector<AnyMatrix> diffs;
  for (int j = 1; j <= k; ++j) {
    std::map<std::vector<int>, int> row_index;
    for (size_t r = 0; r < bases[j - 1].size(); ++r) {
      row_index[bases[j - 1][r]] = static_cast<int>(r);
    }
    IntMatrix d(ranks[j - 1], ranks[j]);
    for (size_t col = 0; col < bases[j].size(); ++col) {
      const std::vector<int>& s = bases[j][col];
      for (size_t t = 0; t < s.size(); ++t) {
        std::vector<int> rest = s;
        rest.erase(rest.begin() + static_cast<long>(t));
        Int entry = seq[static_cast<size_t>(s[t])];
        if (t % 2 == 1) entry = -entry;
        d.at(row_index.at(rest), static_cast<int>(col)) += entry;
      }
    }
    diffs.emplace_back(std::move(d));
  }
  return make_complex(ring, 0, std::move(ranks), std::move(diffs));
}

FreeComplex presentation_complex(const FPModule& m) {
  require_supported(m.ring);
  int cols = any_cols(m.rel);
  if (cols == 0) return one_term_complex(m.ring, 0, m.ngens);
  return make_complex(m.ring, 0, {m.ngens, cols}, {m.rel});
}

FreeComplex perfectize(const FPModule& m, int max_length) {
  FreeResolution res = minimal_free_resolution(m, max_length);
  std::vector<AnyMatrix> diffs;
  for (const PolyMatrix& d : res.maps) diffs.emplace_back(d);
  return make_complex(m.ring, 0, res.ranks, std::move(diffs));
}

namespace {

PolyMatrix pm_top_rows(const PolyMatrix& m, int rows) {
  PolyMatrix out(rows, m.cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < m.cols; ++j) out.at(i, j) = m.at(i, j);
  return out;
}

IntMatrix im_top_rows(const IntMatrix& m, int rows) {
  IntMatrix out(rows, m.cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < m.cols; ++j) out.at(i, j) = m.at(i, j);
  return out;
}

// Generators of { x : a*x = 0 mod n } in Z^cols (n = 0 means over Z).
IntMatrix z_kernel_mod(const IntMatrix& a, const Int& n) {
  if (a.rows == 0) return IntMatrix::identity(a.cols);
  if (n != 0) {
    IntMatrix aug(a.rows, a.cols + a.rows);
    for (int i = 0; i < a.rows; ++i) {
      for (int j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
      aug.at(i, a.cols + i) = n;
    }
    IntMatrix full = kernel_basis_z(aug);
    IntMatrix out(a.cols, full.cols);
    for (int i = 0; i < a.cols; ++i)
      for (int j = 0; j < full.cols; ++j) out.at(i, j) = full.at(i, j);
    return out;
  }
  return kernel_basis_z(a);
}

}  // namespace

FPModule complex_homology(const FreeComplex& x, int n) {
  const RingDescriptor& ring = x.ring;
  if (x.rank_at(n) == 0) return fp_zero(ring);

  if (ring.kind == RingKind::poly) {
    PolyMatrix dn = std::get<PolyMatrix>(diff_at(x, n));
    PolyMatrix dn1 = std::get<PolyMatrix>(diff_at(x, n + 1));
    PolyMatrix cycles =
        dn.rows == 0
            ? PolyMatrix::identity(dn.cols, ring.nvars(), ring.characteristic)
            : syzygy_module(dn, ring);
    if (cycles.cols == 0) return fp_zero(ring);
    // Relations among the cycle generators: coefficient vectors whose
    // combination lands in the image of the next differential.
    PolyMatrix rel =
        pm_top_rows(syzygy_module(pm_hcat(cycles, dn1), ring), cycles.cols);
    return make_fp_module(ring, std::move(rel));
  }

  IntMatrix dn = std::get<IntMatrix>(diff_at(x, n));
  IntMatrix dn1 = std::get<IntMatrix>(diff_at(x, n + 1));
  const Int& mod = ring.int_modulus;
  IntMatrix cycles = z_kernel_mod(dn, mod);
  if (cycles.cols == 0) return fp_zero(ring);
  IntMatrix rel =
      im_top_rows(z_kernel_mod(mat_hcat(cycles, dn1), mod), cycles.cols);
  return make_fp_module_z(ring, std::move(rel));
}

ClosedLocus support_of_complex(const FreeComplex& x) {
  ClosedLocus acc = locus_empty(x.ring);
  for (int n = x.low; n <= x.top(); ++n) {
    acc = locus_union(acc, support_of(complex_homology(x, n)));
  }
  return acc;
}

ThickSubcat thick_generated_by(const RingDescriptor& ring,
                               std::vector<FreeComplex> gens) {
  require_supported(ring);
  ClosedLocus datum = locus_empty(ring);
  for (const FreeComplex& g : gens) {
    require_same_ring(ring, g.ring);
    datum = locus_union(datum, support_of_complex(g));
  }
  return ThickSubcat{ring, std::move(gens), std::move(datum)};
}

bool member_thick(const ThickSubcat& t, const FreeComplex& x) {
  require_supported(t.ring);
  require_same_ring(t.ring, x.ring);
  return locus_contained(support_of_complex(x), t.datum);
}

bool thick_eq(const ThickSubcat& a, const ThickSubcat& b) {
  require_same_ring(a.ring, b.ring);
  return locus_eq(a.datum, b.datum);
}

}  // namespace widecat
