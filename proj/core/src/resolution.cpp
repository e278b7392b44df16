#include "widecat/resolution.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "widecat/errors.hpp"
#include "widecat/ideal.hpp"

namespace widecat {

namespace {

// Degree of a homogeneous polynomial, or nullopt if p is zero or mixes
// degrees.
std::optional<int> homogeneous_degree(const Poly& p) {
  if (p.is_zero()) return std::nullopt;
  int d = p.terms().front().m.total_degree();
  for (const Term& t : p.terms()) {
    if (t.m.total_degree() != d) return std::nullopt;
  }
  return d;
}

bool is_homogeneous_or_zero(const Poly& p) {
  return p.is_zero() || homogeneous_degree(p).has_value();
}

// Column degree of a homogeneous presentation column with the given row
// (generator) degrees, or nullopt for a zero column.  Throws when the
// column is not homogeneous.
std::optional<int> column_degree(const PolyMatrix& m, int col,
                                 const std::vector<int>& row_degrees) {
  std::optional<int> deg;
  for (int i = 0; i < m.rows; ++i) {
    const Poly& e = m.at(i, col);
    if (e.is_zero()) continue;
    auto ed = homogeneous_degree(e);
    if (!ed) {
      throw DomainError("invalid-module", "presentation entry is not homogeneous");
    }
    int total = *ed + row_degrees[static_cast<size_t>(i)];
    if (deg && *deg != total) {
      throw DomainError("invalid-module", "presentation column mixes degrees");
    }
    deg = total;
  }
  return deg;
}

// Decides whether the presentation is graded for the given (or default
// all-zero) generator degrees, without throwing.
bool is_graded(const RingDescriptor& ring, const PolyMatrix& rel,
               const std::vector<int>& degrees) {
  for (const Poly& g : ring.modulus) {
    if (!is_homogeneous_or_zero(g)) return false;
  }
  for (int j = 0; j < rel.cols; ++j) {
    std::optional<int> deg;
    for (int i = 0; i < rel.rows; ++i) {
      const Poly& e = rel.at(i, j);
      if (e.is_zero()) continue;
      auto ed = homogeneous_degree(e);
      if (!ed) return false;
      int total = *ed + degrees[static_cast<size_t>(i)];
      if (deg && *deg != total) return false;
      deg = total;
    }
  }
  return true;
}

bool is_constant_unit(const Poly& p) {
  return p.terms().size() == 1 && p.leading_monomial().is_constant();
}

PolyMatrix single_column(const PolyMatrix& m, int j) {
  PolyMatrix col(m.rows, 1);
  for (int i = 0; i < m.rows; ++i) col.at(i, 0) = m.at(i, j);
  return col;
}

// Strikes invertible-entry pivots from a presentation: whenever some
// entry is a nonzero constant, the corresponding generator is expressed
// by the others, so the pivot row and column can be cleared and removed
// without changing the cokernel (or the grading).
void strip_unit_pivots(const RingDescriptor& ring, PolyMatrix& rel,
                       std::vector<int>& degrees) {
  for (;;) {
    int pi = -1;
    int pj = -1;
    for (int i = 0; i < rel.rows && pi < 0; ++i) {
      for (int j = 0; j < rel.cols; ++j) {
        if (is_constant_unit(rel.at(i, j))) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi < 0) return;

    const Coeff inv = rel.at(pi, pj).leading_coeff().inverse();

    // Clear the pivot row by column operations, then the pivot column by
    // row operations; both preserve the cokernel up to isomorphism.
    for (int l = 0; l < rel.cols; ++l) {
      if (l == pj || rel.at(pi, l).is_zero()) continue;
      const Poly q = poly_scale(rel.at(pi, l), inv);
      for (int i = 0; i < rel.rows; ++i) {
        rel.at(i, l) = ring_normal_form(
            poly_sub(rel.at(i, l), poly_mul(q, rel.at(i, pj), ring.order),
                     ring.order),
            ring);
      }
    }
    for (int l = 0; l < rel.rows; ++l) {
      if (l == pi || rel.at(l, pj).is_zero()) continue;
      const Poly q = poly_scale(rel.at(l, pj), inv);
      for (int j = 0; j < rel.cols; ++j) {
        rel.at(l, j) = ring_normal_form(
            poly_sub(rel.at(l, j), poly_mul(q, rel.at(pi, j), ring.order),
                     ring.order),
            ring);
      }
    }

    PolyMatrix next(rel.rows - 1, rel.cols - 1);
    for (int i = 0, ii = 0; i < rel.rows; ++i) {
      if (i == pi) continue;
      for (int j = 0, jj = 0; j < rel.cols; ++j) {
        if (j == pj) continue;
        next.at(ii, jj) = rel.at(i, j);
        ++jj;
      }
      ++ii;
    }
    degrees.erase(degrees.begin() + pi);
    rel = std::move(next);
  }
}

struct PrunedColumns {
  PolyMatrix mat;
  std::vector<int> degrees;  // column degrees (meaningful on graded runs)
};

// Reduces a generating set of columns to an irredundant one.  Candidates
// are taken in ascending column degree (stable on ties); a candidate is
// dropped when it already lies in the span of the kept columns.  For
// graded input this yields a minimal generating set.
PrunedColumns prune_generating_columns(const RingDescriptor& ring,
                                       const PolyMatrix& cand,
                                       const std::vector<int>& row_degrees,
                                       bool graded) {
  std::vector<int> order(static_cast<size_t>(cand.cols));
  for (size_t j = 0; j < order.size(); ++j) order[j] = static_cast<int>(j);

  std::vector<int> degs(static_cast<size_t>(cand.cols), 0);
  if (graded) {
    for (int j = 0; j < cand.cols; ++j) {
      auto d = column_degree(cand, j, row_degrees);
      degs[static_cast<size_t>(j)] = d ? *d : 0;
    }
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return degs[static_cast<size_t>(a)] < degs[static_cast<size_t>(b)];
    });
  }

  std::vector<PolyMatrix> kept;  // each a single column
  std::vector<int> kept_degrees;
  for (int j : order) {
    PolyMatrix col = single_column(cand, j);
    bool zero = true;
    for (int i = 0; i < col.rows; ++i) {
      if (!col.at(i, 0).is_zero()) zero = false;
    }
    if (zero) continue;
    PolyMatrix basis(cand.rows, static_cast<int>(kept.size()));
    for (size_t k = 0; k < kept.size(); ++k) {
      for (int i = 0; i < cand.rows; ++i) {
        basis.at(i, static_cast<int>(k)) = kept[k].at(i, 0);
      }
    }
    if (!express_in_span(basis, col, ring).has_value()) {
      kept.push_back(col);
      kept_degrees.push_back(degs[static_cast<size_t>(j)]);
    }
  }

  PrunedColumns out{PolyMatrix(cand.rows, static_cast<int>(kept.size())), {}};
  for (size_t k = 0; k < kept.size(); ++k) {
    for (int i = 0; i < cand.rows; ++i) {
      out.mat.at(i, static_cast<int>(k)) = kept[k].at(i, 0);
    }
  }
  out.degrees = std::move(kept_degrees);
  return out;
}

}  // namespace

FreeResolution minimal_free_resolution(const FPModule& m, int max_length) {
  require_supported(m.ring);
  if (m.ring.kind != RingKind::poly) {
    throw DomainError("unsupported-ring",
                      "free resolutions are implemented over polynomial rings");
  }
  if (max_length < 0) {
    throw DomainError("pd-bound-exceeded", "resolution length bound is negative");
  }

  PolyMatrix rel = std::get<PolyMatrix>(m.rel);
  std::vector<int> degrees =
      m.degrees ? *m.degrees : std::vector<int>(static_cast<size_t>(m.ngens), 0);
  const bool graded = is_graded(m.ring, rel, degrees);

  strip_unit_pivots(m.ring, rel, degrees);

  FreeResolution res;
  res.ring = m.ring;
  res.minimal = graded;
  res.ranks.push_back(rel.rows);
  res.degrees.push_back(degrees);

  PolyMatrix current = rel;
  std::vector<int> current_degrees = degrees;
  for (;;) {
    PrunedColumns gens =
        prune_generating_columns(m.ring, current, current_degrees, graded);
    if (gens.mat.cols == 0) break;  // the previous module was free

    if (static_cast<int>(res.ranks.size()) > max_length) {
      throw DomainError("pd-bound-exceeded",
                        "resolution exceeds the length bound");
    }
    res.maps.push_back(gens.mat);
    res.ranks.push_back(gens.mat.cols);
    res.degrees.push_back(gens.degrees);

    current = syzygy_module(gens.mat, m.ring);
    current_degrees = gens.degrees;
  }
  return res;
}

int projective_dimension(const FPModule& m, int max_length) {
  FreeResolution res = minimal_free_resolution(m, max_length);
  if (!res.minimal) {
    throw DomainError("invalid-module",
                      "projective dimension requires a graded presentation");
  }
  return static_cast<int>(res.ranks.size()) - 1;
}

FPModule simplified_presentation(const FPModule& m) {
  const auto* pm = std::get_if<PolyMatrix>(&m.rel);
  if (pm == nullptr) return m;

  PolyMatrix rel = *pm;
  std::vector<int> degrees(rel.rows, 0);
  strip_unit_pivots(m.ring, rel, degrees);
  if (rel.rows == 0) return fp_zero(m.ring);

  std::vector<PolyMatrix> keep;
  for (int j = 0; j < rel.cols; ++j) {
    bool zero = true;
    for (int i = 0; i < rel.rows && zero; ++i) zero = rel.at(i, j).is_zero();
    if (!zero) keep.push_back(single_column(rel, j));
  }
  PolyMatrix out(rel.rows, static_cast<int>(keep.size()));
  for (int j = 0; j < out.cols; ++j) {
    for (int i = 0; i < out.rows; ++i) out.at(i, j) = keep[j].at(i, 0);
  }
  if (out.rows == 1) {
    std::vector<Poly> row;
    for (int j = 0; j < out.cols; ++j) row.push_back(out.at(0, j));
    IdealGB ideal = groebner_basis(m.ring, row);
    if (ideal.is_unit()) return fp_zero(m.ring);
    return fp_cyclic(ideal);
  }
  return make_fp_module(m.ring, std::move(out));
}

}  // namespace widecat
