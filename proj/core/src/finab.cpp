#include "widecat/finab.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <string>

#include "widecat/errors.hpp"

namespace widecat {

namespace {

constexpr int kMaxTableOrder = 256;

Int z_gcd(const Int& a, const Int& b) {
  Int c;
  mpz_gcd(c.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return c;
}

long long_gcd(long a, long b) { return std::gcd(a, b); }

// --- element tables ---------------------------------------------------------

// Explicit arithmetic for one group of order <= 256: elements are indexed
// mixed-radix over the parts, with addition tables and, per prime power
// p^j, the multiplication-by-p^j table and the mask of elements it kills.
using Mask = std::array<uint64_t, 4>;

bool mask_test(const Mask& m, int i) {
  return (m[static_cast<size_t>(i >> 6)] >> (i & 63)) & 1;
}

void mask_set(Mask& m, int i) {
  m[static_cast<size_t>(i >> 6)] |= uint64_t{1} << (i & 63);
}

int mask_count(const Mask& m) {
  int c = 0;
  for (uint64_t w : m) c += __builtin_popcountll(w);
  return c;
}

Mask mask_and(const Mask& a, const Mask& b) {
  Mask out{};
  for (size_t i = 0; i < out.size(); ++i) out[i] = a[i] & b[i];
  return out;
}

struct PrimeLayer {
  long p = 0;
  int maxj = 0;                    // largest j with p^j <= exponent
  std::vector<Mask> kill;          // kill[j] = { x : p^j * x = 0 }, j = 0..maxj
  std::vector<std::vector<int>> mul;  // mul[j][x] = p^j * x
};

struct GroupTable {
  std::vector<long> parts;
  int r = 0;
  int n = 1;
  std::vector<long> stride;
  std::vector<int> add;  // n * n
  std::vector<PrimeLayer> primes;

  explicit GroupTable(const FinAbGroup& g);

  int sum(int x, int y) const { return add[static_cast<size_t>(x) * n + y]; }
  long comp(int idx, int i) const { return (idx / stride[i]) % parts[i]; }
};

GroupTable::GroupTable(const FinAbGroup& g) : parts(g.parts) {
  r = static_cast<int>(parts.size());
  stride.assign(static_cast<size_t>(r), 1);
  for (int i = 1; i < r; ++i) stride[i] = stride[i - 1] * parts[i - 1];
  long order = fa_order(g);
  if (order > kMaxTableOrder) {
    throw DomainError("bound-exceeded",
                      "subgroup enumeration is capped at group order 256");
  }
  n = static_cast<int>(order);

  add.assign(static_cast<size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      long idx = 0;
      for (int i = 0; i < r; ++i) {
        idx += ((comp(x, i) + comp(y, i)) % parts[i]) * stride[i];
      }
      add[static_cast<size_t>(x) * n + y] = static_cast<int>(idx);
    }
  }

  long expo = fa_exponent(g);
  std::set<long> ps;
  for (long q : parts) {
    long p = q;
    // parts are prime powers; find the prime by trial division.
    for (long d = 2; d * d <= q; ++d) {
      if (q % d == 0) {
        p = d;
        break;
      }
    }
    ps.insert(p);
  }
  for (long p : ps) {
    PrimeLayer layer;
    layer.p = p;
    long pj = 1;
    while (pj <= expo) {
      std::vector<int> mul(static_cast<size_t>(n));
      Mask kill{};
      for (int x = 0; x < n; ++x) {
        long idx = 0;
        for (int i = 0; i < r; ++i) {
          idx += ((comp(x, i) * (pj % parts[i])) % parts[i]) * stride[i];
        }
        mul[static_cast<size_t>(x)] = static_cast<int>(idx);
        if (idx == 0) mask_set(kill, x);
      }
      layer.mul.push_back(std::move(mul));
      layer.kill.push_back(kill);
      if (pj > expo / p) break;
      pj *= p;
    }
    layer.maxj = static_cast<int>(layer.kill.size()) - 1;
    primes.push_back(std::move(layer));
  }
}

// The subgroup generated by (the elements of) mask S and one further
// element g: the union of the cosets S + k*g.
Mask close_with(const GroupTable& t, const Mask& s, int g,
                const std::vector<int>& s_elems) {
  Mask out = s;
  std::vector<int> base = s_elems;
  int cur = g;
  while (!mask_test(out, cur)) {
    for (int e : base) mask_set(out, t.sum(e, cur));
    cur = t.sum(cur, g);
  }
  return out;
}

std::vector<int> mask_elements(const Mask& m, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if (mask_test(m, i)) out.push_back(i);
  }
  return out;
}

std::set<Mask> all_subgroup_masks(const GroupTable& t) {
  Mask triv{};
  mask_set(triv, 0);
  std::set<Mask> seen{triv};
  std::vector<Mask> frontier{triv};
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (const Mask& s : frontier) {
      std::vector<int> elems = mask_elements(s, t.n);
      for (int g = 1; g < t.n; ++g) {
        if (mask_test(s, g)) continue;
        Mask bigger = close_with(t, s, g, elems);
        if (seen.insert(bigger).second) next.push_back(bigger);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

// Reconstructs the p-part partition from the order statistics
// m_j = #{ x : p^j x = 0 } = p^(c_j): the conjugate partition has
// c_j - c_(j-1) parts of size >= j.
void append_parts_from_counts(long p, const std::vector<int>& counts,
                              std::vector<long>& parts) {
  std::vector<int> c;  // c[j] with counts[j] = p^(c[j])
  for (int m : counts) {
    int e = 0;
    long v = 1;
    while (v < m) {
      v *= p;
      ++e;
    }
    c.push_back(e);
  }
  std::vector<int> d;  // d[j] = parts of size >= j, j >= 1
  for (size_t j = 1; j < c.size(); ++j) d.push_back(c[j] - c[j - 1]);
  if (d.empty()) return;
  for (int i = 1; i <= d[0]; ++i) {
    int lambda = 0;
    for (size_t j = 0; j < d.size(); ++j) {
      if (d[j] >= i) lambda = static_cast<int>(j) + 1;
    }
    long q = 1;
    for (int e = 0; e < lambda; ++e) q *= p;
    parts.push_back(q);
  }
}

FinAbGroup subgroup_type_of(const GroupTable& t, const Mask& s) {
  std::vector<long> parts;
  for (const PrimeLayer& layer : t.primes) {
    std::vector<int> counts;
    for (const Mask& kill : layer.kill) {
      counts.push_back(mask_count(mask_and(s, kill)));
    }
    append_parts_from_counts(layer.p, counts, parts);
  }
  std::sort(parts.begin(), parts.end());
  return FinAbGroup{std::move(parts)};
}

FinAbGroup quotient_type_of(const GroupTable& t, const Mask& s) {
  int size = mask_count(s);
  std::vector<long> parts;
  for (const PrimeLayer& layer : t.primes) {
    std::vector<int> counts;
    for (const std::vector<int>& mul : layer.mul) {
      int hits = 0;
      for (int x = 0; x < t.n; ++x) {
        if (mask_test(s, mul[static_cast<size_t>(x)])) ++hits;
      }
      counts.push_back(hits / size);
    }
    append_parts_from_counts(layer.p, counts, parts);
  }
  std::sort(parts.begin(), parts.end());
  return FinAbGroup{std::move(parts)};
}

struct PairData {
  std::vector<std::pair<FinAbGroup, FinAbGroup>> pairs;
};

const PairData& pair_data(const FinAbGroup& g) {
  static std::map<FinAbGroup, PairData> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(g);
  if (it != cache.end()) return it->second;

  GroupTable t(g);
  std::set<std::pair<FinAbGroup, FinAbGroup>> found;
  for (const Mask& s : all_subgroup_masks(t)) {
    found.emplace(subgroup_type_of(t, s), quotient_type_of(t, s));
  }
  PairData data;
  data.pairs.assign(found.begin(), found.end());
  return cache.emplace(g, std::move(data)).first->second;
}

}  // namespace

FinAbGroup make_fin_ab(const std::vector<long>& cyclic_orders) {
  std::vector<long> parts;
  for (long v : cyclic_orders) {
    if (v < 1) {
      throw DomainError("invalid-module",
                        "cyclic orders of a finite group are positive");
    }
    if (v == 1) continue;
    for (const auto& [p, e] : factor_int(Int(v))) {
      long q = 1;
      for (int i = 0; i < e; ++i) q *= p.get_si();
      parts.push_back(q);
    }
  }
  std::sort(parts.begin(), parts.end());
  return FinAbGroup{std::move(parts)};
}

long fa_order(const FinAbGroup& g) {
  long n = 1;
  for (long p : g.parts) n *= p;
  return n;
}

long fa_exponent(const FinAbGroup& g) {
  long e = 1;
  for (long p : g.parts) e = e / long_gcd(e, p) * p;
  return e;
}

std::vector<FinAbGroup> enumerate_groups(long bound, long exponent_divides) {
  if (bound < 1 || bound > 1 << 20) {
    throw DomainError("bound-exceeded", "group enumeration bound out of range");
  }
  std::vector<FinAbGroup> out;
  for (long n = 1; n <= bound; ++n) {
    // Partitions of each prime's exponent give the p-parts independently.
    std::vector<std::vector<std::vector<long>>> per_prime;
    bool feasible = true;
    for (const auto& [pz, e] : factor_int(Int(n))) {
      long p = pz.get_si();
      int cap = e;
      if (exponent_divides != 0) {
        if (exponent_divides % p != 0) {
          feasible = false;
          break;
        }
        long m = exponent_divides;
        cap = 0;
        while (m % p == 0) {
          m /= p;
          ++cap;
        }
      }
      // All partitions of e with parts <= cap, as prime-power lists.
      std::vector<std::vector<long>> lists;
      std::vector<int> cur;
      auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
          std::vector<long> qs;
          for (int part : cur) {
            long q = 1;
            for (int i = 0; i < part; ++i) q *= p;
            qs.push_back(q);
          }
          lists.push_back(std::move(qs));
          return;
        }
        for (int part = std::min(rest, maxpart); part >= 1; --part) {
          cur.push_back(part);
          self(self, rest - part, part);
          cur.pop_back();
        }
      };
      rec(rec, e, cap);
      if (lists.empty()) {
        feasible = false;
        break;
      }
      per_prime.push_back(std::move(lists));
    }
    if (!feasible) continue;

    std::vector<long> acc;
    auto combine = [&](auto&& self, size_t i) -> void {
      if (i == per_prime.size()) {
        std::vector<long> parts = acc;
        std::sort(parts.begin(), parts.end());
        out.push_back(FinAbGroup{std::move(parts)});
        return;
      }
      for (const std::vector<long>& qs : per_prime[i]) {
        size_t before = acc.size();
        acc.insert(acc.end(), qs.begin(), qs.end());
        self(self, i + 1);
        acc.resize(before);
      }
    };
    combine(combine, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

GroupHom make_group_hom(FinAbGroup dom, FinAbGroup cod, IntMatrix mat) {
  int r = static_cast<int>(dom.parts.size());
  int s = static_cast<int>(cod.parts.size());
  if (mat.rows != s || mat.cols != r) {
    throw DomainError("dimension-mismatch",
                      "hom matrix must be |cod parts| x |dom parts|");
  }
  for (int j = 0; j < s; ++j) {
    for (int i = 0; i < r; ++i) {
      Int b = cod.parts[static_cast<size_t>(j)];
      Int v = mat.at(j, i) % b;
      if (v < 0) v += b;
      Int step = b / z_gcd(Int(dom.parts[static_cast<size_t>(i)]), b);
      if (v % step != 0) {
        throw DomainError("invalid-map",
                          "generator image order does not divide its source");
      }
      mat.at(j, i) = v;
    }
  }
  return GroupHom{std::move(dom), std::move(cod), std::move(mat)};
}

Int hom_count(const FinAbGroup& a, const FinAbGroup& b) {
  Int c = 1;
  for (long ai : a.parts) {
    for (long bj : b.parts) c *= long_gcd(ai, bj);
  }
  return c;
}

std::vector<GroupHom> all_homs(const FinAbGroup& a, const FinAbGroup& b,
                               long max_homs) {
  Int count = hom_count(a, b);
  if (count > max_homs) {
    throw DomainError("hom-bound-exceeded",
                      "requested enumeration of " + count.get_str() + " maps");
  }
  int r = static_cast<int>(a.parts.size());
  int s = static_cast<int>(b.parts.size());
  // Odometer over the multiplier of each entry, row-major, last entry
  // fastest: output is ascending in lexicographic matrix order.
  std::vector<long> radix(static_cast<size_t>(r) * s, 1);
  std::vector<long> step(static_cast<size_t>(r) * s, 0);
  for (int j = 0; j < s; ++j) {
    for (int i = 0; i < r; ++i) {
      long g = long_gcd(a.parts[static_cast<size_t>(i)],
                        b.parts[static_cast<size_t>(j)]);
      radix[static_cast<size_t>(j) * r + i] = g;
      step[static_cast<size_t>(j) * r + i] = b.parts[static_cast<size_t>(j)] / g;
    }
  }
  std::vector<long> digit(radix.size(), 0);
  std::vector<GroupHom> out;
  for (;;) {
    IntMatrix m(s, r);
    for (int j = 0; j < s; ++j) {
      for (int i = 0; i < r; ++i) {
        size_t t = static_cast<size_t>(j) * r + i;
        m.at(j, i) = digit[t] * step[t];
      }
    }
    out.push_back(GroupHom{a, b, std::move(m)});
    int pos = static_cast<int>(digit.size()) - 1;
    while (pos >= 0) {
      if (++digit[static_cast<size_t>(pos)] < radix[static_cast<size_t>(pos)]) {
        break;
      }
      digit[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

namespace {

IntMatrix diag_of(const std::vector<long>& parts) {
  int r = static_cast<int>(parts.size());
  IntMatrix d(r, r);
  for (int i = 0; i < r; ++i) d.at(i, i) = parts[static_cast<size_t>(i)];
  return d;
}

IntMatrix lattice_kernel(const IntMatrix& a) {
  if (a.rows == 0) return IntMatrix::identity(a.cols);
  return kernel_basis_z(a);
}

IntMatrix top_rows(const IntMatrix& m, int rows) {
  IntMatrix out(rows, m.cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < m.cols; ++j) out.at(i, j) = m.at(i, j);
  return out;
}

// Parts of coker(m) read off the Smith diagonal; a zero diagonal or a
// short diagonal signals a free summand.
FinAbGroup parts_of_full_rank_coker(const IntMatrix& m, int rank) {
  std::vector<long> orders;
  SmithDecomposition snf = smith_normal_form(m);
  std::vector<Int> diag = snf.diagonal();
  if (static_cast<int>(diag.size()) < rank) {
    throw DomainError("invalid-module", "the module is not finite");
  }
  for (int i = 0; i < rank; ++i) {
    const Int& d = diag[static_cast<size_t>(i)];
    if (d == 0) {
      throw DomainError("invalid-module", "the module is not finite");
    }
    if (d != 1) orders.push_back(d.get_si());
  }
  return make_fin_ab(orders);
}

}  // namespace

FinAbGroup kernel_of(const GroupHom& f) {
  int r = static_cast<int>(f.dom.parts.size());
  // Pull the kernel back to the presentation lattice: x in Z^r maps to
  // zero iff F x lies in the codomain's relation lattice.
  IntMatrix gens = top_rows(
      lattice_kernel(mat_hcat(f.mat, diag_of(f.cod.parts))), r);
  // Relations among those generators, including the domain's own.
  IntMatrix rel = top_rows(
      lattice_kernel(mat_hcat(gens, diag_of(f.dom.parts))), gens.cols);
  return parts_of_full_rank_coker(rel, gens.cols);
}

FinAbGroup cokernel_of(const GroupHom& f) {
  int s = static_cast<int>(f.cod.parts.size());
  return parts_of_full_rank_coker(mat_hcat(f.mat, diag_of(f.cod.parts)), s);
}

std::vector<FinAbGroup> all_extensions(const FinAbGroup& quot,
                                       const FinAbGroup& sub, long bound) {
  long order = fa_order(quot) * fa_order(sub);
  if (order > bound) {
    throw DomainError("bound-exceeded",
                      "extension order exceeds the requested bound");
  }
  std::vector<FinAbGroup> out;
  for (const FinAbGroup& e : enumerate_groups(order)) {
    if (fa_order(e) != order) continue;
    const auto& pairs = pair_data(e).pairs;
    if (std::binary_search(pairs.begin(), pairs.end(),
                           std::make_pair(sub, quot))) {
      out.push_back(e);
    }
  }
  return out;
}

const std::vector<std::pair<FinAbGroup, FinAbGroup>>& sub_quot_pairs(
    const FinAbGroup& g) {
  return pair_data(g).pairs;
}

std::vector<FinAbGroup> subgroup_types(const FinAbGroup& g) {
  std::set<FinAbGroup> subs;
  for (const auto& [s, q] : sub_quot_pairs(g)) subs.insert(s);
  return std::vector<FinAbGroup>(subs.begin(), subs.end());
}

std::vector<FinAbGroup> quotient_types(const FinAbGroup& g) {
  std::set<FinAbGroup> quots;
  for (const auto& [s, q] : sub_quot_pairs(g)) quots.insert(q);
  return std::vector<FinAbGroup>(quots.begin(), quots.end());
}

FPModule fin_ab_module(const RingDescriptor& ring, const FinAbGroup& g) {
  if (ring.kind != RingKind::integer) {
    throw DomainError("unsupported-ring",
                      "finite abelian groups live over ZZ or ZZ/n");
  }
  if (ring.int_modulus != 0 && ring.int_modulus % fa_exponent(g) != 0) {
    throw DomainError("invalid-module",
                      "the group's exponent does not divide the ring modulus");
  }
  return make_fp_module_z(ring, diag_of(g.parts));
}

FinAbGroup fin_ab_of_module(const FPModule& m) {
  if (m.ring.kind != RingKind::integer) {
    throw DomainError("unsupported-ring",
                      "isomorphism typing works over ZZ or ZZ/n");
  }
  const IntMatrix& rel = std::get<IntMatrix>(m.rel);
  IntMatrix work = rel;
  if (m.ring.int_modulus != 0) {
    IntMatrix nid(m.ngens, m.ngens);
    for (int i = 0; i < m.ngens; ++i) nid.at(i, i) = m.ring.int_modulus;
    work = mat_hcat(rel, nid);
  }
  return parts_of_full_rank_coker(work, m.ngens);
}

std::string fin_ab_name(const FinAbGroup& g) {
  if (g.parts.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < g.parts.size(); ++i) {
    if (i) out += "+";
    out += "Z/" + std::to_string(g.parts[i]);
  }
  return out;
}

}  // namespace widecat
