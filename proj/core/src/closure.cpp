#include "widecat/closure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "widecat/errors.hpp"

namespace widecat {

namespace {

std::set<long> prime_set(long n) {
  std::set<long> out;
  for (const auto& [p, e] : factor_int(Int(n))) out.insert(p.get_si());
  return out;
}

// Image type of a hom: Z^r modulo the lattice of generator combinations
// that land in the codomain's relations.
FinAbGroup image_of(const GroupHom& f) {
  int r = static_cast<int>(f.dom.parts.size());
  IntMatrix bcols(static_cast<int>(f.cod.parts.size()),
                  static_cast<int>(f.cod.parts.size()));
  for (int i = 0; i < bcols.rows; ++i)
    bcols.at(i, i) = f.cod.parts[static_cast<size_t>(i)];
  IntMatrix aug = mat_hcat(f.mat, bcols);
  IntMatrix ker = aug.rows == 0 ? IntMatrix::identity(aug.cols)
                                : kernel_basis_z(aug);
  IntMatrix lattice(r, ker.cols);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < ker.cols; ++j) lattice.at(i, j) = ker.at(i, j);

  std::vector<Int> diag = smith_normal_form(lattice).diagonal();
  std::vector<long> orders;
  for (int i = 0; i < r; ++i) {
    Int d = i < static_cast<int>(diag.size()) ? diag[static_cast<size_t>(i)]
                                              : Int(0);
    if (d == 0) {
      throw DomainError("invalid-module", "image of a finite map is finite");
    }
    if (d != 1) orders.push_back(d.get_si());
  }
  return make_fin_ab(orders);
}

struct TypeLookup {
  std::map<FinAbGroup, std::set<FinAbGroup>> subs;
  std::map<FinAbGroup, std::set<FinAbGroup>> quots;

  const std::set<FinAbGroup>& sub_types(const FinAbGroup& g) {
    auto it = subs.find(g);
    if (it == subs.end()) {
      std::set<FinAbGroup> s;
      for (const auto& [sub, quot] : sub_quot_pairs(g)) s.insert(sub);
      it = subs.emplace(g, std::move(s)).first;
    }
    return it->second;
  }

  const std::set<FinAbGroup>& quot_types(const FinAbGroup& g) {
    auto it = quots.find(g);
    if (it == quots.end()) {
      std::set<FinAbGroup> s;
      for (const auto& [sub, quot] : sub_quot_pairs(g)) s.insert(quot);
      it = quots.emplace(g, std::move(s)).first;
    }
    return it->second;
  }
};

}  // namespace

ClosureReport closure_tower(const std::vector<FinAbGroup>& gens, long modulus,
                            long bound) {
  if (modulus < 0 || modulus == 1) {
    throw DomainError("unsupported-ring", "modulus must be 0 (none) or >= 2");
  }
  if (bound < 1 || bound > 256) {
    throw DomainError("bound-exceeded", "tower bound must lie in [1, 256]");
  }
  ClosureReport rep;
  rep.modulus = modulus;
  rep.bound = bound;
  for (const FinAbGroup& g : gens) {
    if (fa_order(g) > bound) {
      throw DomainError("bound-exceeded", "generator order exceeds the bound");
    }
    if (modulus != 0 && modulus % fa_exponent(g) != 0) {
      throw DomainError("invalid-module",
                        "generator is not a module over ZZ/modulus");
    }
    rep.generators.push_back(g);
  }
  std::sort(rep.generators.begin(), rep.generators.end());
  rep.generators.erase(
      std::unique(rep.generators.begin(), rep.generators.end()),
      rep.generators.end());

  const std::vector<FinAbGroup> universe = enumerate_groups(bound, modulus);
  TypeLookup types;

  std::set<FinAbGroup> cur;
  std::map<FinAbGroup, ClosureWitness> how;
  auto admit = [&](const FinAbGroup& g, const ClosureWitness& w) {
    if (cur.insert(g).second) {
      how.emplace(g, w);
      return true;
    }
    return false;
  };

  admit(FinAbGroup{}, {FinAbGroup{}, 0, WitnessKind::generator, {}, {}});
  for (const FinAbGroup& g : rep.generators) {
    admit(g, {g, 0, WitnessKind::generator, g, g});
  }

  // D0: close under kernels and cokernels of all maps between members.  A
  // subgroup S of A is a kernel into B exactly when A/S embeds in B; a
  // quotient B/T is a cokernel from A exactly when T is also a quotient
  // of A.
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<FinAbGroup> snapshot(cur.begin(), cur.end());
    for (const FinAbGroup& a : snapshot) {
      for (const FinAbGroup& b : snapshot) {
        for (const auto& [s, q] : sub_quot_pairs(a)) {
          if (types.sub_types(b).count(q) &&
              admit(s, {s, 0, WitnessKind::kernel, a, b})) {
            changed = true;
          }
        }
        for (const auto& [t, q] : sub_quot_pairs(b)) {
          if (types.quot_types(a).count(t) &&
              admit(q, {q, 0, WitnessKind::cokernel, a, b})) {
            changed = true;
          }
        }
      }
    }
  }
  rep.tower.emplace_back(cur.begin(), cur.end());

  // Extension layers until nothing new appears.
  for (;;) {
    int level = static_cast<int>(rep.tower.size());
    std::vector<std::pair<FinAbGroup, ClosureWitness>> found;
    for (const FinAbGroup& e : universe) {
      if (cur.count(e)) continue;
      for (const auto& [s, q] : sub_quot_pairs(e)) {
        if (cur.count(s) && cur.count(q)) {
          found.push_back({e, {e, level, WitnessKind::extension, s, q}});
          break;
        }
      }
    }
    if (found.empty()) {
      rep.stabilized = true;
      break;
    }
    for (auto& [e, w] : found) admit(e, w);
    rep.tower.emplace_back(cur.begin(), cur.end());
  }

  std::set<long> gen_primes;
  for (const FinAbGroup& g : rep.generators) {
    for (long p : prime_set(fa_order(g))) gen_primes.insert(p);
  }
  for (const FinAbGroup& g : universe) {
    bool ok = true;
    for (long p : prime_set(fa_order(g))) {
      if (!gen_primes.count(p)) ok = false;
    }
    if (ok) rep.predicted.push_back(g);
  }

  const std::vector<FinAbGroup>& fin = rep.tower.back();
  std::set_difference(rep.predicted.begin(), rep.predicted.end(), fin.begin(),
                      fin.end(), std::back_inserter(rep.missing));
  std::set_difference(fin.begin(), fin.end(), rep.predicted.begin(),
                      rep.predicted.end(), std::back_inserter(rep.extra));
  rep.equal = rep.missing.empty() && rep.extra.empty();

  for (const FinAbGroup& g : fin) rep.witnesses.push_back(how.at(g));
  return rep;
}

bool verify_witnesses(const ClosureReport& r) {
  if (r.tower.empty()) return false;
  std::vector<std::set<FinAbGroup>> layers;
  for (const auto& t : r.tower) layers.emplace_back(t.begin(), t.end());
  std::set<FinAbGroup> gens(r.generators.begin(), r.generators.end());
  TypeLookup types;

  if (r.witnesses.size() != r.tower.back().size()) return false;
  for (const ClosureWitness& w : r.witnesses) {
    if (w.level < 0 || w.level >= static_cast<int>(layers.size())) return false;
    if (!layers[static_cast<size_t>(w.level)].count(w.member)) return false;
    switch (w.kind) {
      case WitnessKind::generator:
        if (!w.member.parts.empty() && !gens.count(w.member)) return false;
        break;
      case WitnessKind::kernel: {
        if (!layers[0].count(w.x) || !layers[0].count(w.y)) return false;
        bool found = false;
        for (const auto& [s, q] : sub_quot_pairs(w.x)) {
          if (s == w.member && types.sub_types(w.y).count(q)) found = true;
        }
        if (!found) return false;
        break;
      }
      case WitnessKind::cokernel: {
        if (!layers[0].count(w.x) || !layers[0].count(w.y)) return false;
        bool found = false;
        for (const auto& [t, q] : sub_quot_pairs(w.y)) {
          if (q == w.member && types.quot_types(w.x).count(t)) found = true;
        }
        if (!found) return false;
        break;
      }
      case WitnessKind::extension: {
        if (w.level < 1) return false;
        const auto& prev = layers[static_cast<size_t>(w.level) - 1];
        if (!prev.count(w.x) || !prev.count(w.y)) return false;
        const auto& pairs = sub_quot_pairs(w.member);
        if (!std::binary_search(pairs.begin(), pairs.end(),
                                std::make_pair(w.x, w.y))) {
          return false;
        }
        break;
      }
    }
  }
  return true;
}

SnakeReport snake_closure_checks(const ClosureReport& r, int sample_size,
                                 unsigned seed) {
  SnakeReport out;
  if (r.tower.empty()) return out;
  std::mt19937 rng(seed);

  // Check the kernel/cokernel-closed layers: D0 by construction, and the
  // stabilized top (closed because one extension step after a fixpoint
  // adds nothing).
  std::vector<const std::vector<FinAbGroup>*> layers{&r.tower.front(),
                                                     &r.tower.back()};
  for (int i = 0; i < sample_size; ++i) {
    const auto& layer = *layers[rng() % layers.size()];
    if (layer.empty()) continue;
    const FinAbGroup& a = layer[rng() % layer.size()];
    const FinAbGroup& b = layer[rng() % layer.size()];

    int rr = static_cast<int>(a.parts.size());
    int s = static_cast<int>(b.parts.size());
    IntMatrix m(s, rr);
    for (int j = 0; j < s; ++j) {
      for (int col = 0; col < rr; ++col) {
        long g = std::gcd(a.parts[static_cast<size_t>(col)],
                          b.parts[static_cast<size_t>(j)]);
        long mult = static_cast<long>(rng() % static_cast<unsigned long>(g));
        m.at(j, col) = mult * (b.parts[static_cast<size_t>(j)] / g);
      }
    }
    GroupHom f = make_group_hom(a, b, std::move(m));
    FinAbGroup ker = kernel_of(f);
    FinAbGroup coker = cokernel_of(f);
    FinAbGroup img = image_of(f);

    std::set<FinAbGroup> members(layer.begin(), layer.end());
    ++out.kernel_checks;
    if (!members.count(ker)) ++out.violations;
    ++out.cokernel_checks;
    if (!members.count(coker)) ++out.violations;
    ++out.image_checks;
    if (!members.count(img)) ++out.violations;
    ++out.order_identity_checks;
    if (fa_order(ker) * fa_order(img) != fa_order(a) ||
        fa_order(img) * fa_order(coker) != fa_order(b)) {
      ++out.violations;
    }
    ++out.samples;
  }
  return out;
}

}  // namespace widecat
