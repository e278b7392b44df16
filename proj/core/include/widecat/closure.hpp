#pragma once

#include <vector>

#include "widecat/finab.hpp"

namespace widecat {

// How a member entered the closure tower.  The witness data (x, y) reads
// per kind:
//   generator:  the member was given (or is the zero group);
//   kernel:     member = ker f for some hom f : x -> y;
//   cokernel:   member = coker f for some hom f : x -> y;
//   extension:  0 -> x -> member -> y -> 0.
enum class WitnessKind { generator, kernel, cokernel, extension };

struct ClosureWitness {
  FinAbGroup member;
  int level = 0;  // index of the tower layer the member first appears in
  WitnessKind kind = WitnessKind::generator;
  FinAbGroup x;
  FinAbGroup y;
};

// The full record of one tower run: the layers D0 (kernel/cokernel
// closure of the generators) and D(k+1) (extensions of D(k)), the
// fixpoint flag, and the comparison against the predicted answer — every
// group in the universe whose order's primes divide some generator order.
struct ClosureReport {
  std::vector<FinAbGroup> generators;
  long modulus = 0;  // 0 = no exponent constraint on the universe
  long bound = 0;    // universe = groups of order <= bound
  std::vector<std::vector<FinAbGroup>> tower;
  bool stabilized = false;
  std::vector<FinAbGroup> predicted;
  bool equal = false;
  std::vector<FinAbGroup> missing;  // predicted but never reached
  std::vector<FinAbGroup> extra;    // reached but not predicted
  std::vector<ClosureWitness> witnesses;  // one per member of the last layer
};

// Runs the tower.  Throws "bound-exceeded" for bound outside [1, 256] or
// generators larger than the bound, "invalid-module" for generators that
// are not ZZ/modulus-modules, and "unsupported-ring" for a negative or
// unit modulus.
ClosureReport closure_tower(const std::vector<FinAbGroup>& gens, long modulus,
                            long bound);

// Re-derives every witness claim from freshly computed subgroup/quotient
// tables; true when all hold.
bool verify_witnesses(const ClosureReport& r);

// Randomized exactness spot-checks over a finished tower: samples maps
// between members of a layer and confirms the kernel, cokernel, and image
// stay inside the layer and the first-isomorphism order identities hold.
struct SnakeReport {
  int samples = 0;
  int violations = 0;
  long kernel_checks = 0;
  long cokernel_checks = 0;
  long image_checks = 0;
  long order_identity_checks = 0;
};

SnakeReport snake_closure_checks(const ClosureReport& r, int sample_size,
                                 unsigned seed = 0xBEE5u);

}  // namespace widecat
