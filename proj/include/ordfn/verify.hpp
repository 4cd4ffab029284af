#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ordfn/phi.hpp"

namespace ordfn {

// Exhaustive family over a fixed change-point pool: both initial bits
// crossed with every subset of the pool, 2 * 2^|pool| functions in all.
// Any finite counterexample to the verified laws would appear in some
// pool, which is what makes desk-scale exhaustion meaningful.
struct FamilySpec {
  Ordinal domain;
  std::vector<Ordinal> pool;
  std::vector<Ordinal> extra_probes;  // each <= domain
  std::size_t pool_cap = 12;
  std::size_t pair_pool_cap = 8;  // applies to the pair/triple suites
  bool allow_countable_cofinality = false;
};

struct VerifyFailure {
  nlohmann::json witness;  // reproducible description of the failing inputs
};

struct VerifyReport {
  std::string suite;
  std::size_t cases = 0;
  std::vector<VerifyFailure> failures;
  double ms = 0.0;

  bool passed() const { return failures.empty(); }
  std::string summary_line() const;  // "PASS cases=2048 failures=0"
};

// Deterministic order: initial bit 0 first, then change subsets by
// ascending bitmask over the sorted pool. ValidationError past pool_cap.
std::vector<StepFn> enumerate_family(const FamilySpec& spec);

// Probe set for the family: closure of the pool per probe_points, the
// domain top, and any extra probes. Sorted, unique, all <= domain.
std::vector<Ordinal> family_probes(const FamilySpec& spec);

// Replaceable forward map, used by the mutation-sensitivity tests to seed
// single-case faults; the default is phi_apply with the spec's override.
using ApplyHook = std::function<IndicatorFn(const StepFn&)>;

VerifyReport verify_injectivity(const FamilySpec& spec, const ApplyHook& apply = {});
VerifyReport verify_homomorphism(const FamilySpec& spec, const ApplyHook& apply = {});
VerifyReport verify_continuity_table(const FamilySpec& spec, const ApplyHook& apply = {});
VerifyReport verify_uniqueness(const FamilySpec& spec);

// Boolean-group axioms for (StepFn, xor_add, zero_fn): identity and
// self-inverse over the family, commutativity over all pairs,
// associativity over all triples of the subfamily spanned by the first
// assoc_pool_size pool points.
VerifyReport verify_group_axioms(const FamilySpec& spec, std::size_t assoc_pool_size = 4);

// Random canonical suborders (<= 6 blocks, endpoints from a fixed menu
// below w^3 plus w1): remainder must match the closure oracle and the gap
// characteristics must be pairwise distinct.
VerifyReport verify_dedekind(std::size_t trials, std::uint64_t seed);

}  // namespace ordfn
