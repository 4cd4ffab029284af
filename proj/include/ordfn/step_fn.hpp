#pragma once

#include <functional>
#include <span>
#include <vector>

#include "ordfn/ordinal.hpp"

namespace ordfn {

// Continuous {0,1}-valued function on [0, domain), stored as its canonical
// determining data: the value at 0 plus the ascending successor ordinals at
// which the value flips. The function is automatically constant from the
// last change point on, so this family is exactly the finitely determined
// part of the function space (all of it when the domain is a successor or
// has uncountable cofinality).
class StepFn {
 public:
  // Canonicalizing constructor: changes may arrive unsorted but must be
  // duplicate-free successor ordinals strictly between 0 and domain.
  StepFn(Ordinal domain, bool initial, std::vector<Ordinal> changes);

  const Ordinal& domain() const { return domain_; }
  bool initial() const { return initial_; }
  const std::vector<Ordinal>& changes() const { return changes_; }

  bool operator==(const StepFn& other) const = default;

 private:
  Ordinal domain_;
  bool initial_;
  std::vector<Ordinal> changes_;
};

// Finitely supported {0,1}-indicator on [0, domain). Support points are
// isolated ordinals; this is the shape of phi's outputs.
class IndicatorFn {
 public:
  IndicatorFn(Ordinal domain, std::vector<Ordinal> support);

  const Ordinal& domain() const { return domain_; }
  const std::vector<Ordinal>& support() const { return support_; }
  bool value_at(const Ordinal& x) const;  // DomainError if x >= domain

  bool operator==(const IndicatorFn& other) const = default;

 private:
  Ordinal domain_;
  std::vector<Ordinal> support_;
};

// initial XOR parity of change points <= x. DomainError if x >= domain.
bool eval(const StepFn& f, const Ordinal& x);

StepFn zero_fn(Ordinal domain);

// Pointwise mod-2 sum: initial bits XOR, change sets take their symmetric
// difference. DomainError on domain mismatch.
StepFn xor_add(const StepFn& f, const StepFn& g);

struct DeterminingSequence {
  bool initial;
  std::vector<Ordinal> points;  // points.front() == 0, always present

  bool operator==(const DeterminingSequence& other) const = default;
};

// The full sequence with the implicit leading 0 materialized.
DeterminingSequence determining_sequence(const StepFn& f);

using EvalProbe = std::function<bool(const Ordinal&)>;

// Rebuilds the canonical StepFn of a finitely determined probe whose change
// points all lie in candidate_pool (nonzero isolated ordinals below
// probe_bound and domain). The rebuilt function is cross-checked against
// the probe on the pool's closure; ReconstructionError if the probe
// disagrees with every finite change set drawn from the pool.
StepFn reconstruct_from_oracle(const Ordinal& domain, const EvalProbe& probe,
                               const Ordinal& probe_bound,
                               std::span<const Ordinal> candidate_pool);

// Step function equal to 1 exactly on the given finite set of isolated
// points: toggles at s and s+1, adjacent toggles cancelling.
StepFn from_support(const Ordinal& domain, std::span<const Ordinal> support);

StepFn to_step_fn(const IndicatorFn& g);

// Standard verification points for a change-point pool: 0, 1, the pool,
// its predecessors and successors, and the fixed limits w, w*2, w^2, all
// clipped to [0, domain).
std::vector<Ordinal> probe_points(const Ordinal& domain,
                                  std::span<const Ordinal> pool);

}  // namespace ordfn
