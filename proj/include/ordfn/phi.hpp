#pragma once

#include <optional>
#include <string>

#include "ordfn/step_fn.hpp"

namespace ordfn {

// Subset of StepFn-space decidable with at most two point evaluations: the
// preimage of one subbasic open set {g : g(x) = i} of the pointwise
// topology on the target space.
class SubbasicPredicate {
 public:
  enum class Kind { All, Empty, ValueAtZero, FlipAt, NoFlipAt };

  static SubbasicPredicate all(Ordinal domain);
  static SubbasicPredicate empty(Ordinal domain);
  static SubbasicPredicate value_at_zero(Ordinal domain, bool bit);
  static SubbasicPredicate flip_at(Ordinal domain, Ordinal x);
  static SubbasicPredicate no_flip_at(Ordinal domain, Ordinal x);

  Kind kind() const { return kind_; }
  bool bit() const { return bit_; }            // ValueAtZero only
  const Ordinal& point() const { return point_; }  // FlipAt / NoFlipAt only
  const Ordinal& domain() const { return domain_; }

  // Membership of f. FlipAt(x) holds iff eval(f, x) != eval(f, x-1).
  bool contains(const StepFn& f) const;

  bool operator==(const SubbasicPredicate& other) const = default;

 private:
  SubbasicPredicate(Kind kind, Ordinal domain, bool bit, Ordinal point)
      : kind_(kind), domain_(std::move(domain)), bit_(bit), point_(std::move(point)) {}

  Kind kind_;
  Ordinal domain_;
  bool bit_ = false;
  Ordinal point_;
};

// Sends f to the indicator of its change points, plus the point 0 when
// f(0) = 1, as a function on domain+1. The hypothesis that the domain has
// uncountable cofinality is enforced unless the override flag is set; the
// formula stays meaningful on any finitely determined function.
IndicatorFn phi_apply(const StepFn& f, bool allow_countable_cofinality = false);

// Inverse on the image: initial bit from membership of 0, change points
// from the rest of the support. NotInImageError with the witness point
// when g lies outside the image.
StepFn phi_invert(const IndicatorFn& g);

// True iff support is finite, contained in tau = domain-1, and every
// nonzero support point is a successor (0 itself is permitted).
bool image_membership(const IndicatorFn& g);

// Reason g is outside the image, naming the witness; nullopt when inside.
std::optional<std::string> image_violation(const IndicatorFn& g);

// The preimage of {g in C_p(tau+1) : g(x) = bit} under phi, resolved by
// the position of x: the top point tau and interior limits give All/Empty,
// x = 0 pins the initial value, and interior isolated points pin whether
// the function flips at x. DomainError if x > tau.
SubbasicPredicate phi_preimage_subbasic(const Ordinal& x, bool bit, const Ordinal& tau);

std::string to_string(const SubbasicPredicate& p);

}  // namespace ordfn
