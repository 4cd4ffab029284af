#include "ordfn/phi.hpp"

#include <utility>

namespace ordfn {

SubbasicPredicate SubbasicPredicate::all(Ordinal domain) {
  return {Kind::All, std::move(domain), false, Ordinal{}};
}

SubbasicPredicate SubbasicPredicate::empty(Ordinal domain) {
  return {Kind::Empty, std::move(domain), false, Ordinal{}};
}

SubbasicPredicate SubbasicPredicate::value_at_zero(Ordinal domain, bool bit) {
  return {Kind::ValueAtZero, std::move(domain), bit, Ordinal{}};
}

namespace {

void check_flip_point(const Ordinal& domain, const Ordinal& x) {
  if (classify(x) != OrdinalClass::Successor)
    throw ValidationError("flip point " + format_ordinal(x) + " is not a successor ordinal");
  if (!(x < domain))
    throw ValidationError("flip point " + format_ordinal(x) + " is not below the domain " +
                          format_ordinal(domain));
}

}  // namespace

SubbasicPredicate SubbasicPredicate::flip_at(Ordinal domain, Ordinal x) {
  check_flip_point(domain, x);
  return {Kind::FlipAt, std::move(domain), false, std::move(x)};
}

SubbasicPredicate SubbasicPredicate::no_flip_at(Ordinal domain, Ordinal x) {
  check_flip_point(domain, x);
  return {Kind::NoFlipAt, std::move(domain), false, std::move(x)};
}

bool SubbasicPredicate::contains(const StepFn& f) const {
  if (f.domain() != domain_)
    throw DomainError("domain mismatch: " + format_ordinal(f.domain()) + " vs " +
                      format_ordinal(domain_));
  switch (kind_) {
    case Kind::All:
      return true;
    case Kind::Empty:
      return false;
    case Kind::ValueAtZero:
      return eval(f, Ordinal{}) == bit_;
    case Kind::FlipAt:
      return eval(f, point_) != eval(f, predecessor(point_));
    case Kind::NoFlipAt:
      return eval(f, point_) == eval(f, predecessor(point_));
  }
  return false;
}

IndicatorFn phi_apply(const StepFn& f, bool allow_countable_cofinality) {
  if (!allow_countable_cofinality &&
      cofinality_class(f.domain()) != CofinalityClass::CofOmega1)
    throw DomainError("tau must have uncountable cofinality (override available)");
  std::vector<Ordinal> support;
  support.reserve(f.changes().size() + 1);
  if (f.initial()) support.emplace_back();
  support.insert(support.end(), f.changes().begin(), f.changes().end());
  return IndicatorFn(successor(f.domain()), std::move(support));
}

std::optional<std::string> image_violation(const IndicatorFn& g) {
  if (classify(g.domain()) != OrdinalClass::Successor)
    return "domain " + format_ordinal(g.domain()) + " is not a successor ordinal";
  const Ordinal tau = predecessor(g.domain());
  for (const Ordinal& s : g.support()) {
    if (s == tau)
      return "support point " + format_ordinal(s) + " equals tau";
    if (!s.is_zero() && classify(s) != OrdinalClass::Successor)
      return "support point " + format_ordinal(s) + " is a limit ordinal";
  }
  return std::nullopt;
}

bool image_membership(const IndicatorFn& g) { return !image_violation(g).has_value(); }

StepFn phi_invert(const IndicatorFn& g) {
  if (auto why = image_violation(g))
    throw NotInImageError("not in the image of phi: " + *why);
  Ordinal tau = predecessor(g.domain());
  const auto& support = g.support();
  const bool initial = !support.empty() && support.front().is_zero();
  std::vector<Ordinal> changes(support.begin() + (initial ? 1 : 0), support.end());
  return StepFn(std::move(tau), initial, std::move(changes));
}

SubbasicPredicate phi_preimage_subbasic(const Ordinal& x, bool bit, const Ordinal& tau) {
  if (x > tau)
    throw DomainError("point " + format_ordinal(x) + " is outside tau + 1 for tau = " +
                      format_ordinal(tau));
  if (x == tau)
    return bit ? SubbasicPredicate::empty(tau) : SubbasicPredicate::all(tau);
  if (x.is_zero())
    return SubbasicPredicate::value_at_zero(tau, bit);
  if (classify(x) == OrdinalClass::Limit)
    return bit ? SubbasicPredicate::empty(tau) : SubbasicPredicate::all(tau);
  return bit ? SubbasicPredicate::flip_at(tau, x) : SubbasicPredicate::no_flip_at(tau, x);
}

std::string to_string(const SubbasicPredicate& p) {
  switch (p.kind()) {
    case SubbasicPredicate::Kind::All:
      return "all";
    case SubbasicPredicate::Kind::Empty:
      return "empty";
    case SubbasicPredicate::Kind::ValueAtZero:
      return std::string("value at 0 = ") + (p.bit() ? "1" : "0");
    case SubbasicPredicate::Kind::FlipAt:
      return "flip at " + format_ordinal(p.point());
    case SubbasicPredicate::Kind::NoFlipAt:
      return "no flip at " + format_ordinal(p.point());
  }
  return "?";
}

}  // namespace ordfn
