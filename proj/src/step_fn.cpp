#include "ordfn/step_fn.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace ordfn {

StepFn::StepFn(Ordinal domain, bool initial, std::vector<Ordinal> changes)
    : domain_(std::move(domain)), initial_(initial), changes_(std::move(changes)) {
  if (domain_.is_zero()) throw DomainError("domain must be a nonzero ordinal");
  std::sort(changes_.begin(), changes_.end());
  for (std::size_t i = 0; i < changes_.size(); ++i) {
    const Ordinal& c = changes_[i];
    if (classify(c) != OrdinalClass::Successor)
      throw ValidationError("invalid change point " + format_ordinal(c) +
                            ": not a successor ordinal");
    if (!(c < domain_))
      throw ValidationError("invalid change point " + format_ordinal(c) +
                            ": not below the domain " + format_ordinal(domain_));
    if (i > 0 && changes_[i - 1] == c)
      throw ValidationError("duplicate change point " + format_ordinal(c));
  }
}

IndicatorFn::IndicatorFn(Ordinal domain, std::vector<Ordinal> support)
    : domain_(std::move(domain)), support_(std::move(support)) {
  if (domain_.is_zero()) throw DomainError("domain must be a nonzero ordinal");
  std::sort(support_.begin(), support_.end());
  for (std::size_t i = 0; i < support_.size(); ++i) {
    const Ordinal& s = support_[i];
    if (!is_isolated(s))
      throw ValidationError("support point " + format_ordinal(s) +
                            " is not an isolated ordinal");
    if (!(s < domain_))
      throw ValidationError("support point " + format_ordinal(s) +
                            " is not below the domain " + format_ordinal(domain_));
    if (i > 0 && support_[i - 1] == s)
      throw ValidationError("duplicate support point " + format_ordinal(s));
  }
}

bool IndicatorFn::value_at(const Ordinal& x) const {
  if (!(x < domain_))
    throw DomainError("point " + format_ordinal(x) + " is outside the domain " +
                      format_ordinal(domain_));
  return std::binary_search(support_.begin(), support_.end(), x);
}

bool eval(const StepFn& f, const Ordinal& x) {
  if (!(x < f.domain()))
    throw DomainError("point " + format_ordinal(x) + " is outside the domain " +
                      format_ordinal(f.domain()));
  const auto& cs = f.changes();
  auto flips = std::upper_bound(cs.begin(), cs.end(), x) - cs.begin();
  return f.initial() != static_cast<bool>(flips & 1);
}

StepFn zero_fn(Ordinal domain) { return StepFn(std::move(domain), false, {}); }

StepFn xor_add(const StepFn& f, const StepFn& g) {
  if (f.domain() != g.domain())
    throw DomainError("domain mismatch: " + format_ordinal(f.domain()) + " vs " +
                      format_ordinal(g.domain()));
  std::vector<Ordinal> sym;
  std::set_symmetric_difference(f.changes().begin(), f.changes().end(),
                                g.changes().begin(), g.changes().end(),
                                std::back_inserter(sym));
  return StepFn(f.domain(), f.initial() != g.initial(), std::move(sym));
}

DeterminingSequence determining_sequence(const StepFn& f) {
  std::vector<Ordinal> points;
  points.reserve(f.changes().size() + 1);
  points.emplace_back();
  points.insert(points.end(), f.changes().begin(), f.changes().end());
  return DeterminingSequence{f.initial(), std::move(points)};
}

std::vector<Ordinal> probe_points(const Ordinal& domain,
                                  std::span<const Ordinal> pool) {
  std::set<Ordinal> pts;
  auto put = [&](const Ordinal& x) {
    if (x < domain) pts.insert(x);
  };
  put(Ordinal{});
  put(Ordinal::from_nat(1));
  for (const Ordinal& p : pool) {
    put(p);
    if (classify(p) == OrdinalClass::Successor) put(predecessor(p));
    put(successor(p));
  }
  put(Ordinal::omega());
  put(add(Ordinal::omega(), Ordinal::omega()));
  put(Ordinal::omega_pow(Ordinal::from_nat(2)));
  return {pts.begin(), pts.end()};
}

StepFn reconstruct_from_oracle(const Ordinal& domain, const EvalProbe& probe,
                               const Ordinal& probe_bound,
                               std::span<const Ordinal> candidate_pool) {
  if (domain.is_zero()) throw DomainError("domain must be a nonzero ordinal");
  std::set<Ordinal> cands;
  for (const Ordinal& c : candidate_pool) {
    if (classify(c) != OrdinalClass::Successor)
      throw ValidationError("candidate " + format_ordinal(c) +
                            ": not a successor ordinal");
    if (!(c < probe_bound))
      throw ValidationError("candidate " + format_ordinal(c) +
                            ": not below the probe bound " + format_ordinal(probe_bound));
    if (!(c < domain))
      throw ValidationError("candidate " + format_ordinal(c) +
                            ": not below the domain " + format_ordinal(domain));
    cands.insert(c);
  }

  const bool initial = probe(Ordinal{});
  std::vector<Ordinal> changes;
  for (const Ordinal& c : cands) {
    if (probe(c) != probe(predecessor(c))) changes.push_back(c);
  }
  StepFn rebuilt(domain, initial, std::move(changes));

  // Consistency sweep: the rebuilt function must agree with the probe on
  // the pool's closure and just past the probe bound, or the probe is not
  // finitely determined over this pool.
  std::vector<Ordinal> pool_vec(cands.begin(), cands.end());
  std::set<Ordinal> checks;
  for (const Ordinal& x : probe_points(domain, pool_vec)) checks.insert(x);
  if (probe_bound < domain) {
    checks.insert(probe_bound);
    Ordinal after = successor(probe_bound);
    if (after < domain) checks.insert(after);
  }
  for (const Ordinal& x : checks) {
    if (eval(rebuilt, x) != probe(x))
      throw ReconstructionError(
          "probe is not finitely determined over the candidate pool: value mismatch at " +
          format_ordinal(x));
  }
  return rebuilt;
}

StepFn from_support(const Ordinal& domain, std::span<const Ordinal> support) {
  if (domain.is_zero()) throw DomainError("domain must be a nonzero ordinal");
  std::set<Ordinal> seen;
  std::set<Ordinal> toggles;
  auto flip = [&toggles](Ordinal t) {
    auto [it, inserted] = toggles.insert(std::move(t));
    if (!inserted) toggles.erase(it);
  };
  for (const Ordinal& s : support) {
    if (!is_isolated(s))
      throw ValidationError("support point " + format_ordinal(s) +
                            " is not an isolated ordinal");
    if (!(s < domain))
      throw ValidationError("support point " + format_ordinal(s) +
                            " is not below the domain " + format_ordinal(domain));
    if (!seen.insert(s).second)
      throw ValidationError("duplicate support point " + format_ordinal(s));
    flip(s);
    Ordinal after = successor(s);
    // s+1 == domain happens only at the top of a successor domain, where
    // the exit toggle has nothing left to flip.
    if (after < domain) flip(std::move(after));
  }
  const bool initial = toggles.erase(Ordinal{}) > 0;
  return StepFn(domain, initial, {toggles.begin(), toggles.end()});
}

StepFn to_step_fn(const IndicatorFn& g) { return from_support(g.domain(), g.support()); }

}  // namespace ordfn
