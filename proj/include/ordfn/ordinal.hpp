#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ordfn/errors.hpp"

namespace ordfn {

// Arbitrary-precision natural number. Invariant: never negative.
using Nat = boost::multiprecision::cpp_int;

enum class OrdinalClass { Zero, Successor, Limit };

enum class CofinalityClass { Zero, Successor, CofOmega, CofOmega1 };

// An ordinal below omega_1 * omega, written omega_1 * m + alpha with
// alpha < epsilon_0 kept in Cantor normal form: a strictly decreasing list
// of (exponent, coefficient) terms with countable exponents and positive
// coefficients. Values are canonical on construction, so structural
// equality is ordinal equality and lexicographic comparison on
// (omega1_coeff, tail) is exactly the ordinal order.
class Ordinal {
 public:
  struct Term;

  Ordinal() = default;  // zero

  static Ordinal from_nat(Nat n);
  static Ordinal omega();
  static Ordinal omega1(const Nat& coeff = 1);
  // omega^exp * coeff; exp must be countable, coeff positive.
  static Ordinal omega_pow(Ordinal exp, Nat coeff = 1);
  // General constructor; validates every canonical-form invariant.
  static Ordinal make(Nat omega1_coeff, std::vector<Term> tail);

  const Nat& omega1_coeff() const { return omega1_coeff_; }
  const std::vector<Term>& cnf_tail() const { return tail_; }

  bool is_zero() const { return omega1_coeff_ == 0 && tail_.empty(); }
  bool is_finite() const;
  Nat to_nat() const;  // DomainError unless finite

  bool operator==(const Ordinal& other) const;
  std::strong_ordering operator<=>(const Ordinal& other) const;

 private:
  Nat omega1_coeff_ = 0;
  std::vector<Term> tail_;
};

struct Ordinal::Term {
  Ordinal exp;
  Nat coeff;
};

// Total order: lexicographic on (omega1_coeff, CNF tail).
std::strong_ordering compare(const Ordinal& a, const Ordinal& b);

// Ordinal sum in canonical form. A positive omega_1 part of b absorbs the
// countable tail of a; within tails, terms of a below the leading exponent
// of b are absorbed.
Ordinal add(const Ordinal& a, const Ordinal& b);

inline Ordinal operator+(const Ordinal& a, const Ordinal& b) {
  return add(a, b);
}

Ordinal successor(const Ordinal& a);
// DomainError "not a successor ordinal" on zero or a limit.
Ordinal predecessor(const Ordinal& a);

OrdinalClass classify(const Ordinal& a);
// 0 and the successors: the isolated points of any ordinal space.
bool is_isolated(const Ordinal& a);

// Zero / Successor as classified; CofOmega1 exactly for nonzero multiples
// of omega_1 with empty tail; every other limit has a countable cofinal
// sequence, hence CofOmega.
CofinalityClass cofinality_class(const Ordinal& a);

// Grammar (whitespace insignificant):
//   expr     := term ("+" term)*
//   term     := "w1" ("*" nat)? | "w" ("^" exp_atom)? ("*" nat)? | nat
//   exp_atom := "(" expr ")" | "w" ("^" exp_atom)? | nat
// Non-canonical sums normalize by left-to-right addition. "w1" inside an
// exponent is rejected with "uncountable exponent not supported".
Ordinal parse_ordinal(std::string_view text);

// Inverse of parse_ordinal on canonical forms, e.g. "w^2*3 + w*2 + 5".
// Compound exponents are parenthesized: "w^(w + 1)".
std::string format_ordinal(const Ordinal& a);

std::ostream& operator<<(std::ostream& os, const Ordinal& a);

const char* to_string(OrdinalClass c);
const char* to_string(CofinalityClass c);

}  // namespace ordfn
