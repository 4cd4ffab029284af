#include "ordfn/ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <utility>

namespace ordfn {

namespace {

std::strong_ordering cmp_nat(const Nat& a, const Nat& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

const Ordinal& one() {
  static const Ordinal v = Ordinal::from_nat(1);
  return v;
}

}  // namespace

Ordinal Ordinal::from_nat(Nat n) {
  if (n < 0) throw ValidationError("natural number must be non-negative");
  Ordinal r;
  if (n > 0) r.tail_.push_back(Term{Ordinal{}, std::move(n)});
  return r;
}

Ordinal Ordinal::omega() { return omega_pow(from_nat(1)); }

Ordinal Ordinal::omega1(const Nat& coeff) {
  if (coeff < 0) throw ValidationError("omega1 coefficient must be non-negative");
  Ordinal r;
  r.omega1_coeff_ = coeff;
  return r;
}

Ordinal Ordinal::omega_pow(Ordinal exp, Nat coeff) {
  if (coeff < 1) throw ValidationError("coefficient must be positive");
  if (exp.omega1_coeff_ != 0) throw ValidationError("uncountable exponent not supported");
  Ordinal r;
  r.tail_.push_back(Term{std::move(exp), std::move(coeff)});
  return r;
}

Ordinal Ordinal::make(Nat omega1_coeff, std::vector<Term> tail) {
  if (omega1_coeff < 0) throw ValidationError("omega1 coefficient must be non-negative");
  for (std::size_t i = 0; i < tail.size(); ++i) {
    if (tail[i].coeff < 1) throw ValidationError("coefficient must be positive");
    if (tail[i].exp.omega1_coeff() != 0)
      throw ValidationError("uncountable exponent not supported");
    if (i > 0 && compare(tail[i].exp, tail[i - 1].exp) != std::strong_ordering::less)
      throw ValidationError("exponents must be strictly decreasing");
  }
  Ordinal r;
  r.omega1_coeff_ = std::move(omega1_coeff);
  r.tail_ = std::move(tail);
  return r;
}

bool Ordinal::is_finite() const {
  if (omega1_coeff_ != 0) return false;
  if (tail_.empty()) return true;
  return tail_.size() == 1 && tail_[0].exp.is_zero();
}

Nat Ordinal::to_nat() const {
  if (!is_finite()) throw DomainError("ordinal " + format_ordinal(*this) + " is not finite");
  return tail_.empty() ? Nat(0) : tail_[0].coeff;
}

bool Ordinal::operator==(const Ordinal& other) const {
  return compare(*this, other) == std::strong_ordering::equal;
}

std::strong_ordering Ordinal::operator<=>(const Ordinal& other) const {
  return compare(*this, other);
}

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) {
  if (auto c = cmp_nat(a.omega1_coeff(), b.omega1_coeff()); c != 0) return c;
  const auto& ta = a.cnf_tail();
  const auto& tb = b.cnf_tail();
  const std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = compare(ta[i].exp, tb[i].exp); c != 0) return c;
    if (auto c = cmp_nat(ta[i].coeff, tb[i].coeff); c != 0) return c;
  }
  // A canonical prefix denotes the smaller ordinal.
  if (ta.size() < tb.size()) return std::strong_ordering::less;
  if (ta.size() > tb.size()) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.omega1_coeff() > 0) {
    return Ordinal::make(a.omega1_coeff() + b.omega1_coeff(), b.cnf_tail());
  }
  if (b.is_zero()) return a;
  const auto& at = a.cnf_tail();
  const auto& bt = b.cnf_tail();
  const Ordinal& lead = bt.front().exp;
  std::vector<Ordinal::Term> out;
  out.reserve(at.size() + bt.size());
  std::size_t i = 0;
  while (i < at.size() && compare(at[i].exp, lead) == std::strong_ordering::greater) {
    out.push_back(at[i]);
    ++i;
  }
  Nat lead_coeff = bt.front().coeff;
  if (i < at.size() && at[i].exp == lead) lead_coeff += at[i].coeff;
  out.push_back(Ordinal::Term{lead, std::move(lead_coeff)});
  out.insert(out.end(), bt.begin() + 1, bt.end());
  return Ordinal::make(a.omega1_coeff(), std::move(out));
}

Ordinal successor(const Ordinal& a) { return add(a, one()); }

Ordinal predecessor(const Ordinal& a) {
  if (classify(a) != OrdinalClass::Successor) throw DomainError("not a successor ordinal");
  std::vector<Ordinal::Term> tail = a.cnf_tail();
  if (tail.back().coeff > 1)
    tail.back().coeff -= 1;
  else
    tail.pop_back();
  return Ordinal::make(a.omega1_coeff(), std::move(tail));
}

OrdinalClass classify(const Ordinal& a) {
  if (a.is_zero()) return OrdinalClass::Zero;
  if (!a.cnf_tail().empty() && a.cnf_tail().back().exp.is_zero())
    return OrdinalClass::Successor;
  return OrdinalClass::Limit;
}

bool is_isolated(const Ordinal& a) { return classify(a) != OrdinalClass::Limit; }

CofinalityClass cofinality_class(const Ordinal& a) {
  switch (classify(a)) {
    case OrdinalClass::Zero:
      return CofinalityClass::Zero;
    case OrdinalClass::Successor:
      return CofinalityClass::Successor;
    case OrdinalClass::Limit:
      break;
  }
  return a.cnf_tail().empty() ? CofinalityClass::CofOmega1 : CofinalityClass::CofOmega;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Ordinal run() {
    Ordinal v = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }

  [[noreturn]] void fail_at(const std::string& msg, std::size_t where) const {
    throw ParseError(msg + " at position " + std::to_string(where), where);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() const {
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  // "w1" is a keyword only when the '1' is not the start of a longer number.
  bool at_omega1() const {
    return pos_ + 1 < text_.size() && text_[pos_] == 'w' && text_[pos_ + 1] == '1' &&
           (pos_ + 2 == text_.size() ||
            !std::isdigit(static_cast<unsigned char>(text_[pos_ + 2])));
  }

  Nat parse_nat() {
    skip_ws();
    if (!at_digit()) fail("expected a number");
    std::size_t start = pos_;
    while (at_digit()) ++pos_;
    return Nat(std::string(text_.substr(start, pos_ - start)));
  }

  Nat parse_positive_nat() {
    skip_ws();
    std::size_t start = pos_;
    Nat n = parse_nat();
    if (n < 1) fail_at("coefficient must be positive", start);
    return n;
  }

  Ordinal parse_expr() {
    Ordinal acc = parse_term();
    while (eat('+')) acc = add(acc, parse_term());
    return acc;
  }

  Ordinal parse_term() {
    skip_ws();
    if (pos_ == text_.size()) fail("expected a term");
    if (at_omega1()) {
      pos_ += 2;
      Nat coeff = 1;
      if (eat('*')) coeff = parse_positive_nat();
      return Ordinal::omega1(coeff);
    }
    if (text_[pos_] == 'w') {
      ++pos_;
      Ordinal exp = one();
      if (eat('^')) exp = parse_exp_atom();
      Nat coeff = 1;
      if (eat('*')) coeff = parse_positive_nat();
      return Ordinal::omega_pow(std::move(exp), std::move(coeff));
    }
    if (at_digit()) return Ordinal::from_nat(parse_nat());
    fail("expected a term");
  }

  Ordinal parse_exp_atom() {
    skip_ws();
    std::size_t start = pos_;
    if (eat('(')) {
      Ordinal v = parse_expr();
      if (!eat(')')) fail("expected ')'");
      if (v.omega1_coeff() != 0) fail_at("uncountable exponent not supported", start);
      return v;
    }
    if (at_omega1()) fail_at("uncountable exponent not supported", start);
    if (pos_ < text_.size() && text_[pos_] == 'w') {
      ++pos_;
      Ordinal exp = one();
      if (eat('^')) exp = parse_exp_atom();
      return Ordinal::omega_pow(std::move(exp));
    }
    if (at_digit()) return Ordinal::from_nat(parse_nat());
    fail("expected an exponent");
  }
};

// Exponents writable after '^' without parentheses: naturals and
// coefficient-1 omega towers.
bool plain_exp_atom(const Ordinal& e) {
  if (e.is_finite()) return true;
  const auto& t = e.cnf_tail();
  return t.size() == 1 && t[0].coeff == 1 && plain_exp_atom(t[0].exp);
}

std::string format_exp(const Ordinal& e) {
  if (!plain_exp_atom(e)) return "(" + format_ordinal(e) + ")";
  if (e.is_finite()) return e.to_nat().str();
  const Ordinal& inner = e.cnf_tail()[0].exp;
  if (inner == one()) return "w";
  return "w^" + format_exp(inner);
}

}  // namespace

Ordinal parse_ordinal(std::string_view text) { return Parser(text).run(); }

std::string format_ordinal(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  auto append = [&out](const std::string& part) {
    if (!out.empty()) out += " + ";
    out += part;
  };
  if (a.omega1_coeff() > 0) {
    std::string s = "w1";
    if (a.omega1_coeff() > 1) s += "*" + a.omega1_coeff().str();
    append(s);
  }
  for (const auto& term : a.cnf_tail()) {
    if (term.exp.is_zero()) {
      append(term.coeff.str());
      continue;
    }
    std::string s = term.exp == one() ? "w" : "w^" + format_exp(term.exp);
    if (term.coeff > 1) s += "*" + term.coeff.str();
    append(s);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Ordinal& a) {
  return os << format_ordinal(a);
}

const char* to_string(OrdinalClass c) {
  switch (c) {
    case OrdinalClass::Zero:
      return "zero";
    case OrdinalClass::Successor:
      return "successor";
    case OrdinalClass::Limit:
      return "limit";
  }
  return "?";
}

const char* to_string(CofinalityClass c) {
  switch (c) {
    case CofinalityClass::Zero:
      return "zero";
    case CofinalityClass::Successor:
      return "successor";
    case CofinalityClass::CofOmega:
      return "omega";
    case CofinalityClass::CofOmega1:
      return "omega1";
  }
  return "?";
}

}  // namespace ordfn
