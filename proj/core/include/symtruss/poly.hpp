#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "symtruss/rational.hpp"

namespace symtruss {

// Index into a ParameterEnv's variable table. Covers both declared symbols
// and registered radical symbols; the env knows which is which.
struct VarId {
  std::uint32_t value = 0;
  friend bool operator==(VarId a, VarId b) { return a.value == b.value; }
  friend bool operator!=(VarId a, VarId b) { return a.value != b.value; }
  friend bool operator<(VarId a, VarId b) { return a.value < b.value; }
};

// Power product of variables; factors sorted by ascending VarId, exponents >= 1.
class Monomial {
 public:
  using Factor = std::pair<VarId, std::uint32_t>;

  Monomial() = default;
  static Monomial var(VarId v, std::uint32_t exp = 1);

  bool is_one() const { return factors_.empty(); }
  std::uint32_t total_degree() const;
  std::uint32_t degree_of(VarId v) const;
  const std::vector<Factor>& factors() const { return factors_; }

  Monomial operator*(const Monomial& o) const;
  // Exact quotient, or nullopt when o does not divide *this.
  std::optional<Monomial> divided_by(const Monomial& o) const;
  // Remove one variable entirely.
  Monomial without(VarId v) const;
  Monomial with_degree(VarId v, std::uint32_t exp) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.factors_ == b.factors_;
  }

  // Graded order: total degree first, then lexicographic with the highest
  // VarId most significant. Returns <0, 0, >0.
  static int compare(const Monomial& a, const Monomial& b);

 private:
  std::vector<Factor> factors_;
};

struct Term {
  Int coeff;
  Monomial mono;
};

// Multivariate polynomial with exact integer coefficients. Terms are kept
// sorted in strictly descending monomial order with nonzero coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Int constant);
  explicit Poly(long constant) : Poly(Int(constant)) {}
  static Poly var(VarId v, std::uint32_t exp = 1);
  static Poly term(Int coeff, Monomial m);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  const Term& leading_term() const { return terms_.front(); }

  std::uint32_t total_degree() const;
  std::uint32_t degree_of(VarId v) const;
  bool contains(VarId v) const { return degree_of(v) > 0; }
  // Sorted list of variables that appear.
  std::vector<VarId> variables() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly mul_term(const Int& coeff, const Monomial& m) const;
  Poly mul_int(const Int& k) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_eq(b); }
  friend bool operator!=(const Poly& a, const Poly& b) { return !a.terms_eq(b); }
  // Total order usable as a map key (degree/terms lexicographic).
  static int compare(const Poly& a, const Poly& b);

  // Derivative treating every variable as independent.
  Poly derivative(VarId v) const;

  // Positive integer content (0 for the zero polynomial).
  Int content() const;
  // this / content, keeping the leading sign.
  Poly primitive_part() const;
  int lead_sign() const { return is_zero() ? 0 : (terms_[0].coeff > 0 ? 1 : -1); }

  // Exact division; nullopt when not divisible over the integers.
  std::optional<Poly> divided_by(const Poly& d) const;
  Poly divided_by_exact(const Poly& d) const;  // throws InternalError on failure

  double eval(const std::vector<double>& var_values) const;

  // Assembles terms (unsorted, possibly duplicated) into canonical form.
  static Poly from_terms(std::vector<Term> terms);

 private:
  bool terms_eq(const Poly& o) const;
  std::vector<Term> terms_;
};

// Multivariate gcd over Z (content included), leading coefficient positive.
Poly poly_gcd(const Poly& a, const Poly& b);
Poly poly_lcm(const Poly& a, const Poly& b);

// q (primitive, non-constant allowed) split as outside^2 * inside with inside
// square-free. Constants pass through as (1, q).
std::pair<Poly, Poly> square_free_split(const Poly& q);

}  // namespace symtruss
