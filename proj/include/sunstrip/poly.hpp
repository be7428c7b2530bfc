#pragma once

// Sparse multivariate polynomials with big-integer coefficients in at most
// three variables. Monomials are packed into one 64-bit key so that integer
// comparison of keys is the graded-lexicographic order (variables sorted by
// name, earlier names ranking higher).

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sunstrip {

class Poly {
 public:
  using Key = std::uint64_t;
  static constexpr int kMaxVars = 3;

  struct Term {
    std::vector<int> exponents;  // aligned with variables()
    mpz_class coeff;
  };

  Poly() = default;
  Poly(long c);  // NOLINT: integers promote to constants
  Poly(const mpz_class& c);  // NOLINT

  static Poly variable(const std::string& name);
  static Poly monomial(const std::vector<std::string>& vars, const std::vector<int>& exps,
                       const mpz_class& coeff = 1);
  // Accepts integers, single-letter variables, + - * ^ (with optional braces
  // around the exponent), parentheses and implicit multiplication. The
  // Unicode minus sign is read as '-'.
  static Poly parse(std::string_view text);

  const std::vector<std::string>& variables() const { return vars_; }
  bool has_variable(const std::string& name) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  size_t term_count() const { return terms_.size(); }
  mpz_class constant_term() const;
  int total_degree() const;  // -1 for the zero polynomial
  int degree(const std::string& var) const;
  mpz_class coefficient(const std::vector<std::pair<std::string, int>>& monomial) const;
  // Terms in descending graded-lex order.
  std::vector<Term> terms() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned e) const;
  Poly derivative(const std::string& var) const;
  Poly substitute(const std::string& var, const Poly& value) const;
  Poly rename(const std::map<std::string, std::string>& names) const;

  // Quotient when d divides *this exactly, nothing otherwise.
  std::optional<Poly> divide_exact(const Poly& d) const;
  // Throws DomainError when the division leaves a remainder.
  Poly exact_div(const Poly& d) const;

  mpz_class content() const;  // gcd of coefficients, sign of leading term
  Poly div_scalar(const mpz_class& c) const;  // c must divide every coefficient

  // Coefficients of var^0, var^1, ... as polynomials in the other variables.
  std::vector<Poly> coefficients_in(const std::string& var) const;
  static Poly from_coefficients(const std::vector<Poly>& coeffs, const std::string& var);
  // Multiply by var^e.
  Poly shift(const std::string& var, int e) const;
  // Drop all terms whose degree in var exceeds maxDeg.
  Poly truncate(const std::string& var, int maxDeg) const;

  mpq_class evaluate(const std::map<std::string, mpq_class>& values) const;
  long double evaluate(const std::map<std::string, long double>& values) const;

  std::string to_string() const;

 private:
  static Key pack(const std::vector<int>& exps);
  static std::vector<int> unpack(Key k, size_t nvars);
  Poly with_variables(const std::vector<std::string>& vars) const;
  static std::vector<std::string> merged(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b);
  void add_scaled(const Poly& o, int sign);
  void strip_unused();

  std::vector<std::string> vars_;                  // sorted, no duplicates
  std::vector<std::pair<Key, mpz_class>> terms_;  // ascending keys, no zeros
};

}  // namespace sunstrip
