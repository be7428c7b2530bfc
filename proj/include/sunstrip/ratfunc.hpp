#pragma once

// Rational generating functions num/den over Z[vars], their power-series
// expansion in one main variable, and reconstruction from series terms.

#include <string>
#include <string_view>
#include <vector>

#include "sunstrip/poly.hpp"

namespace sunstrip {

class RationalGF {
 public:
  RationalGF() : num_(0), den_(1) {}
  // Removes the common integer content and makes den's constant term +1.
  // Throws DomainError when that constant term is not a unit.
  RationalGF(Poly num, Poly den);
  explicit RationalGF(Poly num) : RationalGF(std::move(num), Poly(1)) {}

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  RationalGF substitute(const std::string& var, const Poly& value) const;
  RationalGF rename(const std::map<std::string, std::string>& names) const;

  // "(num)/(den)"
  std::string to_string() const;
  // Accepts "(num)/(den)", "-(num)/(den)" or a bare polynomial.
  static RationalGF parse(std::string_view text);

 private:
  Poly num_, den_;
};

RationalGF operator+(const RationalGF& a, const RationalGF& b);
RationalGF operator*(const RationalGF& a, const RationalGF& b);

// Equality as rational functions, by cross-multiplication.
bool ratfunc_equal(const RationalGF& f, const RationalGF& g);

// Coefficients of mainVar^0..mainVar^N as polynomials in the other variables.
std::vector<Poly> series_coeffs(const RationalGF& f, const std::string& mainVar, int N);

struct Recurrence {
  std::string var;
  std::vector<Poly> coeffs;   // a_n = sum_{i>=1} coeffs[i-1] * a_{n-i}
  std::vector<Poly> initial;  // a_0 .. a_{start-1}
  int validFrom = 0;          // first n where the recurrence holds

  // "a_n = a_{n-2} + a_{n-3} + a_{n-4} - a_{n-6}"
  std::string to_string(const std::string& seq = "a") const;
  std::vector<Poly> extend(int N) const;
};

Recurrence recurrence_from_denominator(const RationalGF& f, const std::string& mainVar);

// Smallest-denominator rational function in mainVar (denominator degree at
// most degreeBound, numerator degree at most degreeBound) reproducing every
// supplied coefficient. Throws ReconstructionError when none exists.
RationalGF minimal_ratfunc_from_series(const std::vector<Poly>& coeffs, const std::string& mainVar,
                                       int degreeBound);

}  // namespace sunstrip
