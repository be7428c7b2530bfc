#pragma once

// Perron-Frobenius growth, Darboux constants (simple poles only), expected
// occupancy and length slopes, and efficiencies.

#include <gmpxx.h>

#include <optional>
#include <string>

#include "sunstrip/models.hpp"
#include "sunstrip/oracle.hpp"
#include "sunstrip/ratfunc.hpp"

namespace sunstrip {

struct PFRoot {
  double w = 0;
  double lambda = 0;
  double residual = 0;  // |q(w)| for the reduced denominator q
};

// Smallest positive root of F's denominator after cancelling common factors
// with the numerator. F must be univariate in var. Throws DomainError when
// there is no root in (0, 1].
PFRoot pf_root(const RationalGF& F, const std::string& var);

// C in a_n ~ C w^-n, i.e. -p(w) / (w q'(w)). Throws DomainError when
// |q'(w)| < 1e-9 (not a simple pole).
double darboux_constant(const RationalGF& F, const std::string& var, double w);

// Slope of the expected number of houses in the length, q_x / (w q_y) at
// x = 1, y = w, where w is the dominant root of q(1, y).
double occupancy_slope(const RationalGF& G, const std::string& occupancyVar,
                       const std::string& lengthVar);
// Same with the roles of the two variables exchanged.
double length_slope(const RationalGF& G, const std::string& occupancyVar,
                    const std::string& lengthVar);

// slope / asymptotic maximum density; DomainError when the model has none.
double efficiency(const ModelSpec& spec, double slope);

// Mean of the occupancy (total houses) over one census row, exactly.
mpq_class mean_occupancy_exact(const Poly& row, const std::string& occupancyVar);
mpq_class mean_occupancy_exact(const CensusTable& table, int n);
// Largest occupancy present in a row.
int max_occupancy(const Poly& row, const std::string& occupancyVar);

struct AsymptoticReport {
  std::string model;
  double w = 0, lambda = 0, growthConstant = 0, rootResidual = 0;
  // Only for models with a single occupancy variable.
  std::optional<double> occupancySlope, lengthSlope;
  // Only when the model has a known maximum density.
  std::optional<double> efficiency;

  // "key: value" lines with six decimals.
  std::string to_text() const;
};

AsymptoticReport asymptotic_report(const ModelInfo& info, const RationalGF& G);

}  // namespace sunstrip
