#include "sunstrip/asymptotics.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "sunstrip/errors.hpp"

namespace sunstrip {

namespace {

using UPoly = std::vector<mpq_class>;  // ascending coefficients, no trailing zeros

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly to_upoly(const Poly& p, const std::string& var) {
  UPoly out;
  for (const Poly& c : p.coefficients_in(var)) {
    if (!c.is_constant()) throw DomainError("expected a polynomial in " + var + " only");
    out.push_back(mpq_class(c.constant_term()));
  }
  trim(out);
  return out;
}

UPoly rem(UPoly a, const UPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const mpq_class f = a.back() / b.back();
    const size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

UPoly quot(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) return {};
  UPoly q(a.size() - b.size() + 1, 0);
  while (a.size() >= b.size() && !a.empty()) {
    const mpq_class f = a.back() / b.back();
    const size_t shift = a.size() - b.size();
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  trim(q);
  return q;
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

mpq_class eval(const UPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

long double eval(const UPoly& p, long double x) {
  long double acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

UPoly derivative(const UPoly& p) {
  UPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  return d;
}

struct Reduced {
  UPoly num, den;
};

Reduced reduce(const RationalGF& F, const std::string& var) {
  UPoly p = to_upoly(F.numerator(), var);
  UPoly q = to_upoly(F.denominator(), var);
  if (q.empty()) throw DomainError("zero denominator");
  UPoly g = gcd(p, q);
  if (g.size() > 1) {
    p = quot(p, g);
    q = quot(q, g);
  }
  return {p, q};
}

double root_of(const UPoly& q, double* residual) {
  if (q.size() < 2) throw DomainError("denominator has no root: the sequence does not grow");
  const int steps = 64;
  mpq_class lo = 0;
  int sLo = sgn(eval(q, lo));
  long double a = 0, b = 0;
  bool found = false;
  for (int i = 1; i <= steps && !found; ++i) {
    mpq_class hi(i, steps);
    int sHi = sgn(eval(q, hi));
    if (sHi == 0) {
      if (residual) *residual = 0;
      return mpq_class(hi).get_d();
    }
    if (sHi != sLo) {
      a = lo.get_d();
      b = hi.get_d();
      found = true;
    }
    lo = hi;
    sLo = sHi;
  }
  if (!found) throw DomainError("no denominator root in (0, 1]");
  const long double fa = eval(q, a);
  for (int it = 0; it < 80; ++it) {
    long double m = (a + b) / 2;
    if ((eval(q, m) < 0) == (fa < 0)) a = m;
    else b = m;
  }
  const UPoly dq = derivative(q);
  long double x = (a + b) / 2;
  for (int it = 0; it < 5; ++it) {
    long double d = eval(dq, x);
    if (d == 0) break;
    long double nx = x - eval(q, x) / d;
    if (!(nx > 0)) break;
    x = nx;
  }
  const double w = static_cast<double>(x);
  const double r = std::fabs(eval(q, mpq_class(w)).get_d());
  if (r > 1e-12) throw DomainError("root refinement did not reach the residual tolerance");
  if (residual) *residual = r;
  return w;
}

// w for the series variable `series` with `other` set to 1, then
// q_other / (w q_series) at that point.
double slope(const RationalGF& G, const std::string& other, const std::string& series) {
  const auto& vars = G.denominator().variables();
  for (const auto& v : G.numerator().variables())
    if (v != other && v != series) throw DomainError("unexpected variable " + v);
  for (const auto& v : vars)
    if (v != other && v != series) throw DomainError("unexpected variable " + v);
  const RationalGF F = G.substitute(other, Poly(1));
  const double w = pf_root(F, series).w;
  const Poly& q = G.denominator();
  std::map<std::string, mpq_class> at{{other, 1}, {series, mpq_class(w)}};
  const double qo = q.derivative(other).evaluate(at).get_d();
  const double qs = q.derivative(series).evaluate(at).get_d();
  if (std::fabs(qs) < 1e-9) throw DomainError("denominator derivative vanishes at the root");
  return qo / (w * qs);
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

PFRoot pf_root(const RationalGF& F, const std::string& var) {
  const Reduced r = reduce(F, var);
  PFRoot out;
  out.w = root_of(r.den, &out.residual);
  out.lambda = 1.0 / out.w;
  return out;
}

double darboux_constant(const RationalGF& F, const std::string& var, double w) {
  const Reduced r = reduce(F, var);
  const mpq_class x(w);
  const double dq = eval(derivative(r.den), x).get_d();
  if (std::fabs(dq) < 1e-9) throw DomainError("multiple root: the pole at w is not simple");
  return -eval(r.num, x).get_d() / (w * dq);
}

double occupancy_slope(const RationalGF& G, const std::string& occupancyVar,
                       const std::string& lengthVar) {
  return slope(G, occupancyVar, lengthVar);
}

double length_slope(const RationalGF& G, const std::string& occupancyVar,
                    const std::string& lengthVar) {
  return slope(G, lengthVar, occupancyVar);
}

double efficiency(const ModelSpec& spec, double slopeValue) {
  const auto& info = model_info(spec);
  if (!info.densityConstant)
    throw DomainError("no maximum-density constant is known for model " + info.token);
  return slopeValue / *info.densityConstant;
}

mpq_class mean_occupancy_exact(const Poly& row, const std::string& occupancyVar) {
  mpz_class total = 0, weighted = 0;
  auto coeffs = row.coefficients_in(occupancyVar);
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (!coeffs[k].is_constant()) throw DomainError("row must be univariate in " + occupancyVar);
    total += coeffs[k].constant_term();
    weighted += coeffs[k].constant_term() * static_cast<long>(k);
  }
  if (total == 0) throw DomainError("empty census row");
  mpq_class m(weighted, total);
  m.canonicalize();
  return m;
}

mpq_class mean_occupancy_exact(const CensusTable& table, int n) {
  mpz_class total = 0, weighted = 0;
  for (const auto& [v, c] : table.row(n)) {
    long houses = 0;
    for (int x : v) houses += x;
    total += c;
    weighted += c * houses;
  }
  if (total == 0) throw DomainError("empty census row");
  mpq_class m(weighted, total);
  m.canonicalize();
  return m;
}

int max_occupancy(const Poly& row, const std::string& occupancyVar) {
  if (row.is_zero()) throw DomainError("empty census row");
  return std::max(0, row.degree(occupancyVar));
}

std::string AsymptoticReport::to_text() const {
  std::ostringstream os;
  os << "model: " << model << "\nw: " << fixed6(w) << "\nlambda: " << fixed6(lambda)
     << "\ngrowthConstant: " << fixed6(growthConstant);
  if (occupancySlope) os << "\noccupancySlope: " << fixed6(*occupancySlope);
  if (lengthSlope) os << "\nlengthSlope: " << fixed6(*lengthSlope);
  if (efficiency) os << "\nefficiency: " << fixed6(*efficiency);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", rootResidual);
  os << "\nrootResidual: " << buf << '\n';
  return os.str();
}

AsymptoticReport asymptotic_report(const ModelInfo& info, const RationalGF& G) {
  AsymptoticReport rep;
  rep.model = info.token;
  RationalGF F = G;
  for (const auto& v : info.occupancyVars) F = F.substitute(v, Poly(1));
  const PFRoot root = pf_root(F, info.lengthVar);
  rep.w = root.w;
  rep.lambda = root.lambda;
  rep.rootResidual = root.residual;
  rep.growthConstant = darboux_constant(F, info.lengthVar, root.w);
  if (info.occupancyVars.size() == 1) {
    rep.occupancySlope = occupancy_slope(G, info.occupancyVars[0], info.lengthVar);
    rep.lengthSlope = length_slope(G, info.occupancyVars[0], info.lengthVar);
    if (info.densityConstant) rep.efficiency = *rep.occupancySlope / *info.densityConstant;
  }
  return rep;
}

}  // namespace sunstrip
