#include "sunstrip/symbolic.hpp"

#include <algorithm>

#include "sunstrip/errors.hpp"
#include "sunstrip/linsolve.hpp"

namespace sunstrip {

namespace {

void check_vars(const TransferAutomaton& aut, const std::vector<std::string>& occupancyVars) {
  if (static_cast<int>(occupancyVars.size()) != aut.spec.occupancy_classes())
    throw DomainError("expected one variable per occupancy class");
}

// Extra terms a reconstructed candidate must also reproduce.
constexpr int kCheckTerms = 12;

}  // namespace

std::vector<Poly> automaton_series(const TransferAutomaton& aut,
                                   const std::vector<std::string>& occupancyVars, int N) {
  check_vars(aut, occupancyVars);
  std::vector<Poly> out;
  for (int n = 0; n <= N; ++n) out.push_back(weighted_census_row(aut, n, occupancyVars));
  return out;
}

RationalGF resolvent_gf(const TransferAutomaton& aut, const std::vector<std::string>& occupancyVars,
                        const std::string& lengthVar) {
  check_vars(aut, occupancyVars);
  if (std::find(occupancyVars.begin(), occupancyVars.end(), lengthVar) != occupancyVars.end())
    throw DomainError("length variable clashes with an occupancy variable");
  const int w = aut.windowLen;
  const size_t m = aut.size();

  Poly f1;
  for (int n = 0; n < w; ++n)
    f1 += weighted_census_row(aut, n, occupancyVars).shift(lengthVar, n);

  const Poly y = Poly::variable(lengthVar);
  PolyMatrix M(m, std::vector<Poly>(m));
  for (size_t i = 0; i < m; ++i) M[i][i] = Poly(1);
  for (const Edge& e : aut.edges)
    M[e.from][e.to] -= y * Poly::monomial(occupancyVars, e.increment);
  std::vector<Poly> b(m);
  for (int e : aut.endNodes) b[e] = Poly(1);

  const FractionFreeSolution sol = bareiss_solve(M, b);
  Poly num;
  for (int s : aut.startNodes)
    num += Poly::monomial(occupancyVars, aut.node_occupancy(s)) * sol.numerators[s];
  num = num.shift(lengthVar, w);
  // det is 1 at y = 0 up to sign; RationalGF fixes the sign.
  return RationalGF(f1 * sol.det + num, sol.det);
}

RationalGF reconstructed_gf(const TransferAutomaton& aut, const std::vector<std::string>& occupancyVars,
                            const std::string& lengthVar, std::optional<int> degreeBound) {
  const int B = degreeBound.value_or(static_cast<int>(aut.size()) + aut.windowLen);
  auto series = automaton_series(aut, occupancyVars, 2 * B + kCheckTerms);
  RationalGF f = minimal_ratfunc_from_series(series, lengthVar, B);
  return f;
}

GFResult automaton_gf(const TransferAutomaton& aut, const std::vector<std::string>& occupancyVars,
                      const std::string& lengthVar, const GFOptions& opts) {
  if (!opts.forceReconstruction && !opts.degreeBound && aut.size() <= opts.maxResolventNodes)
    return {resolvent_gf(aut, occupancyVars, lengthVar), "resolvent", 0};
  if (opts.degreeBound)
    return {reconstructed_gf(aut, occupancyVars, lengthVar, opts.degreeBound), "reconstruction",
            *opts.degreeBound};
  const int cap = static_cast<int>(aut.size()) + aut.windowLen;
  std::vector<Poly> series;
  for (int B = 4;; B = std::min(2 * B, cap)) {
    const int N = 2 * B + kCheckTerms;
    if (static_cast<int>(series.size()) <= N) series = automaton_series(aut, occupancyVars, N);
    try {
      return {minimal_ratfunc_from_series(series, lengthVar, B), "reconstruction", B};
    } catch (const ReconstructionError&) {
      if (B == cap) throw;
    }
  }
}

}  // namespace sunstrip
