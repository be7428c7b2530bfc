#pragma once

// Generating functions of transfer automata: the exact resolvent solve and
// the series-reconstruction fallback used for large automata.

#include <optional>
#include <string>
#include <vector>

#include "sunstrip/automaton.hpp"
#include "sunstrip/ratfunc.hpp"

namespace sunstrip {

// Short-length part plus y^w a^T (I - yA)^{-1} b, solved fraction-free.
RationalGF resolvent_gf(const TransferAutomaton& aut, const std::vector<std::string>& occupancyVars,
                        const std::string& lengthVar);

// First N+1 coefficients of the GF in lengthVar, straight from the automaton.
std::vector<Poly> automaton_series(const TransferAutomaton& aut,
                                   const std::vector<std::string>& occupancyVars, int N);

// Reconstruction from automaton_series with the given degree bound
// (default: node count + window length).
RationalGF reconstructed_gf(const TransferAutomaton& aut, const std::vector<std::string>& occupancyVars,
                            const std::string& lengthVar, std::optional<int> degreeBound = {});

struct GFOptions {
  // Automata with more nodes go through reconstruction instead of the solve.
  size_t maxResolventNodes = 2000;
  std::optional<int> degreeBound;
  bool forceReconstruction = false;
};

struct GFResult {
  RationalGF gf;
  std::string method;  // "resolvent" or "reconstruction"
  int degreeBound = 0;  // reconstruction only
};

// Picks the resolvent for small automata and reconstruction otherwise. The
// adaptive reconstruction doubles the bound from 4 until the candidate also
// matches a block of extra terms, capped by the default bound.
GFResult automaton_gf(const TransferAutomaton& aut, const std::vector<std::string>& occupancyVars,
                      const std::string& lengthVar, const GFOptions& opts = {});

}  // namespace sunstrip
