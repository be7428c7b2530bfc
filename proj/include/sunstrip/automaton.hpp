#pragma once

// Transfer automata: nodes are allowed windows of a fixed number of columns,
// edges join windows that overlap progressively, and walks from a start node
// to an end node spell exactly the maximal configurations.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "sunstrip/model.hpp"
#include "sunstrip/oracle.hpp"
#include "sunstrip/poly.hpp"

namespace sunstrip {

using Word = std::vector<int>;

struct Edge {
  int from = 0, to = 0;
  Occupancy increment;  // occupancy of the appended column
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct TransferAutomaton {
  ModelSpec spec;
  std::vector<int> alphabet;
  int windowLen = 0;
  std::vector<Word> nodes;  // lexicographic
  std::vector<Edge> edges;  // sorted by (from, to)
  std::vector<int> startNodes, endNodes;
  CensusTable shortCensus;  // lengths 0 .. windowLen-1

  // Only the hand-built Riviera automaton carries these: the start/end
  // indicator vectors for no-sun boundaries and the edge labels used by the
  // permutation bijection (aligned with edges).
  std::vector<int> noSunStart, noSunEnd;
  std::vector<int> edgeLabels;

  size_t size() const { return nodes.size(); }
  // -1 when the word is not a node.
  int index_of(const Word& w) const;
  std::string node_text(int i) const;
  Occupancy node_occupancy(int i) const;
  // Edge index for (from, to), -1 if absent.
  int edge_index(int from, int to) const;
  std::vector<std::vector<int>> successors() const;
};

std::string word_text(const ModelSpec& spec, const Word& w);

TransferAutomaton riviera_fixed_automaton();
TransferAutomaton build_width1(const ModelSpec& spec, const OracleOptions& opts = {});
TransferAutomaton build_planar(const ModelSpec& spec, const OracleOptions& opts = {});
// Dispatches on spec; the one-story Riviera model gets the generated
// 5-window automaton.
TransferAutomaton build_automaton(const ModelSpec& spec, const OracleOptions& opts = {});

mpz_class count_length(const TransferAutomaton& aut, int n,
                       Boundary boundary = Boundary::SunnyOpen);
// Counts for every length 0..nMax in one pass.
std::vector<mpz_class> count_lengths(const TransferAutomaton& aut, int nMax);

// Polynomial in occupancyVars whose coefficient of x^v is J_{v,n}.
Poly weighted_census_row(const TransferAutomaton& aut, int n,
                         const std::vector<std::string>& occupancyVars);

TransferAutomaton higher_edge_graph(const TransferAutomaton& aut, int targetWindow);

// Compares counts and censuses with the oracle for every length <= nMax;
// throws StructuralMismatch on the first difference.
void validate_against_oracle(const TransferAutomaton& aut, int nMax, const OracleOptions& opts = {});

// Stable line-oriented description: window, alphabet, nodes, edges, start/end.
std::string dump(const TransferAutomaton& aut);

}  // namespace sunstrip
