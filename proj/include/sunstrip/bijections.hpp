#pragma once

// Bijections between maximal configurations and other combinatorial
// families, and the permutation digraph used to discover the first one.

#include <string>
#include <vector>

#include "sunstrip/automaton.hpp"
#include "sunstrip/model.hpp"

namespace sunstrip {

// sigma(i) - i in {-2, -1, 2} for every i (images are 1-based).
struct RestrictedPermutation {
  std::vector<int> images;
  // Throws InvalidObject unless images is such a permutation.
  void validate() const;
  std::string to_string() const;  // "(3,1,5,2,4,8,9,6,7)"
  static RestrictedPermutation parse(const std::string& text);
  friend bool operator==(const RestrictedPermutation&, const RestrictedPermutation&) = default;
};

// Closed walk on the path 1001 - 11 - 101 with a loop at 101, starting and
// ending at 1001.
struct P3Walk {
  std::vector<std::string> nodes;
  void validate() const;
  int length() const { return static_cast<int>(nodes.size()) - 1; }
  std::string to_string() const;  // nodes joined by "→"
  static P3Walk parse(const std::string& text);  // accepts "→", "->" or ","
  friend bool operator==(const P3Walk&, const P3Walk&) = default;
};

struct Composition {
  std::vector<int> parts;
  std::vector<int> partSet;
  int total() const;
  void validate() const;
  std::string to_string() const;  // "3+5+3"
  friend bool operator==(const Composition&, const Composition&) = default;
};

RestrictedPermutation config_to_permutation(const Configuration& config);
Configuration permutation_to_config(const RestrictedPermutation& perm);

P3Walk config_to_p3walk(const Configuration& config);
Configuration p3walk_to_config(const P3Walk& walk);
// Closed walks of the given length from 1001, in lexicographic node order.
std::vector<P3Walk> enumerate_p3walks(int length);

// Parts k+1 .. 2k+1 summing to n + 2k + 1.
Composition flory_config_to_composition(int k, const Configuration& config);
Configuration composition_to_flory_config(int k, const Composition& comp);

// Entries in [0, k]; one more entry than the number of houses.
std::vector<int> flory_config_to_tuple(int k, const Configuration& config);
Configuration tuple_to_flory_config(int k, const std::vector<int>& tuple);

// Nodes named by their words; for permutation digraphs letters are the
// displacements written one after the other ("22-2").
struct WordDigraph {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> startNodes, endNodes;

  size_t size() const { return names.size(); }
  int index_of(const std::string& name) const;
  std::vector<std::vector<int>> successors() const;
  // Number of walks with `steps` edges from a start node to an end node.
  mpz_class count_walks(int steps) const;
};

// The 5-letter window digraph for displacements W, pruned to nodes on
// start-to-end paths.
WordDigraph build_permutation_digraph(int windowLen = 5, const std::vector<int>& W = {-2, -1, 2});
// 3-letter condensation: nodes are 3-letter factors of allowed 4-letter
// words, edges are allowed 4-letter words; start/end are the first/last
// three letters of the start/end windows.
WordDigraph condense_permutation_digraph(const WordDigraph& g, const std::vector<int>& W = {-2, -1, 2});
WordDigraph digraph_of(const TransferAutomaton& aut);

// The only digraph isomorphism from a onto b (map[i] = image of a's node i).
// Throws StructuralMismatch when there is none or more than one.
std::vector<int> unique_isomorphism(const WordDigraph& a, const WordDigraph& b);
// Number of isomorphisms, by exhaustive backtracking.
size_t count_isomorphisms(const WordDigraph& a, const WordDigraph& b);

// Edge labels of the 6-node Riviera automaton recomputed from the
// isomorphism between the permutation digraph and the 6-letter lift.
// Throws StructuralMismatch if the lifted edges over one base edge disagree.
std::vector<int> rederive_riviera_labels();

}  // namespace sunstrip
