#pragma once

// Brute-force ground truth: exhaustive DFS over words, plus the companion
// objects (restricted permutations, compositions) the bijections map onto.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "sunstrip/model.hpp"

namespace sunstrip {

using Occupancy = std::vector<int>;

struct OracleOptions {
  std::uint64_t budget = 100'000'000;  // DFS node visits before giving up
};

struct CensusTable {
  ModelSpec spec;
  int maxLength = 0;
  std::map<std::pair<Occupancy, int>, mpz_class> counts;

  mpz_class at(const Occupancy& v, int n) const;
  mpz_class length_total(int n) const;
  // Nonzero entries of one length, ordered by occupancy vector.
  std::vector<std::pair<Occupancy, mpz_class>> row(int n) const;
};

// Calls visit on every maximal configuration of length n in lexicographic
// order of letters.
void for_each_maximal(const ModelSpec& spec, int n,
                      const std::function<void(const Configuration&)>& visit,
                      const OracleOptions& opts = {});

std::vector<Configuration> enumerate_maximal(const ModelSpec& spec, int n,
                                             const OracleOptions& opts = {});

CensusTable census(const ModelSpec& spec, int nMax, const OracleOptions& opts = {});

// Permutations of 1..n (one-line notation) with every displacement in W.
std::vector<std::vector<int>> enumerate_restricted_permutations(int n, const std::vector<int>& W);

std::vector<std::vector<int>> enumerate_compositions(int total, const std::vector<int>& parts);

}  // namespace sunstrip
