#pragma once

// Published reference data: closed-form generating functions, the appendix
// generating functions, the coefficient tables, and the exact n = 100 row.

#include <string>
#include <vector>

#include "sunstrip/ratfunc.hpp"

namespace sunstrip::fixtures {

struct AppendixGF {
  std::string model;  // model token (see models.hpp)
  RationalGF gf;      // sign already applied
  std::vector<std::string> occupancyVars;
  std::string lengthVar;
};

// Riviera length GF f(y), bivariate g(x,y) and house-count GF h(x).
RationalGF riviera_f();
RationalGF riviera_g();
RationalGF riviera_h();

// two-story Riviera, mixed Riviera, mixed Flory, 2xn and 3xn.
const std::vector<AppendixGF>& appendix();
const AppendixGF& appendix_for(const std::string& model);
bool has_appendix(const std::string& model);

struct TableEntry {
  int k, n;
  long value;
};

// A published coefficient table; entries outside `entries` but inside the
// displayed window [0..maxK] x [0..maxN] are zero.
struct CoefficientTable {
  std::string model;
  int maxK, maxN;
  std::vector<TableEntry> entries;
};

const std::vector<CoefficientTable>& coefficient_tables();

// J_{k,100} for k = 50..67 (first entry is k = 50).
const std::vector<std::string>& riviera_row_100();

}  // namespace sunstrip::fixtures
