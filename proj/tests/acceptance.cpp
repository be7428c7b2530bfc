// Acceptance run: one PASS/FAIL line per criterion, with wall time and limit.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "sunstrip/asymptotics.hpp"
#include "sunstrip/bijections.hpp"
#include "sunstrip/fixtures.hpp"
#include "sunstrip/models.hpp"
#include "sunstrip/oracle.hpp"
#include "sunstrip/symbolic.hpp"

using namespace sunstrip;

namespace {

constexpr double kSix = 1e-6;
// two-story efficiency: the printed 0.777914 is twice the rounded slope
constexpr double kTwoStoryEff = 1.5e-6;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) detail << "; ";
      ok = false;
      detail << what;
    }
  }
};

RationalGF gf_of(const std::string& token) {
  const auto& info = model_info(token);
  return resolvent_gf(build_automaton(info.spec), info.occupancyVars, info.lengthVar);
}

void near(Outcome& o, const std::string& name, double got, double want, double tol) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s = %.7f, expected %.6f", name.c_str(), got, want);
  o.require(std::fabs(got - want) <= tol, buf);
}

void criterion1(Outcome& o) {
  const auto aut = build_automaton(ModelSpec::riviera());
  const std::vector<long> printed{1, 1, 3, 3, 4, 6, 9, 12, 16, 24, 33, 46, 64};
  for (int n = 1; n <= 13; ++n)
    o.require(count_length(aut, n) == printed[n - 1], "a_" + std::to_string(n));
  o.detail << "a_1..a_13 = 1,1,3,3,4,6,9,12,16,24,33,46,64";
}

void criterion2(Outcome& o) {
  const RationalGF g = resolvent_gf(riviera_fixed_automaton(), {"x"}, "y");
  const RationalGF f = g.substitute("x", Poly(1));
  const RationalGF h = g.substitute("y", Poly(1));
  o.require(ratfunc_equal(g, fixtures::riviera_g()), "g(x,y)");
  o.require(ratfunc_equal(f, fixtures::riviera_f()), "f(y)");
  o.require(ratfunc_equal(h, fixtures::riviera_h()), "h(x)");
  const Recurrence rf = recurrence_from_denominator(f, "y");
  const Recurrence rh = recurrence_from_denominator(h, "x");
  o.require(rf.to_string() == "a_n = a_{n-2} + a_{n-3} + a_{n-4} - a_{n-6}", "f recurrence " + rf.to_string());
  o.require(rh.to_string("h") == "h_n = h_{n-1} + 2*h_{n-2} - h_{n-3}", "h recurrence " + rh.to_string("h"));
  o.detail << rf.to_string() << "; " << rh.to_string("h");
}

void criterion3(Outcome& o) {
  int checked = 0;
  for (const auto& table : fixtures::coefficient_tables()) {
    const auto& info = model_info(table.model);
    const RationalGF G = gf_of(table.model);
    const auto series = series_coeffs(G, info.lengthVar, table.maxN);
    for (int n = 0; n <= table.maxN; ++n)
      for (int k = 0; k <= table.maxK; ++k) {
        long expected = 0;
        for (const auto& e : table.entries)
          if (e.k == k && e.n == n) expected = e.value;
        o.require(series[n].coefficient({{info.occupancyVars[0], k}}) == expected,
                  table.model + " J(" + std::to_string(k) + "," + std::to_string(n) + ")");
        ++checked;
      }
  }
  o.detail << checked << " cells in 4 tables";
}

void criterion4(Outcome& o) {
  const Poly row = weighted_census_row(build_automaton(ModelSpec::riviera()), 100, {"x"});
  const auto& printed = fixtures::riviera_row_100();
  for (size_t i = 0; i < printed.size(); ++i) {
    const int k = 50 + static_cast<int>(i);
    o.require(row.coefficient({{"x", k}}) == mpz_class(printed[i]), "J_" + std::to_string(k) + ",100");
  }
  o.detail << printed.size() << " values, J_58,100 = " << row.coefficient({{"x", 58}}).get_str();
}

void criterion5(Outcome& o) {
  for (const auto& a : fixtures::appendix())
    o.require(ratfunc_equal(gf_of(a.model), a.gf), a.model + " resolvent");
  // reconstruction cross-check where it is tractable (all but mixed Riviera)
  for (const char* token : {"riviera-k2", "flory-mixed", "grid2", "grid3"}) {
    const auto& info = model_info(token);
    GFOptions opt;
    opt.forceReconstruction = true;
    const GFResult r = automaton_gf(build_automaton(info.spec), info.occupancyVars, info.lengthVar, opt);
    o.require(ratfunc_equal(r.gf, fixtures::appendix_for(token).gf), std::string(token) + " reconstruction");
  }
  o.detail << "5 identities; reconstruction agrees for riviera-k2, flory-mixed, grid2, grid3";
}

void criterion6(Outcome& o) {
  const RationalGF g = gf_of("riviera");
  const RationalGF f = g.substitute("x", Poly(1));
  const PFRoot r = pf_root(f, "y");
  near(o, "riviera lambda", r.lambda, 1.401268, kSix);
  near(o, "riviera C", darboux_constant(f, "y", r.w), 0.803796, kSix);
  const double occ = occupancy_slope(g, "x", "y");
  near(o, "riviera r(w)", occ, 0.577203, kSix);
  near(o, "riviera eps", efficiency(ModelSpec::riviera(), occ), 0.865804, kSix);
  near(o, "riviera length slope", length_slope(g, "x", "y"), 1.758283, kSix);

  struct Row {
    const char* model;
    double occ, len, eff, effTol;
  };
  for (const Row& row : {Row{"riviera-k2", 0.388957, 2.706054, 0.777914, kTwoStoryEff},
                         Row{"grid2", 1.437496, 0.724696, 0.862498, kSix},
                         Row{"grid3", 2.071886, 0.503345, 0.887951, kSix}}) {
    const auto& info = model_info(row.model);
    const RationalGF G = gf_of(row.model);
    const std::string x = info.occupancyVars[0], y = info.lengthVar;
    const double s = occupancy_slope(G, x, y);
    near(o, std::string(row.model) + " r(w)", s, row.occ, kSix);
    near(o, std::string(row.model) + " length slope", length_slope(G, x, y), row.len, kSix);
    near(o, std::string(row.model) + " eps", efficiency(info.spec, s), row.eff, row.effTol);
  }

  const RationalGF ff = gf_of("flory").substitute("x", Poly(1));
  const PFRoot rf = pf_root(ff, "y");
  near(o, "flory lambda", rf.lambda, 1.324718, kSix);
  near(o, "flory C", darboux_constant(ff, "y", rf.w), 0.956611, kSix);
  o.detail << "17 constants within 1e-6 (two-story eps within 1.5e-6)";
}

void criterion7(Outcome& o) {
  const std::vector<std::pair<const char*, int>> ranges{
      {"riviera", 20},       {"riviera-k2", 17}, {"riviera-mixed", 14}, {"flory-mixed", 14},
      {"flory", 14},         {"flory-k2", 14},   {"flory-k3", 14},      {"grid2", 12},
      {"grid3", 9}};
  for (const auto& [token, nMax] : ranges) {
    const auto& info = model_info(token);
    const auto aut = build_automaton(info.spec);
    for (int n = 0; n <= nMax; ++n) {
      const mpz_class brute = static_cast<unsigned long>(enumerate_maximal(info.spec, n).size());
      o.require(count_length(aut, n) == brute, std::string(token) + " n=" + std::to_string(n));
    }
  }
  o.detail << ranges.size() << " models";
}

void criterion8(Outcome& o) {
  o.require(config_to_permutation(Configuration::parse("10110")).to_string() == "(3,1,5,2,4,8,9,6,7)",
            "10110 -> permutation");
  o.require(config_to_p3walk(Configuration::parse("10110")).to_string() == "1001→11→101→101→11→1001→11→1001",
            "10110 -> P3 walk");
  o.require(composition_to_flory_config(2, {{3, 5, 3}, {3, 4, 5}}) == Configuration::parse("200002"),
            "3+5+3 -> 200002");
  o.require(tuple_to_flory_config(2, {1, 1, 0, 2}) == Configuration::parse("02000200200") &&
                flory_config_to_tuple(2, Configuration::parse("02000200200")) == std::vector<int>{1, 1, 0, 2},
            "(1,1,0,2) <-> 02000200200");

  long roundTrips = 0;
  std::map<int, long> byHouses;
  for (int n = 0; n <= 16; ++n) {
    const auto configs = enumerate_maximal(ModelSpec::riviera(), n);
    std::set<std::vector<int>> perms;
    for (const auto& c : configs) {
      const auto p = config_to_permutation(c);
      o.require(permutation_to_config(p) == c, "permutation round trip " + c.to_string());
      o.require(p3walk_to_config(config_to_p3walk(c)) == c, "P3 round trip " + c.to_string());
      perms.insert(p.images);
      ++byHouses[c.house_count()];
      roundTrips += 2;
    }
    o.require(perms.size() == configs.size(), "permutation injectivity");
    if (n <= 10)
      o.require(enumerate_restricted_permutations(n + 4, {-2, -1, 2}).size() == configs.size(),
                "permutation count n=" + std::to_string(n));
  }
  const auto hs = series_coeffs(fixtures::riviera_h(), "x", 8);
  for (int k = 1; k <= 8; ++k) {
    o.require(hs[k] == Poly(byHouses[k]), "h_" + std::to_string(k));
    o.require(Poly(static_cast<long>(enumerate_p3walks(k + 4).size())) == hs[k], "P3 walks k=" + std::to_string(k));
  }

  for (int k = 1; k <= 3; ++k) {
    std::vector<int> parts;
    for (int p = k + 1; p <= 2 * k + 1; ++p) parts.push_back(p);
    std::map<int, std::set<std::vector<int>>> tuples;
    for (int n = 0; n <= 14; ++n) {
      const auto configs = enumerate_maximal(ModelSpec::flory(k), n);
      o.require(enumerate_compositions(n + 2 * k + 1, parts).size() == configs.size(),
                "composition count k=" + std::to_string(k) + " n=" + std::to_string(n));
      for (const auto& c : configs) {
        o.require(composition_to_flory_config(k, flory_config_to_composition(k, c)) == c,
                  "composition round trip " + c.to_string());
        ++roundTrips;
        if (c.house_count() == 0) continue;
        const auto t = flory_config_to_tuple(k, c);
        o.require(tuple_to_flory_config(k, t) == c, "tuple round trip " + c.to_string());
        tuples[c.house_count()].insert(t);
        ++roundTrips;
      }
    }
    // length 14 covers every configuration with h houses when h(2k+1) <= 14
    for (int h = 1; h * (2 * k + 1) <= 14; ++h) {
      long expected = 1;
      for (int i = 0; i <= h; ++i) expected *= k + 1;
      o.require(static_cast<long>(tuples[h].size()) == expected,
                "tuple count k=" + std::to_string(k) + " h=" + std::to_string(h));
    }
  }

  const WordDigraph g = build_permutation_digraph();
  o.require(g.size() == 30, "digraph has " + std::to_string(g.size()) + " nodes");
  const WordDigraph p = condense_permutation_digraph(g);
  const WordDigraph r = digraph_of(higher_edge_graph(riviera_fixed_automaton(), 6));
  const size_t isos = count_isomorphisms(p, r);
  o.require(isos == 1, std::to_string(isos) + " isomorphisms");
  o.detail << roundTrips << " round trips; digraph 30 nodes; 1 isomorphism";
}

// Plain 2^n scan, independent of the pruned search.
long brute_count(const ModelSpec& spec, int n) {
  long total = 0;
  for (long mask = 0; mask < (1L << n); ++mask) {
    std::vector<int> cells(n);
    for (int i = 0; i < n; ++i) cells[i] = (mask >> i) & 1;
    const Configuration c(cells);
    if (is_permissible(spec, c) && is_maximal(spec, c)) ++total;
  }
  return total;
}

void criterion9(Outcome& o) {
  const auto aut = riviera_fixed_automaton();
  for (Boundary b : {Boundary::NoSun, Boundary::Periodic}) {
    const ModelSpec spec = ModelSpec::riviera().with_boundary(b);
    for (int n = 0; n <= 18; ++n)
      o.require(count_length(aut, n, b) == brute_count(spec, n), to_string(b) + " n=" + std::to_string(n));
  }
  o.detail << "no-sun and periodic, n = 0..18";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limitSeconds;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "Riviera length sequence", 1, criterion1},
      {2, "Riviera generating functions and recurrences", 1, criterion2},
      {3, "coefficient tables", 10, criterion3},
      {4, "exact row n = 100", 5, criterion4},
      {5, "appendix identities", 300, criterion5},
      {6, "asymptotic constants", 10, criterion6},
      {7, "automaton vs exhaustive search", 300, criterion7},
      {8, "bijections", 60, criterion8},
      {9, "boundary variants", 60, criterion9},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(secs < c.limitSeconds, "over time limit");
    if (!o.ok) ++failures;
    std::printf("criterion %2d: %s  %-46s %8.3f s (limit %g s)  %s\n", c.id, o.ok ? "PASS" : "FAIL", c.name, secs,
                c.limitSeconds, o.detail.str().c_str());
  }
  std::printf("criterion 10: N/A   %-46s not reproducible: closed form is open; see criterion 4\n",
              "complexity function closed form");
  std::printf("%d of 9 checkable criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
