#include "doctest.h"

#include <set>

#include "sunstrip/bijections.hpp"
#include "sunstrip/errors.hpp"
#include "sunstrip/fixtures.hpp"
#include "sunstrip/oracle.hpp"

using namespace sunstrip;

namespace {

using EdgeNames = std::set<std::pair<std::string, std::string>>;

EdgeNames edge_names(const WordDigraph& g) {
  EdgeNames out;
  for (const auto& [a, b] : g.edges) out.insert({g.names[a], g.names[b]});
  return out;
}

std::set<std::string> names_of(const WordDigraph& g, const std::vector<int>& idx) {
  std::set<std::string> out;
  for (int i : idx) out.insert(g.names[i]);
  return out;
}

Configuration C(const std::string& s) { return Configuration::parse(s); }

}  // namespace

TEST_CASE("permutation worked example") {
  RestrictedPermutation p = config_to_permutation(C("10110"));
  CHECK(p.to_string() == "(3,1,5,2,4,8,9,6,7)");
  std::vector<int> labels;
  for (size_t i = 0; i < p.images.size(); ++i) labels.push_back(p.images[i] - static_cast<int>(i + 1));
  CHECK(labels == std::vector<int>{2, -1, 2, -2, -1, 2, 2, -2, -2});
  CHECK(permutation_to_config(RestrictedPermutation::parse("(3,1,5,2,4,8,9,6,7)")) == C("10110"));

  auto five = enumerate_restricted_permutations(5, {-2, -1, 2});
  REQUIRE(five.size() == 1);
  CHECK(config_to_permutation(C("1")).images == five[0]);
  CHECK(permutation_to_config({five[0]}) == C("1"));
  CHECK(config_to_permutation(C("")).images.size() == 4);

  CHECK_THROWS_AS(config_to_permutation(C("100")), DomainError);
  CHECK_THROWS_AS(permutation_to_config({{1, 2, 3}}), InvalidObject);
  CHECK_THROWS_AS(permutation_to_config({{2, 1, 3}}), InvalidObject);
  // the restricted permutation of [3] is too short to carry the extension
  auto three = enumerate_restricted_permutations(3, {-2, -1, 2});
  REQUIRE(three.size() == 1);
  CHECK_THROWS_AS(permutation_to_config({three[0]}), InvalidObject);
}

TEST_CASE("permutation bijection is exhaustive up to n = 16") {
  for (int n = 0; n <= 16; ++n) {
    auto configs = enumerate_maximal(ModelSpec::riviera(), n);
    std::set<std::vector<int>> images;
    for (const auto& c : configs) {
      RestrictedPermutation p = config_to_permutation(c);
      CHECK_NOTHROW(p.validate());
      CHECK(permutation_to_config(p) == c);
      images.insert(p.images);
    }
    CHECK(images.size() == configs.size());
    if (n <= 10) {
      auto perms = enumerate_restricted_permutations(n + 4, {-2, -1, 2});
      CHECK(perms.size() == configs.size());
      CHECK(std::set<std::vector<int>>(perms.begin(), perms.end()) == images);
    }
  }
}

TEST_CASE("P3 walk bijection") {
  CHECK(config_to_p3walk(C("10110")).to_string() == "1001→11→101→101→11→1001→11→1001");
  CHECK(p3walk_to_config(P3Walk::parse("1001->11->101->101->11->1001->11->1001")) == C("10110"));
  P3Walk empty = config_to_p3walk(C(""));
  CHECK(empty.nodes == std::vector<std::string>{"1001", "11", "1001", "11", "1001"});
  CHECK(empty.length() == 4);
  CHECK_THROWS_AS(p3walk_to_config(P3Walk::parse("1001,101,1001")), InvalidObject);
  CHECK_THROWS_AS(p3walk_to_config(P3Walk::parse("11,1001")), InvalidObject);

  // closed walks of length k + 4 against configurations with k houses
  std::map<int, size_t> byHouses;
  for (int n = 0; n <= 16; ++n)
    for (const auto& c : enumerate_maximal(ModelSpec::riviera(), n)) {
      P3Walk w = config_to_p3walk(c);
      CHECK(w.length() == c.house_count() + 4);
      CHECK(p3walk_to_config(w) == c);
      ++byHouses[c.house_count()];
    }
  // every configuration with k <= 10 houses has length at most 2k <= 20;
  // lengths up to 16 cover k <= 8 completely
  const std::vector<size_t> h{1, 1, 5, 5, 14, 19, 42, 66, 131};
  for (int k = 0; k <= 8; ++k) CHECK(byHouses[k] == h[k]);
  // for k = 0 the walk 1001-11-101-11-1001 is too short to carry the extension
  CHECK(enumerate_p3walks(4).size() == 2);
  const auto hs = series_coeffs(fixtures::riviera_h(), "x", 10);
  for (int k = 1; k <= 10; ++k) {
    INFO("k = " << k);
    auto walks = enumerate_p3walks(k + 4);
    CHECK(Poly(static_cast<long>(walks.size())) == hs[k]);
    for (const auto& w : walks) CHECK(config_to_p3walk(p3walk_to_config(w)) == w);
  }
}

TEST_CASE("Flory compositions") {
  Composition c{{3, 5, 3}, {3, 4, 5}};
  CHECK(composition_to_flory_config(2, c) == C("200002"));
  CHECK(flory_config_to_composition(2, C("200200")).to_string() == "3+3+5");
  CHECK(flory_config_to_composition(2, C("")).to_string() == "5");
  CHECK_THROWS_AS(composition_to_flory_config(2, {{2, 5}, {3, 4, 5}}), InvalidObject);
  CHECK_THROWS_AS(flory_config_to_composition(2, C("2200")), DomainError);

  for (int k = 1; k <= 3; ++k)
    for (int n = 0; n <= 14; ++n) {
      INFO("k = " << k << " n = " << n);
      auto configs = enumerate_maximal(ModelSpec::flory(k), n);
      std::vector<int> parts;
      for (int p = k + 1; p <= 2 * k + 1; ++p) parts.push_back(p);
      auto comps = enumerate_compositions(n + 2 * k + 1, parts);
      CHECK(comps.size() == configs.size());
      std::set<std::vector<int>> images;
      for (const auto& cfg : configs) {
        Composition comp = flory_config_to_composition(k, cfg);
        CHECK(comp.total() == n + 2 * k + 1);
        CHECK(composition_to_flory_config(k, comp) == cfg);
        images.insert(comp.parts);
      }
      CHECK(images == std::set<std::vector<int>>(comps.begin(), comps.end()));
    }
}

TEST_CASE("Flory tuples") {
  CHECK(flory_config_to_tuple(2, C("02000200200")) == std::vector<int>{1, 1, 0, 2});
  CHECK(tuple_to_flory_config(2, {1, 1, 0, 2}) == C("02000200200"));
  CHECK(tuple_to_flory_config(2, {0, 0, 0, 0}) == C("2002002"));
  CHECK_THROWS_AS(tuple_to_flory_config(2, {3, 0}), InvalidObject);
  CHECK_THROWS_AS(tuple_to_flory_config(2, {0}), InvalidObject);
  CHECK_THROWS_AS(flory_config_to_tuple(2, C("")), DomainError);

  for (int k = 1; k <= 3; ++k) {
    // a configuration with h houses has length at most (h - 1)(2k + 1) + 2k + 1
    for (int h = 1; h <= 3; ++h) {
      INFO("k = " << k << " houses = " << h);
      std::set<std::vector<int>> tuples;
      const int maxLen = h * (2 * k + 1);
      for (int n = 0; n <= maxLen; ++n)
        for (const auto& cfg : enumerate_maximal(ModelSpec::flory(k), n)) {
          if (cfg.house_count() != h) continue;
          auto t = flory_config_to_tuple(k, cfg);
          CHECK(t.size() == static_cast<size_t>(h + 1));
          CHECK(tuple_to_flory_config(k, t) == cfg);
          tuples.insert(t);
        }
      long expected = 1;
      for (int i = 0; i <= h; ++i) expected *= k + 1;
      CHECK(static_cast<long>(tuples.size()) == expected);
    }
  }
}

TEST_CASE("permutation digraph") {
  WordDigraph g = build_permutation_digraph();
  CHECK(g.size() == 30);
  for (int n = 1; n <= 10; ++n)
    CHECK(g.count_walks(n - 1) == enumerate_restricted_permutations(n + 4, {-2, -1, 2}).size());

  WordDigraph p = condense_permutation_digraph(g);
  CHECK(p.size() == 15);
  const EdgeNames printed{
      {"-2-12", "-122"}, {"-2-12", "-12-1"}, {"-122", "22-2"},   {"-12-1", "2-12"},
      {"-12-1", "2-1-1"}, {"-2-22", "-222"}, {"-2-22", "-22-1"}, {"-222", "22-2"},
      {"-22-1", "2-12"},  {"-22-1", "2-1-1"}, {"-1-12", "-122"}, {"-1-12", "-12-1"},
      {"-22-2", "2-2-1"}, {"-22-2", "2-22"},  {"2-2-1", "-2-12"}, {"2-22", "-22-2"},
      {"2-2-2", "-2-22"}, {"22-2", "2-2-2"},  {"2-12", "-12-2"}, {"-12-2", "2-2-1"},
      {"-12-2", "2-22"},  {"2-1-1", "-1-12"}};
  CHECK(edge_names(p) == printed);
  CHECK(names_of(p, p.startNodes) == std::set<std::string>{"22-2", "2-1-1", "2-12"});
  CHECK(names_of(p, p.endNodes) == std::set<std::string>{"2-2-2", "2-1-1", "2-2-1"});
  for (int n = 1; n <= 10; ++n) CHECK(p.count_walks(n + 1) == g.count_walks(n - 1));
}

TEST_CASE("unique isomorphism with the 6-letter lift") {
  WordDigraph p = condense_permutation_digraph(build_permutation_digraph());
  WordDigraph r = digraph_of(higher_edge_graph(riviera_fixed_automaton(), 6));
  const EdgeNames printed{
      {"010110", "101100"}, {"010110", "101101"}, {"101100", "011001"}, {"101101", "011010"},
      {"101101", "011011"}, {"100110", "001100"}, {"100110", "001101"}, {"001100", "011001"},
      {"001101", "011010"}, {"001101", "011011"}, {"110110", "101100"}, {"110110", "101101"},
      {"010101", "101011"}, {"010101", "101010"}, {"101011", "010110"}, {"101010", "010101"},
      {"110011", "100110"}, {"011001", "110011"}, {"011010", "110101"}, {"110101", "101011"},
      {"110101", "101010"}, {"011011", "110110"}};
  CHECK(edge_names(r) == printed);

  CHECK(count_isomorphisms(p, r) == 1);
  auto iso = unique_isomorphism(p, r);
  auto image = [&](const char* name) { return r.names[iso[p.index_of(name)]]; };
  CHECK(image("2-2-2") == "110011");
  CHECK(image("2-1-1") == "011011");
  CHECK(image("22-2") == "011001");
  CHECK(image("2-12") == "011010");
  CHECK(image("2-2-1") == "101011");
  // walks between the images of the start and end sets spell 0110 c 011
  for (int s : p.startNodes) CHECK(r.names[iso[s]].substr(0, 4) == "0110");
  for (int e : p.endNodes) CHECK(r.names[iso[e]].substr(3) == "011");

  WordDigraph other = p;
  other.edges.pop_back();
  CHECK_THROWS_AS(unique_isomorphism(other, r), StructuralMismatch);
  // a directed 3-cycle has three automorphisms
  WordDigraph cyc{{"a", "b", "c"}, {{0, 1}, {1, 2}, {2, 0}}, {}, {}};
  CHECK(count_isomorphisms(cyc, cyc) == 3);
  CHECK_THROWS_AS(unique_isomorphism(cyc, cyc), StructuralMismatch);
}

TEST_CASE("edge labels re-derived from the isomorphism match the stored ones") {
  auto aut = riviera_fixed_automaton();
  CHECK(rederive_riviera_labels() == aut.edgeLabels);
}
