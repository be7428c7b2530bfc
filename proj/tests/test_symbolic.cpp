#include "doctest.h"

#include "sunstrip/errors.hpp"
#include "sunstrip/fixtures.hpp"
#include "sunstrip/models.hpp"
#include "sunstrip/symbolic.hpp"

using namespace sunstrip;

namespace {

RationalGF gf_of(const std::string& token) {
  const auto& info = model_info(token);
  return resolvent_gf(build_automaton(info.spec), info.occupancyVars, info.lengthVar);
}

}  // namespace

TEST_CASE("Riviera resolvent gives f and g") {
  auto fixed = riviera_fixed_automaton();
  RationalGF g = resolvent_gf(fixed, {"x"}, "y");
  CHECK(ratfunc_equal(g, fixtures::riviera_g()));
  CHECK(ratfunc_equal(g.substitute("x", Poly(1)), fixtures::riviera_f()));
  CHECK(g.denominator() == Poly::parse("1-xy^2-x^2y^3-x^2y^4+x^3y^6"));
  CHECK(ratfunc_equal(gf_of("riviera"), fixtures::riviera_g()));
  CHECK_THROWS_AS(resolvent_gf(fixed, {"x", "z"}, "y"), DomainError);
  CHECK_THROWS_AS(resolvent_gf(fixed, {"y"}, "y"), DomainError);
}

TEST_CASE("appendix identities") {
  for (const auto& a : fixtures::appendix()) {
    INFO(a.model);
    CHECK(ratfunc_equal(gf_of(a.model), a.gf));
  }
}

TEST_CASE("resolvent series agree with exhaustive censuses") {
  for (const char* token : {"riviera", "flory", "riviera-k2", "flory-k2", "flory-k3", "riviera-mixed",
                            "flory-mixed", "grid2", "grid3"}) {
    INFO(token);
    const auto& info = model_info(token);
    const int N = info.spec.is_planar() ? 8 : 12;
    auto series = series_coeffs(gf_of(token), info.lengthVar, N);
    const CensusTable truth = census(info.spec, N);
    for (int n = 0; n <= N; ++n) {
      Poly expected;
      for (const auto& [v, c] : truth.row(n)) expected += Poly::monomial(info.occupancyVars, v, c);
      CHECK(series[n] == expected);
    }
  }
}

TEST_CASE("k-story Flory length GF is a composition GF") {
  for (int k = 1; k <= 4; ++k) {
    INFO("k = " << k);
    RationalGF f = gf_of(k == 1 ? "flory" : "flory-k" + std::to_string(k)).substitute("x", Poly(1));
    Poly den(1);
    for (int i = k + 1; i <= 2 * k + 1; ++i) den -= Poly::variable("y").pow(i);
    auto compositions = series_coeffs(RationalGF(Poly(1), den), "y", 40 + 2 * k + 1);
    auto counts = series_coeffs(f, "y", 40);
    for (int n = 0; n <= 40; ++n) CHECK(counts[n] == compositions[n + 2 * k + 1]);
    auto rec = recurrence_from_denominator(f, "y");
    CHECK(rec.coeffs.size() == static_cast<size_t>(2 * k + 1));
  }
}

TEST_CASE("reconstruction agrees with the resolvent") {
  auto fixed = riviera_fixed_automaton();
  RationalGF f = reconstructed_gf(fixed, {"x"}, "y", 6).substitute("x", Poly(1));
  CHECK(ratfunc_equal(f, fixtures::riviera_f()));

  std::vector<Poly> first15 = automaton_series(fixed, {"x"}, 14);
  for (auto& p : first15) p = p.substitute("x", Poly(1));
  CHECK(ratfunc_equal(minimal_ratfunc_from_series(first15, "y", 6), fixtures::riviera_f()));

  for (const char* token : {"riviera", "riviera-k2", "grid2", "flory-mixed"}) {
    INFO(token);
    const auto& info = model_info(token);
    auto aut = build_automaton(info.spec);
    GFOptions opts;
    opts.forceReconstruction = true;
    GFResult r = automaton_gf(aut, info.occupancyVars, info.lengthVar, opts);
    CHECK(r.method == "reconstruction");
    CHECK(ratfunc_equal(r.gf, resolvent_gf(aut, info.occupancyVars, info.lengthVar)));
  }
  GFResult small = automaton_gf(fixed, {"x"}, "y");
  CHECK(small.method == "resolvent");
}

TEST_CASE("3xn reconstruction with bound 20 matches the appendix") {
  const auto& info = model_info("grid3");
  GFOptions opts;
  opts.degreeBound = 20;
  GFResult r = automaton_gf(build_automaton(info.spec), info.occupancyVars, info.lengthVar, opts);
  CHECK(ratfunc_equal(r.gf, fixtures::appendix_for("grid3").gf));
  CHECK(r.gf.denominator().degree("y") == 20);
}
