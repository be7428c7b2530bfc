#include "sunstrip/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "sunstrip/asymptotics.hpp"
#include "sunstrip/bijections.hpp"
#include "sunstrip/errors.hpp"
#include "sunstrip/fixtures.hpp"
#include "sunstrip/symbolic.hpp"

namespace sunstrip {

namespace {

class Mismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int min_houses(const Poly& row) {
  int best = -1;
  for (const auto& t : row.terms()) {
    int h = 0;
    for (int e : t.exponents) h += e;
    if (best < 0 || h < best) best = h;
  }
  return best;
}

// Houses of a row monomial, whatever the number of occupancy classes.
Poly collapse_houses(const Poly& row, const std::vector<std::string>& vars) {
  Poly out = row;
  for (size_t i = 1; i < vars.size(); ++i) out = out.substitute(vars[i], Poly::variable(vars[0]));
  return out;
}

const TransferAutomaton& automaton_for(const ModelInfo& info, Boundary b) {
  static const TransferAutomaton fixed = riviera_fixed_automaton();
  static std::map<std::string, TransferAutomaton> built;
  if (b != Boundary::SunnyOpen) return fixed;
  auto it = built.find(info.token);
  if (it == built.end()) it = built.emplace(info.token, build_automaton(info.spec)).first;
  return it->second;
}

Boundary boundary_for(const ModelInfo& info, const std::string& text) {
  const Boundary b = parse_boundary(text);
  if (b != Boundary::SunnyOpen && info.token != "riviera")
    throw CLI::ValidationError("--boundary", "only the riviera model defines no-sun and periodic boundaries");
  return b;
}

double round6(double v) { return std::round(v * 1e6) / 1e6; }

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

int infer_k(const Configuration& c) {
  int k = 0;
  for (int v : c.cells()) k = std::max(k, v);
  return std::max(k, 1);
}

std::vector<int> parse_tuple(const std::string& text) {
  std::string s;
  for (char c : text) s += (c == '(' || c == ')' || c == ',') ? ' ' : c;
  std::istringstream is(s);
  std::vector<int> out;
  for (std::string tok; is >> tok;) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used != tok.size() || tok.empty()) throw InvalidObject("bad tuple entry '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

Composition parse_composition(const std::string& text, int k) {
  Composition c;
  for (int p = k + 1; p <= 2 * k + 1; ++p) c.partSet.push_back(p);
  std::string s = text;
  for (char& ch : s)
    if (ch == '+') ch = ' ';
  std::istringstream is(s);
  for (std::string tok; is >> tok;) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used != tok.size()) throw InvalidObject("bad composition part '" + tok + "'");
    c.parts.push_back(v);
  }
  return c;
}

std::string tuple_text(const std::vector<int>& t) {
  std::string s = "(";
  for (size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

}  // namespace

std::vector<mpz_class> counts_by_houses(const ModelInfo& info, const TransferAutomaton& aut, int kMax) {
  if (kMax < 0) throw DomainError("kMax must be non-negative");
  std::vector<mpz_class> out(kMax + 1, 0);
  const int window = 2 * aut.windowLen;
  int above = 0;
  for (int n = 0; above < window; ++n) {
    const Poly row = collapse_houses(weighted_census_row(aut, n, info.occupancyVars), info.occupancyVars);
    const int lowest = min_houses(row);
    above = (lowest > kMax) ? above + 1 : 0;
    for (int k = 0; k <= kMax; ++k) out[k] += row.coefficient({{info.occupancyVars[0], k}});
    if (n > 100000) throw ResourceError("house counts did not stabilise");
  }
  return out;
}

std::string to_bfile(const std::vector<mpz_class>& terms, int offset) {
  std::string s;
  for (size_t i = 0; i < terms.size(); ++i) s += std::to_string(offset + static_cast<long>(i)) + " " + terms[i].get_str() + "\n";
  return s;
}

std::vector<std::pair<long, mpz_class>> parse_bfile(const std::string& text) {
  std::vector<std::pair<long, mpz_class>> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    long n;
    std::string v;
    if (!(ls >> n >> v)) throw DomainError("bad b-file line '" + line + "'");
    out.emplace_back(n, mpz_class(v));
  }
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximal configurations in sunlight-constrained lattice models"};
  app.require_subcommand(1);
  std::string tokens;
  for (const auto& m : model_registry()) tokens += (tokens.empty() ? "" : ", ") + m.token;
  const std::string modelHelp = "model token (" + tokens + ")";

  std::string model, boundary = "sunny", format = "csv", by = "length", outFile, method = "auto";
  std::string config, kind;
  int n = 0, nmax = 10, k = 0, degreeBound = 0;
  std::uint64_t budget = OracleOptions{}.budget;
  bool verify = false, inverse = false, json = false, recurrence = false, useOracle = false;

  auto* enumerate = app.add_subcommand("enumerate", "list maximal configurations of length n");
  enumerate->add_option("--model", model, modelHelp)->required();
  enumerate->add_option("--n", n, "length")->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--boundary", boundary, "sunny, no-sun or periodic");
  enumerate->add_option("--budget", budget, "search node budget");

  auto* count = app.add_subcommand("count", "number of maximal configurations of length n");
  count->add_option("--model", model, modelHelp)->required();
  count->add_option("--n", n, "length")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--boundary", boundary, "sunny, no-sun or periodic");
  count->add_flag("--oracle", useOracle, "count by exhaustive search instead of the automaton");
  count->add_option("--budget", budget, "search node budget");

  auto* table = app.add_subcommand("table", "occupancy census J(k, n) for n <= nmax");
  table->add_option("--model", model, modelHelp)->required();
  table->add_option("--nmax", nmax, "largest length")->required()->check(CLI::NonNegativeNumber);
  table->add_option("--format", format, "output format")->check(CLI::IsMember({"csv"}));

  auto* gf = app.add_subcommand("gf", "rational generating function");
  gf->add_option("--model", model, modelHelp)->required();
  gf->add_flag("--verify-appendix", verify, "compare with the bundled published form");
  gf->add_option("--method", method, "auto, resolvent or reconstruction")
      ->check(CLI::IsMember({"auto", "resolvent", "reconstruction"}));
  gf->add_option("--degree-bound", degreeBound, "reconstruction degree bound")->check(CLI::PositiveNumber);
  gf->add_flag("--recurrence", recurrence, "also print the length recurrence");

  auto* stats = app.add_subcommand("stats", "asymptotic report");
  stats->add_option("--model", model, modelHelp)->required();
  stats->add_option("--n", n, "also report exact finite-n statistics at this length")
      ->check(CLI::PositiveNumber);
  stats->add_flag("--json", json, "JSON output");

  auto* bijection = app.add_subcommand("bijection", "translate through one of the bijections");
  bijection->add_option("kind", kind, "perm, p3, composition or tuple")
      ->required()
      ->check(CLI::IsMember({"perm", "p3", "composition", "tuple"}));
  bijection->add_option("--config", config, "configuration, or the image object with --inverse")->required();
  bijection->add_flag("--inverse", inverse, "translate back to a configuration");
  bijection->add_option("--k", k, "Flory story count (default: inferred, or 1 with --inverse)")
      ->check(CLI::PositiveNumber);

  auto* exportCmd = app.add_subcommand("export", "write an OEIS b-file");
  exportCmd->add_option("--model", model, modelHelp)->required();
  exportCmd->add_option("--by", by, "length or houses")->check(CLI::IsMember({"length", "houses"}));
  exportCmd->add_option("--nmax", nmax, "last index")->required()->check(CLI::NonNegativeNumber);
  exportCmd->add_option("--out", outFile, "output file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    OracleOptions opts;
    opts.budget = budget;
    if (*enumerate) {
      const ModelInfo& info = model_info(model);
      const Boundary b = boundary_for(info, boundary);
      for_each_maximal(info.spec.with_boundary(b), n,
                       [&](const Configuration& c) { out << c.to_string() << '\n'; }, opts);
    } else if (*count) {
      const ModelInfo& info = model_info(model);
      const Boundary b = boundary_for(info, boundary);
      if (useOracle) {
        mpz_class c = 0;
        for_each_maximal(info.spec.with_boundary(b), n, [&](const Configuration&) { ++c; }, opts);
        out << c.get_str() << '\n';
      } else {
        out << count_length(automaton_for(info, b), n, b).get_str() << '\n';
      }
    } else if (*table) {
      const ModelInfo& info = model_info(model);
      const auto& aut = automaton_for(info, Boundary::SunnyOpen);
      const bool mixed = info.occupancyVars.size() > 1;
      out << (mixed ? "n,k1,k2,count\n" : "n,k,count\n");
      for (int len = 0; len <= nmax; ++len) {
        const Poly row = weighted_census_row(aut, len, info.occupancyVars);
        std::vector<Poly::Term> terms = row.terms();
        // terms() lists variables alphabetically, which is the class order
        std::sort(terms.begin(), terms.end(),
                  [](const Poly::Term& a, const Poly::Term& b) { return a.exponents < b.exponents; });
        for (const auto& t : terms) {
          out << len;
          std::vector<int> e(info.occupancyVars.size(), 0);
          const auto& vars = row.variables();
          for (size_t i = 0; i < vars.size(); ++i)
            for (size_t j = 0; j < info.occupancyVars.size(); ++j)
              if (vars[i] == info.occupancyVars[j]) e[j] = t.exponents[i];
          for (int x : e) out << ',' << x;
          out << ',' << t.coeff.get_str() << '\n';
        }
      }
    } else if (*gf) {
      const ModelInfo& info = model_info(model);
      const auto& aut = automaton_for(info, Boundary::SunnyOpen);
      GFOptions o;
      if (method == "reconstruction") o.forceReconstruction = true;
      if (method == "resolvent") o.maxResolventNodes = static_cast<size_t>(-1);
      if (degreeBound > 0) {
        if (method == "resolvent") throw CLI::ValidationError("--degree-bound", "only applies to reconstruction");
        o.degreeBound = degreeBound;
      }
      const GFResult r = automaton_gf(aut, info.occupancyVars, info.lengthVar, o);
      out << r.gf.to_string() << '\n';
      if (recurrence) {
        RationalGF len = r.gf;
        for (const auto& v : info.occupancyVars) len = len.substitute(v, Poly(1));
        out << recurrence_from_denominator(len, info.lengthVar).to_string() << '\n';
      }
      if (verify) {
        RationalGF reference;
        if (fixtures::has_appendix(info.token)) reference = fixtures::appendix_for(info.token).gf;
        else if (info.token == "riviera") reference = fixtures::riviera_g();
        else throw CLI::ValidationError("--verify-appendix", "no published form is bundled for " + info.token);
        if (!ratfunc_equal(r.gf, reference)) throw Mismatch("generating function differs from the published form");
        out << "verified: equal to the published form\n";
      }
    } else if (*stats) {
      const ModelInfo& info = model_info(model);
      const auto& aut = automaton_for(info, Boundary::SunnyOpen);
      const RationalGF G = automaton_gf(aut, info.occupancyVars, info.lengthVar).gf;
      const AsymptoticReport rep = asymptotic_report(info, G);
      std::optional<mpq_class> mean;
      int maxOcc = 0;
      if (n > 0) {
        const Poly row = collapse_houses(weighted_census_row(aut, n, info.occupancyVars), info.occupancyVars);
        mean = mean_occupancy_exact(row, info.occupancyVars[0]);
        maxOcc = max_occupancy(row, info.occupancyVars[0]);
      }
      if (json) {
        nlohmann::ordered_json j;
        j["model"] = rep.model;
        j["w"] = round6(rep.w);
        j["lambda"] = round6(rep.lambda);
        j["growthConstant"] = round6(rep.growthConstant);
        if (rep.occupancySlope) j["occupancySlope"] = round6(*rep.occupancySlope);
        if (rep.lengthSlope) j["lengthSlope"] = round6(*rep.lengthSlope);
        if (rep.efficiency) j["efficiency"] = round6(*rep.efficiency);
        j["rootResidual"] = rep.rootResidual;
        if (mean) {
          j["n"] = n;
          j["meanOccupancy"] = mean->get_str();
          j["maxOccupancy"] = maxOcc;
          j["efficiencyAtMax"] = round6(mean->get_d() / maxOcc);
          if (info.densityConstant) j["efficiencyAtLimit"] = round6(mean->get_d() / (n * *info.densityConstant));
        }
        out << j.dump(2) << '\n';
      } else {
        out << rep.to_text();
        if (mean) {
          out << "n: " << n << "\nmeanOccupancy: " << mean->get_str() << " (" << fixed6(mean->get_d())
              << ")\nmaxOccupancy: " << maxOcc << "\nefficiencyAtMax: " << fixed6(mean->get_d() / maxOcc) << '\n';
          if (info.densityConstant)
            out << "efficiencyAtLimit: " << fixed6(mean->get_d() / (n * *info.densityConstant)) << '\n';
        }
      }
    } else if (*bijection) {
      if (kind == "perm") {
        if (inverse) out << permutation_to_config(RestrictedPermutation::parse(config)).to_string() << '\n';
        else out << config_to_permutation(Configuration::parse(config)).to_string() << '\n';
      } else if (kind == "p3") {
        if (inverse) out << p3walk_to_config(P3Walk::parse(config)).to_string() << '\n';
        else out << config_to_p3walk(Configuration::parse(config)).to_string() << '\n';
      } else if (kind == "composition") {
        if (inverse) {
          const int kk = k > 0 ? k : 1;
          out << composition_to_flory_config(kk, parse_composition(config, kk)).to_string() << '\n';
        } else {
          const Configuration c = Configuration::parse(config);
          out << flory_config_to_composition(k > 0 ? k : infer_k(c), c).to_string() << '\n';
        }
      } else {
        if (inverse) {
          out << tuple_to_flory_config(k > 0 ? k : 1, parse_tuple(config)).to_string() << '\n';
        } else {
          const Configuration c = Configuration::parse(config);
          out << tuple_text(flory_config_to_tuple(k > 0 ? k : infer_k(c), c)) << '\n';
        }
      }
    } else if (*exportCmd) {
      const ModelInfo& info = model_info(model);
      const auto& aut = automaton_for(info, Boundary::SunnyOpen);
      const std::vector<mpz_class> terms =
          by == "length" ? count_lengths(aut, nmax) : counts_by_houses(info, aut, nmax);
      std::ofstream f(outFile);
      if (!f) throw DomainError("cannot write " + outFile);
      f << to_bfile(terms, 0);
      out << "wrote " << terms.size() << " terms to " << outFile << '\n';
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const Mismatch& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const StructuralMismatch& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace sunstrip
