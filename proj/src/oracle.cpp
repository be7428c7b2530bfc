#include "sunstrip/oracle.hpp"

#include <algorithm>
#include <set>

#include "sunstrip/errors.hpp"

namespace sunstrip {

mpz_class CensusTable::at(const Occupancy& v, int n) const {
  auto it = counts.find({v, n});
  return it == counts.end() ? mpz_class(0) : it->second;
}

mpz_class CensusTable::length_total(int n) const {
  mpz_class sum = 0;
  for (const auto& [key, c] : counts)
    if (key.second == n) sum += c;
  return sum;
}

std::vector<std::pair<Occupancy, mpz_class>> CensusTable::row(int n) const {
  std::vector<std::pair<Occupancy, mpz_class>> out;
  for (const auto& [key, c] : counts)
    if (key.second == n && c != 0) out.emplace_back(key.first, c);
  return out;
}

namespace {

class Search {
 public:
  Search(const ModelSpec& spec, int n, const std::function<void(const Configuration&)>& visit,
         const OracleOptions& opts)
      : spec_(spec), n_(n), visit_(visit), budget_(opts.budget),
        config_(spec.width, n), alphabet_(spec.alphabet()), K_(spec.shade_radius()) {}

  void run() {
    if (n_ == 0) {
      if (is_maximal(spec_, config_)) visit_(config_);
      return;
    }
    descend(0);
  }

 private:
  void descend(int i) {
    for (int letter : alphabet_) {
      if (++visits_ > budget_)
        throw ResourceError("exhaustive search exceeded the budget of " +
                            std::to_string(budget_) + " nodes");
      config_.set_letter(i, letter);
      if (!prefix_ok(i)) continue;
      if (i + 1 == n_) {
        if (is_maximal(spec_, config_)) visit_(config_);
      } else {
        descend(i + 1);
      }
    }
    config_.set_letter(i, 0);
  }

  // Unassigned cells read as empty, which only lowers shadows, so a house
  // found unlit here stays unlit in every completion.
  bool prefix_ok(int i) const {
    detail::Frame f(spec_, config_, i + 1);
    for (int c = std::max(0, i - K_); c <= i; ++c)
      for (int r = 0; r < spec_.width; ++r)
        if (!detail::house_lit(f, r, c)) return false;
    const int p = i - 2 * K_;
    if (p < 0) return true;
    if (spec_.boundary == Boundary::Periodic && p - 2 * K_ < 0) return true;
    for (int r = 0; r < spec_.width; ++r)
      if (detail::site_upgradable(f, r, p)) return false;
    return true;
  }

  const ModelSpec& spec_;
  int n_;
  const std::function<void(const Configuration&)>& visit_;
  std::uint64_t budget_;
  std::uint64_t visits_ = 0;
  Configuration config_;
  std::vector<int> alphabet_;
  int K_;
};

}  // namespace

void for_each_maximal(const ModelSpec& spec, int n,
                      const std::function<void(const Configuration&)>& visit,
                      const OracleOptions& opts) {
  spec.validate();
  if (n < 0) throw DomainError("length must be non-negative");
  Search(spec, n, visit, opts).run();
}

std::vector<Configuration> enumerate_maximal(const ModelSpec& spec, int n,
                                             const OracleOptions& opts) {
  std::vector<Configuration> out;
  for_each_maximal(spec, n, [&](const Configuration& c) { out.push_back(c); }, opts);
  return out;
}

CensusTable census(const ModelSpec& spec, int nMax, const OracleOptions& opts) {
  CensusTable t{spec, nMax, {}};
  for (int n = 0; n <= nMax; ++n)
    for_each_maximal(spec, n, [&](const Configuration& c) { ++t.counts[{c.occupancy(spec), n}]; },
                     opts);
  return t;
}

std::vector<std::vector<int>> enumerate_restricted_permutations(int n, const std::vector<int>& W) {
  std::vector<int> steps(W);
  std::sort(steps.begin(), steps.end());
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
  std::vector<std::vector<int>> out;
  std::vector<int> perm(n);
  std::vector<char> used(n + 1, 0);
  std::function<void(int)> place = [&](int i) {
    if (i == n) {
      out.push_back(perm);
      return;
    }
    for (int w : steps) {
      const int v = i + 1 + w;
      if (v < 1 || v > n || used[v]) continue;
      used[v] = 1;
      perm[i] = v;
      place(i + 1);
      used[v] = 0;
    }
  };
  place(0);
  return out;
}

std::vector<std::vector<int>> enumerate_compositions(int total, const std::vector<int>& parts) {
  if (total < 0) throw DomainError("composition total must be non-negative");
  std::set<int> allowed(parts.begin(), parts.end());
  if (!allowed.empty() && *allowed.begin() < 1) throw DomainError("parts must be positive");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p : allowed) {
      if (p > left) break;
      cur.push_back(p);
      rec(left - p);
      cur.pop_back();
    }
  };
  rec(total);
  return out;
}

}  // namespace sunstrip
