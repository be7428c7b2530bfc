#include "sunstrip/automaton.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "sunstrip/errors.hpp"

namespace sunstrip {

namespace {

using Row = std::map<Occupancy, mpz_class>;

Occupancy add(Occupancy a, const Occupancy& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Occupancy word_occupancy(const ModelSpec& spec, const Word& w) {
  Occupancy v(spec.occupancy_classes(), 0);
  for (int letter : w) v = add(v, spec.letter_occupancy(letter));
  return v;
}

void sort_edges(std::vector<Edge>& edges) {
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return std::pair(a.from, a.to) < std::pair(b.from, b.to); });
}

// Builds a window automaton from a set of words of equal length, with start
// and end subsets, joining every progressively overlapping pair and keeping
// only nodes that lie on a start-to-end path.
TransferAutomaton from_windows(const ModelSpec& spec, int windowLen, const std::set<Word>& words,
                               const std::set<Word>& starts, const std::set<Word>& ends) {
  std::vector<Word> all(words.begin(), words.end());
  const size_t m = all.size();
  std::map<Word, std::vector<int>> byPrefix;
  for (size_t i = 0; i < m; ++i)
    byPrefix[Word(all[i].begin(), all[i].end() - 1)].push_back(static_cast<int>(i));
  std::vector<std::vector<int>> succ(m), pred(m);
  for (size_t i = 0; i < m; ++i) {
    auto it = byPrefix.find(Word(all[i].begin() + 1, all[i].end()));
    if (it == byPrefix.end()) continue;
    for (int j : it->second) {
      succ[i].push_back(j);
      pred[j].push_back(static_cast<int>(i));
    }
  }
  auto reach = [&](const std::set<Word>& seeds, const std::vector<std::vector<int>>& adj) {
    std::vector<char> seen(m, 0);
    std::vector<int> stack;
    for (size_t i = 0; i < m; ++i)
      if (seeds.count(all[i])) seen[i] = 1, stack.push_back(static_cast<int>(i));
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj[u])
        if (!seen[v]) seen[v] = 1, stack.push_back(v);
    }
    return seen;
  };
  auto fromStart = reach(starts, succ);
  auto toEnd = reach(ends, pred);

  TransferAutomaton aut;
  aut.spec = spec;
  aut.alphabet = spec.alphabet();
  aut.windowLen = windowLen;
  std::vector<int> remap(m, -1);
  for (size_t i = 0; i < m; ++i)
    if (fromStart[i] && toEnd[i]) {
      remap[i] = static_cast<int>(aut.nodes.size());
      aut.nodes.push_back(all[i]);
    }
  for (size_t i = 0; i < m; ++i) {
    if (remap[i] < 0) continue;
    for (int j : succ[i])
      if (remap[j] >= 0)
        aut.edges.push_back({remap[i], remap[j], spec.letter_occupancy(all[j].back())});
    if (starts.count(all[i])) aut.startNodes.push_back(remap[i]);
    if (ends.count(all[i])) aut.endNodes.push_back(remap[i]);
  }
  sort_edges(aut.edges);
  return aut;
}

// Census rows for lengths >= windowLen, one per call of step().
class Walker {
 public:
  explicit Walker(const TransferAutomaton& aut) : aut_(aut), cur_(aut.size()) {
    for (int s : aut.startNodes) cur_[s][aut.node_occupancy(s)] += 1;
  }
  Row row() const {
    Row out;
    for (int e : aut_.endNodes)
      for (const auto& [v, c] : cur_[e]) out[v] += c;
    return out;
  }
  void step() {
    std::vector<Row> next(aut_.size());
    for (const Edge& e : aut_.edges)
      for (const auto& [v, c] : cur_[e.from]) next[e.to][add(v, e.increment)] += c;
    cur_ = std::move(next);
  }

 private:
  const TransferAutomaton& aut_;
  std::vector<Row> cur_;
};

Row short_row(const TransferAutomaton& aut, int n) {
  Row out;
  for (const auto& [v, c] : aut.shortCensus.row(n)) out[v] = c;
  return out;
}

Row census_row(const TransferAutomaton& aut, int n) {
  if (n < aut.windowLen) return short_row(aut, n);
  Walker w(aut);
  for (int i = aut.windowLen; i < n; ++i) w.step();
  return w.row();
}

using IntMatrix = std::vector<std::vector<mpz_class>>;

IntMatrix adjacency(const TransferAutomaton& aut) {
  IntMatrix a(aut.size(), std::vector<mpz_class>(aut.size(), 0));
  for (const Edge& e : aut.edges) a[e.from][e.to] += 1;
  return a;
}

std::vector<mpz_class> vec_times(const std::vector<mpz_class>& v, const IntMatrix& a) {
  std::vector<mpz_class> out(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (v[i] == 0) continue;
    for (size_t j = 0; j < a.size(); ++j)
      if (a[i][j] != 0) out[j] += v[i] * a[i][j];
  }
  return out;
}

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y) {
  const size_t m = x.size();
  IntMatrix out(m, std::vector<mpz_class>(m, 0));
  for (size_t i = 0; i < m; ++i)
    for (size_t k = 0; k < m; ++k) {
      if (x[i][k] == 0) continue;
      for (size_t j = 0; j < m; ++j) out[i][j] += x[i][k] * y[k][j];
    }
  return out;
}

IntMatrix mat_pow(IntMatrix base, int e) {
  const size_t m = base.size();
  IntMatrix acc(m, std::vector<mpz_class>(m, 0));
  for (size_t i = 0; i < m; ++i) acc[i][i] = 1;
  while (e > 0) {
    if (e & 1) acc = mat_mul(acc, base);
    base = mat_mul(base, base);
    e >>= 1;
  }
  return acc;
}

bool is_fixed_riviera(const TransferAutomaton& aut) { return !aut.noSunStart.empty(); }

}  // namespace

std::string word_text(const ModelSpec& spec, const Word& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (spec.is_planar()) {
      if (i) s += '.';
      for (int r = 0; r < spec.width; ++r) s += (w[i] >> r & 1) ? '1' : '0';
    } else {
      s += std::to_string(w[i]);
    }
  }
  return s;
}

int TransferAutomaton::index_of(const Word& w) const {
  auto it = std::find(nodes.begin(), nodes.end(), w);
  return it == nodes.end() ? -1 : static_cast<int>(it - nodes.begin());
}

std::string TransferAutomaton::node_text(int i) const { return word_text(spec, nodes.at(i)); }

Occupancy TransferAutomaton::node_occupancy(int i) const { return word_occupancy(spec, nodes.at(i)); }

int TransferAutomaton::edge_index(int from, int to) const {
  for (size_t i = 0; i < edges.size(); ++i)
    if (edges[i].from == from && edges[i].to == to) return static_cast<int>(i);
  return -1;
}

std::vector<std::vector<int>> TransferAutomaton::successors() const {
  std::vector<std::vector<int>> out(size());
  for (const Edge& e : edges) out[e.from].push_back(e.to);
  return out;
}

TransferAutomaton riviera_fixed_automaton() {
  const ModelSpec spec = ModelSpec::riviera();
  TransferAutomaton aut;
  aut.spec = spec;
  aut.alphabet = spec.alphabet();
  aut.windowLen = 3;
  aut.nodes = {{0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 0, 0}, {1, 0, 1}, {1, 1, 0}};
  auto id = [&](const char* s) {
    Word w;
    for (const char* p = s; *p; ++p) w.push_back(*p - '0');
    return aut.index_of(w);
  };
  struct Arc {
    const char *from, *to;
    int label;
  };
  const Arc arcs[] = {{"011", "110", 2},  {"110", "101", -1}, {"110", "100", 2},
                      {"101", "010", 2},  {"101", "011", -1}, {"010", "101", -2},
                      {"100", "001", -2}, {"001", "011", -2}};
  std::vector<std::pair<Edge, int>> labelled;
  for (const Arc& a : arcs) {
    const int to = id(a.to);
    labelled.push_back({{id(a.from), to, spec.letter_occupancy(aut.nodes[to].back())}, a.label});
  }
  std::sort(labelled.begin(), labelled.end(), [](const auto& a, const auto& b) {
    return std::pair(a.first.from, a.first.to) < std::pair(b.first.from, b.first.to);
  });
  for (const auto& [e, label] : labelled) {
    aut.edges.push_back(e);
    aut.edgeLabels.push_back(label);
  }
  aut.startNodes = {id("011"), id("101"), id("110")};
  aut.endNodes = aut.startNodes;
  std::sort(aut.startNodes.begin(), aut.startNodes.end());
  std::sort(aut.endNodes.begin(), aut.endNodes.end());
  // Indicator vectors for the no-sun boundary, listed in the order
  // 100, 001, 011, 110, 101, 010.
  const char* order[] = {"100", "001", "011", "110", "101", "010"};
  const int b[] = {1, 0, 1, 0, 1, 1};
  const int d[] = {0, 1, 0, 1, 1, 1};
  aut.noSunStart.assign(6, 0);
  aut.noSunEnd.assign(6, 0);
  for (int i = 0; i < 6; ++i) {
    aut.noSunStart[id(order[i])] = b[i];
    aut.noSunEnd[id(order[i])] = d[i];
  }
  aut.shortCensus = census(spec, aut.windowLen - 1);
  return aut;
}

namespace {

TransferAutomaton from_corpus(const ModelSpec& spec, int windowLen, int corpusLen,
                              const OracleOptions& opts) {
  std::set<Word> words, starts, ends;
  for_each_maximal(
      spec, corpusLen,
      [&](const Configuration& c) {
        const Word w = c.letters();
        for (int i = 0; i + windowLen <= corpusLen; ++i)
          words.insert(Word(w.begin() + i, w.begin() + i + windowLen));
        starts.insert(Word(w.begin(), w.begin() + windowLen));
        ends.insert(Word(w.end() - windowLen, w.end()));
      },
      opts);
  TransferAutomaton aut = from_windows(spec, windowLen, words, starts, ends);
  aut.shortCensus = census(spec, windowLen - 1, opts);
  return aut;
}

}  // namespace

TransferAutomaton build_width1(const ModelSpec& spec, const OracleOptions& opts) {
  spec.validate();
  if (spec.is_planar()) throw DomainError("build_width1 needs a strip model");
  if (spec.boundary != Boundary::SunnyOpen)
    throw DomainError("generated automata support only the sunny open boundary");
  const int k = spec.max_height();
  return from_corpus(spec, 4 * k + 1, 8 * k + 1, opts);
}

TransferAutomaton build_planar(const ModelSpec& spec, const OracleOptions& opts) {
  spec.validate();
  if (!spec.is_planar() || (spec.width != 2 && spec.width != 3))
    throw DomainError("build_planar needs a 2xn or 3xn model");
  if (spec.boundary != Boundary::SunnyOpen)
    throw DomainError("generated automata support only the sunny open boundary");
  TransferAutomaton aut = from_corpus(spec, 5, 9, opts);
  validate_against_oracle(aut, spec.width == 2 ? 12 : 9, opts);
  return aut;
}

TransferAutomaton build_automaton(const ModelSpec& spec, const OracleOptions& opts) {
  static std::mutex mu;
  static std::map<std::vector<int>, TransferAutomaton> cache;
  std::vector<int> key{static_cast<int>(spec.insolation), spec.width, static_cast<int>(spec.boundary)};
  key.insert(key.end(), spec.storyHeights.begin(), spec.storyHeights.end());
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  TransferAutomaton aut = spec.is_planar() ? build_planar(spec, opts) : build_width1(spec, opts);
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(aut)).first->second;
}

mpz_class count_length(const TransferAutomaton& aut, int n, Boundary boundary) {
  if (n < 0) throw DomainError("length must be non-negative");
  const int w = aut.windowLen;
  switch (boundary) {
    case Boundary::SunnyOpen: {
      if (n < w) return aut.shortCensus.length_total(n);
      std::vector<mpz_class> v(aut.size(), 0);
      for (int s : aut.startNodes) v[s] = 1;
      const IntMatrix p = mat_pow(adjacency(aut), n - w);
      v = vec_times(v, p);
      mpz_class sum = 0;
      for (int e : aut.endNodes) sum += v[e];
      return sum;
    }
    case Boundary::NoSun: {
      if (!is_fixed_riviera(aut))
        throw DomainError("the no-sun boundary is only available on the fixed Riviera automaton");
      if (n < w) {
        mpz_class c = 0;
        for_each_maximal(aut.spec.with_boundary(Boundary::NoSun), n, [&](const Configuration&) { ++c; });
        return c;
      }
      std::vector<mpz_class> v(aut.noSunStart.begin(), aut.noSunStart.end());
      v = vec_times(v, mat_pow(adjacency(aut), n - w));
      mpz_class sum = 0;
      for (size_t i = 0; i < v.size(); ++i) sum += v[i] * aut.noSunEnd[i];
      return sum;
    }
    case Boundary::Periodic: {
      if (!is_fixed_riviera(aut))
        throw DomainError("the periodic boundary is only available on the fixed Riviera automaton");
      if (n == 0) return 1;
      const IntMatrix p = mat_pow(adjacency(aut), n);
      mpz_class tr = 0;
      for (size_t i = 0; i < p.size(); ++i) tr += p[i][i];
      return tr;
    }
  }
  throw DomainError("unknown boundary");
}

std::vector<mpz_class> count_lengths(const TransferAutomaton& aut, int nMax) {
  std::vector<mpz_class> out;
  for (int n = 0; n <= nMax && n < aut.windowLen; ++n) out.push_back(aut.shortCensus.length_total(n));
  if (nMax < aut.windowLen) return out;
  const IntMatrix a = adjacency(aut);
  std::vector<mpz_class> v(aut.size(), 0);
  for (int s : aut.startNodes) v[s] = 1;
  for (int n = aut.windowLen; n <= nMax; ++n) {
    mpz_class sum = 0;
    for (int e : aut.endNodes) sum += v[e];
    out.push_back(sum);
    v = vec_times(v, a);
  }
  return out;
}

Poly weighted_census_row(const TransferAutomaton& aut, int n,
                         const std::vector<std::string>& occupancyVars) {
  if (n < 0) throw DomainError("length must be non-negative");
  if (static_cast<int>(occupancyVars.size()) != aut.spec.occupancy_classes())
    throw DomainError("expected one variable per occupancy class");
  Poly out;
  for (const auto& [v, c] : census_row(aut, n)) out += Poly::monomial(occupancyVars, v, c);
  return out;
}

TransferAutomaton higher_edge_graph(const TransferAutomaton& aut, int targetWindow) {
  const int w = aut.windowLen;
  if (targetWindow < w) throw DomainError("target window shorter than the automaton window");
  // A lift by one or more letters sees every transition inside a node; the
  // identity lift must keep the original edge set.
  if (targetWindow == w) return aut;
  const int extra = targetWindow - w;
  std::set<Word> words, starts, ends;
  const auto succ = aut.successors();
  std::set<int> startSet(aut.startNodes.begin(), aut.startNodes.end());
  std::set<int> endSet(aut.endNodes.begin(), aut.endNodes.end());
  std::vector<int> path;
  std::function<void(int)> extend = [&](int u) {
    path.push_back(u);
    if (static_cast<int>(path.size()) == extra + 1) {
      Word word = aut.nodes[path.front()];
      for (size_t i = 1; i < path.size(); ++i) word.push_back(aut.nodes[path[i]].back());
      words.insert(word);
      if (startSet.count(path.front())) starts.insert(word);
      if (endSet.count(path.back())) ends.insert(word);
    } else {
      for (int v : succ[u]) extend(v);
    }
    path.pop_back();
  };
  for (size_t u = 0; u < aut.size(); ++u) extend(static_cast<int>(u));
  TransferAutomaton lift = from_windows(aut.spec, targetWindow, words, starts, ends);
  lift.shortCensus = CensusTable{aut.spec, targetWindow - 1, {}};
  for (int n = 0; n < targetWindow; ++n)
    for (const auto& [v, c] : census_row(aut, n))
      if (c != 0) lift.shortCensus.counts[{v, n}] = c;
  return lift;
}

void validate_against_oracle(const TransferAutomaton& aut, int nMax, const OracleOptions& opts) {
  const CensusTable truth = census(aut.spec, nMax, opts);
  for (int n = 0; n <= nMax; ++n) {
    Row expected;
    for (const auto& [v, c] : truth.row(n)) expected[v] = c;
    Row got;
    for (const auto& [v, c] : census_row(aut, n))
      if (c != 0) got[v] = c;
    if (got != expected)
      throw StructuralMismatch("automaton census differs from exhaustive search at length " +
                               std::to_string(n));
  }
}

std::string dump(const TransferAutomaton& aut) {
  std::ostringstream os;
  os << "window " << aut.windowLen << "\nalphabet";
  for (int a : aut.alphabet) os << ' ' << word_text(aut.spec, {a});
  os << "\nnodes " << aut.size() << '\n';
  for (size_t i = 0; i < aut.size(); ++i) os << i << ' ' << aut.node_text(static_cast<int>(i)) << '\n';
  os << "edges " << aut.edges.size() << '\n';
  for (const Edge& e : aut.edges) {
    os << e.from << ' ' << e.to << " [";
    for (size_t i = 0; i < e.increment.size(); ++i) os << (i ? "," : "") << e.increment[i];
    os << "]\n";
  }
  auto list = [&](const char* name, const std::vector<int>& v) {
    os << name;
    for (int i : v) os << ' ' << i;
    os << '\n';
  };
  list("start", aut.startNodes);
  list("end", aut.endNodes);
  return os.str();
}

}  // namespace sunstrip
