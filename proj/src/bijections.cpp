#include "sunstrip/bijections.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "sunstrip/errors.hpp"

namespace sunstrip {

namespace {

const std::vector<int> kDisplacements{-2, -1, 2};

std::string word_name(const std::vector<int>& w) {
  std::string s;
  for (int u : w) s += std::to_string(u);
  return s;
}

std::vector<int> parse_word_name(const std::string& s) {
  std::vector<int> out;
  for (size_t i = 0; i < s.size(); ++i) {
    int sign = 1;
    if (s[i] == '-') {
      sign = -1;
      ++i;
    }
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw InvalidObject("bad displacement word '" + s + "'");
    out.push_back(sign * (s[i] - '0'));
  }
  return out;
}

std::string bits(const std::vector<int>& letters) {
  std::string s;
  for (int c : letters) s += static_cast<char>('0' + c);
  return s;
}

std::vector<int> unbits(const std::string& s) {
  std::vector<int> out;
  for (char c : s) out.push_back(c - '0');
  return out;
}

void require_riviera_maximal(const Configuration& config) {
  const ModelSpec spec = ModelSpec::riviera();
  check_consistent(spec, config);
  if (!is_maximal(spec, config)) throw DomainError("configuration is not maximal in the Riviera model");
}

const TransferAutomaton& fixed_automaton() {
  static const TransferAutomaton aut = riviera_fixed_automaton();
  return aut;
}

const std::set<std::pair<std::string, std::string>>& p3_edges() {
  static const std::set<std::pair<std::string, std::string>> e{
      {"1001", "11"}, {"11", "1001"}, {"11", "101"}, {"101", "11"}, {"101", "101"}};
  return e;
}

void require_flory_maximal(int k, const Configuration& config) {
  if (k < 1) throw DomainError("story count must be positive");
  const ModelSpec spec = ModelSpec::flory(k);
  check_consistent(spec, config);
  if (!is_maximal(spec, config)) throw DomainError("configuration is not maximal in the Flory model");
}

std::vector<std::string> split_walk(const std::string& text) {
  std::string s = text;
  for (const std::string sep : {"→", "->", ","}) {
    for (size_t p = s.find(sep); p != std::string::npos; p = s.find(sep)) s.replace(p, sep.size(), " ");
  }
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Value types

void RestrictedPermutation::validate() const {
  const int n = static_cast<int>(images.size());
  std::vector<char> seen(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    const int v = images[i];
    if (v < 1 || v > n || seen[v]) throw InvalidObject("not a permutation of [" + std::to_string(n) + "]");
    seen[v] = 1;
    const int u = v - (i + 1);
    if (std::find(kDisplacements.begin(), kDisplacements.end(), u) == kDisplacements.end())
      throw InvalidObject("displacement " + std::to_string(u) + " at position " + std::to_string(i + 1) +
                          " is not in {-2,-1,2}");
  }
}

std::string RestrictedPermutation::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < images.size(); ++i) s += (i ? "," : "") + std::to_string(images[i]);
  return s + ")";
}

RestrictedPermutation RestrictedPermutation::parse(const std::string& text) {
  std::string s;
  for (char c : text) s += (c == '(' || c == ')' || c == ',') ? ' ' : c;
  std::istringstream is(s);
  RestrictedPermutation p;
  for (std::string tok; is >> tok;) {
    try {
      size_t used = 0;
      p.images.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw InvalidObject("bad permutation entry '" + tok + "'");
    } catch (const std::logic_error&) {
      throw InvalidObject("bad permutation entry '" + tok + "'");
    }
  }
  return p;
}

void P3Walk::validate() const {
  if (nodes.size() < 2 || nodes.front() != "1001" || nodes.back() != "1001")
    throw InvalidObject("walk must start and end at 1001");
  for (size_t i = 0; i + 1 < nodes.size(); ++i)
    if (!p3_edges().count({nodes[i], nodes[i + 1]}))
      throw InvalidObject("no edge " + nodes[i] + " -> " + nodes[i + 1]);
}

std::string P3Walk::to_string() const {
  std::string s;
  for (size_t i = 0; i < nodes.size(); ++i) s += (i ? "→" : "") + nodes[i];
  return s;
}

P3Walk P3Walk::parse(const std::string& text) { return P3Walk{split_walk(text)}; }

int Composition::total() const {
  int t = 0;
  for (int p : parts) t += p;
  return t;
}

void Composition::validate() const {
  for (int p : parts)
    if (std::find(partSet.begin(), partSet.end(), p) == partSet.end())
      throw InvalidObject("part " + std::to_string(p) + " is not allowed");
}

std::string Composition::to_string() const {
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) s += (i ? "+" : "") + std::to_string(parts[i]);
  return s;
}

// ---------------------------------------------------------------------------
// Riviera <-> restricted permutations

RestrictedPermutation config_to_permutation(const Configuration& config) {
  require_riviera_maximal(config);
  const auto& aut = fixed_automaton();
  const std::vector<int> ext = unbits("0110" + bits(config.letters()) + "011");
  RestrictedPermutation perm;
  int cur = aut.index_of(Word(ext.begin(), ext.begin() + 3));
  for (size_t i = 3; i < ext.size(); ++i) {
    const int next = aut.index_of(Word(ext.begin() + i - 2, ext.begin() + i + 1));
    const int e = next < 0 ? -1 : aut.edge_index(cur, next);
    if (e < 0) throw DomainError("extended word leaves the transfer digraph");
    perm.images.push_back(static_cast<int>(i - 2) + aut.edgeLabels[e]);
    cur = next;
  }
  return perm;
}

Configuration permutation_to_config(const RestrictedPermutation& perm) {
  perm.validate();
  const auto& aut = fixed_automaton();
  int cur = aut.index_of(unbits("011"));
  std::vector<int> word = unbits("011");
  for (size_t i = 0; i < perm.images.size(); ++i) {
    const int u = perm.images[i] - static_cast<int>(i + 1);
    int next = -1;
    for (size_t e = 0; e < aut.edges.size(); ++e)
      if (aut.edges[e].from == cur && aut.edgeLabels[e] == u) next = aut.edges[e].to;
    if (next < 0) throw InvalidObject("displacement sequence has no walk in the labelled digraph");
    word.push_back(aut.nodes[next].back());
    cur = next;
  }
  if (word.size() < 7 || bits(Word(word.begin(), word.begin() + 4)) != "0110" ||
      bits(Word(word.end() - 3, word.end())) != "011")
    throw InvalidObject("walk does not encode an extended configuration");
  Configuration c(Word(word.begin() + 4, word.end() - 3));
  if (!is_maximal(ModelSpec::riviera(), c)) throw InvalidObject("decoded configuration is not maximal");
  return c;
}

// ---------------------------------------------------------------------------
// Riviera <-> closed walks on P3 with a loop

P3Walk config_to_p3walk(const Configuration& config) {
  require_riviera_maximal(config);
  const std::string ext = "100110" + bits(config.letters()) + "011001";
  P3Walk walk;
  size_t start = ext.find('1');
  for (size_t next = ext.find('1', start + 1); next != std::string::npos; next = ext.find('1', next + 1)) {
    walk.nodes.push_back(ext.substr(start, next - start + 1));
    start = next;
  }
  walk.validate();
  return walk;
}

Configuration p3walk_to_config(const P3Walk& walk) {
  walk.validate();
  std::string ext = walk.nodes.front();
  for (size_t i = 1; i < walk.nodes.size(); ++i) ext += walk.nodes[i].substr(1);
  if (ext.size() < 12 || ext.substr(0, 6) != "100110" || ext.substr(ext.size() - 6) != "011001")
    throw InvalidObject("walk does not encode an extended configuration");
  Configuration c(unbits(ext.substr(6, ext.size() - 12)));
  if (!is_maximal(ModelSpec::riviera(), c)) throw InvalidObject("decoded configuration is not maximal");
  return c;
}

std::vector<P3Walk> enumerate_p3walks(int length) {
  std::vector<P3Walk> out;
  if (length < 1) return out;
  static const std::vector<std::string> order{"1001", "101", "11"};
  P3Walk cur{{"1001"}};
  std::function<void()> rec = [&] {
    if (cur.length() == length) {
      if (cur.nodes.back() == "1001") out.push_back(cur);
      return;
    }
    for (const auto& v : order) {
      if (!p3_edges().count({cur.nodes.back(), v})) continue;
      cur.nodes.push_back(v);
      rec();
      cur.nodes.pop_back();
    }
  };
  rec();
  return out;
}

// ---------------------------------------------------------------------------
// k-story Flory <-> compositions and tuples

Composition flory_config_to_composition(int k, const Configuration& config) {
  require_flory_maximal(k, config);
  std::vector<int> ext(k, 0);
  for (int c : config.letters()) ext.push_back(c);
  ext.insert(ext.end(), k, 0);
  ext.push_back(k);
  Composition comp;
  for (int p = k + 1; p <= 2 * k + 1; ++p) comp.partSet.push_back(p);
  int len = 0;
  for (int c : ext) {
    ++len;
    if (c != 0) {
      comp.parts.push_back(len);
      len = 0;
    }
  }
  comp.validate();
  return comp;
}

Configuration composition_to_flory_config(int k, const Composition& comp) {
  if (k < 1) throw DomainError("story count must be positive");
  for (int p : comp.parts)
    if (p < k + 1 || p > 2 * k + 1)
      throw InvalidObject("part " + std::to_string(p) + " outside [" + std::to_string(k + 1) + ", " +
                          std::to_string(2 * k + 1) + "]");
  if (comp.parts.empty()) throw InvalidObject("empty composition");
  std::vector<int> ext;
  for (int p : comp.parts) {
    ext.insert(ext.end(), p - 1, 0);
    ext.push_back(k);
  }
  Configuration c(std::vector<int>(ext.begin() + k, ext.end() - k - 1));
  if (!is_maximal(ModelSpec::flory(k), c)) throw InvalidObject("decoded configuration is not maximal");
  return c;
}

std::vector<int> flory_config_to_tuple(int k, const Configuration& config) {
  require_flory_maximal(k, config);
  std::vector<int> houses;
  for (int i = 0; i < config.length(); ++i)
    if (config.at(i) != 0) houses.push_back(i);
  if (houses.empty()) throw DomainError("the tuple encoding needs at least one house");
  std::vector<int> t{houses.front()};
  for (size_t i = 1; i < houses.size(); ++i) t.push_back(houses[i] - houses[i - 1] - 1 - k);
  t.push_back(config.length() - 1 - houses.back());
  return t;
}

Configuration tuple_to_flory_config(int k, const std::vector<int>& tuple) {
  if (k < 1) throw DomainError("story count must be positive");
  if (tuple.size() < 2) throw InvalidObject("tuple needs at least two entries");
  for (int t : tuple)
    if (t < 0 || t > k) throw InvalidObject("tuple entry " + std::to_string(t) + " outside [0, k]");
  std::vector<int> w(tuple.front(), 0);
  w.push_back(k);
  for (size_t i = 1; i + 1 < tuple.size(); ++i) {
    w.insert(w.end(), k + tuple[i], 0);
    w.push_back(k);
  }
  w.insert(w.end(), tuple.back(), 0);
  Configuration c(w);
  if (!is_maximal(ModelSpec::flory(k), c)) throw InvalidObject("decoded configuration is not maximal");
  return c;
}

// ---------------------------------------------------------------------------
// Digraphs

int WordDigraph::index_of(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

std::vector<std::vector<int>> WordDigraph::successors() const {
  std::vector<std::vector<int>> out(size());
  for (const auto& [a, b] : edges) out[a].push_back(b);
  return out;
}

mpz_class WordDigraph::count_walks(int steps) const {
  std::vector<mpz_class> v(size(), 0);
  for (int s : startNodes) v[s] = 1;
  for (int i = 0; i < steps; ++i) {
    std::vector<mpz_class> next(size(), 0);
    for (const auto& [a, b] : edges) next[b] += v[a];
    v = std::move(next);
  }
  mpz_class sum = 0;
  for (int e : endNodes) sum += v[e];
  return sum;
}

namespace {

using IntWord = std::vector<int>;

// Keeps nodes on start-to-end paths; words must be sorted.
WordDigraph make_digraph(const std::vector<IntWord>& words, const std::set<IntWord>& starts,
                         const std::set<IntWord>& ends, const std::function<bool(const IntWord&, const IntWord&)>& edge) {
  const size_t m = words.size();
  std::vector<std::vector<int>> succ(m), pred(m);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      if (edge(words[i], words[j])) {
        succ[i].push_back(static_cast<int>(j));
        pred[j].push_back(static_cast<int>(i));
      }
  auto reach = [&](const std::set<IntWord>& seeds, const std::vector<std::vector<int>>& adj) {
    std::vector<char> seen(m, 0);
    std::vector<int> stack;
    for (size_t i = 0; i < m; ++i)
      if (seeds.count(words[i])) seen[i] = 1, stack.push_back(static_cast<int>(i));
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj[u])
        if (!seen[v]) seen[v] = 1, stack.push_back(v);
    }
    return seen;
  };
  auto a = reach(starts, succ), b = reach(ends, pred);
  WordDigraph g;
  std::vector<int> remap(m, -1);
  for (size_t i = 0; i < m; ++i)
    if (a[i] && b[i]) {
      remap[i] = static_cast<int>(g.names.size());
      g.names.push_back(word_name(words[i]));
      if (starts.count(words[i])) g.startNodes.push_back(remap[i]);
      if (ends.count(words[i])) g.endNodes.push_back(remap[i]);
    }
  for (size_t i = 0; i < m; ++i)
    for (int j : succ[i])
      if (remap[i] >= 0 && remap[j] >= 0) g.edges.emplace_back(remap[i], remap[j]);
  return g;
}

bool overlaps(const IntWord& u, const IntWord& v) {
  return std::equal(u.begin() + 1, u.end(), v.begin(), v.end() - 1);
}

}  // namespace

WordDigraph build_permutation_digraph(int windowLen, const std::vector<int>& W) {
  if (windowLen < 3 || windowLen % 2 == 0) throw DomainError("window length must be odd and at least 3");
  std::vector<int> letters(W);
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  const int mid = (windowLen + 1) / 2;
  std::vector<IntWord> allowed;
  std::set<IntWord> starts, ends;
  IntWord w(windowLen, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == windowLen) {
      std::set<int> hit;
      for (int j = 0; j < windowLen; ++j) hit.insert(j + 1 + w[j]);
      if (!hit.count(mid)) return;
      allowed.push_back(w);
      bool start = true, end = true;
      for (int p = 1; p < mid; ++p) start = start && hit.count(p);
      for (int p = mid + 1; p <= windowLen; ++p) end = end && hit.count(p);
      if (start) starts.insert(w);
      if (end) ends.insert(w);
      return;
    }
    for (int u : letters) {
      w[i] = u;
      rec(i + 1);
    }
  };
  rec(0);
  return make_digraph(allowed, starts, ends, overlaps);
}

WordDigraph condense_permutation_digraph(const WordDigraph& g, const std::vector<int>& /*W*/) {
  std::set<IntWord> four, three, starts, ends;
  for (const auto& name : g.names) {
    const IntWord w = parse_word_name(name);
    if (w.size() < 4) throw DomainError("condensation needs windows of at least four letters");
    for (size_t i = 0; i + 4 <= w.size(); ++i) four.insert(IntWord(w.begin() + i, w.begin() + i + 4));
  }
  for (const auto& f : four) {
    three.insert(IntWord(f.begin(), f.begin() + 3));
    three.insert(IntWord(f.begin() + 1, f.end()));
  }
  for (int s : g.startNodes) {
    const IntWord w = parse_word_name(g.names[s]);
    starts.insert(IntWord(w.begin(), w.begin() + 3));
  }
  for (int e : g.endNodes) {
    const IntWord w = parse_word_name(g.names[e]);
    ends.insert(IntWord(w.end() - 3, w.end()));
  }
  std::vector<IntWord> nodes(three.begin(), three.end());
  return make_digraph(nodes, starts, ends, [&](const IntWord& u, const IntWord& v) {
    if (!overlaps(u, v)) return false;
    IntWord f(u);
    f.push_back(v.back());
    return four.count(f) > 0;
  });
}

WordDigraph digraph_of(const TransferAutomaton& aut) {
  WordDigraph g;
  for (size_t i = 0; i < aut.size(); ++i) g.names.push_back(aut.node_text(static_cast<int>(i)));
  for (const Edge& e : aut.edges) g.edges.emplace_back(e.from, e.to);
  g.startNodes = aut.startNodes;
  g.endNodes = aut.endNodes;
  return g;
}

namespace {

// Backtracking over degree-compatible assignments; stops after `limit`
// solutions and reports the first one through `first`.
size_t isomorphisms(const WordDigraph& a, const WordDigraph& b, size_t limit, std::vector<int>* first) {
  const size_t n = a.size();
  if (n != b.size() || a.edges.size() != b.edges.size()) return 0;
  std::set<std::pair<int, int>> ea(a.edges.begin(), a.edges.end()), eb(b.edges.begin(), b.edges.end());
  auto degrees = [](const WordDigraph& g) {
    std::vector<std::pair<int, int>> d(g.size(), {0, 0});
    for (const auto& [u, v] : g.edges) ++d[u].first, ++d[v].second;
    return d;
  };
  const auto da = degrees(a), db = degrees(b);

  // visit a's nodes in BFS order over the underlying undirected graph
  std::vector<std::vector<int>> und(n);
  for (const auto& [u, v] : a.edges) und[u].push_back(v), und[v].push_back(u);
  std::vector<int> order;
  std::vector<char> seen(n, 0);
  for (size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    order.push_back(static_cast<int>(s));
    for (size_t h = order.size() - 1; h < order.size(); ++h)
      for (int v : und[order[h]])
        if (!seen[v]) seen[v] = 1, order.push_back(v);
  }

  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  size_t found = 0;
  std::function<void(size_t)> rec = [&](size_t depth) {
    if (found >= limit) return;
    if (depth == n) {
      if (found++ == 0 && first) *first = map;
      return;
    }
    const int u = order[depth];
    for (size_t c = 0; c < n; ++c) {
      if (used[c] || da[u] != db[c]) continue;
      bool ok = ea.count({u, u}) == eb.count({static_cast<int>(c), static_cast<int>(c)});
      for (size_t k = 0; k < depth && ok; ++k) {
        const int v = order[k];
        ok = ea.count({u, v}) == eb.count({static_cast<int>(c), map[v]}) &&
             ea.count({v, u}) == eb.count({map[v], static_cast<int>(c)});
      }
      if (!ok) continue;
      map[u] = static_cast<int>(c);
      used[c] = 1;
      rec(depth + 1);
      used[c] = 0;
      map[u] = -1;
    }
  };
  rec(0);
  return found;
}

}  // namespace

std::vector<int> unique_isomorphism(const WordDigraph& a, const WordDigraph& b) {
  std::vector<int> map;
  const size_t count = isomorphisms(a, b, 2, &map);
  if (count == 0) throw StructuralMismatch("the digraphs are not isomorphic");
  if (count > 1) throw StructuralMismatch("the digraph isomorphism is not unique");
  return map;
}

size_t count_isomorphisms(const WordDigraph& a, const WordDigraph& b) {
  return isomorphisms(a, b, static_cast<size_t>(-1), nullptr);
}

std::vector<int> rederive_riviera_labels() {
  const auto& base = fixed_automaton();
  const WordDigraph gP = condense_permutation_digraph(build_permutation_digraph());
  const WordDigraph gR = digraph_of(higher_edge_graph(base, 6));
  const std::vector<int> iso = unique_isomorphism(gP, gR);
  std::vector<int> inverse(iso.size());
  for (size_t i = 0; i < iso.size(); ++i) inverse[iso[i]] = static_cast<int>(i);

  std::vector<std::optional<int>> labels(base.edges.size());
  for (const auto& [u, v] : gR.edges) {
    const std::string word = gR.names[u] + gR.names[v].substr(5);
    const int from = base.index_of(unbits(word.substr(3, 3)));
    const int to = base.index_of(unbits(word.substr(4, 3)));
    const int e = base.edge_index(from, to);
    if (e < 0) throw StructuralMismatch("lifted edge " + word + " has no base edge");
    const int label = parse_word_name(gP.names[inverse[v]]).back();
    if (labels[e] && *labels[e] != label)
      throw StructuralMismatch("lifted edges over one base edge carry different labels");
    labels[e] = label;
  }
  std::vector<int> out;
  for (const auto& l : labels) {
    if (!l) throw StructuralMismatch("a base edge has no lifted edge");
    out.push_back(*l);
  }
  return out;
}

}  // namespace sunstrip
