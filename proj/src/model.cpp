#include "sunstrip/model.hpp"

#include <algorithm>
#include <numeric>

#include "sunstrip/errors.hpp"

namespace sunstrip {

std::string to_string(Insolation ins) {
  switch (ins) {
    case Insolation::OrEastWest: return "OR_EAST_WEST";
    case Insolation::AndEastWest: return "AND_EAST_WEST";
    case Insolation::PlanarEsw: return "PLANAR_ESW";
  }
  return "?";
}

std::string to_string(Boundary b) {
  switch (b) {
    case Boundary::SunnyOpen: return "sunny";
    case Boundary::NoSun: return "no-sun";
    case Boundary::Periodic: return "periodic";
  }
  return "?";
}

Boundary parse_boundary(std::string_view token) {
  if (token == "sunny" || token == "open" || token == "SUNNY_OPEN") return Boundary::SunnyOpen;
  if (token == "no-sun" || token == "nosun" || token == "NO_SUN") return Boundary::NoSun;
  if (token == "periodic" || token == "PERIODIC") return Boundary::Periodic;
  throw DomainError("unknown boundary '" + std::string(token) + "'");
}

// ---------------------------------------------------------------------------
// ModelSpec

void ModelSpec::validate() const {
  if (storyHeights.empty()) throw DomainError("storyHeights must be non-empty");
  if (!std::is_sorted(storyHeights.begin(), storyHeights.end()) ||
      std::adjacent_find(storyHeights.begin(), storyHeights.end()) != storyHeights.end())
    throw DomainError("storyHeights must be sorted and unique");
  if (storyHeights.front() < 1) throw DomainError("story heights must be positive");
  if (storyHeights.back() > 9) throw DomainError("story heights above 9 are not supported");
  if (insolation == Insolation::PlanarEsw) {
    if (width != 2 && width != 3) throw DomainError("planar models need width 2 or 3");
    if (storyHeights != std::vector<int>{1}) throw DomainError("planar models are one-story");
  } else if (width != 1) {
    throw DomainError("strip models need width 1");
  }
  if (boundary != Boundary::SunnyOpen &&
      !(insolation == Insolation::OrEastWest && storyHeights == std::vector<int>{1}))
    throw DomainError("boundary " + to_string(boundary) +
                      " is defined only for the one-story OR model");
}

std::vector<int> ModelSpec::alphabet() const {
  std::vector<int> out;
  if (is_planar()) {
    for (int m = 0; m < (1 << width); ++m) out.push_back(m);
  } else {
    out.push_back(0);
    out.insert(out.end(), storyHeights.begin(), storyHeights.end());
  }
  return out;
}

std::vector<int> ModelSpec::letter_occupancy(int letter) const {
  if (is_planar()) return {std::popcount(static_cast<unsigned>(letter))};
  std::vector<int> v(storyHeights.size(), 0);
  if (letter != 0) {
    auto it = std::find(storyHeights.begin(), storyHeights.end(), letter);
    if (it == storyHeights.end()) throw DomainError("letter outside the model alphabet");
    ++v[it - storyHeights.begin()];
  }
  return v;
}

ModelSpec ModelSpec::with_boundary(Boundary b) const {
  ModelSpec s = *this;
  s.boundary = b;
  return s;
}

ModelSpec ModelSpec::riviera(int k) { return {Insolation::OrEastWest, {k}, 1, Boundary::SunnyOpen}; }
ModelSpec ModelSpec::flory(int k) { return {Insolation::AndEastWest, {k}, 1, Boundary::SunnyOpen}; }
ModelSpec ModelSpec::riviera_mixed() { return {Insolation::OrEastWest, {1, 2}, 1, Boundary::SunnyOpen}; }
ModelSpec ModelSpec::flory_mixed() { return {Insolation::AndEastWest, {1, 2}, 1, Boundary::SunnyOpen}; }
ModelSpec ModelSpec::grid(int width) { return {Insolation::PlanarEsw, {1}, width, Boundary::SunnyOpen}; }

// ---------------------------------------------------------------------------
// Configuration

Configuration::Configuration(int width, int length)
    : width_(width), length_(length), cells_(static_cast<size_t>(width) * length, 0) {
  if (width < 1 || length < 0) throw DomainError("bad configuration shape");
}

Configuration::Configuration(std::vector<int> strip)
    : width_(1), length_(static_cast<int>(strip.size())), cells_(std::move(strip)) {}

int Configuration::letter(int col) const {
  if (width_ == 1) return cells_[col];
  int m = 0;
  for (int r = 0; r < width_; ++r)
    if (at(r, col)) m |= 1 << r;
  return m;
}

void Configuration::set_letter(int col, int letter) {
  if (width_ == 1) {
    cells_[col] = letter;
    return;
  }
  for (int r = 0; r < width_; ++r) at(r, col) = (letter >> r) & 1;
}

std::vector<int> Configuration::letters() const {
  std::vector<int> out(length_);
  for (int j = 0; j < length_; ++j) out[j] = letter(j);
  return out;
}

Configuration Configuration::from_letters(int width, const std::vector<int>& letters) {
  Configuration c(width, static_cast<int>(letters.size()));
  for (int j = 0; j < c.length_; ++j) c.set_letter(j, letters[j]);
  return c;
}

std::vector<int> Configuration::occupancy(const ModelSpec& spec) const {
  std::vector<int> v(spec.occupancy_classes(), 0);
  for (int j = 0; j < length_; ++j) {
    auto inc = spec.letter_occupancy(letter(j));
    for (size_t i = 0; i < v.size(); ++i) v[i] += inc[i];
  }
  return v;
}

int Configuration::house_count() const {
  return static_cast<int>(std::count_if(cells_.begin(), cells_.end(), [](int c) { return c != 0; }));
}

Configuration Configuration::reversed() const {
  Configuration r(width_, length_);
  for (int row = 0; row < width_; ++row)
    for (int j = 0; j < length_; ++j) r.at(row, j) = at(row, length_ - 1 - j);
  return r;
}

Configuration Configuration::slice(int startCol, int len) const {
  if (startCol < 0 || len < 0 || startCol + len > length_) throw IndexError("slice out of range");
  Configuration r(width_, len);
  for (int row = 0; row < width_; ++row)
    for (int j = 0; j < len; ++j) r.at(row, j) = at(row, startCol + j);
  return r;
}

std::string Configuration::to_string() const {
  std::string s;
  for (int row = 0; row < width_; ++row) {
    if (row) s += '/';
    for (int j = 0; j < length_; ++j) s += static_cast<char>('0' + at(row, j));
  }
  return s;
}

Configuration Configuration::parse(std::string_view text) {
  std::vector<std::string_view> rows;
  size_t start = 0;
  while (true) {
    size_t slash = text.find('/', start);
    rows.push_back(text.substr(start, slash == std::string_view::npos ? std::string_view::npos
                                                                      : slash - start));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  const int len = static_cast<int>(rows.front().size());
  Configuration c(static_cast<int>(rows.size()), len);
  for (int r = 0; r < c.width_; ++r) {
    if (static_cast<int>(rows[r].size()) != len)
      throw DomainError("configuration rows differ in length: '" + std::string(text) + "'");
    for (int j = 0; j < len; ++j) {
      char ch = rows[r][j];
      if (ch < '0' || ch > '9')
        throw DomainError("configuration must be digits: '" + std::string(text) + "'");
      c.at(r, j) = ch - '0';
    }
  }
  return c;
}

void check_consistent(const ModelSpec& spec, const Configuration& config) {
  if (config.width() != spec.width)
    throw DomainError("configuration width " + std::to_string(config.width()) +
                      " does not match model width " + std::to_string(spec.width));
  for (int v : config.cells()) {
    if (v == 0) continue;
    if (!std::binary_search(spec.storyHeights.begin(), spec.storyHeights.end(), v))
      throw DomainError("cell value " + std::to_string(v) + " is not an allowed height");
  }
}

// ---------------------------------------------------------------------------
// Local rules

namespace detail {

Frame::Frame(const ModelSpec& s, const Configuration& c) : Frame(s, c, c.length()) {}
Frame::Frame(const ModelSpec& s, const Configuration& c, int knownColumns)
    : spec(&s), config(&c), known(knownColumns) {}

bool Frame::real(long col) const {
  if (spec->boundary == Boundary::Periodic) return config->length() > 0;
  return col >= 0 && col < config->length();
}

int Frame::at(int row, long col) const {
  if (row == overrideRow && col == overrideCol) return overrideValue;
  if (row < 0 || row >= config->width()) return 0;
  const long n = config->length();
  if (col < 0 || col >= n) {
    switch (spec->boundary) {
      case Boundary::SunnyOpen: return 0;
      case Boundary::NoSun:
        // An opaque wall right beyond each end, as tall as the tallest house.
        return (col == -1 || col == n) ? spec->max_height() : 0;
      case Boundary::Periodic:
        if (n == 0) return 0;
        col = ((col % n) + n) % n;
        break;
    }
  }
  if (col >= known) return 0;
  return config->at(row, static_cast<int>(col));
}

namespace {

int shadow_from(const Frame& f, long col, int dir, int reach) {
  int best = 0;
  for (int d = 1; d <= reach; ++d) best = std::max(best, f.at(0, col + dir * d) - d + 1);
  return best;
}

}  // namespace

bool house_lit(const Frame& f, int row, long col) {
  const int h = f.at(row, col);
  if (h == 0) return true;
  const ModelSpec& spec = *f.spec;
  if (spec.is_planar()) {
    const bool south = row + 1 < spec.width && f.at(row + 1, col) != 0;
    return !(f.at(row, col - 1) && f.at(row, col + 1) && south);
  }
  const int reach = spec.max_height();
  const int west = shadow_from(f, col, -1, reach);
  const int east = shadow_from(f, col, +1, reach);
  for (int s = 1; s <= h; ++s) {
    const bool ok = spec.insolation == Insolation::OrEastWest ? (s > west || s > east)
                                                              : (s > west && s > east);
    if (!ok) return false;
  }
  return true;
}

bool site_upgradable(const Frame& f, int row, long col) {
  const ModelSpec& spec = *f.spec;
  const int cur = f.at(row, col);
  const int radius = spec.shade_radius();
  for (int h : spec.storyHeights) {
    if (h <= cur) continue;
    Frame g = f;
    g.overrideRow = row;
    g.overrideCol = col;
    g.overrideValue = h;
    bool ok = true;
    for (long c = col - radius; c <= col + radius && ok; ++c) {
      if (!g.real(c)) continue;
      for (int r = 0; r < spec.width && ok; ++r) ok = house_lit(g, r, c);
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace detail

int shadow_blocked(const Configuration& config, int lot, Side side) {
  if (config.width() != 1) throw DomainError("shadow_blocked needs a strip configuration");
  if (lot < 1 || lot > config.length()) throw IndexError("lot " + std::to_string(lot) + " out of range");
  int best = 0;
  const int dir = side == Side::West ? -1 : 1;
  for (int j = lot - 1 + dir; j >= 0 && j < config.length(); j += dir) {
    const int d = std::abs(j - (lot - 1));
    best = std::max(best, config.at(j) - d + 1);
  }
  return best;
}

bool is_permissible(const ModelSpec& spec, const Configuration& config) {
  check_consistent(spec, config);
  detail::Frame f(spec, config);
  for (int c = 0; c < config.length(); ++c)
    for (int r = 0; r < config.width(); ++r)
      if (!detail::house_lit(f, r, c)) return false;
  return true;
}

bool is_maximal(const ModelSpec& spec, const Configuration& config) {
  if (!is_permissible(spec, config)) return false;
  detail::Frame f(spec, config);
  for (int c = 0; c < config.length(); ++c)
    for (int r = 0; r < config.width(); ++r)
      if (detail::site_upgradable(f, r, c)) return false;
  return true;
}

std::string DecoratedPattern::to_string() const {
  std::string s;
  for (int i = 0; i < static_cast<int>(letters.size()); ++i) {
    if (i == focus) s += '[';
    s += letters[i];
    if (i == focus) s += ']';
  }
  return s;
}

const std::vector<DecoratedPattern>& riviera_forbidden_patterns() {
  static const std::vector<DecoratedPattern> patterns{
      {"111", 1}, {"000", 1}, {"0100", 2}, {"0010", 1}};
  return patterns;
}

std::vector<PatternMatch> riviera_forbidden_scan(const Configuration& config) {
  if (config.width() != 1) throw DomainError("forbidden scan needs a strip configuration");
  std::vector<PatternMatch> out;
  const int n = config.length();
  auto padded = [&](int j) { return (j >= 0 && j < n) ? config.at(j) : 0; };
  for (int i = 0; i < n; ++i) {
    for (const auto& p : riviera_forbidden_patterns()) {
      bool match = true;
      for (int t = 0; t < static_cast<int>(p.letters.size()) && match; ++t)
        match = padded(i - p.focus + t) == p.letters[t] - '0';
      if (match) out.push_back({p, i + 1});
    }
  }
  return out;
}

int local_max_height(const ModelSpec& spec, const std::vector<int>& west,
                     const std::vector<int>& east) {
  spec.validate();
  if (spec.insolation != Insolation::OrEastWest)
    throw DomainError("local_max_height is defined for the OR variant");
  const int k = spec.max_height();
  if (static_cast<int>(west.size()) != 2 * k || static_cast<int>(east.size()) != 2 * k)
    throw DomainError("contexts must have length 2k");
  std::vector<int> cells(west);
  cells.push_back(0);
  cells.insert(cells.end(), east.begin(), east.end());
  Configuration window(cells);
  const ModelSpec open = spec.with_boundary(Boundary::SunnyOpen);
  check_consistent(open, window);
  const int center = 2 * k;

  auto near_center_lit = [&](const detail::Frame& f) {
    for (int c = center - k; c <= center + k; ++c)
      if (!detail::house_lit(f, 0, c)) return false;
    return true;
  };
  detail::Frame base(open, window);
  if (!near_center_lit(base)) throw DomainError("impermissible context");
  for (auto it = spec.storyHeights.rbegin(); it != spec.storyHeights.rend(); ++it) {
    detail::Frame g = base;
    g.overrideRow = 0;
    g.overrideCol = center;
    g.overrideValue = *it;
    if (near_center_lit(g)) return *it;
  }
  return 0;
}

}  // namespace sunstrip
