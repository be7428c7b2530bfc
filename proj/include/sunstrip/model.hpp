#pragma once

// Model variants, configurations, and the local permissibility/maximality
// rules. Lots are numbered 1..n in the public API; rows of planar grids are
// numbered from the north (row 0) to the south (row width-1).

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sunstrip {

enum class Insolation { OrEastWest, AndEastWest, PlanarEsw };
enum class Boundary { SunnyOpen, NoSun, Periodic };
enum class Side { East, West };

std::string to_string(Insolation ins);
std::string to_string(Boundary b);
Boundary parse_boundary(std::string_view token);

struct ModelSpec {
  Insolation insolation = Insolation::OrEastWest;
  std::vector<int> storyHeights{1};  // sorted ascending, unique, positive
  int width = 1;
  Boundary boundary = Boundary::SunnyOpen;

  // Throws DomainError when the combination is not one the model supports.
  void validate() const;

  int max_height() const { return storyHeights.back(); }
  bool is_planar() const { return insolation == Insolation::PlanarEsw; }
  // Letters of a word: heights {0} ∪ storyHeights for strips, column bitmasks
  // 0..2^width-1 for planar grids.
  std::vector<int> alphabet() const;
  // Number of components in an occupancy vector.
  int occupancy_classes() const {
    return is_planar() ? 1 : static_cast<int>(storyHeights.size());
  }
  // Occupancy vector contributed by one letter.
  std::vector<int> letter_occupancy(int letter) const;
  // Local radius in columns: houses shade at most this far.
  int shade_radius() const { return is_planar() ? 1 : max_height(); }

  ModelSpec with_boundary(Boundary b) const;

  static ModelSpec riviera(int k = 1);
  static ModelSpec flory(int k = 1);
  static ModelSpec riviera_mixed();
  static ModelSpec flory_mixed();
  static ModelSpec grid(int width);

  friend bool operator==(const ModelSpec&, const ModelSpec&) = default;
};

// A width x length grid of story heights, stored row-major.
class Configuration {
 public:
  Configuration() = default;
  Configuration(int width, int length);
  explicit Configuration(std::vector<int> strip);

  int width() const { return width_; }
  int length() const { return length_; }
  bool empty() const { return length_ == 0; }

  // 0-based accessors.
  int at(int row, int col) const { return cells_[static_cast<size_t>(row) * length_ + col]; }
  int& at(int row, int col) { return cells_[static_cast<size_t>(row) * length_ + col]; }
  int at(int col) const { return cells_[col]; }
  int& at(int col) { return cells_[col]; }

  // Column as a letter: the height for strips, a bitmask (bit r = row r)
  // for grids.
  int letter(int col) const;
  void set_letter(int col, int letter);
  std::vector<int> letters() const;
  static Configuration from_letters(int width, const std::vector<int>& letters);

  const std::vector<int>& cells() const { return cells_; }
  // Occupancy vector in the model's story classes.
  std::vector<int> occupancy(const ModelSpec& spec) const;
  int house_count() const;

  Configuration reversed() const;
  Configuration slice(int startCol, int len) const;

  // Digit string for strips, rows joined by '/' (north row first) for grids.
  std::string to_string() const;
  static Configuration parse(std::string_view text);

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration& a, const Configuration& b) {
    return a.letters() <=> b.letters();
  }

 private:
  int width_ = 1;
  int length_ = 0;
  std::vector<int> cells_;
};

// Throws DomainError unless config's shape and values fit spec.
void check_consistent(const ModelSpec& spec, const Configuration& config);

struct DecoratedPattern {
  std::string letters;
  int focus = 0;
  std::string to_string() const;  // focus letter wrapped in brackets
  friend bool operator==(const DecoratedPattern&, const DecoratedPattern&) = default;
};

struct PatternMatch {
  DecoratedPattern pattern;
  int position = 0;  // 1-based lot of the focus letter
  friend bool operator==(const PatternMatch&, const PatternMatch&) = default;
};

// The four decorated words characterising one-story Riviera maximality.
const std::vector<DecoratedPattern>& riviera_forbidden_patterns();

// Height (in stories, from the ground) up to which `lot` (1-based) is shaded
// from `side`, assuming zero padding beyond the ends.
int shadow_blocked(const Configuration& config, int lot, Side side);

bool is_permissible(const ModelSpec& spec, const Configuration& config);
bool is_maximal(const ModelSpec& spec, const Configuration& config);

std::vector<PatternMatch> riviera_forbidden_scan(const Configuration& config);

// Largest height in {0} ∪ storyHeights that fits between the two 2k-lot
// contexts without breaking permissibility (k = spec.max_height()).
int local_max_height(const ModelSpec& spec, const std::vector<int>& west,
                     const std::vector<int>& east);

namespace detail {

// Read-only view of a (possibly partially assigned) configuration with the
// boundary rule applied outside [0, length) and an optional single-cell
// override. Columns in [known, length) read as empty.
struct Frame {
  const ModelSpec* spec;
  const Configuration* config;
  int known;
  int overrideRow = -1;
  long overrideCol = 0;
  int overrideValue = 0;

  Frame(const ModelSpec& s, const Configuration& c);
  Frame(const ModelSpec& s, const Configuration& c, int knownColumns);

  int at(int row, long col) const;
  // True when col indexes a real lot (which may hold a house to check).
  bool real(long col) const;
};

// Whether every story of the house at (row, col) receives light. Empty
// cells count as lit.
bool house_lit(const Frame& f, int row, long col);
// Whether raising (row, col) by any allowed step keeps the configuration
// permissible, i.e. whether the site still has room.
bool site_upgradable(const Frame& f, int row, long col);

}  // namespace detail

}  // namespace sunstrip
