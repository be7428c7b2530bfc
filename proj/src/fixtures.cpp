#include "sunstrip/fixtures.hpp"

#include "sunstrip/errors.hpp"

namespace sunstrip::fixtures {

RationalGF riviera_f() { return RationalGF::parse("(1+y+y^3-y^5)/(1-y^2-y^3-y^4+y^6)"); }

RationalGF riviera_g() {
  return RationalGF::parse("(1+xy-(x-x^2)y^2+x^2y^3-x^3y^5)/(1-xy^2-x^2y^3-x^2y^4+x^3y^6)");
}

RationalGF riviera_h() { return RationalGF::parse("(1+2x^2-x^3)/(1-x-2x^2+x^3)"); }

namespace {

struct RawGF {
  const char* model;
  const char* sign;
  const char* vars;
  const char* p;
  const char* q;
};

// Transcribed verbatim; a leading "-" means F = -p/q.
const RawGF kRaw[] = {
  {"two_story", "-", "x,y",
    "x^3y^9 + 3x^3y^8 + 3x^3y^7 + (x^3 - x^2)y^6 - 3x^2y^5 - 4x^2y^4 + (x - 3x^2)y^3"
    " - x^2y^2 - xy - 1",
    "x^3y^{10} + 2x^3y^9 + x^3y^8 - x^2y^7 - 2x^2y^6 - 2x^2y^5 - x^2y^4 - xy^3 + 1"},
  {"mixed_riviera", "", "x,y,z",
    "x^6y^3z^{17} + ((x^4 - x^5)y^3 + x^6y^2)z^{15} + ((2x^4 - x^5)y^3"
    " - x^6y^2)z^{14} + ((-3x^4 - x^3)y^3 - x^5y^2)z^{13} + ((-2x^4 - 3x^3 + 2x^2)y^3"
    " + (x^4 - 2x^5)y^2)z^{12} + ((-3x^3 - x^2)y^3 - 4x^4y^2)z^{11} + ((-x^3"
    " - 8x^2)y^3 + x^3y^2)z^{10} + ((-4x^2 - 2x + 1)y^3 + (x^3 - x^2)y^2)z^9 + ((2x^3"
    " + x^2)y^2 - 4xy^3)z^8 + ((-2x - 2)y^3 + 6x^2y^2)z^7 + ((2x^2 + 4x - 1)y^2"
    " - y^3)z^6 + ((6x - 1)y^2 - 2x^2y)z^5 + ((2x + 2)y^2 - x^2y)z^4 + (3y^2 - y"
    " - x^2)z^3 + y^2z^2 + yz + 1",
    "x^6y^3z^{17} + ((x^5 + x^4)y^3 + x^6y^2)z^{15} + 4x^4y^3z^{14} + (x^3y^3"
    " + x^5y^2)z^{13} + ((3x^3 + 3x^2)y^3 + 2x^4y^2)z^{12} + (4x^2y^3 - x^4y^2)z^{11}"
    " + (2xy^3 + x^3y^2)z^{10} + ((2x + 1)y^3 + (-x^3 - 2x^2)y^2)z^9 + (y^3"
    " - 3x^2y^2)z^8 + (-x^2 - 2x)y^2z^7 + (-2x - 1)y^2z^6 + (-2y^2 - 2x^2y)z^5"
    " - y^2z^4 + (-y - x^2)z^3 + 1"},
  {"mixed_flory", "-", "x,y,z",
    "x^2yz^8 + x^2yz^7 - xyz^6 - 2xyz^5 + ((1 - 2x)y + 2x^2)z^4 + ((2 - x)y + x^2)z^3"
    " + (2y - x)z^2 + yz + 1",
    "x^2yz^9 - xyz^7 - xyz^6 + ((1 - x)y + x^2)z^5 + yz^4 + yz^3 + xz^2 - 1"},
  {"grid2", "-", "x,y",
    "x^8y^5 - (x^5 + x^4)y^3 + (2x^3 - x^4)y^2 + (x - x^2)y - 1",
    "x^9y^6 - x^6y^4 + (x^4 - x^5)y^3 - x^3y^2 - xy + 1"},
  {"grid3", "-", "x,y",
    "(x^{40} - x^{39})y^{19} + (2x^{38} - x^{37})y^{18} + (-2x^{37} + 3x^{36}"
    " - 2x^{35} + x^{34} - x^{33})y^{17} + (-5x^{35} + x^{34} + 4x^{33} - x^{32}"
    " - x^{31})y^{16} + (-3x^{33} - x^{32} + 5x^{31} - x^{30} - 2x^{29})y^{15}"
    " + (4x^{31} - 9x^{30} + 12x^{29} - 7x^{28} + x^{26})y^{14} + (15x^{29}"
    " - 13x^{28} + 4x^{27} - 3x^{26} - 2x^{25} + x^{24})y^{13} + (9x^{27} - 9x^{26}"
    " + 3x^{25} + 2x^{22})y^{12} + (11x^{24} - 11x^{23} + 12x^{22} - 5x^{21})y^{11}"
    " + (-15x^{23} + 34x^{22} - 11x^{21} + 9x^{20} - 7x^{19})y^{10} + (-9x^{21}"
    " + 30x^{20} - 14x^{19} + 7x^{18} - 9x^{17} + x^{16})y^9 + (-4x^{19} + 14x^{18}"
    " + 4x^{16} - x^{14} + x^{13})y^8 + (5x^{17} - 23x^{16} + 10x^{15} + x^{14}"
    " + x^{13} - x^{12})y^7 + (3x^{15} - 21x^{14} + 20x^{13} - 2x^{12} + x^{11}"
    " - x^{10} - x^9)y^6 + (2x^{13} - 15x^{12} + 15x^{11} + 2x^{10})y^5 + (-3x^{10}"
    " - 3x^9 + x^8 - x^7 + x^6)y^4 + (-x^8 - 5x^7 + x^6 + x^5)y^3 + (-x^6 + x^4"
    " + x^3)y^2 - x^3y - 1",
    "(x^{41} - x^{40})y^{20} + (2x^{39} - x^{38})y^{19} + (-2x^{38} + 3x^{37}"
    " - 2x^{36})y^{18} + (-5x^{36} + x^{35} + 3x^{34} - 2x^{33})y^{17} + (-3x^{34}"
    " - x^{33} + 5x^{32} - 2x^{31})y^{16} + (4x^{32} - 7x^{31} + 10x^{30}"
    " - 4x^{29})y^{15} + (15x^{30} - 8x^{29} + 4x^{28} - x^{26})y^{14} + (9x^{28}"
    " - 6x^{27} - 2x^{26} + x^{25} - x^{24})y^{13} + (7x^{25} - 11x^{24} + 7x^{23}"
    " - 2x^{22})y^{12} + (-15x^{24} + 19x^{23} - 12x^{22} + 5x^{21} - 3x^{20})y^{11}"
    " + (-9x^{22} + 21x^{21} - 6x^{20} + 6x^{19})y^{10} + (-4x^{20} + 14x^{19}"
    " + 2x^{18} + 6x^{17} + 3x^{16})y^9 + (5x^{18} - 8x^{17} + 6x^{16} - x^{15}"
    " + x^{14} - x^{13})y^8 + (3x^{16} - 12x^{15} + 4x^{14} - x^{13})y^7 + (2x^{14}"
    " - 11x^{13} - x^{12} + 3x^{11} + x^{10} + x^9)y^6 + (-8x^{11} - 6x^{10}"
    " + x^9)y^5 + (-4x^9 - 4x^8 + x^7 - x^6)y^4 + (-3x^7 - x^5)y^3 + (-x^4 - x^3)y^2"
    " + 1"},
};

const char* token_for(const std::string& raw) {
  if (raw == "two_story") return "riviera-k2";
  if (raw == "mixed_riviera") return "riviera-mixed";
  if (raw == "mixed_flory") return "flory-mixed";
  if (raw == "grid2") return "grid2";
  return "grid3";
}

}  // namespace

const std::vector<AppendixGF>& appendix() {
  static const std::vector<AppendixGF> all = [] {
    std::vector<AppendixGF> out;
    for (const auto& r : kRaw) {
      Poly p = Poly::parse(r.p);
      if (std::string(r.sign) == "-") p = -p;
      AppendixGF a{token_for(r.model), RationalGF(p, Poly::parse(r.q)), {}, {}};
      if (std::string(r.vars) == "x,y") {
        a.occupancyVars = {"x"};
        a.lengthVar = "y";
      } else {
        a.occupancyVars = {"x", "y"};
        a.lengthVar = "z";
      }
      out.push_back(std::move(a));
    }
    return out;
  }();
  return all;
}

bool has_appendix(const std::string& model) {
  for (const auto& a : appendix())
    if (a.model == model) return true;
  return false;
}

const AppendixGF& appendix_for(const std::string& model) {
  for (const auto& a : appendix())
    if (a.model == model) return a;
  throw DomainError("no bundled generating function for model " + model);
}

const std::vector<CoefficientTable>& coefficient_tables() {
  static const std::vector<CoefficientTable> tables{
      {"riviera", 10, 17,
       {{0, 0, 1}, {1, 1, 1}, {2, 2, 1}, {2, 3, 3}, {2, 4, 1}, {3, 4, 2}, {3, 5, 3}, {4, 5, 1},
        {4, 6, 6}, {4, 7, 6}, {5, 7, 3}, {4, 8, 1}, {5, 8, 10}, {6, 8, 1}, {5, 9, 6}, {6, 9, 10},
        {6, 10, 20}, {7, 10, 4}, {6, 11, 10}, {7, 11, 22}, {8, 11, 1}, {6, 12, 1}, {7, 12, 30},
        {8, 12, 15}, {7, 13, 10}, {8, 13, 49}, {9, 13, 5}, {8, 14, 50}, {9, 14, 40}, {10, 14, 1},
        {8, 15, 15}, {9, 15, 91}, {10, 15, 21}, {8, 16, 1}, {9, 16, 70}, {10, 16, 100},
        {9, 17, 15}, {10, 17, 168}}},
      {"riviera-k2", 7, 15,
       {{0, 0, 1}, {1, 1, 1}, {2, 2, 1}, {2, 3, 3}, {2, 4, 6}, {2, 5, 5}, {3, 5, 2}, {2, 6, 3},
        {3, 6, 4}, {4, 6, 1}, {2, 7, 1}, {3, 7, 5}, {4, 7, 5}, {3, 8, 2}, {4, 8, 16}, {4, 9, 27},
        {5, 9, 3}, {4, 10, 31}, {5, 10, 12}, {6, 10, 1}, {4, 11, 24}, {5, 11, 28}, {6, 11, 7},
        {4, 12, 13}, {5, 12, 36}, {6, 12, 31}, {4, 13, 5}, {5, 13, 29}, {6, 13, 80}, {7, 13, 4},
        {4, 14, 1}, {5, 14, 14}, {6, 14, 142}, {7, 14, 24}, {5, 15, 3}, {6, 15, 177},
        {7, 15, 82}}},
      {"grid2", 17, 10,
       {{0, 0, 1}, {2, 1, 1}, {4, 2, 1}, {5, 3, 4}, {6, 4, 4}, {7, 4, 2}, {7, 5, 4}, {8, 5, 5},
        {9, 5, 1}, {8, 6, 4}, {9, 6, 4}, {10, 6, 8}, {9, 7, 4}, {10, 7, 4}, {11, 7, 18},
        {12, 7, 3}, {10, 8, 4}, {11, 8, 4}, {12, 8, 25}, {13, 8, 16}, {14, 8, 1}, {11, 9, 4},
        {12, 9, 4}, {13, 9, 33}, {14, 9, 31}, {15, 9, 13}, {12, 10, 4}, {13, 10, 4}, {14, 10, 41},
        {15, 10, 42}, {16, 10, 50}, {17, 10, 4}}},
      {"grid3", 17, 9,
       {{0, 0, 1}, {3, 1, 1}, {6, 2, 1}, {7, 3, 9}, {8, 3, 1}, {8, 4, 4}, {9, 4, 8}, {10, 4, 7},
        {10, 5, 12}, {11, 5, 8}, {12, 5, 20}, {13, 5, 1}, {12, 6, 24}, {13, 6, 12}, {14, 6, 65},
        {15, 6, 4}, {13, 7, 24}, {14, 7, 12}, {15, 7, 84}, {16, 7, 122}, {17, 7, 27}, {14, 8, 4},
        {15, 8, 40}, {16, 8, 40}, {17, 8, 228}, {16, 9, 24}, {17, 9, 44}}},
  };
  return tables;
}

const std::vector<std::string>& riviera_row_100() {
  static const std::vector<std::string> row{
      "1",           "40950",          "47298420",        "7491483870",     "308534750280",
      "4489680958620", "27525656572050", "79341335532896", "115332553142708", "88281950244176",
      "36391488209400", "8109317836050", "961479094515",   "58247672238",     "1668933267",
      "19597456",      "70345",          "34"};
  return row;
}

}  // namespace sunstrip::fixtures
