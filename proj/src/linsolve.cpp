#include "sunstrip/linsolve.hpp"

#include <map>
#include <optional>
#include <tuple>

#include "sunstrip/errors.hpp"

namespace sunstrip {

namespace {

using Row = std::map<int, Poly>;

struct Pivot {
  int row, col;
  Poly value;
};

class Eliminator {
 public:
  Eliminator(const PolyMatrix& M, const std::vector<Poly>* b) : n_(static_cast<int>(M.size())) {
    rows_.resize(n_);
    for (int i = 0; i < n_; ++i) {
      if (static_cast<int>(M[i].size()) != n_) throw DomainError("matrix is not square");
      for (int j = 0; j < n_; ++j)
        if (!M[i][j].is_zero()) rows_[i][j] = M[i][j];
    }
    if (b) {
      if (static_cast<int>(b->size()) != n_) throw DomainError("right-hand side has wrong length");
      rhs_ = *b;
    } else {
      rhs_.assign(n_, Poly());
    }
    activeRow_.assign(n_, true);
  }

  // Forward elimination; false when the matrix is singular.
  bool eliminate() {
    Poly prev(1);
    for (int step = 0; step < n_; ++step) {
      auto piv = choose();
      if (!piv) return false;
      const Pivot p = *piv;
      const Row pivotRow = rows_[p.row];
      const Poly pivotRhs = rhs_[p.row];
      const bool samePivot = p.value == prev;
      const bool prevOne = prev == Poly(1);
      for (int j = 0; j < n_; ++j) {
        if (!activeRow_[j] || j == p.row) continue;
        Row& row = rows_[j];
        auto hit = row.find(p.col);
        if (hit == row.end()) {
          if (samePivot) continue;
          for (auto& [c, v] : row) v = (p.value * v).exact_div(prev);
          if (!rhs_[j].is_zero()) rhs_[j] = (p.value * rhs_[j]).exact_div(prev);
          continue;
        }
        const Poly factor = hit->second;
        row.erase(hit);
        Row next;
        auto it = row.begin();
        auto pt = pivotRow.begin();
        while (it != row.end() || pt != pivotRow.end()) {
          if (pt != pivotRow.end() && pt->first == p.col) {
            ++pt;
            continue;
          }
          Poly v;
          int col;
          if (pt == pivotRow.end() || (it != row.end() && it->first < pt->first)) {
            col = it->first;
            v = p.value * it->second;
            ++it;
          } else if (it == row.end() || pt->first < it->first) {
            col = pt->first;
            v = -(factor * pt->second);
            ++pt;
          } else {
            col = it->first;
            v = p.value * it->second - factor * pt->second;
            ++it;
            ++pt;
          }
          if (!prevOne && !v.is_zero()) v = v.exact_div(prev);
          if (!v.is_zero()) next.emplace(col, std::move(v));
        }
        row = std::move(next);
        Poly r = p.value * rhs_[j] - factor * pivotRhs;
        rhs_[j] = prevOne || r.is_zero() ? r : r.exact_div(prev);
      }
      activeRow_[p.row] = false;
      pivots_.push_back(p);
      prev = p.value;
    }
    return true;
  }

  FractionFreeSolution back_substitute() const {
    FractionFreeSolution sol;
    sol.det = pivots_.back().value;
    sol.numerators.assign(n_, Poly());
    for (auto s = pivots_.rbegin(); s != pivots_.rend(); ++s) {
      Poly acc = sol.det * rhs_[s->row];
      for (const auto& [c, v] : rows_[s->row])
        if (c != s->col) acc -= v * sol.numerators[c];
      sol.numerators[s->col] = acc.exact_div(s->value);
    }
    return sol;
  }

  Poly determinant() const {
    std::vector<int> rp, cp;
    for (const auto& p : pivots_) {
      rp.push_back(p.row);
      cp.push_back(p.col);
    }
    const int sign = parity(rp) * parity(cp);
    return sign > 0 ? pivots_.back().value : -pivots_.back().value;
  }

 private:
  static int parity(std::vector<int> perm) {
    int sign = 1;
    for (size_t i = 0; i < perm.size(); ++i)
      while (perm[i] != static_cast<int>(i)) {
        std::swap(perm[i], perm[perm[i]]);
        sign = -sign;
      }
    return sign;
  }

  std::optional<Pivot> choose() const {
    std::vector<int> colCount(n_, 0);
    for (int i = 0; i < n_; ++i)
      if (activeRow_[i])
        for (const auto& [c, v] : rows_[i]) ++colCount[c];
    std::optional<Pivot> best;
    std::tuple<int, size_t, long, int, int> bestKey{};
    for (int i = 0; i < n_; ++i) {
      if (!activeRow_[i]) continue;
      const long rowCount = static_cast<long>(rows_[i].size());
      for (const auto& [c, v] : rows_[i]) {
        auto key = std::make_tuple(v.total_degree(), v.term_count(),
                                   (rowCount - 1) * static_cast<long>(colCount[c] - 1), i, c);
        if (!best || key < bestKey) {
          best = Pivot{i, c, v};
          bestKey = key;
        }
      }
    }
    return best;
  }

  int n_;
  std::vector<Row> rows_;
  std::vector<Poly> rhs_;
  std::vector<bool> activeRow_;
  std::vector<Pivot> pivots_;
};

}  // namespace

FractionFreeSolution bareiss_solve(const PolyMatrix& M, const std::vector<Poly>& b) {
  if (M.empty()) return {Poly(1), {}};
  Eliminator e(M, &b);
  if (!e.eliminate()) throw DomainError("singular linear system");
  return e.back_substitute();
}

Poly bareiss_determinant(const PolyMatrix& M) {
  if (M.empty()) return Poly(1);
  Eliminator e(M, nullptr);
  if (!e.eliminate()) return Poly();
  return e.determinant();
}

}  // namespace sunstrip
