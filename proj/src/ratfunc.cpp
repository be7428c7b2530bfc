#include "sunstrip/ratfunc.hpp"

#include <algorithm>

#include "sunstrip/errors.hpp"
#include "sunstrip/linsolve.hpp"

namespace sunstrip {

RationalGF::RationalGF(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("zero denominator");
  mpz_class g = gcd(num_.content(), den_.content());
  if (g < 0) g = -g;
  if (g != 1 && g != 0) {
    num_ = num_.div_scalar(g);
    den_ = den_.div_scalar(g);
  }
  const mpz_class c = den_.constant_term();
  if (c == -1) {
    num_ = -num_;
    den_ = -den_;
  } else if (c != 1) {
    throw DomainError("denominator constant term must be a unit, got " + c.get_str());
  }
}

RationalGF RationalGF::substitute(const std::string& var, const Poly& value) const {
  return RationalGF(num_.substitute(var, value), den_.substitute(var, value));
}

RationalGF RationalGF::rename(const std::map<std::string, std::string>& names) const {
  return RationalGF(num_.rename(names), den_.rename(names));
}

std::string RationalGF::to_string() const {
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalGF RationalGF::parse(std::string_view text) {
  int depth = 0;
  size_t slash = std::string_view::npos;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    else if (text[i] == ')') --depth;
    else if (text[i] == '/' && depth == 0) {
      if (slash != std::string_view::npos) throw DomainError("more than one '/' in rational function");
      slash = i;
    }
  }
  if (slash == std::string_view::npos) return RationalGF(Poly::parse(text), Poly(1));
  return RationalGF(Poly::parse(text.substr(0, slash)), Poly::parse(text.substr(slash + 1)));
}

RationalGF operator+(const RationalGF& a, const RationalGF& b) {
  if (a.denominator() == b.denominator())
    return RationalGF(a.numerator() + b.numerator(), a.denominator());
  return RationalGF(a.numerator() * b.denominator() + b.numerator() * a.denominator(),
                    a.denominator() * b.denominator());
}

RationalGF operator*(const RationalGF& a, const RationalGF& b) {
  return RationalGF(a.numerator() * b.numerator(), a.denominator() * b.denominator());
}

bool ratfunc_equal(const RationalGF& f, const RationalGF& g) {
  return f.numerator() * g.denominator() == g.numerator() * f.denominator();
}

std::vector<Poly> series_coeffs(const RationalGF& f, const std::string& mainVar, int N) {
  if (N < 0) return {};
  const auto d = f.denominator().coefficients_in(mainVar);
  const auto p = f.numerator().coefficients_in(mainVar);
  if (d.empty() || d[0] != Poly(1))
    throw DomainError("denominator is not 1 at " + mainVar + " = 0");
  std::vector<Poly> a(N + 1);
  for (int n = 0; n <= N; ++n) {
    Poly acc = n < static_cast<int>(p.size()) ? p[n] : Poly();
    for (int i = 1; i < static_cast<int>(d.size()) && i <= n; ++i)
      if (!d[i].is_zero()) acc -= d[i] * a[n - i];
    a[n] = std::move(acc);
  }
  return a;
}

Recurrence recurrence_from_denominator(const RationalGF& f, const std::string& mainVar) {
  const auto d = f.denominator().coefficients_in(mainVar);
  if (d.empty() || d[0] != Poly(1))
    throw DomainError("denominator is not 1 at " + mainVar + " = 0");
  Recurrence r;
  r.var = mainVar;
  for (size_t i = 1; i < d.size(); ++i) r.coeffs.push_back(-d[i]);
  const int order = static_cast<int>(r.coeffs.size());
  r.validFrom = std::max(order, f.numerator().degree(mainVar) + 1);
  r.initial = series_coeffs(f, mainVar, r.validFrom - 1);
  return r;
}

std::string Recurrence::to_string(const std::string& seq) const {
  std::string s = seq + "_n =";
  bool first = true;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    const Poly& c = coeffs[i];
    if (c.is_zero()) continue;
    const std::string term = seq + "_{n-" + std::to_string(i + 1) + "}";
    std::string body;
    bool neg = false;
    if (c.is_constant()) {
      mpz_class v = c.constant_term();
      neg = v < 0;
      if (neg) v = -v;
      body = v == 1 ? term : v.get_str() + "*" + term;
    } else if (c.term_count() == 1 && c.terms()[0].coeff < 0) {
      neg = true;
      body = "(" + (-c).to_string() + ")*" + term;
    } else {
      body = "(" + c.to_string() + ")*" + term;
    }
    if (first) s += neg ? " -" + body : " " + body;
    else s += neg ? " - " + body : " + " + body;
    first = false;
  }
  if (first) s += " 0";
  return s;
}

std::vector<Poly> Recurrence::extend(int N) const {
  std::vector<Poly> a(initial.begin(), initial.end());
  for (int n = static_cast<int>(a.size()); n <= N; ++n) {
    Poly acc;
    for (size_t i = 0; i < coeffs.size(); ++i)
      if (n - 1 - static_cast<int>(i) >= 0) acc += coeffs[i] * a[n - 1 - i];
    a.push_back(std::move(acc));
  }
  a.resize(std::max(N + 1, 0));
  return a;
}

namespace {

// Whether a denominator of degree D (numerator degree L) fits the sequence
// after every non-main variable is replaced by a fixed rational.
bool fits_specialised(const std::vector<mpq_class>& a, int D, int L) {
  const int N = static_cast<int>(a.size());
  std::vector<std::vector<mpq_class>> M(D, std::vector<mpq_class>(D + 1));
  for (int r = 0; r < D; ++r) {
    const int m = L + 1 + r;
    for (int i = 1; i <= D; ++i) M[r][i - 1] = a[m - i];
    M[r][D] = -a[m];
  }
  for (int c = 0; c < D; ++c) {
    int p = c;
    while (p < D && M[p][c] == 0) ++p;
    if (p == D) return false;
    std::swap(M[p], M[c]);
    for (int r = 0; r < D; ++r) {
      if (r == c || M[r][c] == 0) continue;
      const mpq_class f = M[r][c] / M[c][c];
      for (int k = c; k <= D; ++k) M[r][k] -= f * M[c][k];
    }
  }
  std::vector<mpq_class> q(D + 1);
  q[0] = 1;
  for (int i = 0; i < D; ++i) q[i + 1] = M[i][D] / M[i][i];
  for (int m = L + 1; m < N; ++m) {
    mpq_class s = 0;
    for (int i = 0; i <= D && i <= m; ++i) s += q[i] * a[m - i];
    if (s != 0) return false;
  }
  return true;
}

}  // namespace

RationalGF minimal_ratfunc_from_series(const std::vector<Poly>& coeffs, const std::string& mainVar,
                                       int degreeBound) {
  const int N = static_cast<int>(coeffs.size());
  const int B = degreeBound;
  if (B < 0) throw DomainError("negative degree bound");
  if (N < 2 * B + 1)
    throw DomainError("reconstruction needs at least " + std::to_string(2 * B + 1) + " terms");
  for (const auto& c : coeffs)
    if (c.has_variable(mainVar)) throw DomainError("series coefficients contain " + mainVar);

  // Fast screening of candidate degrees at an arbitrary rational point.
  std::map<std::string, mpq_class> point;
  static const int kPoint[] = {7, 11, 13};
  int next = 0;
  for (const auto& c : coeffs)
    for (const auto& v : c.variables())
      if (!point.count(v)) point[v] = mpq_class(kPoint[next++ % 3], 3);
  std::vector<mpq_class> special;
  for (const auto& c : coeffs) special.push_back(c.evaluate(point));

  const int L = B;
  for (int D = 0; D <= B; ++D) {
    if (!fits_specialised(special, D, L)) continue;
    std::vector<Poly> q(D + 1);
    q[0] = Poly(1);
    if (D > 0) {
      PolyMatrix H(D, std::vector<Poly>(D));
      std::vector<Poly> rhs(D);
      for (int r = 0; r < D; ++r) {
        const int m = L + 1 + r;
        for (int i = 1; i <= D; ++i) H[r][i - 1] = coeffs[m - i];
        rhs[r] = -coeffs[m];
      }
      FractionFreeSolution sol;
      try {
        sol = bareiss_solve(H, rhs);
      } catch (const DomainError&) {
        continue;
      }
      bool exact = true;
      for (int i = 0; i < D && exact; ++i) {
        auto qi = sol.numerators[i].divide_exact(sol.det);
        if (!qi) exact = false;
        else q[i + 1] = std::move(*qi);
      }
      if (!exact) continue;
    }
    bool ok = true;
    std::vector<Poly> p(L + 1);
    for (int m = 0; m < N && ok; ++m) {
      Poly s;
      for (int i = 0; i <= D && i <= m; ++i)
        if (!q[i].is_zero()) s += q[i] * coeffs[m - i];
      if (m <= L) p[m] = std::move(s);
      else ok = s.is_zero();
    }
    if (!ok) continue;
    return RationalGF(Poly::from_coefficients(p, mainVar), Poly::from_coefficients(q, mainVar));
  }
  throw ReconstructionError("no rational function with denominator degree <= " +
                            std::to_string(B) + " reproduces the series");
}

}  // namespace sunstrip
