#include "sunstrip/poly.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "sunstrip/errors.hpp"

namespace sunstrip {

namespace {

constexpr int kFieldBits = 16;
constexpr std::uint64_t kFieldMask = (1u << kFieldBits) - 1;

int field_shift(size_t var) { return kFieldBits * (2 - static_cast<int>(var)); }

}  // namespace

Poly::Key Poly::pack(const std::vector<int>& exps) {
  std::uint64_t total = 0, key = 0;
  for (size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > static_cast<int>(kFieldMask))
      throw DomainError("exponent out of range");
    total += exps[i];
    key |= static_cast<std::uint64_t>(exps[i]) << field_shift(i);
  }
  if (total > kFieldMask) throw DomainError("total degree out of range");
  return key | (total << 48);
}

std::vector<int> Poly::unpack(Key k, size_t nvars) {
  std::vector<int> e(nvars);
  for (size_t i = 0; i < nvars; ++i) e[i] = static_cast<int>((k >> field_shift(i)) & kFieldMask);
  return e;
}

Poly::Poly(long c) {
  if (c != 0) terms_.emplace_back(0, mpz_class(c));
}

Poly::Poly(const mpz_class& c) {
  if (c != 0) terms_.emplace_back(0, c);
}

Poly Poly::variable(const std::string& name) { return monomial({name}, {1}); }

Poly Poly::monomial(const std::vector<std::string>& vars, const std::vector<int>& exps,
                    const mpz_class& coeff) {
  if (vars.size() != exps.size()) throw DomainError("monomial arity mismatch");
  std::vector<std::pair<std::string, int>> pairs;
  for (size_t i = 0; i < vars.size(); ++i) pairs.emplace_back(vars[i], exps[i]);
  std::sort(pairs.begin(), pairs.end());
  Poly p;
  std::vector<int> e;
  for (const auto& [name, x] : pairs) {
    if (!p.vars_.empty() && p.vars_.back() == name) {
      e.back() += x;
      continue;
    }
    p.vars_.push_back(name);
    e.push_back(x);
  }
  if (p.vars_.size() > kMaxVars) throw DomainError("more than three variables");
  if (coeff != 0) p.terms_.emplace_back(pack(e), coeff);
  p.strip_unused();
  return p;
}

bool Poly::has_variable(const std::string& name) const {
  return std::binary_search(vars_.begin(), vars_.end(), name);
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }

mpz_class Poly::constant_term() const {
  return (!terms_.empty() && terms_[0].first == 0) ? terms_[0].second : mpz_class(0);
}

int Poly::total_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.back().first >> 48);
}

int Poly::degree(const std::string& var) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return terms_.empty() ? -1 : 0;
  const size_t idx = it - vars_.begin();
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, static_cast<int>((k >> field_shift(idx)) & kFieldMask));
  return d;
}

mpz_class Poly::coefficient(const std::vector<std::pair<std::string, int>>& monomial) const {
  std::vector<int> e(vars_.size(), 0);
  for (const auto& [name, x] : monomial) {
    if (x == 0) continue;
    auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
    if (it == vars_.end() || *it != name) return 0;
    e[it - vars_.begin()] += x;
  }
  const Key k = pack(e);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                             [](const auto& t, Key key) { return t.first < key; });
  return (it != terms_.end() && it->first == k) ? it->second : mpz_class(0);
}

std::vector<Poly::Term> Poly::terms() const {
  std::vector<Term> out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    out.push_back({unpack(it->first, vars_.size()), it->second});
  return out;
}

std::vector<std::string> Poly::merged(const std::vector<std::string>& a,
                                      const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  if (out.size() > kMaxVars) throw DomainError("more than three variables");
  return out;
}

Poly Poly::with_variables(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  std::vector<size_t> where(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::lower_bound(vars.begin(), vars.end(), vars_[i]);
    if (it == vars.end() || *it != vars_[i]) throw DomainError("variable set does not contain " + vars_[i]);
    where[i] = it - vars.begin();
  }
  Poly p;
  p.vars_ = vars;
  p.terms_.reserve(terms_.size());
  for (const auto& [k, c] : terms_) {
    auto e = unpack(k, vars_.size());
    std::vector<int> f(vars.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) f[where[i]] = e[i];
    p.terms_.emplace_back(pack(f), c);
  }
  // Widening keeps graded-lex order only when the relative variable order is
  // preserved, which holds because both lists are sorted.
  return p;
}

void Poly::strip_unused() {
  if (vars_.empty()) return;
  std::uint64_t used = 0;
  for (const auto& [k, c] : terms_) used |= k;
  std::vector<std::string> keep;
  for (size_t i = 0; i < vars_.size(); ++i)
    if ((used >> field_shift(i)) & kFieldMask) keep.push_back(vars_[i]);
  if (keep.size() == vars_.size()) return;
  std::vector<int> src;
  for (size_t i = 0; i < vars_.size(); ++i)
    if ((used >> field_shift(i)) & kFieldMask) src.push_back(static_cast<int>(i));
  for (auto& [k, c] : terms_) {
    auto e = unpack(k, vars_.size());
    std::vector<int> f;
    for (int i : src) f.push_back(e[i]);
    k = pack(f);
  }
  vars_ = std::move(keep);
}

void Poly::add_scaled(const Poly& o, int sign) {
  if (o.terms_.empty()) return;
  if (vars_ != o.vars_) {
    auto vars = merged(vars_, o.vars_);
    *this = with_variables(vars);
    Poly w = o.with_variables(vars);
    add_scaled(w, sign);
    return;
  }
  std::vector<std::pair<Key, mpz_class>> out;
  out.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      out.emplace_back(o.terms_[j].first, sign > 0 ? o.terms_[j].second : mpz_class(-o.terms_[j].second));
      ++j;
    } else {
      mpz_class c = terms_[i].second;
      if (sign > 0) c += o.terms_[j].second; else c -= o.terms_[j].second;
      if (c != 0) out.emplace_back(terms_[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  strip_unused();
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  add_scaled(o, +1);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  add_scaled(o, -1);
  return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly operator*(const Poly& a0, const Poly& b0) {
  if (a0.is_zero() || b0.is_zero()) return Poly();
  auto vars = Poly::merged(a0.vars_, b0.vars_);
  const Poly a = a0.with_variables(vars), b = b0.with_variables(vars);
  Poly p;
  p.vars_ = vars;
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const Poly& mono = a.terms_.size() == 1 ? a : b;
    const Poly& other = a.terms_.size() == 1 ? b : a;
    const auto& [mk, mc] = mono.terms_[0];
    p.terms_.reserve(other.terms_.size());
    for (const auto& [k, c] : other.terms_) {
      if ((k >> 48) + (mk >> 48) > kFieldMask) throw DomainError("total degree out of range");
      p.terms_.emplace_back(k + mk, c * mc);
    }
    return p;
  }
  std::unordered_map<Poly::Key, mpz_class> acc;
  acc.reserve(a.terms_.size() * b.terms_.size() / 2 + 16);
  mpz_class prod;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      if ((ka >> 48) + (kb >> 48) > kFieldMask) throw DomainError("total degree out of range");
      mpz_mul(prod.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      acc[ka + kb] += prod;
    }
  }
  p.terms_.reserve(acc.size());
  for (auto& [k, c] : acc)
    if (c != 0) p.terms_.emplace_back(k, std::move(c));
  std::sort(p.terms_.begin(), p.terms_.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  p.strip_unused();
  return p;
}

bool operator==(const Poly& a, const Poly& b) { return a.vars_ == b.vars_ && a.terms_ == b.terms_; }

Poly Poly::pow(unsigned e) const {
  Poly result(1), base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Poly Poly::derivative(const std::string& var) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return Poly();
  const size_t idx = it - vars_.begin();
  Poly p;
  p.vars_ = vars_;
  for (const auto& [k, c] : terms_) {
    auto e = unpack(k, vars_.size());
    if (e[idx] == 0) continue;
    mpz_class nc = c * e[idx];
    --e[idx];
    p.terms_.emplace_back(pack(e), std::move(nc));
  }
  std::sort(p.terms_.begin(), p.terms_.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  p.strip_unused();
  return p;
}

Poly Poly::substitute(const std::string& var, const Poly& value) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return *this;
  auto cs = coefficients_in(var);
  // Horner in the substituted variable.
  Poly acc;
  for (auto c = cs.rbegin(); c != cs.rend(); ++c) acc = acc * value + *c;
  return acc;
}

Poly Poly::rename(const std::map<std::string, std::string>& names) const {
  std::vector<std::string> target;
  for (const auto& v : vars_) {
    auto it = names.find(v);
    target.push_back(it == names.end() ? v : it->second);
  }
  Poly out;
  for (const auto& t : terms()) out += monomial(target, t.exponents, t.coeff);
  return out;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
  if (d.is_zero()) throw DomainError("division by the zero polynomial");
  if (is_zero()) return Poly();
  if (d.is_constant()) {
    const mpz_class& c = d.terms_[0].second;
    for (const auto& t : terms_)
      if (!mpz_divisible_p(t.second.get_mpz_t(), c.get_mpz_t())) return std::nullopt;
    Poly q = *this;
    for (auto& t : q.terms_) mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), c.get_mpz_t());
    return q;
  }
  auto vars = merged(vars_, d.vars_);
  const Poly num = with_variables(vars), den = d.with_variables(vars);
  const size_t nv = vars.size();
  const auto& [ldk, ldc] = den.terms_.back();
  const auto lde = unpack(ldk, nv);

  std::map<Key, mpz_class> rem(num.terms_.begin(), num.terms_.end());
  std::vector<std::pair<Key, mpz_class>> quot;
  mpz_class qc, prod;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    const Key rk = top->first;
    if (rk < ldk) return std::nullopt;
    auto re = unpack(rk, nv);
    for (size_t i = 0; i < nv; ++i)
      if (re[i] < lde[i]) return std::nullopt;
    if (!mpz_divisible_p(top->second.get_mpz_t(), ldc.get_mpz_t())) return std::nullopt;
    mpz_divexact(qc.get_mpz_t(), top->second.get_mpz_t(), ldc.get_mpz_t());
    const Key qk = rk - ldk;
    rem.erase(top);
    for (size_t t = 0; t + 1 < den.terms_.size(); ++t) {
      mpz_mul(prod.get_mpz_t(), qc.get_mpz_t(), den.terms_[t].second.get_mpz_t());
      auto [it, inserted] = rem.try_emplace(den.terms_[t].first + qk);
      it->second -= prod;
      if (it->second == 0) rem.erase(it);
    }
    quot.emplace_back(qk, qc);
  }
  Poly q;
  q.vars_ = vars;
  q.terms_.assign(quot.rbegin(), quot.rend());
  q.strip_unused();
  return q;
}

Poly Poly::exact_div(const Poly& d) const {
  auto q = divide_exact(d);
  if (!q) throw DomainError("polynomial division is not exact");
  return *q;
}

mpz_class Poly::content() const {
  if (terms_.empty()) return 0;
  mpz_class g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
    if (g == 1) break;
  }
  return terms_.back().second < 0 ? mpz_class(-g) : g;
}

Poly Poly::div_scalar(const mpz_class& c) const {
  Poly q = *this;
  for (auto& t : q.terms_) {
    if (!mpz_divisible_p(t.second.get_mpz_t(), c.get_mpz_t()))
      throw DomainError("scalar does not divide the polynomial");
    mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), c.get_mpz_t());
  }
  return q;
}

std::vector<Poly> Poly::coefficients_in(const std::string& var) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return is_zero() ? std::vector<Poly>{} : std::vector<Poly>{*this};
  const size_t idx = it - vars_.begin();
  std::vector<Poly> out(degree(var) + 1);
  for (auto& p : out) p.vars_ = vars_;
  for (const auto& [k, c] : terms_) {
    auto e = unpack(k, vars_.size());
    const int d = e[idx];
    e[idx] = 0;
    out[d].terms_.emplace_back(pack(e), c);
  }
  for (auto& p : out) {
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    p.strip_unused();
  }
  return out;
}

Poly Poly::from_coefficients(const std::vector<Poly>& coeffs, const std::string& var) {
  Poly acc;
  for (size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) acc += coeffs[i].shift(var, static_cast<int>(i));
  return acc;
}

Poly Poly::shift(const std::string& var, int e) const {
  if (e == 0 || is_zero()) return *this;
  return *this * monomial({var}, {e});
}

Poly Poly::truncate(const std::string& var, int maxDeg) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return maxDeg >= 0 ? *this : Poly();
  const size_t idx = it - vars_.begin();
  Poly p;
  p.vars_ = vars_;
  for (const auto& t : terms_)
    if (static_cast<int>((t.first >> field_shift(idx)) & kFieldMask) <= maxDeg) p.terms_.push_back(t);
  p.strip_unused();
  return p;
}

mpq_class Poly::evaluate(const std::map<std::string, mpq_class>& values) const {
  std::vector<mpq_class> v;
  for (const auto& name : vars_) {
    auto it = values.find(name);
    if (it == values.end()) throw DomainError("no value for variable " + name);
    v.push_back(it->second);
  }
  mpq_class sum = 0;
  for (const auto& [k, c] : terms_) {
    mpq_class term = c;
    auto e = unpack(k, vars_.size());
    for (size_t i = 0; i < e.size(); ++i) {
      mpq_class pw = 1;
      for (int j = 0; j < e[i]; ++j) pw *= v[i];
      term *= pw;
    }
    sum += term;
  }
  return sum;
}

long double Poly::evaluate(const std::map<std::string, long double>& values) const {
  std::vector<long double> v;
  for (const auto& name : vars_) {
    auto it = values.find(name);
    if (it == values.end()) throw DomainError("no value for variable " + name);
    v.push_back(it->second);
  }
  long double sum = 0;
  for (const auto& [k, c] : terms_) {
    long double term = c.get_d();
    auto e = unpack(k, vars_.size());
    for (size_t i = 0; i < e.size(); ++i)
      for (int j = 0; j < e[i]; ++j) term *= v[i];
    sum += term;
  }
  return sum;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto e = unpack(it->first, vars_.size());
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    mpz_class c = it->second;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (it == terms_.rbegin()) {
      if (neg) s += '-';
    } else {
      s += neg ? " - " : " + ";
    }
    if (mono.empty()) s += c.get_str();
    else if (c == 1) s += mono;
    else s += c.get_str() + "*" + mono;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) {
    // Normalise the Unicode minus and strip whitespace.
    for (size_t i = 0; i < text.size(); ++i) {
      if (text.compare(i, 3, "\xE2\x88\x92") == 0) {
        src_ += '-';
        i += 2;
      } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        src_ += text[i];
      }
    }
  }

  Poly parse() {
    Poly p = expr();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return p;
  }

 private:
  Poly expr() {
    Poly acc = term();
    while (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
      const char op = src_[pos_++];
      Poly t = term();
      if (op == '+') acc += t; else acc -= t;
    }
    return acc;
  }

  // Juxtaposition multiplies, so "3x^2y" reads as 3*x^2*y.
  Poly term() {
    Poly acc = power();
    while (pos_ < src_.size()) {
      const char ch = src_[pos_];
      if (ch == '*') {
        ++pos_;
      } else if (!(ch == '(' || std::isalnum(static_cast<unsigned char>(ch)))) {
        break;
      }
      acc *= power();
    }
    return acc;
  }

  Poly power() {
    if (pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) {
      const bool neg = src_[pos_++] == '-';
      Poly p = power();
      return neg ? -p : p;
    }
    Poly base = primary();
    if (pos_ < src_.size() && src_[pos_] == '^') {
      ++pos_;
      const bool braced = pos_ < src_.size() && src_[pos_] == '{';
      if (braced) ++pos_;
      const size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent expected");
      const auto e = static_cast<unsigned>(std::stoul(src_.substr(start, pos_ - start)));
      if (braced) {
        if (pos_ >= src_.size() || src_[pos_] != '}') fail("'}' expected");
        ++pos_;
      }
      base = base.pow(e);
    }
    return base;
  }

  Poly primary() {
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const char ch = src_[pos_];
    if (ch == '(') {
      ++pos_;
      Poly p = expr();
      if (pos_ >= src_.size() || src_[pos_] != ')') fail("')' expected");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return Poly(mpz_class(src_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      ++pos_;
      return Poly::variable(std::string(1, ch));
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string src_;
  size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text) { return Parser(text).parse(); }

}  // namespace sunstrip
