#include "knotint/ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace knotint {

// ---------------------------------------------------------------------------
// InvariantPoly

InvariantPoly InvariantPoly::monomial(Monomial4 m, Int c) {
  InvariantPoly p;
  if (c != 0) p.terms.emplace(m, std::move(c));
  return p;
}

void InvariantPoly::add_term(Monomial4 m, const Int& c) {
  if (c == 0) return;
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

InvariantPoly InvariantPoly::operator+(const InvariantPoly& o) const {
  InvariantPoly r = *this;
  for (auto& [m, c] : o.terms) r.add_term(m, c);
  return r;
}

InvariantPoly InvariantPoly::operator-(const InvariantPoly& o) const {
  InvariantPoly r = *this;
  for (auto& [m, c] : o.terms) r.add_term(m, -c);
  return r;
}

InvariantPoly InvariantPoly::operator-() const {
  InvariantPoly r;
  for (auto& [m, c] : terms) r.terms.emplace(m, -c);
  return r;
}

InvariantPoly InvariantPoly::operator*(const InvariantPoly& o) const {
  InvariantPoly r;
  for (auto& [m1, c1] : terms)
    for (auto& [m2, c2] : o.terms) r.add_term(m1 * m2, c1 * c2);
  return r;
}

InvariantPoly InvariantPoly::scaled(Monomial4 m, const Int& c) const {
  InvariantPoly r;
  if (c == 0) return r;
  for (auto& [m1, c1] : terms) r.terms.emplace(m1 * m, c1 * c);
  return r;
}

InvariantPoly InvariantPoly::substitute_y_minus_d() const {
  InvariantPoly r;
  for (auto& [m, c] : terms) {
    // y^e -> (-1)^e d^e
    Monomial4 nm{m.u, m.x, 0, m.d + m.y};
    r.add_term(nm, (m.y % 2 != 0) ? Int(-c) : c);
  }
  return r;
}

std::string InvariantPoly::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : terms) {
    if (!first && c > 0) os << "+";
    first = false;
    os << c.str();
    const std::pair<char, int> vars[4] = {{'u', m.u}, {'x', m.x}, {'y', m.y}, {'d', m.d}};
    for (auto [v, e] : vars)
      if (e != 0) os << "*" << v << "^" << e;
  }
  return os.str();
}

InvariantPoly InvariantPoly::parse(const std::string& s) {
  InvariantPoly p;
  size_t i = 0;
  auto skip_ws = [&] { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; };
  skip_ws();
  if (i < s.size() && s.compare(i, 1, "0") == 0 && i + 1 == s.size()) return p;
  while (i < s.size()) {
    skip_ws();
    int sign = 1;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -sign;
      ++i;
      skip_ws();
    }
    if (i >= s.size()) break;
    // coefficient (optional digits), then *v^e factors
    std::string digits;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) digits += s[i++];
    Int coef = digits.empty() ? Int(1) : Int(digits);
    coef *= sign;
    Monomial4 m;
    skip_ws();
    while (i < s.size() && (s[i] == '*' || std::isalpha((unsigned char)s[i]))) {
      if (s[i] == '*') { ++i; skip_ws(); }
      if (i >= s.size() || !std::isalpha((unsigned char)s[i]))
        throw std::invalid_argument("polynomial parse error near index " + std::to_string(i));
      char v = s[i++];
      int e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        int esign = 1;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
          if (s[i] == '-') esign = -1;
          ++i;
        }
        std::string ed;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ed += s[i++];
        if (ed.empty()) throw std::invalid_argument("missing exponent in polynomial");
        e = esign * std::stoi(ed);
      }
      switch (v) {
        case 'u': m.u += e; break;
        case 'x': m.x += e; break;
        case 'y': m.y += e; break;
        case 'd': m.d += e; break;
        default: throw std::invalid_argument(std::string("unknown variable '") + v + "'");
      }
      skip_ws();
    }
    p.add_term(m, coef);
  }
  return p;
}

// ---------------------------------------------------------------------------
// TwoVarPoly

void TwoVarPoly::add_term(int eq, int ea, const Int& c) {
  if (c == 0) return;
  auto key = std::make_pair(eq, ea);
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

TwoVarPoly TwoVarPoly::operator+(const TwoVarPoly& o) const {
  TwoVarPoly r = *this;
  for (auto& [k, c] : o.terms) r.add_term(k.first, k.second, c);
  return r;
}

TwoVarPoly TwoVarPoly::operator*(const TwoVarPoly& o) const {
  TwoVarPoly r;
  for (auto& [k1, c1] : terms)
    for (auto& [k2, c2] : o.terms)
      r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
  return r;
}

std::string TwoVarPoly::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, c] : terms) {
    if (!first && c > 0) os << "+";
    first = false;
    os << c.str();
    if (k.first != 0) os << "*q^" << k.first;
    if (k.second != 0) os << "*A^" << k.second;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly LaurentPoly::constant(char v, Int c) {
  LaurentPoly p(v);
  if (c != 0) p.terms.emplace(0, std::move(c));
  return p;
}

LaurentPoly LaurentPoly::monomial(char v, int e, Int c) {
  LaurentPoly p(v);
  if (c != 0) p.terms.emplace(e, std::move(c));
  return p;
}

void LaurentPoly::add_term(int e, const Int& c) {
  if (c == 0) return;
  auto it = terms.find(e);
  if (it == terms.end()) {
    terms.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (auto& [e, c] : o.terms) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (auto& [e, c] : o.terms) r.add_term(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r(var);
  r.half_exponents = half_exponents || o.half_exponents;
  for (auto& [e1, c1] : terms)
    for (auto& [e2, c2] : o.terms) r.add_term(e1 + e2, c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(var);
  r.half_exponents = half_exponents;
  for (auto& [e, c] : terms) r.terms.emplace(e, -c);
  return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  return var == o.var && half_exponents == o.half_exponents && terms == o.terms;
}

LaurentPoly LaurentPoly::shifted(int e) const {
  LaurentPoly r(var);
  r.half_exponents = half_exponents;
  for (auto& [e1, c] : terms) r.terms.emplace(e1 + e, c);
  return r;
}

LaurentPoly LaurentPoly::reversed() const {
  LaurentPoly r(var);
  r.half_exponents = half_exponents;
  for (auto& [e, c] : terms) r.terms.emplace(-e, c);
  return r;
}

Int LaurentPoly::eval_at_one() const {
  Int s = 0;
  for (auto& [e, c] : terms) s += c;
  return s;
}

int LaurentPoly::min_exp() const {
  if (terms.empty()) throw std::domain_error("min_exp of zero polynomial");
  return terms.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (terms.empty()) throw std::domain_error("max_exp of zero polynomial");
  return terms.rbegin()->first;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  LaurentPoly rem = *this;
  LaurentPoly quot(var);
  quot.half_exponents = half_exponents;
  const int dtop = divisor.max_exp();
  const Int& dlead = divisor.terms.rbegin()->second;
  while (!rem.is_zero()) {
    int rtop = rem.max_exp();
    Int lead = rem.terms.rbegin()->second;
    if (lead % dlead != 0) throw std::domain_error("inexact polynomial division");
    Int q = lead / dlead;
    int qe = rtop - dtop;
    quot.add_term(qe, q);
    for (auto& [e, c] : divisor.terms) rem.add_term(e + qe, -q * c);
  }
  return quot;
}

std::string LaurentPoly::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : terms) {
    if (!first && c > 0) os << "+";
    first = false;
    bool unit = (c == 1 || c == -1);
    if (c == -1) os << "-";
    if (!unit) os << c.str() << "*";
    if (e == 0) {
      if (unit) os << "1";
      else { os.seekp(-1, std::ios_base::end); }  // drop trailing '*'
    } else {
      os << var;
      if (half_exponents) {
        if (e % 2 == 0) { if (e != 2) os << "^" << e / 2; }
        else os << "^" << e << "/2";
      } else if (e != 1) {
        os << "^" << e;
      }
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Cyclotomic arithmetic

std::vector<Int> cyclotomic_polynomial(int n) {
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed by exact division.
  std::vector<Int> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    std::vector<Int> phi_d = cyclotomic_polynomial(d);
    // divide num by phi_d exactly (both monic up to sign handling)
    std::vector<Int> quot(num.size() - phi_d.size() + 1, 0);
    std::vector<Int> rem = num;
    for (int i = int(quot.size()) - 1; i >= 0; --i) {
      Int q = rem[i + phi_d.size() - 1];  // phi_d is monic
      quot[i] = q;
      if (q == 0) continue;
      for (size_t j = 0; j < phi_d.size(); ++j) rem[i + j] -= q * phi_d[j];
    }
    for (auto& c : rem)
      if (c != 0) throw std::logic_error("cyclotomic division not exact");
    num = quot;
  }
  return num;
}

CyclotomicRing::CyclotomicRing(int order) : order_(order) {
  if (order < 2) throw std::invalid_argument("cyclotomic order must be >= 2");
  phi_ = cyclotomic_polynomial(order);
  int deg = int(phi_.size()) - 1;
  // zeta^k reduced mod Phi for k = 0..order-1
  zeta_pow_.resize(order_);
  Elt cur(deg, 0);
  cur[0] = 1;
  for (int k = 0; k < order_; ++k) {
    zeta_pow_[k] = cur;
    // multiply by zeta
    Elt next(deg, 0);
    for (int i = 0; i < deg - 1; ++i) next[i + 1] = cur[i];
    Int top = cur[deg - 1];
    if (top != 0) {
      for (int i = 0; i < deg; ++i) next[i] -= top * phi_[i];
    }
    cur = next;
  }
}

CyclotomicRing::Elt CyclotomicRing::from_int(const Int& c) const {
  Elt e = zero_elt();
  e[0] = c;
  return e;
}

CyclotomicRing::Elt CyclotomicRing::zeta_power(long long e) const {
  long long k = e % order_;
  if (k < 0) k += order_;
  return zeta_pow_[size_t(k)];
}

CyclotomicRing::Elt CyclotomicRing::add(const Elt& a, const Elt& b) const {
  Elt r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

CyclotomicRing::Elt CyclotomicRing::negate(const Elt& a) const {
  Elt r = a;
  for (auto& c : r) c = -c;
  return r;
}

CyclotomicRing::Elt CyclotomicRing::mul(const Elt& a, const Elt& b) const {
  int deg = degree();
  std::vector<Int> prod(2 * deg - 1, 0);
  for (int i = 0; i < deg; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < deg; ++j) {
      if (b[j] == 0) continue;
      prod[i + j] += a[i] * b[j];
    }
  }
  // reduce mod monic phi_
  for (int i = int(prod.size()) - 1; i >= deg; --i) {
    Int top = prod[i];
    if (top == 0) continue;
    for (int j = 0; j <= deg; ++j) prod[i - deg + j] -= top * phi_[j];
  }
  Elt r(prod.begin(), prod.begin() + deg);
  return r;
}

bool CyclotomicRing::is_zero(const Elt& a) const {
  return std::all_of(a.begin(), a.end(), [](const Int& c) { return c == 0; });
}

std::optional<Int> CyclotomicRing::as_integer(const Elt& a) const {
  for (size_t i = 1; i < a.size(); ++i)
    if (a[i] != 0) return std::nullopt;
  return a[0];
}

void CyclotomicPoly::add_term(const CyclotomicRing& ring, int ea,
                              const CyclotomicRing::Elt& e) {
  auto it = terms.find(ea);
  if (it == terms.end()) {
    if (!ring.is_zero(e)) terms.emplace(ea, e);
    return;
  }
  it->second = ring.add(it->second, e);
  if (ring.is_zero(it->second)) terms.erase(it);
}

std::optional<LaurentPoly> CyclotomicPoly::rewrite_in_x(const CyclotomicRing& ring) const {
  LaurentPoly out('x');
  for (auto& [ea, elt] : terms) {
    if (ea % 2 != 0) return std::nullopt;
    auto c = ring.as_integer(elt);
    if (!c) return std::nullopt;
    out.add_term(ea / 2, *c);
  }
  return out;
}

std::string CyclotomicPoly::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [ea, elt] : terms) {
    if (!first) os << " + ";
    first = false;
    os << "(";
    bool inner_first = true;
    for (size_t i = 0; i < elt.size(); ++i) {
      if (elt[i] == 0) continue;
      if (!inner_first && elt[i] > 0) os << "+";
      inner_first = false;
      os << elt[i].str();
      if (i > 0) os << "*z^" << i;
    }
    if (inner_first) os << "0";
    os << ")";
    if (ea != 0) os << "*A^" << ea;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Specialisations

TwoVarPoly specialize_generic(const InvariantPoly& p, int c) {
  TwoVarPoly r;
  for (auto& [m, coef] : p.terms) {
    // u -> A^c, x -> A^2, y -> -q^-2, d -> q^-2
    int eq = -2 * (m.y + m.d);
    int ea = c * m.u + 2 * m.x;
    Int cc = (m.y % 2 != 0) ? Int(-coef) : coef;
    r.add_term(eq, ea, cc);
  }
  return r;
}

LaurentPoly specialize_jones(const InvariantPoly& p, int N) {
  if (N < 2) throw std::invalid_argument("colour N must be >= 2");
  LaurentPoly r('q');
  for (auto& [m, coef] : p.terms) {
    int eq = -2 * (m.y + m.d) + (N - 1) * (m.u + 2 * m.x);
    Int cc = (m.y % 2 != 0) ? Int(-coef) : coef;
    r.add_term(eq, cc);
  }
  return r;
}

CyclotomicPoly specialize_ado(const InvariantPoly& p, int N) {
  if (N < 2) throw std::invalid_argument("colour N must be >= 2");
  CyclotomicRing ring(2 * N);
  CyclotomicPoly r;
  r.order = 2 * N;
  for (auto& [m, coef] : p.terms) {
    int ea = (1 - N) * m.u + 2 * m.x;
    auto z = ring.zeta_power(-2LL * (m.y + m.d));
    Int cc = (m.y % 2 != 0) ? Int(-coef) : coef;
    CyclotomicRing::Elt elt(z.size());
    for (size_t i = 0; i < z.size(); ++i) elt[i] = z[i] * cc;
    r.add_term(ring, ea, elt);
  }
  return r;
}

}  // namespace knotint
