// Exact Laurent-polynomial arithmetic for the graded intersection pipeline.
//
// The ambient ring is Z[u^±1, x^±1, y^±1, d^±1].  Specialisations map into
// Z[q^±1, A^±1] (A standing for q^lambda), into single-variable Laurent rings,
// and into cyclotomic integer rings Z[zeta_{2N}][A^±1].

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace knotint {

using Int = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Monomial4 / InvariantPoly

struct Monomial4 {
  int u = 0, x = 0, y = 0, d = 0;

  friend auto operator<=>(const Monomial4&, const Monomial4&) = default;

  Monomial4 operator*(const Monomial4& o) const {
    return {u + o.u, x + o.x, y + o.y, d + o.d};
  }
};

// Laurent polynomial in u,x,y,d with arbitrary-precision integer coefficients.
// Canonical form: no zero coefficients, terms ordered lexicographically on
// (u,x,y,d) by the underlying map.
class InvariantPoly {
 public:
  std::map<Monomial4, Int> terms;

  InvariantPoly() = default;
  static InvariantPoly zero() { return {}; }
  static InvariantPoly one() { return monomial({0, 0, 0, 0}, 1); }
  static InvariantPoly monomial(Monomial4 m, Int c);

  bool is_zero() const { return terms.empty(); }
  void add_term(Monomial4 m, const Int& c);

  InvariantPoly operator+(const InvariantPoly& o) const;
  InvariantPoly operator-(const InvariantPoly& o) const;
  InvariantPoly operator*(const InvariantPoly& o) const;
  InvariantPoly operator-() const;
  bool operator==(const InvariantPoly& o) const { return terms == o.terms; }

  // Multiply by a single monomial times a coefficient.
  InvariantPoly scaled(Monomial4 m, const Int& c) const;

  // Substitute y -> -d (used by the state-sum identity).
  InvariantPoly substitute_y_minus_d() const;

  std::string to_string() const;          // canonical text form
  static InvariantPoly parse(const std::string& s);
};

// ---------------------------------------------------------------------------
// TwoVarPoly: Z[q^±1, A^±1], A = q^lambda kept formal.

class TwoVarPoly {
 public:
  // key = (q exponent, A exponent)
  std::map<std::pair<int, int>, Int> terms;

  void add_term(int eq, int ea, const Int& c);
  TwoVarPoly operator+(const TwoVarPoly& o) const;
  TwoVarPoly operator*(const TwoVarPoly& o) const;
  bool operator==(const TwoVarPoly& o) const { return terms == o.terms; }
  std::string to_string() const;
};

// ---------------------------------------------------------------------------
// LaurentPoly: single variable exact Laurent polynomial.
//
// `half_exponents` doubles the stored exponents: exponent e represents
// var^(e/2).  Only the Alexander normalisation of link closures needs it.

class LaurentPoly {
 public:
  char var = 'q';
  bool half_exponents = false;
  std::map<int, Int> terms;

  LaurentPoly() = default;
  explicit LaurentPoly(char v) : var(v) {}
  static LaurentPoly constant(char v, Int c);
  static LaurentPoly monomial(char v, int e, Int c);

  bool is_zero() const { return terms.empty(); }
  void add_term(int e, const Int& c);
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const;

  LaurentPoly shifted(int e) const;                  // multiply by var^e
  LaurentPoly reversed() const;                      // var -> var^-1
  Int eval_at_one() const;
  int min_exp() const;
  int max_exp() const;

  // Exact division; throws std::domain_error if not divisible.
  LaurentPoly divide_exact(const LaurentPoly& divisor) const;

  std::string to_string() const;
};

// ---------------------------------------------------------------------------
// CyclotomicPoly: Laurent polynomial in A over Z[zeta], zeta = primitive
// 2N-th root of unity, elements reduced modulo the cyclotomic polynomial
// Phi_{2N}.

class CyclotomicRing {
 public:
  explicit CyclotomicRing(int order);   // order = 2N
  int order() const { return order_; }
  int degree() const { return int(phi_.size()) - 1; }

  using Elt = std::vector<Int>;         // coefficients of 1, zeta, ..., zeta^(deg-1)

  Elt zero_elt() const { return Elt(degree(), 0); }
  Elt from_int(const Int& c) const;
  Elt zeta_power(long long e) const;    // zeta^e reduced, e may be negative
  Elt add(const Elt& a, const Elt& b) const;
  Elt mul(const Elt& a, const Elt& b) const;
  Elt negate(const Elt& a) const;
  bool is_zero(const Elt& a) const;

  // Returns c when the element is the rational integer c, otherwise nullopt.
  std::optional<Int> as_integer(const Elt& a) const;

  const std::vector<Int>& modulus() const { return phi_; }

 private:
  int order_;
  std::vector<Int> phi_;                // Phi_order, monic, ascending degree
  std::vector<Elt> zeta_pow_;           // zeta^0 .. zeta^(order-1) reduced
};

class CyclotomicPoly {
 public:
  int order = 4;                                   // 2N
  std::map<int, CyclotomicRing::Elt> terms;        // A exponent -> element

  bool is_zero() const { return terms.empty(); }
  void add_term(const CyclotomicRing& ring, int ea, const CyclotomicRing::Elt& e);

  // When every coefficient is a rational integer and every A exponent is
  // even, the value can be rewritten in x = A^2.
  std::optional<LaurentPoly> rewrite_in_x(const CyclotomicRing& ring) const;

  std::string to_string() const;
};

// ---------------------------------------------------------------------------
// Specialisations (Eq. psi_{c,q,lambda}):
//   u -> A^c,  x -> A^2,  y -> -q^-2,  d -> q^-2.

TwoVarPoly specialize_generic(const InvariantPoly& p, int c);

// psi_{1,q,N-1}: generic with c=1 followed by A -> q^(N-1).
LaurentPoly specialize_jones(const InvariantPoly& p, int N);

// psi_{1-N, zeta_N, lambda}: u -> A^(1-N), x -> A^2, y -> -zeta^-2, d -> zeta^-2
// with zeta the primitive 2N-th root of unity and A kept formal.
CyclotomicPoly specialize_ado(const InvariantPoly& p, int N);

// Computes Phi_n as integer coefficient vector (ascending degree).
std::vector<Int> cyclotomic_polynomial(int n);

}  // namespace knotint
