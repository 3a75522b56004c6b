#include "knotint/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace knotint {

// ---------------------------------------------------------------------------
// Kauffman bracket

namespace {

struct DSU {
  std::vector<int> p;
  int make() {
    p.push_back(int(p.size()));
    return int(p.size()) - 1;
  }
  int find(int a) { return p[size_t(a)] == a ? a : p[size_t(a)] = find(p[size_t(a)]); }
  void unite(int a, int b) { p[size_t(find(a))] = find(b); }
};

}  // namespace

LaurentPoly jones_kauffman(const BraidWord& b, const Caps& caps) {
  int L = int(b.letters.size());
  if (L > caps.bracket_letters)
    throw CapExceeded("bracket state sum capped at " +
                      std::to_string(caps.bracket_letters) + " letters");
  int n = b.strands;
  LaurentPoly bracket('A');
  for (long long mask = 0; mask < (1LL << L); ++mask) {
    DSU dsu;
    std::vector<int> cur(size_t(n));
    for (int j = 0; j < n; ++j) cur[size_t(j)] = dsu.make();
    std::vector<int> init = cur;
    int apow = 0;
    for (int t = 0; t < L; ++t) {
      int letter = b.letters[size_t(t)];
      int p = std::abs(letter) - 1;
      bool first_smoothing = ((mask >> t) & 1) == 0;
      // positive crossing: A * identity + A^-1 * cupcap
      // negative crossing: A^-1 * identity + A * cupcap
      bool identity_tangle;
      if (letter > 0) {
        identity_tangle = first_smoothing;
        apow += first_smoothing ? 1 : -1;
      } else {
        identity_tangle = first_smoothing;
        apow += first_smoothing ? -1 : 1;
      }
      if (!identity_tangle) {
        dsu.unite(cur[size_t(p)], cur[size_t(p) + 1]);
        int nid = dsu.make();
        cur[size_t(p)] = nid;
        cur[size_t(p) + 1] = nid;
      }
    }
    for (int j = 0; j < n; ++j) dsu.unite(cur[size_t(j)], init[size_t(j)]);
    int loops = 0;
    for (int id = 0; id < int(dsu.p.size()); ++id)
      if (dsu.find(id) == id) ++loops;
    // delta^(loops-1), delta = -A^2 - A^-2
    LaurentPoly term = LaurentPoly::monomial('A', apow, 1);
    LaurentPoly delta('A');
    delta.add_term(2, -1);
    delta.add_term(-2, -1);
    for (int i = 0; i < loops - 1; ++i) term = term * delta;
    bracket = bracket + term;
  }
  // writhe correction (-A^3)^(-w)
  int w = writhe(b);
  LaurentPoly f = bracket.shifted(-3 * w);
  if (w % 2 != 0) f = -f;
  // q = A^-2
  LaurentPoly out('q');
  for (auto& [e, c] : f.terms) {
    if (e % 2 != 0) throw std::logic_error("odd A-exponent in bracket");
    out.add_term(-e / 2, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Burau / Alexander

namespace {

using Mat = std::vector<std::vector<LaurentPoly>>;

Mat identity_mat(int d) {
  Mat m(size_t(d), std::vector<LaurentPoly>(size_t(d), LaurentPoly('t')));
  for (int i = 0; i < d; ++i) m[size_t(i)][size_t(i)] = LaurentPoly::constant('t', 1);
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  int d = int(a.size());
  Mat r(size_t(d), std::vector<LaurentPoly>(size_t(d), LaurentPoly('t')));
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      if (a[size_t(i)][size_t(k)].is_zero()) continue;
      for (int j = 0; j < d; ++j) {
        if (b[size_t(k)][size_t(j)].is_zero()) continue;
        r[size_t(i)][size_t(j)] =
            r[size_t(i)][size_t(j)] + a[size_t(i)][size_t(k)] * b[size_t(k)][size_t(j)];
      }
    }
  return r;
}

LaurentPoly mat_det(Mat m) {
  // fraction-free-ish expansion; dimensions here are tiny
  int d = int(m.size());
  if (d == 0) return LaurentPoly::constant('t', 1);
  if (d == 1) return m[0][0];
  LaurentPoly det('t');
  for (int j = 0; j < d; ++j) {
    if (m[0][size_t(j)].is_zero()) continue;
    Mat minor(size_t(d) - 1, std::vector<LaurentPoly>(size_t(d) - 1, LaurentPoly('t')));
    for (int r = 1; r < d; ++r) {
      int cc = 0;
      for (int c = 0; c < d; ++c) {
        if (c == j) continue;
        minor[size_t(r) - 1][size_t(cc)++] = m[size_t(r)][size_t(c)];
      }
    }
    LaurentPoly term = m[0][size_t(j)] * mat_det(minor);
    if (j % 2 == 0) det = det + term;
    else det = det - term;
  }
  return det;
}

// Unreduced Burau matrix of one generator (0-indexed strand position p).
Mat burau_gen(int n, int p, bool positive) {
  Mat m = identity_mat(n);
  LaurentPoly t = LaurentPoly::monomial('t', 1, 1);
  LaurentPoly one = LaurentPoly::constant('t', 1);
  if (positive) {
    m[size_t(p)][size_t(p)] = one - t;
    m[size_t(p)][size_t(p) + 1] = t;
    m[size_t(p) + 1][size_t(p)] = one;
    m[size_t(p) + 1][size_t(p) + 1] = LaurentPoly('t');
  } else {
    // inverse of the block [[1-t, t],[1, 0]]
    m[size_t(p)][size_t(p)] = LaurentPoly('t');
    m[size_t(p)][size_t(p) + 1] = one;
    m[size_t(p) + 1][size_t(p)] = LaurentPoly::monomial('t', -1, 1);
    m[size_t(p) + 1][size_t(p) + 1] = one - LaurentPoly::monomial('t', -1, 1);
  }
  return m;
}

}  // namespace

LaurentPoly alexander_burau(const BraidWord& b) {
  if (closure_components(b) != 1)
    throw std::invalid_argument("Alexander oracle needs a knot closure");
  int n = b.strands;
  if (n == 1) return LaurentPoly::constant('x', 1);
  Mat U = identity_mat(n);
  for (int letter : b.letters)
    U = mat_mul(U, burau_gen(n, std::abs(letter) - 1, letter > 0));
  // restrict to ker(psi), psi(e_i) = t^i, basis h_i = t e_i - e_{i+1}
  LaurentPoly t = LaurentPoly::monomial('t', 1, 1);
  Mat R(size_t(n) - 1, std::vector<LaurentPoly>(size_t(n) - 1, LaurentPoly('t')));
  for (int i = 0; i < n - 1; ++i) {
    // v = U h_i
    std::vector<LaurentPoly> v(size_t(n), LaurentPoly('t'));
    for (int r = 0; r < n; ++r)
      v[size_t(r)] = U[size_t(r)][size_t(i)] * t - U[size_t(r)][size_t(i) + 1];
    // expand in h-basis: a_0 = v_0/t, a_j = (v_j + a_{j-1})/t
    std::vector<LaurentPoly> a(size_t(n) - 1, LaurentPoly('t'));
    LaurentPoly carry('t');
    for (int j = 0; j < n - 1; ++j) {
      LaurentPoly num = v[size_t(j)] + carry;
      a[size_t(j)] = num.shifted(-1);  // divide by t
      carry = a[size_t(j)];
    }
    // consistency: v_{n-1} must equal -a_{n-2}
    LaurentPoly check = v[size_t(n) - 1] + a[size_t(n) - 2];
    if (!check.is_zero()) throw std::logic_error("Burau reduction failed");
    for (int j = 0; j < n - 1; ++j) R[size_t(j)][size_t(i)] = a[size_t(j)];
  }
  for (int i = 0; i < n - 1; ++i)
    R[size_t(i)][size_t(i)] = R[size_t(i)][size_t(i)] - LaurentPoly::constant('t', 1);
  LaurentPoly D = mat_det(R);
  if (D.is_zero()) throw std::logic_error("vanishing Burau determinant for a knot");
  LaurentPoly cyc('t');
  for (int j = 0; j < n; ++j) cyc.add_term(j, 1);
  LaurentPoly delta = D.divide_exact(cyc);
  // symmetrise and fix the sign: positive leading coefficient
  int lo = delta.min_exp(), hi = delta.max_exp();
  LaurentPoly out('x');
  out.half_exponents = ((lo + hi) % 2 != 0);
  for (auto& [e, c] : delta.terms)
    out.add_term(out.half_exponents ? 2 * e - (lo + hi) : e - (lo + hi) / 2, c);
  if (!(out.reversed() == out)) throw std::logic_error("asymmetric Alexander output");
  if (out.terms.rbegin()->second < 0) out = -out;
  Int at_one = out.eval_at_one();
  if (at_one != 1 && at_one != -1)
    throw std::logic_error("Alexander value at 1 is not a unit");
  return out;
}

// ---------------------------------------------------------------------------
// Coloured Jones via the R-matrix

namespace {

// Laurent polynomials in s = q^(1/2).
LaurentPoly s_monomial(int e, Int c = 1) { return LaurentPoly::monomial('s', e, c); }

LaurentPoly qint(int m) {  // [m]
  LaurentPoly r('s');
  for (int t = 0; t < m; ++t) r.add_term(2 * (m - 1 - 2 * t), 1);
  return r;
}

LaurentPoly qfact(int m) {
  LaurentPoly r = LaurentPoly::constant('s', 1);
  for (int k = 2; k <= m; ++k) r = r * qint(k);
  return r;
}

LaurentPoly qbinom(int n, int k) {
  if (k < 0 || k > n) return LaurentPoly('s');
  std::vector<std::vector<LaurentPoly>> tab(
      size_t(n) + 1, std::vector<LaurentPoly>(size_t(k) + 1, LaurentPoly('s')));
  for (int i = 0; i <= n; ++i) tab[size_t(i)][0] = LaurentPoly::constant('s', 1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= std::min(i, k); ++j) {
      // balanced Pascal: [i j] = q^j [i-1 j] + q^(j-i) [i-1 j-1]
      LaurentPoly a = (j <= i - 1) ? tab[size_t(i) - 1][size_t(j)].shifted(2 * j)
                                   : LaurentPoly('s');
      LaurentPoly b = tab[size_t(i) - 1][size_t(j) - 1].shifted(2 * (j - i));
      tab[size_t(i)][size_t(j)] = a + b;
    }
  return tab[size_t(n)][size_t(k)];
}

using SMat = std::vector<std::vector<LaurentPoly>>;

SMat s_identity(int d) {
  SMat m(size_t(d), std::vector<LaurentPoly>(size_t(d), LaurentPoly('s')));
  for (int i = 0; i < d; ++i) m[size_t(i)][size_t(i)] = LaurentPoly::constant('s', 1);
  return m;
}

// Braiding on V_N (x) V_N: Rhat(v_i (x) v_j) = sum_k C_k v_{j+k} (x) v_{i-k}.
SMat build_rhat(int N) {
  int dim = N * N;
  SMat R(size_t(dim), std::vector<LaurentPoly>(size_t(dim), LaurentPoly('s')));
  auto lam = [&](int i) { return N - 1 - 2 * i; };
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      int kmax = std::min(i, N - 1 - j);
      for (int k = 0; k <= kmax; ++k) {
        // q^{k(k-1)/2} (q - q^-1)^k [k]! qbin(i,k) qbin(N-1-j,k)
        //   q^{lam(i-k) lam(j+k)/2}
        LaurentPoly c = s_monomial(k * (k - 1) + lam(i - k) * lam(j + k));
        LaurentPoly qm('s');
        qm.add_term(2, 1);
        qm.add_term(-2, -1);
        for (int tt = 0; tt < k; ++tt) c = c * qm;
        c = c * qfact(k) * qbinom(i, k) * qbinom(N - 1 - j, k);
        int row = (j + k) * N + (i - k);
        int colm = i * N + j;
        R[size_t(row)][size_t(colm)] = R[size_t(row)][size_t(colm)] + c;
      }
    }
  }
  return R;
}

LaurentPoly unit_inverse(const LaurentPoly& m) {
  if (m.terms.size() != 1) throw std::logic_error("expected a unit monomial");
  auto [e, c] = *m.terms.begin();
  if (c != 1 && c != -1) throw std::logic_error("expected a unit monomial");
  return LaurentPoly::monomial('s', -e, c);
}

// Inverse of the weight-block matrix (total weight i+j preserved).
SMat invert_rhat(int N, const SMat& R) {
  int dim = N * N;
  SMat inv(size_t(dim), std::vector<LaurentPoly>(size_t(dim), LaurentPoly('s')));
  for (int wsum = 0; wsum <= 2 * (N - 1); ++wsum) {
    std::vector<int> idx;
    for (int i = 0; i < N; ++i) {
      int j = wsum - i;
      if (j >= 0 && j < N) idx.push_back(i * N + j);
    }
    int d = int(idx.size());
    SMat blk(size_t(d), std::vector<LaurentPoly>(size_t(d), LaurentPoly('s')));
    for (int a = 0; a < d; ++a)
      for (int bq = 0; bq < d; ++bq)
        blk[size_t(a)][size_t(bq)] = R[size_t(idx[size_t(a)])][size_t(idx[size_t(bq)])];
    // adjugate over the Laurent ring; the determinant is a unit monomial
    std::function<LaurentPoly(const SMat&)> det = [&](const SMat& m) -> LaurentPoly {
      int dd = int(m.size());
      if (dd == 1) return m[0][0];
      LaurentPoly r('s');
      for (int j2 = 0; j2 < dd; ++j2) {
        if (m[0][size_t(j2)].is_zero()) continue;
        SMat minor(size_t(dd) - 1,
                   std::vector<LaurentPoly>(size_t(dd) - 1, LaurentPoly('s')));
        for (int rr = 1; rr < dd; ++rr) {
          int cc = 0;
          for (int c2 = 0; c2 < dd; ++c2) {
            if (c2 == j2) continue;
            minor[size_t(rr) - 1][size_t(cc)++] = m[size_t(rr)][size_t(c2)];
          }
        }
        LaurentPoly term = m[0][size_t(j2)] * det(minor);
        r = (j2 % 2 == 0) ? r + term : r - term;
      }
      return r;
    };
    LaurentPoly dinv = unit_inverse(det(blk));
    for (int a = 0; a < d; ++a) {
      for (int bq = 0; bq < d; ++bq) {
        // cofactor C_{bq,a}
        SMat minor(size_t(d) - 1, std::vector<LaurentPoly>(size_t(d) - 1, LaurentPoly('s')));
        int rr2 = 0;
        for (int rr = 0; rr < d; ++rr) {
          if (rr == bq) continue;
          int cc2 = 0;
          for (int c2 = 0; c2 < d; ++c2) {
            if (c2 == a) continue;
            minor[size_t(rr2)][size_t(cc2)++] = blk[size_t(rr)][size_t(c2)];
          }
          ++rr2;
        }
        LaurentPoly cof = (d == 1) ? LaurentPoly::constant('s', 1) : det(minor);
        if ((a + bq) % 2 != 0) cof = -cof;
        inv[size_t(idx[size_t(a)])][size_t(idx[size_t(bq)])] = cof * dinv;
      }
    }
  }
  return inv;
}

}  // namespace

LaurentPoly colored_jones_rmatrix(const BraidWord& b, int N, const Caps& caps) {
  if (N < 2) throw std::invalid_argument("colour N must be >= 2");
  int n = b.strands;
  long long dim = 1;
  for (int i = 0; i < n; ++i) {
    dim *= N;
    if (dim > caps.tensor_dim) throw CapExceeded("tensor dimension cap exceeded");
  }
  SMat rhat = build_rhat(N);
  SMat rinv = invert_rhat(N, rhat);
  int d = int(dim);
  SMat M = s_identity(d);
  // strides: strand p acts on factor p (leftmost = most significant)
  for (int letter : b.letters) {
    int p = std::abs(letter) - 1;
    const SMat& loc = letter > 0 ? rhat : rinv;
    long long right = 1;
    for (int t = p + 2; t < n; ++t) right *= N;
    long long mid = right * N * N;
    SMat out(size_t(d), std::vector<LaurentPoly>(size_t(d), LaurentPoly('s')));
    for (int row = 0; row < d; ++row) {
      long long hi = row / mid;
      long long rem = row % mid;
      long long ab = rem / right;
      long long lo = rem % right;
      for (int a2 = 0; a2 < N; ++a2)
        for (int b2 = 0; b2 < N; ++b2) {
          const LaurentPoly& coef = loc[size_t(ab)][size_t(a2 * N + b2)];
          if (coef.is_zero()) continue;
          long long srcrow = hi * mid + (a2 * N + b2) * right + lo;
          for (int col = 0; col < d; ++col) {
            if (M[size_t(srcrow)][size_t(col)].is_zero()) continue;
            out[size_t(row)][size_t(col)] =
                out[size_t(row)][size_t(col)] + coef * M[size_t(srcrow)][size_t(col)];
          }
        }
    }
    M = std::move(out);
  }
  // quantum trace with mu = diag(q^{-(N-1-2i)})
  auto mu_exp = [&](int i) { return -2 * (N - 1 - 2 * i); };  // s exponent
  LaurentPoly T('s');
  for (int v = 0; v < d; ++v) {
    if (M[size_t(v)][size_t(v)].is_zero()) continue;
    int e = 0;
    long long tmp = v;
    for (int t = n - 1; t >= 0; --t) {
      e += mu_exp(int(tmp % N));
      tmp /= N;
    }
    T = T + M[size_t(v)][size_t(v)].shifted(e);
  }
  // framing factor: partial trace of Rhat against mu is theta * Id
  LaurentPoly theta('s');
  {
    LaurentPoly acc('s');
    for (int j = 0; j < N; ++j) {
      // entry Rhat[(j,0) <- (0,j)]? use component (row = j*N+0? ) compute
      // directly: sum_j mu_j * Rhat[(j,i),(i,j)] is theta for each i; take i=0
      acc = acc + rhat[size_t(j * N + 0)][size_t(0 * N + j)].shifted(mu_exp(j));
    }
    theta = acc;
  }
  LaurentPoly theta_inv = unit_inverse(theta);
  int w = writhe(b);
  LaurentPoly frame = LaurentPoly::constant('s', 1);
  for (int i = 0; i < std::abs(w); ++i) frame = frame * (w > 0 ? theta_inv : theta);
  LaurentPoly raw = (T * frame).divide_exact(qint(N));
  // match the bracket convention for links
  int c = closure_components(b);
  if ((N - 1) % 2 != 0 && (c - 1) % 2 != 0) raw = -raw;
  LaurentPoly out('q');
  for (auto& [e, cc] : raw.terms) {
    if (e % 2 != 0) throw std::logic_error("half-integer q power in coloured Jones");
    out.add_term(e / 2, cc);
  }
  return out;
}

}  // namespace knotint
