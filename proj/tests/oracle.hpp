// Independent reference implementations used by the tests. Nothing here calls
// into the library's arithmetic; library objects are only read (terms of a
// polynomial, rows of a lattice) and rebuilt from scratch.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <climits>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "lamk/polynomial.hpp"

namespace oracle {

inline mpz_class binom(long n, long k) {
  if (k < 0) return 0;
  mpz_class num = 1, den = 1;
  for (long i = 0; i < k; ++i) {
    num *= (n - i);
    den *= (i + 1);
  }
  return num / den;
}

// ---------------------------------------------------------------------------
// Sparse polynomials over Z, exponent vectors as keys.
struct Poly {
  std::size_t nvars = 0;
  std::map<std::vector<int>, mpz_class> t;

  static Poly constant(std::size_t n, const mpz_class& c) {
    Poly p{n, {}};
    if (c != 0) p.t[std::vector<int>(n, 0)] = c;
    return p;
  }
  static Poly var(std::size_t n, std::size_t i) {
    Poly p{n, {}};
    std::vector<int> e(n, 0);
    e[i] = 1;
    p.t[e] = 1;
    return p;
  }
  void add(const std::vector<int>& e, const mpz_class& c) {
    if (c == 0) return;
    auto& v = t[e];
    v += c;
    if (v == 0) t.erase(e);
  }
  Poly operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [e, c] : o.t) r.add(e, c);
    return r;
  }
  Poly operator-(const Poly& o) const {
    Poly r = *this;
    for (const auto& [e, c] : o.t) r.add(e, -c);
    return r;
  }
  Poly operator*(const Poly& o) const {
    Poly r{nvars, {}};
    for (const auto& [ea, ca] : t)
      for (const auto& [eb, cb] : o.t) {
        std::vector<int> e(nvars);
        for (std::size_t i = 0; i < nvars; ++i) e[i] = ea[i] + eb[i];
        r.add(e, ca * cb);
      }
    return r;
  }
  bool operator==(const Poly& o) const { return t == o.t; }
};

/// Substitutes values[i] for variable i of a library polynomial, term by term.
inline Poly substitute(const lamk::Polynomial& p, const std::vector<Poly>& values, std::size_t nvars) {
  Poly r{nvars, {}};
  for (const auto& [m, c] : p) {
    Poly term = Poly::constant(nvars, c);
    for (std::size_t i = 0; i < m.nvars(); ++i)
      for (std::uint32_t k = 0; k < m[i]; ++k) term = term * values[i];
    r = r + term;
  }
  return r;
}

/// Elementary symmetric polynomials e_0..e_upto of the given roots, via prod (1 + r t).
inline std::vector<Poly> elementary(const std::vector<Poly>& roots, std::size_t nvars, int upto) {
  std::vector<Poly> e(static_cast<std::size_t>(upto) + 1, Poly{nvars, {}});
  e[0] = Poly::constant(nvars, 1);
  for (const auto& r : roots)
    for (int k = upto; k >= 1; --k) e[static_cast<std::size_t>(k)] = e[static_cast<std::size_t>(k)] + e[static_cast<std::size_t>(k - 1)] * r;
  return e;
}

// ---------------------------------------------------------------------------
// Z[u_1..u_k]/(u_i^{e_i+1}) with h_i = 1 + u_i: the Grothendieck ring of a
// product of projective spaces P^{e_1} x ... x P^{e_k}.
// An optional total-degree cap `max_total` additionally kills every u-monomial
// of larger total degree.
struct Trunc {
  std::vector<int> bounds;
  std::vector<mpz_class> c;
  int max_total = INT_MAX;

  explicit Trunc(std::vector<int> b = {}) : bounds(std::move(b)) {
    std::size_t size = 1;
    for (int e : bounds) size *= static_cast<std::size_t>(e + 1);
    c.assign(size, 0);
  }
  static Trunc one(const std::vector<int>& b) {
    Trunc r(b);
    r.c[0] = 1;
    return r;
  }
  Trunc zero() const {
    Trunc r(bounds);
    r.max_total = max_total;
    return r;
  }
  Trunc unit() const {
    Trunc r = zero();
    r.c[0] = 1;
    return r;
  }
  std::vector<int> exps(std::size_t idx) const {
    std::vector<int> e(bounds.size());
    for (std::size_t i = bounds.size(); i-- > 0;) {
      e[i] = static_cast<int>(idx % static_cast<std::size_t>(bounds[i] + 1));
      idx /= static_cast<std::size_t>(bounds[i] + 1);
    }
    return e;
  }
  std::size_t index(const std::vector<int>& e) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < bounds.size(); ++i) idx = idx * static_cast<std::size_t>(bounds[i] + 1) + static_cast<std::size_t>(e[i]);
    return idx;
  }
  Trunc operator+(const Trunc& o) const {
    Trunc r = *this;
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
  }
  Trunc operator-(const Trunc& o) const {
    Trunc r = *this;
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
    return r;
  }
  Trunc operator*(const mpz_class& s) const {
    Trunc r = *this;
    for (auto& v : r.c) v *= s;
    return r;
  }
  Trunc operator*(const Trunc& o) const {
    Trunc r = zero();
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      const auto ei = exps(i);
      for (std::size_t j = 0; j < o.c.size(); ++j) {
        if (o.c[j] == 0) continue;
        const auto ej = exps(j);
        std::vector<int> e(bounds.size());
        bool ok = true;
        int total = 0;
        for (std::size_t k = 0; k < bounds.size() && ok; ++k) {
          e[k] = ei[k] + ej[k];
          total += e[k];
          ok = e[k] <= bounds[k] && total <= max_total;
        }
        if (ok) r.c[r.index(e)] += c[i] * o.c[j];
      }
    }
    return r;
  }
  bool operator==(const Trunc& o) const { return bounds == o.bounds && c == o.c; }
  bool is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const mpz_class& v) { return v == 0; });
  }
  /// Lowest total u-degree carrying a nonzero coefficient; INT_MAX for zero.
  int order() const {
    int best = INT_MAX;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0) {
        int deg = 0;
        for (int e : exps(i)) deg += e;
        best = std::min(best, deg);
      }
    return best;
  }
  /// Membership in the ideal of u-monomials of degree >= q.
  bool in_level(int q) const { return order() >= q; }
};

/// h^a for any integer a, by the binomial series of (1 + u)^a.
inline Trunc line_power(const Trunc& proto, std::size_t var, long a) {
  Trunc r = proto.zero();
  for (int k = 0; k <= std::min(proto.bounds[var], proto.max_total); ++k) {
    std::vector<int> e(proto.bounds.size(), 0);
    e[var] = k;
    r.c[r.index(e)] = binom(a, k);
  }
  return r;
}

/// The line class h^m for an exponent vector m (entries may be negative).
inline Trunc line(const Trunc& proto, const std::vector<long>& m) {
  Trunc r = proto.unit();
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) r = r * line_power(proto, i, m[i]);
  return r;
}
inline Trunc line(const std::vector<int>& bounds, const std::vector<long>& m) { return line(Trunc(bounds), m); }

/// An element as a Z-combination of line classes h^m.
using LineSum = std::map<std::vector<long>, mpz_class>;

inline LineSum line_sum(const lamk::Polynomial& p) {
  LineSum s;
  for (const auto& [m, c] : p) {
    std::vector<long> e(m.nvars());
    for (std::size_t i = 0; i < m.nvars(); ++i) e[i] = m[i];
    s[e] += c;
  }
  return s;
}

inline Trunc value(const std::vector<int>& bounds, const LineSum& s) {
  Trunc r(bounds);
  for (const auto& [m, c] : s) r = r + line(bounds, m) * c;
  return r;
}

inline Trunc value(const std::vector<int>& bounds, const lamk::Polynomial& p) { return value(bounds, line_sum(p)); }

/// psi_n is the ring map h^m -> h^{nm}.
inline Trunc adams(const std::vector<int>& bounds, const LineSum& s, long n) {
  Trunc r(bounds);
  for (const auto& [m, c] : s) {
    std::vector<long> nm = m;
    for (auto& v : nm) v *= n;
    r = r + line(bounds, nm) * c;
  }
  return r;
}

/// lambda_t(sum c_m L_m) = prod_m (1 + L_m t)^{c_m}, coefficients 0..order.
inline std::vector<Trunc> lambda(const Trunc& proto, const LineSum& s, int order) {
  std::vector<Trunc> series(static_cast<std::size_t>(order) + 1, proto.zero());
  series[0] = proto.unit();
  const auto mul = [&](const std::vector<Trunc>& f) {
    std::vector<Trunc> r(series.size(), proto.zero());
    for (std::size_t i = 0; i < series.size(); ++i)
      for (std::size_t j = 0; i + j < series.size(); ++j) r[i + j] = r[i + j] + series[i] * f[j];
    series = r;
  };
  for (const auto& [m, c] : s) {
    const Trunc L = line(proto, m);
    std::vector<Trunc> factor(series.size(), proto.zero());
    factor[0] = proto.unit();
    if (c > 0) {
      if (series.size() > 1) factor[1] = L;
    } else {
      // (1 + L t)^{-1} = sum (-L)^k t^k
      Trunc p = proto.unit();
      for (std::size_t k = 1; k < factor.size(); ++k) {
        p = p * L * mpz_class(-1);
        factor[k] = p;
      }
    }
    const mpz_class reps = abs(c);
    for (mpz_class i = 0; i < reps; ++i) mul(factor);
  }
  return series;
}
inline std::vector<Trunc> lambda(const std::vector<int>& bounds, const LineSum& s, int order) {
  return lambda(Trunc(bounds), s, order);
}

/// gamma^n = sum_k C(n-1, k-1) lambda^k.
inline std::vector<Trunc> gamma(const std::vector<int>& bounds, const LineSum& s, int order) {
  const auto lam = lambda(bounds, s, order);
  std::vector<Trunc> g(lam.size(), Trunc(bounds));
  g[0] = Trunc::one(bounds);
  for (int n = 1; n <= order; ++n)
    for (int k = 1; k <= n; ++k) g[static_cast<std::size_t>(n)] = g[static_cast<std::size_t>(n)] + lam[static_cast<std::size_t>(k)] * binom(n - 1, k - 1);
  return g;
}

// ---------------------------------------------------------------------------
// Lattice membership by breadth-first search over a box. For generators with
// entries in [-5, 5] and targets in [-5, 5]^m, a representation exists with all
// partial sums in a box of radius 5 * dimension + 5 (Steinitz lemma applied to
// the steps together with -target).
inline bool brute_force_member(const std::vector<std::vector<long>>& gens, const std::vector<long>& target, long radius) {
  const std::size_t m = target.size();
  std::set<std::vector<long>> seen{std::vector<long>(m, 0)};
  std::vector<std::vector<long>> frontier{std::vector<long>(m, 0)};
  while (!frontier.empty()) {
    std::vector<std::vector<long>> next;
    for (const auto& v : frontier) {
      if (v == target) return true;
      for (const auto& g : gens)
        for (long sign : {1L, -1L}) {
          std::vector<long> w(m);
          bool inside = true;
          for (std::size_t i = 0; i < m && inside; ++i) {
            w[i] = v[i] + sign * g[i];
            inside = std::labs(w[i]) <= radius;
          }
          if (inside && seen.insert(w).second) next.push_back(w);
        }
    }
    frontier.swap(next);
  }
  return false;
}

}  // namespace oracle
