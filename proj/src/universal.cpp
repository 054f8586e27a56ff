#include "lamk/universal.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "lamk/errors.hpp"

namespace lamk {

namespace {

// Newton: n e_n = sum_{i=1}^{n} (-1)^{i-1} p_i e_{n-i}, solved for the e's given the p's.
std::vector<Polynomial> elementary_from_power_sums(const std::vector<Polynomial>& p, int n, std::size_t nvars) {
  std::vector<Polynomial> e;
  e.push_back(Polynomial::constant(nvars, 1));
  for (int j = 1; j <= n; ++j) {
    Polynomial acc(nvars);
    for (int i = 1; i <= j; ++i) {
      Polynomial term = p[static_cast<std::size_t>(i)] * e[static_cast<std::size_t>(j - i)];
      if (i % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    e.push_back(acc.divide_exact(j));
  }
  return e;
}

// p_1..p_kmax expressed in e_1..e_r, index 0 unused.
std::vector<Polynomial> power_sums(int kmax, int r, std::size_t nvars, std::size_t offset) {
  auto e = [&](int i) {
    return i <= r ? Polynomial::variable(nvars, offset + static_cast<std::size_t>(i - 1)) : Polynomial(nvars);
  };
  std::vector<Polynomial> p(static_cast<std::size_t>(kmax) + 1, Polynomial(nvars));
  for (int k = 1; k <= kmax; ++k) {
    // p_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
    Polynomial acc(nvars);
    for (int i = 1; i < k && i <= r; ++i) {
      Polynomial term = e(i) * p[static_cast<std::size_t>(k - i)];
      if (i % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    if (k <= r) {
      Polynomial top = e(k) * Integer(k);
      if (k % 2 == 1)
        acc += top;
      else
        acc -= top;
    }
    p[static_cast<std::size_t>(k)] = std::move(acc);
  }
  return p;
}

std::mutex cache_mutex;
std::map<int, std::shared_ptr<const UniversalPolynomial>> product_cache;
std::map<std::tuple<int, int, int>, std::shared_ptr<const UniversalPolynomial>> compose_cache;

}  // namespace

const UniversalCaps& universal_caps() {
  static const UniversalCaps caps{};
  return caps;
}

Polynomial power_sum_in_elementary(int k, int r) {
  return power_sums(k, r, static_cast<std::size_t>(r), 0)[static_cast<std::size_t>(k)];
}

std::shared_ptr<const UniversalPolynomial> universal_product_poly(int n) {
  if (n < 0) throw InputError("universal product polynomial needs n >= 0");
  if (n > universal_caps().product) throw InputError("universal product polynomial degree above cap");
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = product_cache.find(n); it != product_cache.end()) return it->second;
  }
  auto u = std::make_shared<UniversalPolynomial>();
  u->arity = UniversalPolynomial::Arity::Product;
  u->n = n;
  const std::size_t nv = 2 * static_cast<std::size_t>(n);
  for (int i = 1; i <= n; ++i) u->symbols.push_back("x" + std::to_string(i));
  for (int i = 1; i <= n; ++i) u->symbols.push_back("y" + std::to_string(i));
  if (n == 0) {
    u->expr = Polynomial::constant(0, 1);
  } else {
    // psi_k(xy) = psi_k(x) psi_k(y); then back to lambda^j via Newton.
    auto px = power_sums(n, n, nv, 0);
    auto py = power_sums(n, n, nv, static_cast<std::size_t>(n));
    std::vector<Polynomial> pxy(static_cast<std::size_t>(n) + 1, Polynomial(nv));
    for (int k = 1; k <= n; ++k) pxy[k] = px[k] * py[k];
    u->expr = elementary_from_power_sums(pxy, n, nv)[static_cast<std::size_t>(n)];
  }
  std::lock_guard lock(cache_mutex);
  return product_cache.try_emplace(n, std::move(u)).first->second;
}

std::shared_ptr<const UniversalPolynomial> universal_compose_poly(int n, int m, int rank_bound) {
  if (n < 0 || m < 1) throw InputError("universal compose polynomial needs n >= 0, m >= 1");
  if (n > universal_caps().compose || m > universal_caps().compose)
    throw InputError("universal compose polynomial degree above cap");
  const int r = rank_bound > 0 ? std::min(rank_bound, std::max(n * m, 1)) : std::max(n * m, 1);
  const auto key = std::make_tuple(n, m, r);
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = compose_cache.find(key); it != compose_cache.end()) return it->second;
  }
  auto u = std::make_shared<UniversalPolynomial>();
  u->arity = UniversalPolynomial::Arity::Compose;
  u->n = n;
  u->m = m;
  u->rank = r;
  const std::size_t nv = static_cast<std::size_t>(r);
  for (int i = 1; i <= r; ++i) u->symbols.push_back("x" + std::to_string(i));
  if (n == 0) {
    u->expr = Polynomial::constant(nv, 1);
  } else {
    const auto p = power_sums(n * m, r, nv, 0);
    // psi_k(e_m) = e_m evaluated on the k-th powers of the roots, whose power sums are p_{ik}.
    std::vector<Polynomial> psi(static_cast<std::size_t>(n) + 1, Polynomial(nv));
    for (int k = 1; k <= n; ++k) {
      std::vector<Polynomial> pk(static_cast<std::size_t>(m) + 1, Polynomial(nv));
      for (int i = 1; i <= m; ++i) pk[i] = p[static_cast<std::size_t>(i * k)];
      psi[k] = elementary_from_power_sums(pk, m, nv)[static_cast<std::size_t>(m)];
    }
    u->expr = elementary_from_power_sums(psi, n, nv)[static_cast<std::size_t>(n)];
  }
  std::lock_guard lock(cache_mutex);
  return compose_cache.try_emplace(key, std::move(u)).first->second;
}

}  // namespace lamk
