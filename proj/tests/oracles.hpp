#pragma once

// Reference computations written without the library's algorithms. Each
// one works on plain integers so that a shared bug cannot hide on both sides.

#include <array>
#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

inline std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

/// Number of k-dimensional subspaces of GF(q)^n.
inline std::int64_t gaussian_binomial(std::int64_t q, int n, int k) {
  std::int64_t num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= ipow(q, n - i) - 1;
    den *= ipow(q, i + 1) - 1;
  }
  return num / den;
}

inline std::int64_t subspace_count(std::int64_t q, int n) {
  std::int64_t total = 0;
  for (int k = 0; k <= n; ++k) total += gaussian_binomial(q, n, k);
  return total;
}

/// |GL_n(q)| = prod (q^n - q^i).
inline std::int64_t gl_order(std::int64_t q, int n) {
  std::int64_t r = 1;
  for (int i = 0; i < n; ++i) r *= ipow(q, n) - ipow(q, i);
  return r;
}

/// |P Gamma L_n(p^k)|, the automorphism group of L(GF(p^k)^n) for n >= 3.
inline std::int64_t pgaml_order(std::int64_t p, int k, int n) { return gl_order(ipow(p, k), n) / (ipow(p, k) - 1) * k; }

/// GF(4) as pairs b1 x + b0 encoded 2*b1 + b0, reduced by x^2 = x + 1.
inline int gf4_mul(int a, int b) {
  int r = 0;
  for (int i = 0; i < 2; ++i)
    if (b >> i & 1) r ^= a << i;
  if (r & 4) r ^= 0b111;
  return r;
}
inline int gf4_frob(int a) { return gf4_mul(a, a); }

/// Quaternion units 1, i, j, k as indices 0..3: product is sign * unit.
struct SignedUnit {
  int sign;
  int unit;
};
inline SignedUnit quat_unit_mul(int a, int b) {
  static const SignedUnit table[4][4] = {
      {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
      {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
      {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
      {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
  };
  return table[a][b];
}

/// A commutative finite field given by its unit-group multiplication on
/// codes 1..q-1 (0 is zero), used with a trivial action of G.
struct SmallField {
  std::int64_t q;
  std::function<std::int64_t(std::int64_t, std::int64_t)> mul;

  std::int64_t inv(std::int64_t a) const {
    for (std::int64_t b = 1; b < q; ++b)
      if (mul(a, b) == 1) return b;
    return 0;
  }
};

inline SmallField prime_field(std::int64_t p) {
  return {p, [p](std::int64_t a, std::int64_t b) { return a * b % p; }};
}
inline SmallField gf4_field() {
  return {4, [](std::int64_t a, std::int64_t b) { return static_cast<std::int64_t>(gf4_mul(static_cast<int>(a), static_cast<int>(b))); }};
}

/// Brute force over every map G x G -> K* with [e,e] = 1 satisfying
/// [g,h][gh,k] = [h,k][g,hk] (trivial action). Returns the cocycles as
/// flattened n*n code vectors, in no particular order.
inline std::vector<std::vector<std::int64_t>> cocycles(const std::vector<std::vector<std::size_t>>& cayley, const SmallField& K) {
  const std::size_t n = cayley.size();
  const std::size_t cells = n * n;
  std::vector<std::int64_t> c(cells, 1);
  std::vector<std::vector<std::int64_t>> out;
  for (;;) {
    bool ok = c[0] == 1;
    for (std::size_t g = 0; ok && g < n; ++g)
      for (std::size_t h = 0; ok && h < n; ++h)
        for (std::size_t k = 0; ok && k < n; ++k)
          ok = K.mul(c[g * n + h], c[cayley[g][h] * n + k]) == K.mul(c[h * n + k], c[g * n + cayley[h][k]]);
    if (ok) out.push_back(c);
    std::size_t i = 0;
    while (i < cells && c[i] == K.q - 1) c[i++] = 1;
    if (i == cells) break;
    ++c[i];
  }
  return out;
}

/// Orbits of the coboundary action c -> c * mu(g)mu(h)/mu(gh) over all
/// mu : G -> K*, i.e. the number of cohomology classes among `cocycles`.
inline std::size_t coboundary_classes(const std::vector<std::vector<std::size_t>>& cayley, const SmallField& K,
                                      const std::vector<std::vector<std::int64_t>>& cs) {
  const std::size_t n = cayley.size();
  std::map<std::vector<std::int64_t>, std::size_t> index;
  for (std::size_t i = 0; i < cs.size(); ++i) index[cs[i]] = i;
  std::vector<std::size_t> parent(cs.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::int64_t> mu(n, 1);
  for (;;) {
    for (std::size_t i = 0; i < cs.size(); ++i) {
      std::vector<std::int64_t> d(n * n);
      for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h)
          d[g * n + h] = K.mul(K.mul(cs[i][g * n + h], K.mul(mu[g], mu[h])), K.inv(mu[cayley[g][h]]));
      auto it = index.find(d);
      if (it != index.end()) parent[find(i)] = find(it->second);
    }
    std::size_t i = 0;
    while (i < n && mu[i] == K.q - 1) mu[i++] = 1;
    if (i == n) break;
    ++mu[i];
  }
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < cs.size(); ++i) roots.insert(find(i));
  return roots.size();
}

/// Multiset of element orders of a group given by its Cayley table, with
/// identity at index 0.
inline std::vector<std::size_t> element_orders(const std::vector<std::vector<std::size_t>>& cayley) {
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < cayley.size(); ++g) {
    std::size_t x = g, k = 1;
    while (x != 0) {
      x = cayley[x][g];
      ++k;
    }
    out.push_back(k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
