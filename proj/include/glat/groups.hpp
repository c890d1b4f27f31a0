#pragma once

// Finite groups given by Cayley tables. Element 0 is always the identity.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "glat/error.hpp"

namespace glat {

class FiniteGroup {
 public:
  FiniteGroup() = default;

  /// Validates a Cayley table. Row and column 0 must act as the identity.
  /// Associativity is checked on all triples up to order 128 and with
  /// Light's test over a generating set beyond that.
  static FiniteGroup from_table(std::vector<std::vector<std::size_t>> cayley, std::vector<std::string> labels = {}) {
    const std::size_t n = cayley.size();
    if (n == 0) fail(errc::malformed_table, "empty Cayley table");
    for (std::size_t i = 0; i < n; ++i) {
      if (cayley[i].size() != n) fail(errc::malformed_table, "row " + std::to_string(i) + " has wrong length");
      for (std::size_t j = 0; j < n; ++j)
        if (cayley[i][j] >= n)
          fail(errc::malformed_table, "entry (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    }
    FiniteGroup g;
    g.n_ = n;
    g.table_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g.table_[i * n + j] = cayley[i][j];

    for (std::size_t x = 0; x < n; ++x)
      if (g.mul(0, x) != x || g.mul(x, 0) != x)
        fail(errc::no_identity, "element 0 does not act as identity on " + std::to_string(x));

    g.inverse_.assign(n, n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y)
        if (g.mul(x, y) == 0 && g.mul(y, x) == 0) {
          g.inverse_[x] = y;
          break;
        }
      if (g.inverse_[x] == n) fail(errc::no_inverse, "element " + std::to_string(x) + " has no two-sided inverse");
    }

    if (n <= 128) {
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          for (std::size_t z = 0; z < n; ++z)
            if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z)))
              fail(errc::not_associative, "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")");
    } else {
      for (std::size_t a : g.magma_generators())
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = 0; y < n; ++y)
            if (g.mul(g.mul(x, a), y) != g.mul(x, g.mul(a, y)))
              fail(errc::not_associative, "(" + std::to_string(x) + "," + std::to_string(a) + "," + std::to_string(y) + ")");
    }

    if (labels.empty()) {
      labels.resize(n);
      for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
    } else if (labels.size() != n) {
      fail(errc::malformed_table, "label count does not match order");
    }
    g.labels_ = std::move(labels);
    return g;
  }

  /// Powers of a generator: element i is a^i.
  static FiniteGroup cyclic(std::size_t n) {
    if (n == 0) fail(errc::malformed_table, "cyclic group of order 0");
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
      labels[i] = i == 0 ? "1" : (i == 1 ? "a" : "a^" + std::to_string(i));
    }
    return from_table(std::move(t), std::move(labels));
  }

  /// Permutations of {0..n-1} in lexicographic order of their one-line
  /// notation; the product is composition, (st)(x) = s(t(x)).
  static FiniteGroup symmetric(std::size_t n) {
    if (n == 0 || n > 5) fail(errc::too_large, "symmetric preset supports 1 <= n <= 5");
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return from_permutations(perms);
  }

  /// Dihedral group of order 2n: element i < n is r^i, element n+i is s r^i,
  /// with s r s = r^{-1}.
  static FiniteGroup dihedral(std::size_t n) {
    if (n == 0) fail(errc::malformed_table, "dihedral group needs n >= 1");
    const std::size_t m = 2 * n;
    std::vector<std::vector<std::size_t>> t(m, std::vector<std::size_t>(m));
    std::vector<std::string> labels(m);
    for (std::size_t x = 0; x < m; ++x) {
      std::size_t fx = x / n, rx = x % n;
      for (std::size_t y = 0; y < m; ++y) {
        std::size_t fy = y / n, ry = y % n;
        // s^fx r^rx s^fy r^ry = s^(fx+fy) r^(±rx + ry)
        std::size_t r = fy ? (n - rx + ry) % n : (rx + ry) % n;
        t[x][y] = ((fx + fy) % 2) * n + r;
      }
      std::string rot = rx == 0 ? "" : (rx == 1 ? "r" : "r^" + std::to_string(rx));
      labels[x] = fx ? (rot.empty() ? "s" : "s" + rot) : (rot.empty() ? "1" : rot);
    }
    return from_table(std::move(t), std::move(labels));
  }

  /// Group generated by a list of permutations of equal degree, in the
  /// order given; perms[0] must be the identity.
  static FiniteGroup from_permutations(const std::vector<std::vector<std::size_t>>& perms) {
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
    std::vector<std::vector<std::size_t>> t(perms.size(), std::vector<std::size_t>(perms.size()));
    std::vector<std::string> labels(perms.size());
    for (std::size_t i = 0; i < perms.size(); ++i) {
      for (std::size_t j = 0; j < perms.size(); ++j) {
        std::vector<std::size_t> c(perms[i].size());
        for (std::size_t x = 0; x < c.size(); ++x) c[x] = perms[i][perms[j][x]];
        auto it = index.find(c);
        if (it == index.end()) fail(errc::malformed_table, "permutation list not closed");
        t[i][j] = it->second;
      }
      for (auto v : perms[i]) labels[i] += std::to_string(v);
    }
    return from_table(std::move(t), std::move(labels));
  }

  std::size_t order() const { return n_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * n_ + b]; }
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  static constexpr std::size_t identity() { return 0; }
  const std::string& label(std::size_t a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Index of a label; falls back to reading a decimal index.
  std::optional<std::size_t> find(const std::string& label) const {
    for (std::size_t i = 0; i < n_; ++i)
      if (labels_[i] == label) return i;
    if (!label.empty() && std::all_of(label.begin(), label.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      std::size_t v = std::stoul(label);
      if (v < n_) return v;
    }
    return std::nullopt;
  }

  std::vector<std::vector<std::size_t>> cayley() const {
    std::vector<std::vector<std::size_t>> t(n_, std::vector<std::size_t>(n_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t[i][j] = mul(i, j);
    return t;
  }

  std::size_t element_order(std::size_t a) const {
    std::size_t k = 1;
    for (std::size_t x = a; x != 0; x = mul(x, a)) ++k;
    return k;
  }

  bool is_abelian() const {
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = a + 1; b < n_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  /// Smallest subgroup containing `gens`, as a sorted member list.
  std::vector<std::size_t> closure(const std::vector<std::size_t>& gens) const {
    std::vector<bool> in(n_, false);
    std::vector<std::size_t> members{0};
    in[0] = true;
    for (std::size_t g : gens)
      if (!in[g]) {
        in[g] = true;
        members.push_back(g);
      }
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j)
        for (std::size_t p : {mul(members[i], members[j]), mul(members[j], members[i])})
          if (!in[p]) {
            in[p] = true;
            members.push_back(p);
          }
    std::sort(members.begin(), members.end());
    return members;
  }

  /// Greedy generating set: smallest element outside the current closure.
  std::vector<std::size_t> generators() const {
    std::vector<std::size_t> gens;
    std::vector<std::size_t> span = closure(gens);
    while (span.size() < n_) {
      std::size_t next = 0;
      while (std::binary_search(span.begin(), span.end(), next)) ++next;
      gens.push_back(next);
      span = closure(gens);
    }
    return gens;
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.n_ == b.n_ && a.table_ == b.table_; }

 private:
  // Generators of the table viewed as a magma (no associativity assumed).
  std::vector<std::size_t> magma_generators() const {
    std::vector<std::size_t> gens;
    std::vector<bool> in(n_, false);
    std::size_t covered = 0;
    auto saturate = [&] {
      std::vector<std::size_t> members;
      for (std::size_t i = 0; i < n_; ++i)
        if (in[i]) members.push_back(i);
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j < members.size(); ++j) {
          std::size_t p = mul(members[i], members[j]);
          if (!in[p]) {
            in[p] = true;
            members.push_back(p);
          }
          p = mul(members[j], members[i]);
          if (!in[p]) {
            in[p] = true;
            members.push_back(p);
          }
        }
      covered = members.size();
    };
    while (covered < n_) {
      std::size_t next = 0;
      while (in[next]) ++next;
      gens.push_back(next);
      in[next] = true;
      saturate();
    }
    return gens;
  }

  std::size_t n_ = 0;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
  std::vector<std::string> labels_;
};

/// G x H on pairs, index i*|H| + j.
inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t n = g.order() * h.order();
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y)
      t[x][y] = g.mul(x / h.order(), y / h.order()) * h.order() + h.mul(x % h.order(), y % h.order());
    labels[x] = "(" + g.label(x / h.order()) + "," + h.label(x % h.order()) + ")";
  }
  return FiniteGroup::from_table(std::move(t), std::move(labels));
}

/// Subgroup given by its sorted member list.
struct Subgroup {
  std::vector<std::size_t> members;

  std::size_t order() const { return members.size(); }
  bool contains(std::size_t g) const { return std::binary_search(members.begin(), members.end(), g); }
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

inline bool is_subgroup(const FiniteGroup& g, const Subgroup& h) {
  if (!h.contains(0)) return false;
  for (auto a : h.members) {
    if (!h.contains(g.inv(a))) return false;
    for (auto b : h.members)
      if (!h.contains(g.mul(a, b))) return false;
  }
  return true;
}

/// gHg^{-1}.
inline Subgroup conjugate(const FiniteGroup& g, std::size_t x, const Subgroup& h) {
  Subgroup out;
  for (auto a : h.members) out.members.push_back(g.mul(g.mul(x, a), g.inv(x)));
  std::sort(out.members.begin(), out.members.end());
  return out;
}

/// Whether two groups are isomorphic, by backtracking over images of a
/// generating set of `a`.
inline std::optional<std::vector<std::size_t>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t n = a.order();
  if (n != b.order()) return std::nullopt;
  auto order_profile = [](const FiniteGroup& g) {
    std::vector<std::size_t> p;
    for (std::size_t x = 0; x < g.order(); ++x) p.push_back(g.element_order(x));
    std::sort(p.begin(), p.end());
    return p;
  };
  if (order_profile(a) != order_profile(b)) return std::nullopt;
  const auto gens = a.generators();
  std::vector<std::size_t> image(gens.size());
  std::optional<std::vector<std::size_t>> result;

  // Extends a partial assignment of generator images to a full map by
  // breadth-first multiplication and checks it is a bijective homomorphism.
  auto extend = [&]() -> std::optional<std::vector<std::size_t>> {
    std::vector<std::size_t> phi(n, n);
    std::vector<bool> used(n, false);
    phi[0] = 0;
    used[0] = true;
    std::vector<std::size_t> frontier{0};
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      std::size_t x = frontier[i];
      for (std::size_t k = 0; k < gens.size(); ++k) {
        std::size_t y = a.mul(x, gens[k]);
        std::size_t py = b.mul(phi[x], image[k]);
        if (phi[y] == n) {
          if (used[py]) return std::nullopt;
          phi[y] = py;
          used[py] = true;
          frontier.push_back(y);
        } else if (phi[y] != py) {
          return std::nullopt;
        }
      }
    }
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (phi[a.mul(x, y)] != b.mul(phi[x], phi[y])) return std::nullopt;
    return phi;
  };

  auto search = [&](auto&& self, std::size_t k) -> bool {
    if (k == gens.size()) {
      result = extend();
      return result.has_value();
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (b.element_order(y) != a.element_order(gens[k])) continue;
      image[k] = y;
      if (self(self, k + 1)) return true;
    }
    return false;
  };
  search(search, 0);
  return result;
}

inline bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b) { return find_isomorphism(a, b).has_value(); }

/// Short structural name: abelian groups by invariant factors
/// ("C2xC2", "C4"), small nonabelian groups by comparison with
/// known presets, otherwise "G<order>".
inline std::string group_name(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n == 1) return "C1";
  if (g.is_abelian()) {
    // The multiset of element orders determines a finite abelian group.
    // Try invariant-factor lists d1 | d2 | ... with product n.
    std::vector<std::size_t> target;
    for (std::size_t x = 0; x < n; ++x) target.push_back(g.element_order(x));
    std::sort(target.begin(), target.end());
    std::vector<std::vector<std::size_t>> candidates;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t remaining, std::size_t last) -> void {
      if (remaining == 1) {
        candidates.push_back(cur);
        return;
      }
      for (std::size_t d = 2; d <= remaining; ++d)
        if (remaining % d == 0 && (last == 0 || d % last == 0)) {
          cur.push_back(d);
          self(self, remaining / d, d);
          cur.pop_back();
        }
    };
    rec(rec, n, 0);
    for (const auto& c : candidates) {
      FiniteGroup prod = FiniteGroup::cyclic(c[0]);
      for (std::size_t i = 1; i < c.size(); ++i) prod = direct_product(prod, FiniteGroup::cyclic(c[i]));
      std::vector<std::size_t> prof;
      for (std::size_t x = 0; x < n; ++x) prof.push_back(prod.element_order(x));
      std::sort(prof.begin(), prof.end());
      if (prof == target) {
        std::string name;
        for (std::size_t i = 0; i < c.size(); ++i) name += (i ? "xC" : "C") + std::to_string(c[i]);
        return name;
      }
    }
    return "A" + std::to_string(n);
  }
  if (n <= 64) {
    if (n == 6 && is_isomorphic(g, FiniteGroup::symmetric(3))) return "S3";
    if (n == 24 && is_isomorphic(g, FiniteGroup::symmetric(4))) return "S4";
    if (n % 2 == 0 && is_isomorphic(g, FiniteGroup::dihedral(n / 2))) return "D" + std::to_string(n / 2);
    if (n == 8) return "Q8";  // the only nonabelian order-8 group besides D4
  }
  return "G" + std::to_string(n);
}

}  // namespace glat
