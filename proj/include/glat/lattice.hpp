#pragma once

// Finite lattices, their automorphisms, and group actions on them.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "glat/error.hpp"
#include "glat/groups.hpp"

namespace glat {

/// Raw input to validate_lattice: an order matrix and, optionally, the
/// meet and join tables claimed for it.
struct LatticeCandidate {
  std::vector<std::vector<bool>> leq;
  std::optional<std::vector<std::vector<std::size_t>>> meet;
  std::optional<std::vector<std::vector<std::size_t>>> join;
  std::vector<std::string> labels;
};

class FiniteLattice;
FiniteLattice validate_lattice(const LatticeCandidate& candidate);

/// A finite lattice stored as its order matrix together with meet and
/// join tables. Only validate_lattice produces instances.
class FiniteLattice {
 public:
  FiniteLattice() = default;

  std::size_t size() const { return m_; }
  bool leq(std::size_t x, std::size_t y) const { return leq_[x * m_ + y] != 0; }
  bool less(std::size_t x, std::size_t y) const { return x != y && leq(x, y); }
  std::size_t meet(std::size_t x, std::size_t y) const { return meet_[x * m_ + y]; }
  std::size_t join(std::size_t x, std::size_t y) const { return join_[x * m_ + y]; }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }
  const std::string& label(std::size_t x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Pairs (x, y) with y covering x.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t x = 0; x < m_; ++x)
      for (std::size_t y = 0; y < m_; ++y) {
        if (!less(x, y)) continue;
        bool direct = true;
        for (std::size_t z = 0; z < m_ && direct; ++z)
          if (less(x, z) && less(z, y)) direct = false;
        if (direct) out.emplace_back(x, y);
      }
    return out;
  }

  /// Length of the longest chain from the bottom to each element.
  std::vector<std::size_t> heights() const {
    std::vector<std::size_t> order(m_);
    for (std::size_t i = 0; i < m_; ++i) order[i] = i;
    std::vector<std::size_t> below(m_, 0);
    for (std::size_t x = 0; x < m_; ++x)
      for (std::size_t y = 0; y < m_; ++y)
        if (less(y, x)) ++below[x];
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
    std::vector<std::size_t> h(m_, 0);
    for (std::size_t x : order)
      for (std::size_t y = 0; y < m_; ++y)
        if (less(y, x)) h[x] = std::max(h[x], h[y] + 1);
    return h;
  }

  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.m_ == b.m_ && a.leq_ == b.leq_ && a.meet_ == b.meet_ && a.join_ == b.join_;
  }

 private:
  friend FiniteLattice validate_lattice(const LatticeCandidate& candidate);

  std::size_t m_ = 0;
  std::vector<std::uint8_t> leq_;
  std::vector<std::size_t> meet_, join_;
  std::size_t bottom_ = 0, top_ = 0;
  std::vector<std::string> labels_;
};

namespace detail {

using Bits = std::vector<std::uint64_t>;

inline bool test(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1u; }

inline std::size_t popcount(const Bits& b) {
  std::size_t n = 0;
  for (auto w : b) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

// Greatest element of the set S = sets[x] & sets[y] under the order whose
// principal ideals (or filters) are `sets`, if one exists.
inline std::optional<std::size_t> extremum(const std::vector<Bits>& sets, std::size_t x, std::size_t y) {
  const std::size_t words = sets[x].size();
  Bits common(words);
  for (std::size_t w = 0; w < words; ++w) common[w] = sets[x][w] & sets[y][w];
  const std::size_t target = popcount(common);
  for (std::size_t z = 0; z < sets.size(); ++z)
    if (test(common, z) && popcount(sets[z]) == target && sets[z] == common) return z;
  return std::nullopt;
}

}  // namespace detail

/// Checks the order axioms, computes (or cross-checks) meet and join, and
/// verifies absorption and associativity on all pairs and triples.
inline FiniteLattice validate_lattice(const LatticeCandidate& c) {
  const std::size_t m = c.leq.size();
  if (m == 0) fail(errc::not_partial_order, "empty carrier");
  for (const auto& row : c.leq)
    if (row.size() != m) fail(errc::shape_mismatch, "order matrix is not square");

  for (std::size_t x = 0; x < m; ++x)
    if (!c.leq[x][x]) fail(errc::not_partial_order, "not reflexive at " + std::to_string(x), {x});
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = x + 1; y < m; ++y)
      if (c.leq[x][y] && c.leq[y][x])
        fail(errc::not_partial_order, "not antisymmetric at (" + std::to_string(x) + "," + std::to_string(y) + ")", {x, y});
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      if (c.leq[x][y])
        for (std::size_t z = 0; z < m; ++z)
          if (c.leq[y][z] && !c.leq[x][z])
            fail(errc::not_partial_order,
                 "not transitive at (" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")", {x, y, z});

  const std::size_t words = (m + 63) / 64;
  std::vector<detail::Bits> down(m, detail::Bits(words, 0)), up(m, detail::Bits(words, 0));
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      if (c.leq[y][x]) {
        down[x][y / 64] |= std::uint64_t{1} << (y % 64);
        up[y][x / 64] |= std::uint64_t{1} << (x % 64);
      }

  FiniteLattice L;
  L.m_ = m;
  L.leq_.resize(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) L.leq_[x * m + y] = c.leq[x][y] ? 1 : 0;
  L.meet_.resize(m * m);
  L.join_.resize(m * m);
  auto pair_str = [](std::size_t x, std::size_t y) { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; };
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = x; y < m; ++y) {
      auto mt = detail::extremum(down, x, y);
      if (!mt) fail(errc::no_meet, "no greatest lower bound for " + pair_str(x, y), {x, y});
      L.meet_[x * m + y] = L.meet_[y * m + x] = *mt;
    }
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = x; y < m; ++y) {
      auto jn = detail::extremum(up, x, y);
      if (!jn) fail(errc::no_join, "no least upper bound for " + pair_str(x, y), {x, y});
      L.join_[x * m + y] = L.join_[y * m + x] = *jn;
    }

  auto cross_check = [&](const auto& table, const std::vector<std::size_t>& truth, const char* what) {
    if (table->size() != m) fail(errc::table_mismatch, std::string(what) + " table has wrong shape");
    for (std::size_t x = 0; x < m; ++x) {
      if ((*table)[x].size() != m) fail(errc::table_mismatch, std::string(what) + " table has wrong shape");
      for (std::size_t y = 0; y < m; ++y)
        if ((*table)[x][y] != truth[x * m + y])
          fail(errc::table_mismatch, std::string(what) + " disagrees with the order at " + pair_str(x, y), {x, y});
    }
  };
  if (c.meet) cross_check(c.meet, L.meet_, "meet");
  if (c.join) cross_check(c.join, L.join_, "join");

  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      if (L.meet(x, L.join(x, y)) != x || L.join(x, L.meet(x, y)) != x)
        fail(errc::table_mismatch, "absorption fails at " + pair_str(x, y), {x, y});
      for (std::size_t z = 0; z < m; ++z)
        if (L.meet(L.meet(x, y), z) != L.meet(x, L.meet(y, z)) || L.join(L.join(x, y), z) != L.join(x, L.join(y, z)))
          fail(errc::table_mismatch, "associativity fails", {x, y, z});
    }

  L.bottom_ = 0;
  L.top_ = 0;
  for (std::size_t x = 1; x < m; ++x) {
    L.bottom_ = L.meet(L.bottom_, x);
    L.top_ = L.join(L.top_, x);
  }
  if (c.labels.empty()) {
    L.labels_.resize(m);
    for (std::size_t i = 0; i < m; ++i) L.labels_[i] = std::to_string(i);
  } else {
    if (c.labels.size() != m) fail(errc::shape_mismatch, "label count does not match carrier");
    L.labels_ = c.labels;
  }
  return L;
}

inline FiniteLattice lattice_from_order(std::vector<std::vector<bool>> leq, std::vector<std::string> labels = {}) {
  return validate_lattice({std::move(leq), std::nullopt, std::nullopt, std::move(labels)});
}

/// A chain 0 < 1 < ... < n-1.
inline FiniteLattice chain_lattice(std::size_t n) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) leq[x][y] = x <= y;
  return lattice_from_order(std::move(leq));
}

/// Subsets of an n-element set as bitmasks, ordered by inclusion.
inline FiniteLattice boolean_lattice(std::size_t n) {
  if (n > 8) fail(errc::too_large, "boolean lattice limited to 8 atoms");
  const std::size_t m = std::size_t{1} << n;
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
  std::vector<std::string> labels(m);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) leq[x][y] = (x & y) == x;
    std::string s = "{";
    for (std::size_t i = 0; i < n; ++i)
      if (x >> i & 1u) s += (s.size() > 1 ? "," : "") + std::to_string(i);
    labels[x] = s + "}";
  }
  return lattice_from_order(std::move(leq), std::move(labels));
}

/// A bijection of the carrier that preserves and reflects the order.
class LatticeAutomorphism {
 public:
  LatticeAutomorphism() = default;

  static LatticeAutomorphism identity(std::size_t m) {
    LatticeAutomorphism a;
    a.perm_.resize(m);
    for (std::size_t i = 0; i < m; ++i) a.perm_[i] = i;
    return a;
  }

  static LatticeAutomorphism make(const FiniteLattice& L, std::vector<std::size_t> perm) {
    const std::size_t m = L.size();
    if (perm.size() != m) fail(errc::shape_mismatch, "permutation length differs from lattice size");
    std::vector<bool> seen(m, false);
    for (auto p : perm) {
      if (p >= m || seen[p]) fail(errc::not_automorphism, "not a permutation");
      seen[p] = true;
    }
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y)
        if (L.leq(x, y) != L.leq(perm[x], perm[y]))
          fail(errc::not_automorphism, "order not preserved at (" + std::to_string(x) + "," + std::to_string(y) + ")", {x, y});
    LatticeAutomorphism a;
    a.perm_ = std::move(perm);
    return a;
  }

  std::size_t operator()(std::size_t x) const { return perm_[x]; }
  const std::vector<std::size_t>& perm() const { return perm_; }
  std::size_t size() const { return perm_.size(); }

  /// this ∘ other.
  LatticeAutomorphism compose(const LatticeAutomorphism& other) const {
    LatticeAutomorphism a;
    a.perm_.resize(perm_.size());
    for (std::size_t x = 0; x < perm_.size(); ++x) a.perm_[x] = perm_[other.perm_[x]];
    return a;
  }
  LatticeAutomorphism inverse() const {
    LatticeAutomorphism a;
    a.perm_.resize(perm_.size());
    for (std::size_t x = 0; x < perm_.size(); ++x) a.perm_[perm_[x]] = x;
    return a;
  }

  friend bool operator==(const LatticeAutomorphism&, const LatticeAutomorphism&) = default;
  friend auto operator<=>(const LatticeAutomorphism& a, const LatticeAutomorphism& b) { return a.perm_ <=> b.perm_; }

 private:
  std::vector<std::size_t> perm_;
};

/// Table of an action of G on L: table[g][x] = g·x. The axioms are not
/// enforced here; see validate_glattice.
class GLatticeAction {
 public:
  GLatticeAction() = default;

  GLatticeAction(FiniteGroup group, FiniteLattice lattice, const std::vector<std::vector<std::size_t>>& table)
      : group_(std::move(group)), lattice_(std::move(lattice)) {
    const std::size_t n = group_.order(), m = lattice_.size();
    if (table.size() != n) fail(errc::shape_mismatch, "action table needs one row per group element");
    table_.resize(n * m);
    for (std::size_t g = 0; g < n; ++g) {
      if (table[g].size() != m) fail(errc::shape_mismatch, "action row " + std::to_string(g) + " has wrong length");
      for (std::size_t x = 0; x < m; ++x) {
        if (table[g][x] >= m) fail(errc::shape_mismatch, "action entry out of range", {g, x});
        table_[g * m + x] = table[g][x];
      }
    }
  }

  const FiniteGroup& group() const { return group_; }
  const FiniteLattice& lattice() const { return lattice_; }
  std::size_t act(std::size_t g, std::size_t x) const { return table_[g * lattice_.size() + x]; }

  std::vector<std::vector<std::size_t>> table() const {
    const std::size_t m = lattice_.size();
    std::vector<std::vector<std::size_t>> t(group_.order(), std::vector<std::size_t>(m));
    for (std::size_t g = 0; g < group_.order(); ++g)
      for (std::size_t x = 0; x < m; ++x) t[g][x] = act(g, x);
    return t;
  }

  /// Same lattice and group, identical tables.
  friend bool operator==(const GLatticeAction& a, const GLatticeAction& b) {
    return a.group_ == b.group_ && a.lattice_ == b.lattice_ && a.table_ == b.table_;
  }

 private:
  FiniteGroup group_;
  FiniteLattice lattice_;
  std::vector<std::size_t> table_;
};

/// A failed G-lattice axiom. Witness layouts: axiom 1 (g,h,x); axiom 2
/// (x); axioms 3-5 (g,x,y).
struct AxiomViolation {
  int axiom = 0;
  std::vector<std::size_t> witness;
  std::string description;
};

struct GLatticeReport {
  std::vector<AxiomViolation> violations;  // at most one per axiom, in axiom order

  bool ok() const { return violations.empty(); }
  const AxiomViolation* first() const { return violations.empty() ? nullptr : &violations.front(); }
};

/// Re-evaluates a witness against the action; true if it still fails.
inline bool replay_violation(const GLatticeAction& A, const AxiomViolation& v) {
  const auto& G = A.group();
  const auto& L = A.lattice();
  const auto& w = v.witness;
  switch (v.axiom) {
    case 1: return A.act(w[0], A.act(w[1], w[2])) != A.act(G.mul(w[0], w[1]), w[2]);
    case 2: return A.act(0, w[0]) != w[0];
    case 3: return L.leq(w[1], w[2]) != L.leq(A.act(w[0], w[1]), A.act(w[0], w[2]));
    case 4: return A.act(w[0], L.meet(w[1], w[2])) != L.meet(A.act(w[0], w[1]), A.act(w[0], w[2]));
    case 5: return A.act(w[0], L.join(w[1], w[2])) != L.join(A.act(w[0], w[1]), A.act(w[0], w[2]));
    default: return false;
  }
}

/// First witness violating one axiom (1-5), scanning in index order.
inline std::optional<AxiomViolation> check_axiom(const GLatticeAction& A, int axiom) {
  const std::size_t n = A.group().order(), m = A.lattice().size();
  static const char* names[] = {"", "g(hx) = (gh)x", "ex = x", "x <= y iff gx <= gy", "g(x meet y) = gx meet gy",
                                "g(x join y) = gx join gy"};
  auto make = [&](std::vector<std::size_t> w) { return AxiomViolation{axiom, std::move(w), names[axiom]}; };
  if (axiom == 2) {
    for (std::size_t x = 0; x < m; ++x)
      if (A.act(0, x) != x) return make({x});
    return std::nullopt;
  }
  if (axiom == 1) {
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t h = 0; h < n; ++h)
        for (std::size_t x = 0; x < m; ++x)
          if (replay_violation(A, {1, {g, h, x}, {}})) return make({g, h, x});
    return std::nullopt;
  }
  if (axiom < 1 || axiom > 5) fail(errc::shape_mismatch, "axiom number must be 1..5");
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y)
        if (replay_violation(A, {axiom, {g, x, y}, {}})) return make({g, x, y});
  return std::nullopt;
}

/// Checks all five axioms exhaustively.
inline GLatticeReport validate_glattice(const GLatticeAction& A) {
  GLatticeReport r;
  for (int k = 1; k <= 5; ++k)
    if (auto v = check_axiom(A, k)) r.violations.push_back(std::move(*v));
  return r;
}

/// g·x = rho(g)(x) for a homomorphism G -> Aut(L).
inline GLatticeAction action_from_homomorphism(const FiniteGroup& G, const FiniteLattice& L,
                                               const std::vector<LatticeAutomorphism>& rho) {
  if (rho.size() != G.order()) fail(errc::shape_mismatch, "need one automorphism per group element");
  for (const auto& a : rho) LatticeAutomorphism::make(L, a.perm());
  if (rho[0] != LatticeAutomorphism::identity(L.size())) fail(errc::not_homomorphism, "identity does not act trivially", {0, 0});
  for (std::size_t g = 0; g < G.order(); ++g)
    for (std::size_t h = 0; h < G.order(); ++h)
      if (rho[G.mul(g, h)] != rho[g].compose(rho[h]))
        fail(errc::not_homomorphism, "rho(gh) != rho(g)rho(h) at (" + std::to_string(g) + "," + std::to_string(h) + ")", {g, h});
  std::vector<std::vector<std::size_t>> table(G.order());
  for (std::size_t g = 0; g < G.order(); ++g) table[g] = rho[g].perm();
  return GLatticeAction(G, L, table);
}

/// rho(g) = (x -> g·x), one lattice automorphism per group element.
inline std::vector<LatticeAutomorphism> homomorphism_from_action(const GLatticeAction& A) {
  auto report = validate_glattice(A);
  if (!report.ok()) {
    const auto& v = *report.first();
    fail(v.axiom <= 2 ? errc::not_homomorphism : errc::not_automorphism,
         "action violates axiom " + std::to_string(v.axiom) + " (" + v.description + ")", v.witness);
  }
  std::vector<LatticeAutomorphism> rho;
  for (std::size_t g = 0; g < A.group().order(); ++g) {
    std::vector<std::size_t> perm(A.lattice().size());
    for (std::size_t x = 0; x < perm.size(); ++x) perm[x] = A.act(g, x);
    rho.push_back(LatticeAutomorphism::make(A.lattice(), std::move(perm)));
  }
  return rho;
}

/// The induced action gA = {ga | a in A} on subsets of a G-set X, given as
/// a |G| x |X| table. Subsets are indexed by bitmask.
inline GLatticeAction powerset_glattice(const FiniteGroup& G, const std::vector<std::vector<std::size_t>>& gset) {
  if (gset.size() != G.order()) fail(errc::not_gset, "G-set table needs one row per group element");
  const std::size_t k = gset.empty() ? 0 : gset[0].size();
  if (k > 8) fail(errc::too_large, "power set G-lattice limited to 8 points");
  for (std::size_t g = 0; g < G.order(); ++g) {
    if (gset[g].size() != k) fail(errc::not_gset, "ragged G-set table");
    for (auto v : gset[g])
      if (v >= k) fail(errc::not_gset, "G-set entry out of range");
  }
  for (std::size_t x = 0; x < k; ++x)
    if (gset[0][x] != x) fail(errc::not_gset, "ex != x", {x});
  for (std::size_t g = 0; g < G.order(); ++g)
    for (std::size_t h = 0; h < G.order(); ++h)
      for (std::size_t x = 0; x < k; ++x)
        if (gset[g][gset[h][x]] != gset[G.mul(g, h)][x]) fail(errc::not_gset, "g(hx) != (gh)x", {g, h, x});
  FiniteLattice L = boolean_lattice(k);
  std::vector<std::vector<std::size_t>> table(G.order(), std::vector<std::size_t>(L.size()));
  for (std::size_t g = 0; g < G.order(); ++g)
    for (std::size_t mask = 0; mask < L.size(); ++mask) {
      std::size_t image = 0;
      for (std::size_t x = 0; x < k; ++x)
        if (mask >> x & 1u) image |= std::size_t{1} << gset[g][x];
      table[g][mask] = image;
    }
  return GLatticeAction(G, std::move(L), table);
}

/// Orbit partition, each orbit sorted, orbits ordered by least element.
inline std::vector<std::vector<std::size_t>> orbits(const GLatticeAction& A) {
  const std::size_t m = A.lattice().size();
  std::vector<bool> seen(m, false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t x = 0; x < m; ++x) {
    if (seen[x]) continue;
    std::vector<std::size_t> orbit;
    for (std::size_t g = 0; g < A.group().order(); ++g) {
      std::size_t y = A.act(g, x);
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

inline std::vector<std::size_t> fixed_points(const GLatticeAction& A) {
  std::vector<std::size_t> out;
  for (const auto& o : orbits(A))
    if (o.size() == 1) out.push_back(o[0]);
  return out;
}

/// Aut(L) by backtracking over elements in order of height, restricted to
/// images with the same (height, lower covers, upper covers) signature.
/// Each choice is propagated through meets and joins with already placed
/// elements, which forces most of the permutation early. Results are in
/// lexicographic order of the permutation.
inline std::vector<LatticeAutomorphism> lattice_automorphism_group(const FiniteLattice& L) {
  const std::size_t m = L.size();
  if (m > 40) fail(errc::too_large, "automorphism search limited to 40 elements");
  const auto h = L.heights();
  std::vector<std::size_t> lower(m, 0), upper(m, 0);
  for (auto [x, y] : L.covers()) {
    ++lower[y];
    ++upper[x];
  }
  auto signature = [&](std::size_t x) { return std::tuple(h[x], lower[x], upper[x]); };
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return h[a] < h[b]; });

  const std::size_t none = m;
  std::vector<std::size_t> perm(m, none), inv(m, none), trail;
  auto undo = [&](std::size_t mark) {
    while (trail.size() > mark) {
      std::size_t x = trail.back();
      trail.pop_back();
      inv[perm[x]] = none;
      perm[x] = none;
    }
  };
  auto assign = [&](std::size_t x0, std::size_t y0) {
    std::vector<std::pair<std::size_t, std::size_t>> work{{x0, y0}};
    while (!work.empty()) {
      auto [x, y] = work.back();
      work.pop_back();
      if (perm[x] != none) {
        if (perm[x] != y) return false;
        continue;
      }
      if (inv[y] != none || signature(x) != signature(y)) return false;
      for (std::size_t z : trail)
        if (L.leq(x, z) != L.leq(y, perm[z]) || L.leq(z, x) != L.leq(perm[z], y)) return false;
      perm[x] = y;
      inv[y] = x;
      trail.push_back(x);
      for (std::size_t i = 0; i + 1 < trail.size(); ++i) {
        std::size_t z = trail[i];
        work.emplace_back(L.join(x, z), L.join(y, perm[z]));
        work.emplace_back(L.meet(x, z), L.meet(y, perm[z]));
      }
    }
    return true;
  };

  std::vector<LatticeAutomorphism> out;
  auto rec = [&](auto&& self) -> void {
    std::size_t x = none;
    for (std::size_t c : order)
      if (perm[c] == none) {
        x = c;
        break;
      }
    if (x == none) {
      out.push_back(LatticeAutomorphism::make(L, perm));
      return;
    }
    for (std::size_t y = 0; y < m; ++y) {
      if (inv[y] != none) continue;
      const std::size_t mark = trail.size();
      if (assign(x, y)) self(self);
      undo(mark);
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

/// Hasse diagram in Graphviz DOT. With orbits given, members of one orbit
/// share a fill colour.
inline std::string hasse_dot(const FiniteLattice& L, const std::vector<std::vector<std::size_t>>* orbit_classes = nullptr,
                             const std::string& name = "hasse") {
  static const char* palette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
                                  "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"};
  std::vector<std::size_t> colour(L.size(), 0);
  if (orbit_classes)
    for (std::size_t k = 0; k < orbit_classes->size(); ++k)
      for (auto x : (*orbit_classes)[k]) colour[x] = k;
  auto escape = [](const std::string& s) {
    std::string out;
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out;
  };
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=box";
  if (orbit_classes) os << ", style=filled";
  os << "];\n";
  for (std::size_t x = 0; x < L.size(); ++x) {
    os << "  n" << x << " [label=\"" << escape(L.label(x)) << "\"";
    if (orbit_classes) os << ", fillcolor=\"" << palette[colour[x] % 12] << "\"";
    os << "];\n";
  }
  for (auto [x, y] : L.covers()) os << "  n" << x << " -> n" << y << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace glat
