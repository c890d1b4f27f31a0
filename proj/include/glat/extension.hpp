#pragma once

// Factor systems (chi, [-,-]) for a division ring K and a finite group G,
// the Schreier extension of K* by G they define, equivalences between
// them, and small-scale classification.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "glat/error.hpp"
#include "glat/groups.hpp"
#include "glat/rep.hpp"
#include "glat/scalar.hpp"

namespace glat {

struct FactorSystem {
  FiniteGroup group;
  RingPtr ring;
  std::vector<RingAutomorphism> chi;         // chi[g]
  std::vector<std::vector<Scalar>> bracket;  // bracket[g][h] = [g,h]

  /// chi = id, [g,h] = 1.
  static FactorSystem trivial(const FiniteGroup& G, const RingPtr& K) {
    return {G, K, std::vector<RingAutomorphism>(G.order()),
            std::vector<std::vector<Scalar>>(G.order(), std::vector<Scalar>(G.order(), Scalar::one(K)))};
  }

  const Scalar& operator()(std::size_t g, std::size_t h) const { return bracket[g][h]; }

  friend bool operator==(const FactorSystem& a, const FactorSystem& b) {
    return a.group == b.group && same_ring(a.ring, b.ring) && a.chi == b.chi && a.bracket == b.bracket;
  }
};

namespace detail {

// Elements on which automorphism identities are compared: all of K when
// finite, otherwise a generating set plus a few rationals.
inline std::vector<Scalar> test_elements(const RingPtr& K) {
  if (K->is_finite()) return elements(K);
  std::vector<Scalar> out;
  for (const char* r : {"1", "2", "-3/7", "5/2"}) out.push_back(Scalar::from_rational(K, parse_rational(r)));
  if (K->kind() == RingKind::quaternions) {
    out.push_back(Scalar::from_quaternion(K, {0, 1, 0, 0}));
    out.push_back(Scalar::from_quaternion(K, {0, 0, 1, 0}));
    out.push_back(Scalar::from_quaternion(K, {0, 0, 0, 1}));
    out.push_back(Scalar::from_quaternion(K, {Rational(1), Rational(-2), Rational(1, 3), Rational(4)}));
  }
  return out;
}

inline void check_shape(const FactorSystem& fs) {
  const std::size_t n = fs.group.order();
  if (fs.chi.size() != n || fs.bracket.size() != n) fail(errc::shape_mismatch, "factor system needs |G| automorphisms and |G|x|G| brackets");
  for (std::size_t g = 0; g < n; ++g) {
    if (!fs.chi[g].attaches_to(fs.ring)) fail(errc::ring_mismatch, "chi(" + fs.group.label(g) + ") belongs to another ring", {g});
    if (fs.bracket[g].size() != n) fail(errc::shape_mismatch, "bracket row has wrong length", {g});
    for (std::size_t h = 0; h < n; ++h) {
      if (!same_ring(fs.bracket[g][h].ring(), fs.ring)) fail(errc::ring_mismatch, "bracket entry from another ring", {g, h});
      if (fs.bracket[g][h].is_zero()) fail(errc::zero_bracket, "[" + fs.group.label(g) + "," + fs.group.label(h) + "] = 0", {g, h});
    }
  }
}

}  // namespace detail

/// A failed factor-system law. Witness layouts: E1 (g,h), E2 (g,h,k),
/// E3 (0,0).
struct LawViolation {
  std::string law;
  std::vector<std::size_t> witness;
  std::string description;
};

struct FactorSystemReport {
  std::vector<LawViolation> violations;  // at most one per law

  bool ok() const { return violations.empty(); }
  const LawViolation* first() const { return violations.empty() ? nullptr : &violations.front(); }
};

/// E1: chi(g)chi(h) = [g,h] chi(gh)(·) [g,h]^{-1} pointwise.
/// E2: [g,h][gh,k] = chi(g)([h,k]) [g,hk].
/// E3: [1,1] = 1.
inline FactorSystemReport validate_factor_system(const FactorSystem& fs) {
  detail::check_shape(fs);
  const auto& G = fs.group;
  const std::size_t n = G.order();
  FactorSystemReport r;
  const auto sample = detail::test_elements(fs.ring);
  [&] {
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t h = 0; h < n; ++h) {
        const Scalar& b = fs(g, h);
        const Scalar binv = b.inverse();
        for (const auto& a : sample)
          if (fs.chi[g](fs.chi[h](a)) != b * fs.chi[G.mul(g, h)](a) * binv) {
            r.violations.push_back({"E1", {g, h}, "chi(g)chi(h) differs from conjugation by [g,h] after chi(gh) at a = " + a.to_string()});
            return;
          }
      }
  }();
  [&] {
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t h = 0; h < n; ++h)
        for (std::size_t k = 0; k < n; ++k)
          if (fs(g, h) * fs(G.mul(g, h), k) != fs.chi[g](fs(h, k)) * fs(g, G.mul(h, k))) {
            r.violations.push_back({"E2", {g, h, k}, "[g,h][gh,k] != chi(g)([h,k])[g,hk]"});
            return;
          }
  }();
  if (!fs(0, 0).is_one()) r.violations.push_back({"E3", {0, 0}, "[1,1] = " + fs(0, 0).to_string()});
  return r;
}

inline void require_valid(const FactorSystem& fs) {
  auto r = validate_factor_system(fs);
  if (!r.ok()) fail(errc::invalid_factor_system, "law " + r.first()->law + " fails: " + r.first()->description, r.first()->witness);
}

/// Element a·g-bar of the extension.
struct ExtensionElement {
  Scalar a;
  std::size_t g = 0;

  friend bool operator==(const ExtensionElement&, const ExtensionElement&) = default;
  std::string to_string(const FiniteGroup& G) const { return "(" + a.to_string() + "," + G.label(g) + ")"; }
};

/// The group of pairs (a, g), a in K*, with
/// (a, g)(b, h) = (a chi(g)(b) [g,h], gh).
/// Over a finite field the group is also materialised as a Cayley table
/// with (a, g) at index g(q-1) + code(a) - 1, so (1, e) is index 0.
class SchreierExtension {
 public:
  explicit SchreierExtension(FactorSystem fs) : fs_(std::move(fs)) {}

  const FactorSystem& factor_system() const { return fs_; }
  bool is_finite() const { return fs_.ring->is_finite(); }

  ExtensionElement identity() const { return {Scalar::one(fs_.ring), 0}; }

  ExtensionElement mul(const ExtensionElement& x, const ExtensionElement& y) const {
    return {x.a * fs_.chi[x.g](y.a) * fs_(x.g, y.g), fs_.group.mul(x.g, y.g)};
  }

  /// (a, g)^{-1} = (chi(g)^{-1}(a^{-1} [g, g^{-1}]^{-1}), g^{-1}).
  ExtensionElement inverse(const ExtensionElement& x) const {
    const std::size_t gi = fs_.group.inv(x.g);
    return {fs_.chi[x.g].inverse()(x.a.inverse() * fs_(x.g, gi).inverse()), gi};
  }

  std::size_t order() const {
    if (!is_finite()) fail(errc::infinite_carrier, "extension of " + fs_.ring->name() + "* is infinite");
    return static_cast<std::size_t>(fs_.ring->order() - 1) * fs_.group.order();
  }

  std::size_t index_of(const ExtensionElement& x) const {
    order();
    return x.g * static_cast<std::size_t>(fs_.ring->order() - 1) + static_cast<std::size_t>(x.a.code() - 1);
  }
  ExtensionElement element(std::size_t i) const {
    const auto units = static_cast<std::size_t>(fs_.ring->order() - 1);
    return {Scalar::from_code(fs_.ring, static_cast<std::int64_t>(i % units) + 1), i / units};
  }

  /// The materialised group; present only for finite K.
  const std::optional<FiniteGroup>& group() const { return group_; }

 private:
  friend SchreierExtension build_extension(const FactorSystem& fs);

  FactorSystem fs_;
  std::optional<FiniteGroup> group_;
};

/// Builds the extension and, for finite K with |K*||G| <= 2000, its Cayley
/// table. The table is validated as a group, the layer {(a, e)} is checked
/// to be a normal subgroup, and (a, g) -> g to be a surjective homomorphism
/// with that layer as kernel.
inline SchreierExtension build_extension(const FactorSystem& fs) {
  require_valid(fs);
  SchreierExtension H(fs);
  if (!H.is_finite()) return H;
  const std::size_t n = H.order();
  if (n > 2000) fail(errc::too_large, "|K*|·|G| exceeds 2000");
  std::vector<ExtensionElement> elems;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    elems.push_back(H.element(i));
    labels.push_back(elems.back().to_string(fs.group));
  }
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i][j] = H.index_of(H.mul(elems[i], elems[j]));
  FiniteGroup grp = FiniteGroup::from_table(std::move(table), std::move(labels));

  const auto units = static_cast<std::size_t>(fs.ring->order() - 1);
  std::vector<std::size_t> layer(units);
  for (std::size_t i = 0; i < units; ++i) layer[i] = i;
  Subgroup N{layer};
  if (!is_subgroup(grp, N)) fail(errc::not_homomorphism, "K* layer is not a subgroup");
  for (std::size_t x = 0; x < n; ++x)
    if (!(conjugate(grp, x, N) == N)) fail(errc::not_homomorphism, "K* layer is not normal", {x});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (grp.mul(x, y) / units != fs.group.mul(x / units, y / units))
        fail(errc::not_homomorphism, "projection to G is not multiplicative", {x, y});
  H.group_ = std::move(grp);
  return H;
}

/// Group axioms of the lazy multiplication on seeded samples: associativity,
/// two-sided identity and inverses.
inline bool verify_extension_samples(const SchreierExtension& H, std::uint64_t seed, std::size_t count = 100) {
  std::mt19937_64 rng(seed);
  const auto& fs = H.factor_system();
  auto draw = [&]() {
    std::uniform_int_distribution<std::size_t> pick_g(0, fs.group.order() - 1);
    return ExtensionElement{random_unit(fs.ring, rng), pick_g(rng)};
  };
  for (std::size_t s = 0; s < count; ++s) {
    auto x = draw(), y = draw(), z = draw();
    if (!(H.mul(H.mul(x, y), z) == H.mul(x, H.mul(y, z)))) return false;
    if (!(H.mul(H.identity(), x) == x) || !(H.mul(x, H.identity()) == x)) return false;
    if (!(H.mul(x, H.inverse(x)) == H.identity()) || !(H.mul(H.inverse(x), x) == H.identity())) return false;
  }
  return true;
}

struct ExtensionFlags {
  bool central = false;
  bool projective = false;  // chi == id
  bool split = false;       // [g,h] == 1
  bool direct = false;      // projective and split
};

inline ExtensionFlags classify_extension(const FactorSystem& fs) {
  require_valid(fs);
  ExtensionFlags f;
  f.central = true;
  f.projective = true;
  f.split = true;
  for (std::size_t g = 0; g < fs.group.order(); ++g) {
    f.projective = f.projective && fs.chi[g].is_identity();
    for (std::size_t h = 0; h < fs.group.order(); ++h) {
      const auto& b = fs(g, h);
      f.split = f.split && b.is_one();
      if (fs.ring->kind() == RingKind::quaternions) f.central = f.central && b.quaternion().is_real();
    }
  }
  f.direct = f.projective && f.split;
  return f;
}

/// chi(g) = twist of rho(g), [g,h] = alpha(g,h). The result is validated;
/// E3 holds exactly when rho(e) is the identity.
inline FactorSystem factor_system_from_rep(const SemilinearProjectiveRep& rho) {
  FactorSystem fs;
  fs.group = rho.group();
  fs.ring = rho.space().ring;
  for (const auto& f : rho.maps()) fs.chi.push_back(f.theta());
  fs.bracket = extract_cocycle(rho);
  require_valid(fs);
  return fs;
}

/// mu with E4: chi'(g) = mu(g)^{-1} chi(g)(·) mu(g),
/// E5: [g,h] mu(gh) = mu(g) chi'(g)(mu(h)) [g,h]', E6: mu(1) = 1.
struct FactorSystemEquivalence {
  std::vector<Scalar> mu;
};

namespace detail {

inline void require_same_carrier(const FactorSystem& a, const FactorSystem& b) {
  if (!(a.group == b.group) || !same_ring(a.ring, b.ring)) fail(errc::carrier_mismatch, "factor systems for different (K, G)");
}

inline bool e4_holds(const FactorSystem& fs, const FactorSystem& fs2, std::size_t g, const Scalar& mu, const std::vector<Scalar>& sample) {
  const Scalar mi = mu.inverse();
  for (const auto& a : sample)
    if (fs2.chi[g](a) != mi * fs.chi[g](a) * mu) return false;
  return true;
}

inline bool e5_holds(const FactorSystem& fs, const FactorSystem& fs2, const std::vector<Scalar>& mu, std::size_t g, std::size_t h) {
  const std::size_t gh = fs.group.mul(g, h);
  return fs(g, h) * mu[gh] == mu[g] * fs2.chi[g](mu[h]) * fs2(g, h);
}

}  // namespace detail

/// Whether mu is an equivalence from fs to fs2 (E4-E6, checked on every
/// element pair).
inline bool check_equivalence(const FactorSystem& fs, const FactorSystem& fs2, const FactorSystemEquivalence& eq) {
  detail::require_same_carrier(fs, fs2);
  const std::size_t n = fs.group.order();
  if (eq.mu.size() != n) fail(errc::shape_mismatch, "mu needs one value per group element");
  for (const auto& m : eq.mu)
    if (m.is_zero()) return false;
  if (!eq.mu[0].is_one()) return false;
  const auto sample = detail::test_elements(fs.ring);
  for (std::size_t g = 0; g < n; ++g)
    if (!detail::e4_holds(fs, fs2, g, eq.mu[g], sample)) return false;
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      if (!detail::e5_holds(fs, fs2, eq.mu, g, h)) return false;
  return true;
}

/// Backtracking over mu(g) in K*, g in index order, with mu(1) = 1 and
/// E5 checked as soon as mu(g), mu(h) and mu(gh) are all assigned.
inline std::optional<FactorSystemEquivalence> find_equivalence(const FactorSystem& fs, const FactorSystem& fs2) {
  detail::require_same_carrier(fs, fs2);
  if (!fs.ring->is_finite()) fail(errc::infinite_carrier, "equivalence search needs a finite K*");
  const std::size_t n = fs.group.order();
  const auto U = units(fs.ring);
  const auto sample = detail::test_elements(fs.ring);
  std::vector<Scalar> mu(n);
  std::vector<bool> set(n, false);
  mu[0] = Scalar::one(fs.ring);
  set[0] = true;
  if (!detail::e4_holds(fs, fs2, 0, mu[0], sample)) return std::nullopt;
  auto consistent = [&](std::size_t x) {
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t h = 0; h < n; ++h) {
        const std::size_t gh = fs.group.mul(g, h);
        if ((g == x || h == x || gh == x) && set[g] && set[h] && set[gh] && !detail::e5_holds(fs, fs2, mu, g, h)) return false;
      }
    return true;
  };
  if (!consistent(0)) return std::nullopt;
  auto rec = [&](auto&& self, std::size_t g) -> bool {
    if (g == n) return true;
    for (const auto& u : U) {
      if (!detail::e4_holds(fs, fs2, g, u, sample)) continue;
      mu[g] = u;
      set[g] = true;
      if (consistent(g) && self(self, g + 1)) return true;
      set[g] = false;
    }
    return false;
  };
  if (!rec(rec, 1)) return std::nullopt;
  return FactorSystemEquivalence{mu};
}

/// (a, g) -> (a mu(g), g) from H(fs) to H(fs2).
class ExtensionIsomorphism {
 public:
  ExtensionIsomorphism(FactorSystem fs, FactorSystem fs2, FactorSystemEquivalence eq)
      : from_(build_extension(fs)), to_(build_extension(fs2)), eq_(std::move(eq)) {}

  ExtensionElement operator()(const ExtensionElement& x) const { return {x.a * eq_.mu[x.g], x.g}; }

  const SchreierExtension& source() const { return from_; }
  const SchreierExtension& target() const { return to_; }

  /// Index permutation between the materialised groups.
  std::vector<std::size_t> table() const {
    std::vector<std::size_t> t(from_.order());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = to_.index_of((*this)(from_.element(i)));
    return t;
  }

  /// Exhaustive over finite K, seeded samples otherwise.
  bool verify(std::uint64_t seed = 0, std::size_t samples = 100) const {
    if (from_.is_finite()) {
      auto t = table();
      std::vector<bool> hit(t.size(), false);
      for (auto v : t) hit[v] = true;
      if (std::find(hit.begin(), hit.end(), false) != hit.end()) return false;
      const auto& a = *from_.group();
      const auto& b = *to_.group();
      for (std::size_t x = 0; x < t.size(); ++x)
        for (std::size_t y = 0; y < t.size(); ++y)
          if (t[a.mul(x, y)] != b.mul(t[x], t[y])) return false;
      return true;
    }
    std::mt19937_64 rng(seed);
    const auto& fs = from_.factor_system();
    std::uniform_int_distribution<std::size_t> pick_g(0, fs.group.order() - 1);
    for (std::size_t s = 0; s < samples; ++s) {
      ExtensionElement x{random_unit(fs.ring, rng), pick_g(rng)}, y{random_unit(fs.ring, rng), pick_g(rng)};
      if (!((*this)(from_.mul(x, y)) == to_.mul((*this)(x), (*this)(y)))) return false;
    }
    return true;
  }

 private:
  SchreierExtension from_, to_;
  FactorSystemEquivalence eq_;
};

inline ExtensionIsomorphism extension_iso_from_equivalence(const FactorSystem& fs, const FactorSystem& fs2,
                                                           const FactorSystemEquivalence& eq) {
  if (!check_equivalence(fs, fs2, eq)) fail(errc::not_equivalent, "mu is not an equivalence of the factor systems");
  return {fs, fs2, eq};
}

/// Maps chi: G -> Aut(K) with chi(e) = id that are homomorphisms, the only
/// choices E1 allows over a commutative K. Ordered lexicographically by
/// Frobenius powers.
inline std::vector<std::vector<RingAutomorphism>> chi_homomorphisms(const FiniteGroup& G, const RingPtr& K) {
  if (!K->is_commutative()) fail(errc::infinite_automorphism_group, "automorphisms of " + K->name() + " are not enumerable");
  const auto autos = list_automorphisms(K);
  const std::size_t n = G.order();
  std::vector<std::vector<RingAutomorphism>> out;
  std::vector<std::size_t> pick(n, 0);
  for (;;) {
    bool hom = true;
    for (std::size_t g = 0; g < n && hom; ++g)
      for (std::size_t h = 0; h < n && hom; ++h)
        hom = autos[pick[g]].compose(autos[pick[h]]) == autos[pick[G.mul(g, h)]];
    if (hom) {
      std::vector<RingAutomorphism> chi;
      for (auto i : pick) chi.push_back(autos[i]);
      out.push_back(std::move(chi));
    }
    // pick[0] stays 0: chi(e) = id.
    std::size_t pos = n;
    while (pos > 1) {
      --pos;
      if (++pick[pos] < autos.size()) break;
      pick[pos] = 0;
    }
    if (std::all_of(pick.begin(), pick.end(), [](std::size_t i) { return i == 0; })) return out;
  }
}

/// All factor systems with the given chi. Brackets are assigned in row-major
/// (g,h) order over K* with only [1,1] = 1 imposed; each E2 instance is
/// checked once all four of its brackets are assigned. Results are in
/// lexicographic order of the bracket codes.
inline std::vector<FactorSystem> enumerate_factor_systems(const FiniteGroup& G, const RingPtr& K, const std::vector<RingAutomorphism>& chi) {
  if (!K->is_finite()) fail(errc::infinite_carrier, "enumeration needs a finite K*");
  const std::size_t n = G.order();
  if (chi.size() != n) fail(errc::shape_mismatch, "chi needs one automorphism per group element");
  const auto U = units(K);
  double space = 1;
  for (std::size_t i = 1; i < n * n; ++i) space *= static_cast<double>(U.size());
  if (space > 1048576.0) fail(errc::too_large, "more than 2^20 bracket assignments");

  FactorSystem fs{G, K, chi, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, Scalar::one(K)))};
  {
    // E1 involves chi alone once brackets are central.
    const auto sample = detail::test_elements(K);
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t h = 0; h < n; ++h)
        for (const auto& a : sample)
          if (chi[g](chi[h](a)) != chi[G.mul(g, h)](a)) return {};
  }
  auto pos = [n](std::size_t g, std::size_t h) { return g * n + h; };
  std::vector<std::vector<std::array<std::size_t, 3>>> due(n * n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t k = 0; k < n; ++k) {
        std::size_t last = std::max({pos(g, h), pos(G.mul(g, h), k), pos(h, k), pos(g, G.mul(h, k))});
        due[last].push_back({g, h, k});
      }
  std::vector<FactorSystem> out;
  auto rec = [&](auto&& self, std::size_t p) -> void {
    if (p == n * n) {
      out.push_back(fs);
      return;
    }
    const std::size_t g = p / n, h = p % n;
    for (const auto& u : U) {
      if (p == 0 && !u.is_one()) continue;
      fs.bracket[g][h] = u;
      bool ok = true;
      for (const auto& t : due[p]) {
        const auto [a, b, c] = t;
        if (fs(a, b) * fs(G.mul(a, b), c) != fs.chi[a](fs(b, c)) * fs(a, G.mul(b, c))) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, p + 1);
    }
  };
  rec(rec, 0);
  return out;
}

/// Partition into equivalence classes; classes ordered by least member,
/// members by index.
inline std::vector<std::vector<std::size_t>> classify_up_to_equivalence(const std::vector<FactorSystem>& systems) {
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < systems.size(); ++i) {
    bool placed = false;
    for (auto& c : classes)
      if (find_equivalence(systems[c.front()], systems[i])) {
        c.push_back(i);
        placed = true;
        break;
      }
    if (!placed) classes.push_back({i});
  }
  return classes;
}

/// rho2(g) = mu(g) rho(g), associated with fs2 when mu is an equivalence
/// from fs2 to fs and rho is associated with fs.
inline SemilinearProjectiveRep transport_rep(const SemilinearProjectiveRep& rho, const FactorSystem& fs, const FactorSystem& fs2,
                                             const FactorSystemEquivalence& eq) {
  if (!(factor_system_from_rep(rho) == fs)) fail(errc::not_associated, "representation is not associated with the source factor system");
  if (!check_equivalence(fs2, fs, eq)) fail(errc::not_equivalent, "mu is not an equivalence from the target to the source");
  std::vector<SemilinearMap> maps;
  for (std::size_t g = 0; g < rho.group().order(); ++g) maps.push_back(rho(g).scaled(eq.mu[g]));
  SemilinearProjectiveRep out(rho.group(), rho.space(), std::move(maps));
  if (!(factor_system_from_rep(out) == fs2)) fail(errc::not_associated, "transported representation has the wrong factor system");
  return out;
}

}  // namespace glat
