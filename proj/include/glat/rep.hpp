#pragma once

// Semilinear projective representations: rho(g) rho(h) = alpha(g,h) rho(gh)
// with alpha(g,h) a nonzero scalar. Induced actions on L(V), recovery of a
// representation from an action by search over SGL(V), and equivalence up
// to per-element scalars.

#include <optional>
#include <string>
#include <vector>

#include "glat/error.hpp"
#include "glat/groups.hpp"
#include "glat/lattice.hpp"
#include "glat/linalg.hpp"

namespace glat {

/// alpha(g,h), indexed [g][h].
using Cocycle = std::vector<std::vector<Scalar>>;

class SemilinearProjectiveRep {
 public:
  SemilinearProjectiveRep() = default;

  SemilinearProjectiveRep(FiniteGroup group, VectorSpace space, std::vector<SemilinearMap> maps)
      : group_(std::move(group)), space_(std::move(space)), maps_(std::move(maps)) {
    if (maps_.size() != group_.order()) fail(errc::shape_mismatch, "need one map per group element");
    for (std::size_t g = 0; g < maps_.size(); ++g) {
      if (!(maps_[g].space() == space_)) fail(errc::space_mismatch, "map for element " + std::to_string(g) + " acts on another space");
      if (!maps_[g].is_invertible()) fail(errc::not_invertible, "map for element " + std::to_string(g) + " is singular", {g});
    }
  }

  const FiniteGroup& group() const { return group_; }
  const VectorSpace& space() const { return space_; }
  const std::vector<SemilinearMap>& maps() const { return maps_; }
  const SemilinearMap& operator()(std::size_t g) const { return maps_.at(g); }

  friend bool operator==(const SemilinearProjectiveRep& a, const SemilinearProjectiveRep& b) {
    return a.group_ == b.group_ && a.space_ == b.space_ && a.maps_ == b.maps_;
  }

 private:
  FiniteGroup group_;
  VectorSpace space_;
  std::vector<SemilinearMap> maps_;
};

namespace detail {

// The c with x = c·y, if any. y must be nonzero.
inline std::optional<Scalar> ratio(const Vector& x, const Vector& y) {
  std::size_t i = 0;
  while (i < y.size() && y[i].is_zero()) ++i;
  if (i == y.size()) return std::nullopt;
  Scalar c = x[i] / y[i];
  for (std::size_t j = 0; j < y.size(); ++j)
    if (x[j] != c * y[j]) return std::nullopt;
  return c;
}

// Basis vectors followed by their sum.
inline std::vector<Vector> probe_vectors(const VectorSpace& space) {
  std::vector<Vector> out;
  Vector sum = zero_vector(space.ring, space.dim);
  for (std::size_t i = 0; i < space.dim; ++i) {
    out.push_back(unit_vector(space.ring, space.dim, i));
    sum = add(sum, out.back());
  }
  if (space.dim > 1) out.push_back(sum);
  return out;
}

}  // namespace detail

/// alpha(g,h) from rho(g)rho(h)e1 = alpha rho(gh)e1, confirmed on the other
/// basis vectors and their sum. Throws ScalarInconsistent with witness
/// (g, h, i, j) when probes i and j give different scalars (index dim
/// stands for the sum), and NotProjective when the twists of rho(g)rho(h)
/// and rho(gh) differ.
inline Cocycle extract_cocycle(const SemilinearProjectiveRep& rho) {
  const auto& G = rho.group();
  const std::size_t n = G.order();
  const auto probes = detail::probe_vectors(rho.space());
  Cocycle alpha(n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) {
      const auto& fg = rho(g);
      const auto& fh = rho(h);
      const auto& fgh = rho(G.mul(g, h));
      std::optional<Scalar> first;
      for (std::size_t i = 0; i < probes.size(); ++i) {
        auto c = detail::ratio(fg.apply(fh.apply(probes[i])), fgh.apply(probes[i]));
        if (!c) fail(errc::scalar_inconsistent, "rho(g)rho(h)v is not a multiple of rho(gh)v", {g, h, i, i});
        if (!first) first = c;
        else if (*c != *first)
          fail(errc::scalar_inconsistent, "scalar depends on the probe vector", {g, h, 0, i});
      }
      if (fg.theta().compose(fh.theta()) != fgh.theta())
        fail(errc::not_projective, "twist of rho(g)rho(h) differs from twist of rho(gh)", {g, h});
      alpha[g].push_back(*first);
    }
  return alpha;
}

struct RepClassification {
  bool linear = false;
  bool projective_linear = false;  // every twist is the identity
  bool semilinear = false;         // alpha == 1
  Cocycle cocycle;

  std::string name() const {
    if (linear) return "linear";
    if (projective_linear) return "projective-linear";
    if (semilinear) return "semilinear";
    return "semilinear-projective";
  }
};

/// Checks rho(g)rho(h) = alpha(g,h)rho(gh) as an identity of maps and that
/// rho(e) is a scalar multiple of the identity. NotProjective(g,h) on
/// failure.
inline RepClassification validate_rep(const SemilinearProjectiveRep& rho) {
  const auto& G = rho.group();
  const std::size_t n = G.order();
  if (!rho(0).is_linear() || !detail::ratio(rho(0).matrix().data(), Matrix::identity(rho.space().ring, rho.space().dim).data()))
    fail(errc::not_projective, "rho(e) is not a scalar multiple of the identity", {0, 0});
  Cocycle alpha;
  try {
    alpha = extract_cocycle(rho);
  } catch (const error& e) {
    if (e.code() != errc::scalar_inconsistent) throw;
    fail(errc::not_projective, e.what(), {e.witness().at(0), e.witness().at(1)});
  }
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      if (!(rho(g).compose(rho(h)) == rho(G.mul(g, h)).scaled(alpha[g][h])))
        fail(errc::not_projective, "no single scalar relates rho(g)rho(h) and rho(gh)", {g, h});
  RepClassification c;
  c.projective_linear = std::all_of(rho.maps().begin(), rho.maps().end(), [](const SemilinearMap& f) { return f.is_linear(); });
  c.semilinear = true;
  for (const auto& row : alpha)
    for (const auto& a : row) c.semilinear = c.semilinear && a.is_one();
  c.linear = c.projective_linear && c.semilinear;
  c.cocycle = std::move(alpha);
  return c;
}

/// g·W = rho(g)W on the enumerated subspace lattice.
inline GLatticeAction induced_glattice(const SemilinearProjectiveRep& rho, const SubspaceLattice& S) {
  if (!(S.space == rho.space())) fail(errc::space_mismatch, "subspace lattice belongs to another space");
  const std::size_t m = S.subspaces.size();
  std::vector<std::vector<std::size_t>> table(rho.group().order(), std::vector<std::size_t>(m));
  for (std::size_t g = 0; g < rho.group().order(); ++g)
    for (std::size_t i = 0; i < m; ++i) table[g][i] = S.index_of(map_subspace(rho(g), S.subspaces[i]));
  return GLatticeAction(rho.group(), S.lattice, table);
}

inline GLatticeAction induced_glattice(const SemilinearProjectiveRep& rho) {
  require_enumerable(rho.space());
  return induced_glattice(rho, enumerate_subspaces(rho.space()));
}

/// The lattice automorphism W -> fW.
inline LatticeAutomorphism induced_automorphism(const SemilinearMap& f, const SubspaceLattice& S) {
  std::vector<std::size_t> perm(S.subspaces.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = S.index_of(map_subspace(f, S.subspaces[i]));
  return LatticeAutomorphism::make(S.lattice, std::move(perm));
}

/// First f in SGL(V) order with fW = phi(W) for every subspace W. Lines are
/// compared first since they reject most candidates.
inline SemilinearMap coordinatize(const LatticeAutomorphism& phi, const SubspaceLattice& S) {
  const std::size_t m = S.subspaces.size();
  if (phi.size() != m) fail(errc::shape_mismatch, "automorphism does not act on this lattice");
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < m; ++i)
    if (S.subspaces[i].rank() == 1) order.push_back(i);
  for (std::size_t i = 0; i < m; ++i)
    if (S.subspaces[i].rank() != 1) order.push_back(i);
  std::optional<SemilinearMap> found;
  for_each_sgl(S.space, [&](const SemilinearMap& f) {
    for (std::size_t i : order)
      if (S.index_of(map_subspace(f, S.subspaces[i])) != phi(i)) return true;
    found = f;
    return false;
  });
  if (!found) fail(errc::not_coordinatizable, "no semilinear automorphism induces this lattice automorphism");
  return *found;
}

/// One coordinatizing map per group element. The result is checked to be
/// projective through extract_cocycle.
inline SemilinearProjectiveRep rep_from_glattice(const GLatticeAction& A, const SubspaceLattice& S) {
  if (!(A.lattice() == S.lattice)) fail(errc::space_mismatch, "action is not on this subspace lattice");
  const auto rho_l = homomorphism_from_action(A);
  std::vector<SemilinearMap> maps;
  for (const auto& phi : rho_l) maps.push_back(coordinatize(phi, S));
  SemilinearProjectiveRep rho(A.group(), S.space, std::move(maps));
  extract_cocycle(rho);
  return rho;
}

/// eta with rho2(g) = eta(g)·rho1(g).
struct RepEquivalence {
  std::vector<Scalar> eta;
};

/// Solves eta(g) at the first basis vector with nonzero image, then checks
/// the whole map. nullopt when the representations are not equivalent.
inline std::optional<RepEquivalence> rep_equivalence(const SemilinearProjectiveRep& rho1, const SemilinearProjectiveRep& rho2) {
  if (!(rho1.space() == rho2.space())) fail(errc::space_mismatch, "representations act on different spaces");
  if (!(rho1.group() == rho2.group())) fail(errc::space_mismatch, "representations of different groups");
  RepEquivalence out;
  const auto e1 = unit_vector(rho1.space().ring, rho1.space().dim, 0);
  for (std::size_t g = 0; g < rho1.group().order(); ++g) {
    auto c = detail::ratio(rho2(g).apply(e1), rho1(g).apply(e1));
    if (!c || !(rho2(g) == rho1(g).scaled(*c))) return std::nullopt;
    out.eta.push_back(*c);
  }
  return out;
}

}  // namespace glat
