#pragma once

// The twisted group ring K(G;H): the free left K-module on {g-bar | g in G}
// with (a g-bar)(b h-bar) = a chi(g)(b) [g,h] (gh)-bar.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "glat/error.hpp"
#include "glat/extension.hpp"
#include "glat/linalg.hpp"
#include "glat/rep.hpp"

namespace glat {

class TwistedGroupRing;
using TwistedRingPtr = std::shared_ptr<const TwistedGroupRing>;

class TwistedGroupRing {
 public:
  static TwistedRingPtr make(FactorSystem fs) {
    require_valid(fs);
    return TwistedRingPtr(new TwistedGroupRing(std::move(fs)));
  }

  const FactorSystem& factor_system() const { return fs_; }
  const FiniteGroup& group() const { return fs_.group; }
  const RingPtr& ring() const { return fs_.ring; }
  std::size_t rank() const { return fs_.group.order(); }

 private:
  explicit TwistedGroupRing(FactorSystem fs) : fs_(std::move(fs)) {}
  FactorSystem fs_;
};

/// sum_g a_g g-bar, zero coefficients omitted.
class TwistedRingElement {
 public:
  TwistedRingElement() = default;
  explicit TwistedRingElement(TwistedRingPtr parent) : parent_(std::move(parent)) {}

  static TwistedRingElement basis(const TwistedRingPtr& T, std::size_t g, const std::optional<Scalar>& coeff = std::nullopt) {
    TwistedRingElement u(T);
    u.set(g, coeff ? *coeff : Scalar::one(T->ring()));
    return u;
  }
  static TwistedRingElement scalar(const TwistedRingPtr& T, const Scalar& c) { return basis(T, 0, c); }
  static TwistedRingElement from_coefficients(const TwistedRingPtr& T, const std::vector<Scalar>& coeffs) {
    if (coeffs.size() != T->rank()) fail(errc::dimension_mismatch, "need one coefficient per group element");
    TwistedRingElement u(T);
    for (std::size_t g = 0; g < coeffs.size(); ++g) u.set(g, coeffs[g]);
    return u;
  }

  const TwistedRingPtr& parent() const { return parent_; }
  const std::map<std::size_t, Scalar>& terms() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Scalar coeff(std::size_t g) const {
    auto it = coeffs_.find(g);
    return it == coeffs_.end() ? Scalar::zero(parent_->ring()) : it->second;
  }
  std::vector<Scalar> coefficients() const {
    std::vector<Scalar> out;
    for (std::size_t g = 0; g < parent_->rank(); ++g) out.push_back(coeff(g));
    return out;
  }

  void set(std::size_t g, const Scalar& c) {
    if (g >= parent_->rank()) fail(errc::shape_mismatch, "basis index out of range");
    if (c.is_zero()) coeffs_.erase(g);
    else coeffs_.insert_or_assign(g, c);
  }

  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (const auto& [g, c] : coeffs_) s += (s.empty() ? "" : " + ") + c.to_string() + "*" + parent_->group().label(g);
    return s;
  }

  friend bool operator==(const TwistedRingElement& a, const TwistedRingElement& b) {
    return a.parent_ == b.parent_ && a.coeffs_ == b.coeffs_;
  }

 private:
  TwistedRingPtr parent_;
  std::map<std::size_t, Scalar> coeffs_;
};

namespace detail {

inline void same_parent(const TwistedRingElement& u, const TwistedRingElement& v) {
  if (u.parent() != v.parent()) fail(errc::parent_mismatch, "elements of different twisted group rings");
}

}  // namespace detail

inline TwistedRingElement tgr_add(const TwistedRingElement& u, const TwistedRingElement& v) {
  detail::same_parent(u, v);
  TwistedRingElement w = u;
  for (const auto& [g, b] : v.terms()) w.set(g, w.coeff(g) + b);
  return w;
}

/// c·u = sum c a_g g-bar.
inline TwistedRingElement tgr_scalar_mul(const Scalar& c, const TwistedRingElement& u) {
  TwistedRingElement w(u.parent());
  for (const auto& [g, a] : u.terms()) w.set(g, c * a);
  return w;
}

/// c_k = sum over gh = k of a_g chi(g)(b_h) [g,h].
inline TwistedRingElement tgr_mul(const TwistedRingElement& u, const TwistedRingElement& v) {
  detail::same_parent(u, v);
  const auto& fs = u.parent()->factor_system();
  TwistedRingElement w(u.parent());
  for (const auto& [g, a] : u.terms())
    for (const auto& [h, b] : v.terms()) {
      const std::size_t k = fs.group.mul(g, h);
      w.set(k, w.coeff(k) + a * fs.chi[g](b) * fs(g, h));
    }
  return w;
}

enum class TgrOp { add, scalar_mul, mul };

/// Dispatch form; `c` is used by scalar_mul only.
inline TwistedRingElement tgr_ops(const TwistedRingElement& u, const TwistedRingElement& v, const Scalar& c, TgrOp op) {
  switch (op) {
    case TgrOp::add: return tgr_add(u, v);
    case TgrOp::scalar_mul: return tgr_scalar_mul(c, u);
    case TgrOp::mul: return tgr_mul(u, v);
  }
  return u;
}

inline TwistedRingElement operator+(const TwistedRingElement& u, const TwistedRingElement& v) { return tgr_add(u, v); }
inline TwistedRingElement operator*(const TwistedRingElement& u, const TwistedRingElement& v) { return tgr_mul(u, v); }
inline TwistedRingElement operator*(const Scalar& c, const TwistedRingElement& u) { return tgr_scalar_mul(c, u); }

/// rho(g)(v) = g-bar · v on coordinates with respect to {h-bar}: matrix
/// entry [g,h] in row gh, column h, twist chi(g).
inline SemilinearProjectiveRep regular_representation(const TwistedGroupRing& T) {
  if (!T.ring()->is_commutative())
    fail(errc::non_commutative_carrier, "regular representation in matrix form needs a commutative carrier");
  const auto& fs = T.factor_system();
  const std::size_t n = T.rank();
  VectorSpace V(T.ring(), n);
  std::vector<SemilinearMap> maps;
  for (std::size_t g = 0; g < n; ++g) {
    Matrix m(n, n, Scalar::zero(T.ring()));
    for (std::size_t h = 0; h < n; ++h) m.at(fs.group.mul(g, h), h) = fs(g, h);
    maps.emplace_back(V, m, fs.chi[g]);
  }
  return SemilinearProjectiveRep(fs.group, V, std::move(maps));
}

/// A failed bilinearity law: `lhs` and `rhs` are the two sides evaluated
/// at scalar `a` and elements `u`, `v`.
struct AlgebraWitness {
  std::string law;
  Scalar a;
  TwistedRingElement u, v, lhs, rhs;
};

struct AlgebraReport {
  bool algebra = false;
  std::optional<AlgebraWitness> witness;
};

namespace detail {

inline std::optional<AlgebraWitness> bilinearity_failure(const Scalar& a, const TwistedRingElement& u, const TwistedRingElement& v) {
  auto auv = a * (u * v);
  auto left = (a * u) * v;
  if (!(left == auv)) return AlgebraWitness{"(a·u)·v = a·(u·v)", a, u, v, left, auv};
  auto right = u * (a * v);
  if (!(right == auv)) return AlgebraWitness{"u·(a·v) = a·(u·v)", a, u, v, right, auv};
  return std::nullopt;
}

inline std::vector<Scalar> scalar_samples(const RingPtr& K, std::uint64_t seed, std::size_t count) {
  if (K->is_finite()) return elements(K);
  std::vector<Scalar> out = test_elements(K);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_scalar(K, rng));
  return out;
}

}  // namespace detail

/// K(G;H) is a K-algebra iff K is commutative and chi == id. When it is
/// not, the witness is u = g-bar, v = 1-bar with chi(g)(a) != a, or
/// u = b·1-bar, v = 1-bar with ab != ba. When it is, both bilinearity laws
/// are checked on all basis pairs against the scalar samples.
inline AlgebraReport is_algebra(const TwistedRingPtr& T, std::uint64_t seed = 0) {
  const auto& fs = T->factor_system();
  const auto& K = T->ring();
  const auto samples = detail::scalar_samples(K, seed, 100);
  AlgebraReport r;
  auto one = TwistedRingElement::basis(T, 0);
  if (!K->is_commutative()) {
    for (const auto& a : samples)
      for (const auto& b : samples)
        if (a * b != b * a)
          if (auto w = detail::bilinearity_failure(a, TwistedRingElement::scalar(T, b), one)) {
            r.witness = std::move(w);
            return r;
          }
  }
  for (std::size_t g = 0; g < T->rank(); ++g) {
    if (fs.chi[g].is_identity()) continue;
    for (const auto& a : samples)
      if (fs.chi[g](a) != a)
        if (auto w = detail::bilinearity_failure(a, TwistedRingElement::basis(T, g), one)) {
          r.witness = std::move(w);
          return r;
        }
  }
  for (std::size_t g = 0; g < T->rank(); ++g)
    for (std::size_t h = 0; h < T->rank(); ++h)
      for (const auto& a : samples)
        if (auto w = detail::bilinearity_failure(a, TwistedRingElement::basis(T, g), TwistedRingElement::basis(T, h))) {
          r.witness = std::move(w);
          return r;
        }
  r.algebra = true;
  return r;
}

/// s·v = sum a_g rho(g)(v).
inline Vector module_action(const TwistedGroupRing& T, const SemilinearProjectiveRep& rho, const TwistedRingElement& s, const Vector& v) {
  if (s.parent().get() != &T) fail(errc::parent_mismatch, "element belongs to another twisted group ring");
  if (!(rho.group() == T.group())) fail(errc::not_associated, "representation of another group");
  Vector out = zero_vector(rho.space().ring, rho.space().dim);
  for (const auto& [g, a] : s.terms()) out = add(out, scale(a, rho(g).apply(v)));
  return out;
}

struct ModuleLawCheck {
  int law = 0;
  std::size_t cases = 0;
  std::optional<std::string> witness;  // first failing case
};

struct ModuleReport {
  std::vector<ModuleLawCheck> laws;  // laws 1..5 in order
  bool exhaustive = false;

  bool ok() const {
    return std::all_of(laws.begin(), laws.end(), [](const ModuleLawCheck& c) { return !c.witness; });
  }
};

/// Module laws for V under s·v = sum a_g rho(g)(v):
///   (1) s(u+v) = su + sv   (2) (s+t)v = sv + tv   (3) s(tv) = (st)v
///   (4) 1-bar v = v        (5) (bs)v = b(sv)
/// Exhaustive when |K|^|G| and |K|^n are at most 729; otherwise on the
/// basis plus `samples` seeded pseudorandom ring elements and vectors.
inline ModuleReport validate_module_axioms(const TwistedRingPtr& T, const SemilinearProjectiveRep& rho, std::uint64_t seed = 0,
                                           std::size_t samples = 100) {
  if (!(factor_system_from_rep(rho) == T->factor_system()))
    fail(errc::not_associated, "representation is not associated with the ring's factor system");
  const auto& K = T->ring();
  const std::size_t n = T->rank(), d = rho.space().dim;

  auto power = [](std::int64_t base, std::size_t e) {
    double x = 1;
    for (std::size_t i = 0; i < e; ++i) x *= static_cast<double>(base);
    return x;
  };
  ModuleReport report;
  report.exhaustive = K->is_finite() && power(K->order(), n) <= 729 && power(K->order(), d) <= 729;

  std::vector<TwistedRingElement> ring_elems;
  std::vector<Vector> vectors;
  std::vector<Scalar> scalars;
  if (report.exhaustive) {
    const auto all = elements(K);
    auto tuples = [&](std::size_t len) {
      std::vector<std::vector<Scalar>> out{{}};
      for (std::size_t i = 0; i < len; ++i) {
        std::vector<std::vector<Scalar>> next;
        for (const auto& t : out)
          for (const auto& x : all) {
            next.push_back(t);
            next.back().push_back(x);
          }
        out = std::move(next);
      }
      return out;
    };
    for (auto& c : tuples(n)) ring_elems.push_back(TwistedRingElement::from_coefficients(T, c));
    vectors = tuples(d);
    scalars = all;
  } else {
    std::mt19937_64 rng(seed);
    for (std::size_t g = 0; g < n; ++g) ring_elems.push_back(TwistedRingElement::basis(T, g));
    for (std::size_t i = 0; i < d; ++i) vectors.push_back(unit_vector(K, d, i));
    scalars = detail::test_elements(K);
    for (std::size_t s = 0; s < samples; ++s) {
      std::vector<Scalar> c;
      for (std::size_t g = 0; g < n; ++g) c.push_back(random_scalar(K, rng));
      ring_elems.push_back(TwistedRingElement::from_coefficients(T, c));
      Vector v;
      for (std::size_t i = 0; i < d; ++i) v.push_back(random_scalar(K, rng));
      vectors.push_back(std::move(v));
      scalars.push_back(random_scalar(K, rng));
    }
  }

  auto act = [&](const TwistedRingElement& s, const Vector& v) { return module_action(*T, rho, s, v); };
  auto check = [&](int law, auto&& body) {
    ModuleLawCheck c{law, 0, std::nullopt};
    body(c);
    report.laws.push_back(std::move(c));
  };
  auto record = [](ModuleLawCheck& c, bool ok, const std::string& what) {
    ++c.cases;
    if (!ok && !c.witness) c.witness = what;
  };

  check(1, [&](ModuleLawCheck& c) {
    for (const auto& s : ring_elems)
      for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = report.exhaustive ? 0 : i; j < vectors.size() && (report.exhaustive || j <= i + 1); ++j)
          record(c, act(s, add(vectors[i], vectors[j])) == add(act(s, vectors[i]), act(s, vectors[j])),
                 "s=" + s.to_string() + " u=" + to_string(vectors[i]) + " v=" + to_string(vectors[j]));
  });
  check(2, [&](ModuleLawCheck& c) {
    for (std::size_t i = 0; i < ring_elems.size(); ++i)
      for (std::size_t j = report.exhaustive ? 0 : i; j < ring_elems.size() && (report.exhaustive || j <= i + 1); ++j)
        for (const auto& v : vectors)
          record(c, act(ring_elems[i] + ring_elems[j], v) == add(act(ring_elems[i], v), act(ring_elems[j], v)),
                 "s=" + ring_elems[i].to_string() + " t=" + ring_elems[j].to_string() + " v=" + to_string(v));
  });
  check(3, [&](ModuleLawCheck& c) {
    for (std::size_t i = 0; i < ring_elems.size(); ++i)
      for (std::size_t j = report.exhaustive ? 0 : i; j < ring_elems.size() && (report.exhaustive || j <= i + 1); ++j)
        for (const auto& v : vectors) {
          const auto& s = ring_elems[i];
          const auto& t = ring_elems[j];
          record(c, act(s, act(t, v)) == act(s * t, v), "s=" + s.to_string() + " t=" + t.to_string() + " v=" + to_string(v));
        }
  });
  check(4, [&](ModuleLawCheck& c) {
    const auto one = TwistedRingElement::basis(T, 0);
    for (const auto& v : vectors) record(c, act(one, v) == v, "v=" + to_string(v));
  });
  check(5, [&](ModuleLawCheck& c) {
    for (const auto& b : scalars)
      for (std::size_t i = 0; i < ring_elems.size(); ++i)
        for (std::size_t j = report.exhaustive ? 0 : i % vectors.size(); j < vectors.size(); ++j) {
          const auto& s = ring_elems[i];
          const auto& v = vectors[j];
          record(c, act(b * s, v) == scale(b, act(s, v)), "b=" + b.to_string() + " s=" + s.to_string() + " v=" + to_string(v));
          if (!report.exhaustive) break;
        }
  });
  return report;
}

}  // namespace glat
