#pragma once

// Coordinate spaces K^n over a commutative division ring, semilinear maps,
// subspaces in reduced row echelon form, and the subspace lattice L(V).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "glat/error.hpp"
#include "glat/lattice.hpp"
#include "glat/scalar.hpp"

namespace glat {

using Vector = std::vector<Scalar>;

inline Vector make_vector(const RingPtr& ring, std::initializer_list<long long> entries) {
  Vector v;
  for (auto e : entries) v.push_back(Scalar::from_int(ring, e));
  return v;
}

inline Vector zero_vector(const RingPtr& ring, std::size_t n) { return Vector(n, Scalar::zero(ring)); }

inline Vector unit_vector(const RingPtr& ring, std::size_t n, std::size_t i) {
  Vector v = zero_vector(ring, n);
  v[i] = Scalar::one(ring);
  return v;
}

inline Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) fail(errc::dimension_mismatch, "vector lengths differ");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

/// Left scalar multiple c·v.
inline Vector scale(const Scalar& c, const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

inline bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

inline std::string to_string(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s + ")";
}

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const Scalar& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix from_rows(const std::vector<Vector>& rows) {
    Matrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows[0].size();
    for (const auto& r : rows) {
      if (r.size() != m.cols_) fail(errc::dimension_mismatch, "ragged matrix rows");
      m.data_.insert(m.data_.end(), r.begin(), r.end());
    }
    return m;
  }
  static Matrix identity(const RingPtr& ring, std::size_t n) {
    Matrix m(n, n, Scalar::zero(ring));
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(ring);
    return m;
  }
  static Matrix from_ints(const RingPtr& ring, const std::vector<std::vector<long long>>& rows) {
    std::vector<Vector> r;
    for (const auto& row : rows) {
      Vector v;
      for (auto e : row) v.push_back(Scalar::from_int(ring, e));
      r.push_back(std::move(v));
    }
    return from_rows(r);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Vector row(std::size_t i) const { return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }
  std::vector<Vector> row_list() const {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }
  const std::vector<Scalar>& data() const { return data_; }

  Matrix map_entries(const std::function<Scalar(const Scalar&)>& f) const {
    Matrix m = *this;
    for (auto& e : m.data_) e = f(e);
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(errc::dimension_mismatch, "matrix product shape mismatch");
    Matrix m(a.rows_, b.cols_, Scalar::zero(a.data_.at(0).ring()));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& x = a.at(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) m.at(i, j) += x * b.at(k, j);
      }
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form with unit pivots; zero rows dropped.
inline Matrix rref(const Matrix& in, std::vector<std::size_t>* pivots_out = nullptr) {
  std::vector<Vector> rows = in.row_list();
  const std::size_t cols = in.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Scalar inv = rows[r][c].inverse();
    for (auto& e : rows[r]) e = inv * e;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Scalar f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  if (pivots_out) *pivots_out = pivots;
  if (rows.empty()) return Matrix();
  return Matrix::from_rows(rows);
}

inline std::size_t rank(const Matrix& m) { return m.rows() == 0 ? 0 : rref(m).rows(); }

/// Inverse by Gauss-Jordan on [A | I].
inline Matrix inverse(const Matrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols() || n == 0) fail(errc::not_invertible, "matrix is not square");
  const RingPtr& ring = a.at(0, 0).ring();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    Vector r = a.row(i);
    Vector e = unit_vector(ring, n, i);
    r.insert(r.end(), e.begin(), e.end());
    rows.push_back(std::move(r));
  }
  std::vector<std::size_t> piv;
  Matrix red = rref(Matrix::from_rows(rows), &piv);
  if (red.rows() < n || piv[n - 1] != n - 1) fail(errc::not_invertible, "matrix is singular");
  Matrix out(n, n, Scalar::zero(ring));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = red.at(i, n + j);
  return out;
}

/// K^n as a left K-module.
struct VectorSpace {
  RingPtr ring;
  std::size_t dim = 0;

  VectorSpace() = default;
  VectorSpace(RingPtr r, std::size_t n) : ring(std::move(r)), dim(n) {
    if (dim == 0) fail(errc::dimension_mismatch, "dimension must be at least 1");
    if (!ring->is_commutative())
      fail(errc::non_commutative_carrier, "coordinate spaces need a commutative carrier, not " + ring->name());
  }

  friend bool operator==(const VectorSpace& a, const VectorSpace& b) { return a.dim == b.dim && same_ring(a.ring, b.ring); }
};

/// v -> M·theta(v): f(v)_i = sum_j M[i][j] theta(v_j). Satisfies
/// f(αv) = theta(α) f(v).
class SemilinearMap {
 public:
  SemilinearMap() = default;
  SemilinearMap(VectorSpace space, Matrix matrix, RingAutomorphism theta = RingAutomorphism::identity())
      : space_(std::move(space)), matrix_(std::move(matrix)), theta_(std::move(theta)) {
    if (matrix_.rows() != space_.dim || matrix_.cols() != space_.dim)
      fail(errc::dimension_mismatch, "matrix shape does not match the space");
    if (!theta_.attaches_to(space_.ring)) fail(errc::ring_mismatch, "automorphism belongs to another ring");
  }

  static SemilinearMap identity(const VectorSpace& space) { return {space, Matrix::identity(space.ring, space.dim)}; }

  const VectorSpace& space() const { return space_; }
  const Matrix& matrix() const { return matrix_; }
  const RingAutomorphism& theta() const { return theta_; }
  bool is_linear() const { return theta_.is_identity(); }
  bool is_invertible() const { return rank(matrix_) == space_.dim; }

  Vector apply(const Vector& v) const {
    if (v.size() != space_.dim) fail(errc::dimension_mismatch, "vector has wrong length");
    Vector out = zero_vector(space_.ring, space_.dim);
    for (std::size_t j = 0; j < space_.dim; ++j) {
      if (v[j].is_zero()) continue;
      Scalar tv = theta_.apply(v[j]);
      for (std::size_t i = 0; i < space_.dim; ++i) out[i] += matrix_.at(i, j) * tv;
    }
    return out;
  }
  Vector operator()(const Vector& v) const { return apply(v); }

  /// this ∘ g: matrix M_f·theta_f(M_g), twist theta_f ∘ theta_g.
  SemilinearMap compose(const SemilinearMap& g) const {
    if (!(space_ == g.space_)) fail(errc::space_mismatch, "composing maps on different spaces");
    Matrix twisted = g.matrix_.map_entries([&](const Scalar& s) { return theta_.apply(s); });
    return {space_, matrix_ * twisted, theta_.compose(g.theta_)};
  }

  /// (c·f)(v) = c·f(v).
  SemilinearMap scaled(const Scalar& c) const {
    return {space_, matrix_.map_entries([&](const Scalar& s) { return c * s; }), theta_};
  }

  /// f^{-1}(w) = theta^{-1}(M^{-1} w), i.e. matrix theta^{-1}(M^{-1}).
  SemilinearMap inverse() const {
    auto tinv = theta_.inverse();
    return {space_, glat::inverse(matrix_).map_entries([&](const Scalar& s) { return tinv.apply(s); }), tinv};
  }

  friend bool operator==(const SemilinearMap& a, const SemilinearMap& b) {
    return a.space_ == b.space_ && a.matrix_ == b.matrix_ && a.theta_ == b.theta_;
  }

 private:
  VectorSpace space_;
  Matrix matrix_;
  RingAutomorphism theta_;
};

inline Vector semilinear_apply(const SemilinearMap& f, const Vector& v) { return f.apply(v); }
inline SemilinearMap compose_semilinear(const SemilinearMap& f, const SemilinearMap& g) { return f.compose(g); }

/// A subspace stored as its canonical basis: the reduced row echelon form
/// with unit pivots. Two subspaces are equal iff their bases are.
class Subspace {
 public:
  Subspace() = default;

  static Subspace span(const VectorSpace& space, const std::vector<Vector>& vectors) {
    Subspace w;
    w.space_ = space;
    for (const auto& v : vectors)
      if (v.size() != space.dim) fail(errc::dimension_mismatch, "spanning vector has wrong length");
    if (!vectors.empty()) {
      Matrix red = rref(Matrix::from_rows(vectors), &w.pivots_);
      w.basis_ = red.row_list();
    }
    return w;
  }
  static Subspace zero(const VectorSpace& space) { return span(space, {}); }
  static Subspace whole(const VectorSpace& space) { return span(space, Matrix::identity(space.ring, space.dim).row_list()); }

  const VectorSpace& space() const { return space_; }
  const std::vector<Vector>& basis() const { return basis_; }
  std::size_t rank() const { return basis_.size(); }

  bool contains(const Vector& v) const {
    Vector r = v;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      Scalar c = r[pivots_[k]];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < r.size(); ++j) r[j] = r[j] - c * basis_[k][j];
    }
    return is_zero(r);
  }
  bool is_subspace_of(const Subspace& other) const {
    return std::all_of(basis_.begin(), basis_.end(), [&](const Vector& v) { return other.contains(v); });
  }

  /// Row-major element codes, prefixed by the rank; finite fields only.
  std::vector<std::int64_t> key() const {
    std::vector<std::int64_t> k{static_cast<std::int64_t>(rank())};
    for (const auto& row : basis_)
      for (const auto& s : row) k.push_back(s.code());
    return k;
  }

  std::string to_string() const {
    std::string s = "<";
    for (std::size_t i = 0; i < basis_.size(); ++i) s += (i ? "," : "") + glat::to_string(basis_[i]);
    return s + ">";
  }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.space_ == b.space_ && a.basis_ == b.basis_; }

 private:
  VectorSpace space_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  auto rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.space(), rows);
}

/// Intersection by the Zassenhaus algorithm: reduce [[a | a], [b | 0]];
/// rows with zero left half span the intersection in their right half.
inline Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  const auto& space = a.space();
  const std::size_t n = space.dim;
  if (a.rank() == 0 || b.rank() == 0) return Subspace::zero(space);
  std::vector<Vector> rows;
  for (const auto& v : a.basis()) {
    Vector r = v;
    r.insert(r.end(), v.begin(), v.end());
    rows.push_back(std::move(r));
  }
  for (const auto& v : b.basis()) {
    Vector r = v;
    Vector z = zero_vector(space.ring, n);
    r.insert(r.end(), z.begin(), z.end());
    rows.push_back(std::move(r));
  }
  Matrix red = rref(Matrix::from_rows(rows));
  std::vector<Vector> out;
  for (std::size_t i = 0; i < red.rows(); ++i) {
    bool left_zero = true;
    for (std::size_t j = 0; j < n && left_zero; ++j) left_zero = red.at(i, j).is_zero();
    if (left_zero) out.emplace_back(red.data().begin() + i * 2 * n + n, red.data().begin() + (i + 1) * 2 * n);
  }
  return Subspace::span(space, out);
}

/// fW = {f(w) | w in W}; f must be bijective.
inline Subspace map_subspace(const SemilinearMap& f, const Subspace& w) {
  if (!(f.space() == w.space())) fail(errc::space_mismatch, "map and subspace live in different spaces");
  if (!f.is_invertible()) fail(errc::not_invertible, "subspace images need a bijective map");
  std::vector<Vector> images;
  for (const auto& v : w.basis()) images.push_back(f.apply(v));
  return Subspace::span(w.space(), images);
}

/// L(V) with element i = subspaces[i]; ordered by dimension, then by the
/// element codes of the canonical basis.
struct SubspaceLattice {
  VectorSpace space;
  std::vector<Subspace> subspaces;
  FiniteLattice lattice;
  std::map<std::vector<std::int64_t>, std::size_t> index;

  std::size_t index_of(const Subspace& w) const {
    auto it = index.find(w.key());
    if (it == index.end()) fail(errc::space_mismatch, "subspace not in lattice");
    return it->second;
  }
};

inline void require_enumerable(const VectorSpace& space) {
  if (!space.ring->is_finite()) fail(errc::infinite_carrier, space.ring->name() + " spaces cannot be enumerated");
}

/// All subspaces of a finite space (q^n <= 5000). Join is computed as sum,
/// meet as intersection, and both are cross-checked against inclusion.
inline SubspaceLattice enumerate_subspaces(const VectorSpace& space) {
  require_enumerable(space);
  const std::int64_t q = space.ring->order();
  const std::size_t n = space.dim;
  std::int64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= q;
    if (total > 5000) fail(errc::too_large, "q^n exceeds 5000");
  }
  std::vector<Subspace> found;
  // Every RREF matrix: choose pivot columns, then fill the free entries.
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<bool> choose(n, false);
    std::fill(choose.begin(), choose.begin() + k, true);
    do {
      std::vector<std::size_t> piv;
      for (std::size_t c = 0; c < n; ++c)
        if (choose[c]) piv.push_back(c);
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = piv[r] + 1; c < n; ++c)
          if (!choose[c]) free.emplace_back(r, c);
      std::int64_t combos = 1;
      for (std::size_t i = 0; i < free.size(); ++i) combos *= q;
      for (std::int64_t code = 0; code < combos; ++code) {
        std::vector<Vector> rows(k, zero_vector(space.ring, n));
        for (std::size_t r = 0; r < k; ++r) rows[r][piv[r]] = Scalar::one(space.ring);
        std::int64_t c = code;
        for (std::size_t i = free.size(); i-- > 0; c /= q) rows[free[i].first][free[i].second] = Scalar::from_code(space.ring, c % q);
        found.push_back(Subspace::span(space, rows));
      }
    } while (std::prev_permutation(choose.begin(), choose.end()));
  }
  std::sort(found.begin(), found.end(), [](const Subspace& a, const Subspace& b) { return a.key() < b.key(); });

  SubspaceLattice out;
  out.space = space;
  const std::size_t m = found.size();
  for (std::size_t i = 0; i < m; ++i) out.index[found[i].key()] = i;
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
  std::vector<std::vector<std::size_t>> meet(m, std::vector<std::size_t>(m)), join(m, std::vector<std::size_t>(m));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(found[i].to_string());
    for (std::size_t j = 0; j < m; ++j) {
      leq[i][j] = found[i].is_subspace_of(found[j]);
      if (j < i) {
        meet[i][j] = meet[j][i];
        join[i][j] = join[j][i];
        continue;
      }
      meet[i][j] = out.index.at(subspace_intersection(found[i], found[j]).key());
      join[i][j] = out.index.at(subspace_sum(found[i], found[j]).key());
    }
  }
  out.lattice = validate_lattice({std::move(leq), std::move(meet), std::move(join), std::move(labels)});
  out.subspaces = std::move(found);
  return out;
}

/// |GL(n, q)| = prod (q^n - q^i).
inline std::int64_t general_linear_order(std::int64_t q, std::size_t n) {
  std::int64_t qn = 1;
  for (std::size_t i = 0; i < n; ++i) qn *= q;
  std::int64_t out = 1, qi = 1;
  for (std::size_t i = 0; i < n; ++i, qi *= q) out *= (qn - qi);
  return out;
}

namespace detail {

inline bool invertible_codes(const DivisionRing& K, std::vector<std::int64_t> a, std::size_t n) {
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p * n + c] == 0) ++p;
    if (p == n) return false;
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) std::swap(a[p * n + j], a[c * n + j]);
    std::int64_t inv = K.inv(a[c * n + c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i * n + c] == 0) continue;
      std::int64_t f = K.mul(a[i * n + c], inv);
      for (std::size_t j = c; j < n; ++j) a[i * n + j] = K.sub(a[i * n + j], K.mul(f, a[c * n + j]));
    }
  }
  return true;
}

}  // namespace detail

/// Visits SGL(V) in order: matrices lexicographically by row-major element
/// codes, and for each matrix the field automorphisms by Frobenius power.
/// The visitor returns false to stop.
inline void for_each_sgl(const VectorSpace& space, const std::function<bool(const SemilinearMap&)>& visit) {
  require_enumerable(space);
  const auto autos = list_automorphisms(space.ring);
  const std::int64_t q = space.ring->order();
  const std::size_t n = space.dim;
  const std::int64_t gl = general_linear_order(q, n);
  if (gl > 1000000 / static_cast<std::int64_t>(autos.size())) fail(errc::too_large, "|GL(n,q)|·|Aut K| exceeds 10^6");
  const DivisionRing& K = *space.ring;
  std::vector<std::int64_t> codes(n * n, 0);
  for (;;) {
    if (detail::invertible_codes(K, codes, n)) {
      Matrix m(n, n, Scalar::zero(space.ring));
      for (std::size_t i = 0; i < n * n; ++i) m.at(i / n, i % n) = Scalar::from_code(space.ring, codes[i]);
      for (const auto& theta : autos)
        if (!visit(SemilinearMap(space, m, theta))) return;
    }
    std::size_t pos = n * n;
    while (pos > 0) {
      --pos;
      if (++codes[pos] < q) break;
      codes[pos] = 0;
      if (pos == 0) return;
    }
  }
}

inline std::vector<SemilinearMap> enumerate_sgl(const VectorSpace& space) {
  std::vector<SemilinearMap> out;
  for_each_sgl(space, [&](const SemilinearMap& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

}  // namespace glat
