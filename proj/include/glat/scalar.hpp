#pragma once

// Exact scalars: GF(p), GF(p^k), the rationals, and the rational
// quaternions, together with the ring automorphisms used as twists.

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "glat/error.hpp"

namespace glat {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_to_string(const Rational& r) { return r.str(); }

/// Parses "n", "-n" or "n/d" into a reduced fraction.
inline Rational parse_rational(const std::string& text) {
  auto bad = [&] { fail(errc::parse_error, "not a rational literal: '" + text + "'"); };
  auto parse_int = [&](std::string s) -> BigInt {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start) bad();
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') bad();
    if (s[0] == '+') s.erase(0, 1);
    return BigInt(s);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) fail(errc::division_by_zero, "zero denominator in '" + text + "'");
  return Rational(num, den);
}

/// a + b i + c j + d k with rational coordinates.
struct Quaternion {
  std::array<Rational, 4> c{};

  Quaternion() = default;
  Quaternion(Rational a, Rational b, Rational cc, Rational d) : c{std::move(a), std::move(b), std::move(cc), std::move(d)} {}

  bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }
  bool is_real() const { return c[1] == 0 && c[2] == 0 && c[3] == 0; }
  Rational norm() const { return c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3]; }
  Quaternion conj() const { return {c[0], -c[1], -c[2], -c[3]}; }

  friend bool operator==(const Quaternion&, const Quaternion&) = default;
  friend Quaternion operator+(const Quaternion& x, const Quaternion& y) {
    return {x.c[0] + y.c[0], x.c[1] + y.c[1], x.c[2] + y.c[2], x.c[3] + y.c[3]};
  }
  friend Quaternion operator-(const Quaternion& x, const Quaternion& y) {
    return {x.c[0] - y.c[0], x.c[1] - y.c[1], x.c[2] - y.c[2], x.c[3] - y.c[3]};
  }
  friend Quaternion operator-(const Quaternion& x) { return {-x.c[0], -x.c[1], -x.c[2], -x.c[3]}; }
  friend Quaternion operator*(const Quaternion& x, const Quaternion& y) {
    const auto& [a1, b1, c1, d1] = x.c;
    const auto& [a2, b2, c2, d2] = y.c;
    return {a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2};
  }
  Quaternion inverse() const {
    Rational n = norm();
    if (n == 0) fail(errc::division_by_zero, "inverse of quaternion 0");
    Quaternion q = conj();
    for (auto& x : q.c) x /= n;
    return q;
  }
};

enum class RingKind { prime_field, extension_field, rationals, quaternions };

class DivisionRing;
using RingPtr = std::shared_ptr<const DivisionRing>;

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// A division ring with exactly represented elements. Finite fields encode
/// each element as an integer code: the residue for GF(p), and
/// sum c_i p^i over the reduced polynomial coefficients for GF(p^k).
class DivisionRing {
 public:
  static RingPtr prime_field(std::int64_t p) {
    if (!is_prime(p)) fail(errc::not_prime, std::to_string(p) + " is not prime");
    if (p > (std::int64_t{1} << 30)) fail(errc::too_large, "characteristic too large");
    auto r = std::shared_ptr<DivisionRing>(new DivisionRing(RingKind::prime_field));
    r->p_ = p;
    r->k_ = 1;
    r->q_ = p;
    r->modulus_ = {0, 1};
    r->build_tables();
    return r;
  }

  /// GF(p^k). With no modulus, picks the monic irreducible whose lower
  /// coefficients (c_{k-1}, ..., c_0) are lexicographically smallest.
  /// `modulus` lists coefficients from the constant term up, leading 1 included.
  static RingPtr extension_field(std::int64_t p, int k, std::optional<std::vector<std::int64_t>> modulus = {}) {
    if (!is_prime(p)) fail(errc::not_prime, std::to_string(p) + " is not prime");
    if (k < 2) fail(errc::not_irreducible, "extension degree must be at least 2");
    std::int64_t q = 1;
    for (int i = 0; i < k; ++i) {
      q *= p;
      if (q > (std::int64_t{1} << 24)) fail(errc::too_large, "field order exceeds 2^24");
    }
    auto r = std::shared_ptr<DivisionRing>(new DivisionRing(RingKind::extension_field));
    r->p_ = p;
    r->k_ = k;
    r->q_ = q;
    if (modulus) {
      const auto& m = *modulus;
      if (m.size() != static_cast<std::size_t>(k) + 1 || m.back() != 1)
        fail(errc::not_irreducible, "modulus must be monic of degree " + std::to_string(k));
      for (auto c : m)
        if (c < 0 || c >= p) fail(errc::not_irreducible, "modulus coefficient out of range");
      if (!irreducible(m, p)) fail(errc::not_irreducible, "modulus is reducible over GF(" + std::to_string(p) + ")");
      r->modulus_ = m;
    } else {
      r->modulus_ = smallest_irreducible(p, k);
    }
    r->build_tables();
    return r;
  }

  static RingPtr gf(std::int64_t p, int k = 1) { return k == 1 ? prime_field(p) : extension_field(p, k); }

  static RingPtr rationals() {
    static const RingPtr r = std::shared_ptr<DivisionRing>(new DivisionRing(RingKind::rationals));
    return r;
  }
  static RingPtr quaternions() {
    static const RingPtr r = std::shared_ptr<DivisionRing>(new DivisionRing(RingKind::quaternions));
    return r;
  }

  RingKind kind() const { return kind_; }
  bool is_finite() const { return kind_ == RingKind::prime_field || kind_ == RingKind::extension_field; }
  bool is_commutative() const { return kind_ != RingKind::quaternions; }
  std::int64_t characteristic() const { return p_; }
  int degree() const { return k_; }
  /// Number of elements; 0 for infinite rings.
  std::int64_t order() const { return q_; }
  const std::vector<std::int64_t>& modulus() const { return modulus_; }

  std::string name() const {
    switch (kind_) {
      case RingKind::prime_field: return "GF(" + std::to_string(p_) + ")";
      case RingKind::extension_field: return "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
      case RingKind::rationals: return "Q";
      case RingKind::quaternions: return "H(Q)";
    }
    return "?";
  }

  friend bool operator==(const DivisionRing& a, const DivisionRing& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_ && a.k_ == b.k_ && a.modulus_ == b.modulus_;
  }

  // Code-level arithmetic for finite fields.
  std::int64_t add(std::int64_t a, std::int64_t b) const {
    if (kind_ == RingKind::prime_field) return (a + b) % p_;
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    std::int64_t out = 0, place = 1;
    for (int i = 0; i < k_; ++i, a /= p_, b /= p_, place *= p_) out += ((a % p_ + b % p_) % p_) * place;
    return out;
  }
  std::int64_t neg(std::int64_t a) const {
    if (kind_ == RingKind::prime_field) return a == 0 ? 0 : p_ - a;
    std::int64_t out = 0, place = 1;
    for (int i = 0; i < k_; ++i, a /= p_, place *= p_) out += ((p_ - a % p_) % p_) * place;
    return out;
  }
  std::int64_t sub(std::int64_t a, std::int64_t b) const { return add(a, neg(b)); }
  std::int64_t mul(std::int64_t a, std::int64_t b) const {
    if (kind_ == RingKind::prime_field) return (a * b) % p_;
    if (!mul_table_.empty()) return mul_table_[a * q_ + b];
    return encode(polymul(coefficients(a), coefficients(b)));
  }
  std::int64_t inv(std::int64_t a) const {
    if (a == 0) fail(errc::division_by_zero, "inverse of 0 in " + name());
    if (!inv_table_.empty()) return inv_table_[a];
    return pow(a, q_ - 2);
  }
  std::int64_t pow(std::int64_t a, std::int64_t e) const {
    std::int64_t result = 1;
    while (e > 0) {
      if (e & 1) result = mul(result, a);
      a = mul(a, a);
      e >>= 1;
    }
    return result;
  }

  std::vector<std::int64_t> coefficients(std::int64_t code) const {
    std::vector<std::int64_t> c(k_);
    for (int i = 0; i < k_; ++i, code /= p_) c[i] = code % p_;
    return c;
  }
  std::int64_t encode(const std::vector<std::int64_t>& c) const {
    std::int64_t out = 0, place = 1;
    for (std::size_t i = 0; i < c.size() && i < static_cast<std::size_t>(k_); ++i, place *= p_)
      out += (((c[i] % p_) + p_) % p_) * place;
    return out;
  }

 private:
  explicit DivisionRing(RingKind kind) : kind_(kind) {}

  // Polynomial product reduced modulo the modulus (coefficients low to high).
  std::vector<std::int64_t> polymul(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) const {
    std::vector<std::int64_t> prod(2 * k_, 0);
    for (int i = 0; i < k_; ++i)
      if (a[i] != 0)
        for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
    for (int d = 2 * k_ - 1; d >= k_; --d) {
      std::int64_t c = prod[d];
      if (c == 0) continue;
      for (int i = 0; i <= k_; ++i) prod[d - k_ + i] = ((prod[d - k_ + i] - c * modulus_[i]) % p_ + p_) % p_;
    }
    prod.resize(k_);
    return prod;
  }

  // True when `f` (monic, degree deg) has no monic factor of degree 1..deg/2.
  static bool irreducible(const std::vector<std::int64_t>& f, std::int64_t p) {
    int deg = static_cast<int>(f.size()) - 1;
    for (int d = 1; d <= deg / 2; ++d) {
      std::int64_t count = 1;
      for (int i = 0; i < d; ++i) count *= p;
      for (std::int64_t code = 0; code < count; ++code) {
        std::vector<std::int64_t> g(d + 1);
        std::int64_t c = code;
        for (int i = 0; i < d; ++i, c /= p) g[i] = c % p;
        g[d] = 1;
        if (divides(g, f, p)) return false;
      }
    }
    return true;
  }

  static bool divides(const std::vector<std::int64_t>& g, std::vector<std::int64_t> f, std::int64_t p) {
    int dg = static_cast<int>(g.size()) - 1;
    for (int d = static_cast<int>(f.size()) - 1; d >= dg; --d) {
      std::int64_t c = f[d];
      if (c == 0) continue;
      for (int i = 0; i <= dg; ++i) f[d - dg + i] = ((f[d - dg + i] - c * g[i]) % p + p) % p;
    }
    return std::all_of(f.begin(), f.end(), [](std::int64_t c) { return c == 0; });
  }

  static std::vector<std::int64_t> smallest_irreducible(std::int64_t p, int k) {
    std::int64_t count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    // Order on (c_{k-1}, ..., c_0) lexicographically is the order of the
    // base-p number with c_{k-1} as most significant digit.
    for (std::int64_t code = 0; code < count; ++code) {
      std::vector<std::int64_t> f(k + 1);
      std::int64_t c = code;
      for (int i = 0; i < k; ++i, c /= p) f[i] = c % p;
      f[k] = 1;
      if (irreducible(f, p)) return f;
    }
    fail(errc::not_irreducible, "no irreducible polynomial found");
  }

  void build_tables() {
    if (q_ > 256) return;
    add_table_.assign(q_ * q_, 0);
    mul_table_.assign(q_ * q_, 0);
    inv_table_.assign(q_, 0);
    std::vector<std::int64_t> add_saved, mul_saved;
    for (std::int64_t a = 0; a < q_; ++a) {
      auto ca = coefficients(a);
      for (std::int64_t b = 0; b < q_; ++b) {
        auto cb = coefficients(b);
        std::vector<std::int64_t> s(k_);
        for (int i = 0; i < k_; ++i) s[i] = (ca[i] + cb[i]) % p_;
        add_table_[a * q_ + b] = encode(s);
        mul_table_[a * q_ + b] = kind_ == RingKind::prime_field ? (a * b) % p_ : encode(polymul(ca, cb));
      }
    }
    for (std::int64_t a = 1; a < q_; ++a)
      for (std::int64_t b = 1; b < q_; ++b)
        if (mul_table_[a * q_ + b] == 1) inv_table_[a] = b;
  }

  RingKind kind_;
  std::int64_t p_ = 0;
  int k_ = 0;
  std::int64_t q_ = 0;
  std::vector<std::int64_t> modulus_;
  std::vector<std::int64_t> add_table_, mul_table_, inv_table_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a && b && (a.get() == b.get() || *a == *b);
}

/// An element of a division ring, in canonical form.
class Scalar {
 public:
  Scalar() = default;

  static Scalar from_code(RingPtr ring, std::int64_t code) {
    if (!ring->is_finite()) fail(errc::infinite_carrier, "element codes exist only for finite fields");
    if (code < 0 || code >= ring->order())
      fail(errc::malformed_table, "element code " + std::to_string(code) + " out of range for " + ring->name());
    return Scalar(std::move(ring), Payload{code});
  }
  static Scalar from_int(RingPtr ring, long long n) { return from_rational(std::move(ring), Rational(n)); }
  /// The image of a rational number under the prime-subfield embedding.
  static Scalar from_rational(RingPtr ring, const Rational& r) {
    switch (ring->kind()) {
      case RingKind::rationals: return Scalar(std::move(ring), Payload{r});
      case RingKind::quaternions:
        return Scalar(std::move(ring), Payload{std::make_shared<const Quaternion>(r, 0, 0, 0)});
      default: {
        BigInt p = ring->characteristic();
        BigInt num = boost::multiprecision::numerator(r) % p;
        BigInt den = boost::multiprecision::denominator(r) % p;
        if (num < 0) num += p;
        if (den == 0) fail(errc::division_by_zero, "denominator divisible by characteristic");
        std::int64_t n = static_cast<std::int64_t>(num), d = static_cast<std::int64_t>(den);
        return Scalar(ring, Payload{ring->mul(n, ring->inv(d))});
      }
    }
  }
  static Scalar from_coefficients(RingPtr ring, const std::vector<std::int64_t>& coeffs) {
    if (ring->kind() != RingKind::extension_field && ring->kind() != RingKind::prime_field)
      fail(errc::ring_mismatch, "coefficient vectors need a finite field");
    if (coeffs.size() > static_cast<std::size_t>(ring->degree()))
      fail(errc::malformed_table, "too many coefficients for " + ring->name());
    return Scalar(ring, Payload{ring->encode(coeffs)});
  }
  static Scalar from_quaternion(RingPtr ring, Quaternion q) {
    if (ring->kind() != RingKind::quaternions) fail(errc::ring_mismatch, "quaternion literal for " + ring->name());
    return Scalar(std::move(ring), Payload{std::make_shared<const Quaternion>(std::move(q))});
  }
  static Scalar zero(RingPtr ring) { return from_int(std::move(ring), 0); }
  static Scalar one(RingPtr ring) { return from_int(std::move(ring), 1); }

  const RingPtr& ring() const { return ring_; }
  bool valid() const { return ring_ != nullptr; }

  bool is_zero() const {
    return std::visit(
        [](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, std::int64_t>) return v == 0;
          else if constexpr (std::is_same_v<T, Rational>) return v == 0;
          else return v->is_zero();
        },
        payload_);
  }
  bool is_one() const { return *this == one(ring_); }

  std::int64_t code() const {
    if (!std::holds_alternative<std::int64_t>(payload_)) fail(errc::infinite_carrier, "no element code for " + ring_->name());
    return std::get<std::int64_t>(payload_);
  }
  std::vector<std::int64_t> coefficients() const { return ring_->coefficients(code()); }
  const Rational& rational() const {
    if (!std::holds_alternative<Rational>(payload_)) fail(errc::ring_mismatch, "not a rational scalar");
    return std::get<Rational>(payload_);
  }
  const Quaternion& quaternion() const {
    if (!std::holds_alternative<QPtr>(payload_)) fail(errc::ring_mismatch, "not a quaternion scalar");
    return *std::get<QPtr>(payload_);
  }

  Scalar inverse() const {
    if (is_zero()) fail(errc::division_by_zero, "inverse of zero in " + ring_->name());
    switch (ring_->kind()) {
      case RingKind::rationals: return Scalar(ring_, Payload{Rational(1) / rational()});
      case RingKind::quaternions: return Scalar(ring_, Payload{std::make_shared<const Quaternion>(quaternion().inverse())});
      default: return Scalar(ring_, Payload{ring_->inv(code())});
    }
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    check(a, b);
    switch (a.ring_->kind()) {
      case RingKind::rationals: return Scalar(a.ring_, Payload{a.rational() + b.rational()});
      case RingKind::quaternions:
        return Scalar(a.ring_, Payload{std::make_shared<const Quaternion>(a.quaternion() + b.quaternion())});
      default: return Scalar(a.ring_, Payload{a.ring_->add(a.code(), b.code())});
    }
  }
  friend Scalar operator-(const Scalar& a) {
    switch (a.ring_->kind()) {
      case RingKind::rationals: return Scalar(a.ring_, Payload{Rational(-a.rational())});
      case RingKind::quaternions: return Scalar(a.ring_, Payload{std::make_shared<const Quaternion>(-a.quaternion())});
      default: return Scalar(a.ring_, Payload{a.ring_->neg(a.code())});
    }
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    check(a, b);
    return a + (-b);
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    check(a, b);
    switch (a.ring_->kind()) {
      case RingKind::rationals: return Scalar(a.ring_, Payload{a.rational() * b.rational()});
      case RingKind::quaternions:
        return Scalar(a.ring_, Payload{std::make_shared<const Quaternion>(a.quaternion() * b.quaternion())});
      default: return Scalar(a.ring_, Payload{a.ring_->mul(a.code(), b.code())});
    }
  }
  /// a * b^{-1}.
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    check(a, b);
    return a * b.inverse();
  }
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (!same_ring(a.ring_, b.ring_)) return false;
    if (a.payload_.index() != b.payload_.index()) return false;
    if (std::holds_alternative<QPtr>(a.payload_)) return a.quaternion() == b.quaternion();
    return a.payload_ == b.payload_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  /// Total order used for deterministic output: codes, rational value, or
  /// quaternion coordinates lexicographically.
  friend bool operator<(const Scalar& a, const Scalar& b) {
    check(a, b);
    if (std::holds_alternative<std::int64_t>(a.payload_)) return a.code() < b.code();
    if (std::holds_alternative<Rational>(a.payload_)) return a.rational() < b.rational();
    return a.quaternion().c < b.quaternion().c;
  }

  std::string to_string() const {
    if (!ring_) return "<empty>";
    switch (ring_->kind()) {
      case RingKind::prime_field: return std::to_string(code());
      case RingKind::extension_field: {
        auto c = coefficients();
        std::string out;
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
          if (c[i] == 0) continue;
          if (!out.empty()) out += "+";
          std::string mono = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
          if (c[i] != 1 || i == 0) out += std::to_string(c[i]);
          out += mono;
        }
        return out.empty() ? "0" : out;
      }
      case RingKind::rationals: return rational_to_string(rational());
      case RingKind::quaternions: {
        const auto& q = quaternion();
        return "(" + q.c[0].str() + "," + q.c[1].str() + "," + q.c[2].str() + "," + q.c[3].str() + ")";
      }
    }
    return "?";
  }

 private:
  using QPtr = std::shared_ptr<const Quaternion>;
  using Payload = std::variant<std::int64_t, Rational, QPtr>;

  Scalar(RingPtr ring, Payload payload) : ring_(std::move(ring)), payload_(std::move(payload)) {}

  static void check(const Scalar& a, const Scalar& b) {
    if (!same_ring(a.ring_, b.ring_))
      fail(errc::ring_mismatch, (a.ring_ ? a.ring_->name() : "<empty>") + " vs " + (b.ring_ ? b.ring_->name() : "<empty>"));
  }

  RingPtr ring_;
  Payload payload_;
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

enum class ArithOp { add, sub, mul, inv, neg };

/// Uniform entry point for the five ring operations; `b` is ignored for
/// the unary ones.
inline Scalar ring_arithmetic(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::inv: return a.inverse();
    case ArithOp::neg: return -a;
  }
  return a;
}

/// All elements of a finite ring in code order.
inline std::vector<Scalar> elements(const RingPtr& ring) {
  if (!ring->is_finite()) fail(errc::infinite_carrier, ring->name() + " cannot be enumerated");
  std::vector<Scalar> out;
  out.reserve(ring->order());
  for (std::int64_t c = 0; c < ring->order(); ++c) out.push_back(Scalar::from_code(ring, c));
  return out;
}

/// K*: nonzero elements in code order, so 1 comes first.
inline std::vector<Scalar> units(const RingPtr& ring) {
  auto all = elements(ring);
  all.erase(all.begin());
  return all;
}

/// Pseudorandom element: uniform over a finite field, small fractions
/// n/d with |n|, d <= 9 otherwise.
template <class Engine>
Scalar random_scalar(const RingPtr& ring, Engine& rng) {
  if (ring->is_finite()) {
    std::uniform_int_distribution<std::int64_t> pick(0, ring->order() - 1);
    return Scalar::from_code(ring, pick(rng));
  }
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  auto frac = [&] { return Rational(num(rng), den(rng)); };
  if (ring->kind() == RingKind::quaternions) return Scalar::from_quaternion(ring, {frac(), frac(), frac(), frac()});
  return Scalar::from_rational(ring, frac());
}

template <class Engine>
Scalar random_unit(const RingPtr& ring, Engine& rng) {
  for (;;) {
    Scalar s = random_scalar(ring, rng);
    if (!s.is_zero()) return s;
  }
}

/// Identity, a power of Frobenius on GF(p^k), or conjugation a -> u a u^{-1}
/// on the quaternions.
class RingAutomorphism {
 public:
  enum class Kind { identity, frobenius, inner };

  RingAutomorphism() = default;

  static RingAutomorphism identity() { return {}; }
  static RingAutomorphism frobenius(RingPtr ring, int power) {
    if (ring->kind() != RingKind::extension_field) {
      if (power == 0) return identity();
      fail(errc::ring_mismatch, "Frobenius powers attach to extension fields only, not " + ring->name());
    }
    if (power < 0 || power >= ring->degree())
      fail(errc::ring_mismatch, "Frobenius power " + std::to_string(power) + " outside [0," + std::to_string(ring->degree()) + ")");
    if (power == 0) return identity();
    RingAutomorphism a;
    a.kind_ = Kind::frobenius;
    a.ring_ = std::move(ring);
    a.power_ = power;
    return a;
  }
  static RingAutomorphism inner(const Scalar& unit) {
    if (unit.ring()->kind() != RingKind::quaternions) fail(errc::ring_mismatch, "inner automorphisms attach to quaternions only");
    if (unit.is_zero()) fail(errc::division_by_zero, "inner automorphism by 0");
    if (unit.quaternion().is_real()) return identity();
    RingAutomorphism a;
    a.kind_ = Kind::inner;
    a.ring_ = unit.ring();
    a.unit_ = unit;
    return a;
  }

  Kind kind() const { return kind_; }
  int power() const { return power_; }
  const Scalar& unit() const { return unit_; }
  bool is_identity() const { return kind_ == Kind::identity; }

  /// Whether the map may be applied to elements of `ring`.
  bool attaches_to(const RingPtr& ring) const { return kind_ == Kind::identity || same_ring(ring_, ring); }

  Scalar apply(const Scalar& a) const {
    switch (kind_) {
      case Kind::identity: return a;
      case Kind::frobenius: {
        if (!same_ring(ring_, a.ring())) fail(errc::ring_mismatch, "Frobenius of " + ring_->name() + " applied to " + a.ring()->name());
        std::int64_t e = 1;
        for (int i = 0; i < power_; ++i) e *= ring_->characteristic();
        return Scalar::from_code(a.ring(), a.ring()->pow(a.code(), e));
      }
      case Kind::inner:
        if (!same_ring(ring_, a.ring())) fail(errc::ring_mismatch, "inner automorphism applied to " + a.ring()->name());
        return unit_ * a * unit_.inverse();
    }
    return a;
  }
  Scalar operator()(const Scalar& a) const { return apply(a); }

  /// this ∘ other.
  RingAutomorphism compose(const RingAutomorphism& other) const {
    if (kind_ == Kind::identity) return other;
    if (other.kind_ == Kind::identity) return *this;
    if (!same_ring(ring_, other.ring_) || kind_ != other.kind_) fail(errc::ring_mismatch, "composing automorphisms of different rings");
    if (kind_ == Kind::frobenius) return frobenius(ring_, (power_ + other.power_) % ring_->degree());
    return inner(unit_ * other.unit_);
  }

  RingAutomorphism inverse() const {
    switch (kind_) {
      case Kind::identity: return *this;
      case Kind::frobenius: return frobenius(ring_, (ring_->degree() - power_) % ring_->degree());
      case Kind::inner: return inner(unit_.inverse());
    }
    return *this;
  }

  /// Equality as maps. Inner automorphisms by u and v agree exactly when
  /// u^{-1} v is central, i.e. real.
  friend bool operator==(const RingAutomorphism& a, const RingAutomorphism& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
      case Kind::identity: return true;
      case Kind::frobenius: return same_ring(a.ring_, b.ring_) && a.power_ == b.power_;
      case Kind::inner: return (a.unit_.inverse() * b.unit_).quaternion().is_real();
    }
    return false;
  }
  friend bool operator!=(const RingAutomorphism& a, const RingAutomorphism& b) { return !(a == b); }

  std::string to_string() const {
    switch (kind_) {
      case Kind::identity: return "id";
      case Kind::frobenius: return "frob^" + std::to_string(power_);
      case Kind::inner: return "inner" + unit_.to_string();
    }
    return "?";
  }

 private:
  Kind kind_ = Kind::identity;
  RingPtr ring_;
  int power_ = 0;
  Scalar unit_;
};

inline Scalar apply_automorphism(const RingAutomorphism& phi, const Scalar& a) { return phi.apply(a); }

/// Whether `phi` is additive, multiplicative and bijective on all of a
/// finite ring.
inline bool verify_automorphism_exhaustively(const RingAutomorphism& phi, const RingPtr& ring) {
  auto all = elements(ring);
  std::vector<Scalar> image;
  image.reserve(all.size());
  for (const auto& a : all) image.push_back(phi.apply(a));
  std::vector<bool> hit(all.size(), false);
  for (const auto& b : image) hit[b.code()] = true;
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) return false;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (phi.apply(all[i] + all[j]) != image[i] + image[j]) return false;
      if (phi.apply(all[i] * all[j]) != image[i] * image[j]) return false;
    }
  return true;
}

/// Aut(K) for finite fields (the Frobenius powers) and for Q (trivial).
inline std::vector<RingAutomorphism> list_automorphisms(const RingPtr& ring) {
  switch (ring->kind()) {
    case RingKind::rationals:
    case RingKind::prime_field: return {RingAutomorphism::identity()};
    case RingKind::quaternions:
      fail(errc::infinite_automorphism_group, "inner automorphisms of " + ring->name() + " are not enumerable");
    case RingKind::extension_field: break;
  }
  std::vector<RingAutomorphism> out;
  for (int j = 0; j < ring->degree(); ++j) {
    auto phi = RingAutomorphism::frobenius(ring, j);
    if (ring->order() <= 1024 && !verify_automorphism_exhaustively(phi, ring))
      fail(errc::not_automorphism, "Frobenius power " + std::to_string(j) + " failed verification");
    out.push_back(phi);
  }
  return out;
}

}  // namespace glat
