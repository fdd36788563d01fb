#pragma once

#include <cstdlib>

#include "hopfmin/errors.hpp"
#include "hopfmin/quaternion.hpp"
#include "hopfmin/tolerances.hpp"

namespace hopfmin {

namespace detail {
/// Flip the sign of (p, q) so that the first component of p exceeding the
/// unit tolerance in magnitude is positive.  (p, q) and (−p, −q) describe the
/// same map, so this picks a deterministic representative.
inline void canonicalize_pair(quat& p, quat& q) {
  const double* c = &p.t;
  for (int idx = 0; idx < 4; ++idx) {
    if (c[idx] > tol::unit) return;
    if (c[idx] < -tol::unit) {
      p = -p;
      q = -q;
      return;
    }
  }
}

/// True when (p1,q1) and (p2,q2) agree componentwise up to a common sign.
inline bool pair_approx_eq(const quat& p1, const quat& q1, const quat& p2, const quat& q2,
                           double eps) {
  auto close = [eps](const quat& a, const quat& b) {
    return std::abs(a.t - b.t) <= eps && std::abs(a.x - b.x) <= eps &&
           std::abs(a.y - b.y) <= eps && std::abs(a.z - b.z) <= eps;
  };
  return (close(p1, p2) && close(q1, q2)) || (close(p1, -p2) && close(q1, -q2));
}
} // namespace detail

/// Orientation-preserving isometry of the three-sphere: the right action
/// h ↦ p⁻¹ h q for unit quaternions p, q.  (p, q) and (−p, −q) act
/// identically; all comparisons treat them as equal.
struct rotation4 {
  quat p{1, 0, 0, 0};
  quat q{1, 0, 0, 0};

  rotation4() = default;
  rotation4(const quat& p_, const quat& q_) : p(p_), q(q_) {}

  /// Image of h (any norm; the action is linear).
  [[nodiscard]] quat apply(const quat& h) const { return p.conj() * h * q; }

  /// Composition "this, then other" under the right action:
  /// (r₁ ∘ r₂)(h) = r₂(r₁(h)) with representative (p₁p₂, q₁q₂).
  [[nodiscard]] rotation4 then(const rotation4& o) const { return {p * o.p, q * o.q}; }

  [[nodiscard]] rotation4 inverse() const { return {p.conj(), q.conj()}; }

  /// Sign-fixed representative (first significant component of p positive).
  [[nodiscard]] rotation4 canonical() const {
    rotation4 r = *this;
    detail::canonicalize_pair(r.p, r.q);
    return r;
  }

  [[nodiscard]] bool approx_eq(const rotation4& o, double eps = tol::group) const {
    return detail::pair_approx_eq(p, q, o.p, o.q, eps);
  }

  [[nodiscard]] bool is_identity(double eps = tol::group) const {
    return approx_eq(rotation4{}, eps);
  }
};

/// Rotation of Euclidean three-space (the pure-imaginary span of i, j, k):
/// x ↦ p⁻¹ x p.  For p = cos(φ/2) + u sin(φ/2) this is the LEFT-hand
/// rotation around the pure unit axis u by angle φ.
struct rotation3 {
  quat p{1, 0, 0, 0};

  rotation3() = default;
  explicit rotation3(const quat& p_) : p(p_) {}

  /// Image of a pure quaternion.
  /// @throws error{errc::not_in_e3} when x has a significant real part.
  [[nodiscard]] quat apply(const quat& x) const {
    if (std::abs(x.t) > tol::unit * (1.0 + x.norm()))
      throw error(errc::not_in_e3, "rotation3::apply: argument is not pure imaginary");
    return p.conj() * x * p;
  }

  [[nodiscard]] rotation3 then(const rotation3& o) const { return rotation3{p * o.p}; }
  [[nodiscard]] rotation3 inverse() const { return rotation3{p.conj()}; }

  /// Embed as the three-sphere rotation [p, p] (fixes the real axis).
  [[nodiscard]] rotation4 as_rotation4() const { return {p, p}; }

  [[nodiscard]] rotation3 canonical() const {
    rotation3 r = *this;
    quat dummy = r.p;
    detail::canonicalize_pair(r.p, dummy);
    return r;
  }

  [[nodiscard]] bool approx_eq(const rotation3& o, double eps = tol::group) const {
    return detail::pair_approx_eq(p, p, o.p, o.p, eps);
  }

  [[nodiscard]] bool is_identity(double eps = tol::group) const {
    return approx_eq(rotation3{}, eps);
  }
};

/// Element of the full orthogonal group of the two-sphere: a rotation
/// optionally composed with the antipodal map, x ↦ sign · p⁻¹ x p.
/// Plane reflections are exactly the sign = −1 elements whose rotation part
/// is a half turn (p pure).
struct signed_rotation3 {
  rotation3 rot;
  int sign = +1;

  [[nodiscard]] quat apply(const quat& x) const { return rot.apply(x) * double(sign); }

  [[nodiscard]] signed_rotation3 then(const signed_rotation3& o) const {
    return {rot.then(o.rot), sign * o.sign};
  }
  [[nodiscard]] signed_rotation3 inverse() const { return {rot.inverse(), sign}; }

  [[nodiscard]] signed_rotation3 canonical() const { return {rot.canonical(), sign}; }

  [[nodiscard]] bool approx_eq(const signed_rotation3& o, double eps = tol::group) const {
    return sign == o.sign && rot.approx_eq(o.rot, eps);
  }

  [[nodiscard]] bool is_identity(double eps = tol::group) const {
    return sign == +1 && rot.is_identity(eps);
  }

  /// True when this element fixes a circle pointwise (a mirror reflection):
  /// sign −1 with a half-turn rotation part.
  [[nodiscard]] bool is_reflection(double eps = tol::group) const {
    return sign == -1 && std::abs(rot.p.t) <= eps;
  }

  /// Unit normal of the mirror circle of a reflection (defined up to sign).
  [[nodiscard]] quat mirror_normal() const {
    quat u = rot.p;
    u.t = 0.0;
    return u.normalized();
  }
};

/// Isometry of the three-sphere allowing orientation reversal:
/// h ↦ p⁻¹ h q when flip = false, h ↦ p⁻¹ (−h̄) q when flip = true.
/// (−h̄ is the reflection about the hyperplane orthogonal to the real axis.)
struct o4_element {
  quat p{1, 0, 0, 0};
  quat q{1, 0, 0, 0};
  bool flip = false;

  o4_element() = default;
  o4_element(const quat& p_, const quat& q_, bool flip_ = false) : p(p_), q(q_), flip(flip_) {}
  explicit o4_element(const rotation4& r) : p(r.p), q(r.q), flip(false) {}

  [[nodiscard]] quat apply(const quat& h) const {
    return flip ? p.conj() * (-h.conj()) * q : p.conj() * h * q;
  }

  /// Composition "this, then other".
  [[nodiscard]] o4_element then(const o4_element& o) const {
    if (!o.flip) return {p * o.p, q * o.q, flip};
    return {q * o.p, p * o.q, !flip};
  }

  [[nodiscard]] o4_element inverse() const {
    return flip ? o4_element{q.conj(), p.conj(), true} : o4_element{p.conj(), q.conj(), false};
  }

  [[nodiscard]] o4_element canonical() const {
    o4_element r = *this;
    detail::canonicalize_pair(r.p, r.q);
    return r;
  }

  [[nodiscard]] bool approx_eq(const o4_element& o, double eps = tol::group) const {
    return flip == o.flip && detail::pair_approx_eq(p, q, o.p, o.q, eps);
  }

  [[nodiscard]] bool is_identity(double eps = tol::group) const {
    return approx_eq(o4_element{}, eps);
  }
};

/// Reflection of ℝ⁴ about the hyperplane through 0 orthogonal to the unit
/// quaternion p: h ↦ −(h·p⁻¹)‾·p.  Sends p ↦ −p and fixes p^⊥.
[[nodiscard]] inline quat reflect_hyperplane(const quat& h, const quat& p) {
  return -((h * p.conj()).conj()) * p;
}

/// Half turn of the three-sphere about the great circle through the point a
/// (norm 2) with unit tangent w ⊥ a: the rotation [a₀ u a₀⁻¹, u] with
/// a₀ = a/2 and u = a₀⁻¹w.  Fixes the circle pointwise; an involution.
[[nodiscard]] inline rotation4 half_turn_about_geodesic(const quat& a, const quat& w) {
  const quat a0 = a * 0.5;
  const quat u = a0.conj() * w; // pure unit since w ⊥ a
  return {a0 * u * a0.conj(), u};
}

} // namespace hopfmin
