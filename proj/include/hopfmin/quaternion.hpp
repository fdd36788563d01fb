#pragma once

#include <cmath>
#include <ostream>

namespace hopfmin {

/// Quaternion t + x·i + y·j + z·k with Hamilton's relations
/// i² = j² = k² = −1,  ij = −ji = k,  jk = −kj = i,  ki = −ik = j.
///
/// Points of the radius-2 three-sphere are quaternions of norm 2; points of
/// the unit two-sphere are pure (t = 0) quaternions of norm 1 living in the
/// span of i, j, k.
struct quat {
  double t = 0.0; ///< real part
  double x = 0.0; ///< i component
  double y = 0.0; ///< j component
  double z = 0.0; ///< k component

  constexpr quat() = default;
  constexpr quat(double t_, double x_, double y_, double z_) : t(t_), x(x_), y(y_), z(z_) {}

  [[nodiscard]] constexpr quat operator+(const quat& o) const {
    return {t + o.t, x + o.x, y + o.y, z + o.z};
  }
  [[nodiscard]] constexpr quat operator-(const quat& o) const {
    return {t - o.t, x - o.x, y - o.y, z - o.z};
  }
  [[nodiscard]] constexpr quat operator-() const { return {-t, -x, -y, -z}; }
  [[nodiscard]] constexpr quat operator*(double s) const { return {t * s, x * s, y * s, z * s}; }
  [[nodiscard]] constexpr quat operator/(double s) const { return {t / s, x / s, y / s, z / s}; }

  /// Hamilton product.
  [[nodiscard]] constexpr quat operator*(const quat& o) const {
    return {t * o.t - x * o.x - y * o.y - z * o.z,
            t * o.x + x * o.t + y * o.z - z * o.y,
            t * o.y - x * o.z + y * o.t + z * o.x,
            t * o.z + x * o.y - y * o.x + z * o.t};
  }

  /// Conjugate t − x·i − y·j − z·k.
  [[nodiscard]] constexpr quat conj() const { return {t, -x, -y, -z}; }

  [[nodiscard]] constexpr double norm2() const { return t * t + x * x + y * y + z * z; }
  [[nodiscard]] double norm() const { return std::sqrt(norm2()); }
  [[nodiscard]] quat normalized() const { return *this / norm(); }

  /// Inverse q̄/|q|²; for unit quaternions this is the conjugate.
  [[nodiscard]] constexpr quat inverse() const { return conj() / norm2(); }

  constexpr bool operator==(const quat& o) const = default;
};

[[nodiscard]] constexpr quat operator*(double s, const quat& q) { return q * s; }

/// Euclidean inner product of ℝ⁴ coordinates.
[[nodiscard]] constexpr double dot(const quat& a, const quat& b) {
  return a.t * b.t + a.x * b.x + a.y * b.y + a.z * b.z;
}

/// Cross product of the imaginary parts, returned as a pure quaternion.
/// For pure p, q this equals the imaginary part of p·q.
[[nodiscard]] constexpr quat cross(const quat& a, const quat& b) {
  return {0.0, a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

[[nodiscard]] inline double distance(const quat& a, const quat& b) { return (a - b).norm(); }

/// cos θ + i sin θ, the unit complex number e^{iθ} embedded in the i-line.
[[nodiscard]] inline quat exp_i(double theta) { return {std::cos(theta), std::sin(theta), 0.0, 0.0}; }

/// cos θ + u sin θ for a pure unit axis u ("u-form" unit quaternion).
[[nodiscard]] inline quat axis_form(const quat& u, double theta) {
  return quat{std::cos(theta), 0.0, 0.0, 0.0} + u * std::sin(theta);
}

inline constexpr quat one{1.0, 0.0, 0.0, 0.0};
inline constexpr quat qi{0.0, 1.0, 0.0, 0.0};
inline constexpr quat qj{0.0, 0.0, 1.0, 0.0};
inline constexpr quat qk{0.0, 0.0, 0.0, 1.0};

inline std::ostream& operator<<(std::ostream& os, const quat& q) {
  return os << "(" << q.t << ", " << q.x << ", " << q.y << ", " << q.z << ")";
}

/// Angle ∈ [0, π] between two nonzero vectors of equal norm (clamped acos).
[[nodiscard]] inline double angle_between(const quat& a, const quat& b) {
  double c = dot(a, b) / (a.norm() * b.norm());
  if (c > 1.0) c = 1.0;
  if (c < -1.0) c = -1.0;
  return std::acos(c);
}

/// Generalized ℝ⁴ cross product: the vector orthogonal to a, b, c whose
/// cofactor expansion completes det[w a b c] = ⟨w, cross4(a,b,c)⟩.
[[nodiscard]] constexpr quat cross4(const quat& a, const quat& b, const quat& c) {
  const double m01 = b.x * c.y - b.y * c.x, m02 = b.x * c.z - b.z * c.x;
  const double m03 = b.x * c.t - b.t * c.x, m12 = b.y * c.z - b.z * c.y;
  const double m13 = b.y * c.t - b.t * c.y, m23 = b.z * c.t - b.t * c.z;
  return {+(a.x * m12 - a.y * m02 + a.z * m01),
          -(a.y * m23 - a.z * m13 + a.t * m12),
          +(a.x * m23 - a.z * m03 + a.t * m02),
          -(a.x * m13 - a.y * m03 + a.t * m01)};
}

} // namespace hopfmin
