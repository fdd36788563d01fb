#include <doctest.h>

#include <cmath>
#include <random>

#include "hopfmin/hopf.hpp"

using namespace hopfmin;

namespace {

quat random_s2(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  quat q{0.0, n(rng), n(rng), n(rng)};
  return q.normalized();
}

quat random_s3(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  return quat{n(rng), n(rng), n(rng), n(rng)}.normalized() * 2.0;
}

// Independent componentwise oracle for the projection, in classical Hopf
// form: 4·P(t,x,y,z) = (t²+x²−y²−z²)·i + 2(xy−tz)·j + 2(ty+xz)·k.
quat hopf_component_oracle(const quat& r) {
  return quat{0.0, r.t * r.t + r.x * r.x - r.y * r.y - r.z * r.z,
              2.0 * (r.x * r.y - r.t * r.z), 2.0 * (r.t * r.y + r.x * r.z)} /
         4.0;
}

} // namespace

TEST_CASE("projection: fixed values, component oracle, fibre invariance") {
  CHECK(distance(hopf_project(one * 2.0), qi) < 1e-15);
  CHECK(distance(hopf_project(qj * 2.0), -qi) < 1e-15);

  std::mt19937_64 rng(2026);
  for (int it = 0; it < 100; ++it) {
    const quat r = random_s3(rng);
    const quat P = hopf_project(r);
    CHECK(is_s2_point(P, 1e-12));
    CHECK(distance(P, hopf_component_oracle(r)) < 1e-13);
    // Invariance along the fibre.
    std::uniform_real_distribution<double> th(-2 * M_PI, 2 * M_PI);
    const quat r2 = exp_i(th(rng) / 2.0) * r;
    CHECK(distance(hopf_project(r2), P) < 1e-12);
  }
}

TEST_CASE("fiber_through lands on the right fibre") {
  std::mt19937_64 rng(2027);
  CHECK(distance(fiber_through(qi), one * 2.0) < 1e-15);
  CHECK(distance(hopf_project(fiber_through(-qi)), -qi) < 1e-15);
  for (int it = 0; it < 100; ++it) {
    const quat u = random_s2(rng);
    const quat r0 = fiber_through(u);
    CHECK(is_s3_point(r0, 1e-12));
    CHECK(distance(hopf_project(r0), u) < 1e-12);
  }
}

TEST_CASE("fibres are great circles of length 4π meeting lifts at right angles") {
  std::mt19937_64 rng(2028);
  for (int it = 0; it < 5; ++it) {
    const quat u = random_s2(rng);
    const arc3 f = fiber_circle(u);
    CHECK(distance(f.end(), f.start) < 1e-12); // closes after 4π

    // Measured circumference: geodesic distances between consecutive samples
    // along a great circle add up to the true length.
    const int n = 4096;
    double len = 0.0;
    for (int s = 0; s < n; ++s) {
      const quat a = f.point_at(4 * M_PI * s / n), b = f.point_at(4 * M_PI * (s + 1) / n);
      len += geodesic_distance3(a, b);
    }
    CHECK(std::abs(len - 4 * M_PI) < 1e-10);

    // The fibre tangent i·r/2 is orthogonal to every horizontal direction.
    const quat r = f.point_at(1.234);
    const quat vertical = qi * r * 0.5;
    quat w = random_s2(rng);
    w = (w - u * dot(w, u)).normalized();
    CHECK(std::abs(dot(vertical, horizontal_lift_direction(r, w))) < 1e-12);
  }
}

TEST_CASE("horizontal lift directions project back to the base tangent") {
  std::mt19937_64 rng(2029);
  for (int it = 0; it < 100; ++it) {
    const quat r = random_s3(rng);
    const quat u = hopf_project(r);
    quat w = random_s2(rng);
    w = (w - u * dot(w, u)).normalized();
    const quat dir = horizontal_lift_direction(r, w);
    CHECK(dir.norm() == doctest::Approx(1.0));
    CHECK(std::abs(dot(dir, r)) < 1e-12);
    // Push forward along the lifted geodesic and difference the projection.
    const arc3 lifted{r, dir, 1.0};
    const double h = 1e-6;
    const quat dP = (hopf_project(lifted.point_at(h)) - u) / h;
    CHECK(distance(dP, w) < 1e-5);
  }
}

TEST_CASE("lifting preserves lengths and corner angles") {
  // Octant loop i → j → k → i.
  const std::vector<arc2> base = {arc2::toward(qi, qj, M_PI / 2), arc2::toward(qj, qk, M_PI / 2),
                                  arc2::toward(qk, qi, M_PI / 2)};
  const auto lifted = lift_path(base, one * 2.0);
  REQUIRE(lifted.size() == 3);
  for (std::size_t t = 0; t < 3; ++t) {
    CHECK(lifted[t].length == doctest::Approx(base[t].length));
    // Chaining upstairs.
    if (t > 0) CHECK(distance(lifted[t - 1].end(), lifted[t].start) < 1e-12);
    // The lift stays horizontal along the way.
    for (double s : {0.0, 0.5, 1.3}) {
      const quat r = lifted[t].point_at(s);
      const quat v = lifted[t].tangent_at(s);
      CHECK(std::abs(dot(v, qi * r * 0.5)) < 1e-12);
    }
    // Corner angles agree with the base corner angles.
    const arc2& bin = base[t];
    const arc2& bout = base[(t + 1) % 3];
    const double base_angle = angle_between(bin.end_tangent() * -1.0, bout.tangent);
    const arc3& lin = lifted[t];
    const quat lift_in = lin.end_tangent() * -1.0;
    const quat lift_out = t + 1 < 3 ? lifted[t + 1].tangent
                                    : horizontal_lift_direction(lin.end(), bout.tangent);
    CHECK(angle_between(lift_in, lift_out) == doctest::Approx(base_angle).epsilon(1e-10));
  }

  // Frozen endpoint: the octant lift from 2 ends at 2e^{-iπ/4}
  // (hand computation via r₁ = √2(1−k), r₂ = 1−i+j−k).
  const quat end = lifted.back().end();
  CHECK(distance(end, exp_i(-M_PI / 4) * 2.0) < 1e-12);
}

TEST_CASE("lift displacement: octant sign and area magnitude") {
  const polygon2 octant{{arc2::toward(qi, qj, M_PI / 2), arc2::toward(qj, qk, M_PI / 2),
                         arc2::toward(qk, qi, M_PI / 2)}};
  // Interior (area π/2) on the left ⟹ θ = −π/2.
  const double theta = lift_displacement(octant, one * 2.0);
  CHECK(theta == doctest::Approx(-M_PI / 2).epsilon(1e-12));

  // Reversed traversal puts the octant on the right ⟹ θ = +π/2.
  const polygon2 reversed{{arc2::toward(qi, qk, M_PI / 2), arc2::toward(qk, qj, M_PI / 2),
                           arc2::toward(qj, qi, M_PI / 2)}};
  CHECK(lift_displacement(reversed, one * 2.0) == doctest::Approx(M_PI / 2).epsilon(1e-12));
}

TEST_CASE("lift displacement magnitude equals enclosed area for random loops") {
  std::mt19937_64 rng(2030);
  std::uniform_real_distribution<double> radius(0.15, 1.2);
  int done = 0;
  while (done < 60) {
    // Random triangle inside an open hemisphere around a random centre.
    const quat c = random_s2(rng);
    quat e1 = random_s2(rng);
    e1 = (e1 - c * dot(e1, c)).normalized();
    const quat e2 = cross(c, e1);
    quat v[3];
    bool ok = true;
    for (int t = 0; t < 3; ++t) {
      std::uniform_real_distribution<double> ang(0.0, 2 * M_PI);
      const double rho = radius(rng), alpha = ang(rng);
      v[t] = c * std::cos(rho) + (e1 * std::cos(alpha) + e2 * std::sin(alpha)) * std::sin(rho);
    }
    for (int t = 0; t < 3; ++t)
      if (std::abs(dot(v[t], v[(t + 1) % 3])) > 0.995) ok = false;
    if (!ok) continue;
    polygon2 tri{{arc2::between(v[0], v[1]), arc2::between(v[1], v[2]),
                  arc2::between(v[2], v[0])}};
    double area = polygon_area(tri);
    if (area > 2 * M_PI) area = 4 * M_PI - area; // interior was on the right
    const double theta = lift_displacement(tri, fiber_through(v[0]));
    CHECK(std::abs(std::abs(theta) - area) < 1e-8);
    ++done;
  }
}

TEST_CASE("unit tangent bundle identification") {
  const auto [p0, w0] = uts2_identify(rotation3{});
  CHECK(distance(p0, qi) < 1e-15);
  CHECK(distance(w0, qj) < 1e-15);
  // [e^{iθ/2}] keeps the point and turns the tangent by −θ in the (j,k) frame.
  const double theta = 0.77;
  const auto [p1, w1] = uts2_identify(rotation3{exp_i(theta / 2)});
  CHECK(distance(p1, qi) < 1e-14);
  CHECK(distance(w1, qj * std::cos(theta) - qk * std::sin(theta)) < 1e-14);
  // The pair always consists of a point and a unit tangent there.
  std::mt19937_64 rng(2031);
  for (int it = 0; it < 50; ++it) {
    std::normal_distribution<double> n(0.0, 1.0);
    const rotation3 g{quat{n(rng), n(rng), n(rng), n(rng)}.normalized()};
    const auto [pt, w] = uts2_identify(g);
    CHECK(is_s2_point(pt, 1e-12));
    CHECK(is_s2_point(w, 1e-12));
    CHECK(std::abs(dot(pt, w)) < 1e-12);
  }
}

TEST_CASE("fibration-preserving isometries act as classified") {
  std::mt19937_64 rng(2032);

  // Fibre translation: distance τ along fibres, identity on the base.
  const double tau = 0.9;
  const rotation4 T = fiber_translation(tau);
  for (int it = 0; it < 20; ++it) {
    const quat r = random_s3(rng);
    const quat Tr = T.apply(r);
    CHECK(2.0 * clamped_acos(dot(r, Tr) / 4.0) == doctest::Approx(tau));
    CHECK(distance(hopf_project(Tr), hopf_project(r)) < 1e-12);
    CHECK(fiber_phase(Tr, r) == doctest::Approx(-tau)); // θ-decreasing
  }

  // Base rotation: induces [q]; over a fixed point the phase increases by φ.
  const double phi = 1.1;
  const rotation4 B = base_rotation(axis_form(qi, phi / 2));
  CHECK(fiber_phase(B.apply(one * 2.0), one * 2.0) == doctest::Approx(phi));
  for (int it = 0; it < 20; ++it) {
    const quat r = random_s3(rng);
    const quat expected = rotation3{axis_form(qi, phi / 2)}.apply(hopf_project(r));
    CHECK(distance(hopf_project(B.apply(r)), expected) < 1e-12);
  }

  // Half turn about a fibre: fixes it pointwise, induces the base half turn.
  const quat u = random_s2(rng);
  const rotation4 H = fiber_half_turn(u);
  CHECK(H.then(H).is_identity());
  const quat r0 = fiber_through(u);
  for (double th : {0.0, 1.0, 2.5}) {
    const quat r = exp_i(th / 2) * r0;
    CHECK(distance(H.apply(r), r) < 1e-12);
  }
  const auto induced = induced_base_isometry(H);
  CHECK(induced.sign == +1);
  for (int it = 0; it < 20; ++it) {
    const quat v = random_s2(rng);
    CHECK(distance(hopf_project(H.apply(fiber_through(v))), induced.apply(v)) < 1e-12);
  }

  // (e^{iτ}j, e^{iτ}j): preserves fibration with a sign flip downstairs —
  // the induced base map is the reflection fixing the circle ⊥ e^{iτ}j.
  const quat w = exp_i(0.6) * qj;
  const rotation4 R{w, w};
  CHECK(preserves_fibration(R));
  const auto refl = induced_base_isometry(R);
  CHECK(refl.sign == -1);
  CHECK(refl.is_reflection());
  for (int it = 0; it < 20; ++it) {
    const quat v = random_s2(rng);
    CHECK(distance(hopf_project(R.apply(fiber_through(v))), refl.apply(v)) < 1e-12);
  }

  // A generic rotation does not preserve the fibration.
  CHECK(!preserves_fibration(rotation4{axis_form(qj, 0.3), one}));
  CHECK_THROWS_AS((void)induced_base_isometry(rotation4{axis_form(qj, 0.3), one}), error);
}
