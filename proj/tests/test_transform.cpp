#include <catch2/catch.hpp>

#include <array>
#include <cmath>

#include "cpoker/transform.hpp"

using namespace cpoker;

namespace {

Mat3 affine(double a, double b, double tx, double c, double d, double ty) {
  Mat3 m = Mat3::identity();
  m.m[0] = {a, b, tx};
  m.m[1] = {c, d, ty};
  return m;
}

CameraPoint apply(const Mat3& m, const CameraPoint& p) {
  const auto v = m.apply({p.x, p.y, 1.0});
  return {v[0] / v[2], v[1] / v[2]};
}

constexpr std::array<CameraPoint, 3> kCamera = {{{100, 50}, {400, 80}, {220, 300}}};

std::array<BasePoint, 3> map_through(const Mat3& m) {
  std::array<BasePoint, 3> base{};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto p = apply(m, kCamera[i]);
    base[i] = {p.x, p.y};
  }
  return base;
}

double max_elem_error(const Mat3& a, const Mat3& b) {
  double err = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) err = std::max(err, std::abs(a.m[i][j] - b.m[i][j]));
  }
  return err;
}

}  // namespace

TEST_CASE("identical point sets calibrate to the identity") {
  const std::array<BasePoint, 3> base = {{{0, 0}, {100, 0}, {0, 100}}};
  const std::array<CameraPoint, 3> camera = {{{0, 0}, {100, 0}, {0, 100}}};
  const Transform t = calibrate(base, camera);

  CHECK(max_elem_error(t.matrix, Mat3::identity()) < 1e-12);
  CHECK(t.ratio_mm_per_px == Approx(1.0));
}

TEST_CASE("a pure translation is recovered") {
  std::array<BasePoint, 3> base{};
  for (std::size_t i = 0; i < 3; ++i) base[i] = {kCamera[i].x + 10, kCamera[i].y - 5};
  const Transform t = calibrate(base, kCamera);

  CHECK(max_elem_error(t.matrix, affine(1, 0, 10, 0, 1, -5)) < 1e-9);
  CHECK(t.ratio_mm_per_px == Approx(1.0));

  const BasePoint p = to_base(t, {0, 0});
  CHECK(p.x == Approx(10.0));
  CHECK(p.y == Approx(-5.0));
}

TEST_CASE("rotation, scale, and translation are recovered elementwise") {
  const double c = 2 * std::cos(M_PI / 6), s = 2 * std::sin(M_PI / 6);
  const Mat3 m = affine(c, -s, 12.5, s, c, -7.25);

  const Transform t = calibrate(map_through(m), kCamera);
  CHECK(max_elem_error(t.matrix, m) < 1e-9);
  CHECK(t.ratio_mm_per_px == Approx(2.0));

  SECTION("the bottom row stays homogeneous") {
    CHECK(std::abs(t.matrix.m[2][0]) < 1e-12);
    CHECK(std::abs(t.matrix.m[2][1]) < 1e-12);
    CHECK(t.matrix.m[2][2] == Approx(1.0));
  }

  SECTION("a grid of 100 points maps within a micron") {
    double worst = 0;
    for (int gx = 0; gx < 10; ++gx) {
      for (int gy = 0; gy < 10; ++gy) {
        const CameraPoint p{50.0 + 90.0 * gx, 30.0 + 65.0 * gy};
        const auto expect = apply(m, p);
        const BasePoint got = to_base(t, p);
        worst = std::max({worst, std::abs(got.x - expect.x), std::abs(got.y - expect.y)});
      }
    }
    CHECK(worst < 1e-6);
  }

  SECTION("calibration points reproduce exactly") {
    const auto base = map_through(m);
    for (std::size_t i = 0; i < 3; ++i) {
      const BasePoint got = to_base(t, kCamera[i]);
      CHECK(std::abs(got.x - base[i].x) < 1e-9);
      CHECK(std::abs(got.y - base[i].y) < 1e-9);
    }
  }

  SECTION("round trips through the inverse") {
    const Transform inv = inverse(t);
    for (int i = 0; i < 50; ++i) {
      const CameraPoint p{13.0 * i, 700.0 - 9.0 * i};
      const BasePoint fwd = to_base(t, p);
      const CameraPoint back = to_camera(t, {fwd.x, fwd.y});
      CHECK(std::abs(back.x - p.x) < 1e-9);
      CHECK(std::abs(back.y - p.y) < 1e-9);
      const auto v = inv.matrix.apply({fwd.x, fwd.y, 1.0});
      CHECK(std::abs(v[0] / v[2] - p.x) < 1e-9);
    }
  }

  SECTION("midpoints stay midpoints") {
    const CameraPoint a{120, 40}, b{610, 410};
    const CameraPoint mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
    const BasePoint ma = to_base(t, a), mb = to_base(t, b), mm = to_base(t, mid);
    CHECK(mm.x == Approx((ma.x + mb.x) / 2));
    CHECK(mm.y == Approx((ma.y + mb.y) / 2));
  }
}

TEST_CASE("collinear camera points are rejected") {
  const std::array<CameraPoint, 3> collinear = {{{0, 0}, {50, 50}, {100, 100}}};
  const std::array<BasePoint, 3> base = {{{0, 0}, {10, 10}, {20, 20}}};
  CHECK_THROWS_AS(calibrate(base, collinear), CalibrationError);
  CHECK_THROWS_WITH(calibrate(base, collinear), Catch::Contains("collinear"));
}

TEST_CASE("coincident points are rejected") {
  const std::array<CameraPoint, 3> coincident = {{{0, 0}, {0, 0}, {100, 100}}};
  const std::array<BasePoint, 3> base = {{{0, 0}, {10, 10}, {20, 20}}};
  CHECK_THROWS_WITH(calibrate(base, coincident), Catch::Contains("coincident"));
}
