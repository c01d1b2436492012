#pragma once

#include <array>
#include <cmath>
#include <string>

#include "cpoker/errors.hpp"

namespace cpoker {

// Points carry their frame as a distinct type so pixel and millimeter
// coordinates cannot be mixed without going through a Transform.
struct CameraPoint {
  double x = 0;
  double y = 0;
};

struct BasePoint {
  double x = 0;
  double y = 0;
};

struct Mat3 {
  std::array<std::array<double, 3>, 3> m{};

  static Mat3 identity() {
    Mat3 out{};
    for (int i = 0; i < 3; ++i) out.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1.0;
    return out;
  }

  double det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }

  Mat3 inverse() const {
    const double d = det();
    if (std::abs(d) < 1e-12) {
      throw CalibrationError("singular matrix has no inverse");
    }
    Mat3 out{};
    out.m[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / d;
    out.m[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / d;
    out.m[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / d;
    out.m[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / d;
    out.m[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / d;
    out.m[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / d;
    out.m[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / d;
    out.m[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / d;
    out.m[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / d;
    return out;
  }

  Mat3 operator*(const Mat3& rhs) const {
    Mat3 out{};
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        for (std::size_t k = 0; k < 3; ++k) out.m[i][j] += m[i][k] * rhs.m[k][j];
      }
    }
    return out;
  }

  std::array<double, 3> apply(const std::array<double, 3>& v) const {
    std::array<double, 3> out{};
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t k = 0; k < 3; ++k) out[i] += m[i][k] * v[k];
    }
    return out;
  }
};

// Homogeneous camera-to-base map plus the scalar pixel-to-millimeter ratio
// reported alongside it for diagnostics (the matrix already embeds scale).
struct Transform {
  Mat3 matrix = Mat3::identity();
  double ratio_mm_per_px = 1.0;
};

namespace detail {

inline double distance(double ax, double ay, double bx, double by) {
  return std::hypot(ax - bx, ay - by);
}

}  // namespace detail

// Solves the planar map from three point correspondences: stack the base
// points as homogeneous columns B, the camera points as columns C, and take
// matrix = B * C^-1. The camera points must span a triangle; the collinearity
// test uses the cross product of the centered edge vectors with a 1e-9
// tolerance in squared pixel units.
inline Transform calibrate(const std::array<BasePoint, 3>& base,
                           const std::array<CameraPoint, 3>& camera) {
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (camera[i].x == camera[j].x && camera[i].y == camera[j].y) {
        throw CalibrationError("coincident camera points " + std::to_string(i) + " and " +
                               std::to_string(j));
      }
      if (base[i].x == base[j].x && base[i].y == base[j].y) {
        throw CalibrationError("coincident base points " + std::to_string(i) + " and " +
                               std::to_string(j));
      }
    }
  }

  const double cross = (camera[1].x - camera[0].x) * (camera[2].y - camera[0].y) -
                       (camera[2].x - camera[0].x) * (camera[1].y - camera[0].y);
  if (std::abs(cross) <= 1e-9) {
    throw CalibrationError("collinear camera points cannot determine the transform");
  }

  Mat3 b{};
  Mat3 c{};
  for (std::size_t i = 0; i < 3; ++i) {
    b.m[0][i] = base[i].x;
    b.m[1][i] = base[i].y;
    b.m[2][i] = 1.0;
    c.m[0][i] = camera[i].x;
    c.m[1][i] = camera[i].y;
    c.m[2][i] = 1.0;
  }

  Mat3 matrix = b * c.inverse();
  const double w = matrix.m[2][2];
  if (std::abs(w) < 1e-12) {
    throw CalibrationError("degenerate calibration: homogeneous row vanished");
  }
  for (auto& row : matrix.m) {
    for (double& v : row) v /= w;
  }

  double ratio = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3;
    ratio += detail::distance(base[i].x, base[i].y, base[j].x, base[j].y) /
             detail::distance(camera[i].x, camera[i].y, camera[j].x, camera[j].y);
  }
  ratio /= 3.0;

  return Transform{matrix, ratio};
}

inline BasePoint to_base(const Transform& t, const CameraPoint& p) {
  const auto v = t.matrix.apply({p.x, p.y, 1.0});
  return BasePoint{v[0] / v[2], v[1] / v[2]};
}

inline CameraPoint to_camera(const Transform& t, const BasePoint& p) {
  const auto v = t.matrix.inverse().apply({p.x, p.y, 1.0});
  return CameraPoint{v[0] / v[2], v[1] / v[2]};
}

inline Transform inverse(const Transform& t) {
  return Transform{t.matrix.inverse(), 1.0 / t.ratio_mm_per_px};
}

}  // namespace cpoker
