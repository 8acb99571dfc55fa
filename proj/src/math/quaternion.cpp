#include "goalforge/math/quaternion.hpp"

#include <Eigen/Geometry>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace goalforge {

namespace {

constexpr double kUnitTolerance = 1e-6;

void require_unit(const Quaternion& q, const char* what) {
  if (std::abs(q.norm() - 1.0) > kUnitTolerance) {
    throw std::invalid_argument(std::string(what) + ": quaternion is not unit norm");
  }
}

}  // namespace

Quaternion Quaternion::from_axis_angle(const Eigen::Vector3d& axis, double angle) {
  const double n = axis.norm();
  if (n == 0.0) return identity();
  const Eigen::Vector3d u = axis / n;
  const double h = 0.5 * angle;
  const double s = std::sin(h);
  return {std::cos(h), u.x() * s, u.y() * s, u.z() * s};
}

Quaternion Quaternion::rot_x(double angle) { return from_axis_angle(Eigen::Vector3d::UnitX(), angle); }
Quaternion Quaternion::rot_y(double angle) { return from_axis_angle(Eigen::Vector3d::UnitY(), angle); }
Quaternion Quaternion::rot_z(double angle) { return from_axis_angle(Eigen::Vector3d::UnitZ(), angle); }

double Quaternion::norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

Quaternion Quaternion::normalized() const {
  const double n = norm();
  if (n == 0.0) throw std::invalid_argument("cannot normalize zero quaternion");
  return {w / n, x / n, y / n, z / n};
}

Quaternion Quaternion::operator*(const Quaternion& o) const {
  return {
      w * o.w - x * o.x - y * o.y - z * o.z,
      w * o.x + x * o.w + y * o.z - z * o.y,
      w * o.y - x * o.z + y * o.w + z * o.x,
      w * o.z + x * o.y - y * o.x + z * o.w,
  };
}

Eigen::Vector3d Quaternion::rotate(const Eigen::Vector3d& v) const {
  // v' = v + 2 u x (u x v + w v), u = vector part
  const Eigen::Vector3d u(x, y, z);
  const Eigen::Vector3d t = 2.0 * u.cross(v);
  return v + w * t + u.cross(t);
}

double quat_distance(const Quaternion& q1, const Quaternion& q2) {
  require_unit(q1, "quat_distance");
  require_unit(q2, "quat_distance");
  const double d = std::clamp(std::abs(q1.dot(q2)), 0.0, 1.0);
  return 2.0 * std::acos(d);
}

double quat_distance_ignore_z(const Quaternion& q1, const Quaternion& q2) {
  require_unit(q1, "quat_distance_ignore_z");
  require_unit(q2, "quat_distance_ignore_z");
  const double c = std::clamp(q1.body_z_axis().dot(q2.body_z_axis()), -1.0, 1.0);
  return std::acos(c);
}

Quaternion quat_exp_map(const Eigen::Vector3d& rotation_vector) {
  const double angle = rotation_vector.norm();
  const double h = 0.5 * angle;
  // sin(h)/angle with series fallback near zero
  double k;
  if (angle < 1e-9) {
    k = 0.5 - angle * angle / 48.0;
  } else {
    k = std::sin(h) / angle;
  }
  return {std::cos(h), rotation_vector.x() * k, rotation_vector.y() * k, rotation_vector.z() * k};
}

Quaternion integrate_orientation(const Quaternion& q, const Eigen::Vector3d& omega, double dt) {
  return (quat_exp_map(omega * dt) * q).normalized();
}

Quaternion sample_uniform_quaternion(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const double a = u01(rng);
  const double b = 2.0 * std::numbers::pi * u01(rng);
  const double c = 2.0 * std::numbers::pi * u01(rng);
  const double r1 = std::sqrt(1.0 - a);
  const double r2 = std::sqrt(a);
  return {r1 * std::sin(b), r1 * std::cos(b), r2 * std::sin(c), r2 * std::cos(c)};
}

}  // namespace goalforge
