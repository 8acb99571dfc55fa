#pragma once

#include <Eigen/Core>
#include <random>

namespace goalforge {

// Unit quaternion representing a 3D rotation. Components are (w, x, y, z)
// with w the scalar part. q and -q denote the same rotation; every distance
// function here respects that double cover.
struct Quaternion {
  double w = 1.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  static Quaternion identity() { return {1.0, 0.0, 0.0, 0.0}; }
  static Quaternion from_axis_angle(const Eigen::Vector3d& axis, double angle);
  static Quaternion rot_x(double angle);
  static Quaternion rot_y(double angle);
  static Quaternion rot_z(double angle);

  double dot(const Quaternion& o) const { return w * o.w + x * o.x + y * o.y + z * o.z; }
  double norm() const;
  Quaternion normalized() const;
  Quaternion conjugate() const { return {w, -x, -y, -z}; }
  Quaternion operator*(const Quaternion& o) const;  // Hamilton product
  Quaternion operator-() const { return {-w, -x, -y, -z}; }

  // Rotates a vector by this quaternion (assumed unit).
  Eigen::Vector3d rotate(const Eigen::Vector3d& v) const;
  // Image of the body z axis in world coordinates.
  Eigen::Vector3d body_z_axis() const { return rotate(Eigen::Vector3d::UnitZ()); }
};

// Angle of the relative rotation between two unit quaternions,
// 2*acos(|<q1,q2>|), in [0, pi]. Throws std::invalid_argument if either
// input is further than 1e-6 from unit norm.
double quat_distance(const Quaternion& q1, const Quaternion& q2);

// Rotation distance after quotienting out any rotation about the body z
// axis: the angle between the two world-frame images of the body z axis.
double quat_distance_ignore_z(const Quaternion& q1, const Quaternion& q2);

// Quaternion exponential of a rotation vector (axis * angle). Stable for
// small angles.
Quaternion quat_exp_map(const Eigen::Vector3d& rotation_vector);

// One integration step of an orientation under angular velocity omega
// (world frame) over dt seconds; result is renormalized.
Quaternion integrate_orientation(const Quaternion& q, const Eigen::Vector3d& omega, double dt);

// Uniform sample over SO(3) via the subgroup algorithm on the unit
// 3-sphere (three independent uniforms).
Quaternion sample_uniform_quaternion(std::mt19937_64& rng);

}  // namespace goalforge
