#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

#include "diskspan/error.hpp"

namespace diskspan {

using Index = std::uint32_t;
inline constexpr Index kNoIndex = UINT32_MAX;
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline double squared_distance(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

inline double distance(const Point& a, const Point& b) { return std::sqrt(squared_distance(a, b)); }

/// A set of disks in the plane: centers plus per-center radii.
///
/// Instances returned by normalize_instance have max radius 1 and their
/// bounding box's lower-left corner at the origin; every algorithm in this
/// library assumes that form.
struct Instance {
  std::vector<Point> points;
  std::vector<double> radii;

  std::size_t size() const { return points.size(); }

  /// Reciprocal of the smallest radius (the global stretch of the disk set).
  double global_stretch() const;
  bool is_unit() const;
};

/// Reciprocal power-of-two accuracy parameter; eps = 1 / inv_eps.
class Epsilon {
 public:
  /// Throws InvalidEpsilon unless inv_eps is a power of two >= 2.
  explicit Epsilon(std::uint32_t inv_eps);

  /// Parses "1/2^m", "1/k" (k a power of two) or a decimal like "0.25".
  static Epsilon parse(std::string_view text);

  std::uint32_t inv() const { return inv_; }
  double value() const { return 1.0 / static_cast<double>(inv_); }
  /// log2(1/eps).
  int log_inv() const { return log_inv_; }
  std::string to_string() const;

 private:
  std::uint32_t inv_;
  int log_inv_;
};

/// Axis-aligned square with half-open membership on both axes.
struct Square {
  Point center;
  double side = 0.0;

  Point lower_left() const { return {center.x - side / 2, center.y - side / 2}; }
  static Square from_corner(Point corner, double side) {
    return {{corner.x + side / 2, corner.y + side / 2}, side};
  }
};

/// cx - s/2 <= x < cx + s/2 and likewise for y.
bool square_contains(const Square& sq, const Point& p);

/// Scales so the largest radius is 1 and translates the bounding box to the
/// origin. Rejects duplicate centers and non-positive radii.
Instance normalize_instance(const Instance& raw);

/// Checks the invariants a normalized instance must satisfy (used by parsers
/// and by algorithms that take an Instance on trust).
void validate_instance(const Instance& inst);

/// Closed test: d(p, q) <= r_p + r_q.
bool disks_intersect(Index i, Index j, const Instance& inst);

/// Angle of (target - apex) in [0, 2*pi).
double direction_angle(const Point& apex, const Point& target);

/// The unique l >= 0 with 2^-l <= r < 2^(-l+1). Throws NotNormalized for
/// r > 1 and InvalidRadius for r <= 0.
int disk_level(double r);

/// Index of the half-open cone [i*2*pi*eps, (i+1)*2*pi*eps) containing target.
std::uint32_t cone_index(const Point& apex, const Point& target, const Epsilon& eps);

}  // namespace diskspan
