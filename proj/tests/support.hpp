#pragma once

#include <cmath>
#include <random>

#include "diskspan/geom.hpp"

namespace diskspan::testing {

/// n uniform points in a box of the given side, radii 1 or log-uniform in
/// [min_radius, 1]; normalized.
inline Instance random_instance(std::size_t n, double side, double min_radius, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> box(0.0, side);
  std::uniform_real_distribution<double> logr(std::log(min_radius), 0.0);
  Instance raw;
  for (std::size_t i = 0; i < n; ++i) {
    raw.points.push_back({box(rng), box(rng)});
    raw.radii.push_back(min_radius >= 1.0 ? 1.0 : std::exp(logr(rng)));
  }
  raw.radii[0] = 1.0;
  return normalize_instance(raw);
}

inline Instance unit_instance(std::size_t n, std::uint64_t seed) {
  return random_instance(n, std::sqrt(static_cast<double>(n)), 1.0, seed);
}

inline Instance make_instance(std::initializer_list<Point> pts, double r = 1.0) {
  Instance inst;
  for (const Point& p : pts) {
    inst.points.push_back(p);
    inst.radii.push_back(r);
  }
  return inst;
}

}  // namespace diskspan::testing
