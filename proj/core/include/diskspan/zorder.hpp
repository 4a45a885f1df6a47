#pragma once

#include <cstdint>
#include <vector>

#include "diskspan/geom.hpp"

namespace diskspan {

/// Bits of fixed-point precision per axis; two interleaved axes fit in 64 bits.
inline constexpr int kMortonBits = 31;

using MortonKey = std::uint64_t;

/// Interleaves the low `bits` bits of x and y: bit i of x lands at output bit
/// 2i+1, bit i of y at 2i.
MortonKey shuffle(std::uint32_t x, std::uint32_t y);

/// Depth (relative to the level-`level_base` grid) of the smallest quadtree
/// square containing both keys: the number of leading bit pairs X and Y share,
/// minus level_base. May be negative. Throws EqualKeys when X == Y.
int agree(MortonKey a, MortonKey b, int level_base, int bits = kMortonBits);

/// floor(v * 2^level) / 2^level.
double round_to_grid(double v, int level);

/// Maps normalized coordinates into [0, 1) by dividing by a power of two
/// 2^scale_log strictly larger than every coordinate. Using a power of two
/// keeps the real epsilon-grid aligned with bit-pair boundaries: the grid of
/// side eps * 2^-d is quadtree level scale_log + log2(1/eps) + d.
struct MortonFrame {
  int scale_log = 0;

  static MortonFrame for_instance(const Instance& inst);

  double scale() const { return std::ldexp(1.0, scale_log); }
  std::uint32_t quantize(double v) const;
  MortonKey key(const Point& p) const;
  /// Quadtree level of the grid with side 2^-grid_log in normalized units.
  int level_of(int grid_log) const { return scale_log + grid_log; }
};

/// Point indices sorted by increasing Morton key. Throws QuantizationCollision
/// when two distinct points share a key.
std::vector<Index> morton_sort(const Instance& inst, const MortonFrame& frame);
std::vector<Index> morton_sort(const Instance& inst);

}  // namespace diskspan
