#include "diskspan/zorder.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

namespace diskspan {

namespace {

// Spreads the low 32 bits of v to the even bit positions of a 64-bit word.
std::uint64_t spread_bits(std::uint64_t v) {
  v &= 0xffffffffULL;
  v = (v | (v << 16)) & 0x0000ffff0000ffffULL;
  v = (v | (v << 8)) & 0x00ff00ff00ff00ffULL;
  v = (v | (v << 4)) & 0x0f0f0f0f0f0f0f0fULL;
  v = (v | (v << 2)) & 0x3333333333333333ULL;
  v = (v | (v << 1)) & 0x5555555555555555ULL;
  return v;
}

}  // namespace

MortonKey shuffle(std::uint32_t x, std::uint32_t y) {
  return (spread_bits(x) << 1) | spread_bits(y);
}

int agree(MortonKey a, MortonKey b, int level_base, int bits) {
  if (a == b) throw Error(ErrorCode::EqualKeys, "agree() needs distinct keys");
  const int unused = 64 - 2 * bits;
  const int leading = std::countl_zero(a ^ b) - unused;
  return leading / 2 - level_base;
}

double round_to_grid(double v, int level) {
  return std::ldexp(std::floor(std::ldexp(v, level)), -level);
}

MortonFrame MortonFrame::for_instance(const Instance& inst) {
  double extent = 0.0;
  for (const auto& p : inst.points) extent = std::max({extent, p.x, p.y});
  MortonFrame f;
  while (std::ldexp(1.0, f.scale_log) <= extent) ++f.scale_log;
  return f;
}

std::uint32_t MortonFrame::quantize(double v) const {
  // v * 2^(31 - scale_log) is exact; floor of it is the 31-bit fixed point.
  const double scaled = std::floor(std::ldexp(v, kMortonBits - scale_log));
  const double top = std::ldexp(1.0, kMortonBits) - 1;
  return static_cast<std::uint32_t>(std::clamp(scaled, 0.0, top));
}

MortonKey MortonFrame::key(const Point& p) const { return shuffle(quantize(p.x), quantize(p.y)); }

std::vector<Index> morton_sort(const Instance& inst, const MortonFrame& frame) {
  std::vector<MortonKey> keys(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i) keys[i] = frame.key(inst.points[i]);
  std::vector<Index> order(inst.size());
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(), [&](Index a, Index b) {
    return keys[a] != keys[b] ? keys[a] < keys[b] : a < b;
  });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (keys[order[k]] == keys[order[k - 1]]) {
      throw Error(ErrorCode::QuantizationCollision,
                  "points " + std::to_string(order[k - 1]) + " and " + std::to_string(order[k]) +
                      " share a Morton key");
    }
  }
  return order;
}

std::vector<Index> morton_sort(const Instance& inst) {
  return morton_sort(inst, MortonFrame::for_instance(inst));
}

}  // namespace diskspan
