#include "diskspan/geom.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

namespace diskspan {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::InvalidRadius: return "InvalidRadius";
    case ErrorCode::InvalidEpsilon: return "InvalidEpsilon";
    case ErrorCode::DegenerateDirection: return "DegenerateDirection";
    case ErrorCode::EqualKeys: return "EqualKeys";
    case ErrorCode::QuantizationCollision: return "QuantizationCollision";
    case ErrorCode::NotUnitInstance: return "NotUnitInstance";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::InvalidShift: return "InvalidShift";
    case ErrorCode::NotFarEdge: return "NotFarEdge";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::DegenerateAxis: return "DegenerateAxis";
    case ErrorCode::SeparatorInvariantViolation: return "SeparatorInvariantViolation";
    case ErrorCode::InductionOrderViolation: return "InductionOrderViolation";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::OracleTooLarge: return "OracleTooLarge";
    case ErrorCode::NotSubgraph: return "NotSubgraph";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

double Instance::global_stretch() const {
  if (radii.empty()) return 1.0;
  return 1.0 / *std::min_element(radii.begin(), radii.end());
}

bool Instance::is_unit() const {
  return std::all_of(radii.begin(), radii.end(), [](double r) { return r == 1.0; });
}

Epsilon::Epsilon(std::uint32_t inv_eps) : inv_(inv_eps), log_inv_(0) {
  if (inv_eps < 2 || (inv_eps & (inv_eps - 1)) != 0) {
    throw Error(ErrorCode::InvalidEpsilon,
                "1/eps must be a power of two >= 2, got " + std::to_string(inv_eps));
  }
  while ((1u << log_inv_) < inv_eps) ++log_inv_;
}

namespace {

std::uint64_t parse_uint(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error(ErrorCode::InvalidEpsilon, "cannot parse '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Epsilon Epsilon::parse(std::string_view text) {
  if (text.starts_with("1/")) {
    auto rest = text.substr(2);
    if (rest.starts_with("2^")) {
      const auto m = parse_uint(rest.substr(2));
      if (m == 0 || m > 30) throw Error(ErrorCode::InvalidEpsilon, "exponent out of range");
      return Epsilon(1u << m);
    }
    const auto k = parse_uint(rest);
    if (k > (1u << 30)) throw Error(ErrorCode::InvalidEpsilon, "1/eps too large");
    return Epsilon(static_cast<std::uint32_t>(k));
  }
  double v = 0.0;
  try {
    std::size_t used = 0;
    v = std::stod(std::string(text), &used);
    if (used != text.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidEpsilon, "cannot parse '" + std::string(text) + "'");
  }
  if (!(v > 0.0 && v < 1.0)) throw Error(ErrorCode::InvalidEpsilon, "eps must lie in (0, 1)");
  const double inv = 1.0 / v;
  const double rounded = std::round(inv);
  if (rounded != inv || rounded > double(1u << 30)) {
    throw Error(ErrorCode::InvalidEpsilon, "1/eps must be an integer power of two");
  }
  return Epsilon(static_cast<std::uint32_t>(rounded));
}

std::string Epsilon::to_string() const { return "1/" + std::to_string(inv_); }

bool square_contains(const Square& sq, const Point& p) {
  const double h = sq.side / 2;
  return sq.center.x - h <= p.x && p.x < sq.center.x + h && sq.center.y - h <= p.y &&
         p.y < sq.center.y + h;
}

void validate_instance(const Instance& inst) {
  if (inst.points.empty()) throw Error(ErrorCode::InvalidRadius, "instance has no points");
  if (inst.points.size() != inst.radii.size()) {
    throw Error(ErrorCode::InvalidRadius, "points and radii differ in length");
  }
  for (std::size_t i = 0; i < inst.radii.size(); ++i) {
    const double r = inst.radii[i];
    if (!(r > 0.0) || !std::isfinite(r)) {
      throw Error(ErrorCode::InvalidRadius, "radius of point " + std::to_string(i) + " is not positive");
    }
    if (!std::isfinite(inst.points[i].x) || !std::isfinite(inst.points[i].y)) {
      throw Error(ErrorCode::InvalidRadius, "non-finite coordinate at point " + std::to_string(i));
    }
  }
  std::vector<Index> order(inst.size());
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(), [&](Index a, Index b) {
    const auto& p = inst.points[a];
    const auto& q = inst.points[b];
    return p.x != q.x ? p.x < q.x : p.y < q.y;
  });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (inst.points[order[k]] == inst.points[order[k - 1]]) {
      throw Error(ErrorCode::DuplicatePoint, "points " + std::to_string(order[k - 1]) + " and " +
                                                 std::to_string(order[k]) + " coincide");
    }
  }
}

Instance normalize_instance(const Instance& raw) {
  validate_instance(raw);
  const double rmax = *std::max_element(raw.radii.begin(), raw.radii.end());
  double minx = std::numeric_limits<double>::infinity();
  double miny = minx;
  for (const auto& p : raw.points) {
    minx = std::min(minx, p.x);
    miny = std::min(miny, p.y);
  }
  Instance out;
  out.points.reserve(raw.size());
  out.radii.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    out.points.push_back({(raw.points[i].x - minx) / rmax, (raw.points[i].y - miny) / rmax});
    out.radii.push_back(raw.radii[i] / rmax);
  }
  // Rounding in the translation can merge nearly coincident centers.
  validate_instance(out);
  return out;
}

bool disks_intersect(Index i, Index j, const Instance& inst) {
  const double reach = inst.radii[i] + inst.radii[j];
  return squared_distance(inst.points[i], inst.points[j]) <= reach * reach;
}

double direction_angle(const Point& apex, const Point& target) {
  const double dx = target.x - apex.x;
  const double dy = target.y - apex.y;
  if (dx == 0.0 && dy == 0.0) throw Error(ErrorCode::DegenerateDirection, "apex equals target");
  double theta = std::atan2(dy, dx);
  if (theta < 0.0) theta += 2 * std::numbers::pi;
  // atan2 of a tiny negative dy can round up to exactly 2*pi.
  if (theta >= 2 * std::numbers::pi) theta = 0.0;
  return theta;
}

int disk_level(double r) {
  if (!(r > 0.0)) throw Error(ErrorCode::InvalidRadius, "radius must be positive");
  if (r > 1.0) throw Error(ErrorCode::NotNormalized, "radius exceeds 1");
  int exp = 0;
  std::frexp(r, &exp);  // r = m * 2^exp, m in [0.5, 1)
  return 1 - exp;
}

std::uint32_t cone_index(const Point& apex, const Point& target, const Epsilon& eps) {
  const double turns = direction_angle(apex, target) / (2 * std::numbers::pi);
  const auto idx = static_cast<std::uint32_t>(std::floor(turns * eps.inv()));
  return std::min(idx, eps.inv() - 1);
}

}  // namespace diskspan
