#include "diskspan/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

namespace diskspan {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& is) : is_(is) {}

  // Next non-empty line split on whitespace; false at end of input.
  bool next(std::vector<std::string_view>& fields) {
    while (std::getline(is_, line_)) {
      ++number_;
      fields.clear();
      std::string_view rest(line_);
      while (!rest.empty()) {
        const auto start = rest.find_first_not_of(" \t\r");
        if (start == std::string_view::npos) break;
        rest.remove_prefix(start);
        const auto end = rest.find_first_of(" \t\r");
        fields.push_back(rest.substr(0, end));
        rest.remove_prefix(end == std::string_view::npos ? rest.size() : end);
      }
      if (!fields.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::Parse, "line " + std::to_string(number_) + ": " + what);
  }

  template <typename T>
  T number(std::string_view text) const {
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) fail("bad number '" + std::string(text) + "'");
    return value;
  }

  void expect_fields(const std::vector<std::string_view>& fields, std::size_t count) const {
    if (fields.size() != count) fail("expected " + std::to_string(count) + " fields");
  }

 private:
  std::istream& is_;
  std::string line_;
  std::size_t number_ = 0;
};

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
  return in;
}

}  // namespace

Instance read_instance(std::istream& is) {
  LineReader r(is);
  std::vector<std::string_view> f;
  if (!r.next(f)) r.fail("missing header");
  r.expect_fields(f, 2);
  if (r.number<int>(f[0]) != 2) r.fail("dimension must be 2");
  const auto n = r.number<std::size_t>(f[1]);
  Instance inst;
  inst.points.reserve(n);
  inst.radii.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!r.next(f)) r.fail("expected " + std::to_string(n) + " disks, got " + std::to_string(i));
    r.expect_fields(f, 3);
    inst.points.push_back({r.number<double>(f[0]), r.number<double>(f[1])});
    inst.radii.push_back(r.number<double>(f[2]));
  }
  if (r.next(f)) r.fail("trailing data");
  return inst;
}

void write_instance(std::ostream& os, const Instance& inst) {
  const auto prec = os.precision(17);
  os << "2 " << inst.size() << '\n';
  for (std::size_t i = 0; i < inst.size(); ++i)
    os << inst.points[i].x << ' ' << inst.points[i].y << ' ' << inst.radii[i] << '\n';
  os.precision(prec);
}

SpannerGraph read_spanner(std::istream& is) {
  LineReader r(is);
  std::vector<std::string_view> f;
  if (!r.next(f)) r.fail("missing header");
  r.expect_fields(f, 2);
  SpannerGraph g;
  g.n = r.number<Index>(f[0]);
  const auto m = r.number<std::size_t>(f[1]);
  g.edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!r.next(f)) r.fail("expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    r.expect_fields(f, 4);
    Edge e{r.number<Index>(f[0]), r.number<Index>(f[1]), r.number<double>(f[2]), r.number<int>(f[3])};
    if (e.u >= e.v || e.v >= g.n) r.fail("edge endpoints must satisfy u < v < n");
    if (!(e.weight >= 0.0)) r.fail("negative weight");
    g.edges.push_back(e);
  }
  if (r.next(f)) r.fail("trailing data");
  return g;
}

void write_spanner(std::ostream& os, const SpannerGraph& g) {
  const auto prec = os.precision(17);
  os << g.n << ' ' << g.edges.size() << '\n';
  for (const Edge& e : g.edges) os << e.u << ' ' << e.v << ' ' << e.weight << ' ' << e.depth_tag << '\n';
  os.precision(prec);
}

Instance read_instance_file(const std::string& path) {
  auto in = open(path);
  return read_instance(in);
}

SpannerGraph read_spanner_file(const std::string& path) {
  auto in = open(path);
  return read_spanner(in);
}

}  // namespace diskspan
