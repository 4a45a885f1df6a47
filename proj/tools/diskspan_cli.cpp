#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "diskspan/dg.hpp"
#include "diskspan/io.hpp"
#include "diskspan/oracle.hpp"
#include "diskspan/proximity.hpp"
#include "diskspan/separator.hpp"
#include "diskspan/udg.hpp"
#include "diskspan/yao.hpp"

namespace {

using namespace diskspan;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitInvariant = 3;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidEpsilon:
      return kExitUsage;
    case ErrorCode::Parse:
    case ErrorCode::DuplicatePoint:
    case ErrorCode::InvalidRadius:
    case ErrorCode::NotNormalized:
    case ErrorCode::QuantizationCollision:
      return kExitParse;
    default:
      return kExitInvariant;
  }
}

// Writes through a sibling temp file so readers never see a partial file.
void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Parse, "cannot write " + path);
    out << text;
    if (!out) throw Error(ErrorCode::Parse, "cannot write " + path);
  }
  std::filesystem::rename(tmp, path);
}

Instance load_instance(const std::string& path) { return normalize_instance(read_instance_file(path)); }

// gen

struct GenOptions {
  std::size_t n = 100;
  std::string dist = "uniform";
  std::string radii = "unit";
  std::uint64_t seed = 1;
  double side = 0.0;
  std::string out;
};

Instance generate(const GenOptions& o) {
  std::mt19937_64 rng(o.seed);
  Instance inst;
  const double side = o.side > 0.0 ? o.side : std::sqrt(static_cast<double>(std::max<std::size_t>(o.n, 1)));
  std::uniform_real_distribution<double> box(0.0, side);
  if (o.dist == "uniform") {
    for (std::size_t i = 0; i < o.n; ++i) inst.points.push_back({box(rng), box(rng)});
  } else if (o.dist == "clustered") {
    const std::size_t k = std::max<std::size_t>(o.n / 50, 1);
    std::vector<Point> centers;
    for (std::size_t i = 0; i < k; ++i) centers.push_back({box(rng), box(rng)});
    std::normal_distribution<double> jitter(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> pick(0, k - 1);
    for (std::size_t i = 0; i < o.n; ++i) {
      const Point& c = centers[pick(rng)];
      inst.points.push_back({c.x + jitter(rng), c.y + jitter(rng)});
    }
  } else if (o.dist == "grid") {
    const auto cols = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(o.n))));
    for (std::size_t i = 0; i < o.n; ++i)
      inst.points.push_back({static_cast<double>(i % cols), static_cast<double>(i / cols)});
  } else {
    throw CLI::ValidationError("--dist", "expected uniform, clustered or grid");
  }

  if (o.radii == "unit") {
    inst.radii.assign(o.n, 1.0);
  } else if (o.radii.rfind("loguniform:", 0) == 0) {
    double lo = 0.0;
    try {
      lo = std::stod(o.radii.substr(11));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--radii", "bad loguniform minimum");
    }
    if (!(lo > 0.0 && lo <= 1.0)) throw CLI::ValidationError("--radii", "loguniform minimum must be in (0, 1]");
    std::uniform_real_distribution<double> logr(std::log(lo), 0.0);
    for (std::size_t i = 0; i < o.n; ++i) inst.radii.push_back(std::clamp(std::exp(logr(rng)), lo, 1.0));
  } else {
    throw CLI::ValidationError("--radii", "expected unit or loguniform:<min>");
  }
  return inst;
}

// build

SpannerGraph build_spanner(const std::string& algo, const Instance& inst, const Epsilon& eps) {
  if (algo == "yao") return build_modified_yao(inst, eps);
  if (algo == "udg") return build_udg_spanner(inst, eps);
  if (algo == "dg") return build_dg_spanner(inst, eps);
  if (algo == "full") return build_intersection_graph(inst);
  throw CLI::ValidationError("--algo", "expected yao, udg, dg or full");
}

std::string spanner_text(const SpannerGraph& g) {
  std::ostringstream os;
  write_spanner(os, g);
  return os.str();
}

// stats

std::string stats_csv(const SpannerGraph& g, const Instance& inst, const std::string& eps_text,
                      const std::string& algo) {
  std::ostringstream os;
  os.precision(17);
  const Adjacency adj(g);
  std::size_t max_degree = 0;
  for (Index u = 0; u < g.n; ++u) max_degree = std::max(max_degree, adj.degree(u));
  const double per_n = g.n == 0 ? 0.0 : static_cast<double>(g.size()) / g.n;
  os << "n,m,eps,rho,max_degree,edges_per_n\n";
  os << g.n << ',' << g.size() << ',' << eps_text << ',' << inst.global_stretch() << ',' << max_degree << ','
     << per_n << '\n';
  std::map<int, std::size_t> hist;
  for (const Edge& e : g.edges) ++hist[e.depth_tag];
  os << "depth,edges\n";
  for (const auto& [d, c] : hist) os << d << ',' << c << '\n';
  if (algo == "dg" && !eps_text.empty()) {
    DgBuildReport report;
    build_dg_spanner(inst, Epsilon::parse(eps_text), &report);
    std::map<std::size_t, std::size_t> occ;
    for (const auto& [key, count] : report.bucket_occupancy) ++occ[count];
    os << "bucket_occupancy,buckets\n";
    for (const auto& [size, count] : occ) os << size << ',' << count << '\n';
    os << "max_bucket_positions," << report.max_positions << '\n';
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Disk graph spanners, separators and diameter estimates"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--n", gen.n, "Number of disks")->required();
  gen_cmd->add_option("--dist", gen.dist, "uniform | clustered | grid");
  gen_cmd->add_option("--radii", gen.radii, "unit | loguniform:<min>");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--side", gen.side, "Box side (default sqrt(n))");
  gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");

  std::string algo = "udg";
  std::string eps_text = "1/4";
  std::string in_path;
  std::string out_path;
  auto* build_cmd = app.add_subcommand("build", "Build a spanner");
  build_cmd->add_option("--algo", algo, "yao | udg | dg | full (whole intersection graph)");
  build_cmd->add_option("--eps", eps_text, "Accuracy 1/2^m");
  build_cmd->add_option("--in", in_path, "Instance file")->required();
  build_cmd->add_option("--out", out_path, "Output file (default stdout)");

  std::string graph_path;
  std::string spanner_path;
  double bound = 0.0;
  auto* verify_cmd = app.add_subcommand("verify", "Check spanner stretch against a graph");
  verify_cmd->add_option("--graph", graph_path, "Reference graph")->required();
  verify_cmd->add_option("--spanner", spanner_path, "Spanner")->required();
  verify_cmd->add_option("--bound", bound, "Stretch bound")->required();

  std::size_t leaf_max = 32;
  auto* sep_cmd = app.add_subcommand("separate", "Separator decomposition of a spanner");
  sep_cmd->add_option("--spanner", spanner_path, "Spanner")->required();
  sep_cmd->add_option("--in", in_path, "Instance file")->required();
  sep_cmd->add_option("--out", out_path, "Dump file (default stdout)");
  sep_cmd->add_option("--eps", eps_text, "Accuracy used for block sizes");
  sep_cmd->add_option("--leaf-max", leaf_max, "Largest leaf");

  bool exact = false;
  bool per_component = false;
  auto* dia_cmd = app.add_subcommand("diameter", "3/2-approximate spanner diameter");
  dia_cmd->add_option("--spanner", spanner_path, "Spanner")->required();
  dia_cmd->add_option("--in", in_path, "Instance file")->required();
  dia_cmd->add_option("--eps", eps_text, "Accuracy used for block sizes");
  dia_cmd->add_option("--leaf-max", leaf_max, "Largest leaf");
  dia_cmd->add_flag("--exact", exact, "Also compute the exact diameter");
  dia_cmd->add_flag("--per-component", per_component, "Allow disconnected spanners");

  std::string stats_eps;
  std::string stats_algo;
  auto* stats_cmd = app.add_subcommand("stats", "CSV statistics of a spanner");
  stats_cmd->add_option("--spanner", spanner_path, "Spanner")->required();
  stats_cmd->add_option("--in", in_path, "Instance file")->required();
  stats_cmd->add_option("--eps", stats_eps, "Accuracy the spanner was built with");
  stats_cmd->add_option("--algo", stats_algo, "Builder; dg adds bucket occupancy");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) {
      std::ostringstream os;
      write_instance(os, generate(gen));
      write_output(gen.out, os.str());
    } else if (*build_cmd) {
      const Epsilon eps = Epsilon::parse(eps_text);
      const Instance inst = load_instance(in_path);
      write_output(out_path, spanner_text(build_spanner(algo, inst, eps)));
    } else if (*verify_cmd) {
      const SpannerGraph g = read_spanner_file(graph_path);
      const SpannerGraph sp = read_spanner_file(spanner_path);
      if (g.n != sp.n) throw Error(ErrorCode::NotSubgraph, "vertex counts differ");
      const StretchResult r = verify_stretch(g, sp, bound);
      std::cout.precision(17);
      std::cout << "maxRatio " << r.max_ratio;
      if (r.u != kNoIndex) std::cout << " witness " << r.u << ' ' << r.v;
      std::cout << '\n' << (r.pass ? "PASS" : "FAIL") << '\n';
      return r.pass ? kExitOk : kExitInvariant;
    } else if (*sep_cmd) {
      const Epsilon eps = Epsilon::parse(eps_text);
      const Instance inst = load_instance(in_path);
      const SpannerGraph sp = read_spanner_file(spanner_path);
      check_edge_lengths(sp);
      const SeparatorTree tree = build_separator_decomposition(sp, inst, eps, leaf_max);
      const SeparatorReport rep = verify_separator(tree, sp, eps);
      std::ostringstream os;
      write_separator_dump(os, tree);
      write_output(out_path, os.str());
      std::cerr << "nodes " << rep.nodes << " root_separator " << rep.root_separator << " max_separator "
                << rep.max_separator << " max_ratio " << rep.max_ratio << " OK\n";
    } else if (*dia_cmd) {
      const Epsilon eps = Epsilon::parse(eps_text);
      const Instance inst = load_instance(in_path);
      const SpannerGraph sp = read_spanner_file(spanner_path);
      const SeparatorTree tree = build_separator_decomposition(sp, inst, eps, leaf_max);
      const DiameterEstimate est = estimate_diameter(sp, tree, per_component);
      std::cout.precision(17);
      std::cout << "Dia " << est.dia << '\n';
      if (exact) {
        double delta = 0.0;
        for (const auto& row : shortest_paths(sp)) {
          for (double d : row) {
            if (d != kInfinity) delta = std::max(delta, d);
          }
        }
        std::cout << "Delta " << delta << '\n';
        std::cout << "ratio " << (delta > 0.0 ? est.dia / delta : 1.0) << '\n';
      }
    } else if (*stats_cmd) {
      const Instance inst = load_instance(in_path);
      const SpannerGraph sp = read_spanner_file(spanner_path);
      std::cout << stats_csv(sp, inst, stats_eps, stats_algo);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvariant;
  }
  return kExitOk;
}
