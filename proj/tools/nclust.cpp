// Command-line front end: triangle generation, cluster searches, catalog
// files, verification and the point-level transforms.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "ncluster/fourth_point.hpp"
#include "ncluster/io.hpp"
#include "ncluster/scoring.hpp"
#include "ncluster/search.hpp"

namespace {

using namespace ncl;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

// Stream helper: stdout unless an output path is given.
class OutFile {
 public:
  explicit OutFile(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw FormatError("cannot open for writing: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r.get_num();
  if (r.get_den() != 1) os << '/' << r.get_den();
  return os.str();
}

std::vector<HeronTriangle> rescaled(std::vector<HeronTriangle> prim,
                                    std::uint32_t limit) {
  std::set<HeronTriangle> all;
  for (const auto& t : prim)
    for (Int lam(1); lam * t.a <= limit; ++lam)
      all.emplace(lam * t.a, lam * t.b, lam * t.c);
  return {all.begin(), all.end()};
}

int cmd_heron_gen(std::uint32_t max_diameter, const std::string& algorithm,
                  bool primitive_only, const std::string& out) {
  std::vector<HeronTriangle> tris;
  if (algorithm == "naive") {
    tris = generate_naive(max_diameter);
    if (primitive_only) {
      std::vector<HeronTriangle> prim;
      for (auto& t : tris)
        if (gcd(gcd(t.a, t.b), t.c) == 1) prim.push_back(std::move(t));
      tris = std::move(prim);
    }
  } else {  // third-side
    tris = generate_primitive(max_diameter);
    if (!primitive_only) tris = rescaled(std::move(tris), max_diameter);
  }
  OutFile of(out);
  write_triangles(of.stream(), tris);
  std::cerr << tris.size() << " triangles\n";
  return kExitOk;
}

int cmd_extend(const std::string& triangles_path, const ExtendOptions& opts,
               const std::string& out) {
  auto tris = read_triangles_file(triangles_path);
  SearchResult res = triangle_extension(tris, opts);
  OutFile of(out);
  write_clusters(of.stream(), res.catalog.sorted_clusters());
  res.stats.print(std::cerr);
  for (int n = 4; n <= 9; ++n)
    if (res.catalog.count_size(n))
      std::cerr << n << "-clusters: " << res.catalog.count_size(n) << "\n";
  return kExitOk;
}

int cmd_combine(const std::string& path1, const std::string& path2,
                const CombineConfig& cfg, const std::string& out) {
  auto l1 = read_clusters_file(path1);
  auto l2 = read_clusters_file(path2);
  SearchResult res = combine_lists(l1, l2, cfg);
  OutFile of(out);
  write_clusters(of.stream(), res.catalog.sorted_clusters());
  res.stats.print(std::cerr);
  return kExitOk;
}

int cmd_exhaustive(std::uint32_t max_diameter, int n_target,
                   const std::string& out) {
  Catalog cat = exhaustive_clusters(max_diameter, n_target);
  OutFile of(out);
  write_clusters(of.stream(), cat.sorted_clusters());
  std::cerr << cat.size() << " clusters\n";
  return kExitOk;
}

int cmd_verify(const std::string& path) {
  auto clusters = read_clusters_file(path);
  bool all_ok = true;
  int idx = 0;
  for (const auto& c : clusters) {
    VerifyReport rep = verify_cluster(c);
    std::cout << "cluster " << idx++ << " n=" << c.n
              << " diameter=" << diameter(c).get_str() << ": "
              << (rep.ok() ? "ok" : "FAIL");
    if (!rep.ok()) {
      if (!rep.realizable) std::cout << " not-planar";
      if (!rep.no_collinear_triple) std::cout << " collinear-triple";
      if (!rep.no_concircular_quadruple) std::cout << " concircular-quadruple";
      if (!rep.characteristic_one) std::cout << " characteristic";
    }
    std::cout << "\n";
    all_ok = all_ok && rep.ok();
  }
  return all_ok ? kExitOk : kExitVerifyFail;
}

int cmd_invert(const std::string& path, int center_index,
               const std::string& out) {
  auto clusters = read_clusters_file(path);
  OutFile of(out);
  std::ostream& os = of.stream();
  os << "# inverted point sets: one \"x y\" rational pair per line\n";
  for (const auto& c : clusters) {
    auto inv = circle_invert(c.rational_coords(), center_index);
    for (const auto& p : inv) os << rat_str(p.x) << ' ' << rat_str(p.y) << '\n';
    os << '\n';
  }
  return kExitOk;
}

int cmd_fourth_point(const std::vector<std::uint64_t>& sides, unsigned height,
                     const std::string& out) {
  HeronTriangle t{Int(sides[0]), Int(sides[1]), Int(sides[2])};
  // Convenient position: longest side on the x-axis, A=(0,0), B=(c,0).
  TriangleCoords tc = triangle_coords(t.a, t.b, t.c);
  Rat c(t.a);
  RatPoint C = tc.p3.to_rational();
  auto cands = scan_parameters(c, C, height);
  OutFile of(out);
  std::ostream& os = of.stream();
  os << "# candidates: x y d_A d_B d_C\n";
  for (const auto& s : cands)
    os << rat_str(s.p.x) << ' ' << rat_str(s.p.y) << ' ' << rat_str(s.dA)
       << ' ' << rat_str(s.dB) << ' ' << rat_str(s.dC) << '\n';
  std::cerr << cands.size() << " candidates\n";
  return kExitOk;
}

int cmd_score(const std::string& triangles_path, const std::string& method,
              std::size_t top_m, const std::string& out) {
  auto tris = read_triangles_file(triangles_path);
  ScoreMethod m = ScoreMethod::kNegDiameter;
  if (method == "score1") m = ScoreMethod::kScore1;
  else if (method == "score2") m = ScoreMethod::kScore2;
  auto scored = score_triangles(tris, m);
  auto top = select_top(scored, top_m);
  std::map<std::pair<std::pair<Int, Int>, Int>, double> score_of;
  for (const auto& s : scored)
    score_of[{{s.t.a, s.t.b}, s.t.c}] = s.score;
  OutFile of(out);
  std::ostream& os = of.stream();
  os << "# a b c score\n";
  for (const auto& t : top) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", score_of[{{t.a, t.b}, t.c}]);
    os << t.a.get_str() << ' ' << t.b.get_str() << ' ' << t.c.get_str() << ' '
       << buf << '\n';
  }
  return kExitOk;
}

int cmd_stats(const std::string& path) {
  auto clusters = read_clusters_file(path);
  std::map<int, std::size_t> by_size;
  std::map<std::pair<int, Int>, std::size_t> by_decade;  // (n, 10^k bound)
  for (const auto& c : clusters) {
    ++by_size[c.n];
    Int bound(10);
    Int diam = diameter(c);
    while (bound < diam) bound *= 10;
    ++by_decade[{c.n, bound}];
  }
  for (const auto& [n, cnt] : by_size)
    std::cout << "n=" << n << " total " << cnt << "\n";
  for (const auto& [key, cnt] : by_decade)
    std::cout << "n=" << key.first << " diameter<=" << key.second.get_str()
              << ": " << cnt << "\n";
  return kExitOk;
}

int cmd_canonical(const std::string& path) {
  for (const auto& c : read_clusters_file(path)) {
    CanonicalKey key = canonical_form(c);
    for (std::size_t i = 0; i < key.size(); ++i)
      std::cout << (i ? " " : "") << key[i].get_str();
    std::cout << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integral point sets in general position: generation tools"};
  app.require_subcommand(1);

  std::uint32_t max_diameter = 0;
  std::string algorithm = "naive", out_path, in_path, in_path2, method =
      "neg-diameter";
  bool primitive_only = false;
  ExtendOptions ext;
  CombineConfig cmb;
  int n_target = 4, center_index = 0;
  unsigned height = 5;
  std::size_t top_m = 1000;
  std::vector<std::uint64_t> sides;

  auto* gen = app.add_subcommand("heron-gen", "Generate Heronian triangles");
  gen->add_option("--max-diameter", max_diameter)->required();
  gen->add_option("--algorithm", algorithm)
      ->check(CLI::IsMember({"naive", "third-side"}));
  gen->add_flag("--primitive-only", primitive_only);
  gen->add_option("--out", out_path);

  auto* ext_cmd = app.add_subcommand("extend", "Triangle-extension search");
  ext_cmd->add_option("--triangles", in_path)->required();
  ext_cmd->add_flag("--strip-isosceles", ext.strip_isosceles);
  ext_cmd->add_flag("--partition", ext.partition);
  ext_cmd->add_option("--threads", ext.threads);
  ext_cmd->add_option("--min-size", ext.min_emit);
  ext_cmd->add_option("--out", out_path);

  auto* cmb_cmd = app.add_subcommand("combine", "Combine two cluster lists");
  cmb_cmd->add_option("--list1", in_path)->required();
  cmb_cmd->add_option("--list2", in_path2)->required();
  cmb_cmd->add_option("--n1", cmb.n1)->required();
  cmb_cmd->add_option("--n2", cmb.n2)->required();
  cmb_cmd->add_option("-c,--common", cmb.c)->required();
  cmb_cmd->add_flag("--all-subclusters", cmb.all_subclusters);
  cmb_cmd->add_option("--min-output", cmb.min_output);
  cmb_cmd->add_option("--out", out_path);

  auto* exh = app.add_subcommand("exhaustive", "Exhaustive bounded search");
  exh->add_option("--max-diameter", max_diameter)->required();
  exh->add_option("--n-target", n_target)->required();
  exh->add_option("--out", out_path);

  auto* ver = app.add_subcommand("verify", "Verify a cluster file");
  ver->add_option("path", in_path)->required();

  auto* inv = app.add_subcommand("invert", "Circle inversion at a vertex");
  inv->add_option("--clusters", in_path)->required();
  inv->add_option("--center", center_index);
  inv->add_option("--out", out_path);

  auto* fp = app.add_subcommand("fourth-point",
                                "Rational fourth-point candidates");
  fp->add_option("--triangle", sides, "sides a b c")->expected(3)->required();
  fp->add_option("--height", height);
  fp->add_option("--out", out_path);

  auto* sc = app.add_subcommand("score", "Score and select triangles");
  sc->add_option("--triangles", in_path)->required();
  sc->add_option("--method", method)
      ->check(CLI::IsMember({"neg-diameter", "score1", "score2"}));
  sc->add_option("--top", top_m);
  sc->add_option("--out", out_path);

  auto* st = app.add_subcommand("stats", "Catalog counts");
  st->add_option("path", in_path)->required();

  auto* can = app.add_subcommand("canonical", "Canonical keys of clusters");
  can->add_option("path", in_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed())
      return cmd_heron_gen(max_diameter, algorithm, primitive_only, out_path);
    if (ext_cmd->parsed()) return cmd_extend(in_path, ext, out_path);
    if (cmb_cmd->parsed()) return cmd_combine(in_path, in_path2, cmb, out_path);
    if (exh->parsed()) return cmd_exhaustive(max_diameter, n_target, out_path);
    if (ver->parsed()) return cmd_verify(in_path);
    if (inv->parsed()) return cmd_invert(in_path, center_index, out_path);
    if (fp->parsed()) return cmd_fourth_point(sides, height, out_path);
    if (sc->parsed()) return cmd_score(in_path, method, top_m, out_path);
    if (st->parsed()) return cmd_stats(in_path);
    if (can->parsed()) return cmd_canonical(in_path);
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  }
  return kExitUsage;
}
