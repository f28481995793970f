#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hsub/hsub.hpp"

namespace {

using namespace hsub;

constexpr int exit_found = 0;
constexpr int exit_usage = 1;
constexpr int exit_input = 2;
constexpr int exit_absent = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::uint64_t seed = 1;
  double omega = 3.0;
  unsigned threads = 1;
  bool oracle = false;

  std::string mode;
  int h = 3;
  int k = 3;
  bool all_pairs = false;
  std::string pattern_file;
  std::size_t trials = 0;
  double delta = 0.01;
  std::string pref = "count";
  bool strict = false;
  std::size_t bucket = 0;
  std::size_t bits = 1;
  std::string suite = "bool";
  std::vector<std::size_t> sizes;
};

std::string read_text(const std::string& path) {
  std::ostringstream ss;
  if (path.empty() || path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    ss << in.rdbuf();
  }
  return ss.str();
}

Graph load_graph(const Options& o) { return parse_graph(read_text(o.input)); }

std::string join(const Tuple& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(t[i]);
  }
  return s;
}

// Trailing report lines shared by every search command.
class Report {
 public:
  Report(std::string algorithm, const Options& o) : algorithm_(std::move(algorithm)), opts_(o) {
#ifdef HSUB_COUNT_COMPARISONS
    comparison_counter() = 0;
#endif
  }

  void param(const std::string& key, const std::string& value) { params_ += " " + key + "=" + value; }

  void finish() const {
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    std::cout << "# algorithm=" << (opts_.oracle ? "oracle-" : "") << algorithm_ << '\n';
    if (!params_.empty()) std::cout << "# params=" << params_.substr(1) << '\n';
    std::cout << "# seed=" << opts_.seed << '\n';
    std::cout << "# threads=" << opts_.threads << '\n';
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    std::cout << "# time_ms=" << buf << '\n';
#ifdef HSUB_COUNT_COMPARISONS
    std::cout << "# comparisons=" << comparison_counter() << '\n';
#endif
  }

 private:
  std::string algorithm_;
  const Options& opts_;
  std::string params_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int emit(const std::optional<SubgraphResult>& r, const Report& rep) {
  if (r) {
    std::cout << format_real(r->weight) << '\t' << join(r->vertices) << '\n';
  } else {
    std::cout << "none\n";
  }
  rep.finish();
  return r ? exit_found : exit_absent;
}

int emit_all_pairs(const AllPairsBest& best, const Report& rep) {
  bool any = false;
  for (Vertex u = 1; u <= best.n(); ++u) {
    for (Vertex v = u + 1; v <= best.n(); ++v) {
      if (const auto& r = best.at(u, v)) {
        std::cout << u << ',' << v << '\t' << format_real(r->weight) << '\t' << join(r->vertices) << '\n';
        any = true;
      }
    }
  }
  if (!any) std::cout << "none\n";
  rep.finish();
  return any ? exit_found : exit_absent;
}

int run_triangle(const Options& o) {
  const Graph g = load_graph(o);
  const std::string mode = o.mode.empty() ? "det" : o.mode;
  Report rep("triangle-" + mode, o);
  if (o.oracle) return emit(oracle::max_clique(g, 3), rep);
  if (mode == "det") return emit(heaviest_triangle_det(g), rep);
  if (mode == "rand") return emit(heaviest_triangle_rand(g, o.seed), rep);
  if (mode == "sparse") {
    rep.param("omega", format_real(o.omega));
    return emit(heaviest_triangle_sparse(g, o.omega), rep);
  }
  if (mode == "allpairs") return emit(all_pairs_max_clique(g, 3).overall(), rep);
  throw CLI::ValidationError("--mode", "expected det, rand, sparse or allpairs");
}

int run_clique(const Options& o) {
  const Graph g = load_graph(o);
  Report rep(o.all_pairs ? "clique-all-pairs" : "clique", o);
  rep.param("h", std::to_string(o.h));
  if (o.all_pairs) {
    if (o.oracle) return emit_all_pairs(oracle::all_pairs(g, static_cast<std::size_t>(o.h)), rep);
    return emit_all_pairs(all_pairs_max_clique(g, o.h, plan_parameters(o.omega, o.h)), rep);
  }
  if (o.oracle) return emit(oracle::max_clique(g, static_cast<std::size_t>(o.h)), rep);
  if (g.has_vertex_weights()) return emit(all_pairs_max_clique(g, o.h, plan_parameters(o.omega, o.h)).overall(), rep);
  return emit(heaviest_subgraph_distance_product(g, o.h, default_split(o.h)), rep);
}

int run_pattern(const Options& o) {
  if (o.pattern_file.empty()) throw CLI::RequiredError("--pattern-file");
  const Graph g = load_graph(o);
  const Pattern p = Pattern::from_graph(parse_graph(read_text(o.pattern_file)));
  Report rep(o.all_pairs ? "pattern-all-pairs" : "pattern", o);
  rep.param("h", std::to_string(p.h));
  const int h = static_cast<int>(p.h);
  if (o.oracle) {
    if (o.all_pairs) return emit_all_pairs(oracle::all_pairs_pattern(g, p), rep);
    return emit(oracle::max_pattern(g, p), rep);
  }
  const AllPairsBest best = all_pairs_max_pattern(g, p, plan_parameters(o.omega, h));
  if (o.all_pairs) return emit_all_pairs(best, rep);
  return emit(best.overall(), rep);
}

int run_k2k(const Options& o, std::size_t k) {
  const Graph g = load_graph(o);
  Report rep("k2k", o);
  rep.param("k", std::to_string(k));
  if (o.oracle) return emit(oracle::k2k(g, k), rep);
  return emit(heaviest_k2k(g, k), rep);
}

int run_beta(const Options& o) {
  const Graph g = load_graph(o);
  Report rep("beta", o);
  rep.param("h", std::to_string(o.h));
  const bool exists = !(o.oracle ? oracle::enumerate_cliques(g, static_cast<std::size_t>(o.h)).empty()
                                 : detail::clique_subsets(g, static_cast<std::size_t>(o.h)).empty());
  const std::size_t beta =
      o.oracle ? oracle::edge_cover_number(g, static_cast<std::size_t>(o.h)) : edge_cover_number(g, o.h);
  if (exists) {
    std::cout << beta << '\n';
  } else {
    std::cout << "none\n";
  }
  rep.finish();
  return exists ? exit_found : exit_absent;
}

int run_cycle(const Options& o) {
  const Graph g = load_graph(o);
  const std::string mode = o.mode.empty() ? "sparse" : o.mode;
  Report rep("cycle-" + mode, o);
  ColorTrialPlan plan;
  plan.k = o.k;
  plan.trials = o.trials;
  plan.failure_bound = o.delta;
  plan.seed = o.seed;
  rep.param("k", std::to_string(o.k));
  if (o.oracle) return emit(oracle::k_cycle(g, static_cast<std::size_t>(o.k)), rep);
  rep.param("trials", std::to_string(plan.effective_trials()));
  if (mode == "sparse") return emit(heaviest_k_cycle_sparse(g, o.k, plan), rep);
  if (mode == "dense") return emit(heaviest_k_cycle_dense(g, o.k, plan), rep);
  throw CLI::ValidationError("--mode", "expected sparse or dense");
}

int run_dense(const Options& o) {
  const Graph g = load_graph(o);
  Report rep("dense-sub", o);
  rep.param("k", std::to_string(o.k));
  if (o.oracle) return emit(oracle::densest(g, static_cast<std::size_t>(o.k)), rep);
  return emit(densest_k_subgraph(g, o.k), rep);
}

int run_rainbow(const Options& o) {
  const Graph g = load_graph(o);
  Report rep("rainbow", o);
  rep.param("h", std::to_string(o.h));
  if (o.oracle) return emit(oracle::rainbow(g, static_cast<std::size_t>(o.h)), rep);
  RainbowOptions ro;
  ro.trials = o.trials;
  ro.failure_bound = o.delta;
  ro.seed = o.seed;
  return emit(rainbow_clique(g, o.h, ro), rep);
}

int run_mono(const Options& o) {
  const Graph g = load_graph(o);
  Report rep("mono", o);
  rep.param("h", std::to_string(o.h));
  if (o.oracle) return emit(oracle::mono(g, static_cast<std::size_t>(o.h)), rep);
  if (o.h == 3) return emit(mono_triangle(g, o.omega), rep);
  return emit(mono_clique(g, o.h), rep);
}

int run_market(const Options& o) {
  const MarketInstance inst = parse_market(read_text(o.input));
  Report rep("market", o);
  rep.param("pref", o.pref);
  const PreferenceSpec prefs = PreferenceSpec::uniform(parse_preference(o.pref));
  MarketResult r;
  if (o.oracle) {
    r.matrices = oracle::market(inst);
    r.scores = evaluate_preferences(r.matrices, prefs);
    r.matching = deferred_acceptance(r.scores);
  } else {
    r = stable_matching(inst, prefs);
  }
  for (std::size_t i = 0; i < inst.n(); ++i) {
    const std::size_t j = r.matching.seller_of[i];
    std::cout << i + 1 << '\t' << j + 1 << '\t' << r.matrices.count(i, j) << '\t'
              << format_real(r.matrices.price(i, j)) << '\t' << format_real(r.matrices.reserve(i, j)) << '\n';
  }
  auto dump = [](const char* name, const auto& m) {
    std::stringstream ss;
    write_matrix(ss, m);
    std::string line;
    std::cout << "# " << name << '\n';
    while (std::getline(ss, line)) std::cout << "# " << line << '\n';
  };
  dump("C", r.matrices.count);
  dump("P", r.matrices.price);
  dump("R", r.matrices.reserve);
  std::cout << "# blocking_pairs=" << blocking_pairs(r.scores, r.matching).size() << '\n';
  rep.finish();
  return exit_found;
}

std::pair<ExtMatrix, ExtMatrix> load_matrix_pair(const Options& o) {
  std::istringstream in(read_text(o.input));
  ExtMatrix a = read_ext_matrix(in);
  ExtMatrix b = read_ext_matrix(in);
  return {std::move(a), std::move(b)};
}

int run_dominance(const Options& o) {
  const auto [p, q] = load_matrix_pair(o);
  Report rep("dominance", o);
  DominanceParams params;
  params.s = o.bucket;
  params.strict = o.strict;
  params.omega_hint = o.omega;
  write_matrix(std::cout, o.oracle ? oracle::dominance(p, q, o.strict) : dominance_matrix(p, q, params));
  rep.finish();
  return exit_found;
}

int run_msb(const Options& o) {
  const auto [a, b] = load_matrix_pair(o);
  Report rep("msb", o);
  rep.param("bits", std::to_string(o.bits));
  std::vector<std::vector<std::string>> cells(a.rows(), std::vector<std::string>(b.cols()));
  double scale = 0.0;
  if (o.oracle) {
    scale = oracle::msb_scale(a, b);
    const auto bits = oracle::msb_bits(oracle::min_plus(a, b), scale, o.bits);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) {
        for (int x : bits[i][j]) cells[i][j] += static_cast<char>('0' + x);
      }
    }
  } else {
    const MsbResult r = msb_distance_product(a, b, o.bits);
    scale = r.scale;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) {
        for (const auto& plane : r.bits) cells[i][j] += plane.get(i, j) ? '1' : '0';
      }
    }
  }
  std::cout << "m " << a.rows() << ' ' << b.cols() << '\n';
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "") << row[j];
    std::cout << '\n';
  }
  std::cout << "# W=" << format_real(scale) << '\n';
  rep.finish();
  return exit_found;
}

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s = buf;
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

int run_plan(const Options& o) {
  const PlanParameters p = plan_parameters(o.omega, o.h);
  std::cout << "t=" << fixed6(p.t) << " a=" << p.a << " b=" << p.b << " c=" << p.c << '\n';
  std::cout << "# mu=" << fixed6(p.mu) << " s1=" << fixed6(p.s1) << " s2=" << fixed6(p.s2)
            << " branch=" << (p.s1_branch ? "s1" : "s2") << '\n';
  return exit_found;
}

int run_bench(const Options& o) {
  std::vector<std::size_t> sizes = o.sizes;
  if (sizes.empty()) sizes = {256, 512, 1024};
  std::cout << "suite\tn\tfast_ms\tnaive_ms\tspeedup\tagree\tnote\n";
  bool ok = true;
  for (std::size_t n : sizes) {
    const bench::Row row = bench::run(o.suite, n, o.seed);
    std::cout << row.suite << '\t' << row.n << '\t' << fixed6(row.fast_ms) << '\t' << fixed6(row.naive_ms) << '\t'
              << fixed6(row.speedup()) << '\t' << (row.agree ? "yes" : "no") << '\t' << row.note << '\n';
    ok = ok && row.agree;
  }
  return ok ? exit_found : exit_input;
}

}  // namespace

int main(int argc, char** argv) {
  // `hsub oracle <cmd> ...` is `hsub <cmd> --oracle ...`.
  std::vector<std::string> args(argv, argv + argc);
  if (args.size() > 1 && args[1] == "oracle") {
    args.erase(args.begin() + 1);
    if (args.size() > 1) args.insert(args.begin() + 2, "--oracle");
  }
  std::vector<char*> cargs;
  for (auto& s : args) cargs.push_back(s.data());

  Options o;
  CLI::App app{"Maximum-weight subgraph search and matrix tools"};
  app.name("hsub");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-i,--input", o.input, "Input file (default: standard input)");
  app.add_option("--seed", o.seed, "Random seed");
  app.add_option("--omega", o.omega, "Matrix multiplication exponent used by planners")->check(CLI::Range(2.0, 3.0));
  app.add_option("--threads", o.threads, "Worker threads for matrix kernels")->check(CLI::PositiveNumber);

  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->set_help_flag("--help", "Print this help message and exit");
    s->add_flag("--oracle", o.oracle, "Run the brute-force oracle instead");
    return s;
  };
  CLI::App* triangle = sub("triangle", "Heaviest vertex-weighted triangle");
  triangle->add_option("--mode", o.mode, "det | rand | sparse | allpairs");
  CLI::App* clique = sub("clique", "Heaviest K_h");
  clique->add_option("--h", o.h, "Clique size")->required();
  clique->add_flag("--all-pairs", o.all_pairs, "Report the heaviest K_h through every vertex pair");
  CLI::App* pattern = sub("pattern", "Heaviest induced copy of a pattern graph");
  pattern->add_option("--pattern-file", o.pattern_file, "Pattern in graph format")->required();
  pattern->add_flag("--all-pairs", o.all_pairs, "Report every vertex pair");
  CLI::App* k22 = sub("k22", "Heaviest K_{2,2}");
  CLI::App* k2k = sub("k2k", "Heaviest K_{2,k}");
  k2k->add_option("--k", o.k, "Size of the larger side")->required()->check(CLI::PositiveNumber);
  CLI::App* beta = sub("beta", "Most edges incident with a single K_h");
  beta->add_option("--h", o.h, "Clique size")->required();
  CLI::App* cycle = sub("cycle", "Heaviest simple k-cycle (edge weights)");
  cycle->add_option("-k,--k", o.k, "Cycle length")->required();
  cycle->add_option("--mode", o.mode, "sparse | dense");
  cycle->add_option("--trials", o.trials, "Coloring trials (default from --delta)");
  cycle->add_option("--delta", o.delta, "Failure probability bound");
  CLI::App* dense = sub("dense-sub", "k-set of maximum induced edge weight");
  dense->add_option("--k", o.k, "Set size")->required();
  CLI::App* rainbow = sub("rainbow", "K_h with pairwise distinct edge colors");
  rainbow->add_option("--h", o.h, "Clique size")->required();
  rainbow->add_option("--trials", o.trials, "Color reductions (default from --delta)");
  rainbow->add_option("--delta", o.delta, "Failure probability bound");
  CLI::App* mono = sub("mono", "K_h with all edges one color");
  mono->add_option("--h", o.h, "Clique size")->required();
  CLI::App* market = sub("market", "Buyer-seller transaction matrices and stable matching");
  market->add_option("--pref", o.pref, "count | surplus | price | expr:<expression>");
  CLI::App* dominance = sub("dominance", "Dominance matrix of two point sets (matrix format, P then Q)");
  dominance->add_flag("--strict", o.strict, "Count strict dominance");
  dominance->add_option("--s", o.bucket, "Bucket size (0: default)");
  CLI::App* msb = sub("msb", "Leading bits of a min-plus product (matrix format, A then B)");
  msb->add_option("--bits", o.bits, "Number of leading bits")->check(CLI::Range(1, 16));
  CLI::App* plan = sub("plan", "Split parameters and exponent t(omega, h)");
  plan->add_option("--h", o.h, "Pattern size")->required();
  CLI::App* bench = sub("bench", "Kernel timings against naive loops");
  bench->add_option("--suite", o.suite, "bool | dominance | minplus");
  bench->add_option("--sizes", o.sizes, "Matrix sizes")->delimiter(',');

  try {
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }
  set_thread_count(o.threads);

  try {
    if (triangle->parsed()) return run_triangle(o);
    if (clique->parsed()) return run_clique(o);
    if (pattern->parsed()) return run_pattern(o);
    if (k22->parsed()) return run_k2k(o, 2);
    if (k2k->parsed()) return run_k2k(o, static_cast<std::size_t>(o.k));
    if (beta->parsed()) return run_beta(o);
    if (cycle->parsed()) return run_cycle(o);
    if (dense->parsed()) return run_dense(o);
    if (rainbow->parsed()) return run_rainbow(o);
    if (mono->parsed()) return run_mono(o);
    if (market->parsed()) return run_market(o);
    if (dominance->parsed()) return run_dominance(o);
    if (msb->parsed()) return run_msb(o);
    if (plan->parsed()) return run_plan(o);
    if (bench->parsed()) return run_bench(o);
  } catch (const CLI::Error& e) {
    std::cerr << "hsub: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "hsub: " << e.what() << '\n';
    return exit_input;
  }
  return exit_usage;
}
