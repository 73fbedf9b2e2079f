#include "drg/cli.hpp"

#include "drg/analyze.hpp"
#include "drg/families.hpp"
#include "drg/scanner.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace drg::cli {

namespace {

struct Options {
  std::string format = "text";
  std::string epsilon = "1e-12";
};

Config make_config(const Options& opt) {
  Config cfg;
  cfg.eps = parse_rational(opt.epsilon);
  if (cfg.eps <= 0 || cfg.eps > 1) throw std::invalid_argument("epsilon must be in (0, 1]");
  cfg.refine_width = cfg.eps * cfg.eps;
  if (cfg.refine_width > pow10(-50)) cfg.refine_width = pow10(-50);
  return cfg;
}

// Parses, validates, and solves one array argument; prints a diagnosis and
// returns nullopt when the array has no diameter-4 spectrum.
std::optional<Spectrum> solve_array(const std::string& text, const Config& cfg,
                                    IntersectionArray& ia, std::ostream& out) {
  ia = IntersectionArray::parse(text);
  if (!ia.structurally_valid())
    throw std::invalid_argument("array violates the structural constraints (monotone b/c, "
                                "c1 = 1, a_i >= 0)");
  if (!ia.k_values()) {
    out << "array " << ia.to_string() << " has non-integral k_i; no graph can realize it\n";
    return std::nullopt;
  }
  try {
    return spectrum_of(ia, cfg);
  } catch (const RepeatedRootError& e) {
    out << "array " << ia.to_string() << " rejected: " << e.what() << "\n";
  } catch (const NonIntegralMultiplicityError& e) {
    out << "array " << ia.to_string() << " rejected: " << e.what() << "\n";
  }
  return std::nullopt;
}

void print_spectrum_report(const IntersectionArray& ia, const Spectrum& s, std::ostream& out) {
  for (int i = 0; i < 5; ++i) {
    out << "lambda_" << i << " " << render_value(s.eig(i)) << " multiplicity " << s.mult[i]
        << "\n";
  }
  for (int i = 0; i < 5; ++i) out << "pi_" << i << " " << render_value(s.pi[i]) << "\n";
  // Moment identities: residuals of <1,1>=1, <x,1>=0, <x^2,1>=k, <x^3,1>=k*a1.
  const IntervalPoly one = interval_poly({1});
  const Interval r0 = spectral_inner_product(one, one, s) - Interval(1LL);
  const Interval r1 = spectral_inner_product(interval_poly({0, 1}), one, s);
  const Interval r2 = spectral_inner_product(interval_poly({0, 0, 1}), one, s) - Interval(s.k);
  const Interval r3 = spectral_inner_product(interval_poly({0, 0, 0, 1}), one, s) -
                      Interval(s.k * ia.a1());
  out << "moment_residual_0 " << render_value(r0) << "\n";
  out << "moment_residual_1 " << render_value(r1) << "\n";
  out << "moment_residual_2 " << render_value(r2) << "\n";
  out << "moment_residual_3 " << render_value(r3) << "\n";
}

void print_check_report(const IntersectionArray& ia, const Spectrum& s, const Config& cfg,
                        std::ostream& out) {
  const SdrgCondition c1 = sdrg_eigenvalue_condition(s, ia.b1(), cfg);
  const AntipodalCondition c2 = antipodal_eigenvalue_condition(s, ia.k(), ia.a1(), cfg);
  const ProductBalance pb = sdrg_product_balance(s, cfg);
  const MultiplicityPattern mp = antipodal_multiplicity_pattern(s, cfg);
  const BipartiteSdrgCheck bip = bipartite_sdrg_check(ia, s, cfg);

  out << "array " << ia.to_string() << "\n";
  for (int i = 0; i < 5; ++i)
    out << "lambda_" << i << " " << render_value(s.eig(i)) << " multiplicity " << s.mult[i]
        << "\n";
  out << "condition1 " << to_string(c1.verdict) << "\n";
  out << "condition1_prod13 " << render_value(c1.prod13) << "\n";
  out << "condition1_prod24 " << render_value(c1.prod24) << "\n";
  out << "condition1_target " << c1.target << "\n";
  out << "condition2 " << to_string(c2.verdict) << "\n";
  out << "condition2_disjunct " << to_string(c2.which) << "\n";
  out << "condition2_product " << render_value(c2.product) << "\n";
  out << "condition2_sum " << render_value(c2.sum) << "\n";
  out << "product_balance " << to_string(pb.holds) << "\n";
  out << "product_balance_alpha " << render_value(pb.alpha) << "\n";
  out << "product_balance_m3pi3 " << render_value(Interval(s.mult[3]) * s.pi[3]) << "\n";
  out << "product_balance_beta " << render_value(pb.beta) << "\n";
  out << "product_balance_m4pi4 " << render_value(Interval(s.mult[4]) * s.pi[4]) << "\n";
  out << "antipodal_pattern " << to_string(mp.verdict);
  if (mp.verdict == Verdict::yes) out << " r=" << mp.r;
  out << "\n";
  out << "bipartite_sdrg "
      << (bip.applicable ? to_string(bip.verdict) : "not-applicable") << "\n";
}

int run_generate(const std::string& family, const std::vector<long long>& params,
                 const std::string& matrix_path, const std::string& out_path,
                 std::ostream& err) {
  Graph g(1);
  if (family == "hypercube") {
    if (params.size() != 1) throw std::invalid_argument("hypercube needs one parameter: d");
    g = families::hypercube(static_cast<int>(params[0]));
  } else if (family == "cycle") {
    if (params.size() != 1) throw std::invalid_argument("cycle needs one parameter: n");
    g = families::cycle(static_cast<int>(params[0]));
  } else if (family == "kneser") {
    if (params.size() != 2) throw std::invalid_argument("kneser needs two parameters: v t");
    g = families::kneser(static_cast<int>(params[0]), static_cast<int>(params[1]));
  } else if (family == "hadamard-graph") {
    families::HadamardMatrix h;
    if (!matrix_path.empty()) {
      h = families::read_hadamard_matrix_file(matrix_path);
    } else {
      if (params.size() != 1)
        throw std::invalid_argument("hadamard-graph needs the order (a power of two), or "
                                    "--matrix FILE");
      const long long order = params[0];
      int t = 0;
      while ((1LL << t) < order) ++t;
      if ((1LL << t) != order)
        throw std::invalid_argument("built-in construction supports powers of two only; use "
                                    "--matrix for other orders");
      h = families::hadamard_matrix_sylvester(t);
    }
    g = families::hadamard_graph(h);
  } else {
    throw std::invalid_argument("unknown family '" + family +
                                "' (hypercube, cycle, kneser, hadamard-graph)");
  }
  std::ofstream out(out_path);
  if (!out) {
    err << "cannot write " << out_path << "\n";
    return 1;
  }
  write_graph(g, out);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"verification toolkit for diameter-4 distance-regular graphs"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "machine"}))
      ->capture_default_str();
  app.add_option("--epsilon", opt.epsilon, "eigenvalue isolation width")
      ->capture_default_str();

  std::string graph_path, array_text, family, matrix_path, out_path = "graph.txt";
  std::vector<long long> params;
  int k_max = 8;
  long long n_max = 10000;
  bool witnesses_only = false;

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "full pipeline on a graph file");
  analyze_cmd->add_option("file", graph_path, "graph file")->required();

  CLI::App* spectrum_cmd =
      app.add_subcommand("spectrum", "eigenvalues and multiplicities of an array");
  spectrum_cmd->add_option("array", array_text, "\"b0 b1 b2 b3 ; c1 c2 c3 c4\"")->required();

  CLI::App* check_cmd = app.add_subcommand("check", "spectral predicates of an array");
  check_cmd->add_option("array", array_text, "\"b0 b1 b2 b3 ; c1 c2 c3 c4\"")->required();

  CLI::App* generate_cmd = app.add_subcommand("generate", "write a family graph to a file");
  generate_cmd->add_option("family", family, "hypercube|cycle|kneser|hadamard-graph")
      ->required();
  generate_cmd->add_option("params", params, "family parameters");
  generate_cmd->add_option("-o,--out", out_path, "output path")->capture_default_str();
  generate_cmd->add_option("--matrix", matrix_path, "hadamard matrix file");

  CLI::App* scan_cmd = app.add_subcommand("scan", "enumerate and classify arrays");
  scan_cmd->add_option("k_max", k_max, "maximum degree b0")->required();
  scan_cmd->add_option("n_max", n_max, "maximum vertex count")->required();
  scan_cmd->add_flag("--witnesses-only", witnesses_only,
                     "print only sdrg-nonantipodal-candidate records");

  for (CLI::App* sub : {analyze_cmd, spectrum_cmd, check_cmd, generate_cmd, scan_cmd})
    sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  try {
    const Config cfg = make_config(opt);

    if (*analyze_cmd) {
      const Graph g = read_graph_file(graph_path);
      const AnalysisReport rep = analyze(g, graph_path, cfg);
      out << (opt.format == "machine" ? render_machine(rep) : render_text(rep));
      return rep.consistency ? 0 : 2;
    }
    if (*spectrum_cmd || *check_cmd) {
      IntersectionArray ia;
      const auto s = solve_array(array_text, cfg, ia, out);
      if (!s) return 0;
      if (*spectrum_cmd) {
        print_spectrum_report(ia, *s, out);
      } else {
        print_check_report(ia, *s, cfg, out);
      }
      return 0;
    }
    if (*generate_cmd) {
      return run_generate(family, params, matrix_path, out_path, err);
    }
    if (*scan_cmd) {
      const auto records = scan(k_max, n_max, cfg);
      for (const auto& r : records) {
        if (witnesses_only && r.tag != ScanTag::sdrg_nonantipodal_candidate) continue;
        out << r.line() << "\n";
      }
      out << open_question_report(records, k_max, n_max).to_string();
      return 0;
    }
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace drg::cli
