// hinv: certify, generate and falsify fixed-step fixed-point algorithms.
//
// Exit codes: 0 success/optimal, 1 malformed input or usage, 2 invariance violated,
// 3 certificate violated, 4 nothing to falsify, 5 falsify on a non-invariant matrix,
// 6 oracle mismatch.

#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hinv/catalog.hpp"
#include "hinv/io.hpp"
#include "hinv/oracle.hpp"
#include "hinv/simulate.hpp"

using namespace hinv;

namespace {

enum Exit { kOk = 0, kBadInput = 1, kInvariance = 2, kCertificate = 3, kNothing = 4, kNonInvariant = 5,
            kMismatch = 6 };

bool color_enabled() {
  if (const char* env = std::getenv("HINV_COLOR")) return std::string(env) == "1";
  return isatty(STDERR_FILENO);
}

std::string paint(const std::string& text, const char* code) {
  if (!color_enabled()) return text;
  return std::string("\033[") + code + "m" + text + "\033[0m";
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text << '\n';
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::invalid_argument("cannot write " + out);
  f << text << '\n';
}

HMatrix generate(const std::string& family, int n, int n_prime) {
  if (family == "ohm") return ohm(n);
  if (family == "dual-ohm") return dual_ohm(n);
  if (family == "self-dual") return self_dual_mixed(n, n_prime);
  if (family == "second-mixed") return second_mixed(n, n_prime);
  if (family == "strange3") return strange3();
  throw std::invalid_argument("unknown family '" + family + "'");
}

bool family_uses_split(const std::string& family) {
  return family == "self-dual" || family == "second-mixed";
}

std::string pair_text(std::pair<int, int> p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

int cmd_certify(const std::string& path) {
  const HMatrix h = read_hmatrix_file(path);
  const Verdict v = certify(h);
  std::cout << to_json(v).dump() << '\n';
  if (is_optimal(v)) {
    std::cerr << paint("optimal", "32") << ": N=" << h.n() << " attains 4R^2/N^2\n";
    return kOk;
  }
  if (auto* iv = std::get_if<InvarianceViolated>(&v)) {
    std::cerr << paint("invariance violated", "31") << ": max |P(N-1,m) - C(N,m+1)/N| = "
              << to_string(iv->report.max_abs()) << '\n';
    return kInvariance;
  }
  const auto& cv = std::get<CertificateViolated>(v);
  std::cerr << paint("certificate violated", "33") << ": " << cv.negative.size()
            << " negative certificate(s), first at " << pair_text(cv.negative.front()) << '\n';
  return kCertificate;
}

int cmd_falsify(const std::string& path, const std::string& pair, bool vectors) {
  const HMatrix h = read_hmatrix_file(path);
  const Verdict v = certify(h);
  if (is_optimal(v)) {
    std::cerr << "nothing to falsify: the matrix is optimal\n";
    return kNothing;
  }
  if (std::holds_alternative<InvarianceViolated>(v)) {
    const Rational r = worst_case_residual_sq(h, 1);
    const Rational bound(4, h.n() * h.n());
    json out = {{"status", "invariance_violated"},
                {"n", h.n()},
                {"residual_sq", to_string(r)},
                {"bound_sq", to_string(bound)},
                {"excess", to_string(r - bound)}};
    std::cout << out.dump() << '\n';
    std::cerr << paint("invariance violated", "31") << ": worst-case residual exceeds the bound by "
              << to_string(r - bound) << '\n';
    return kNonInvariant;
  }
  const auto& cv = std::get<CertificateViolated>(v);
  std::pair<int, int> chosen = cv.negative.front();
  if (!pair.empty()) {
    char comma = 0;
    std::istringstream is(pair);
    if (!(is >> chosen.first >> comma >> chosen.second) || comma != ',')
      throw std::invalid_argument("--pair expects i,j");
  }
  const GramWitness w = suboptimality_witness(h, chosen.first, chosen.second);
  if (!check_witness(w, h).ok()) throw std::logic_error("witness failed its own re-check");
  std::cout << to_json(w, vectors).dump() << '\n';
  std::cerr << paint("witness", "33") << ": residual_sq = " << to_string(w.residual_sq) << " > "
            << to_string(w.bound_sq()) << " at pair " << pair_text(chosen) << '\n';
  return kOk;
}

Eigen::VectorXd read_vector(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json doc = json::parse(in);
  std::vector<double> v = doc.get<std::vector<double>>();
  return Eigen::Map<Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

Eigen::MatrixXd read_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json doc = json::parse(in);
  auto rows = doc.get<std::vector<std::vector<double>>>();
  Eigen::MatrixXd m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != static_cast<std::size_t>(m.cols())) throw std::invalid_argument("ragged matrix");
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

int cmd_simulate(const std::string& path, const std::string& oracle_spec, const std::string& y0_spec,
                 int steps) {
  HMatrix h = read_hmatrix_file(path);
  if (steps >= 0) {
    if (steps > h.size()) throw std::invalid_argument("--steps exceeds the number of H-matrix rows");
    h = h.leading(steps);
  }
  OperatorOracle oracle;
  if (oracle_spec == "worstcase")
    oracle = worstcase_oracle(h.n());
  else if (oracle_spec.rfind("rotation:", 0) == 0)
    oracle = rotation_oracle(std::stod(oracle_spec.substr(9)));
  else if (oracle_spec.rfind("matrix:", 0) == 0)
    oracle = linear_oracle(read_matrix(oracle_spec.substr(7)), oracle_spec);
  else
    throw std::invalid_argument("unknown oracle '" + oracle_spec + "'");
  const Eigen::VectorXd y0 = y0_spec == "worstcase" ? worstcase_y0(oracle.dimension) : read_vector(y0_spec);
  const Trajectory t = run(h, oracle, y0);
  for (const auto& w : t.warnings) std::cerr << paint("warning", "33") << ": " << w << '\n';
  std::cout << trajectory_csv(t);
  return kOk;
}


int cmd_sweep(const std::string& family, int n_min, int n_max, int np_min, int np_max) {
  struct Cell {
    int n, np;
  };
  std::vector<Cell> cells;
  if (family == "strange3") {
    cells.push_back({4, 0});
  } else {
    for (int n = n_min; n <= n_max; ++n) {
      if (!family_uses_split(family)) {
        cells.push_back({n, 0});
        continue;
      }
      for (int np = std::max(2, np_min); np <= std::min(n - 2, np_max); ++np) cells.push_back({n, np});
    }
  }
  std::vector<std::future<std::string>> jobs;
  for (const Cell& c : cells)
    jobs.push_back(std::async(std::launch::async, [family, c] {
      const HMatrix h = generate(family, c.n, c.np);
      const Verdict v = certify(h);
      std::string min_lambda = "", max_res = to_string(invariance_report(h).max_abs());
      if (auto* o = std::get_if<Optimal>(&v)) min_lambda = to_string(o->certificates.min());
      if (auto* cv = std::get_if<CertificateViolated>(&v)) min_lambda = to_string(cv->certificates.min());
      return family + "," + std::to_string(c.n) + "," + (c.np ? std::to_string(c.np) : "") + "," +
             status_name(v) + "," + min_lambda + "," + max_res;
    }));
  std::cout << "family,n,n_prime,status,min_lambda,max_residual\n";
  bool all_optimal = true;
  for (auto& j : jobs) {
    std::string line = j.get();
    all_optimal = all_optimal && line.find(",optimal,") != std::string::npos;
    std::cout << line << '\n';
  }
  std::cerr << (all_optimal ? paint("all optimal", "32") : paint("non-optimal rows present", "31")) << '\n';
  return kOk;
}

int cmd_oracle_check(unsigned long long seed, int n_max, bool inject_bug) {
  if (n_max < 2 || n_max > 8) throw std::invalid_argument("--n-max must be in 2..8");
  oracle::Rng rng(seed);
  auto fail = [](const std::string& family, json detail) {
    std::cout << json{{"family", family}, {"counterexample", detail}}.dump() << '\n';
    std::cerr << paint("FAIL", "31") << ' ' << family << '\n';
    return kMismatch;
  };
  auto pass = [](const std::string& family) { std::cerr << paint("PASS", "32") << ' ' << family << '\n'; };
  const Rational bug = inject_bug ? Rational(1, 1000) : Rational(0);

  for (int trial = 0; trial < 10; ++trial)
    for (int n = 2; n <= n_max; ++n) {
      const HMatrix h = oracle::random_hmatrix(rng, n - 1);
      const MatrixQ p = p_table(h);
      for (int k = 1; k <= h.size(); ++k) {
        for (int m = 0; m <= k; ++m)
          if (p(k, m) + bug != oracle::p_enumerate(h, k, m))
            return fail("p-enumeration", {{"h", to_json(h)}, {"k", k}, {"m", m}});
        const MatrixQ q = q_table(h, k);
        for (int m = 1; m <= k; ++m)
          for (int j = 1; j <= k; ++j)
            if ((j <= k - m + 1 ? q(m - 1, j - 1) : Rational(0)) != oracle::q_enumerate(h, k, m, j))
              return fail("q-enumeration", {{"h", to_json(h)}, {"k", k}, {"m", m}, {"j", j}});
      }
    }
  pass("p-enumeration");
  pass("q-enumeration");

  for (int trial = 0; trial < 5; ++trial)
    for (int n = 2; n <= n_max; ++n) {
      const HMatrix h = oracle::random_invariant_hmatrix(rng, n);
      auto dense = oracle::lambda_dense_solve(h);
      if (!dense || !(*dense == certificates(h)))
        return fail("lambda-dense-solve", {{"h", to_json(h)}});
    }
  pass("lambda-dense-solve");

  const int limit = 20;
  if (auto bad = oracle::check_chu_vandermonde(limit)) return fail("chu-vandermonde", *bad);
  pass("chu-vandermonde");
  if (auto bad = oracle::check_hockey_stick(limit)) return fail("hockey-stick", *bad);
  pass("hockey-stick");
  if (auto bad = oracle::check_summations(limit)) return fail("summations", *bad);
  pass("summations");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hinv: exact optimality certificates for fixed-step fixed-point algorithms"};
  app.require_subcommand(1);

  std::string family, out, file, pair, oracle_spec = "worstcase", y0_spec = "worstcase";
  int n = 0, n_prime = 0, extend = 0, steps = -1, n_min = 2, n_max = 12, np_min = 2, np_max = 1000;
  bool vectors = false, inject = false;
  unsigned long long seed = 1;
  int oc_n_max = 6;

  auto* gen = app.add_subcommand("gen", "generate a named optimal H-matrix");
  gen->add_option("family", family, "ohm|dual-ohm|self-dual|second-mixed|strange3")->required();
  gen->add_option("--n", n, "horizon N");
  gen->add_option("--n-prime", n_prime, "split index N'");
  gen->add_option("--extend", extend, "append OHM-tail rows up to this many rows");
  gen->add_option("--out", out, "output file (default stdout)");

  auto* cert = app.add_subcommand("certify", "certify an H-matrix file");
  cert->add_option("file", file)->required();

  auto* dual = app.add_subcommand("dual", "write the H-dual of an H-matrix file");
  dual->add_option("file", file)->required();
  dual->add_option("--out", out);

  auto* fals = app.add_subcommand("falsify", "build a Gram-matrix witness of suboptimality");
  fals->add_option("file", file)->required();
  fals->add_option("--pair", pair, "violated pair i,j (default: smallest negative)");
  fals->add_flag("--emit-vectors", vectors, "add float Cholesky vectors");

  auto* sim = app.add_subcommand("simulate", "run an H-matrix against an operator oracle");
  sim->set_help_flag("--help");
  sim->add_option("--h", file, "H-matrix file")->required();
  sim->add_option("--oracle", oracle_spec, "worstcase|rotation:THETA|matrix:FILE");
  sim->add_option("--y0", y0_spec, "worstcase|FILE");
  sim->add_option("--steps", steps, "iterations to run (default: all rows)");

  auto* sweep = app.add_subcommand("sweep", "certify a family over a range of sizes");
  sweep->add_option("family", family)->required();
  sweep->add_option("--n-min", n_min);
  sweep->add_option("--n-max", n_max);
  sweep->add_option("--n-prime-min", np_min);
  sweep->add_option("--n-prime-max", np_max);

  auto* oc = app.add_subcommand("oracle-check", "run brute-force oracle comparisons");
  oc->add_option("--seed", seed);
  oc->add_option("--n-max", oc_n_max);
  oc->add_flag("--inject-bug", inject, "perturb one comparison (harness self-test)")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*gen) {
      if (family != "strange3" && n < 2) throw std::invalid_argument("--n is required");
      HMatrix h = generate(family, n, n_prime);
      if (extend > 0) h = anytime_extend(h, extend);
      emit(to_json(h).dump(), out);
      return kOk;
    }
    if (*cert) return cmd_certify(file);
    if (*dual) {
      emit(to_json(h_dual(read_hmatrix_file(file))).dump(), out);
      return kOk;
    }
    if (*fals) return cmd_falsify(file, pair, vectors);
    if (*sim) return cmd_simulate(file, oracle_spec, y0_spec, steps);
    if (*sweep) return cmd_sweep(family, n_min, n_max, np_min, np_max);
    if (*oc) return cmd_oracle_check(seed, oc_n_max, inject);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kOk;
}
