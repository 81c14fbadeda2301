// Command-line front end: layout inspection, circuit synthesis, claim
// verification, count sweeps, and state transfers.
//
// Exit codes: 0 success / all claims pass, 1 any claim failed, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "mqs/claims.hpp"
#include "mqs/elementary.hpp"
#include "mqs/generators.hpp"
#include "mqs/subspace.hpp"
#include "mqs/transfer.hpp"

namespace {

using namespace mqs;

void write_out(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  f << text;
}

BasisOrdering parse_ordering(const std::string& s) {
  if (s == "binary") return BasisOrdering::Binary;
  if (s == "weightlex") return BasisOrdering::WeightLex;
  throw CLI::ValidationError("--ordering", "must be binary or weightlex");
}

Index parse_k(const std::string& s) {
  if (s == "auto") return -1;
  return std::stoll(s);
}

std::vector<int> parse_indices(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

void print_support(const std::vector<double>& mass, const char* tag) {
  std::cout << tag << " {";
  bool first = true;
  for (std::size_t m = 0; m < mass.size(); ++m) {
    if (mass[m] < 1e-12) continue;
    if (!first) std::cout << ", ";
    std::cout << m << ": " << mass[m];
    first = false;
  }
  std::cout << "}\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"subspace-selective multiple-quantum circuit synthesis and "
               "verification"};
  app.require_subcommand(1);

  std::string ordering = "weightlex";
  std::string out_path;
  std::string k_str = "auto";
  double tol_scale = 1.0;
  std::uint64_t seed = 12345;

  // layout <n>
  int lay_n = 0;
  auto* lay_cmd = app.add_subcommand("layout", "print subspace dimensions and offsets");
  lay_cmd->add_option("n", lay_n, "qubit count")->required();

  // synth {zz|gm|bk|upm}
  auto* synth_cmd = app.add_subcommand("synth", "write a circuit as JSON");
  synth_cmd->require_subcommand(1);
  synth_cmd->add_option("--out", out_path, "output file (default stdout)");

  int s_n = 0;
  double s_theta = kPi;
  int s_L = 8;
  auto* zz_cmd = synth_cmd->add_subcommand("zz", "multibody coupling propagator");
  std::string zz_indices;
  zz_cmd->add_option("--indices", zz_indices, "comma separated, e.g. 1,2,3")->required();
  zz_cmd->add_option("--n", s_n, "register size")->required();
  zz_cmd->add_option("--theta", s_theta, "angle");

  auto* gm_cmd = synth_cmd->add_subcommand("gm", "subspace projector rotation");
  int gm_m = 0;
  bool gm_naive = false;
  gm_cmd->add_option("--n", s_n)->required();
  gm_cmd->add_option("--m", gm_m, "subspace index")->required();
  gm_cmd->add_option("--theta", s_theta);
  gm_cmd->add_option("--ordering", ordering, "binary|weightlex");
  gm_cmd->add_flag("--naive", gm_naive, "one selective rotation per basis state");

  auto* bk_cmd = synth_cmd->add_subcommand("bk", "anti-diagonal propagator");
  std::string bk_route = "auto";
  bk_cmd->add_option("--n", s_n)->required();
  bk_cmd->add_option("--k", k_str, "anti-diagonal index")->required();
  bk_cmd->add_option("--theta", s_theta);
  bk_cmd->add_option("--L", s_L, "product-formula depth");
  bk_cmd->add_option("--route", bk_route, "auto|expansion|conjugation");

  auto* upm_cmd = synth_cmd->add_subcommand("upm", "subspace-selective transfer unitary");
  int upm_m = 0, upm_target = -1;
  std::string upm_gm = "naive";
  upm_cmd->add_option("--n", s_n)->required();
  upm_cmd->add_option("--m", upm_m, "source subspace")->required();
  upm_cmd->add_option("--target", upm_target, "target subspace (default largest)");
  upm_cmd->add_option("--theta", s_theta);
  upm_cmd->add_option("--L", s_L, "product-formula depth");
  upm_cmd->add_option("--k", k_str, "auto or explicit index");
  upm_cmd->add_option("--gm", upm_gm, "naive|block realization of the projector rotation");

  // verify --suite config.json
  auto* verify_cmd = app.add_subcommand("verify", "run the claims suite");
  std::string suite_path;
  verify_cmd->add_option("--suite", suite_path, "JSON config")->required();
  verify_cmd->add_option("--out", out_path, "report path (default stdout)");
  verify_cmd->add_option("--tol", tol_scale, "scale every default tolerance");
  verify_cmd->add_option("--seed", seed, "override the config seed");

  // sweep --counts
  auto* sweep_cmd = app.add_subcommand("sweep", "count-only claims at large n");
  bool sweep_counts = false;
  int sweep_n_max = 20;
  sweep_cmd->add_flag("--counts", sweep_counts, "run the count claims");
  sweep_cmd->add_option("--n-max", sweep_n_max, "largest register");
  sweep_cmd->add_option("--out", out_path, "report path (default stdout)");
  sweep_cmd->add_option("--seed", seed);

  // transfer
  auto* transfer_cmd = app.add_subcommand("transfer", "move a random subspace state");
  int t_n = 0, t_m = 0, t_L = 8;
  double t_theta = kPi;
  bool t_exact = false;
  transfer_cmd->add_option("--n", t_n)->required();
  transfer_cmd->add_option("--m", t_m)->required();
  transfer_cmd->add_option("--theta", t_theta);
  transfer_cmd->add_option("--L", t_L);
  transfer_cmd->add_option("--seed", seed);
  transfer_cmd->add_option("--k", k_str, "auto or explicit index");
  transfer_cmd->add_flag("--exact", t_exact, "apply the dense operator instead of the circuit");
  transfer_cmd->add_option("--ordering", ordering);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*lay_cmd) {
      const SubspaceLayout lay = build_layout(lay_n);
      std::cout << "n = " << lay.n << "\n";
      std::cout << "m\td(m)\tl_m\tL_m\n";
      for (int m = 0; m <= lay.n; ++m) {
        std::cout << m << '\t' << lay.d[m] << '\t' << lay.l[m] << '\t'
                  << lay.L[m] << '\n';
      }
      return 0;
    }

    if (*synth_cmd) {
      Circuit c;
      if (*zz_cmd) {
        c = synth_multibody_zz(parse_indices(zz_indices), s_theta, s_n);
      } else if (*gm_cmd) {
        const SubspaceLayout lay = build_layout(s_n);
        const GmSpec spec{lay, gm_m};
        if (gm_naive) {
          c = naive_Gm(spec, s_theta, parse_ordering(ordering));
        } else if (parse_ordering(ordering) == BasisOrdering::WeightLex) {
          c = synth_block_diagonal({s_n, lay.l[gm_m], lay.L[gm_m]}, s_theta);
        } else {
          c = naive_Gm(spec, s_theta, BasisOrdering::Binary);
        }
      } else if (*bk_cmd) {
        BkRoute route = BkRoute::Auto;
        if (bk_route == "expansion") route = BkRoute::Expansion;
        else if (bk_route == "conjugation") route = BkRoute::Conjugation;
        else if (bk_route != "auto") throw CLI::ValidationError("--route", "bad value");
        if (k_str == "auto") {
          throw CLI::ValidationError("--k", "needs an explicit index here");
        }
        c = synth_Bk(parse_k(k_str), s_theta, s_L, s_n, route);
      } else {
        TransferSpec spec;
        spec.layout = build_layout(s_n);
        spec.m = upm_m;
        spec.target = upm_target;
        spec.theta = s_theta;
        spec.trotter_L = s_L;
        spec.k = parse_k(k_str);
        c = synth_Upm(spec, upm_gm == "block" ? GmRoute::Block : GmRoute::Naive);
      }
      const GateCountReport r = count(c);
      write_out(out_path, serialize(c));
      std::cerr << "gates: " << r.total() << " (single " << r.single_spin
                << ", zz " << r.coupling << ", sel " << r.selective
                << "), basic ops: " << c.basic_ops << "\n";
      return 0;
    }

    if (*verify_cmd) {
      std::ifstream f(suite_path);
      if (!f) throw std::runtime_error("cannot open " + suite_path);
      std::stringstream buf;
      buf << f.rdbuf();
      SweepConfig cfg = config_from_json(buf.str());
      if (verify_cmd->count("--seed")) cfg.seed = seed;
      if (verify_cmd->count("--tol")) cfg.tolerance_scale = tol_scale;
      const auto results = run_claims_suite(cfg);
      write_out(out_path, report_to_jsonl(results));
      long fails = 0;
      for (const auto& r : results) {
        if (r.status == "fail") ++fails;
      }
      std::cerr << results.size() << " claim points, " << fails << " failed\n";
      return fails == 0 ? 0 : 1;
    }

    if (*sweep_cmd) {
      SweepConfig cfg;
      cfg.counts_only = true;
      cfg.count_n_max = sweep_n_max;
      cfg.seed = seed;
      if (!sweep_counts) {
        std::cerr << "nothing to do: pass --counts\n";
        return 2;
      }
      const auto results = run_claims_suite(cfg);
      write_out(out_path, report_to_jsonl(results));
      return all_passed(results) ? 0 : 1;
    }

    if (*transfer_cmd) {
      TransferSpec spec;
      spec.layout = build_layout(t_n);
      spec.m = t_m;
      spec.theta = t_theta;
      spec.trotter_L = t_L;
      spec.k = parse_k(k_str);
      const Vector v = random_subspace_state(spec.layout, t_m, seed);
      const auto before =
          subspace_support(v, spec.layout, parse_ordering(ordering));
      const Vector w = transfer_state(v, spec, t_exact);
      const auto after =
          subspace_support(w, spec.layout, parse_ordering(ordering));
      print_support(before, "before:");
      print_support(after, "after: ");
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
