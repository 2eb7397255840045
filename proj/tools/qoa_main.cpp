// Copyright 2026 The qoa authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qoa/bell.hpp"
#include "qoa/block_unitary.hpp"
#include "qoa/cartan.hpp"
#include "qoa/entropy.hpp"
#include "qoa/fermion.hpp"
#include "qoa/json_io.hpp"
#include "qoa/subalgebra.hpp"
#include "qoa/suite.hpp"
#include "qoa/weyl.hpp"

namespace {

using nlohmann::json;

struct GlobalOpts {
  double eps = qoa::kDefaultEps;
  std::uint64_t seed = 1;
  int samples = 16;
  bool as_json = false;
  std::string out;
};

void render_text(std::ostream& os, const json& j, int indent = 0) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || (value.is_array() && !value.empty() &&
                                (value[0].is_object() || value[0].is_array()))) {
        os << pad << key << ":\n";
        render_text(os, value, indent + 2);
      } else {
        os << pad << key << ": " << value.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& value : j) render_text(os, value, indent);
  } else {
    os << pad << j.dump() << "\n";
  }
}

int emit(const GlobalOpts& g, const json& report, bool pass) {
  std::ostringstream buf;
  if (g.as_json) {
    buf << report.dump(2) << "\n";
  } else {
    render_text(buf, report);
  }
  if (g.out.empty()) {
    std::cout << buf.str();
  } else {
    std::ofstream f(g.out);
    if (!f) {
      std::cerr << "cannot write " << g.out << "\n";
      return 2;
    }
    f << buf.str();
  }
  return pass ? 0 : 1;
}

std::vector<int> parse_mode_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoi(item));
  }
  return out;
}

json word_to_json(const qoa::PauliWord& w) {
  return json{{"i", w.i}, {"j", w.j}, {"sign", w.sign}};
}

json report_from_complementarity(const qoa::ComplementarityReport& r) {
  json j;
  if (r.cond_i.has_value()) {
    j["cond_i"] = *r.cond_i;
    j["cond_i_defect"] = r.cond_i_defect;
  }
  j["cond_ii"] = r.cond_ii;
  j["cond_ii_defect"] = r.cond_ii_defect;
  j["cond_iii"] = r.cond_iii;
  j["cond_iii_defect"] = r.cond_iii_defect;
  j["cond_iv"] = r.cond_iv;
  j["cond_iv_defect"] = r.cond_iv_defect;
  j["eps"] = r.eps;
  j["all_agree"] = r.all_agree();
  return j;
}

int run_mub(const GlobalOpts& g, int dim, bool dim4_pauli) {
  std::vector<qoa::Basis> bases =
      dim4_pauli ? qoa::pauli_partition_dim4() : qoa::mub_prime(dim);
  json jb = json::array();
  for (const qoa::Basis& b : bases) jb.push_back(qoa::basis_to_json(b));
  const int k = static_cast<int>(bases.size());
  json dev = json::array();
  double worst = 0.0;
  for (int a = 0; a < k; ++a) {
    json row = json::array();
    for (int b = 0; b < k; ++b) {
      const double d =
          a == b ? 0.0 : qoa::unbiasedness_deviation(bases[a], bases[b]);
      worst = std::max(worst, d);
      row.push_back(d);
    }
    dev.push_back(std::move(row));
  }
  json report{{"count", k},
              {"bases", std::move(jb)},
              {"pairwise_deviation", std::move(dev)},
              {"max_deviation", worst}};
  return emit(g, report, worst <= g.eps);
}

int run_check(const GlobalOpts& g, const std::string& f1, const std::string& f2) {
  qoa::OperatorAlgebra a1 = qoa::algebra_from_json_file(f1);
  qoa::OperatorAlgebra a2 = qoa::algebra_from_json_file(f2);
  qoa::ComplementarityReport r =
      qoa::complementarity_report(a1, a2, g.samples, g.seed, g.eps);
  json report = report_from_complementarity(r);
  report["dim_alg1"] = a1.dimension();
  report["dim_alg2"] = a2.dimension();
  return emit(g, report, r.cond_ii);
}

int run_useful(const GlobalOpts& g, const std::string& file, int n, int m) {
  qoa::Mat w = qoa::mat_from_json(qoa::load_json_file(file));
  const double defect = qoa::usefulness_defect(w, n, m);
  const bool useful = defect <= g.eps;
  json report{{"n", n},
              {"m", m},
              {"defect", defect},
              {"useful", useful},
              {"adjoint_closure", qoa::adjoint_closure_check(w, n, m, g.eps)}};
  return emit(g, report, useful);
}

int run_family(const GlobalOpts& g, int dim, int count,
               const std::string& strategy, std::int64_t budget) {
  qoa::FamilySearchResult r =
      qoa::family_search(dim, count, qoa::family_strategy_from_string(strategy),
                         g.seed, budget, g.eps);
  json report{{"success", r.success},
              {"trials", r.trials},
              {"count", count},
              {"dim", dim}};
  if (r.success) {
    json members = json::array();
    for (const qoa::Mat& m : r.family.members) {
      members.push_back(qoa::mat_to_json(m));
    }
    report["members"] = std::move(members);
    report["max_pair_defect"] = r.family.max_pair_defect;
  }
  return emit(g, report, r.success);
}

int run_cartan(const GlobalOpts& g, double alpha, double beta, double gamma) {
  const qoa::CartanParams p{alpha, beta, gamma};
  const qoa::CartanCoeffs c = qoa::cartan_coeffs(p);
  const qoa::CartanClass cls = qoa::classify(p);
  const double defect = qoa::usefulness_defect(qoa::cartan_n(p), 2, 2);
  auto coeff = [](qoa::Complex z) {
    return json{{"re", z.real()}, {"im", z.imag()}, {"abs2", std::norm(z)}};
  };
  static const char* names[] = {"N1", "N2", "N3", "none"};
  json triplet = json::array();
  for (const qoa::PauliImage& im : qoa::pauli_triplet(qoa::cartan_n(p))) {
    json entry{{"image", qoa::mat_to_json(im.image)}};
    if (im.word.has_value()) entry["word"] = word_to_json(*im.word);
    triplet.push_back(std::move(entry));
  }
  json report{{"coefficients",
               json{{"c0", coeff(c.c0)},
                    {"c1", coeff(c.c1)},
                    {"c2", coeff(c.c2)},
                    {"c3", coeff(c.c3)}}},
              {"class", names[static_cast<int>(cls)]},
              {"defect", defect},
              {"triplet", std::move(triplet)}};
  return emit(g, report, true);
}

int run_cartan_scan(const GlobalOpts& g, int grid) {
  int points = 0;
  int disagreements = 0;
  int in_class = 0;
  auto probe = [&](const qoa::CartanParams& p) {
    ++points;
    const bool cls = qoa::classify(p) != qoa::CartanClass::kNone;
    const qoa::CartanCoeffs c = qoa::cartan_coeffs(p);
    double dev = 0.0;
    for (qoa::Complex ci : {c.c0, c.c1, c.c2, c.c3}) {
      dev = std::max(dev, std::abs(std::norm(ci) - 0.25));
    }
    const bool flat = dev <= 1e-9;
    const bool useful = qoa::usefulness_defect(qoa::cartan_n(p), 2, 2) <= 1e-8;
    if (cls != flat || cls != useful) ++disagreements;
    if (cls) ++in_class;
  };
  const double step = std::numbers::pi / grid;
  for (int a = 0; a < grid; ++a) {
    for (int b = 0; b < grid; ++b) {
      for (int c = 0; c < grid; ++c) probe({a * step, b * step, c * step});
    }
  }
  std::mt19937_64 rng(qoa::derive_seed(g.seed, "cartan-scan"));
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (int t = 0; t < g.samples; ++t) {
    probe({angle(rng), angle(rng), angle(rng)});
  }
  json report{{"points", points},
              {"in_class", in_class},
              {"disagreements", disagreements}};
  return emit(g, report, disagreements == 0);
}

int run_uncertainty(const GlobalOpts& g, int dim, const std::string& pair) {
  qoa::ObservableSpec a, b;
  if (pair == "mub") {
    std::vector<qoa::Basis> bases =
        dim == 4 ? qoa::pauli_partition_dim4() : qoa::mub_prime(dim);
    a = qoa::observable_from_basis(bases[0]);
    b = qoa::observable_from_basis(bases[1]);
  } else if (pair == "random") {
    qoa::Basis b1{dim, qoa::haar_unitary(dim, qoa::derive_seed(g.seed, "uncertainty-a"))};
    qoa::Basis b2{dim, qoa::haar_unitary(dim, qoa::derive_seed(g.seed, "uncertainty-b"))};
    a = qoa::observable_from_basis(b1);
    b = qoa::observable_from_basis(b2);
  } else {
    throw CLI::ValidationError("--pair must be mub or random");
  }
  const double c = qoa::mu_constant(a, b);
  std::vector<double> slacks;
  double min_slack = 1e300;
  for (int t = 0; t < g.samples; ++t) {
    qoa::State pure = qoa::pure_state(
        qoa::haar_vector(dim, qoa::derive_seed(g.seed, "uncertainty-pure", t)));
    qoa::State mixed = qoa::random_mixed_state(
        dim, qoa::derive_seed(g.seed, "uncertainty-mixed", t));
    for (const qoa::State& s : {pure, mixed}) {
      const double sl = qoa::mu_slack(a, b, s);
      slacks.push_back(sl);
      min_slack = std::min(min_slack, sl);
    }
  }
  const double hi = *std::max_element(slacks.begin(), slacks.end());
  const int bins = 20;
  std::vector<int> hist(bins, 0);
  for (double s : slacks) {
    int bin = hi > 0 ? static_cast<int>(s / hi * bins) : 0;
    hist[std::clamp(bin, 0, bins - 1)]++;
  }
  json witnesses = json::array();
  for (std::size_t i = 0; i < a.projections.size(); ++i) {
    Eigen::SelfAdjointEigenSolver<qoa::Mat> es(a.projections[i]);
    qoa::Vec v = es.eigenvectors().col(dim - 1);
    witnesses.push_back(
        json{{"projection", static_cast<int>(i)},
             {"slack", qoa::mu_slack(a, b, qoa::pure_state(v))}});
  }
  json report{{"dim", dim},
              {"pair", pair},
              {"overlap_constant", c},
              {"bound", -2.0 * std::log(c)},
              {"min_slack", min_slack},
              {"histogram", json{{"max", hi}, {"bins", hist}}},
              {"attainment_witnesses", std::move(witnesses)}};
  return emit(g, report, min_slack >= -1e-9);
}

int run_car(const GlobalOpts& g, int modes, const std::string& partition) {
  const auto semi = partition.find(';');
  if (semi == std::string::npos) {
    throw CLI::ValidationError("--partition must look like \"1;2,3\"");
  }
  std::vector<int> j1 = parse_mode_list(partition.substr(0, semi));
  std::vector<int> j2 = parse_mode_list(partition.substr(semi + 1));
  qoa::FermionSystem sys = qoa::jordan_wigner(modes);
  const double car = qoa::car_residual(sys);
  const double defect = qoa::car_partition_check(sys, j1, j2);
  json report{{"modes", modes},
              {"partition", json{{"j1", j1}, {"j2", j2}}},
              {"car_residual", car},
              {"partition_defect", defect}};
  return emit(g, report, car <= g.eps && defect <= g.eps);
}

int run_bell(const GlobalOpts& g, const std::string& phases) {
  std::stringstream ss(phases);
  std::string item;
  std::vector<double> t;
  while (std::getline(ss, item, ',')) t.push_back(std::stod(item));
  if (t.size() != 4) {
    throw CLI::ValidationError("--phases needs 4 comma-separated values");
  }
  qoa::Mat m = qoa::bell_unitary(t[0], t[1], t[2], t[3]);
  qoa::BellDefects d = qoa::bell_complementarity_defect(m, g.eps);
  json report{{"phases", t},
              {"unitary", qoa::mat_to_json(m)},
              {"defect_vs_bell", d.vs_bell},
              {"defect_vs_right_factor", d.vs_right},
              {"defect_vs_left_factor", d.vs_left}};
  return emit(g, report, d.vs_bell <= g.eps);
}

int run_suite_cmd(const GlobalOpts& g) {
  qoa::RunConfig cfg;
  cfg.eps = g.eps;
  cfg.seed = g.seed;
  cfg.samples = g.samples;
  qoa::SuiteReport report = qoa::run_suite(cfg);
  return emit(g, report.to_json(), report.all_pass());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"complementary subalgebra toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--eps", g.eps, "numerical tolerance");
  app.add_option("--seed", g.seed, "master random seed");
  app.add_option("--samples", g.samples, "sample count for randomized checks");
  app.add_flag("--json", g.as_json, "emit JSON instead of text");
  app.add_option("--out", g.out, "write the report to a file");

  auto* mub = app.add_subcommand("mub", "mutually unbiased bases");
  int mub_dim = 2;
  bool dim4_pauli = false;
  mub->add_option("--dim", mub_dim, "prime dimension");
  mub->add_flag("--dim4-pauli", dim4_pauli, "dimension-4 Pauli construction");

  auto* check = app.add_subcommand("check", "complementarity of two algebras");
  std::string alg1, alg2;
  check->add_option("--alg1", alg1, "generator file")->required();
  check->add_option("--alg2", alg2, "generator file")->required();

  auto* useful = app.add_subcommand("useful", "block-unitary usefulness");
  std::string unitary_file;
  int un = 2, um = 2;
  useful->add_option("--unitary", unitary_file, "matrix file")->required();
  useful->add_option("--n", un, "outer block grid size");
  useful->add_option("--m", um, "block dimension");

  auto* family = app.add_subcommand("family", "pairwise complementary families");
  int fam_dim = 2, fam_count = 3;
  std::string strategy = "pauli-triplet";
  std::int64_t budget = 100000;
  family->add_option("--dim", fam_dim, "local dimension n (ambient n^2)");
  family->add_option("--count", fam_count, "family size")->required();
  family->add_option("--strategy", strategy, "pauli-triplet | cartan-random");
  family->add_option("--budget", budget, "candidate trial budget");

  auto* cartan = app.add_subcommand("cartan", "two-qubit canonical interaction");
  double alpha = 0.0, beta = 0.0, gamma = 0.0;
  cartan->add_option("--alpha", alpha)->required();
  cartan->add_option("--beta", beta)->required();
  cartan->add_option("--gamma", gamma)->required();

  auto* scan = app.add_subcommand("cartan-scan", "class/coefficient/defect scan");
  int grid = 10;
  scan->add_option("--grid", grid, "grid points per axis");

  auto* unc = app.add_subcommand("uncertainty", "entropic uncertainty slack");
  int unc_dim = 2;
  std::string pair = "mub";
  unc->add_option("--dim", unc_dim, "dimension");
  unc->add_option("--pair", pair, "mub | random");

  auto* car = app.add_subcommand("car", "fermionic mode subalgebras");
  int car_modes = 2;
  std::string partition = "1;2";
  car->add_option("--modes", car_modes, "number of modes");
  car->add_option("--partition", partition, "mode split, e.g. \"1;2,3\"");

  auto* bell = app.add_subcommand("bell", "Bell-diagonal unitaries");
  std::string phases = "0,0,0,0";
  bell->add_option("--phases", phases, "four phases t1,t2,t3,t4");

  app.add_subcommand("suite", "bundled verification suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "mub") {
      if (dim4_pauli) return run_mub(g, 4, true);
      if (mub_dim == 4) {
        std::cerr << "mub: 4 is not prime; use --dim4-pauli for the "
                     "dimension-4 construction\n";
        return 2;
      }
      return run_mub(g, mub_dim, false);
    }
    if (name == "check") return run_check(g, alg1, alg2);
    if (name == "useful") return run_useful(g, unitary_file, un, um);
    if (name == "family") return run_family(g, fam_dim, fam_count, strategy, budget);
    if (name == "cartan") return run_cartan(g, alpha, beta, gamma);
    if (name == "cartan-scan") return run_cartan_scan(g, grid);
    if (name == "uncertainty") return run_uncertainty(g, unc_dim, pair);
    if (name == "car") return run_car(g, car_modes, partition);
    if (name == "bell") return run_bell(g, phases);
    if (name == "suite") return run_suite_cmd(g);
    std::cerr << app.help();
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
