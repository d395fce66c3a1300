// Command-line surface: probabilities, coefficient tables, verification runs,
// and decay tables for the supported basis pairs.
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "posprob/geometry.hpp"
#include "posprob/probability.hpp"
#include "posprob/transition.hpp"

namespace {

using namespace posprob;

enum ExitCode { kOk = 0, kCheckFailed = 1, kUsage = 2, kBudget = 3, kInvariant = 4 };

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

// Effective cap: explicit flag wins, then the environment, then the default.
int effective_cap(int max_n_flag, BasisPair pair) {
  if (max_n_flag > 0) return max_n_flag;
  return default_budget(pair);
}

bool over_budget(int n, int cap, BasisPair pair) {
  if (n <= cap) return false;
  std::cerr << "degree " << n << " exceeds the enumeration budget for "
            << pair_token(pair) << " (cap " << cap
            << "); raise it with --max-n or POSPROB_MAX_N\n";
  return true;
}

int cmd_prob(BasisPair pair, int n, const std::string& format, int cap) {
  if (over_budget(n, cap, pair)) return kBudget;
  const TransitionMatrix T = build(pair, n);
  const ProbabilityResult r = probability(T);
  if (format == "json") {
    std::cout << to_json(r) << "\n";
  } else if (format == "csv") {
    std::cout << "probability," << fraction_string(r.value) << ","
              << decimal_string(r.value) << "\n";
    std::cout << "label,factor\n";
    for (int j = 0; j < T.dim(); ++j)
      std::cout << quoted(T.row_label_string(j)) << "," << r.factors[j] << "\n";
  } else {
    std::cout << "P(" << pair_token(pair) << ", n=" << n
              << ") = " << fraction_string(r.value) << " = "
              << decimal_string(r.value) << "\n";
    std::cout << "factors:\n";
    for (int j = 0; j < T.dim(); ++j)
      std::cout << "  " << T.row_label_string(j) << ": " << r.factors[j] << "\n";
  }
  return kOk;
}

int cmd_coeff(BasisPair pair, int n, const std::string& format, int cap) {
  if (over_budget(n, cap, pair)) return kBudget;
  const TransitionMatrix T = build(pair, n);
  if (format == "json") {
    std::cout << to_json(T) << "\n";
    return kOk;
  }
  if (format == "csv") {
    std::cout << "label";
    for (int i = 0; i < T.dim(); ++i)
      std::cout << "," << quoted(T.col_label_string(i));
    std::cout << "\n";
    for (int j = 0; j < T.dim(); ++j) {
      std::cout << quoted(T.row_label_string(j));
      for (int i = 0; i < T.dim(); ++i) std::cout << "," << T.coeff[j][i];
      std::cout << "\n";
    }
    return kOk;
  }
  std::cout << "# " << pair_token(pair) << ", n=" << n << ", "
            << T.ordering_note() << "\n";
  size_t label_w = 0, cell_w = 1;
  for (int j = 0; j < T.dim(); ++j) {
    label_w = std::max(label_w, T.row_label_string(j).size());
    cell_w = std::max(cell_w, T.col_label_string(j).size());
    for (int i = 0; i < T.dim(); ++i)
      cell_w = std::max(cell_w, T.coeff[j][i].str().size());
  }
  std::cout << std::string(label_w, ' ');
  for (int i = 0; i < T.dim(); ++i) {
    const std::string h = T.col_label_string(i);
    std::cout << " " << std::string(cell_w - h.size(), ' ') << h;
  }
  std::cout << "\n";
  for (int j = 0; j < T.dim(); ++j) {
    const std::string h = T.row_label_string(j);
    std::cout << h << std::string(label_w - h.size(), ' ');
    for (int i = 0; i < T.dim(); ++i) {
      const std::string c = T.coeff[j][i].str();
      std::cout << " " << std::string(cell_w - c.size(), ' ') << c;
    }
    std::cout << "\n";
  }
  return kOk;
}

int cmd_verify(BasisPair pair, int n, std::uint64_t samples, std::uint64_t seed,
               int workers, const std::string& format, int cap) {
  if (over_budget(n, cap, pair)) return kBudget;
  const TransitionMatrix T = build(pair, n);
  const ProbabilityResult r = probability(T);
  const Rational det = volume_ratio_by_determinant(T);
  const MonteCarloReport mc = monte_carlo(T, samples, seed, workers);

  const bool det_ok = (det == r.value);
  const double exact_d = std::stod(decimal_string(r.value, 17));
  const double diff = std::fabs(mc.estimate - exact_d);
  const bool mc_ok = diff <= 3.0 * mc.standard_error;
  const bool ok = det_ok && mc_ok;

  if (format == "json") {
    nlohmann::json j;
    j["pair"] = pair_token(pair);
    j["n"] = n;
    j["exact"] = fraction_string(r.value);
    j["determinant"] = fraction_string(det);
    j["monte_carlo"] = nlohmann::json::parse(to_json(mc));
    j["ok"] = ok;
    std::cout << j.dump() << "\n";
  } else if (format == "csv") {
    std::cout << "check,value\n";
    std::cout << "exact," << fraction_string(r.value) << "\n";
    std::cout << "determinant," << fraction_string(det) << "\n";
    std::cout << "mc_estimate," << mc.estimate << "\n";
    std::cout << "mc_stderr," << mc.standard_error << "\n";
    std::cout << "ok," << (ok ? "true" : "false") << "\n";
  } else {
    std::cout << "pair " << pair_token(pair) << ", n=" << n << "\n";
    std::cout << "ordering: " << T.ordering_note() << "\n";
    std::cout << "exact (product):   " << fraction_string(r.value) << " = "
              << decimal_string(r.value) << "\n";
    std::cout << "determinant ratio: " << fraction_string(det)
              << (det_ok ? "  [matches]" : "  [MISMATCH]") << "\n";
    std::cout << "monte carlo:       " << mc.estimate << " (" << mc.hits << "/"
              << mc.samples << " hits, seed " << mc.seed << ", workers "
              << mc.workers << ", stderr " << mc.standard_error << ")"
              << (mc_ok ? "  [within 3 sigma]" : "  [OUTSIDE 3 sigma]") << "\n";
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_decay(BasisPair pair, int n_max, const std::string& format, int cap) {
  const DecayTable table = decay_table(pair, n_max, cap);
  if (format == "json") {
    nlohmann::json j;
    j["pair"] = pair_token(pair);
    auto rows = nlohmann::json::array();
    for (const auto& row : table.rows)
      rows.push_back(nlohmann::json::parse(to_json(row.result)));
    j["rows"] = rows;
    j["truncated_at"] =
        table.truncated_at ? nlohmann::json(*table.truncated_at) : nlohmann::json();
    std::cout << j.dump() << "\n";
  } else if (format == "csv") {
    std::cout << "n,probability,decimal\n";
    for (const auto& row : table.rows)
      std::cout << row.n << "," << fraction_string(row.result.value) << ","
                << decimal_string(row.result.value) << "\n";
  } else {
    std::cout << "decay of P(" << pair_token(pair) << ") by degree:\n";
    for (const auto& row : table.rows)
      std::cout << "  n=" << row.n << "  " << fraction_string(row.result.value)
                << " = " << decimal_string(row.result.value) << "\n";
  }
  if (table.truncated_at) {
    std::cerr << "rows from n=" << *table.truncated_at
              << " exceed the enumeration budget (cap " << cap
              << "); raise it with --max-n or POSPROB_MAX_N\n";
    return kBudget;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"positivity probabilities for ordered basis changes"};
  app.require_subcommand(1);

  std::string pair_arg, format = "plain";
  int n = 0, n_max = 0, workers = 1, max_n = 0;
  std::uint64_t samples = 100000, seed = 12345;

  const auto add_common = [&](CLI::App* cmd, bool wants_n) {
    cmd->add_option("--pair", pair_arg, "basis pair: s/m h/s e/s e/m qs/M qs/F F/M")
        ->required();
    if (wants_n) cmd->add_option("--n", n, "degree")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
    cmd->add_option("--max-n", max_n, "enumeration budget override")
        ->envname("POSPROB_MAX_N")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* prob = app.add_subcommand("prob", "exact positivity probability");
  add_common(prob, true);

  CLI::App* coeff = app.add_subcommand("coeff", "labeled transition matrix");
  add_common(coeff, true);

  CLI::App* verify =
      app.add_subcommand("verify", "product vs determinant vs Monte Carlo");
  add_common(verify, true);
  verify->add_option("--samples", samples, "Monte Carlo samples")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_option("--workers", workers, "sampling threads")
      ->check(CLI::PositiveNumber);

  CLI::App* decay = app.add_subcommand("decay", "probability by degree");
  add_common(decay, false);
  decay->add_option("--n-max", n_max, "largest degree")
      ->required()
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const auto pair = parse_pair(pair_arg);
  if (!pair) {
    std::cerr << "unknown pair '" << pair_arg
              << "'; expected one of s/m h/s e/s e/m qs/M qs/F F/M\n";
    return kUsage;
  }
  const int cap = effective_cap(max_n, *pair);

  try {
    if (prob->parsed()) return cmd_prob(*pair, n, format, cap);
    if (coeff->parsed()) return cmd_coeff(*pair, n, format, cap);
    if (verify->parsed())
      return cmd_verify(*pair, n, samples, seed, workers, format, cap);
    if (decay->parsed()) return cmd_decay(*pair, n_max, format, cap);
  } catch (const TriangularityError& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return kInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
