// Batch command-line surface: verification suites, weight tables, Delta series
// and bracket tables, emitted as JSON or TSV reports.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "winfty/verify.hpp"

using nlohmann::ordered_json;
using namespace winfty;

namespace {

struct RunConfig {
  int N = 1;
  std::vector<Rational> lambda_alpha, lambda_beta;
  unsigned max_k = 8;
  int series_order = 10;
  long trunc_degree = 4;
  unsigned long seed = 20240801;
  std::string format;
  std::string out_file;
};

std::vector<Rational> parse_rational_list(const std::string& s) {
  std::vector<Rational> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  return out;
}

Weight make_weight(const RunConfig& cfg) {
  std::vector<Rational> a = cfg.lambda_alpha, b = cfg.lambda_beta;
  if (a.empty()) a.assign(static_cast<size_t>(cfg.N), Rational(0));
  if (b.empty()) b.assign(static_cast<size_t>(cfg.N), Rational(0));
  if (a.size() != static_cast<size_t>(cfg.N) || b.size() != static_cast<size_t>(cfg.N))
    throw std::invalid_argument("lambda lists must have length N");
  return Weight(std::move(a), std::move(b));
}

ordered_json config_json(const RunConfig& cfg) {
  ordered_json j;
  j["N"] = cfg.N;
  ordered_json la = ordered_json::array(), lb = ordered_json::array();
  for (const auto& x : cfg.lambda_alpha) la.push_back(x.str());
  for (const auto& x : cfg.lambda_beta) lb.push_back(x.str());
  j["lambda_alpha"] = la;
  j["lambda_beta"] = lb;
  j["max_k"] = cfg.max_k;
  j["order"] = cfg.series_order;
  j["trunc_degree"] = cfg.trunc_degree;
  j["seed"] = cfg.seed;
  return j;
}

struct ReportRow {
  std::string id;
  bool pass = true;
  ordered_json detail;
};

int emit(const RunConfig& cfg, std::vector<ReportRow> rows) {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ReportRow& a, const ReportRow& b) { return a.id < b.id; });
  bool all_pass = true;
  std::string payload;
  if (cfg.format == "tsv") {
    std::ostringstream os;
    os << "id\tstatus\tdetail\n";
    for (const auto& r : rows) {
      all_pass = all_pass && r.pass;
      os << r.id << "\t" << (r.pass ? "pass" : "fail") << "\t" << r.detail.dump() << "\n";
    }
    payload = os.str();
  } else {
    ordered_json j;
    j["config"] = config_json(cfg);
    ordered_json results = ordered_json::array();
    for (const auto& r : rows) {
      all_pass = all_pass && r.pass;
      ordered_json row;
      row["id"] = r.id;
      row["status"] = r.pass ? "pass" : "fail";
      row["detail"] = r.detail;
      results.push_back(row);
    }
    j["results"] = results;
    payload = j.dump(2) + "\n";
  }
  if (cfg.out_file.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(cfg.out_file, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file " + cfg.out_file);
    f << payload;
  }
  return all_pass ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg) {
  make_weight(cfg);  // validates lambda lengths
  verify::Scales s;
  s.N = cfg.N;
  s.seed = cfg.seed;
  s.trunc_degree = cfg.trunc_degree;
  s.series_order = cfg.series_order;
  s.max_k = cfg.max_k;
  std::vector<ReportRow> rows;
  for (const auto& r : verify::run_all(s)) rows.push_back(ReportRow{r.id, r.pass, ordered_json(r.detail)});
  return emit(cfg, std::move(rows));
}

int cmd_weights(const RunConfig& cfg) {
  const Weight lambda = make_weight(cfg);
  const LatticeConfig lat(cfg.N);
  const State vl = State::highest_weight(lat, lambda);
  std::vector<ReportRow> rows;

  {
    ReportRow row{"defl", true, {}};
    ordered_json s = ordered_json::array(), t = ordered_json::array();
    for (int i = 1; i <= cfg.N; ++i) {
      s.push_back((-lambda.pair_gamma(i)).str());
      t.push_back(lambda.alpha_pair[static_cast<size_t>(i - 1)].str());
    }
    row.detail["s"] = s;
    row.detail["t"] = t;
    rows.push_back(std::move(row));
  }

  for (unsigned k = 0; k <= cfg.max_k; ++k) {
    ReportRow row;
    std::ostringstream id;
    id << "hw.k" << k;
    row.id = id.str();
    const State jv = j_mode(k, 0, vl);
    Rational measured;
    bool scalar = jv.is_scalar_multiple_of_vacuum(&measured);
    const Rational closed = hw_eigenvalue(k, lambda, cfg.N);
    bool killed = true;
    for (long m = 1; m <= 2; ++m) killed = killed && j_mode(k, m, vl).is_zero();
    row.pass = scalar && killed && measured == closed;
    row.detail["measured"] = measured.str();
    row.detail["closed_form"] = closed.str();
    row.detail["positive_modes_vanish"] = killed;
    rows.push_back(std::move(row));
  }

  {
    ReportRow row{"veza.weights", true, {}};
    const WeightSeries a = weight_components(lambda, cfg.N, cfg.series_order);
    const WeightSeries b = weight_components_measured(lambda, cfg.N,
                                                      std::min(cfg.series_order, static_cast<int>(cfg.max_k)));
    ordered_json ja = ordered_json::array(), jb = ordered_json::array();
    for (const auto& x : a.lambda_n) ja.push_back(x.str());
    for (const auto& x : b.lambda_n) jb.push_back(x.str());
    row.detail["lambda_n_closed"] = ja;
    row.detail["lambda_n_measured"] = jb;
    row.pass = std::equal(b.lambda_n.begin(), b.lambda_n.end(), a.lambda_n.begin());
    rows.push_back(std::move(row));
  }
  return emit(cfg, std::move(rows));
}

int cmd_delta(const RunConfig& cfg) {
  const Weight lambda = make_weight(cfg);
  std::vector<ReportRow> rows;
  const PowerSeries by_sum = delta_series(lambda, cfg.N, cfg.series_order);
  const PowerSeries closed = delta_closed_form(lambda, cfg.N, cfg.series_order);
  {
    ReportRow row{"main.gener", by_sum == closed, {}};
    ordered_json a = ordered_json::array(), b = ordered_json::array();
    for (int n = 0; n <= cfg.series_order; ++n) {
      a.push_back(by_sum[n].str());
      b.push_back(closed[n].str());
    }
    row.detail["delta_by_eigenvalue_sum"] = a;
    row.detail["delta_closed_form"] = b;
    rows.push_back(std::move(row));
  }
  {
    ReportRow row{"main.quasifinite", true, {}};
    try {
      const QuasifiniteDecomposition dec = quasifinite_decompose(lambda, cfg.N);
      ordered_json terms = ordered_json::array();
      for (const auto& [r, p] : dec.terms) {
        ordered_json t;
        t["exponent"] = r.str();
        ordered_json mult = ordered_json::array();
        for (const auto& c : p) mult.push_back(c.str());
        t["multiplicity"] = mult;
        terms.push_back(t);
      }
      row.detail["central_charge"] = dec.central_charge.str();
      row.detail["terms"] = terms;
      row.detail["multiplicity_sum_at_zero"] = dec.multiplicity_sum_at_zero().str();
      row.pass = dec.multiplicity_sum_at_zero() == Rational(-cfg.N);
    } catch (const inconsistency_error& e) {
      row.pass = false;
      row.detail["error"] = e.what();
    }
    rows.push_back(std::move(row));
  }
  return emit(cfg, std::move(rows));
}

int cmd_bracket_table(const RunConfig& cfg) {
  make_weight(cfg);
  const unsigned ab_max = std::min<unsigned>(cfg.max_k, 2);
  const long R = 2;
  const auto agreement = verify::realization_agreement_table(cfg.N, ab_max, R, std::min<long>(cfg.trunc_degree, 3));
  std::vector<ReportRow> rows;
  for (unsigned a = 0; a <= ab_max; ++a)
    for (unsigned b = 0; b <= ab_max; ++b)
      for (long m = -R; m <= R; ++m)
        for (long n = -R; n <= R; ++n) {
          ReportRow row;
          std::ostringstream id;
          id << "bracket.a" << a << ".b" << b << ".m" << (m < 0 ? "m" : "p") << std::abs(m) << ".n"
             << (n < 0 ? "m" : "p") << std::abs(n);
          row.id = id.str();
          const DiffOpElement br = dhat_bracket(DiffOpElement::basis(OpKind::J, a, m),
                                                DiffOpElement::basis(OpKind::J, b, n), Rational(-cfg.N));
          ordered_json terms = ordered_json::array();
          for (const auto& [key, c] : br.terms()) {
            ordered_json t;
            t["l"] = key.l;
            t["k"] = key.k;
            t["coeff"] = c.str();
            terms.push_back(t);
          }
          row.detail["terms"] = terms;
          row.detail["central"] = br.central().str();
          const bool ok = agreement.at({a, m, b, n});
          row.detail["realization_agrees"] = ok;
          row.pass = ok;
          rows.push_back(std::move(row));
        }
  return emit(cfg, std::move(rows));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic engine for the lattice realization of W_{1+inf,-N}"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string lambda_alpha_s, lambda_beta_s;
  const char* env_format = std::getenv("WINFTY_FORMAT");
  const std::string default_format = env_format ? env_format : "json";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--N", cfg.N, "number of betagamma pairs (central charge -N)")->check(CLI::PositiveNumber);
    sub->add_option("--lambda-alpha", lambda_alpha_s, "comma-separated <lambda,alpha_i> pairings (p/q)");
    sub->add_option("--lambda-beta", lambda_beta_s, "comma-separated <lambda,beta_i> pairings (p/q)");
    sub->add_option("--max-k", cfg.max_k, "largest generator index k");
    sub->add_option("--order", cfg.series_order, "series truncation order")->check(CLI::NonNegativeNumber);
    sub->add_option("--trunc-degree", cfg.trunc_degree, "state-degree cap for sweeps")->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", cfg.seed, "seed for randomized sweeps");
    sub->add_option("--format", cfg.format, "output format: json|tsv")->check(CLI::IsMember({"json", "tsv"}));
    sub->add_option("--out", cfg.out_file, "output file (default stdout)");
  };

  CLI::App* verify_cmd = app.add_subcommand("verify", "run every invariant suite and report pass/fail");
  CLI::App* weights_cmd = app.add_subcommand("weights", "highest-weight table: J^k(0) eigenvalues and lambda_n");
  CLI::App* delta_cmd = app.add_subcommand("delta", "Delta_lambda(x) series and quasifinite decomposition");
  CLI::App* bracket_cmd = app.add_subcommand("bracket-table", "[J^a(m), J^b(n)] table with realization checks");
  for (CLI::App* sub : {verify_cmd, weights_cmd, delta_cmd, bracket_cmd}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    cfg.lambda_alpha = parse_rational_list(lambda_alpha_s);
    cfg.lambda_beta = parse_rational_list(lambda_beta_s);
    if (cfg.format.empty()) cfg.format = default_format;
    if (cfg.format != "json" && cfg.format != "tsv")
      throw std::invalid_argument("format must be json or tsv");
    if (verify_cmd->parsed()) return cmd_verify(cfg);
    if (weights_cmd->parsed()) return cmd_weights(cfg);
    if (delta_cmd->parsed()) return cmd_delta(cfg);
    if (bracket_cmd->parsed()) return cmd_bracket_table(cfg);
  } catch (const inconsistency_error& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
