// Command-line front end for the password-cracking economics library.
//
// Subcommands: fit, threshold, pdf-threshold, attack, bounds, cost, perturb,
// dp-study, stability, sample. Every run is deterministic given its argv and
// seed, and every artifact embeds the tool version plus the fully resolved
// configuration. Exit codes: 0 success, 1 usage error, 2 data/domain error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "crackecon/attacker.hpp"
#include "crackecon/bounds.hpp"
#include "crackecon/corpus.hpp"
#include "crackecon/cost.hpp"
#include "crackecon/distribution.hpp"
#include "crackecon/dp_perturb.hpp"
#include "crackecon/errors.hpp"
#include "crackecon/serialize.hpp"
#include "crackecon/version.hpp"
#include "crackecon/zipf_fit.hpp"
#include "crackecon/zipf_threshold.hpp"

namespace {

using crackecon::AttackerParams;
using crackecon::AttackMode;
using crackecon::CorpusFormat;
using crackecon::CostModel;
using crackecon::FrequencyCorpus;
using crackecon::PasswordDistribution;
using nlohmann::json;

std::string fmt_g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

class Output {
 public:
  explicit Output(const std::string& path) : path_(path) {
    if (path_ != "-") {
      file_.open(path_, std::ios::binary | std::ios::trunc);
      if (!file_) throw crackecon::Error("cannot open output file: " + path_);
    }
  }
  std::ostream& stream() { return path_ == "-" ? std::cout : file_; }

 private:
  std::string path_;
  std::ofstream file_;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw crackecon::Error("cannot open input file: " + path);
  return in;
}

CorpusFormat detect_format(const std::string& path) {
  std::ifstream in = open_input(path);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string a, b;
    if (!(row >> a) || a.front() == '#') continue;
    return row >> b ? CorpusFormat::kRunlengthPairs : CorpusFormat::kRawCounts;
  }
  return CorpusFormat::kRawCounts;
}

FrequencyCorpus load_corpus(const std::string& path, const std::string& format) {
  CorpusFormat fmt;
  if (format == "raw") {
    fmt = CorpusFormat::kRawCounts;
  } else if (format == "runlength") {
    fmt = CorpusFormat::kRunlengthPairs;
  } else {
    fmt = detect_format(path);
  }
  std::ifstream in = open_input(path);
  return FrequencyCorpus::parse(in, fmt);
}

PasswordDistribution parse_dist(const std::string& spec, const std::string& format) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw crackecon::Error("distribution spec needs 'kind:params', got '" + spec + "'");
  }
  const std::string kind = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  if (kind == "empirical") {
    return PasswordDistribution::empirical(load_corpus(rest, format));
  }
  const auto comma = rest.find(',');
  if (comma == std::string::npos) {
    throw crackecon::Error("distribution spec '" + kind + "' needs two parameters");
  }
  const double p1 = std::stod(rest.substr(0, comma));
  const double p2 = std::stod(rest.substr(comma + 1));
  if (kind == "cdf_zipf") return PasswordDistribution::cdf_zipf(p1, p2);
  if (kind == "pdf_zipf") return PasswordDistribution::pdf_zipf(p1, p2);
  throw crackecon::Error("unknown distribution kind '" + kind + "'");
}

json make_meta(const std::string& command, const json& config) {
  return json{{"version", crackecon::kVersion}, {"command", command}, {"config", config}};
}

void write_json(Output& out, json j) {
  out.stream() << j.dump(2) << '\n';
}

void write_csv_header(Output& out, const std::string& command, const json& config,
                      const std::string& columns) {
  out.stream() << "# crackecon " << crackecon::kVersion << '\n'
               << "# command: " << command << '\n'
               << "# config: " << config.dump() << '\n'
               << columns << '\n';
}

void write_corpus_artifact(Output& out, const FrequencyCorpus& corpus,
                           const std::string& command, const json& config) {
  out.stream() << "# crackecon " << crackecon::kVersion << '\n'
               << "# command: " << command << '\n'
               << "# config: " << config.dump() << '\n'
               << "# N: " << corpus.n_users() << " M: " << corpus.n_distinct() << '\n';
  corpus.serialize_runlength(out.stream());
}

// --- subcommand state -----------------------------------------------------

struct FitArgs {
  std::string input, method, format = "auto", output = "-";
  std::uint64_t cutoff = 5;
  double r_lo = 0.01, r_hi = 0.99, tol = 1e-6;
};

struct ThresholdArgs {
  double y = 0.0, r = 0.0, a = 1.0;
  std::string table, output = "-";
};

struct PdfThresholdArgs {
  double z = 0.0, s = 0.0;
  std::optional<double> v, k;
  std::string output = "-";
};

struct AttackArgs {
  std::string dist, mode = "brute", format = "auto", output = "-";
  double v = 0.0, k = 1.0, a = 1.0;
};

struct BoundsArgs {
  std::string input, dataset, format = "auto", output = "-";
  unsigned j = 2;
  double big_l = 10.0, eps = 0.5;
  std::uint64_t t = 100;
};

struct CostArgs {
  std::optional<double> price;
  double q = 0.01, a = 1.0;
  std::string dist, family = "iterated", format = "auto", output = "-";
  double v_dollars = 4.0;
  double log2_min = 10.0, log2_max = 30.0, log2_step = 1.0;
  double c_hash = crackecon::kDefaultHashCost;
  double c_mem = crackecon::kDefaultHashCost * crackecon::kDefaultMemRatio;
};

struct PerturbArgs {
  std::string input, format = "auto", output = "-";
  double epsilon = 0.25;
  std::uint64_t seed = 0;
};

struct DpStudyArgs {
  std::string input, fit = "cdf-lls", format = "auto", output = "-";
  double epsilon = 0.25;
  unsigned trials = 30;
  std::uint64_t seed = 0, cutoff = 5;
};

struct StabilityArgs {
  std::string input, sizes, format = "auto", output = "-";
  std::uint64_t seed = 0;
};

struct SampleArgs {
  std::string dist, format = "auto", output = "-";
  std::uint64_t n = 0, seed = 0;
};

// --- handlers ---------------------------------------------------------------

int run_fit(const FitArgs& a) {
  const json config{{"input", a.input},   {"method", a.method}, {"format", a.format},
                    {"cutoff", a.cutoff}, {"r_lo", a.r_lo},     {"r_hi", a.r_hi},
                    {"tol", a.tol},       {"output", a.output}};
  const FrequencyCorpus corpus = load_corpus(a.input, a.format);
  json result;
  if (a.method == "cdf-lls") {
    result = to_json(fit_cdf_zipf_lls(corpus));
  } else if (a.method == "cdf-gss") {
    result = to_json(fit_cdf_zipf_gss(corpus, {a.r_lo, a.r_hi, a.tol}));
  } else if (a.method == "pdf-lls") {
    result = to_json(fit_pdf_zipf_lls(corpus, a.cutoff));
  } else {
    throw CLI::ValidationError("--method", "unknown fit method '" + a.method + "'");
  }
  result["meta"] = make_meta("fit", config);
  result["meta"]["corpus"] = {{"N", corpus.n_users()}, {"M", corpus.n_distinct()}};
  Output out(a.output);
  write_json(out, result);
  return 0;
}

int run_threshold(const ThresholdArgs& a) {
  const json config{{"y", a.y}, {"r", a.r}, {"a", a.a}, {"table", a.table},
                    {"output", a.output}};
  Output out(a.output);
  if (!a.table.empty()) {
    std::ifstream in = open_input(a.table);
    write_csv_header(out, "threshold", config, "dataset,y,r,T_a1,T_a08");
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty() || line.front() == '#') continue;
      std::istringstream row(line);
      std::string name, ys, rs;
      if (!std::getline(row, name, ',') || !std::getline(row, ys, ',') ||
          !std::getline(row, rs, ',')) {
        throw crackecon::ParseError(line_no, "expected 'dataset,y,r'");
      }
      const double y = std::stod(ys);
      const double r = std::stod(rs);
      const auto t1 = crackecon::cdf_zipf_threshold(y, r, 1.0);
      const auto t08 = crackecon::cdf_zipf_threshold(y, r, 0.8);
      out.stream() << name << ',' << fmt_g(y) << ',' << fmt_g(r) << ','
                   << fmt_g(t1.threshold) << ',' << fmt_g(t08.threshold) << '\n';
    }
    return 0;
  }
  json result = to_json(crackecon::cdf_zipf_threshold(a.y, a.r, a.a));
  result["meta"] = make_meta("threshold", config);
  write_json(out, result);
  return 0;
}

int run_pdf_threshold(const PdfThresholdArgs& a) {
  if (a.v.has_value() != a.k.has_value()) {
    throw CLI::ValidationError("--v/--k", "give both --v and --k or neither");
  }
  const json config{{"z", a.z},
                    {"s", a.s},
                    {"v", a.v ? json(*a.v) : json(nullptr)},
                    {"k", a.k ? json(*a.k) : json(nullptr)},
                    {"output", a.output}};
  json result;
  if (a.v) {
    result = to_json(crackecon::pdf_zipf_crack_bounds(*a.v, *a.k, a.z, a.s), true);
  } else {
    result = to_json(crackecon::pdf_zipf_threshold(a.z, a.s), false);
  }
  result["meta"] = make_meta("pdf-threshold", config);
  Output out(a.output);
  write_json(out, result);
  return 0;
}

int run_attack(const AttackArgs& a) {
  const json config{{"dist", a.dist}, {"v", a.v},          {"k", a.k},
                    {"a", a.a},       {"mode", a.mode},    {"format", a.format},
                    {"output", a.output}};
  const PasswordDistribution dist = parse_dist(a.dist, a.format);
  const AttackMode mode = a.mode == "marginal" ? AttackMode::kMarginalScan
                                               : AttackMode::kBruteForce;
  json result = to_json(optimal_threshold(dist, AttackerParams{a.v, a.k, a.a}, mode));
  result["meta"] = make_meta("attack", config);
  result["meta"]["distribution"] = dist.describe();
  result["meta"]["support"] = dist.support_size();
  if (dist.kind() == PasswordDistribution::Kind::kPdfZipf) {
    // Unnormalized PDF-Zipf mass past the support is held by a terminal
    // atom the attacker cannot usefully guess.
    result["meta"]["tail_convention"] = "terminal-atom";
    result["meta"]["tail_mass"] = dist.tail_mass();
  }
  Output out(a.output);
  write_json(out, result);
  return 0;
}

int run_bounds(const BoundsArgs& a) {
  const json config{{"input", a.input}, {"dataset", a.dataset}, {"j", a.j},
                    {"L", a.big_l},     {"eps", a.eps},         {"t", a.t},
                    {"format", a.format}, {"output", a.output}};
  const FrequencyCorpus corpus = load_corpus(a.input, a.format);
  const std::string name = a.dataset.empty() ? a.input : a.dataset;
  const auto lb = crackecon::lower_bound_cracked(corpus, a.j, a.big_l);
  const auto ub = crackecon::upper_bound_cracked(
      corpus, a.j, a.big_l, a.eps, std::min<std::uint64_t>(a.t, corpus.n_distinct()));
  Output out(a.output);
  write_csv_header(out, "bounds", config,
                   "dataset,N,M,j,L,V_over_k,lower_pct,upper_pct,mu,failure_prob");
  out.stream() << name << ',' << corpus.n_users() << ',' << corpus.n_distinct() << ','
               << a.j << ',' << fmt_g(a.big_l) << ',' << fmt_g(lb.v_over_k) << ','
               << fmt_g(100.0 * lb.bound_fraction) << ','
               << fmt_g(100.0 * ub.bound_fraction) << ',' << fmt_g(ub.mu) << ','
               << fmt_g(ub.failure_prob) << '\n';
  return 0;
}

int run_cost(const CostArgs& a) {
  if (a.price) {
    const json config{{"price", *a.price}, {"q", a.q}, {"a", a.a},
                      {"c_hash", a.c_hash}, {"output", a.output}};
    const double v = crackecon::extrapolate_value({*a.price, a.q, a.a});
    json result{{"v_dollars", v}, {"v_units", v / a.c_hash}};
    result["meta"] = make_meta("cost", config);
    Output out(a.output);
    write_json(out, result);
    return 0;
  }
  if (a.dist.empty()) {
    throw CLI::ValidationError("cost", "need --price for conversion or --dist for a curve");
  }
  const json config{{"dist", a.dist},           {"v_dollars", a.v_dollars},
                    {"family", a.family},       {"a", a.a},
                    {"log2_min", a.log2_min},   {"log2_max", a.log2_max},
                    {"log2_step", a.log2_step}, {"c_hash", a.c_hash},
                    {"c_mem", a.c_mem},         {"format", a.format},
                    {"output", a.output}};
  const PasswordDistribution dist = parse_dist(a.dist, a.format);
  const CostModel::Kind kind = a.family == "mhf" ? CostModel::Kind::kMhf
                                                 : CostModel::Kind::kIterated;
  std::vector<double> taus;
  for (double l2 = a.log2_min; l2 <= a.log2_max + 1e-9; l2 += a.log2_step) {
    taus.push_back(std::pow(2.0, l2));
  }
  const auto curve =
      crackecon::crack_curve_vs_tau(dist, a.v_dollars, kind, taus, a.a, a.c_hash, a.c_mem);
  Output out(a.output);
  write_csv_header(out, "cost", config, "tau,log2_tau,k_units,k_dollars,pct_cracked");
  out.stream() << "# tau_1sec: " << fmt_g(crackecon::kOneSecondTau) << '\n';
  for (const auto& pt : curve) {
    out.stream() << fmt_g(pt.tau) << ',' << fmt_g(pt.log2_tau) << ','
                 << fmt_g(pt.k_units) << ',' << fmt_g(pt.k_dollars) << ','
                 << fmt_g(pt.pct_cracked) << '\n';
  }
  return 0;
}

int run_perturb(const PerturbArgs& a) {
  const json config{{"input", a.input},
                    {"epsilon", a.epsilon},
                    {"seed", a.seed},
                    {"mechanism", std::string(crackecon::kPerturbMechanism)},
                    {"format", a.format},
                    {"output", a.output}};
  const FrequencyCorpus corpus = load_corpus(a.input, a.format);
  const FrequencyCorpus noisy = crackecon::perturb(corpus, a.epsilon, a.seed);
  Output out(a.output);
  write_corpus_artifact(out, noisy, "perturb", config);
  return 0;
}

int run_dp_study(const DpStudyArgs& a) {
  const json config{{"input", a.input},   {"fit", a.fit},   {"epsilon", a.epsilon},
                    {"trials", a.trials}, {"seed", a.seed}, {"cutoff", a.cutoff},
                    {"format", a.format}, {"output", a.output}};
  const FrequencyCorpus corpus = load_corpus(a.input, a.format);
  const crackecon::FitFamily family = a.fit == "pdf-lls"
                                          ? crackecon::FitFamily::kPdfLls
                                          : crackecon::FitFamily::kCdfLls;
  const crackecon::PerturbParams params{a.epsilon, a.trials, a.seed};
  json result = to_json(crackecon::fit_impact_study(corpus, params, family, a.cutoff));
  result["meta"] = make_meta("dp-study", config);
  Output out(a.output);
  write_json(out, result);
  return 0;
}

int run_stability(const StabilityArgs& a) {
  const json config{{"input", a.input}, {"sizes", a.sizes}, {"seed", a.seed},
                    {"format", a.format}, {"output", a.output}};
  const FrequencyCorpus corpus = load_corpus(a.input, a.format);

  std::vector<std::uint64_t> sizes;
  std::istringstream list(a.sizes);
  std::string token;
  while (std::getline(list, token, ',')) {
    if (!token.empty()) sizes.push_back(std::stoull(token));
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<>());

  // Nested chain: each smaller sample is drawn from the previous one, so the
  // sequence behaves like one shrinking sample of the full corpus.
  Output out(a.output);
  write_csv_header(out, "stability", config, "size,y,r,r_squared,ks");
  std::vector<std::string> rows;
  FrequencyCorpus current = corpus;
  std::uint64_t sub_seed = a.seed;
  for (std::uint64_t m : sizes) {
    current = current.subsample(m, sub_seed++);
    const auto fit = fit_cdf_zipf_lls(current);
    rows.push_back(std::to_string(m) + ',' + fmt_g(fit.y) + ',' + fmt_g(fit.r) + ',' +
                   fmt_g(fit.r_squared) + ',' + fmt_g(fit.ks));
  }
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) out.stream() << *it << '\n';
  const auto full = fit_cdf_zipf_lls(corpus);
  out.stream() << corpus.n_users() << ',' << fmt_g(full.y) << ',' << fmt_g(full.r)
               << ',' << fmt_g(full.r_squared) << ',' << fmt_g(full.ks) << '\n';
  return 0;
}

int run_sample(const SampleArgs& a) {
  const json config{{"dist", a.dist}, {"n", a.n}, {"seed", a.seed},
                    {"format", a.format}, {"output", a.output}};
  const PasswordDistribution dist = parse_dist(a.dist, a.format);
  const FrequencyCorpus corpus = dist.sample(a.n, a.seed);
  Output out(a.output);
  write_corpus_artifact(out, corpus, "sample", config);
  return 0;
}

// --- config file merging ----------------------------------------------------

std::string json_scalar_to_token(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Injects config-file values as tokens ahead of the explicit flags; options
// use a take-last policy, so the command line wins.
std::vector<std::string> merge_config(const std::vector<std::string>& args,
                                      CLI::App& app) {
  std::string config_path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) config_path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) config_path = args[i].substr(9);
  }
  if (config_path.empty()) return args;
  if (args.empty() || args[0].rfind("-", 0) == 0) {
    throw CLI::ValidationError("--config", "config requires a subcommand");
  }

  CLI::App* sub = app.get_subcommand_no_throw(args[0]);
  if (sub == nullptr) return args;

  std::ifstream in = open_input(config_path);
  json config;
  try {
    in >> config;
  } catch (const json::exception& e) {
    throw CLI::ValidationError("--config", "invalid JSON: " + std::string(e.what()));
  }
  if (!config.is_object()) {
    throw CLI::ValidationError("--config", "config root must be a JSON object");
  }

  std::vector<std::string> merged{args[0]};
  for (const auto& [key, value] : config.items()) {
    const CLI::Option* opt = sub->get_option_no_throw("--" + key);
    if (opt == nullptr) {
      throw CLI::ValidationError("--config", "unknown key '" + key + "' for subcommand '" +
                                                 args[0] + "'");
    }
    merged.push_back("--" + key + "=" + json_scalar_to_token(value));
  }
  merged.insert(merged.end(), args.begin() + 1, args.end());
  return merged;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Economic analysis of offline password cracking"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.set_version_flag("--version", crackecon::kVersion);

  FitArgs fit;
  auto* fit_cmd = app.add_subcommand("fit", "Fit Zipf models to a frequency corpus");
  fit_cmd->add_option("input", fit.input, "corpus file")->required();
  fit_cmd->add_option("--method", fit.method, "cdf-lls | cdf-gss | pdf-lls")->required();
  fit_cmd->add_option("--format", fit.format, "auto | raw | runlength");
  fit_cmd->add_option("--cutoff", fit.cutoff, "pdf minimum frequency");
  fit_cmd->add_option("--r-lo", fit.r_lo, "gss lower r bound");
  fit_cmd->add_option("--r-hi", fit.r_hi, "gss upper r bound");
  fit_cmd->add_option("--tol", fit.tol, "gss tolerance");
  fit_cmd->add_option("-o,--output", fit.output, "output path or -");
  fit_cmd->add_option("--config", "JSON config merged under explicit flags");

  ThresholdArgs thr;
  auto* thr_cmd =
      app.add_subcommand("threshold", "Crack-everything threshold T(y, r, a)");
  thr_cmd->add_option("--y", thr.y, "CDF-Zipf scale");
  thr_cmd->add_option("--r", thr.r, "CDF-Zipf exponent");
  thr_cmd->add_option("--a", thr.a, "diminishing-returns exponent");
  thr_cmd->add_option("--table", thr.table, "CSV of dataset,y,r rows");
  thr_cmd->add_option("-o,--output", thr.output, "output path or -");
  thr_cmd->add_option("--config", "JSON config merged under explicit flags");

  PdfThresholdArgs pdft;
  auto* pdft_cmd =
      app.add_subcommand("pdf-threshold", "PDF-Zipf thresholds and crack bounds");
  pdft_cmd->add_option("--z", pdft.z, "PDF-Zipf scale")->required();
  pdft_cmd->add_option("--s", pdft.s, "PDF-Zipf exponent")->required();
  pdft_cmd->add_option("--v", pdft.v, "password value (units of C_H)");
  pdft_cmd->add_option("--k", pdft.k, "guess cost (units of C_H)");
  pdft_cmd->add_option("-o,--output", pdft.output, "output path or -");
  pdft_cmd->add_option("--config", "JSON config merged under explicit flags");

  AttackArgs atk;
  auto* atk_cmd = app.add_subcommand("attack", "Rational attacker optimal threshold");
  atk_cmd->add_option("--dist", atk.dist, "cdf_zipf:y,r | pdf_zipf:z,s | empirical:FILE")
      ->required();
  atk_cmd->add_option("--v", atk.v, "password value (units of C_H)")->required();
  atk_cmd->add_option("--k", atk.k, "guess cost (units of C_H)");
  atk_cmd->add_option("--a", atk.a, "diminishing-returns exponent");
  atk_cmd->add_option("--mode", atk.mode, "marginal | brute");
  atk_cmd->add_option("--format", atk.format, "corpus format for empirical dists");
  atk_cmd->add_option("-o,--output", atk.output, "output path or -");
  atk_cmd->add_option("--config", "JSON config merged under explicit flags");

  BoundsArgs bnd;
  auto* bnd_cmd =
      app.add_subcommand("bounds", "Model-independent crack bounds for a corpus");
  bnd_cmd->add_option("input", bnd.input, "corpus file")->required();
  bnd_cmd->add_option("--j", bnd.j, "frequency cutoff");
  bnd_cmd->add_option("--L", bnd.big_l, "value multiplier");
  bnd_cmd->add_option("--eps", bnd.eps, "Chernoff slack");
  bnd_cmd->add_option("--t", bnd.t, "head rank for the failure probability");
  bnd_cmd->add_option("--dataset", bnd.dataset, "row label");
  bnd_cmd->add_option("--format", bnd.format, "auto | raw | runlength");
  bnd_cmd->add_option("-o,--output", bnd.output, "output path or -");
  bnd_cmd->add_option("--config", "JSON config merged under explicit flags");

  CostArgs cost;
  auto* cost_cmd =
      app.add_subcommand("cost", "Key-stretching cost curves and value conversion");
  cost_cmd->add_option("--price", cost.price, "observed market price (USD)");
  cost_cmd->add_option("--q", cost.q, "observed market fraction");
  cost_cmd->add_option("--a", cost.a, "diminishing-returns exponent");
  cost_cmd->add_option("--dist", cost.dist, "distribution for the crack curve");
  cost_cmd->add_option("--v-dollars", cost.v_dollars, "password value (USD)");
  cost_cmd->add_option("--family", cost.family, "iterated | mhf");
  cost_cmd->add_option("--log2-min", cost.log2_min, "log2 of the smallest tau");
  cost_cmd->add_option("--log2-max", cost.log2_max, "log2 of the largest tau");
  cost_cmd->add_option("--log2-step", cost.log2_step, "grid step in log2 tau");
  cost_cmd->add_option("--c-hash", cost.c_hash, "dollars per hash");
  cost_cmd->add_option("--c-mem", cost.c_mem, "dollars per block-timestep");
  cost_cmd->add_option("--format", cost.format, "corpus format for empirical dists");
  cost_cmd->add_option("-o,--output", cost.output, "output path or -");
  cost_cmd->add_option("--config", "JSON config merged under explicit flags");

  PerturbArgs pert;
  auto* pert_cmd = app.add_subcommand("perturb", "Calibrated-noise corpus perturbation");
  pert_cmd->add_option("input", pert.input, "corpus file")->required();
  pert_cmd->add_option("--epsilon", pert.epsilon, "noise scale is 1/epsilon");
  pert_cmd->add_option("--seed", pert.seed, "random seed");
  pert_cmd->add_option("--format", pert.format, "auto | raw | runlength");
  pert_cmd->add_option("-o,--output", pert.output, "output path or -");
  pert_cmd->add_option("--config", "JSON config merged under explicit flags");

  DpStudyArgs study;
  auto* study_cmd =
      app.add_subcommand("dp-study", "Perturbation robustness study of Zipf fits");
  study_cmd->add_option("input", study.input, "corpus file")->required();
  study_cmd->add_option("--epsilon", study.epsilon, "noise scale is 1/epsilon");
  study_cmd->add_option("--trials", study.trials, "number of perturbed copies");
  study_cmd->add_option("--seed", study.seed, "base seed; trial i uses seed+i");
  study_cmd->add_option("--fit", study.fit, "cdf-lls | pdf-lls");
  study_cmd->add_option("--cutoff", study.cutoff, "pdf minimum frequency");
  study_cmd->add_option("--format", study.format, "auto | raw | runlength");
  study_cmd->add_option("-o,--output", study.output, "output path or -");
  study_cmd->add_option("--config", "JSON config merged under explicit flags");

  StabilityArgs stab;
  auto* stab_cmd =
      app.add_subcommand("stability", "CDF-Zipf fit stability under nested subsampling");
  stab_cmd->add_option("input", stab.input, "corpus file")->required();
  stab_cmd->add_option("--sizes", stab.sizes, "comma list of subsample sizes")->required();
  stab_cmd->add_option("--seed", stab.seed, "random seed");
  stab_cmd->add_option("--format", stab.format, "auto | raw | runlength");
  stab_cmd->add_option("-o,--output", stab.output, "output path or -");
  stab_cmd->add_option("--config", "JSON config merged under explicit flags");

  SampleArgs smp;
  auto* smp_cmd = app.add_subcommand("sample", "Draw a corpus from a distribution");
  smp_cmd->add_option("--dist", smp.dist, "cdf_zipf:y,r | pdf_zipf:z,s | empirical:FILE")
      ->required();
  smp_cmd->add_option("--n", smp.n, "number of users to draw")->required();
  smp_cmd->add_option("--seed", smp.seed, "random seed");
  smp_cmd->add_option("--format", smp.format, "corpus format for empirical dists");
  smp_cmd->add_option("-o,--output", smp.output, "output path or -");
  smp_cmd->add_option("--config", "JSON config merged under explicit flags");

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    args = merge_config(args, app);
    // CLI11 parses reversed vectors in place.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const crackecon::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (fit_cmd->parsed()) return run_fit(fit);
    if (thr_cmd->parsed()) return run_threshold(thr);
    if (pdft_cmd->parsed()) return run_pdf_threshold(pdft);
    if (atk_cmd->parsed()) return run_attack(atk);
    if (bnd_cmd->parsed()) return run_bounds(bnd);
    if (cost_cmd->parsed()) return run_cost(cost);
    if (pert_cmd->parsed()) return run_perturb(pert);
    if (study_cmd->parsed()) return run_dp_study(study);
    if (stab_cmd->parsed()) return run_stability(stab);
    if (smp_cmd->parsed()) return run_sample(smp);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const crackecon::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
