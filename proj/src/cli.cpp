#include "harris/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "harris/distribution.hpp"
#include "harris/error.hpp"
#include "harris/estimation.hpp"
#include "harris/experiment.hpp"
#include "harris/sampling.hpp"
#include "harris/stability.hpp"

namespace harris::cli {
namespace {

// Thrown for invalid flag combinations or input; mapped to kUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

std::string fixed_or_na(const std::optional<double>& value, int decimals) {
  return value ? fixed(*value, decimals) : "NA";
}

std::string scientific(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", value);
  return buf;
}

std::string plain(double value) {
  std::ostringstream s;
  s << value;
  return s.str();
}

std::string quoted(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

const std::map<std::string, Variant> kVariants{{"h1", Variant::H1}, {"h0", Variant::H0}};
const std::map<std::string, FitMethod> kMethods{{"mle", FitMethod::mle}, {"moments", FitMethod::moments}};

// Routes output to --out when given, standard output otherwise.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw UsageError("cannot open output file " + path);
    }
    target_ = path.empty() ? &fallback : &file_;
  }
  std::ostream& stream() { return *target_; }

 private:
  std::ofstream file_;
  std::ostream* target_;
};

struct DistributionFlags {
  double m = 0.0;
  double k = 0.0;
  Variant variant = Variant::H1;
  std::int64_t rmax = 20;
  std::string out;
};

void add_distribution_flags(CLI::App* cmd, DistributionFlags& f) {
  cmd->add_option("--m", f.m, "Parameter m > 1")->required();
  cmd->add_option("--k", f.k, "Lattice step k (positive integer)")->required();
  cmd->add_option("--variant", f.variant, "Support origin: h1 (1) or h0 (0)")
      ->transform(CLI::CheckedTransformer(kVariants, CLI::ignore_case));
  cmd->add_option("--rmax", f.rmax, "Largest lattice index to print")->check(CLI::NonNegativeNumber);
  cmd->add_option("--out", f.out, "Write CSV to this path instead of standard output");
}

int cmd_pmf(const DistributionFlags& f, std::ostream& out) {
  const HarrisParams params = make_params(f.m, f.k, f.variant);
  Sink sink(f.out, out);
  auto& os = sink.stream();
  os << "x,p\n";
  for (const auto& entry : pmf_table(params, f.rmax)) {
    os << entry.point.x << ',' << fixed(entry.probability, 6) << '\n';
  }
  return kOk;
}

int cmd_cdf(const DistributionFlags& f, const std::optional<double>& at, std::ostream& out) {
  const HarrisParams params = make_params(f.m, f.k, f.variant);
  Sink sink(f.out, out);
  auto& os = sink.stream();
  os << "x,F\n";
  if (at) {
    os << plain(*at) << ',' << fixed(cdf(params, *at), 6) << '\n';
    return kOk;
  }
  for (std::int64_t r = 0; r <= f.rmax; ++r) {
    os << support_point(params, r).x << ',' << fixed(cdf_at_index(params, r), 6) << '\n';
  }
  return kOk;
}

struct SampleFlags {
  DistributionFlags dist;
  std::size_t n = 1000;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  std::string sampler = "nb";
};

int cmd_sample(const SampleFlags& f, std::ostream& out) {
  const HarrisParams params = make_params(f.dist.m, f.dist.k, f.dist.variant);
  RngStream rng(f.seed, f.stream);
  std::vector<SupportPoint> draws;
  if (f.sampler == "nb") {
    draws = sample_nb(params, rng, f.n);
  } else if (f.sampler == "gamma-poisson") {
    draws = sample_gamma_poisson(params, rng, f.n);
  } else {
    draws = sample_inverse(params, rng, f.n);
  }
  Sink sink(f.dist.out, out);
  auto& os = sink.stream();
  os << "x\n";
  for (const auto& d : draws) os << d.x << '\n';
  return kOk;
}

struct FitFlags {
  std::string input;
  FitMethod method = FitMethod::mle;
  int origin = 1;
  std::string json;
  std::string out;
};

std::vector<std::int64_t> read_values(std::istream& is) {
  std::vector<std::int64_t> values;
  std::string token;
  while (is >> token) {
    std::int64_t v = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) throw UsageError("not an integer: '" + token + "'");
    values.push_back(v);
  }
  if (is.bad()) throw UsageError("read error");
  return values;
}

int cmd_fit(const FitFlags& f, std::ostream& out, std::istream& in) {
  std::vector<std::int64_t> values;
  if (f.input.empty() || f.input == "-") {
    values = read_values(in);
  } else {
    std::ifstream file(f.input);
    if (!file) throw UsageError("cannot read " + f.input);
    values = read_values(file);
  }
  if (values.empty()) throw UsageError("no values in input");

  std::optional<Sample> sample;
  try {
    sample.emplace(std::move(values), f.origin);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }

  const FitResult fit = f.method == FitMethod::mle ? fit_mle(*sample) : fit_moments(*sample);
  const auto lattice = sample->inferred_k();

  Sink sink(f.out, out);
  auto& os = sink.stream();
  os << "method,n,m_hat,k_hat,k_hat_int,lattice,iterations,residual\n";
  os << (fit.method == FitMethod::mle ? "mle" : "moments") << ',' << sample->size() << ','
     << fixed(fit.m_hat, 5) << ',' << fixed(fit.k_hat, 5) << ',' << fit.k_hat_int << ','
     << (lattice ? std::to_string(*lattice) : "NA") << ',';
  if (fit.solver) {
    os << fit.solver->iterations << ',' << scientific(fit.solver->residual) << '\n';
  } else {
    os << "NA,NA\n";
  }

  if (!f.json.empty()) {
    nlohmann::json detail{
        {"method", fit.method == FitMethod::mle ? "mle" : "moments"},
        {"n", sample->size()},
        {"origin", sample->origin()},
        {"sample_mean", sample->mean()},
        {"sample_variance", sample->variance()},
        {"m_hat", fit.m_hat},
        {"k_hat", fit.k_hat},
        {"k_hat_int", fit.k_hat_int},
        {"lattice", lattice ? nlohmann::json(*lattice) : nlohmann::json(nullptr)},
    };
    if (fit.solver) {
      detail["solver"] = {{"iterations", fit.solver->iterations},
                          {"bracket", {fit.solver->bracket_lo, fit.solver->bracket_hi}},
                          {"residual", fit.solver->residual}};
    }
    std::ofstream js(f.json);
    if (!js) throw UsageError("cannot open " + f.json);
    js << detail.dump(2) << '\n';
  }
  return kOk;
}

struct ExperimentFlags {
  std::vector<double> m;
  std::vector<double> k;
  std::vector<std::size_t> n;
  Variant variant = Variant::H1;
  std::size_t reps = 50;
  FitMethod method = FitMethod::moments;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string out;
};

int cmd_experiment(const ExperimentFlags& f, std::ostream& out) {
  // Validate the whole grid before producing any output.
  std::vector<ExperimentSpec> specs;
  for (const double m : f.m) {
    for (const double k : f.k) {
      for (const std::size_t n : f.n) {
        make_params(m, k, f.variant);
        ExperimentSpec spec{m, static_cast<std::int64_t>(k), f.variant, n, f.reps, f.method, f.seed};
        spec.validate();
        specs.push_back(spec);
      }
    }
  }

  Sink sink(f.out, out);
  auto& os = sink.stream();
  os << "method,m,k,n,reps,m_hat,m_se,k_hat,k_se,breakdowns\n";
  for (const auto& spec : specs) {
    const ExperimentReport report = run_experiment(spec, f.threads);
    os << (spec.method == FitMethod::mle ? "mle" : "moments") << ',' << plain(spec.m) << ',' << spec.k << ','
       << spec.n << ',' << spec.reps << ',' << fixed_or_na(report.m_mean, 5) << ','
       << fixed_or_na(report.m_se, 5) << ',' << fixed_or_na(report.k_mean, 5) << ','
       << fixed_or_na(report.k_se, 5) << ',' << report.breakdowns << '\n';
  }
  return kOk;
}

struct StabilityFlags {
  bool id = false;
  bool sd = false;
  bool identity = false;
  bool limit = false;
  bool stopped = false;
  Variant variant = Variant::H0;
  std::vector<double> m;
  std::vector<double> k;
  std::optional<double> a;
  std::optional<double> c;
  std::size_t order = 60;
  std::size_t n = 100000;
  std::uint64_t seed = 0;
  std::string out;
};

struct CheckRow {
  std::string check;
  std::string parameters;
  bool pass;
  std::string witness;
};

int cmd_stability(StabilityFlags f, std::ostream& out, std::ostream& err) {
  if (!(f.id || f.sd || f.identity || f.limit || f.stopped)) {
    f.id = f.sd = f.identity = f.limit = f.stopped = true;
  }
  const std::vector<double> ms = f.m.empty() ? std::vector<double>{1.25, 2, 10, 50} : f.m;
  const std::vector<double> ks = f.k.empty() ? std::vector<double>{1, 2, 5} : f.k;

  std::vector<CheckRow> rows;
  const auto label = [](std::initializer_list<std::pair<const char*, double>> kv) {
    std::string s;
    for (const auto& [key, value] : kv) {
      if (!s.empty()) s += ' ';
      s += std::string(key) + '=' + plain(value);
    }
    return s;
  };

  if (f.id) {
    for (const double m : ms) {
      for (const double k : ks) {
        const HarrisParams params = make_params(m, k, Variant::H0);
        for (const int n : {2, 3, 7}) {
          const auto check = id_check(params, n, f.order);
          rows.push_back({"id", label({{"m", m}, {"k", k}, {"n", n}, {"R", double(f.order)}}), check.pass,
                          check.witness});
        }
      }
    }
  }

  if (f.sd) {
    for (const double m : ms) {
      for (const double k : ks) {
        const HarrisParams params = make_params(m, k, f.variant);
        if (f.variant == Variant::H1) {
          const auto check = sd_check(params, 0.5, f.order);
          rows.push_back({"sd", label({{"m", m}, {"k", k}}) + " variant=h1", check.pass, check.witness});
          continue;
        }
        for (int i = 1; i <= 9; ++i) {
          const double c = i / 10.0;
          const auto check = sd_check(params, c, f.order);
          rows.push_back({"sd", label({{"m", m}, {"k", k}, {"c", c}, {"R", double(f.order)}}), check.pass,
                          check.witness});
        }
      }
    }
  }

  if (f.identity) {
    const std::vector<double> as = f.a ? std::vector<double>{*f.a} : std::vector<double>{2, 10};
    const std::vector<double> cs = f.c ? std::vector<double>{*f.c} : std::vector<double>{0.5, 1};
    const std::vector<double> t_grid{0, 0.5, 1, 2, 5};
    for (const double a : as) {
      for (const double c : cs) {
        for (const double k : ks) {
          const double residual = gamma_harris_identity(a, c, static_cast<std::int64_t>(k), t_grid);
          rows.push_back({"identity", label({{"a", a}, {"c", c}, {"k", k}}), residual <= 1e-12,
                          "max residual " + scientific(residual)});
        }
      }
    }
  }

  if (f.limit) {
    const double k = f.k.empty() ? 2.0 : f.k.front();
    const std::vector<double> a_grid{10, 100, 1000};
    RngStream rng(f.seed, 0);
    const auto report = limit_law_check(a_grid, static_cast<std::int64_t>(k), f.n, rng);
    const auto& last = report.points.back();
    const bool moments_ok = std::abs(last.mean - 1.0) <= 0.02 && std::abs(last.variance - k) <= 0.075 * k;
    std::ostringstream witness;
    witness << "mean " << fixed(last.mean, 5) << " var " << fixed(last.variance, 5) << " ks "
            << fixed(last.ks_distance, 5) << " lt " << scientific(last.exact_lt_distance);
    rows.push_back({"limit_pgf", label({{"k", k}}), report.pgf_decreasing, "P_a(s) decreasing in a"});
    rows.push_back({"limit_lt", label({{"k", k}}), report.exact_distance_shrinking,
                    "exact LT distance " + scientific(last.exact_lt_distance)});
    rows.push_back({"limit_moments", label({{"a", last.a}, {"k", k}, {"n", double(f.n)}}), moments_ok,
                    witness.str()});
  }

  if (f.stopped) {
    const double a = f.a.value_or(2.0);
    const double c = f.c.value_or(1.0);
    const double k = f.k.empty() ? 2.0 : f.k.front();
    RngStream rng(f.seed, 1);
    const auto report = stopped_sum_demo(a, c, static_cast<std::int64_t>(k), f.n, rng);
    rows.push_back({"stopped_sum", label({{"a", a}, {"c", c}, {"k", k}, {"n", double(f.n)}}),
                    report.ks_distance <= 0.02, "ks " + fixed(report.ks_distance, 5)});
  }

  Sink sink(f.out, out);
  auto& os = sink.stream();
  os << "check,parameters,status,witness\n";
  bool all_pass = true;
  for (const auto& row : rows) {
    os << row.check << ',' << quoted(row.parameters) << ',' << (row.pass ? "pass" : "fail") << ','
       << quoted(row.witness) << '\n';
    if (!row.pass) {
      all_pass = false;
      err << "check failed: " << row.check << " (" << row.parameters << "): " << row.witness << '\n';
    }
  }
  return all_pass ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Harris family of discrete distributions"};
  app.require_subcommand(1);

  DistributionFlags pmf_flags;
  auto* pmf = app.add_subcommand("pmf", "Probability table x,p");
  add_distribution_flags(pmf, pmf_flags);

  DistributionFlags cdf_flags;
  std::optional<double> cdf_at;
  auto* cdf_cmd = app.add_subcommand("cdf", "Distribution function x,F");
  add_distribution_flags(cdf_cmd, cdf_flags);
  cdf_cmd->add_option("--x", cdf_at, "Evaluate at a single real point");

  SampleFlags sample_flags;
  auto* sample = app.add_subcommand("sample", "Draw variates");
  add_distribution_flags(sample, sample_flags.dist);
  sample->add_option("--n", sample_flags.n, "Number of draws");
  sample->add_option("--seed", sample_flags.seed, "Master seed");
  sample->add_option("--stream", sample_flags.stream, "Stream id");
  sample->add_option("--sampler", sample_flags.sampler, "nb, gamma-poisson or inverse")
      ->check(CLI::IsMember({"nb", "gamma-poisson", "inverse"}));

  FitFlags fit_flags;
  auto* fit = app.add_subcommand("fit", "Estimate (m, k) from whitespace-separated integers");
  fit->add_option("input", fit_flags.input, "Input file ('-' or omitted: standard input)");
  fit->add_option("--method", fit_flags.method, "mle or moments")
      ->transform(CLI::CheckedTransformer(kMethods, CLI::ignore_case));
  fit->add_option("--origin", fit_flags.origin, "Support origin of the data (1 or 0)")->check(CLI::Range(0, 1));
  fit->add_option("--json", fit_flags.json, "Write detailed JSON to this path");
  fit->add_option("--out", fit_flags.out, "Write CSV to this path instead of standard output");

  ExperimentFlags exp_flags;
  auto* experiment = app.add_subcommand("experiment", "Simulation study: mean estimates and SEs");
  experiment->add_option("--m", exp_flags.m, "m values (repeatable, comma-separated)")
      ->required()
      ->delimiter(',');
  experiment->add_option("--k", exp_flags.k, "k values (repeatable, comma-separated)")
      ->required()
      ->delimiter(',');
  experiment->add_option("--n", exp_flags.n, "Sample sizes (repeatable, comma-separated)")
      ->required()
      ->delimiter(',');
  experiment->add_option("--variant", exp_flags.variant, "h1 or h0")
      ->transform(CLI::CheckedTransformer(kVariants, CLI::ignore_case));
  experiment->add_option("--reps", exp_flags.reps, "Repetitions per cell");
  experiment->add_option("--method", exp_flags.method, "mle or moments")
      ->transform(CLI::CheckedTransformer(kMethods, CLI::ignore_case));
  experiment->add_option("--seed", exp_flags.seed, "Master seed; repetition i uses stream i");
  experiment->add_option("--threads", exp_flags.threads, "Worker threads (output does not depend on it)")
      ->check(CLI::PositiveNumber);
  experiment->add_option("--out", exp_flags.out, "Write CSV to this path instead of standard output");

  StabilityFlags stab_flags;
  auto* stability = app.add_subcommand("stability", "Divisibility and stability checks");
  stability->add_flag("--id", stab_flags.id, "Infinite divisibility (n-th roots)");
  stability->add_flag("--sd", stab_flags.sd, "Self-decomposability factor");
  stability->add_flag("--identity", stab_flags.identity, "Gamma Harris-sum identity");
  stability->add_flag("--limit", stab_flags.limit, "Limit law of N_a / a");
  stability->add_flag("--stopped", stab_flags.stopped, "Random-sum Monte Carlo");
  stability->add_option("--variant", stab_flags.variant, "Variant for --sd (default h0)")
      ->transform(CLI::CheckedTransformer(kVariants, CLI::ignore_case));
  stability->add_option("--m", stab_flags.m, "Restrict the m grid")->delimiter(',');
  stability->add_option("--k", stab_flags.k, "Restrict the k grid")->delimiter(',');
  stability->add_option("--a", stab_flags.a, "Counting parameter a for --identity/--stopped");
  stability->add_option("--c", stab_flags.c, "Gamma scale c for --identity/--stopped");
  stability->add_option("--order", stab_flags.order, "Series truncation order R");
  stability->add_option("--n", stab_flags.n, "Monte Carlo size");
  stability->add_option("--seed", stab_flags.seed, "Master seed");
  stability->add_option("--out", stab_flags.out, "Write CSV to this path instead of standard output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*pmf) return cmd_pmf(pmf_flags, out);
    if (*cdf_cmd) return cmd_cdf(cdf_flags, cdf_at, out);
    if (*sample) return cmd_sample(sample_flags, out);
    if (*fit) return cmd_fit(fit_flags, out, in);
    if (*experiment) return cmd_experiment(exp_flags, out);
    if (*stability) return cmd_stability(stab_flags, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << e.what() << '\n';
    switch (e.code()) {
      case Errc::degenerate_sample:
      case Errc::mean_at_boundary:
      case Errc::no_root_in_bracket:
      case Errc::multiple_roots: return kFitFailed;
      default: return kUsage;
    }
  }
  return kUsage;
}

}  // namespace harris::cli
