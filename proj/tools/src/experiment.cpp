#include "experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <stdexcept>

namespace hawkes::cli {
namespace {

using nlohmann::json;

// Exact samplers draw from streams disjoint from the grid schemes so that
// grid-vs-exact comparisons use independent samples.
constexpr std::uint64_t kExactSeedOffset = 0x9E3779B97F4A7C15ULL;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ConfigError(field + ": " + what);
}

void reject_unknown_keys(const json& obj, const std::string& where, const std::set<std::string>& allowed) {
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.contains(key)) {
      fail(where.empty() ? key : where + "." + key, "unknown field");
    }
  }
}

const json& require(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) {
    fail(where.empty() ? key : where + "." + key, "missing required field");
  }
  return obj.at(key);
}

double as_number(const json& v, const std::string& field) {
  if (!v.is_number()) fail(field, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(field, "must be finite");
  return x;
}

std::uint64_t as_unsigned(const json& v, const std::string& field) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(v.get<std::int64_t>());
  fail(field, "expected a nonnegative integer");
}

std::vector<double> as_number_array(const json& v, const std::string& field) {
  if (!v.is_array()) fail(field, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(as_number(v[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

KernelSpec parse_kernel(const json& k) {
  if (!k.is_object()) fail("kernel", "expected an object");
  const json& fam = require(k, "family", "kernel");
  if (!fam.is_string()) fail("kernel.family", "expected a string");
  const std::string family = fam.get<std::string>();
  const auto num = [&](const char* key) { return as_number(require(k, key, "kernel"), std::string("kernel.") + key); };
  try {
    if (family == "zero") {
      reject_unknown_keys(k, "kernel", {"family"});
      return KernelSpec::zero();
    }
    if (family == "exponential") {
      reject_unknown_keys(k, "kernel", {"family", "c", "b"});
      return KernelSpec::exponential(num("c"), num("b"));
    }
    if (family == "fractional") {
      reject_unknown_keys(k, "kernel", {"family", "c", "alpha", "hurst"});
      if (k.contains("alpha") == k.contains("hurst")) {
        fail("kernel", "fractional kernel needs exactly one of alpha, hurst");
      }
      return k.contains("hurst") ? KernelSpec::fractional_hurst(num("c"), num("hurst"))
                                 : KernelSpec::fractional(num("c"), num("alpha"));
    }
    if (family == "gamma") {
      reject_unknown_keys(k, "kernel", {"family", "c", "b", "alpha"});
      return KernelSpec::gamma(num("c"), num("b"), num("alpha"));
    }
    if (family == "mittag_leffler") {
      reject_unknown_keys(k, "kernel", {"family", "c", "rate", "alpha"});
      return KernelSpec::mittag_leffler(num("c"), num("rate"), num("alpha"));
    }
    if (family == "tempered_mittag_leffler") {
      reject_unknown_keys(k, "kernel", {"family", "c", "rate", "b", "alpha"});
      return KernelSpec::tempered_mittag_leffler(num("c"), num("rate"), num("b"), num("alpha"));
    }
    if (family == "sum_of_exponentials") {
      reject_unknown_keys(k, "kernel", {"family", "c", "b"});
      return KernelSpec::sum_of_exponentials(as_number_array(require(k, "c", "kernel"), "kernel.c"),
                                             as_number_array(require(k, "b", "kernel"), "kernel.b"));
    }
  } catch (const DomainError& e) {
    fail("kernel", e.what());
  } catch (const UnsupportedError& e) {
    fail("kernel", e.what());
  }
  fail("kernel.family", "unknown family '" + family + "'");
}

Baseline parse_baseline(const json& b) {
  if (!b.is_object()) fail("baseline", "expected an object");
  reject_unknown_keys(b, "baseline", {"mu"});
  const double mu = as_number(require(b, "mu", "baseline"), "baseline.mu");
  if (mu < 0.0) fail("baseline.mu", "must be >= 0");
  return Baseline::constant(mu);
}

Outputs parse_outputs(const json& o) {
  Outputs out;
  if (!o.is_object()) fail("outputs", "expected an object");
  reject_unknown_keys(o, "outputs", {"laplace", "marginals", "time_change", "timing", "trajectories"});
  if (o.contains("laplace")) {
    const json& l = o.at("laplace");
    if (!l.is_object()) fail("outputs.laplace", "expected an object");
    reject_unknown_keys(l, "outputs.laplace", {"w"});
    out.laplace_w = as_number_array(require(l, "w", "outputs.laplace"), "outputs.laplace.w");
    for (std::size_t i = 0; i < out.laplace_w.size(); ++i) {
      if (out.laplace_w[i] > 0.0) fail("outputs.laplace.w[" + std::to_string(i) + "]", "must be <= 0");
    }
  }
  const auto flag = [&](const char* key, bool& dst) {
    if (!o.contains(key)) return;
    if (!o.at(key).is_boolean()) fail(std::string("outputs.") + key, "expected a boolean");
    dst = o.at(key).get<bool>();
  };
  flag("marginals", out.marginals);
  flag("time_change", out.time_change);
  flag("timing", out.timing);
  if (o.contains("trajectories")) {
    const json& t = o.at("trajectories");
    if (!t.is_array()) fail("outputs.trajectories", "expected an array of path indices");
    for (std::size_t i = 0; i < t.size(); ++i) {
      out.trajectories.push_back(as_unsigned(t[i], "outputs.trajectories[" + std::to_string(i) + "]"));
    }
  }
  return out;
}

void check_scheme_kernel(const SchemeId& s, const KernelSpec& k) {
  if (s.is_exact()) {
    if (s.exact == ExactMethod::Ogata && !std::holds_alternative<ExponentialKernel>(k.params())) {
      try {
        (void)kernel_envelope(k, 1.0, 1.0);
      } catch (const std::invalid_argument& e) {
        fail("schemes", std::string("ogata: ") + e.what());
      }
    }
    return;
  }
  const std::string name = to_string(*s.grid);
  switch (*s.grid) {
    case SchemeVariant::ResolventIVi:
      if (!has_resolvent(k)) fail("schemes", name + " needs a kernel with a closed-form resolvent");
      break;
    case SchemeVariant::MarkovIVi:
      if (k.family() != KernelFamily::Exponential) fail("schemes", name + " needs an exponential kernel");
      break;
    case SchemeVariant::MultifactorIVi:
      if (k.family() != KernelFamily::SumOfExponentials) {
        fail("schemes", name + " needs a sum_of_exponentials kernel");
      }
      break;
    default:
      break;
  }
}

std::string format_w(double w) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", w);
  return buf;
}

void add_estimate(std::vector<StatRow>& rows, std::string name, const EstimateWithError& e) {
  rows.push_back(StatRow{std::move(name), e.value, e.std_error, e.n_samples});
}

// Per-path scalars collected by the sinks, indexed by path.
struct PathSamples {
  std::vector<double> count;
  std::vector<double> lambda;
  std::vector<double> quadratic_variation;
  std::vector<double> capped;
  std::vector<double> candidates;
  std::vector<std::vector<double>> jump_times;

  explicit PathSamples(std::size_t paths, bool keep_jumps)
      : count(paths), lambda(paths), quadratic_variation(paths), capped(paths), candidates(paths) {
    if (keep_jumps) jump_times.resize(paths);
  }
};

void compute_stats(const ExperimentConfig& cfg, const PathSamples& s, bool grid, BatchResult& out) {
  const Outputs& o = cfg.outputs;
  for (double w : o.laplace_w) {
    add_estimate(out.stats, "laplace_N_T(w=" + format_w(w) + ")", laplace_estimate(s.count, w));
    add_estimate(out.stats, "laplace_Lambda_T(w=" + format_w(w) + ")", laplace_estimate(s.lambda, w));
  }
  if (o.marginals) {
    add_estimate(out.stats, "mean_N_T", mean_estimate(s.count));
    add_estimate(out.stats, "mean_Lambda_T", mean_estimate(s.lambda));
    std::vector<double> diff(s.count.size());
    for (std::size_t p = 0; p < diff.size(); ++p) diff[p] = s.count[p] - s.lambda[p];
    add_estimate(out.stats, "mean_N_T_minus_Lambda_T", mean_estimate(diff));
    if (grid) {
      add_estimate(out.stats, "mean_quadratic_variation_Z", mean_estimate(s.quadratic_variation));
    }
    if (grid && out.scheme == to_string(SchemeVariant::ResolventIVi)) {
      add_estimate(out.stats, "mean_capped_steps", mean_estimate(s.capped));
    }
    out.count_T = s.count;
    out.lambda_T = s.lambda;
  }
  if (o.time_change) {
    out.time_change.reserve(s.jump_times.size());
    std::vector<double> pass;
    std::vector<double> pvals;
    for (const auto& times : s.jump_times) {
      if (times.empty()) {
        out.time_change.push_back(KSResult{0.0, 1.0, 0});
        continue;
      }
      const TimeChangeResult t = time_change_test(EventList{times}, cfg.kernel, cfg.baseline);
      out.time_change.push_back(t.ks);
      pass.push_back(t.ks.p_value > 0.05 ? 1.0 : 0.0);
      pvals.push_back(t.ks.p_value);
    }
    if (!pass.empty()) {
      add_estimate(out.stats, "time_change_ks_pass_rate(p>0.05)", mean_estimate(pass));
      add_estimate(out.stats, "time_change_ks_p_value", mean_estimate(pvals));
    }
  }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

BatchResult run_grid(const ExperimentConfig& cfg, SchemeVariant v, std::size_t n, unsigned threads) {
  BatchResult out;
  out.scheme = to_string(v);
  out.n = n;
  out.paths = cfg.paths;
  out.threads = threads;
  SchemeConfig sc;
  sc.kernel = cfg.kernel;
  sc.baseline = cfg.baseline;
  sc.horizon = cfg.horizon;
  sc.steps = n;
  sc.emit_jump_times = cfg.outputs.time_change;
  sc.variant = v;
  std::optional<GridScheme> scheme;
  try {
    scheme.emplace(sc);
  } catch (const WellPosednessError& e) {
    out.error = e.what();
    out.ill_posed = true;
    return out;
  }
  PathSamples s(cfg.paths, cfg.outputs.time_change);
  const auto start = std::chrono::steady_clock::now();
  run_scheme_paths(*scheme, RunOptions{cfg.seed, cfg.paths, threads}, [&](std::uint64_t p, PathRecord&& rec) {
    double qv = 0.0;
    for (std::size_t i = 0; i < rec.n_inc.size(); ++i) {
      const double dz = static_cast<double>(rec.n_inc[i]) - rec.lambda_inc[i];
      qv += dz * dz;
    }
    s.count[p] = static_cast<double>(rec.total_count());
    s.lambda[p] = rec.total_lambda();
    s.quadratic_variation[p] = qv;
    s.capped[p] = static_cast<double>(rec.capped_steps);
    if (rec.jump_times) s.jump_times[p] = std::move(*rec.jump_times);
  });
  out.wall_clock_seconds = seconds_since(start);
  out.mean_events = mean_estimate(s.count).value;
  compute_stats(cfg, s, true, out);
  return out;
}

BatchResult run_exact(const ExperimentConfig& cfg, ExactMethod m, unsigned threads) {
  BatchResult out;
  out.scheme = SchemeId{std::nullopt, m}.name();
  out.paths = cfg.paths;
  out.threads = threads;
  PathSamples s(cfg.paths, cfg.outputs.time_change);
  const auto start = std::chrono::steady_clock::now();
  run_exact_paths(
      m, cfg.kernel, cfg.baseline, cfg.horizon, RunOptions{cfg.seed + kExactSeedOffset, cfg.paths, threads},
      [&](std::uint64_t p, EventList&& e, const SamplerStats& st) {
        s.count[p] = static_cast<double>(e.times.size());
        s.lambda[p] = compensator(e, cfg.kernel, cfg.baseline, cfg.horizon);
        s.candidates[p] = static_cast<double>(st.candidates);
        if (!s.jump_times.empty()) s.jump_times[p] = std::move(e.times);
      },
      cfg.thinning_epsilon);
  out.wall_clock_seconds = seconds_since(start);
  out.mean_events = mean_estimate(s.count).value;
  out.mean_candidates = mean_estimate(s.candidates).value;
  compute_stats(cfg, s, false, out);
  return out;
}

// Two-sample comparisons of every grid result against the first exact result.
void add_reference_comparisons(std::vector<BatchResult>& results) {
  const auto ref = std::find_if(results.begin(), results.end(),
                                [](const BatchResult& r) { return r.n == 0 && !r.error && !r.lambda_T.empty(); });
  if (ref == results.end()) return;
  std::vector<std::uint64_t> ref_counts(ref->count_T.begin(), ref->count_T.end());
  for (BatchResult& r : results) {
    if (r.n == 0 || r.error || r.lambda_T.empty()) continue;
    const KSResult ks = ks_two_sample(r.lambda_T, ref->lambda_T);
    const std::string suffix = "_vs_" + ref->scheme;
    r.stats.push_back({"ks_Lambda_T" + suffix + "_D", ks.statistic, 0.0, r.lambda_T.size()});
    r.stats.push_back({"ks_Lambda_T" + suffix + "_p_value", ks.p_value, 0.0, r.lambda_T.size()});
    std::vector<std::uint64_t> counts(r.count_T.begin(), r.count_T.end());
    const ChiSquareResult chi = chi_square_two_sample(counts, ref_counts);
    r.stats.push_back({"chi2_N_T" + suffix + "_p_value", chi.p_value, 0.0, counts.size()});
  }
}

// Numerical failures (e.g. count overflow on an explosive kernel) end only the
// affected (scheme, n) pair.
template <class F>
BatchResult guarded(const std::string& scheme, std::size_t n, F&& run) {
  try {
    return run();
  } catch (const OverflowError& e) {
    BatchResult out;
    out.scheme = scheme;
    out.n = n;
    out.error = e.what();
    return out;
  } catch (const DomainError& e) {
    BatchResult out;
    out.scheme = scheme;
    out.n = n;
    out.error = e.what();
    return out;
  }
}

std::ofstream open_output(const std::filesystem::path& file) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  std::ofstream f(file, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + file.string() + " for writing");
  return f;
}

std::string stem_for(const BatchResult& r) {
  return r.scheme + "_n" + std::to_string(r.n);
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string SchemeId::name() const {
  if (grid) return to_string(*grid);
  return exact == ExactMethod::Population ? "population" : "ogata";
}

SchemeId scheme_id_from_string(const std::string& name) {
  if (name == "population") return SchemeId{std::nullopt, ExactMethod::Population};
  if (name == "ogata") return SchemeId{std::nullopt, ExactMethod::Ogata};
  return SchemeId{scheme_from_string(name), ExactMethod::Population};
}

ExperimentConfig parse_config(const json& doc) {
  if (!doc.is_object()) fail("config", "expected a JSON object");
  reject_unknown_keys(doc, "", {"schemes", "kernel", "baseline", "horizon", "steps", "paths", "seed", "threads",
                                "thinning_epsilon", "outputs", "output_dir"});
  ExperimentConfig cfg;
  cfg.source = doc;

  const json& schemes = require(doc, "schemes", "");
  if (!schemes.is_array() || schemes.empty()) fail("schemes", "expected a nonempty array of scheme names");
  for (std::size_t i = 0; i < schemes.size(); ++i) {
    const std::string field = "schemes[" + std::to_string(i) + "]";
    if (!schemes[i].is_string()) fail(field, "expected a string");
    try {
      cfg.schemes.push_back(scheme_id_from_string(schemes[i].get<std::string>()));
    } catch (const ConfigError&) {
      fail(field, "unknown scheme '" + schemes[i].get<std::string>() +
                      "' (expected ivi, resolvent_ivi, explicit, markov_ivi, multifactor_ivi, population or ogata)");
    }
  }

  cfg.kernel = parse_kernel(require(doc, "kernel", ""));
  cfg.baseline = parse_baseline(require(doc, "baseline", ""));
  cfg.horizon = as_number(require(doc, "horizon", ""), "horizon");
  if (!(cfg.horizon > 0.0)) fail("horizon", "must be positive");

  const bool any_grid = std::any_of(cfg.schemes.begin(), cfg.schemes.end(), [](const SchemeId& s) { return !s.is_exact(); });
  if (doc.contains("steps")) {
    const json& st = doc.at("steps");
    if (!st.is_array() || st.empty()) fail("steps", "expected a nonempty array of step counts");
    for (std::size_t i = 0; i < st.size(); ++i) {
      const std::string field = "steps[" + std::to_string(i) + "]";
      const std::uint64_t n = as_unsigned(st[i], field);
      if (n == 0) fail(field, "must be >= 1");
      cfg.steps.push_back(static_cast<std::size_t>(n));
    }
  } else if (any_grid) {
    fail("steps", "missing required field (grid schemes need step counts)");
  }

  const std::uint64_t paths = as_unsigned(require(doc, "paths", ""), "paths");
  if (paths == 0) fail("paths", "must be >= 1");
  cfg.paths = static_cast<std::size_t>(paths);
  if (doc.contains("seed")) cfg.seed = as_unsigned(doc.at("seed"), "seed");
  if (doc.contains("threads")) {
    const std::uint64_t t = as_unsigned(doc.at("threads"), "threads");
    if (t > 4096) fail("threads", "must be <= 4096");
    cfg.threads = static_cast<unsigned>(t);
  }
  if (doc.contains("thinning_epsilon")) {
    const double eps = as_number(doc.at("thinning_epsilon"), "thinning_epsilon");
    if (eps < 0.0) fail("thinning_epsilon", "must be >= 0");
    cfg.thinning_epsilon = eps;
  }
  if (doc.contains("outputs")) cfg.outputs = parse_outputs(doc.at("outputs"));
  if (doc.contains("output_dir")) {
    if (!doc.at("output_dir").is_string()) fail("output_dir", "expected a string");
    cfg.output_dir = doc.at("output_dir").get<std::string>();
  }
  for (const SchemeId& s : cfg.schemes) check_scheme_kernel(s, cfg.kernel);
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError(file.string() + ": cannot open config file");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(file.string() + ": " + e.what());
  }
  return parse_config(doc);
}

std::vector<BatchResult> run_experiment(const ExperimentConfig& cfg, unsigned threads) {
  std::vector<BatchResult> results;
  for (const SchemeId& s : cfg.schemes) {
    if (s.is_exact()) {
      results.push_back(guarded(s.name(), 0, [&] { return run_exact(cfg, s.exact, threads); }));
      continue;
    }
    for (std::size_t n : cfg.steps) {
      results.push_back(guarded(s.name(), n, [&] { return run_grid(cfg, *s.grid, n, threads); }));
    }
  }
  if (cfg.outputs.marginals) add_reference_comparisons(results);
  return results;
}

void write_results_csv(const std::vector<BatchResult>& results, const std::filesystem::path& file) {
  std::ofstream f = open_output(file);
  f << "scheme,n,statistic,value,std_error,n_samples\n";
  for (const BatchResult& r : results) {
    for (const StatRow& s : r.stats) {
      f << r.scheme << ',' << r.n << ',' << s.statistic << ',' << format_double(s.value) << ','
        << format_double(s.std_error) << ',' << s.n_samples << '\n';
    }
  }
}

void write_timing_csv(const std::vector<BatchResult>& results, const std::filesystem::path& file) {
  const BatchResult* ref = nullptr;
  for (const BatchResult& r : results) {
    if (r.error) continue;
    if (ref == nullptr || (r.n == 0 && ref->n != 0)) ref = &r;
  }
  std::ofstream f = open_output(file);
  f << "scheme,n,paths,threads,wall_clock_seconds,seconds_per_path,mean_events,mean_candidates,reference,"
       "speedup_vs_reference\n";
  for (const BatchResult& r : results) {
    if (r.error) continue;
    const double speedup = ref->wall_clock_seconds / r.wall_clock_seconds;
    f << r.scheme << ',' << r.n << ',' << r.paths << ',' << r.threads << ',' << format_double(r.wall_clock_seconds)
      << ',' << format_double(r.wall_clock_seconds / static_cast<double>(r.paths)) << ','
      << format_double(r.mean_events) << ',' << format_double(r.mean_candidates) << ',' << stem_for(*ref) << ','
      << format_double(speedup) << '\n';
  }
}

void write_summary_json(const ExperimentConfig& cfg, const std::vector<BatchResult>& results,
                        const std::filesystem::path& file) {
  json out;
  out["config"] = cfg.source;
  out["results"] = json::array();
  for (const BatchResult& r : results) {
    json j;
    j["scheme"] = r.scheme;
    j["n"] = r.n;
    j["paths"] = r.paths;
    j["threads"] = r.threads;
    if (r.error) {
      j["error"] = *r.error;
      j["error_kind"] = r.ill_posed ? "well_posedness" : "other";
    } else {
      j["wall_clock_seconds"] = r.wall_clock_seconds;
      j["mean_events"] = r.mean_events;
      if (r.n == 0) j["mean_candidates"] = r.mean_candidates;
      j["stats"] = json::array();
      for (const StatRow& s : r.stats) {
        j["stats"].push_back({{"statistic", s.statistic},
                              {"value", s.value},
                              {"std_error", s.std_error},
                              {"n_samples", s.n_samples}});
      }
    }
    out["results"].push_back(std::move(j));
  }
  std::ofstream f = open_output(file);
  f << out.dump(2) << '\n';
}

void write_path_samples(const std::vector<BatchResult>& results, const std::filesystem::path& dir) {
  for (const BatchResult& r : results) {
    if (!r.lambda_T.empty()) {
      std::ofstream f = open_output(dir / ("marginals_" + stem_for(r) + ".csv"));
      f << "path,N_T,Lambda_T\n";
      for (std::size_t p = 0; p < r.lambda_T.size(); ++p) {
        f << p << ',' << format_double(r.count_T[p]) << ',' << format_double(r.lambda_T[p]) << '\n';
      }
    }
    if (!r.time_change.empty()) {
      std::ofstream f = open_output(dir / ("timechange_" + stem_for(r) + ".csv"));
      f << "path,events,ks_statistic,p_value\n";
      for (std::size_t p = 0; p < r.time_change.size(); ++p) {
        const KSResult& k = r.time_change[p];
        f << p << ',' << k.n << ',' << format_double(k.statistic) << ',' << format_double(k.p_value) << '\n';
      }
    }
  }
}

void emit_trajectory(const ExperimentConfig& cfg, SchemeVariant variant, std::size_t steps, std::uint64_t path,
                     const std::filesystem::path& file) {
  SchemeConfig sc;
  sc.kernel = cfg.kernel;
  sc.baseline = cfg.baseline;
  sc.horizon = cfg.horizon;
  sc.steps = steps;
  sc.variant = variant;
  const GridScheme scheme(sc);
  RngStream r(cfg.seed, path);
  const PathRecord rec = scheme.simulate(r);
  const std::vector<double> lambda = reconstruct_intensity(rec, cfg.kernel, cfg.baseline, cfg.horizon);
  const Grid& g = scheme.grid();

  std::ofstream f = open_output(file);
  f << "t,N,Lambda,lambda\n";
  std::uint64_t count = 0;
  double integrated = 0.0;
  for (std::size_t i = 0; i <= steps; ++i) {
    f << format_double(g.time(i)) << ',' << count << ',' << format_double(integrated) << ','
      << format_double(lambda[i]) << '\n';
    if (i < steps) {
      count += rec.n_inc[i];
      integrated += rec.lambda_inc[i];
    }
  }
}

}  // namespace hawkes::cli
