#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "pulsestream/cavity.hpp"
#include "pulsestream/classifier.hpp"
#include "pulsestream/dark_combinatorics.hpp"
#include "pulsestream/error.hpp"
#include "pulsestream/format.hpp"
#include "pulsestream/pulse_train.hpp"
#include "pulsestream/states.hpp"

namespace pulsestream::cli {

namespace {

using nlohmann::json;

enum class Format { Csv, Json };

struct OutputOptions {
  Format format;
  std::string path;
};

// Locked dark phases are listed in count-dark output only up to this M.
constexpr std::size_t kMaxListedPhases = 1024;

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
  const std::map<std::string, Format> names{{"csv", Format::Csv},
                                            {"json", Format::Json}};
  cmd->add_option("--format", opts.format, "Output format (csv|json)")
      ->transform(CLI::CheckedTransformer(names, CLI::ignore_case));
  cmd->add_option("--output,-o", opts.path,
                  "Write to this file instead of stdout; relative paths are "
                  "resolved against $" + std::string(kOutputDirEnv));
}

std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) {
      p = std::filesystem::path(dir) / p;
    }
  }
  return p;
}

// Writes `text` to the requested destination.
void emit(const OutputOptions& opts, const std::string& text,
          std::ostream& out) {
  if (opts.path.empty()) {
    out << text;
    return;
  }
  const auto path = resolve_output(opts.path);
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw ConfigurationError("cannot open output file " + path.string());
  }
  file << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json envelope(const std::string& command, json params, json results) {
  return {{"command", command},
          {"params", std::move(params)},
          {"results", std::move(results)}};
}

double parse_phase_fraction(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    throw RangeError("--phase-frac expects K/M, got '" + text + "'");
  }
  long long k = 0;
  long long m = 0;
  const auto parse = [&](std::string_view s, long long& v) {
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    return ec == std::errc{} && ptr == s.data() + s.size();
  };
  const std::string_view sv(text);
  if (!parse(sv.substr(0, slash), k) || !parse(sv.substr(slash + 1), m) ||
      m <= 0) {
    throw RangeError("--phase-frac expects integers K/M with M > 0, got '" +
                     text + "'");
  }
  return kTwoPi * static_cast<double>(k) / static_cast<double>(m);
}

StateFamily parse_family(const std::string& name) {
  if (name == "single_photon") return StateFamily::SinglePhoton;
  if (name == "coherent") return StateFamily::Coherent;
  throw RangeError("unknown family '" + name + "'");
}

// ---- pulse-train ----------------------------------------------------------

struct PulseTrainArgs {
  LaserField field;
  std::size_t samples = 1024;
  std::size_t periods = 1;
  bool unlocked = false;
  std::uint64_t seed = 0;
  OutputOptions out{Format::Csv, {}};
};

std::string run_pulse_train(const PulseTrainArgs& a) {
  a.field.validate();
  const PulseSeries series =
      a.unlocked ? unlocked_intensity(a.field, a.seed, a.samples, a.periods)
                 : intensity_series(a.field, a.samples, a.periods);
  std::optional<PulseMetrics> metrics;
  std::string unresolved;
  try {
    metrics = pulse_metrics(series);
  } catch (const ResolutionError& e) {
    unresolved = e.what();
  }
  const double mode_total = series.field.mode_total();
  const double expected_peak =
      a.unlocked ? 0.0 : std::pow(a.field.e0 * mode_total, 2);

  if (a.out.format == Format::Csv) {
    std::ostringstream os;
    write_series_csv(os, series, metrics ? &*metrics : nullptr);
    if (!a.unlocked) os << "# peak_expected=" << format_number(expected_peak) << '\n';
    if (!unresolved.empty()) os << "# metrics_error=" << unresolved << '\n';
    return os.str();
  }
  json results = series_json(series);
  results["metrics"] = metrics ? metrics_json(*metrics) : json(nullptr);
  if (!a.unlocked) results["peak_expected"] = round_to_output(expected_peak);
  if (!unresolved.empty()) results["metrics_error"] = unresolved;
  json params{{"n_side", a.field.n_side},
              {"delta_omega", round_to_output(a.field.delta_omega)},
              {"phi", round_to_output(a.field.phi)},
              {"e0", round_to_output(a.field.e0)},
              {"omega0", round_to_output(a.field.omega0)},
              {"samples", a.samples},
              {"periods", a.periods},
              {"unlocked", a.unlocked},
              {"seed", a.seed}};
  return dump(envelope("pulse-train", std::move(params), std::move(results)));
}

// ---- classify -------------------------------------------------------------

struct ClassifyArgs {
  std::size_t modes = 0;
  std::string family = "single_photon";
  double phase = 0.0;
  std::string phase_frac;
  double tol = kDefaultTolerance;
  double alpha = 1.0;
  OutputOptions out{Format::Json, {}};
};

std::string run_classify(const ClassifyArgs& a) {
  const StateFamily family = parse_family(a.family);
  const double phase =
      a.phase_frac.empty() ? a.phase : parse_phase_fraction(a.phase_frac);
  if (a.modes < 1) throw RangeError("--m must be >= 1");
  const ModePhases locked = ModePhases::locked(a.modes, phase);
  const ModePhases detection = ModePhases::zeros(a.modes);
  const Classification c =
      family == StateFamily::SinglePhoton
          ? classify_fock(single_photon_state(locked), detection, a.tol)
          : classify_coherent(CoherentSpec{Complex{a.alpha}, locked},
                              detection, a.tol);

  if (a.out.format == Format::Csv) {
    std::ostringstream os;
    os << "phase,beta,beta_max,label,tol\n"
       << format_number(phase) << ',' << format_number(c.beta) << ','
       << format_number(c.beta_max) << ',' << to_string(c.label) << ','
       << format_number(c.tol) << '\n';
    return os.str();
  }
  json params{{"m", a.modes},
              {"family", std::string(to_string(family))},
              {"phase", round_to_output(phase)},
              {"tol", round_to_output(a.tol)}};
  if (family == StateFamily::Coherent) params["alpha"] = round_to_output(a.alpha);
  json results{{"beta", round_to_output(c.beta)},
               {"beta_max", round_to_output(c.beta_max)},
               {"label", std::string(to_string(c.label))},
               {"tol", round_to_output(c.tol)}};
  return dump(envelope("classify", std::move(params), std::move(results)));
}

// ---- count-dark -----------------------------------------------------------

struct CountDarkArgs {
  std::size_t modes = 0;
  bool enumerate = false;
  OutputOptions out{Format::Json, {}};
};

std::string run_count_dark(const CountDarkArgs& a) {
  const DarkCensus census = dark_census(a.modes, a.enumerate);
  const std::string analytic =
      census.analytic_count ? census.analytic_count->str() : std::string();
  const std::string status =
      census.analytic_count ? "ok" : "unsupported: closed form needs even M";

  if (a.out.format == Format::Csv) {
    std::ostringstream os;
    os << "key,value\n"
       << "m," << census.modes << '\n'
       << "analytic_count," << analytic << '\n'
       << "analytic_status," << status << '\n'
       << "enumerated_count,"
       << (census.enumerated_count ? std::to_string(*census.enumerated_count)
                                   : std::string())
       << '\n'
       << "locked_dark_count," << census.locked_dark_count << '\n'
       << "bright_count," << census.bright_count << '\n'
       << "bright_to_dark_ratio," << format_number(census.ratio) << '\n';
    return os.str();
  }
  json results{
      {"m", census.modes},
      {"analytic_count", census.analytic_count ? json(analytic) : json(nullptr)},
      {"analytic_status", status},
      {"enumerated_count", census.enumerated_count
                               ? json(*census.enumerated_count)
                               : json(nullptr)},
      {"locked_dark_count", census.locked_dark_count},
      {"bright_count", census.bright_count},
      {"bright_to_dark_ratio", round_to_output(census.ratio)}};
  if (census.modes <= kMaxListedPhases) {
    json phases = json::array();
    for (double p : locked_dark_phases(census.modes)) {
      phases.push_back(round_to_output(p));
    }
    results["locked_dark_phases"] = std::move(phases);
  }
  json params{{"m", a.modes}, {"enumerate", a.enumerate}};
  return dump(envelope("count-dark", std::move(params), std::move(results)));
}

// ---- estimate-cavity ------------------------------------------------------

struct CavityArgs {
  double lambda0_nm = 0.0;
  double dlambda_nm = 0.0;
  double l_mm = 0.0;
  double n_index = 1.0;
  double pulse_ns = 0.0;
  double rep_ms = 0.0;
  OutputOptions out{Format::Json, {}};
};

std::string run_estimate_cavity(const CavityArgs& a) {
  CavityDesign design;
  design.lambda0 = units::nm_to_m(a.lambda0_nm);
  design.dlambda_g = units::nm_to_m(a.dlambda_nm);
  design.length = units::mm_to_m(a.l_mm);
  design.n_index = a.n_index;
  design.pulse_duration = units::ns_to_s(a.pulse_ns);
  design.rep_period = units::ms_to_s(a.rep_ms);
  const RatioReport r = ratio_report(design);

  json results{{"delta_omega", round_to_output(r.delta_omega)},
               {"delta_omega_g", round_to_output(r.delta_omega_g)},
               {"M", r.modes},
               {"theory_ratio", round_to_output(r.theory_ratio)},
               {"measured_ratio", round_to_output(r.measured_ratio)},
               {"orders_match", r.orders_match},
               {"published_M", kPublishedModeCount},
               {"published_ratio", kPublishedRatio},
               {"published_delta_omega_g", kPublishedGainBandwidth}};
  if (a.out.format == Format::Csv) {
    std::ostringstream os;
    os << "key,value\n";
    for (const auto& [key, value] : results.items()) {
      os << key << ',';
      if (value.is_number_float()) {
        os << format_number(value.get<double>());
      } else {
        os << value.dump();
      }
      os << '\n';
    }
    return os.str();
  }
  json params{{"lambda0_nm", round_to_output(a.lambda0_nm)},
              {"dlambda_nm", round_to_output(a.dlambda_nm)},
              {"l_mm", round_to_output(a.l_mm)},
              {"n", round_to_output(a.n_index)},
              {"pulse_ns", round_to_output(a.pulse_ns)},
              {"rep_ms", round_to_output(a.rep_ms)}};
  return dump(envelope("estimate-cavity", std::move(params), std::move(results)));
}

// ---- scan-phase -----------------------------------------------------------

struct ScanArgs {
  std::size_t modes = 0;
  std::size_t grid = 0;  // 0 -> 4M
  std::string family = "single_photon";
  double tol = kDefaultTolerance;
  OutputOptions out{Format::Csv, {}};
};

std::string run_scan_phase(const ScanArgs& a) {
  const StateFamily family = parse_family(a.family);
  const std::size_t grid = a.grid == 0 ? 4 * a.modes : a.grid;
  const auto points = scan_phase(a.modes, family, grid, a.tol);
  std::size_t dark = 0, bright = 0, intermediate = 0;
  for (const auto& p : points) {
    switch (p.classification.label) {
      case Brightness::Dark: ++dark; break;
      case Brightness::Bright: ++bright; break;
      case Brightness::Intermediate: ++intermediate; break;
    }
  }
  if (a.out.format == Format::Csv) {
    std::ostringstream os;
    os << "phase,beta,label\n";
    for (const auto& p : points) {
      os << format_number(p.phase) << ','
         << format_number(p.classification.beta) << ','
         << to_string(p.classification.label) << '\n';
    }
    os << "# dark_count=" << dark << '\n'
       << "# bright_count=" << bright << '\n'
       << "# intermediate_count=" << intermediate << '\n';
    return os.str();
  }
  json rows = json::array();
  for (const auto& p : points) {
    rows.push_back({{"phase", round_to_output(p.phase)},
                    {"beta", round_to_output(p.classification.beta)},
                    {"label", std::string(to_string(p.classification.label))}});
  }
  json params{{"m", a.modes},
              {"grid", grid},
              {"family", std::string(to_string(family))},
              {"tol", round_to_output(a.tol)}};
  json results{{"points", std::move(rows)},
               {"dark_count", dark},
               {"bright_count", bright},
               {"intermediate_count", intermediate}};
  return dump(envelope("scan-phase", std::move(params), std::move(results)));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Bright/dark state simulator for multimode interference and "
               "mode-locked pulse trains",
               "pulsestream"};
  app.require_subcommand(1);

  PulseTrainArgs pulse;
  auto* pulse_cmd = app.add_subcommand(
      "pulse-train", "Locked (or randomly phased) mode-sum intensity series");
  pulse_cmd->add_option("--n-side", pulse.field.n_side,
                        "Modes run from -n_side to n_side")->required();
  pulse_cmd->add_option("--delta-omega", pulse.field.delta_omega,
                        "Mode spacing in rad/s (default 2 pi, period 1)");
  pulse_cmd->add_option("--phi", pulse.field.phi, "Locked phase offset, rad");
  pulse_cmd->add_option("--e0", pulse.field.e0, "Per-mode field amplitude");
  pulse_cmd->add_option("--omega0", pulse.field.omega0,
                        "Carrier frequency, rad/s (metadata only)");
  pulse_cmd->add_option("--samples", pulse.samples, "Samples per period")
      ->check(CLI::PositiveNumber);
  pulse_cmd->add_option("--periods", pulse.periods, "Number of periods")
      ->check(CLI::PositiveNumber);
  pulse_cmd->add_flag("--unlocked", pulse.unlocked,
                      "Draw independent random mode phases");
  pulse_cmd->add_option("--seed", pulse.seed, "Seed for --unlocked");
  add_output_options(pulse_cmd, pulse.out);

  ClassifyArgs classify;
  auto* classify_cmd = app.add_subcommand(
      "classify", "Classify a locked-phase state as Dark/Bright/Intermediate");
  classify_cmd->add_option("--m", classify.modes, "Number of modes")->required();
  classify_cmd->add_option("--family", classify.family,
                           "single_photon or coherent")
      ->check(CLI::IsMember({"single_photon", "coherent"}));
  auto* phase_opt =
      classify_cmd->add_option("--phase", classify.phase, "Locked phase step, rad");
  classify_cmd->add_option("--phase-frac", classify.phase_frac,
                           "Locked phase step as K/M, meaning 2 pi K / M")
      ->excludes(phase_opt);
  classify_cmd->add_option("--tol", classify.tol, "Relative tolerance");
  classify_cmd->add_option("--alpha", classify.alpha,
                           "Coherent amplitude (coherent family)");
  add_output_options(classify_cmd, classify.out);

  CountDarkArgs count;
  auto* count_cmd = app.add_subcommand(
      "count-dark", "Count dark states for pi-multiple and locked phases");
  count_cmd->add_option("--m", count.modes, "Number of modes")->required();
  count_cmd->add_flag("--enumerate", count.enumerate,
                      "Also enumerate sign vectors exhaustively (M <= 24)");
  add_output_options(count_cmd, count.out);

  CavityArgs cavity;
  auto* cavity_cmd = app.add_subcommand(
      "estimate-cavity", "Mode count and bright/dark ratio for a cavity");
  cavity_cmd->add_option("--lambda0-nm", cavity.lambda0_nm,
                         "Centre wavelength, nm")->required();
  cavity_cmd->add_option("--dlambda-nm", cavity.dlambda_nm,
                         "Gain bandwidth, nm")->required();
  cavity_cmd->add_option("--l-mm", cavity.l_mm, "Cavity length, mm")->required();
  cavity_cmd->add_option("--n", cavity.n_index, "Refractive index");
  cavity_cmd->add_option("--pulse-ns", cavity.pulse_ns,
                         "Pulse duration, ns")->required();
  cavity_cmd->add_option("--rep-ms", cavity.rep_ms,
                         "Repetition period, ms")->required();
  add_output_options(cavity_cmd, cavity.out);

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand(
      "scan-phase", "Classify over a grid of locked phase steps in [0, 2 pi)");
  scan_cmd->add_option("--m", scan.modes, "Number of modes")->required();
  scan_cmd->add_option("--grid", scan.grid, "Grid points (default 4M)");
  scan_cmd->add_option("--family", scan.family, "single_photon or coherent")
      ->check(CLI::IsMember({"single_photon", "coherent"}));
  scan_cmd->add_option("--tol", scan.tol, "Relative tolerance");
  add_output_options(scan_cmd, scan.out);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kValidation;
  }

  try {
    if (*pulse_cmd) {
      emit(pulse.out, run_pulse_train(pulse), out);
    } else if (*classify_cmd) {
      emit(classify.out, run_classify(classify), out);
    } else if (*count_cmd) {
      emit(count.out, run_count_dark(count), out);
    } else if (*cavity_cmd) {
      emit(cavity.out, run_estimate_cavity(cavity), out);
    } else if (*scan_cmd) {
      emit(scan.out, run_scan_phase(scan), out);
    }
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kSuccess;
}

}  // namespace pulsestream::cli
