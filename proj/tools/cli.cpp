#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lauricella/lauricella.hpp"

namespace lauricella::cli {

using Json = nlohmann::ordered_json;

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::kMatrices:
      return "matrices";
    case Mode::kVerify:
      return "verify";
    case Mode::kDet:
      return "det";
    case Mode::kSeries:
      return "series";
    case Mode::kSampleParams:
      return "sample-params";
  }
  return "unknown";
}

std::optional<Mode> parse_mode(const std::string& text) {
  for (Mode m : {Mode::kMatrices, Mode::kVerify, Mode::kDet, Mode::kSeries, Mode::kSampleParams}) {
    if (to_string(m) == text) return m;
  }
  return std::nullopt;
}

std::optional<Format> parse_format(const std::string& text) {
  if (text == "json") return Format::kJson;
  if (text == "latex") return Format::kLatex;
  if (text == "csv") return Format::kCsv;
  return std::nullopt;
}

void validate(const RunConfig& cfg) {
  if (cfg.m < 1 || cfg.m > kMaxVariables) throw std::invalid_argument("--m must be in 1..16");
  if (cfg.samples < 1) throw std::invalid_argument("--samples must be >= 1");
  if (cfg.precision < 53) throw std::invalid_argument("--precision must be >= 53 bits");
  if (cfg.order < 0) throw std::invalid_argument("--order must be >= 0");
  if (cfg.max_numerator < 1) throw std::invalid_argument("--max-numerator must be >= 1");
  if (cfg.mode == Mode::kSeries && !cfg.params_file) {
    throw std::invalid_argument("series mode needs --params with a, b, c and x");
  }
  if (cfg.format == Format::kCsv && cfg.mode != Mode::kMatrices) {
    throw std::invalid_argument("csv output is only available for matrices");
  }
  if (cfg.format == Format::kLatex && cfg.mode != Mode::kMatrices) {
    throw std::invalid_argument("latex output is only available for matrices");
  }
}

std::optional<int> parse_args(int argc, const char* const* argv, RunConfig& cfg, std::ostream& out,
                              std::ostream& err) {
  if (const char* env = std::getenv(kPrecisionEnv); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 53) {
      err << "error: " << kPrecisionEnv << " must be an integer >= 53, got '" << env << "'\n";
      return kExitConfigError;
    }
    cfg.precision = v;
  }

  CLI::App app{"Monodromy, intersection and series computations for Lauricella F_C"};
  app.name("lauricella");
  std::string mode = to_string(cfg.mode);
  std::string format = "json";
  std::string params;
  std::string out_path;
  long precision = cfg.precision;
  app.add_option("--m", cfg.m, "number of variables")->check(CLI::Range(1, kMaxVariables));
  app.add_option("--mode", mode, "matrices | verify | det | series | sample-params");
  app.add_option("--params", params, "JSON parameter file");
  app.add_option("--seed", cfg.seed, "seed of the first sampled point");
  app.add_option("--samples", cfg.samples, "number of sampled points");
  app.add_option("--precision", precision, "float precision in bits (default from " +
                                               std::string(kPrecisionEnv) + " or 256)");
  app.add_option("--order", cfg.order, "series truncation order");
  app.add_option("--format", format, "json | latex | csv");
  app.add_option("--out", out_path, "output path (default stdout)");
  app.add_option("--max-numerator", cfg.max_numerator,
                 "bound on numerators and denominators of sampled points");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitConfigError;
  }
  const auto parsed_mode = parse_mode(mode);
  if (!parsed_mode) {
    err << "error: unknown mode '" << mode << "'\n";
    return kExitConfigError;
  }
  const auto parsed_format = parse_format(format);
  if (!parsed_format) {
    err << "error: unknown format '" << format << "'\n";
    return kExitConfigError;
  }
  cfg.mode = *parsed_mode;
  cfg.format = *parsed_format;
  cfg.precision = precision;
  if (!params.empty()) cfg.params_file = params;
  if (!out_path.empty()) cfg.out_path = out_path;
  return std::nullopt;
}

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read parameter file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (!cfg.out_path) {
    out << text;
    return;
  }
  std::ofstream f(*cfg.out_path);
  if (!f) throw ConfigError("cannot write output file '" + *cfg.out_path + "'");
  f << text;
}

Json parse_json(const std::string& text) { return Json::parse(text); }

Json point_json(const ParamPoint& p) { return parse_json(param_point_json(p)); }

ParamPoint load_point(const RunConfig& cfg) {
  ParamPoint p = parse_param_point_json(read_file(*cfg.params_file));
  if (p.m != cfg.m) {
    throw ConfigError("parameter file has " + std::to_string(p.m) + " gamma values but --m is " +
                      std::to_string(cfg.m));
  }
  return p;
}

/// Returns kExitPass when generic, otherwise prints the violations.
int gate_generic(const ParamPoint& p, std::ostream& err) {
  const std::vector<Violation> v = check_genericity(p);
  if (v.empty()) return kExitPass;
  err << "error: parameters are not generic; violated predicates:";
  for (const auto& x : v) err << ' ' << x.label();
  err << '\n';
  return kExitNonGeneric;
}

Report subset_sum_report(const ParamPoint& p) {
  Report r;
  r.title = "subset-sum identities m=" + std::to_string(p.m);
  const SubsetSumReport l = subset_sum_check(p.gamma);
  auto add = [&r](const char* name, IdentityStatus s) {
    if (s == IdentityStatus::kPass) r.pass(name);
    if (s == IdentityStatus::kFail) r.fail(name, "sides differ");
    if (s == IdentityStatus::kSkipped) {
      r.checks.push_back({name, CheckStatus::kSkipped, "a denominator vanishes", std::nullopt});
    }
  };
  add("ratio sum", l.ratio_sum);
  add("reciprocal sum", l.reciprocal_sum);
  add("partition of unity", l.partition_of_unity);
  add("shifted product", l.shifted_product);
  return r;
}

SeriesParams series_point(std::uint64_t seed, int m) {
  std::mt19937_64 rng(seed ^ 0x5eed5eedULL);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(2, 7);
  auto non_integer = [&] {
    while (true) {
      const long p = num(rng), q = den(rng);
      if (p % q != 0) return Scalar::rational(p, q);
    }
  };
  std::vector<Scalar> c;
  for (int k = 0; k < m; ++k) c.push_back(non_integer());
  return SeriesParams(non_integer(), non_integer(), std::move(c));
}

Report series_report(std::uint64_t seed, int m, int order) {
  Report r;
  r.title = "series residuals m=" + std::to_string(m);
  const SeriesParams sp = series_point(seed, m);
  const int effective = std::max(order, 1);
  for (std::uint32_t bits = 0; bits < (1u << m); ++bits) {
    const SubsetIndex s(bits, m);
    if (m > 3 && !s.is_empty() && !s.is_full()) continue;
    const int clean = residual_clean_degree(ec_residual(sp, s, effective));
    r.record("residual of f_" + s.to_string(), clean >= effective - 1,
             "vanishes through degree " + std::to_string(clean));
  }
  return r;
}

Report closed_form_report(const ParamPoint& p, const FaultInjection& faults) {
  Report r;
  r.title = "closed-form determinant m=" + std::to_string(p.m);
  const Scalar brute = det_bruteforce(lambda0_matrix(p).entries);
  Scalar closed = p.m >= 2 ? det_lambda0_closed(p) : det_lambda0_m1(p);
  if (faults.det_sign_flip) closed = -closed;
  std::optional<Witness> w;
  if (brute != closed) w = Witness{"det Lambda0", 0, 0, {}, {}};
  r.record("closed form equals brute-force determinant", brute == closed,
           "brute force " + brute.to_string() + ", closed form " + closed.to_string(), w);
  return r;
}

Json reports_json(const std::vector<Report>& reports, bool& passed) {
  Json arr = Json::array();
  for (const auto& r : reports) {
    passed = passed && r.passed();
    arr.push_back(parse_json(r.to_json()));
  }
  return arr;
}

void print_failures(const std::vector<Report>& reports, const std::string& where, std::ostream& err) {
  for (const auto& r : reports) {
    for (const auto& c : r.checks) {
      if (c.status != CheckStatus::kFail) continue;
      err << "FAIL " << where << " [" << r.title << "] " << c.name;
      if (c.witness) {
        err << " at " << c.witness->matrix << "(" << c.witness->row << "," << c.witness->col << ")";
      }
      if (!c.detail.empty()) err << ": " << c.detail;
      err << '\n';
    }
  }
}

}  // namespace

int cmd_sample_params(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  Json arr = Json::array();
  for (int i = 0; i < cfg.samples; ++i) {
    const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(i);
    Json j;
    j["seed"] = seed;
    const Json point = point_json(sample_generic(seed, cfg.m, cfg.max_numerator));
    for (const auto& [k, v] : point.items()) j[k] = v;
    arr.push_back(std::move(j));
  }
  emit(cfg, arr.dump(2) + "\n", out);
  return kExitPass;
}

int cmd_matrices(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ParamPoint p = cfg.params_file ? load_point(cfg) : sample_generic(cfg.seed, cfg.m, cfg.max_numerator);
  if (const int code = gate_generic(p, err); code != kExitPass) return code;

  std::vector<LabeledMatrix> ms;
  ms.push_back(labeled("H", h_matrix(p)));
  ms.push_back(labeled("M_0", m_0_matrix(p)));
  for (int k = 1; k <= p.m; ++k) ms.push_back(labeled("M_" + std::to_string(k), m_k_matrix(p, k)));
  ms.push_back(labeled("P", basis_change_matrix(p)));
  for (int i = 0; i <= p.m; ++i) {
    ms.push_back(labeled("M'_" + std::to_string(i), m_prime_matrix(p, i)));
  }
  ms.push_back(labeled("Lambda_0", lambda0_matrix(p)));

  std::string text;
  if (cfg.format == Format::kJson) {
    Json doc;
    doc["m"] = p.m;
    doc["point"] = point_json(p);
    Json order = Json::array();
    for (const SubsetIndex& s : basis(p.m)) order.push_back(s.to_string());
    doc["basis_order"] = std::move(order);
    doc["matrices"] = parse_json(matrices_json(ms));
    text = doc.dump(2) + "\n";
  } else if (cfg.format == Format::kLatex) {
    for (const auto& m : ms) text += matrix_latex(m) + "\n";
  } else {
    for (const auto& m : ms) text += "# " + m.name + "\n" + matrix_csv(m, cfg.precision);
  }
  emit(cfg, text, out);
  return kExitPass;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<std::pair<std::optional<std::uint64_t>, ParamPoint>> points;
  if (cfg.params_file) {
    points.emplace_back(std::nullopt, load_point(cfg));
    if (const int code = gate_generic(points.back().second, err); code != kExitPass) return code;
  } else {
    for (int i = 0; i < cfg.samples; ++i) {
      const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(i);
      points.emplace_back(seed, sample_generic(seed, cfg.m, cfg.max_numerator));
    }
  }

  bool all_passed = true;
  Json doc;
  doc["mode"] = "verify";
  doc["m"] = cfg.m;
  doc["samples"] = points.size();
  Json arr = Json::array();
  for (const auto& [seed, p] : points) {
    std::vector<Report> reports;
    VerifyOptions vo;
    vo.seed = seed.value_or(cfg.seed);
    reports.push_back(verify_relations(p, vo));
    reports.push_back(intersection_check(p));
    reports.push_back(all_ones_expansion_check(p));
    reports.push_back(det_decomposition_check(p));
    reports.push_back(closed_form_report(p, cfg.faults));
    if (p.m >= 2) reports.push_back(elimination_check(p));
    reports.push_back(subset_sum_report(p));
    reports.push_back(series_report(seed.value_or(cfg.seed), p.m, cfg.order));

    bool passed = true;
    Json entry;
    entry["seed"] = seed ? Json(*seed) : Json(nullptr);
    entry["point"] = point_json(p);
    Json rs = reports_json(reports, passed);
    entry["passed"] = passed;
    entry["reports"] = std::move(rs);
    arr.push_back(std::move(entry));
    if (!passed) {
      print_failures(reports, seed ? "seed " + std::to_string(*seed) : std::string("params"), err);
    }
    all_passed = all_passed && passed;
  }
  doc["passed"] = all_passed;
  doc["points"] = std::move(arr);
  emit(cfg, doc.dump(2) + "\n", out);
  return all_passed ? kExitPass : kExitVerificationFailure;
}

int cmd_det(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ParamPoint p = cfg.params_file ? load_point(cfg) : sample_generic(cfg.seed, cfg.m, cfg.max_numerator);
  if (const int code = gate_generic(p, err); code != kExitPass) return code;

  std::vector<Report> reports;
  reports.push_back(det_decomposition_check(p));
  reports.push_back(closed_form_report(p, cfg.faults));
  if (p.m >= 2) reports.push_back(elimination_check(p));

  bool passed = true;
  Json doc;
  doc["mode"] = "det";
  doc["m"] = p.m;
  doc["point"] = point_json(p);
  doc["det_lambda0"] = det_bruteforce(lambda0_matrix(p).entries).to_string();
  doc["closed_form"] = (p.m >= 2 ? det_lambda0_closed(p) : det_lambda0_m1(p)).to_string();
  Json rs = reports_json(reports, passed);
  doc["passed"] = passed;
  doc["reports"] = std::move(rs);
  emit(cfg, doc.dump(2) + "\n", out);
  if (!passed) print_failures(reports, "point", err);
  return passed ? kExitPass : kExitVerificationFailure;
}

int cmd_series(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  std::vector<Scalar> x;
  const SeriesParams sp = parse_series_params_json(read_file(*cfg.params_file), &x);
  if (sp.m != cfg.m) {
    throw ConfigError("parameter file has " + std::to_string(sp.m) + " c values but --m is " +
                      std::to_string(cfg.m));
  }
  if (x.empty()) throw ConfigError("series mode needs \"x\" in the parameter file");

  const SeriesValue f = fc_eval(sp, x, cfg.order, cfg.precision);
  Json doc;
  doc["mode"] = "series";
  doc["m"] = sp.m;
  doc["order"] = cfg.order;
  doc["precision"] = cfg.precision;
  Json xs = Json::array();
  for (const auto& v : x) xs.push_back(v.to_string());
  doc["x"] = std::move(xs);
  doc["fc"] = {{"value", f.value.to_string()}, {"tail_bound", f.tail_bound}};
  Json sols = Json::array();
  for (const SubsetIndex& s : basis(sp.m)) {
    Json j;
    j["I"] = s.to_string();
    try {
      const SeriesValue v = f_I_eval(sp, s, x, cfg.order, cfg.precision);
      j["value"] = v.value.to_string();
      j["tail_bound"] = v.tail_bound;
    } catch (const std::domain_error& e) {
      j["error"] = e.what();
    }
    sols.push_back(std::move(j));
  }
  doc["f_I"] = std::move(sols);
  if (sp.is_exact()) doc["coefficients"] = parse_json(series_json(fc_coefficients(sp, cfg.order)));
  emit(cfg, doc.dump(2) + "\n", out);
  return kExitPass;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg);
    switch (cfg.mode) {
      case Mode::kMatrices:
        return cmd_matrices(cfg, out, err);
      case Mode::kVerify:
        return cmd_verify(cfg, out, err);
      case Mode::kDet:
        return cmd_det(cfg, out, err);
      case Mode::kSeries:
        return cmd_series(cfg, out, err);
      case Mode::kSampleParams:
        return cmd_sample_params(cfg, out, err);
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const GenericityError& e) {
    err << "error: parameters are not generic; violated predicates: " << e.predicate() << '\n';
    return kExitNonGeneric;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const PochhammerError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  }
  return kExitConfigError;
}

}  // namespace lauricella::cli
