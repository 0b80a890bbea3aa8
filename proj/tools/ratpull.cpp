// ratpull: check M-matrix conditions and compute rational pullback
// coefficients from intersection data documents.
//
// Exit codes: 0 success, 1 mathematical refusal (reason printed),
// 2 input/IO error, 3 internal inconsistency.

#include <CLI11.hpp>

#include <cstdio>
#include <future>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ratpull/configlib.hpp"
#include "ratpull/error.hpp"
#include "ratpull/mmatrix.hpp"
#include "ratpull/pullback.hpp"

using namespace ratpull;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefused = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct OutputFlags {
  bool json = false;
  bool approx = false;
};

std::string join(const RatVector& v) {
  std::string out;
  for (const auto& x : v) out += (out.empty() ? "" : ", ") + x.to_string();
  return out;
}

std::string join_approx(const RatVector& v) {
  std::ostringstream os;
  os << std::setprecision(6);
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].to_double();
  return os.str();
}

std::string format_matrix(const RatMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += (i ? ", [" : "[") + join(m.row(i)) + "]";
  }
  return out + "]";
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotZPattern:
    case ErrorKind::SignViolation:
    case ErrorKind::DisconnectedConfiguration:
    case ErrorKind::NotMMatrix:
    case ErrorKind::NegativeLambda:
    case ErrorKind::NotSymmetric:
    case ErrorKind::NotNegativeDefinite:
    case ErrorKind::NoRationalPullback:
      return kExitRefused;
    case ErrorKind::InternalInconsistency:
      return kExitInternal;
    default:
      return kExitInput;
  }
}

std::string reason_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::DisconnectedConfiguration:
      return std::string("disconnected configuration (") + e.what() + ")";
    case ErrorKind::NotMMatrix:
      return "not an invertible M-matrix";
    case ErrorKind::NoRationalPullback:
      return e.what();
    default:
      return std::string(to_string(e.kind())) + ": " + e.what();
  }
}

int report_error(const Error& e, const OutputFlags& flags) {
  const int code = exit_code_for(e.kind());
  if (flags.json) {
    Json doc;
    doc["format_version"] = kFormatVersion;
    doc["error"] = to_string(e.kind());
    doc["reason"] = reason_for(e);
    doc["exit_code"] = code;
    std::cout << doc.dump(2) << "\n";
  }
  std::cerr << "error: " << reason_for(e) << "\n";
  return code;
}

RatVector parse_lambda_list(const std::string& text) {
  RatVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) {
      throw Error(ErrorKind::ParseError, "--lambda: empty entry in '" + text + "'");
    }
    out.push_back(Rational::parse(item.substr(b, e - b + 1)));
  }
  return out;
}

void print_report(const MMatrixReport& r, const OutputFlags& flags) {
  std::cout << "verdict: " << (r.verdict ? "invertible M-matrix" : "not an invertible M-matrix")
            << "\n";
  std::cout << "minors: " << join(r.minors.minors) << "\n";
  if (flags.approx) std::cout << "minors (approx, advisory): " << join_approx(r.minors.minors) << "\n";
  std::cout << "inverse nonnegative: " << (r.inverse.nonnegative ? "yes" : "no") << "\n";
  if (r.inverse.inverse) {
    std::cout << "inverse: " << format_matrix(*r.inverse.inverse) << "\n";
  } else {
    std::cout << "inverse: singular\n";
  }
  if (r.certificate_x) {
    std::cout << "certificate x: " << join(*r.certificate_x) << "\n";
  } else {
    std::cout << "certificate x: none\n";
  }
  if (r.spectral) {
    std::cout << "spectral estimate (advisory): s = " << r.spectral->s
              << ", rho_hat = " << r.spectral->rho_hat
              << (r.spectral->converged ? "" : " (not converged)") << "\n";
  }
}

void print_result(const IntersectionConfig& cfg, const DivisorInput& d,
                  const PullbackResult& res, const OutputFlags& flags, bool verify) {
  if (flags.json) {
    Json doc = result_to_json(cfg, res);
    if (verify) {
      Json probe = Json::array();
      for (std::size_t i = 0; i < res.coefficients.size(); ++i) {
        probe.push_back(perturbation_breaks_residuals(cfg, d, res, i, Rational(1)) &&
                        perturbation_breaks_residuals(cfg, d, res, i, rat(-1, 7)));
      }
      doc["uniqueness_probe"] = std::move(probe);
      Json ratios = Json::array();
      for (const auto& c : cfg.extra_curves) {
        auto mu = check_curve_ratio(cfg, c.host, c.row);
        ratios.push_back(mu ? rational_to_json(*mu) : Json());
      }
      doc["extra_curve_ratios"] = std::move(ratios);
    }
    std::cout << doc.dump(2) << "\n";
    return;
  }

  std::cout << "m = " << join(res.coefficients) << "\n";
  if (flags.approx) std::cout << "m (approx, advisory) = " << join_approx(res.coefficients) << "\n";
  if (res.coefficients.empty()) {
    std::cout << "no exceptional divisors: the pullback is the strict transform\n";
    return;
  }
  std::cout << "n = " << res.common_denominator.get_str() << ", numerators = ";
  for (std::size_t i = 0; i < res.numerators.size(); ++i) {
    std::cout << (i ? ", " : "") << res.numerators[i].get_str();
  }
  std::cout << "\n";
  if (d.cartier_denominator != 1) {
    std::cout << "full coefficients (divided by n' = " << d.cartier_denominator.get_str()
              << ") = " << join(res.full_coefficients) << "\n";
  }
  std::cout << "projection residuals: " << join(res.projection_residuals) << "\n";
  std::cout << "effective: " << (res.effectivity ? "yes" : "no") << "\n";
  if (res.symmetric_path_agrees) {
    std::cout << "symmetric path agrees: " << (*res.symmetric_path_agrees ? "yes" : "no") << "\n";
  }
  if (!verify) return;

  for (std::size_t k = 0; k < cfg.extra_curves.size(); ++k) {
    const auto& c = cfg.extra_curves[k];
    auto mu = check_curve_ratio(cfg, c.host, c.row);
    std::cout << "extra curve " << c.name << " on " << cfg.divisors[c.host] << ": ratio "
              << (mu ? mu->to_string() : std::string("none (not proportional)"));
    if (k < res.extra_residuals.size()) {
      std::cout << ", residual " << res.extra_residuals[k].to_string();
    }
    std::cout << "\n";
  }
  bool unique = true;
  for (std::size_t i = 0; i < res.coefficients.size(); ++i) {
    unique = unique && perturbation_breaks_residuals(cfg, d, res, i, Rational(1)) &&
             perturbation_breaks_residuals(cfg, d, res, i, rat(-1, 7));
  }
  std::cout << "uniqueness probe: " << (unique ? "passed" : "FAILED") << "\n";
}

DivisorInput resolve_divisor(const Json& config_doc, const IntersectionConfig& cfg,
                             const std::string& divisor_path,
                             const std::optional<std::string>& lambda_text,
                             const std::optional<std::string>& cartier) {
  DivisorInput d;
  if (lambda_text) {
    d.lambda = parse_lambda_list(*lambda_text);
  } else if (!divisor_path.empty()) {
    d = divisor_from_json(parse_document(read_file(divisor_path)));
  } else if (auto it = config_doc.find("divisor"); it != config_doc.end()) {
    d = divisor_from_json(*it, "/divisor");
  } else if (cfg.rank() != 0) {
    throw Error(ErrorKind::ParseError, "no divisor given: pass a divisor file or --lambda");
  }
  if (cartier) {
    const Rational n = Rational::parse(*cartier);
    if (!n.is_integer() || n.sign() <= 0) {
      throw Error(ErrorKind::ParseError, "--cartier-denominator must be a positive integer");
    }
    d.cartier_denominator = n.numerator();
  }
  d.check_invariants(cfg);
  return d;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact rational pullback of Weil divisors along proper birational morphisms"};
  app.require_subcommand(1);

  OutputFlags flags;
  auto add_output_flags = [&flags](CLI::App* sub) {
    sub->add_flag("--json", flags.json, "Emit a structured JSON document");
    sub->add_flag("--approx", flags.approx, "Append advisory decimal approximations");
  };

  // check-mmatrix
  std::string mm_path;
  auto* mm = app.add_subcommand("check-mmatrix",
                                "Certify a matrix (or -phi^t of a config) as an invertible M-matrix");
  mm->add_option("path", mm_path, "Document with \"matrix\" or an intersection config")->required();
  add_output_flags(mm);

  // pullback
  std::string pb_config, pb_divisor;
  std::optional<std::string> pb_lambda, pb_cartier;
  bool pb_verify = false;
  PullbackOptions pb_options;
  auto* pb = app.add_subcommand("pullback", "Compute rational pullback coefficients");
  pb->add_option("config", pb_config, "Intersection config document")->required();
  pb->add_option("divisor", pb_divisor, "Divisor document (lambda, extra_lambda, ...)");
  pb->add_option("--lambda", pb_lambda, "Inline lambda, comma separated rationals");
  pb->add_option("--cartier-denominator", pb_cartier, "n' with n'D' Cartier");
  pb->add_flag("--verify", pb_verify, "Check extra curves and probe uniqueness");
  pb->add_flag("--allow-disconnected", pb_options.allow_disconnected,
               "Solve each connected block independently");
  pb->add_flag("--allow-signed-lambda", pb_options.allow_signed_lambda,
               "Accept negative lambda (no effectivity guarantee)");
  add_output_flags(pb);

  // surface
  std::string sf_graph, sf_divisor;
  std::optional<std::string> sf_lambda;
  bool sf_verify = false;
  auto* sf = app.add_subcommand("surface", "Pullback on a surface from its dual graph");
  sf->add_option("graph", sf_graph, "Dual graph document")->required();
  sf->add_option("divisor", sf_divisor, "Divisor document");
  sf->add_option("--lambda", sf_lambda, "Inline lambda, comma separated rationals");
  sf->add_flag("--verify", sf_verify, "Probe uniqueness");
  add_output_flags(sf);

  // examples
  std::string ex_action, ex_name;
  auto* ex = app.add_subcommand("examples", "Builtin golden examples");
  ex->add_option("action", ex_action, "list | show | run-all")
      ->required()
      ->check(CLI::IsMember({"list", "show", "run-all"}));
  ex->add_option("name", ex_name, "Example name for 'show'");
  add_output_flags(ex);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (mm->parsed()) {
      const Json doc = parse_document(read_file(mm_path));
      RatMatrix a;
      if (doc.contains("matrix")) {
        a = matrix_from_json(doc["matrix"], "/matrix");
      } else {
        const IntersectionConfig cfg = config_from_json(doc);
        a = scale(Rational(-1), transpose(cfg.phi));
      }
      const MMatrixReport report = is_invertible_m_matrix(as_z_matrix(a));
      if (flags.json) {
        Json out = report_to_json(report);
        out["matrix"] = matrix_to_json(a);
        std::cout << out.dump(2) << "\n";
      } else {
        print_report(report, flags);
      }
      return report.verdict ? kExitOk : kExitRefused;
    }

    if (pb->parsed()) {
      const Json doc = parse_document(read_file(pb_config));
      const IntersectionConfig cfg = config_from_json(doc);
      const DivisorInput d = resolve_divisor(doc, cfg, pb_divisor, pb_lambda, pb_cartier);
      const PullbackResult res = compute_pullback(cfg, d, pb_options);
      print_result(cfg, d, res, flags, pb_verify);
      return kExitOk;
    }

    if (sf->parsed()) {
      const Json doc = parse_document(read_file(sf_graph));
      const IntersectionConfig cfg = graph_to_config(graph_from_json(doc));
      const DivisorInput d = resolve_divisor(doc, cfg, sf_divisor, sf_lambda, std::nullopt);
      const PullbackResult res = mumford_surface_pullback(cfg, d);
      print_result(cfg, d, res, flags, sf_verify);
      return kExitOk;
    }

    if (ex->parsed()) {
      if (ex_action == "list") {
        for (const auto& e : builtin_examples()) {
          std::cout << e.name << "\t" << e.provenance << "\n";
        }
        return kExitOk;
      }
      if (ex_action == "show") {
        if (ex_name.empty()) throw Error(ErrorKind::UnknownExample, "show requires a NAME");
        const ExampleEntry& e = find_example(ex_name);
        if (flags.json) {
          std::cout << example_to_json(e).dump(2) << "\n";
          return kExitOk;
        }
        std::cout << "name: " << e.name << "\n";
        std::cout << "provenance: " << e.provenance << "\n";
        std::cout << "divisors: ";
        for (std::size_t i = 0; i < e.config.divisors.size(); ++i) {
          std::cout << (i ? ", " : "") << e.config.divisors[i];
        }
        std::cout << "\nphi: " << format_matrix(e.config.phi) << "\n";
        std::cout << "lambda: " << join(e.divisor.lambda) << "\n";
        switch (e.outcome) {
          case ExpectedOutcome::Coefficients:
            std::cout << "expected: " << join(e.expected_coefficients) << "\n";
            break;
          case ExpectedOutcome::NoRationalPullback:
            std::cout << "expected: NoRationalPullback\n";
            break;
          case ExpectedOutcome::DisconnectedConfiguration:
            std::cout << "expected: DisconnectedConfiguration\n";
            break;
        }
        return kExitOk;
      }
      // run-all: every computation is pure, so evaluate concurrently.
      const auto& all = builtin_examples();
      std::vector<std::future<std::string>> pending;
      for (const auto& e : all) {
        pending.push_back(std::async(std::launch::async, [&e] { return run_example(e); }));
      }
      int failures = 0;
      Json summary = Json::array();
      for (std::size_t k = 0; k < all.size(); ++k) {
        const std::string mismatch = pending[k].get();
        if (!mismatch.empty()) ++failures;
        if (flags.json) {
          Json item;
          item["name"] = all[k].name;
          item["ok"] = mismatch.empty();
          if (!mismatch.empty()) item["mismatch"] = mismatch;
          summary.push_back(std::move(item));
        } else {
          std::cout << (mismatch.empty() ? "ok   " : "FAIL ") << all[k].name
                    << (mismatch.empty() ? "" : "  " + mismatch) << "\n";
        }
      }
      if (flags.json) std::cout << summary.dump(2) << "\n";
      std::cerr << all.size() - failures << "/" << all.size() << " examples match\n";
      return failures == 0 ? kExitOk : kExitRefused;
    }
  } catch (const Error& e) {
    return report_error(e, flags);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
