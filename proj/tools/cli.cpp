#include "cli.hpp"

#include "sdyn/casimir.hpp"
#include "sdyn/errors.hpp"
#include "sdyn/report.hpp"
#include "sdyn/sampling.hpp"
#include "sdyn/spec_io.hpp"
#include "sdyn/verifier.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace sdyn::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 0x5d1a0b;

const std::vector<std::string> kAllChecks = {"validate", "unitarity", "zero-weight", "cdybe",
                                             "mdybe",    "lemma",     "ode",         "functional",
                                             "limits"};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const nlohmann::json& j, const std::string& out_path, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw UsageError("cannot write '" + out_path + "'");
  f << text;
}

std::vector<std::string> split_checks(const std::string& text, bool coupled) {
  if (text == "all") {
    std::vector<std::string> out;
    for (const auto& c : kAllChecks)
      if (coupled || c != "limits") out.push_back(c);
    return out;
  }
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (std::find(kAllChecks.begin(), kAllChecks.end(), item) == kAllChecks.end())
      throw UsageError("unknown check '" + item + "'");
    if (item == "limits" && !coupled) throw UsageError("the limits check needs a nonzero epsilon");
    out.push_back(item);
  }
  if (out.empty()) throw UsageError("no checks selected");
  return out;
}

struct VerifyArgs {
  std::string spec;
  std::string checks = "all";
  int precision = 128;
  double tol = 0.0;
  int points = 20;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const std::string text = read_file(a.spec);
  LoadedSpec ls = load_spec(text);
  const bool coupled = ls.spec.epsilon != 0;
  const auto checks = split_checks(a.checks, coupled);

  SamplingOptions opt;
  opt.points = a.points;
  opt.precision_bits = a.precision;
  opt.tolerance = a.tol > 0 ? a.tol : (a.precision <= 64 ? 1e-12 : 1e-25);
  opt.seed = a.seed;

  RunSettings settings{opt.precision_bits, opt.tolerance, opt.points, opt.seed};
  std::vector<ResidualReport> reports;
  const Tensor2 omega = casimir(ls.g, ls.rd);

  ResidualReport valid = validation_check(ls.spec, ls.rd);
  if (std::find(checks.begin(), checks.end(), "validate") != checks.end() || !valid.passed())
    reports.push_back(valid);

  if (valid.passed()) {
    const Tensor2 r = construct(ls.spec, ls.g, ls.rd);
    for (const auto& c : checks) {
      try {
        if (c == "unitarity") reports.push_back(unitarity_residual(r, ls.spec.epsilon, omega, ls.g, opt).report);
        else if (c == "zero-weight") reports.push_back(zero_weight_residual(r, ls.g, opt));
        else if (c == "cdybe") reports.push_back(cdybe_residual(r, ls.g, opt).report);
        else if (c == "mdybe")
          reports.push_back(mdybe_residual(shift_to_s(r, ls.spec.epsilon, omega), ls.spec.epsilon, omega, ls.g, opt).report);
        else if (c == "lemma") reports.push_back(lemma_consistency_check(r, ls.spec.epsilon, omega, ls.g, opt));
        else if (c == "ode") reports.push_back(ode_check(ls.spec, ls.rd, opt));
        else if (c == "functional") reports.push_back(functional_equation_check(ls.spec, ls.rd, opt));
        else if (c == "limits") reports.push_back(limit_behavior_check(ls.spec, ls.g, ls.rd, opt));
      } catch (const PreconditionError& e) {
        ResidualReport rep;
        rep.check = c;
        rep.status = ZeroStatus::nonzero;
        rep.witness = std::string("precondition failed: ") + e.what();
        reports.push_back(rep);
      }
    }
  }

  bool ok = true;
  for (const auto& rep : reports) {
    if (!rep.passed()) {
      ok = false;
      err << rep.check << ": " << rep.witness;
      if (!rep.sample_point.empty()) err << " at " << rep.sample_point;
      err << "\n";
    }
  }
  emit(verification_report(text, ls.g, reports, settings), a.out, out);
  return ok ? 0 : 1;
}

struct ConstructArgs {
  std::string spec;
  std::string at;
  int precision = 128;
  std::string out;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
  const std::string text = read_file(a.spec);
  LoadedSpec ls = load_spec(text);
  const Tensor2 r = construct(ls.spec, ls.g, ls.rd);
  nlohmann::json doc = {{"algebra", ls.g.name()}, {"spec_digest", fnv1a_digest(text)}};
  if (a.at.empty()) {
    doc["r"] = tensor_to_json(r, ls.g);
    emit(doc, a.out, out);
    return 0;
  }
  RationalVector lambda = parse_rational_list(a.at);
  if (static_cast<int>(lambda.size()) != ls.rd.rank())
    throw UsageError("--at needs " + std::to_string(ls.rd.rank()) + " coordinates");
  const auto x = to_bigfloat(lambda, a.precision);
  nlohmann::json values = nlohmann::json::array();
  for (const auto& [idx, c] : r.terms()) {
    nlohmann::json entry = {{"indices", idx}, {"labels", index_label(idx, ls.g)}};
    if (c.has_coth()) {
      entry["value"] = c.eval_numeric(x, a.precision).to_string(a.precision * 3 / 10);
      entry["exact"] = false;
    } else {
      entry["value"] = c.eval_exact(lambda).get_str();
      entry["exact"] = true;
    }
    values.push_back(entry);
  }
  doc["at"] = point_to_string(lambda);
  doc["values"] = values;
  emit(doc, a.out, out);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Build Lie superalgebras, construct zero-weight dynamical r-matrices and verify them"};
  app.require_subcommand(1);

  std::string family;
  int m = 0, n = 0;
  std::string algebra_out;
  auto* alg = app.add_subcommand("algebra", "Export an algebra descriptor (basis, brackets, form, roots)");
  alg->add_option("--family", family, "gl or sl")->required()->check(CLI::IsMember({"gl", "sl"}));
  alg->add_option("--m", m, "Even block size")->required();
  alg->add_option("--n", n, "Odd block size")->required();
  alg->add_option("--out", algebra_out, "Output file (default stdout)");

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Construct the r-matrix of a spec and run residual checks");
  ver->add_option("--spec", va.spec, "Spec file (JSON)")->required();
  ver->add_option("--checks", va.checks,
                  "Comma list of validate,unitarity,zero-weight,cdybe,mdybe,lemma,ode,functional,limits or 'all'")
      ->capture_default_str();
  ver->add_option("--precision", va.precision, "MPFR mantissa bits for numeric sampling")
      ->capture_default_str()
      ->check(CLI::Range(16, 4096));
  ver->add_option("--tol", va.tol, "Numeric tolerance (default 1e-12 at <= 64 bits, 1e-25 above)");
  ver->add_option("--points", va.points, "Sample points for numeric decisions")
      ->capture_default_str()
      ->check(CLI::Range(1, 100000));
  ver->add_option("--seed", va.seed, "Seed for sample point generation")->capture_default_str();
  ver->add_option("--out", va.out, "Report file (default stdout)");

  ConstructArgs ca;
  auto* con = app.add_subcommand("construct", "Dump r(lambda) symbolically or evaluated at a point");
  con->add_option("--spec", ca.spec, "Spec file (JSON)")->required();
  con->add_option("--at", ca.at, "Point lambda as a comma list of rationals, e.g. 2,1/3");
  con->add_option("--precision", ca.precision, "MPFR mantissa bits for coth values")
      ->capture_default_str()
      ->check(CLI::Range(16, 4096));
  con->add_option("--out", ca.out, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*alg) {
      LieSuperalgebra g = build_algebra(family, m, n);
      RootDatum rd = root_decomposition(g);
      nlohmann::json doc = algebra_descriptor(g, rd);
      doc["family"] = family;
      doc["m"] = m;
      doc["n"] = n;
      emit(doc, algebra_out, out);
      return 0;
    }
    if (*ver) return cmd_verify(va, out, err);
    if (*con) return cmd_construct(ca, out);
  } catch (const PoleError& e) {
    err << "pole: " << e.what();
    if (!e.offending().empty()) err << " [" << e.offending() << " = 0]";
    err << "\n";
    return 1;
  } catch (const ValidationError& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DegenerateFormError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace sdyn::cli
