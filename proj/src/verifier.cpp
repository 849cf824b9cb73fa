#include "sdyn/verifier.hpp"

#include "sdyn/errors.hpp"
#include "sdyn/sampling.hpp"

#include <chrono>
#include <cmath>
#include <set>
#include <sstream>

namespace sdyn {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Labeled {
  std::string label;
  const ScalarExpr* value;
};

std::string describe_term(const Labeled& t) { return "coefficient of " + t.label + " = " + t.value->to_sexpr(); }

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

/// Shared zero decision for a list of named scalar coefficients on h* of
/// dimension `dim`.
ResidualReport decide_terms(const std::string& check, const std::vector<Labeled>& terms, int dim,
                            const SamplingOptions& options) {
  const auto start = Clock::now();
  ResidualReport rep;
  rep.check = check;
  dim = std::max(dim, 1);

  std::vector<const Labeled*> sampled;
  for (const auto& t : terms) {
    if (t.value->is_exact_zero()) continue;
    if (t.value->has_coth()) {
      sampled.push_back(&t);
      continue;
    }
    // A nonzero rational function: find a point where it is visibly nonzero.
    rep.status = ZeroStatus::nonzero;
    rep.witness = describe_term(t);
    dim = std::max(dim, t.value->max_variable() + 1);
    std::mt19937_64 rng(options.seed);
    auto singular = t.value->singular_forms();
    try {
      for (const auto& p : draw_lattice_points(dim, 50, singular, options.pole_margin, options.lattice_radius, rng)) {
        Rational v = t.value->eval_exact(p);
        if (v != 0) {
          rep.sample_point = point_to_string(p);
          rep.max_abs = std::fabs(v.get_d());
          rep.points = 1;
          break;
        }
      }
    } catch (const PreconditionError&) {
      // The witness term alone identifies the failure.
    }
    rep.seconds = seconds_since(start);
    return rep;
  }

  if (sampled.empty()) {
    rep.seconds = seconds_since(start);
    return rep;
  }

  std::vector<Polynomial> singular;
  std::set<std::string> seen;
  for (const auto* t : sampled) {
    dim = std::max(dim, t->value->max_variable() + 1);
    for (auto& f : t->value->singular_forms())
      if (seen.insert(f.to_string()).second) singular.push_back(std::move(f));
  }
  std::mt19937_64 rng(options.seed);
  auto points = draw_lattice_points(dim, options.points, singular, options.pole_margin, options.lattice_radius, rng);
  const BigFloat tol(options.tolerance, options.precision_bits);
  BigFloat worst(options.precision_bits);
  const Labeled* worst_term = nullptr;
  const Point* worst_point = nullptr;
  for (const auto& p : points) {
    auto x = to_bigfloat(p, options.precision_bits);
    for (const auto* t : sampled) {
      BigFloat v = abs(t->value->eval_numeric(x, options.precision_bits, options.pole_margin));
      if (worst_term == nullptr || worst < v) {
        worst = v;
        worst_term = t;
        worst_point = &p;
      }
    }
    ++rep.points;
  }
  rep.max_abs = worst.to_double();
  if (worst < tol) {
    rep.status = ZeroStatus::probably_zero;
  } else {
    rep.status = ZeroStatus::nonzero;
    rep.witness = describe_term(*worst_term);
    rep.sample_point = point_to_string(*worst_point);
  }
  rep.seconds = seconds_since(start);
  return rep;
}

template <std::size_t R>
std::vector<Labeled> labeled_terms(const SparseTensor<R>& t, const LieSuperalgebra& g, const std::string& prefix = "") {
  std::vector<Labeled> out;
  out.reserve(t.size());
  for (const auto& [idx, c] : t.terms()) out.push_back({prefix + index_label(idx, g), &c});
  return out;
}

}  // namespace

template <std::size_t R>
ResidualReport decide(const std::string& check, const SparseTensor<R>& t, const LieSuperalgebra& g,
                      const SamplingOptions& options) {
  return decide_terms(check, labeled_terms(t, g), g.rank(), options);
}

template ResidualReport decide<2>(const std::string&, const Tensor2&, const LieSuperalgebra&, const SamplingOptions&);
template ResidualReport decide<3>(const std::string&, const Tensor3&, const LieSuperalgebra&, const SamplingOptions&);

Tensor3 differential_dr(const Tensor2& r, const LieSuperalgebra& g) {
  Tensor3 out;
  const auto cartan = g.cartan_indices();
  for (std::size_t i = 0; i < cartan.size(); ++i) {
    for (const auto& [idx, c] : r.terms()) {
      ScalarExpr d = c.differentiate(static_cast<int>(i));
      out.add({cartan[i], idx[0], idx[1]}, d);
    }
  }
  return out;
}

Residual3 cdybe_residual(const Tensor2& r, const LieSuperalgebra& g, const SamplingOptions& options) {
  const auto start = Clock::now();
  Tensor3 res = alt_s(differential_dr(r, g), g);
  res += yb_bracket(r, g);
  ResidualReport rep = decide("cdybe", res, g, options);
  rep.seconds = seconds_since(start);
  return {std::move(res), std::move(rep)};
}

Residual2 unitarity_residual(const Tensor2& r, const Rational& epsilon, const Tensor2& omega,
                             const LieSuperalgebra& g, const SamplingOptions& options) {
  const auto start = Clock::now();
  Tensor2 res = r + super_twist(r, g);
  res -= ScalarExpr(epsilon) * omega;
  ResidualReport rep = decide("unitarity", res, g, options);
  rep.seconds = seconds_since(start);
  return {std::move(res), std::move(rep)};
}

ResidualReport zero_weight_residual(const Tensor2& r, const LieSuperalgebra& g, const SamplingOptions& options) {
  const auto start = Clock::now();
  std::vector<Tensor2> actions;
  std::vector<int> actors;
  for (int x : g.cartan_indices()) {
    actions.push_back(ad_action(g.basis_vector(x), r, g));
    actors.push_back(x);
  }
  std::vector<Labeled> terms;
  for (std::size_t k = 0; k < actions.size(); ++k) {
    auto part = labeled_terms(actions[k], g, "[" + g.label(actors[k]) + " acting] ");
    terms.insert(terms.end(), part.begin(), part.end());
  }
  ResidualReport rep = decide_terms("zero-weight", terms, g.rank(), options);
  rep.seconds = seconds_since(start);
  return rep;
}

Residual3 mdybe_residual(const Tensor2& s, const Rational& epsilon, const Tensor2& omega,
                         const LieSuperalgebra& g, const SamplingOptions& options) {
  const auto start = Clock::now();
  Tensor3 res = alt_s(differential_dr(s, g), g);
  res += yb_bracket(s, g);
  if (epsilon != 0) res += ScalarExpr(epsilon * epsilon / 4) * yb_bracket(omega, g);
  ResidualReport rep = decide("mdybe", res, g, options);
  rep.seconds = seconds_since(start);
  return {std::move(res), std::move(rep)};
}

Tensor3 cross_bracket(const Tensor2& s, const Tensor2& omega, const LieSuperalgebra& g) {
  Tensor3 out = bracket_12_13(s, omega, g);
  out += bracket_12_13(omega, s, g);
  out += bracket_12_23(s, omega, g);
  out += bracket_12_23(omega, s, g);
  out += bracket_13_23(s, omega, g);
  out += bracket_13_23(omega, s, g);
  return out;
}

ResidualReport lemma_consistency_check(const Tensor2& r, const Rational& epsilon, const Tensor2& omega,
                                       const LieSuperalgebra& g, const SamplingOptions& options) {
  const auto start = Clock::now();
  auto unit = unitarity_residual(r, epsilon, omega, g, options);
  if (!unit.tensor.empty())
    throw PreconditionError("lemma check needs r + T_s r = eps Omega; " + unit.report.witness);

  Tensor2 s = shift_to_s(r, epsilon, omega);
  auto cd = cdybe_residual(r, g, options);
  auto md = mdybe_residual(s, epsilon, omega, g, options);
  Tensor3 cross = cross_bracket(s, omega, g);

  ResidualReport rep;
  rep.check = "lemma";
  rep.note = std::string("cdybe ") + to_string(cd.report.status) + ", mdybe " + to_string(md.report.status) +
             ", cross bracket " + (cross.empty() ? "exact-zero" : "nonzero");
  rep.max_abs = std::max(cd.report.max_abs, md.report.max_abs);
  rep.points = std::max(cd.report.points, md.report.points);
  if (!cross.empty()) {
    rep.status = ZeroStatus::nonzero;
    const auto& [idx, c] = *cross.terms().begin();
    rep.witness = "cross bracket: coefficient of " + index_label(idx, g) + " = " + c.to_sexpr();
  } else if (cd.report.passed() != md.report.passed()) {
    rep.status = ZeroStatus::nonzero;
    rep.witness = "cdybe residual " + std::string(to_string(cd.report.status)) + " but mdybe residual " +
                  to_string(md.report.status) + "; " + (cd.report.passed() ? md.report.witness : cd.report.witness);
  } else {
    rep.status = ZeroStatus::exact_zero;
  }
  rep.seconds = seconds_since(start);
  return rep;
}

ResidualReport limit_behavior_check(const RMatrixSpec& spec, const LieSuperalgebra& g, const RootDatum& rd,
                                    const SamplingOptions& options, double limit_tolerance) {
  const auto start = Clock::now();
  if (spec.epsilon == 0) throw PreconditionError("limit check needs a nonzero coupling constant");
  ResidualReport rep;
  rep.check = "limits";

  RMatrixSpec coth_spec;
  coth_spec.X = RootSubset::all(rd);
  coth_spec.nu.assign(static_cast<std::size_t>(rd.rank()), Rational(0));
  coth_spec.D = TwoForm::zero(rd.rank());
  coth_spec.epsilon = spec.epsilon;
  const Tensor2 r = construct(coth_spec, g, rd);
  const RationalVector lambda0 = rd.dominant_point(g);
  const int prec = options.precision_bits;

  // The ray is walked in units of 1/eps so the coth arguments, and with
  // them the tolerance at t = 40, do not depend on eps. phi is even in eps
  // while the constant solutions are odd, so for eps < 0 the direction flips.
  const Rational step = 1 / spec.epsilon;
  auto error_at = [&](long t, const Tensor2& target) {
    Point p;
    for (const auto& x : lambda0) p.push_back(x * step * t);
    auto x = to_bigfloat(p, prec);
    BigFloat worst(prec);
    std::set<std::array<int, 2>> keys;
    for (const auto& [idx, c] : r.terms()) keys.insert(idx);
    for (const auto& [idx, c] : target.terms()) keys.insert(idx);
    for (const auto& idx : keys) {
      BigFloat v = r.at(idx).eval_numeric(x, prec, options.pole_margin);
      BigFloat w = target.at(idx).eval_numeric(x, prec, options.pole_margin);
      BigFloat d = abs(v - w);
      if (worst < d) worst = d;
    }
    return worst.to_double();
  };

  const Tensor2 twisted = constant_example(g, rd, spec.epsilon, ConstantExample::twisted);
  const Tensor2 plain = constant_example(g, rd, spec.epsilon, ConstantExample::r);
  std::ostringstream note;
  bool ok = true;
  double worst_final = 0.0;
  for (int direction : {1, -1}) {
    const Tensor2& target = direction > 0 ? twisted : plain;
    double previous = INFINITY;
    note << (direction > 0 ? "t>0 vs T_s r:" : " t<0 vs r:");
    for (long t : {10L, 20L, 40L}) {
      double e = error_at(direction * t, target);
      note << " " << format_double(e);
      ++rep.points;
      if (!(e < previous) && !(e == 0.0 && previous == 0.0)) {
        ok = false;
        if (rep.witness.empty())
          rep.witness = "error does not decrease at t = " + std::to_string(direction * t);
      }
      previous = e;
    }
    worst_final = std::max(worst_final, previous);
    if (!(previous < limit_tolerance)) {
      ok = false;
      if (rep.witness.empty())
        rep.witness = "error " + format_double(previous) + " at t = " + std::to_string(direction * 40) +
                      " exceeds " + format_double(limit_tolerance);
    }
  }
  rep.sample_point = "lambda_0 = " + point_to_string(lambda0);
  rep.max_abs = worst_final;
  rep.note = note.str();
  rep.status = ok ? ZeroStatus::probably_zero : ZeroStatus::nonzero;
  rep.seconds = seconds_since(start);
  return rep;
}

ResidualReport degeneration_check(const RMatrixSpec& spec, const LieSuperalgebra& g, const RootDatum& rd,
                                  const SamplingOptions& options, const std::vector<Rational>& epsilons, int points) {
  const auto start = Clock::now();
  if (epsilons.empty()) throw PreconditionError("degeneration check needs at least one epsilon");
  ResidualReport rep;
  rep.check = "degeneration";

  RMatrixSpec zero = spec;
  zero.epsilon = 0;
  const Tensor2 r0 = construct(zero, g, rd);
  std::vector<Tensor2> coupled;
  for (const auto& eps : epsilons) {
    RMatrixSpec s = spec;
    s.epsilon = eps;
    coupled.push_back(construct(s, g, rd));
  }

  std::vector<Polynomial> singular;
  for (const Tensor2* t : std::initializer_list<const Tensor2*>{&r0, &coupled.front()})
    for (const auto& [idx, c] : t->terms())
      for (auto& f : c.singular_forms()) singular.push_back(std::move(f));
  std::mt19937_64 rng(options.seed);
  const auto pts = draw_lattice_points(rd.rank(), points, singular, options.pole_margin, options.lattice_radius, rng);

  const int prec = options.precision_bits;
  std::vector<double> errors(epsilons.size(), 0.0);
  for (const auto& p : pts) {
    const auto x = to_bigfloat(p, prec);
    for (std::size_t k = 0; k < epsilons.size(); ++k) {
      std::set<std::array<int, 2>> keys;
      for (const auto& [idx, c] : r0.terms()) keys.insert(idx);
      for (const auto& [idx, c] : coupled[k].terms()) keys.insert(idx);
      for (const auto& idx : keys) {
        // Coth arguments are eps-multiples of forms the points already keep
        // away from zero, so the margin scales with eps.
        const double margin = options.pole_margin * std::fabs(epsilons[k].get_d());
        BigFloat d = abs(coupled[k].at(idx).eval_numeric(x, prec, margin) -
                         r0.at(idx).eval_numeric(x, prec, options.pole_margin));
        const double v = d.to_double();
        if (v > errors[k]) {
          errors[k] = v;
          if (k + 1 == epsilons.size()) rep.sample_point = point_to_string(p);
        }
      }
    }
    ++rep.points;
  }

  std::ostringstream note;
  note << "C = e/eps:";
  bool ok = true;
  double first_ratio = 0.0;
  for (std::size_t k = 0; k < epsilons.size(); ++k) {
    const double ratio = errors[k] / epsilons[k].get_d();
    note << " " << format_double(ratio);
    if (k == 0) first_ratio = ratio;
    if (!std::isfinite(ratio) || ratio > 2 * first_ratio) {
      ok = false;
      if (rep.witness.empty())
        rep.witness = "error " + format_double(errors[k]) + " at eps = " + epsilons[k].get_str() + " is not O(eps)";
    }
    if (k > 0 && !(errors[k] < errors[k - 1]) && ok) {
      ok = false;
      rep.witness = "error does not shrink at eps = " + epsilons[k].get_str();
    }
  }
  rep.max_abs = errors.back();
  rep.note = note.str();
  rep.status = ok ? ZeroStatus::probably_zero : ZeroStatus::nonzero;
  rep.seconds = seconds_since(start);
  return rep;
}

ResidualReport ode_check(const RMatrixSpec& spec, const RootDatum& rd, const SamplingOptions& options) {
  const auto start = Clock::now();
  std::vector<ScalarExpr> values;
  std::vector<std::string> labels;
  const ScalarExpr quarter_eps2(spec.epsilon * spec.epsilon / 4);
  for (int a : spec.X.indices()) {
    ScalarExpr f = phi(a, spec, rd);
    ScalarExpr A(static_cast<long>(rd.sign_A(a)));
    ScalarExpr sq = f * f;
    if (spec.epsilon != 0) sq -= quarter_eps2;
    const auto& c = rd.coroot_coordinates(a);
    for (std::size_t i = 0; i < c.size(); ++i) {
      values.push_back(f.differentiate(static_cast<int>(i)) + A * sq * ScalarExpr(c[i]));
      labels.push_back("root " + std::to_string(a) + ", d/dx" + std::to_string(i));
    }
  }
  std::vector<Labeled> terms;
  for (std::size_t k = 0; k < values.size(); ++k) terms.push_back({labels[k], &values[k]});
  ResidualReport rep = decide_terms("ode", terms, rd.rank(), options);
  rep.seconds = seconds_since(start);
  return rep;
}

ResidualReport functional_equation_check(const RMatrixSpec& spec, const RootDatum& rd,
                                         const SamplingOptions& options) {
  const auto start = Clock::now();
  std::vector<ScalarExpr> phis;
  for (int a = 0; a < rd.size(); ++a) phis.push_back(phi(a, spec, rd));
  const Rational quarter_eps2 = spec.epsilon * spec.epsilon / 4;
  std::vector<ScalarExpr> values;
  std::vector<std::string> labels;
  for (int a = 0; a < rd.size(); ++a)
    for (int b = 0; b < rd.size(); ++b) {
      auto c = rd.sum(a, b);
      if (!c) continue;
      const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b), uc = static_cast<std::size_t>(*c);
      const long Aa = rd.sign_A(a), Ab = rd.sign_A(b), Ac = rd.sign_A(*c);
      ScalarExpr lhs = ScalarExpr(Ac) * phis[ua] * phis[ub] + ScalarExpr(quarter_eps2 * (Ac * Aa * Ab));
      ScalarExpr rhs = phis[uc] * (ScalarExpr(Aa) * phis[ub] + ScalarExpr(Ab) * phis[ua]);
      values.push_back(lhs - rhs);
      labels.push_back("roots (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    }
  std::vector<Labeled> terms;
  for (std::size_t k = 0; k < values.size(); ++k) terms.push_back({labels[k], &values[k]});
  ResidualReport rep = decide_terms("functional-equation", terms, rd.rank(), options);
  rep.note = std::to_string(values.size()) + " root pairs";
  rep.seconds = seconds_since(start);
  return rep;
}

ResidualReport validation_check(const RMatrixSpec& spec, const RootDatum& rd) {
  const auto start = Clock::now();
  ResidualReport rep;
  rep.check = "validate";
  auto v = validate(spec, rd);
  if (!v.passed()) {
    rep.status = ZeroStatus::nonzero;
    for (const auto& f : v.failures) rep.witness += (rep.witness.empty() ? "" : "; ") + f;
  }
  rep.seconds = seconds_since(start);
  return rep;
}

}  // namespace sdyn
