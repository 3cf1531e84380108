#include "holozeta/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <limits>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/tools/roots.hpp>

namespace holozeta {

SectionContext SectionContext::make(const ProblemInstance& inst) {
  SectionContext c;
  c.dns = inst.dns;
  c.order = TermOrder::degrevlex(c.dns->num_vars());
  c.f = change_ring(inst.f, c.dns);
  for (int i = 0; i < inst.n(); ++i) c.partials.push_back(change_ring(inst.partial(i), c.dns));
  std::vector<WeylOperator> I;
  for (const auto& g : inst.I) I.push_back(change_ring(g, c.dns));
  c.gb = groebner(IdealPresentation(c.dns, std::move(I)), c.order).basis();
  return c;
}

WeylOperator SectionContext::reduce(const WeylOperator& w) const {
  return normal_form(w, gb, order).remainder;
}

LogSection LogSection::basic(const SectionContext& ctx, const WeylOperator& W, int j) {
  LogSection v;
  v.w.assign(static_cast<std::size_t>(j + 1), WeylOperator(ctx.dns));
  v.w[static_cast<std::size_t>(j)] = ctx.reduce(change_ring(W, ctx.dns));
  return v;
}

bool LogSection::empty() const {
  return std::all_of(w.begin(), w.end(), [](const WeylOperator& x) { return x.is_zero(); });
}

namespace {

WeylOperator f_power(const SectionContext& ctx, int k) {
  WeylOperator r = WeylOperator::constant(ctx.dns, 1);
  for (int i = 0; i < k; ++i) r = ctx.f * r;
  return r;
}

// Brings v to denominator f^fpow (fpow >= v.fpow).
LogSection raise(const SectionContext& ctx, const LogSection& v, int fpow) {
  if (fpow == v.fpow) return v;
  LogSection r;
  r.fpow = fpow;
  const WeylOperator m = f_power(ctx, fpow - v.fpow);
  for (const auto& x : v.w) r.w.push_back(ctx.reduce(m * x));
  return r;
}

void trim(LogSection& v) {
  while (v.w.size() > 1 && v.w.back().is_zero()) v.w.pop_back();
}

enum class Gen { kX, kD, kT, kDt, kS };

LogSection act(const SectionContext& ctx, Gen g, int i, const LogSection& v) {
  const Ring& R = ctx.dns;
  const int s = R->central(Central::kS);
  LogSection r;
  r.fpow = v.fpow;
  const auto J = v.w.size();
  switch (g) {
    case Gen::kX:
    case Gen::kS: {
      const WeylOperator m = g == Gen::kX ? WeylOperator::variable(R, R->coord(i)) : WeylOperator::variable(R, s);
      for (const auto& x : v.w) r.w.push_back(ctx.reduce(m * x));
      break;
    }
    case Gen::kD: {
      // d(f^(s-p) L^j) = (s-p) f_i f^(s-p-1) L^j + j f_i f^(s-p-1) L^(j-1)
      r.fpow = v.fpow + 1;
      const WeylOperator sp = WeylOperator::variable(R, s) - WeylOperator::constant(R, v.fpow);
      const WeylOperator& fi = ctx.partials[static_cast<std::size_t>(i)];
      const WeylOperator d = WeylOperator::variable(R, R->deriv(i));
      for (std::size_t j = 0; j < J; ++j) {
        WeylOperator acc = sp * fi * v.w[j] + ctx.f * (d * v.w[j]);
        if (j + 1 < J) acc += fi * v.w[j + 1] * Rational(static_cast<long>(j + 1));
        r.w.push_back(ctx.reduce(acc));
      }
      break;
    }
    case Gen::kT:
    case Gen::kDt: {
      if (J > 1) throw InputError("t and dt act on log-free sections only");
      if (g == Gen::kT) {
        r.w.push_back(ctx.reduce(ctx.f * shift_central(v.w[0], s, 1)));
      } else {
        r.fpow = v.fpow + 1;
        r.w.push_back(ctx.reduce(-(WeylOperator::variable(R, s) * shift_central(v.w[0], s, -1))));
      }
      break;
    }
  }
  trim(r);
  return r;
}

}  // namespace

LogSection add(const SectionContext& ctx, const LogSection& a, const LogSection& b) {
  const int p = std::max(a.fpow, b.fpow);
  LogSection x = raise(ctx, a, p), y = raise(ctx, b, p);
  if (x.w.size() < y.w.size()) std::swap(x, y);
  for (std::size_t j = 0; j < y.w.size(); ++j) x.w[j] += y.w[j];
  trim(x);
  return x;
}

LogSection scale(const SectionContext&, const LogSection& a, const Rational& c) {
  LogSection r = a;
  for (auto& x : r.w) x *= c;
  trim(r);
  return r;
}

LogSection apply_log_section(const WeylOperator& P, const LogSection& v, const SectionContext& ctx) {
  const RingSignature& src = *P.ring();
  const RingSignature& dst = *ctx.dns;
  LogSection total = scale(ctx, v, 0);
  total.fpow = v.fpow;
  for (const Term& term : P.terms()) {
    LogSection cur = v;
    // right to left through the normally ordered word x^a d^b t^c dt^e s^k
    for (int var = src.num_vars() - 1; var >= 0; --var) {
      const int e = term.mono[var];
      if (!e) continue;
      Gen g;
      int idx = -1;
      if (src.is_coord(var) && src.pair_of(var) < src.n_x) {
        g = Gen::kX;
        idx = dst.find_var(src.var_name(var));
      } else if (src.is_deriv(var) && src.pair_of(var) < src.n_x) {
        g = Gen::kD;
        idx = dst.find_var(src.var_name(var));
        if (idx >= 0) idx = dst.pair_of(idx);
      } else if (var == src.t_index()) {
        g = Gen::kT;
      } else if (var == src.dt_index()) {
        g = Gen::kDt;
      } else if (var == src.central(Central::kS)) {
        g = Gen::kS;
      } else {
        throw InputError("generator '" + src.var_name(var) + "' has no action on sections");
      }
      if ((g == Gen::kX || g == Gen::kD) && idx < 0)
        throw InputError("generator '" + src.var_name(var) + "' unknown to the section ring");
      if (g == Gen::kX) idx = dst.pair_of(idx);
      for (int k = 0; k < e; ++k) cur = act(ctx, g, idx, cur);
    }
    total = add(ctx, total, scale(ctx, cur, term.coeff));
  }
  return total;
}

bool section_is_zero(const LogSection& v, const SectionContext& ctx, const std::optional<Rational>& s_value,
                     int max_fpow, int* needed) {
  const int s = ctx.dns->central(Central::kS);
  const Ring plain = derive_ring(ctx.dns, false, {});
  for (int k = 0; k <= max_fpow; ++k) {
    const WeylOperator m = f_power(ctx, k);
    bool zero = true;
    for (const auto& x : v.w) {
      const WeylOperator y = k == 0 ? x : ctx.reduce(m * x);
      if (y.is_zero()) continue;
      if (!s_value || !substitute_central(y, s, *s_value, plain).is_zero()) {
        zero = false;
        break;
      }
    }
    if (zero) {
      if (needed) *needed = k;
      return true;
    }
  }
  return false;
}

LogSection laurent_section(const SectionContext& ctx, const LaurentSystem& sys) {
  LogSection out = LogSection::basic(ctx, WeylOperator(ctx.dns));
  for (std::size_t j = 0; j < sys.Qk.size(); ++j) {
    const LogSection base = LogSection::basic(ctx, WeylOperator::constant(ctx.dns, 1), static_cast<int>(j));
    out = add(ctx, out, apply_log_section(sys.Qk[j], base, ctx));
  }
  return out;
}

// ---- numerics ----

namespace {

double factor_value(PhiFactor f, double x) {
  switch (f) {
    case PhiFactor::kGaussian:
      return std::exp(-x * x);
    case PhiFactor::kExp:
      return std::exp(-x);
    case PhiFactor::kExpInverse:
      return x > 0 ? std::exp(-x - 1 / x) : 0.0;
  }
  return 0;
}

constexpr double kInf = std::numeric_limits<double>::infinity();

std::pair<double, double> factor_domain(PhiFactor f, double box) {
  switch (f) {
    case PhiFactor::kGaussian:
      return {-box, box};
    case PhiFactor::kExp:
      return {-box, kInf};
    case PhiFactor::kExpInverse:
      return {0, kInf};
  }
  return {-box, box};
}

double horner(const std::vector<double>& c, double x) {
  double r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  return r;
}

// Real roots of p in (lo, hi): p is monotone between consecutive critical
// points, so each sign change there brackets exactly one root.
std::vector<double> real_roots(const std::vector<double>& p, double lo, double hi) {
  std::vector<double> out;
  if (p.size() < 2) return out;
  std::vector<double> dp;
  for (std::size_t i = 1; i < p.size(); ++i) dp.push_back(p[i] * static_cast<double>(i));
  std::vector<double> pts{lo};
  for (double r : real_roots(dp, lo, hi)) pts.push_back(r);
  pts.push_back(hi);
  auto fn = [&](double x) { return horner(p, x); };
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    const double x0 = pts[k], x1 = pts[k + 1];
    const double f0 = fn(x0), f1 = fn(x1);
    if (f0 == 0 && k > 0) out.push_back(x0);
    if ((f0 < 0 && f1 > 0) || (f0 > 0 && f1 < 0)) {
      boost::uintmax_t iters = 200;
      const auto r = boost::math::tools::toms748_solve(fn, x0, x1, f0, f1,
                                                       boost::math::tools::eps_tolerance<double>(50), iters);
      out.push_back(0.5 * (r.first + r.second));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Integral of max(p(u), 0)^lambda * factor(u) over the factor's domain.
double integrate_1d(const std::vector<double>& p, PhiFactor pf, double lambda, const QuadratureOptions& opt,
                    double& err) {
  auto [a, b] = factor_domain(pf, opt.box);
  std::vector<double> c = p;
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.empty()) return 0;
  // beyond the Cauchy bound the sign of p is constant
  double bound = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) bound = std::max(bound, std::abs(c[i] / c.back()));
  const double hi = std::isinf(b) ? std::max(a, 0.0) + bound + 2 : b;

  std::vector<double> cuts{a};
  for (double r : real_roots(c, a, hi)) cuts.push_back(r);
  cuts.push_back(hi);

  auto integrand = [&](double u) {
    const double v = horner(c, u);
    if (v <= 0) return 0.0;
    const double phi = factor_value(pf, u);
    return phi == 0 ? 0.0 : std::pow(v, lambda) * phi;
  };
  long double total = 0;
  err = 0;
  boost::math::quadrature::tanh_sinh<double> ts;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double x0 = cuts[k], x1 = cuts[k + 1];
    if (x1 <= x0 || horner(c, 0.5 * (x0 + x1)) <= 0) continue;
    double e = 0;
    total += ts.integrate(integrand, x0, x1, opt.tol * 1e-2, &e);
    err += e;
  }
  if (std::isinf(b) && horner(c, hi + 1) > 0) {
    boost::math::quadrature::exp_sinh<double> es;
    double e = 0;
    total += es.integrate(integrand, hi, kInf, opt.tol * 1e-2, &e);
    err += e;
  }
  return static_cast<double>(total);
}

}  // namespace

double PhiSpec::eval(const std::vector<double>& x) const {
  double r = 1;
  for (std::size_t i = 0; i < factors.size() && i < x.size(); ++i) r *= factor_value(factors[i], x[i]);
  return r;
}

std::vector<ZetaSample> numeric_zeta(const WeylOperator& f, const PhiSpec& phi, const std::vector<double>& lambdas,
                                     const QuadratureOptions& options) {
  const RingSignature& sig = *f.ring();
  const int n = sig.n_x;
  if (n < 1 || n > 2) throw InputError("numeric zeta supports one or two variables");
  if (static_cast<int>(phi.factors.size()) != n) throw InputError("phi needs one factor per variable");
  if (!is_polynomial(f)) throw InputError("f must be a polynomial");
  for (const Term& t : f.terms())
    for (int v = 2 * n; v < sig.num_vars(); ++v)
      if (t.mono[v]) throw InputError("f must be a polynomial in the x variables");

  // coefficients of f in the last variable, each a polynomial in the first
  const int last = n - 1;
  int deg = 0;
  for (const Term& t : f.terms()) deg = std::max(deg, static_cast<int>(t.mono[sig.coord(last)]));
  auto coeffs_at = [&](double x0) {
    std::vector<double> c(static_cast<std::size_t>(deg + 1), 0.0);
    for (const Term& t : f.terms()) {
      double v = t.coeff.get_d();
      if (n == 2) v *= std::pow(x0, t.mono[sig.coord(0)]);
      c[t.mono[sig.coord(last)]] += v;
    }
    return c;
  };

  auto sample = [&](double lambda) {
    ZetaSample z;
    z.lambda = lambda;
    if (n == 1) {
      z.value = integrate_1d(coeffs_at(0), phi.factors[0], lambda, options, z.error);
    } else {
      QuadratureOptions inner = options;
      inner.tol = options.tol * 1e-2;
      double inner_err = 0;
      auto G = [&](double x0) {
        const double w = factor_value(phi.factors[0], x0);
        if (w == 0) return 0.0;
        double e = 0;
        const double v = integrate_1d(coeffs_at(x0), phi.factors[1], lambda, inner, e);
        inner_err = std::max(inner_err, w * e);
        return w * v;
      };
      auto [a, b] = factor_domain(phi.factors[0], options.box);
      double e = 0, L1 = 0;
      if (std::isinf(b)) {
        boost::math::quadrature::exp_sinh<double> es;
        z.value = es.integrate(G, a, kInf, options.tol * 1e-2, &e, &L1);
      } else {
        z.value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
            G, a, b, static_cast<unsigned>(options.depth), options.tol * 1e-2, &e, &L1);
      }
      z.error = e + inner_err * (std::isinf(b) ? 1.0 : b - a);
    }
    const double scale = std::max(std::abs(z.value), std::numeric_limits<double>::min());
    if (!std::isfinite(z.value) || z.error > 10 * options.tol * scale)
      throw NumericError("quadrature did not converge at lambda = " + std::to_string(lambda) + " (estimate " +
                             std::to_string(z.value) + ", error " + std::to_string(z.error) + ")",
                         z.value, z.error);
    return z;
  };

  for (double lambda : lambdas)
    if (lambda < 0) throw InputError("numeric zeta needs lambda >= 0");
  std::vector<std::future<ZetaSample>> tasks;
  for (double lambda : lambdas) tasks.push_back(std::async(std::launch::async, sample, lambda));
  std::vector<ZetaSample> out;
  for (auto& t : tasks) out.push_back(t.get());
  return out;
}

double residual_check(const std::vector<DifferenceOperator>& ops, const std::vector<ZetaSample>& z) {
  for (std::size_t i = 1; i < z.size(); ++i)
    if (std::abs(z[i].lambda - z[i - 1].lambda - 1) > 1e-9) throw InputError("samples must be spaced by 1");
  double worst = 0;
  bool any = false;
  for (const auto& op0 : ops) {
    const DifferenceOperator op = op0.normalized();
    const int r = op.order();
    if (r < 0) continue;
    for (std::size_t b = 0; b + static_cast<std::size_t>(r) < z.size(); ++b) {
      long double sum = 0, big = 0;
      for (const auto& [k, a] : op.coeffs()) {
        const long double term =
            a.eval(static_cast<long double>(z[b].lambda)) * static_cast<long double>(z[b + static_cast<std::size_t>(k)].value);
        sum += term;
        big = std::max(big, std::abs(term));
      }
      any = true;
      if (big > 0) worst = std::max(worst, static_cast<double>(std::abs(sum) / big));
    }
  }
  if (!any) throw InputError("grid too short for the operator order");
  return worst;
}

}  // namespace holozeta
