#include <doctest.h>

#include <boost/math/special_functions/bessel.hpp>
#include <cmath>

#include "holozeta/format.hpp"
#include "holozeta/oracle.hpp"
#include "random_ops.hpp"

using namespace holozeta;

namespace {

LogSection section(const SectionContext& ctx, int fpow, std::initializer_list<const char*> w) {
  LogSection v;
  v.fpow = fpow;
  for (const char* s : w) v.w.push_back(ctx.reduce(parse_operator(s, ctx.dns)));
  return v;
}

bool same(const SectionContext& ctx, const LogSection& a, const LogSection& b) {
  return section_is_zero(add(ctx, a, scale(ctx, b, -1)), ctx);
}

}  // namespace

TEST_CASE("Euler operator kills x^s") {
  auto inst = ProblemInstance::parse({"x"}, "x", {"dx"});
  const SectionContext ctx = SectionContext::make(inst);
  const LogSection one = LogSection::basic(ctx, WeylOperator::constant(inst.dns, 1));
  CHECK(section_is_zero(apply_log_section(parse_operator("x*dx - s", inst.dns), one, ctx), ctx));
  CHECK_FALSE(section_is_zero(apply_log_section(parse_operator("x*dx - s - 1", inst.dns), one, ctx), ctx));
}

TEST_CASE("derivation of a logarithmic section") {
  auto inst = ProblemInstance::parse({"x"}, "x", {"dx"});
  const SectionContext ctx = SectionContext::make(inst);
  // d/dx (x^s log x) = x^(s-1) (s log x + 1)
  const LogSection v = LogSection::basic(ctx, WeylOperator::constant(inst.dns, 1), 1);
  const LogSection dv = apply_log_section(parse_operator("dx", inst.dns), v, ctx);
  CHECK(same(ctx, dv, section(ctx, 1, {"1", "s"})));
  // (x*dx - s)^2 kills x^s log x, x*dx - s alone does not
  CHECK(section_is_zero(apply_log_section(parse_operator("(x*dx - s)^2", inst.dns), v, ctx), ctx));
  CHECK_FALSE(section_is_zero(apply_log_section(parse_operator("x*dx - s", inst.dns), v, ctx), ctx));
}

TEST_CASE("t and dt shift s") {
  auto inst = ProblemInstance::parse({"x"}, "x", {"dx"});
  const SectionContext ctx = SectionContext::make(inst);
  const LogSection one = LogSection::basic(ctx, WeylOperator::constant(inst.dns, 1));
  // t - f and s + dt*t annihilate f^s
  CHECK(section_is_zero(apply_log_section(parse_operator("t - x", inst.dn1), one, ctx), ctx));
  // -dt*t acts as s
  CHECK(same(ctx, apply_log_section(parse_operator("dt*t", inst.dn1), one, ctx),
             apply_log_section(parse_operator("-s", inst.dns), one, ctx)));
  // dx + dt acts like dx + f_x dt = tau(dx), which kills f^s (x) 1
  CHECK(section_is_zero(apply_log_section(parse_operator("dx + dt", inst.dn1), one, ctx), ctx));
  CHECK_THROWS_AS(apply_log_section(parse_operator("t", inst.dn1), LogSection::basic(ctx, WeylOperator::constant(inst.dns, 1), 1), ctx),
                  InputError);
}

TEST_CASE("action is linear and compatible with products") {
  std::mt19937 rng(7);
  auto inst = ProblemInstance::parse({"x", "y"}, "x^2 - y^3 + 1", {"dx + y", "dy + x"});
  const SectionContext ctx = SectionContext::make(inst);
  const auto dns_vars = holozeta::testing::all_vars(inst.dns);
  const auto dn1_vars = holozeta::testing::all_vars(inst.dn1);
  for (int i = 0; i < 20; ++i) {
    const auto P = holozeta::testing::random_operator(inst.dns, rng, dns_vars, 2);
    const auto Q = holozeta::testing::random_operator(inst.dns, rng, dns_vars, 2);
    const auto W0 = holozeta::testing::random_operator(inst.dns, rng, dns_vars, 1);
    const auto W1 = holozeta::testing::random_operator(inst.dns, rng, dns_vars, 1);
    const LogSection v = add(ctx, LogSection::basic(ctx, W0), LogSection::basic(ctx, W1, 1));
    REQUIRE(same(ctx, apply_log_section(P * Q, v, ctx), apply_log_section(P, apply_log_section(Q, v, ctx), ctx)));
    REQUIRE(same(ctx, apply_log_section(P + Q, v, ctx),
                 add(ctx, apply_log_section(P, v, ctx), apply_log_section(Q, v, ctx))));
  }
  // D_{n+1} on log-free sections
  for (int i = 0; i < 20; ++i) {
    const auto P = holozeta::testing::random_operator(inst.dn1, rng, dn1_vars, 2);
    const auto Q = holozeta::testing::random_operator(inst.dn1, rng, dn1_vars, 2);
    const LogSection v = LogSection::basic(ctx, holozeta::testing::random_operator(inst.dns, rng, dns_vars, 1));
    REQUIRE(same(ctx, apply_log_section(P * Q, v, ctx), apply_log_section(P, apply_log_section(Q, v, ctx), ctx)));
  }
}

TEST_CASE("zero test with a specialized s and f-torsion") {
  auto inst = ProblemInstance::parse({"x"}, "x", {"dx"});
  const SectionContext ctx = SectionContext::make(inst);
  const LogSection one = LogSection::basic(ctx, WeylOperator::constant(inst.dns, 1));
  // (s + 1) x^s vanishes at s = -1 only
  const LogSection v = apply_log_section(parse_operator("s + 1", inst.dns), one, ctx);
  CHECK(section_is_zero(v, ctx, Rational(-1)));
  CHECK_FALSE(section_is_zero(v, ctx, Rational(0)));
  CHECK_FALSE(section_is_zero(v, ctx));
}

TEST_CASE("numeric zeta of exp(-x) is Gamma") {
  auto inst = ProblemInstance::parse({"x"}, "x", {"dx + 1"});
  const std::vector<double> lambdas{0, 1, 2, 3.5, 7};
  const auto z = numeric_zeta(inst.f, PhiSpec{{PhiFactor::kExp}}, lambdas);
  for (const auto& s : z) CHECK(std::abs(s.value - std::tgamma(s.lambda + 1)) <= 1e-6 * std::tgamma(s.lambda + 1));
}

TEST_CASE("numeric zeta of exp(-x - 1/x) is a Bessel function") {
  auto inst = ProblemInstance::parse({"x"}, "x", {"x^2*dx + x^2 - 1"});
  const auto z = numeric_zeta(inst.f, PhiSpec{{PhiFactor::kExpInverse}}, {0, 1, 2, 3});
  for (const auto& s : z) {
    const double exact = 2 * boost::math::cyl_bessel_k(s.lambda + 1, 2.0);
    CHECK(std::abs(s.value - exact) <= 1e-6 * exact);
  }
}

TEST_CASE("two-dimensional quadrature against a one-dimensional reduction") {
  // (x^3 - y^2)_+ e^(-x^2 - y^2): for x > 0 the inner y-integral over |y| < x^(3/2) is
  // x^3 sqrt(pi) erf(a) - (sqrt(pi)/2 erf(a) - a e^(-a^2)), a = x^(3/2).
  auto inner = [](double x) {
    const double a = std::pow(x, 1.5), sp = std::sqrt(M_PI);
    return x * x * x * sp * std::erf(a) - (sp / 2 * std::erf(a) - a * std::exp(-a * a));
  };
  // composite Simpson on [0, 10]
  const int N = 40000;
  const double h = 10.0 / N;
  double sum = 0;
  for (int i = 0; i <= N; ++i) {
    const double x = i * h;
    const double w = (i == 0 || i == N) ? 1 : (i % 2 ? 4 : 2);
    sum += w * inner(x) * std::exp(-x * x);
  }
  const double reference = sum * h / 3;

  auto inst = ProblemInstance::parse({"x", "y"}, "x^3 - y^2", {"dx + 2*x", "dy + 2*y"});
  const PhiSpec phi{{PhiFactor::kGaussian, PhiFactor::kGaussian}};
  const auto coarse = numeric_zeta(inst.f, phi, {1}, {12, 1e-6, 14});
  const auto fine = numeric_zeta(inst.f, phi, {1}, {12, 1e-10, 18});
  CHECK(std::abs(coarse[0].value - reference) <= 1e-6 * reference);
  CHECK(std::abs(fine[0].value - reference) <= 1e-9 * reference);
}

TEST_CASE("residual check") {
  const std::vector<ZetaSample> z{{0, 1, 0}, {1, 1, 0}, {2, 2, 0}, {3, 6, 0}};
  // Gamma(l+1): E - (s+1)
  const DifferenceOperator gamma = DifferenceOperator::shift(1) - DifferenceOperator::scalar(UPoly::linear(-1));
  CHECK(residual_check({gamma}, z) == 0.0);
  // the unit operator has residual 1
  CHECK(residual_check({DifferenceOperator::scalar(UPoly::constant(1))}, z) == 1.0);
  CHECK_THROWS_AS(residual_check({gamma}, {{0, 1, 0}, {2, 2, 0}}), InputError);
  CHECK_THROWS_AS(residual_check({DifferenceOperator::shift(5) - gamma}, z), InputError);
  const Ring R = weyl_ring({"x"});
  CHECK_THROWS_AS(numeric_zeta(parse_operator("x", R), PhiSpec{{PhiFactor::kExp}}, {-1}), InputError);
  CHECK_THROWS_AS(numeric_zeta(parse_operator("x", R), PhiSpec{{PhiFactor::kExp, PhiFactor::kExp}}, {1}), InputError);
}
