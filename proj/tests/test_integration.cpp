#include <doctest.h>

#include "holozeta/format.hpp"
#include "holozeta/integration.hpp"
#include "random_ops.hpp"

using namespace holozeta;

namespace {

std::vector<std::string> strs(const std::vector<DifferenceOperator>& v) {
  std::vector<std::string> out;
  for (const auto& g : v) out.push_back(g.str());
  return out;
}

IdealPresentation ideal(const Ring& R, std::initializer_list<const char*> gens) {
  std::vector<WeylOperator> g;
  for (const char* s : gens) g.push_back(parse_operator(s, R));
  return IdealPresentation(R, g);
}

UPoly theta_poly(std::initializer_list<int> roots) {
  UPoly p = UPoly::constant(1);
  for (int r : roots) p = p * UPoly::linear(r);
  return p;
}

// sum_k a_k(s) E^k from integer coefficient lists, lowest degree first
DifferenceOperator dop(std::initializer_list<std::pair<int, std::vector<Rational>>> c) {
  std::map<int, UPoly> m;
  for (const auto& [k, v] : c) m[k] = UPoly(v);
  return DifferenceOperator(m);
}

}  // namespace

TEST_CASE("Fourier transform is an automorphism") {
  Ring R = weyl_ring({"x", "y"}, true);
  std::mt19937 rng(21);
  const auto vars = holozeta::testing::all_vars(R);
  for (int i = 0; i < 50; ++i) {
    const auto P = holozeta::testing::random_operator(R, rng, vars, 3);
    const auto Q = holozeta::testing::random_operator(R, rng, vars, 3);
    REQUIRE(fourier_transform(P * Q) == fourier_transform(P) * fourier_transform(Q));
    // F^2 is x -> -x, d -> -d; F^4 = id
    REQUIRE(fourier_transform(fourier_transform(fourier_transform(fourier_transform(P)))) == P);
  }
  CHECK(to_string(fourier_transform(parse_operator("x*dx + t", R))) == "-x*dx + t - 1");
}

TEST_CASE("weight b-functions of simple ideals") {
  Ring R = weyl_ring({"x"}, true);
  CHECK(weight_bfunction(ideal(R, {"dx"})) == theta_poly({0}));
  CHECK(weight_bfunction(ideal(R, {"x"})) == theta_poly({-1}));
  CHECK(weight_bfunction(ideal(R, {"dx^3"})) == theta_poly({0, 1, 2}));
  // restriction of <dx> is D_1 itself, of <x> is zero
  RestrictionData r = restriction(ideal(R, {"dx"}));
  CHECK(r.k0 == 0);
  CHECK(r.basis.size() == 1);
  r = restriction(ideal(R, {"x"}));
  CHECK_FALSE(r.k0.has_value());
}

TEST_CASE("restriction of the annihilator of x^2") {
  // x*dx - 2 annihilates x^2: in_w has theta - 2, k0 = 2, three basis words
  Ring R = weyl_ring({"x"}, true);
  const RestrictionData r = restriction(ideal(R, {"x*dx - 2"}));
  CHECK(r.bw == theta_poly({2}));
  CHECK(r.k0 == 2);
  CHECK(r.basis.size() == 3);
}

TEST_CASE("integration ideal with no surviving restriction is the unit ideal") {
  // Integrating 1 over x in D_2 = <x, dx, t, dt>: the Fourier image of <dx, t> is <x, t>,
  // whose weight b-function theta + 1 has no nonnegative integer root.
  Ring R = weyl_ring({"x"}, true);
  const IdealPresentation J = ideal(R, {"dx", "t"});
  CHECK(weight_bfunction(fourier_transform(J)) == theta_poly({-1}));
  const IdealPresentation I = integration_ideal(J);
  REQUIRE(I.basis().size() == 1);
  CHECK(I.basis()[0].is_constant());
}

TEST_CASE("Mellin transform is a homomorphism") {
  Ring D1 = weyl_ring({}, true);
  std::mt19937 rng(17);
  const auto vars = holozeta::testing::all_vars(D1);
  for (int i = 0; i < 100; ++i) {
    const auto P = holozeta::testing::random_operator(D1, rng, vars, 3);
    const auto Q = holozeta::testing::random_operator(D1, rng, vars, 3);
    REQUIRE(mellin(P * Q) == mellin(P) * mellin(Q));
    REQUIRE(mellin(P + Q) == mellin(P) + mellin(Q));
  }
}

TEST_CASE("Mellin images of words") {
  Ring D1 = weyl_ring({}, true);
  CHECK(mellin(parse_operator("t - 1", D1)).str() == "E - 1");
  CHECK(mellin(parse_operator("dt*t", D1)).str() == "-s");
  CHECK(mellin(parse_operator("t*dt", D1)).str() == "-(s+1)");
  CHECK(mellin(parse_operator("dt", D1)).str() == "-s*E^-1");
  CHECK(mellin(parse_operator("t^2*dt", D1)) == dop({{1, {-2, -1}}}));
}

TEST_CASE("difference operator arithmetic and normalization") {
  const DifferenceOperator E = DifferenceOperator::shift(1);
  const DifferenceOperator s = DifferenceOperator::scalar(UPoly::monomial(1));
  // E s = (s+1) E
  CHECK(E * s == dop({{1, {1, 1}}}));
  CHECK((E * s - s * E) == E);
  const DifferenceOperator L = dop({{-2, {Rational(1, 2)}}, {-1, {0, Rational(-3, 2)}}});
  // E^2 L = 1/2 - 3/2 (s+2) E, normalized to integers with positive top sign
  CHECK(L.normalized().str() == "(3*s+6)*E - 1");
  CHECK(L.normalized().min_power() == 0);
  CHECK(L.order() == 1);
  CHECK(DifferenceOperator().str() == "0");
}

TEST_CASE("Mellin image of the Gamma function ideal") {
  auto inst = ProblemInstance::parse({"x"}, "x", {"dx + 1"});
  const ZetaResult z = zeta_difference(inst);
  CHECK(z.bw == theta_poly({0}));
  CHECK(z.k0 == 0);
  CHECK(strs(z.ops) == std::vector<std::string>{"E - (s+1)"});
}

TEST_CASE("Mellin image for exp(-x - 1/x)") {
  auto inst = ProblemInstance::parse({"x"}, "x", {"x^2*dx + x^2 - 1"});
  const ZetaResult z = zeta_difference(inst);
  REQUIRE(z.d1_ideal.basis().size() == 1);
  CHECK(to_string(z.d1_ideal.basis()[0]) == "t^2*dt + t^2 - 1");
  CHECK(strs(z.ops) == std::vector<std::string>{"E^2 - (s+2)*E - 1"});
}

TEST_CASE("difference equation of the cusp with a Gaussian weight") {
  auto inst = ProblemInstance::parse({"x", "y"}, "x^3 - y^2", {"dx + 2*x", "dy + 2*y"});
  const ZetaResult z = zeta_difference(inst);
  CHECK(z.bw == theta_poly({0, 1, 2}));
  CHECK(z.k0 == 2);
  REQUIRE(!z.ops.empty());
  // 32E^4 + 16(4s+13)E^3 - 4(s+3)(27s^2+154s+211)E^2 - 6(s+2)(s+3)(36s^2+162s+173)E
  //   - 3(s+1)(s+2)(s+3)(6s+5)(6s+13)
  const UPoly s1 = UPoly::linear(-1), s2 = UPoly::linear(-2), s3 = UPoly::linear(-3);
  std::map<int, UPoly> c;
  c[4] = UPoly::constant(32);
  c[3] = UPoly(std::vector<Rational>{208, 64});
  c[2] = Rational(-4) * s3 * UPoly(std::vector<Rational>{211, 154, 27});
  c[1] = Rational(-6) * s2 * s3 * UPoly(std::vector<Rational>{173, 162, 36});
  c[0] = Rational(-3) * s1 * s2 * s3 * UPoly(std::vector<Rational>{5, 6}) * UPoly(std::vector<Rational>{13, 6});
  const DifferenceOperator expected(c);
  CHECK(in_left_ideal(expected, z.ops));
  CHECK(z.ops.front() == expected.normalized());
}

TEST_CASE("right remainder and gcrd") {
  const DifferenceOperator E = DifferenceOperator::shift(1);
  const DifferenceOperator A = E - DifferenceOperator::scalar(UPoly::linear(-1));  // E - (s+1)
  const DifferenceOperator B = E * E + DifferenceOperator::scalar(UPoly::constant(3));
  // (B*A) has remainder zero modulo A, and gcrd(B*A, A) = A
  CHECK(right_remainder(B * A, A).is_zero());
  CHECK(gcrd({B * A, A}) == A.normalized());
  CHECK(in_left_ideal(B * A, {A}));
  CHECK_FALSE(in_left_ideal(B, {A}));
  // coprime operators generate everything
  CHECK(gcrd({A, E - DifferenceOperator::scalar(UPoly::constant(2))}).order() == 0);
}
