#include <doctest.h>

#include <map>
#include <random>
#include <string>

#include "holozeta/format.hpp"
#include "holozeta/operator.hpp"

using namespace holozeta;

namespace {

// Independent oracle: words over single letters, rewritten one step at a time
// with d_i x_i -> x_i d_i + 1 until normally ordered. Letters: 'a'+i is x_i,
// 'A'+i is d_i.
std::map<std::string, long> normal_order_by_rewriting(const std::string& word) {
  std::map<std::string, long> pending{{word, 1}}, done;
  while (!pending.empty()) {
    auto [w, c] = *pending.begin();
    pending.erase(pending.begin());
    std::size_t i = 0;
    for (; i + 1 < w.size(); ++i) {
      const bool left_d = std::isupper(static_cast<unsigned char>(w[i]));
      const bool right_x = std::islower(static_cast<unsigned char>(w[i + 1]));
      if (left_d && right_x) break;
      // canonical order inside each block
      if (left_d == std::isupper(static_cast<unsigned char>(w[i + 1])) && w[i] > w[i + 1]) break;
    }
    if (i + 1 >= w.size()) {
      done[w] += c;
      continue;
    }
    std::string swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    pending[swapped] += c;
    if (std::isupper(static_cast<unsigned char>(w[i])) && std::islower(static_cast<unsigned char>(w[i + 1])) &&
        std::tolower(static_cast<unsigned char>(w[i])) == w[i + 1]) {
      pending[w.substr(0, i) + w.substr(i + 2)] += c;
    }
  }
  return done;
}

WeylOperator from_words(const Ring& ring, const std::map<std::string, long>& words) {
  WeylOperator r(ring);
  for (auto& [w, c] : words) {
    Monomial m;
    for (char ch : w) {
      if (std::islower(static_cast<unsigned char>(ch))) ++m[ring->coord(ch - 'a')];
      else ++m[ring->deriv(ch - 'A')];
    }
    r += WeylOperator::monomial(ring, m, c);
  }
  return r;
}

WeylOperator word_operator(const Ring& ring, const std::string& w) {
  WeylOperator r = WeylOperator::constant(ring, 1);
  for (char ch : w) {
    const int v = std::islower(static_cast<unsigned char>(ch)) ? ring->coord(ch - 'a') : ring->deriv(ch - 'A');
    r = r * WeylOperator::variable(ring, v);
  }
  return r;
}

}  // namespace

TEST_CASE("commutation relation") {
  Ring R = weyl_ring({"x"});
  auto x = WeylOperator::variable(R, 0), dx = WeylOperator::variable(R, 1);
  CHECK((dx * x).str() == "x*dx + 1");
  CHECK((dx + 2 * x) * x == parse_operator("x*dx + 2*x^2 + 1", R));
  CHECK((dx * dx * x * x).str() == "x^2*dx^2 + 4*x*dx + 2");
}

TEST_CASE("closed-form product agrees with stepwise rewriting") {
  Ring R = weyl_ring({"x", "y"});
  for (std::string w : {"AAaa", "AaAa", "ABab", "AAAaaa", "BAbaab", "AAaAaa"}) {
    CHECK(word_operator(R, w) == from_words(R, normal_order_by_rewriting(w)));
  }
}

TEST_CASE("homogenized product carries h^2 per contraction") {
  Ring R = weyl_ring({"x"}, false, {Central::kH});
  auto x = WeylOperator::variable(R, 0), dx = WeylOperator::variable(R, 1);
  CHECK((dx * x).str() == "x*dx + h^2");
  CHECK((dx * dx * x).str() == "x*dx^2 + 2*dx*h^2");
}

TEST_CASE("parser") {
  Ring R = weyl_ring({"x"});
  CHECK(parse_operator("x^2*dx + x^2 - 1", R).str() == "x^2*dx + x^2 - 1");
  CHECK(parse_operator("dx*x", R).str() == "x*dx + 1");
  CHECK(parse_operator("1/2*x - 3/6", R).str() == "1/2*x - 1/2");
  CHECK(parse_operator("-(x+1)^2", R).str() == "-x^2 - 2*x - 1");
  CHECK_THROWS_AS(parse_operator("3*x^-1", R), ParseError);
  CHECK_THROWS_AS(parse_operator("2x", R), ParseError);
  CHECK_THROWS_AS(parse_operator("x*y", R), ParseError);
  CHECK_THROWS_AS(parse_operator("1/0", R), ParseError);
  try {
    parse_operator("x + q", R, 4);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 5);
  }
}

TEST_CASE("random ring axioms") {
  Ring R = weyl_ring({"x", "y"});
  std::mt19937 rng(7);
  auto random_op = [&] {
    std::uniform_int_distribution<int> e(0, 3), c(-3, 3), n(1, 4);
    WeylOperator r(R);
    for (int k = n(rng); k > 0; --k) {
      Monomial m;
      int budget = 3;
      for (int v = 0; v < 4 && budget > 0; ++v) {
        const int x = std::min(e(rng), budget);
        m[v] = static_cast<std::uint16_t>(x);
        budget -= x;
      }
      r += WeylOperator::monomial(R, m, c(rng));
    }
    return r;
  };
  for (int i = 0; i < 200; ++i) {
    const auto a = random_op(), b = random_op(), c = random_op();
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a + b) * c == a * c + b * c);
    // round trip through text
    REQUIRE(parse_operator(a.str(), R) == a);
  }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      auto u = WeylOperator::variable(R, i), v = WeylOperator::variable(R, j);
      const bool pair = (i < 2 && j == i + 2) || (j < 2 && i == j + 2);
      WeylOperator comm = u * v - v * u;
      if (!pair) CHECK(comm.is_zero());
      else CHECK(comm == WeylOperator::constant(R, i > j ? 1 : -1));
    }
}
