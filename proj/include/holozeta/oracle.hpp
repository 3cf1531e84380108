#ifndef HOLOZETA_ORACLE_HPP
#define HOLOZETA_ORACLE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "holozeta/annihilator.hpp"
#include "holozeta/integration.hpp"
#include "holozeta/laurent.hpp"

namespace holozeta {

// Data shared by all sections of L~ (x) M for one instance: f and its
// partials in D_n[s], and a reduced basis of D_n[s] I used to reduce
// elements of M[s] = D_n[s]/D_n[s] I to normal form.
struct SectionContext {
  Ring dns;
  WeylOperator f;
  std::vector<WeylOperator> partials;
  std::vector<WeylOperator> gb;
  TermOrder order;

  static SectionContext make(const ProblemInstance& inst);
  WeylOperator reduce(const WeylOperator& w) const;
};

// f^(s - fpow) * sum_j (log f)^j (x) [w[j]],  w[j] in M[s] (normal forms).
struct LogSection {
  int fpow = 0;
  std::vector<WeylOperator> w;

  // f^s (log f)^j (x) [W]
  static LogSection basic(const SectionContext& ctx, const WeylOperator& W, int j = 0);
  bool empty() const;
  int log_degree() const { return static_cast<int>(w.size()) - 1; }
};

LogSection add(const SectionContext& ctx, const LogSection& a, const LogSection& b);
LogSection scale(const SectionContext& ctx, const LogSection& a, const Rational& c);

// P in D_n[s], D_n, or D_{n+1}. In D_{n+1}, t acts by s -> s+1 together with
// multiplication by f and dt by s -> s-1 together with -s f^(-1); those two
// are only defined on log-free sections (InputError otherwise).
LogSection apply_log_section(const WeylOperator& P, const LogSection& v, const SectionContext& ctx);

// Zero test in L~ (x) M. With `s_value`, s is specialized first. If the
// section is not visibly zero, f^k times it is tried for k <= max_fpow
// (M not f-saturated); `needed` receives the smallest such k.
bool section_is_zero(const LogSection& v, const SectionContext& ctx,
                     const std::optional<Rational>& s_value = std::nullopt, int max_fpow = 0,
                     int* needed = nullptr);

// The k-th Laurent coefficient sum_j Q_kj (f^s (log f)^j (x) u) of sys, to be
// read at s = lambda0 + sys.m.
LogSection laurent_section(const SectionContext& ctx, const LaurentSystem& sys);

// ---- numerics ----

// Test function phi as a product of one factor per coordinate.
enum class PhiFactor {
  kGaussian,     // exp(-x^2)
  kExp,          // exp(-x)
  kExpInverse,   // exp(-x - 1/x) for x > 0, 0 otherwise
};

struct PhiSpec {
  std::vector<PhiFactor> factors;

  double eval(const std::vector<double>& x) const;
};

class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double estimate, double error)
      : std::runtime_error(what), estimate_(estimate), error_(error) {}
  double estimate() const { return estimate_; }
  double error() const { return error_; }

 private:
  double estimate_, error_;
};

struct ZetaSample {
  double lambda = 0;
  double value = 0;
  double error = 0;  // quadrature error estimate
};

struct QuadratureOptions {
  double box = 12;   // half-width for gaussian and exponential directions
  double tol = 1e-6;
  int depth = 14;    // adaptive subdivision depth of the outer integral
};

// Z(lambda) = int f_+^lambda phi dx for n <= 2 and lambda >= 0, one task per
// lambda. Throws NumericError when the error estimate exceeds 10 * tol
// relative.
std::vector<ZetaSample> numeric_zeta(const WeylOperator& f, const PhiSpec& phi,
                                     const std::vector<double>& lambdas,
                                     const QuadratureOptions& options = {});

// max over operators and admissible grid points of
// |sum_i a_i(l) Z(l+i)| / max_i |a_i(l) Z(l+i)|. Samples must be spaced by 1.
double residual_check(const std::vector<DifferenceOperator>& ops, const std::vector<ZetaSample>& z);

}  // namespace holozeta

#endif  // HOLOZETA_ORACLE_HPP
