#ifndef HOLOZETA_RING_HPP
#define HOLOZETA_RING_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace holozeta {

// Upper bound on the number of generators of any ring handled by the engine.
inline constexpr int kMaxVars = 16;

// Central commutative variables that may be appended to a Weyl algebra.
//   kS      the Mellin parameter s
//   kSigma  and kTauH: the pair used to eliminate a weight homogenization
//   kH      homogenizing variable of the homogenized Weyl algebra, where
//           d*x = x*d + h^2 instead of x*d + 1
enum class Central : std::uint8_t { kS, kSigma, kTauH, kH };

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Generator layout: x_1..x_n, d_1..d_n, [t, dt], [central variables].
struct RingSignature {
  int n_x = 0;
  bool has_t = false;
  std::vector<Central> extra;
  std::vector<std::string> x_names;

  int pairs() const { return n_x + (has_t ? 1 : 0); }
  int num_vars() const { return 2 * pairs() + static_cast<int>(extra.size()); }

  // Index of the coordinate / derivation of the p-th commuting pair. The
  // pair n_x is (t, dt) when has_t is set.
  int coord(int pair) const { return pair < n_x ? pair : 2 * n_x; }
  int deriv(int pair) const { return pair < n_x ? n_x + pair : 2 * n_x + 1; }
  int t_index() const { return has_t ? 2 * n_x : -1; }
  int dt_index() const { return has_t ? 2 * n_x + 1 : -1; }
  int central(Central c) const;
  bool homogenized() const { return central(Central::kH) >= 0; }

  std::string var_name(int v) const;
  int find_var(std::string_view name) const;  // -1 if unknown

  // Pair index that variable v belongs to, or -1 for central variables.
  int pair_of(int v) const;
  bool is_coord(int v) const { return v < 2 * pairs() && pair_of(v) >= 0 && coord(pair_of(v)) == v; }
  bool is_deriv(int v) const { return v < 2 * pairs() && pair_of(v) >= 0 && deriv(pair_of(v)) == v; }

  bool operator==(const RingSignature&) const = default;
};

using Ring = std::shared_ptr<const RingSignature>;

// Validates and freezes a signature. Throws InputError on violations.
Ring make_ring(RingSignature sig);

// Convenience constructors.
Ring weyl_ring(std::vector<std::string> x_names, bool has_t = false,
               std::vector<Central> extra = {});

// Same x-names, different pair/extra configuration.
Ring derive_ring(const Ring& base, bool has_t, std::vector<Central> extra);

bool same_ring(const Ring& a, const Ring& b);

}  // namespace holozeta

#endif  // HOLOZETA_RING_HPP
