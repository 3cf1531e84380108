#ifndef HOLOZETA_MONOMIAL_HPP
#define HOLOZETA_MONOMIAL_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>

#include "holozeta/ring.hpp"

namespace holozeta {

// Normally ordered word x^a d^b (t^c dt^e) (central^k), optionally tagged
// with a free-module component.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t comp = 0;

  std::uint16_t& operator[](int v) { return e[static_cast<std::size_t>(v)]; }
  std::uint16_t operator[](int v) const { return e[static_cast<std::size_t>(v)]; }

  int degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  bool is_one() const {
    for (auto x : e)
      if (x) return false;
    return true;
  }
  // Bit v set iff exponent of variable v is positive.
  std::uint32_t support() const {
    std::uint32_t m = 0;
    for (int v = 0; v < kMaxVars; ++v)
      if (e[static_cast<std::size_t>(v)]) m |= (1u << v);
    return m;
  }

  bool operator==(const Monomial&) const = default;
};

// Commutative divisibility on exponent vectors, same component.
inline bool divides(const Monomial& a, const Monomial& b) {
  if (a.comp != b.comp) return false;
  for (int v = 0; v < kMaxVars; ++v)
    if (a[v] > b[v]) return false;
  return true;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.comp = a.comp;
  for (int v = 0; v < kMaxVars; ++v) r[v] = a[v] > b[v] ? a[v] : b[v];
  return r;
}

// b / a, assuming divides(a, b). Result carries component 0.
inline Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial r;
  for (int v = 0; v < kMaxVars; ++v) r[v] = static_cast<std::uint16_t>(b[v] - a[v]);
  return r;
}

inline Monomial mono_product(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.comp = a.comp + b.comp;
  for (int v = 0; v < kMaxVars; ++v) r[v] = static_cast<std::uint16_t>(a[v] + b[v]);
  return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (int v = 0; v < kMaxVars; ++v)
    if (a[v] && b[v]) return false;
  return true;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = m.comp * 0x9e3779b97f4a7c15ull;
    for (auto x : m.e) h = (h ^ x) * 0x100000001b3ull;
    return h;
  }
};

}  // namespace holozeta

#endif  // HOLOZETA_MONOMIAL_HPP
