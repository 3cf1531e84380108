#ifndef HOLOZETA_DETAIL_MULTIPLY_WORDS_HPP
#define HOLOZETA_DETAIL_MULTIPLY_WORDS_HPP

#include <algorithm>
#include <cstdint>

namespace holozeta {

namespace detail {

// C(n,k) * n2!/(n2-k)!, multiplied into `acc` (64-bit, overflow reported).
inline bool mul_leibniz_factor(std::uint64_t& acc, unsigned n, unsigned n2, unsigned k) {
  // binomial via the multiplicative formula keeps intermediates exact
  std::uint64_t binom = 1;
  for (unsigned j = 1; j <= k; ++j) {
    std::uint64_t t;
    if (__builtin_mul_overflow(binom, static_cast<std::uint64_t>(n - k + j), &t)) return false;
    binom = t / j;
  }
  if (__builtin_mul_overflow(acc, binom, &acc)) return false;
  for (unsigned j = 0; j < k; ++j)
    if (__builtin_mul_overflow(acc, static_cast<std::uint64_t>(n2 - j), &acc)) return false;
  return true;
}

inline void mul_leibniz_factor(Integer& acc, unsigned n, unsigned n2, unsigned k) {
  Integer binom;
  mpz_bin_uiui(binom.get_mpz_t(), n, k);
  acc *= binom;
  for (unsigned j = 0; j < k; ++j) acc *= static_cast<unsigned long>(n2 - j);
}

}  // namespace detail

template <class Emit>
void multiply_words(const RingSignature& sig, const Monomial& a, const Monomial& b, Emit&& emit) {
  Monomial base = mono_product(a, b);
  int active[kMaxVars];
  unsigned limit[kMaxVars];
  int np = 0;
  const int pairs = sig.pairs();
  for (int p = 0; p < pairs; ++p) {
    const unsigned da = a[sig.deriv(p)];
    const unsigned xb = b[sig.coord(p)];
    if (da && xb) {
      active[np] = p;
      limit[np] = std::min(da, xb);
      ++np;
    }
  }
  thread_local Integer factor;
  if (np == 0) {
    factor = 1;
    emit(static_cast<const Integer&>(factor), static_cast<const Monomial&>(base));
    return;
  }
  const int hvar = sig.central(Central::kH);
  unsigned k[kMaxVars] = {};
  for (;;) {
    Monomial m = base;
    std::uint64_t small = 1;
    bool fits = true;
    unsigned ksum = 0;
    for (int i = 0; i < np; ++i) {
      const int p = active[i];
      const int cv = sig.coord(p), dv = sig.deriv(p);
      m[cv] = static_cast<std::uint16_t>(m[cv] - k[i]);
      m[dv] = static_cast<std::uint16_t>(m[dv] - k[i]);
      ksum += k[i];
      if (fits) fits = detail::mul_leibniz_factor(small, a[dv], b[cv], k[i]);
    }
    if (hvar >= 0) m[hvar] = static_cast<std::uint16_t>(m[hvar] + 2 * ksum);
    if (fits) {
      mpz_set_ui(factor.get_mpz_t(), small);
    } else {
      factor = 1;
      for (int i = 0; i < np; ++i) {
        const int p = active[i];
        detail::mul_leibniz_factor(factor, a[sig.deriv(p)], b[sig.coord(p)], k[i]);
      }
    }
    emit(static_cast<const Integer&>(factor), static_cast<const Monomial&>(m));
    int i = 0;
    while (i < np && k[i] == limit[i]) k[i++] = 0;
    if (i == np) break;
    ++k[i];
  }
}

}  // namespace holozeta

#endif  // HOLOZETA_DETAIL_MULTIPLY_WORDS_HPP
