#include "holozeta/ring.hpp"

#include <algorithm>
#include <set>

namespace holozeta {

namespace {

const char* central_name(Central c) {
  switch (c) {
    case Central::kS: return "s";
    case Central::kSigma: return "sigma";
    case Central::kTauH: return "tau_h";
    case Central::kH: return "h";
  }
  return "?";
}

}  // namespace

int RingSignature::central(Central c) const {
  for (std::size_t i = 0; i < extra.size(); ++i)
    if (extra[i] == c) return 2 * pairs() + static_cast<int>(i);
  return -1;
}

std::string RingSignature::var_name(int v) const {
  if (v < 0 || v >= num_vars()) throw InternalError("variable index out of range");
  if (v < n_x) return x_names[v];
  if (v < 2 * n_x) return "d" + x_names[v - n_x];
  if (has_t && v == 2 * n_x) return "t";
  if (has_t && v == 2 * n_x + 1) return "dt";
  return central_name(extra[v - 2 * pairs()]);
}

int RingSignature::find_var(std::string_view name) const {
  for (int v = 0; v < num_vars(); ++v)
    if (var_name(v) == name) return v;
  return -1;
}

int RingSignature::pair_of(int v) const {
  if (v < n_x) return v;
  if (v < 2 * n_x) return v - n_x;
  if (has_t && (v == 2 * n_x || v == 2 * n_x + 1)) return n_x;
  return -1;
}

Ring make_ring(RingSignature sig) {
  if (sig.n_x < 0) throw InputError("negative variable count");
  if (static_cast<int>(sig.x_names.size()) != sig.n_x) {
    if (!sig.x_names.empty()) throw InputError("x_names does not match n_x");
    for (int i = 0; i < sig.n_x; ++i) sig.x_names.push_back("x" + std::to_string(i + 1));
  }
  if (sig.num_vars() > kMaxVars)
    throw InputError("ring has " + std::to_string(sig.num_vars()) + " generators; at most " +
                     std::to_string(kMaxVars) + " are supported");
  std::set<Central> seen(sig.extra.begin(), sig.extra.end());
  if (seen.size() != sig.extra.size()) throw InputError("duplicate central variable");
  const bool has_sigma = seen.count(Central::kSigma) > 0;
  const bool has_tau = seen.count(Central::kTauH) > 0;
  if (has_sigma != has_tau) throw InputError("sigma and tau_h must appear together");
  if (sig.has_t && seen.count(Central::kS))
    throw InputError("s cannot be a ring element alongside (t, dt)");
  if (seen.count(Central::kH) && sig.extra.back() != Central::kH)
    throw InputError("the homogenizing variable h must be the last generator");
  std::set<std::string> names;
  for (int v = 0; v < sig.num_vars(); ++v) {
    const std::string n = sig.var_name(v);
    if (n.empty()) throw InputError("empty variable name");
    if (!names.insert(n).second) throw InputError("duplicate generator name '" + n + "'");
  }
  return std::make_shared<const RingSignature>(std::move(sig));
}

Ring weyl_ring(std::vector<std::string> x_names, bool has_t, std::vector<Central> extra) {
  RingSignature sig;
  sig.n_x = static_cast<int>(x_names.size());
  sig.x_names = std::move(x_names);
  sig.has_t = has_t;
  sig.extra = std::move(extra);
  return make_ring(std::move(sig));
}

Ring derive_ring(const Ring& base, bool has_t, std::vector<Central> extra) {
  return weyl_ring(base->x_names, has_t, std::move(extra));
}

bool same_ring(const Ring& a, const Ring& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace holozeta
