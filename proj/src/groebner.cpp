#include "holozeta/groebner.hpp"

#include <algorithm>
#include <set>

namespace holozeta {

namespace {

struct ITerm {
  Integer c;
  Monomial m;
};

// Integer polynomial (or module vector, via Monomial::comp) with terms
// strictly descending in the engine order.
struct IPoly {
  std::vector<ITerm> t;
  int sugar = 0;
  std::uint32_t xmask = 0;  // pairs in which a coordinate occurs
  std::uint32_t dmask = 0;  // pairs in which a derivation occurs
  std::uint32_t lmask = 0;  // support of the leading monomial
};

class Engine {
 public:
  Engine(const RingSignature& sig, const TermOrder& order, const GbOptions& opt)
      : sig_(sig), order_(order), opt_(opt) {}

  // Rational term list (any order, components in Monomial::comp) to a primitive
  // integer polynomial. `factor` receives k with result = k * input.
  IPoly import(const std::vector<Term>& terms, Rational* factor = nullptr) const {
    IPoly p;
    Integer den = 1;
    for (const Term& t : terms) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    p.t.reserve(terms.size());
    for (const Term& t : terms) p.t.push_back({t.coeff.get_num() * (den / t.coeff.get_den()), t.mono});
    std::sort(p.t.begin(), p.t.end(),
              [this](const ITerm& a, const ITerm& b) { return order_.greater(a.m, b.m); });
    Integer g = content(p.t);
    if (!p.t.empty() && p.t.front().c < 0) g = -g;
    if (!p.t.empty() && g != 1)
      for (ITerm& t : p.t) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
    if (factor) *factor = Rational(den, p.t.empty() ? Integer(1) : g);
    if (factor) factor->canonicalize();
    finish(p);
    int d = 0;
    for (const ITerm& t : p.t) d = std::max(d, t.m.degree());
    p.sugar = d;
    return p;
  }

  void finish(IPoly& p) const {
    p.xmask = p.dmask = 0;
    for (const ITerm& t : p.t) {
      for (int q = 0; q < sig_.pairs(); ++q) {
        if (t.m[sig_.coord(q)]) p.xmask |= 1u << q;
        if (t.m[sig_.deriv(q)]) p.dmask |= 1u << q;
      }
    }
    p.lmask = p.t.empty() ? 0 : p.t.front().m.support();
  }

  static Integer content(const std::vector<ITerm>& t) {
    Integer g = 0;
    for (const ITerm& x : t) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.c.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  static void make_primitive(IPoly& p) {
    if (p.t.empty()) return;
    Integer g = content(p.t);
    if (p.t.front().c < 0) g = -g;
    if (g == 1) return;
    for (ITerm& t : p.t) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
  }

  // q * g (q a word with component 0), sorted in the engine order.
  void left_multiply(const Monomial& q, const IPoly& g, std::vector<ITerm>& out) const {
    out.clear();
    bool commutes = true;
    for (int p = 0; p < sig_.pairs() && commutes; ++p)
      if (q[sig_.deriv(p)] && (g.xmask >> p & 1u)) commutes = false;
    if (commutes) {
      out.reserve(g.t.size());
      for (const ITerm& t : g.t) out.push_back({t.c, mono_product(q, t.m)});
      return;
    }
    for (const ITerm& t : g.t) {
      multiply_words(sig_, q, t.m, [&](const Integer& f, const Monomial& m) {
        out.push_back({t.c * f, m});
      });
    }
    std::sort(out.begin(), out.end(),
              [this](const ITerm& a, const ITerm& b) { return order_.greater(a.m, b.m); });
    std::size_t w = 0;
    for (std::size_t i = 0; i < out.size();) {
      std::size_t j = i + 1;
      Integer c = std::move(out[i].c);
      while (j < out.size() && out[j].m == out[i].m) c += out[j++].c;
      if (c != 0) {
        out[w].m = out[i].m;
        out[w].c = std::move(c);
        ++w;
      }
      i = j;
    }
    out.resize(w);
  }

  // a * x[from..] - b * y, both sorted; writes into out.
  void combine(const Integer& a, const std::vector<ITerm>& x, std::size_t from, const Integer& b,
               const std::vector<ITerm>& y, std::vector<ITerm>& out) const {
    out.clear();
    out.reserve(x.size() - from + y.size());
    const bool a_one = a == 1;
    std::size_t i = from, j = 0;
    while (i < x.size() || j < y.size()) {
      int c;
      if (i == x.size()) c = -1;
      else if (j == y.size()) c = 1;
      else c = order_.compare(x[i].m, y[j].m);
      if (c > 0) {
        out.push_back({a_one ? x[i].c : Integer(a * x[i].c), x[i].m});
        ++i;
      } else if (c < 0) {
        out.push_back({Integer(-b * y[j].c), y[j].m});
        ++j;
      } else {
        Integer v = a * x[i].c - b * y[j].c;
        if (v != 0) out.push_back({std::move(v), x[i].m});
        ++i;
        ++j;
      }
    }
  }

  void check_deadline() const {
    if (opt_.deadline && Clock::now() > *opt_.deadline) throw TimeoutError(opt_.stage);
  }

  // Records p_in * scale == sum cof_i * polys_i + p_out.
  struct Tracking {
    Integer scale = 1;
    bool cofactors = true;
    std::vector<std::vector<ITerm>> cof;  // unsorted, per reducer
  };

  // Full reduction of p by the polynomials polys[idx] (idx listing order).
  // first_divisor: pick the first divisor in listing order; otherwise the
  // shortest one.
  void reduce(IPoly& p, const std::vector<IPoly>& polys, const std::vector<int>& idx,
              bool first_divisor, Tracking* track, std::size_t skip_head = 0) const {
    std::vector<ITerm> done(p.t.begin(), p.t.begin() + static_cast<long>(std::min(skip_head, p.t.size())));
    std::vector<ITerm> work(p.t.begin() + static_cast<long>(done.size()), p.t.end());
    std::vector<ITerm> prod, next;
    std::size_t pos = 0;
    unsigned steps = 0;
    while (pos < work.size()) {
      const Monomial& m = work[pos].m;
      const std::uint32_t ms = m.support();
      int best = -1;
      for (int k : idx) {
        const IPoly& g = polys[static_cast<std::size_t>(k)];
        if ((g.lmask & ~ms) != 0 || !divides(g.t.front().m, m)) continue;
        if (best < 0 || g.t.size() < polys[static_cast<std::size_t>(best)].t.size()) best = k;
        if (first_divisor) break;
      }
      if (best < 0) {
        done.push_back(std::move(work[pos]));
        ++pos;
        continue;
      }
      const IPoly& g = polys[static_cast<std::size_t>(best)];
      const Monomial q = quotient(m, g.t.front().m);
      left_multiply(q, g, prod);
      Integer gg;
      mpz_gcd(gg.get_mpz_t(), work[pos].c.get_mpz_t(), prod.front().c.get_mpz_t());
      Integer a = prod.front().c / gg, b = work[pos].c / gg;
      if (a < 0) {
        a = -a;
        b = -b;
      }
      combine(a, work, pos, b, prod, next);
      work.swap(next);
      pos = 0;
      if (a != 1)
        for (ITerm& t : done) t.c *= a;
      p.sugar = std::max(p.sugar, q.degree() + g.sugar);
      if (track) {
        if (a != 1) {
          track->scale *= a;
          if (track->cofactors)
            for (auto& v : track->cof)
              for (ITerm& t : v) t.c *= a;
        }
        if (track->cofactors) track->cof[static_cast<std::size_t>(best)].push_back({b, q});
      }
      if (++steps % 32 == 0) {
        check_deadline();
        if (!track) {
          Integer c = 0;
          for (const ITerm& t : done) {
            mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.c.get_mpz_t());
            if (c == 1) break;
          }
          for (std::size_t i = 0; i < work.size() && c != 1; ++i)
            mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), work[i].c.get_mpz_t());
          if (c > 1) {
            for (ITerm& t : done) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
            for (ITerm& t : work) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
          }
        }
      }
    }
    p.t = std::move(done);
    if (!track) make_primitive(p);
    finish(p);
  }

  // ---- Buchberger

  struct Pair {
    int i, j;
    Monomial lcm;
    int sugar;
  };

  struct PairLess {
    const TermOrder* order;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      const int c = order->compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    }
  };

  bool commute(const IPoly& a, const IPoly& b) const {
    return (a.xmask & b.dmask) == 0 && (a.dmask & b.xmask) == 0;
  }

  void insert(IPoly h, std::set<Pair, PairLess>& pairs) {
    const int k = static_cast<int>(polys_.size());
    const Monomial lk = h.t.front().m;
    polys_.push_back(std::move(h));
    active_.push_back(false);
    const IPoly& hk = polys_.back();

    struct Cand {
      int i;
      Monomial l;
      bool prod;
      bool keep = true;
    };
    std::vector<Cand> cands;
    for (int i = 0; i < k; ++i) {
      if (!active_[static_cast<std::size_t>(i)]) continue;
      const Monomial& li = polys_[static_cast<std::size_t>(i)].t.front().m;
      if (li.comp != lk.comp) continue;
      const bool prod = opt_.product_criterion && allow_product_ && coprime(li, lk) &&
                        commute(polys_[static_cast<std::size_t>(i)], hk);
      cands.push_back({i, lcm(li, lk), prod});
    }
    if (opt_.chain_criterion) {
      for (Cand& c : cands)
        for (const Cand& c2 : cands)
          if (&c2 != &c && divides(c2.l, c.l) && !(c2.l == c.l)) {
            c.keep = false;
            break;
          }
      for (std::size_t a = 0; a < cands.size(); ++a) {
        if (!cands[a].keep) continue;
        for (std::size_t b = a + 1; b < cands.size(); ++b) {
          if (cands[b].keep && cands[b].l == cands[a].l) {
            if (cands[b].prod) cands[a].prod = true;
            cands[b].keep = false;
          }
        }
      }
      for (auto it = pairs.begin(); it != pairs.end();) {
        const Monomial& li = polys_[static_cast<std::size_t>(it->i)].t.front().m;
        const Monomial& lj = polys_[static_cast<std::size_t>(it->j)].t.front().m;
        if (divides(lk, it->lcm) && !(lcm(li, lk) == it->lcm) && !(lcm(lj, lk) == it->lcm))
          it = pairs.erase(it);
        else
          ++it;
      }
    }
    for (const Cand& c : cands) {
      if (!c.keep || c.prod) continue;
      const IPoly& gi = polys_[static_cast<std::size_t>(c.i)];
      const int dl = c.l.degree();
      const int s = std::max(gi.sugar + dl - gi.t.front().m.degree(), hk.sugar + dl - lk.degree());
      pairs.insert({c.i, k, c.l, s});
      ++stats_.pairs_created;
    }
    for (int i = 0; i < k; ++i)
      if (active_[static_cast<std::size_t>(i)] &&
          divides(lk, polys_[static_cast<std::size_t>(i)].t.front().m))
        active_[static_cast<std::size_t>(i)] = false;
    active_[static_cast<std::size_t>(k)] = true;
  }

  std::vector<int> active_indices() const {
    std::vector<int> idx;
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (active_[i]) idx.push_back(static_cast<int>(i));
    return idx;
  }

  IPoly spoly(const Pair& pr) const {
    const IPoly& a = polys_[static_cast<std::size_t>(pr.i)];
    const IPoly& b = polys_[static_cast<std::size_t>(pr.j)];
    std::vector<ITerm> pa, pb;
    left_multiply(quotient(pr.lcm, a.t.front().m), a, pa);
    left_multiply(quotient(pr.lcm, b.t.front().m), b, pb);
    Integer g;
    mpz_gcd(g.get_mpz_t(), pa.front().c.get_mpz_t(), pb.front().c.get_mpz_t());
    const Integer ca = pb.front().c / g, cb = pa.front().c / g;
    IPoly s;
    combine(ca, pa, 0, cb, pb, s.t);
    s.sugar = pr.sugar;
    make_primitive(s);
    finish(s);
    return s;
  }

  // Runs Buchberger on the given generators; returns the reduced basis.
  std::vector<IPoly> run(std::vector<IPoly> gens, bool allow_product) {
    const auto start = Clock::now();
    allow_product_ = allow_product;
    std::sort(gens.begin(), gens.end(), [this](const IPoly& a, const IPoly& b) {
      if (a.t.empty() || b.t.empty()) return !a.t.empty() < !b.t.empty();
      return order_.greater(b.t.front().m, a.t.front().m);
    });
    PairLess less{&order_};
    std::set<Pair, PairLess> pairs(less);
    bool unit = false;
    for (IPoly& g : gens) {
      if (g.t.empty()) continue;
      reduce(g, polys_, active_indices(), false, nullptr);
      if (g.t.empty()) continue;
      const bool is_unit = g.t.front().m.is_one() && !module_;
      insert(std::move(g), pairs);
      if (is_unit) {
        unit = true;
        break;
      }
    }
    while (!unit && !pairs.empty()) {
      check_deadline();
      const Pair pr = *pairs.begin();
      pairs.erase(pairs.begin());
      IPoly s = spoly(pr);
      ++stats_.pairs_reduced;
      if (!s.t.empty()) reduce(s, polys_, active_indices(), false, nullptr);
      if (s.t.empty()) {
        ++stats_.zero_reductions;
        continue;
      }
      const bool is_unit = s.t.front().m.is_one() && !module_;
      insert(std::move(s), pairs);
      if (is_unit) unit = true;
    }
    std::vector<IPoly> basis;
    if (unit) {
      IPoly one;
      one.t.push_back({Integer(1), Monomial{}});
      finish(one);
      basis.push_back(std::move(one));
    } else {
      for (int i : active_indices()) basis.push_back(polys_[static_cast<std::size_t>(i)]);
      std::sort(basis.begin(), basis.end(), [this](const IPoly& a, const IPoly& b) {
        return order_.greater(b.t.front().m, a.t.front().m);
      });
      std::vector<int> all(basis.size());
      for (std::size_t i = 0; i < basis.size(); ++i) all[i] = static_cast<int>(i);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        std::vector<int> others;
        for (int j : all)
          if (static_cast<std::size_t>(j) != i) others.push_back(j);
        IPoly g = basis[i];
        reduce(g, basis, others, false, nullptr, 1);
        basis[i] = std::move(g);
      }
    }
    stats_.basis_size = basis.size();
    stats_.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return basis;
  }

  void set_module(bool m) { module_ = m; }
  const GbStats& stats() const { return stats_; }

  std::vector<Term> export_monic(const IPoly& p) const {
    std::vector<Term> out;
    out.reserve(p.t.size());
    const Integer& lc = p.t.front().c;
    for (const ITerm& t : p.t) {
      Rational c(t.c, lc);
      c.canonicalize();
      out.push_back({std::move(c), t.m});
    }
    return out;
  }

 private:
  const RingSignature& sig_;
  TermOrder order_;
  GbOptions opt_;
  std::vector<IPoly> polys_;
  std::vector<bool> active_;
  bool allow_product_ = true;
  bool module_ = false;
  GbStats stats_;
};

std::vector<Term> vector_terms(const OperatorVector& v) {
  std::vector<Term> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (const Term& t : v[i].terms()) {
      Term x = t;
      x.mono.comp = static_cast<std::uint32_t>(i);
      out.push_back(std::move(x));
    }
  return out;
}

OperatorVector split_terms(const Ring& ring, int rank, const std::vector<Term>& terms) {
  std::vector<std::vector<Term>> parts(static_cast<std::size_t>(rank));
  for (const Term& t : terms) {
    if (t.mono.comp >= static_cast<std::uint32_t>(rank)) throw InternalError("component out of range");
    Term x = t;
    x.mono.comp = 0;
    parts[t.mono.comp].push_back(std::move(x));
  }
  OperatorVector out;
  for (auto& p : parts) out.push_back(WeylOperator::from_terms(ring, std::move(p)));
  return out;
}

bool homogeneous_for(const TermOrder::Row& r, const std::vector<Term>& terms, int nv) {
  if (terms.empty()) return true;
  const long w0 = TermOrder::row_weight(r, terms.front().mono, nv);
  for (const Term& t : terms)
    if (TermOrder::row_weight(r, t.mono, nv) != w0) return false;
  return true;
}

// Orders with negative rows are well-orders only on inputs homogeneous for
// them (or for an earlier strictly positive row).
void check_admissible(const RingSignature& sig, const TermOrder& order,
                      const std::vector<std::vector<Term>>& inputs) {
  const int nv = sig.num_vars();
  const auto& rows = order.rows();
  const int h = sig.central(Central::kH);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& r = rows[k];
    bool negative = false;
    for (int v = 0; v < nv; ++v) negative = negative || r[v] < 0;
    // commutator terms must not outweigh the product of leading words
    for (int p = 0; p < sig.pairs(); ++p) {
      const int excess = r[sig.coord(p)] + r[sig.deriv(p)] - (h >= 0 ? 2 * r[h] : 0);
      if (excess < 0 || (negative && excess != 0))
        throw InputError("weight row is incompatible with the commutation relations");
    }
    if (!negative) continue;
    bool covered = false;
    for (std::size_t e = 0; e < k && !covered; ++e) {
      bool positive = true;
      for (int v = 0; v < nv; ++v) positive = positive && rows[e][v] > 0;
      if (!positive) continue;
      covered = std::all_of(inputs.begin(), inputs.end(),
                            [&](const auto& in) { return homogeneous_for(rows[e], in, nv); });
    }
    if (covered) continue;
    for (const auto& in : inputs)
      if (!homogeneous_for(r, in, nv))
        throw InputError("non-homogeneous input under a weight order with negative weights");
  }
}

void require_ring(const Ring& ring, const WeylOperator& op) {
  if (!op.is_zero() && !same_ring(ring, op.ring()))
    throw InputError("operator does not belong to the ring of the presentation");
}

}  // namespace

IdealPresentation::IdealPresentation(Ring ring, std::vector<WeylOperator> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)) {
  for (const auto& g : generators_) require_ring(ring_, g);
}

const std::vector<WeylOperator>& IdealPresentation::basis() const {
  if (!basis_) throw InternalError("no Groebner basis cached");
  return *basis_;
}

const TermOrder& IdealPresentation::basis_order() const {
  if (!order_) throw InternalError("no Groebner basis cached");
  return *order_;
}

void IdealPresentation::set_basis(std::vector<WeylOperator> basis, TermOrder order, GbStats stats) {
  basis_ = std::move(basis);
  order_ = std::move(order);
  stats_ = stats;
}

SubmodulePresentation::SubmodulePresentation(Ring ring, int rank, std::vector<OperatorVector> generators)
    : ring_(std::move(ring)), rank_(rank), generators_(std::move(generators)) {
  if (rank_ < 1) throw InputError("module rank must be positive");
  for (const auto& v : generators_) {
    if (static_cast<int>(v.size()) != rank_) throw InputError("generator length differs from module rank");
    for (const auto& g : v) require_ring(ring_, g);
  }
}

const std::vector<OperatorVector>& SubmodulePresentation::basis() const {
  if (!basis_) throw InternalError("no Groebner basis cached");
  return *basis_;
}

const TermOrder& SubmodulePresentation::basis_order() const {
  if (!order_) throw InternalError("no Groebner basis cached");
  return *order_;
}

void SubmodulePresentation::set_basis(std::vector<OperatorVector> basis, TermOrder order, GbStats stats) {
  basis_ = std::move(basis);
  order_ = std::move(order);
  stats_ = stats;
}

NormalForm normal_form(const WeylOperator& p, std::span<const WeylOperator> G, const TermOrder& order,
                       bool track_cofactors) {
  NormalForm out;
  if (p.is_zero()) {
    out.remainder = p;
    if (track_cofactors)
      for (const auto& g : G) out.cofactors.push_back(WeylOperator(g.ring()));
    return out;
  }
  const Ring& ring = p.ring();
  for (const auto& g : G) require_ring(ring, g);
  Engine eng(*ring, order, {});
  std::vector<IPoly> polys;
  std::vector<Rational> factors;
  std::vector<int> idx;
  for (std::size_t i = 0; i < G.size(); ++i) {
    Rational k;
    polys.push_back(eng.import(G[i].terms(), &k));
    factors.push_back(k);
    if (!polys.back().t.empty()) idx.push_back(static_cast<int>(i));
  }
  Rational kp;
  IPoly w = eng.import(p.terms(), &kp);
  Engine::Tracking track;
  track.cofactors = track_cofactors;
  track.cof.resize(G.size());
  eng.reduce(w, polys, idx, true, &track);
  // kp * p * scale == sum cof_i * factors_i * G_i + w
  const Rational denom = track.scale * kp;
  std::vector<Term> rem;
  for (const ITerm& t : w.t) rem.push_back({Rational(t.c) / denom, t.m});
  out.remainder = WeylOperator::from_terms(ring, std::move(rem));
  if (track_cofactors) {
    for (std::size_t i = 0; i < G.size(); ++i) {
      std::vector<Term> terms;
      for (const ITerm& t : track.cof[i]) terms.push_back({Rational(t.c) * factors[i] / denom, t.m});
      out.cofactors.push_back(WeylOperator::from_terms(ring, std::move(terms)));
    }
  }
  return out;
}

OperatorVector module_normal_form(const OperatorVector& p, std::span<const OperatorVector> G,
                                  const Ring& ring, const TermOrder& order) {
  const int rank = static_cast<int>(p.size());
  Engine eng(*ring, order, {});
  std::vector<IPoly> polys;
  std::vector<int> idx;
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (static_cast<int>(G[i].size()) != rank) throw InputError("vector length mismatch");
    polys.push_back(eng.import(vector_terms(G[i])));
    if (!polys.back().t.empty()) idx.push_back(static_cast<int>(i));
  }
  Rational kp;
  IPoly w = eng.import(vector_terms(p), &kp);
  Engine::Tracking track;
  track.cofactors = false;
  eng.reduce(w, polys, idx, true, &track);
  std::vector<Term> rem;
  const Rational d = track.scale * kp;
  for (const ITerm& t : w.t) rem.push_back({Rational(t.c) / d, t.m});
  return split_terms(ring, rank, rem);
}

IdealPresentation groebner(IdealPresentation ideal, const TermOrder& order, const GbOptions& options) {
  const Ring& ring = ideal.ring();
  if (order.nvars() != ring->num_vars()) throw InternalError("term order does not match the ring");
  std::vector<std::vector<Term>> inputs;
  for (const auto& g : ideal.generators()) inputs.push_back(g.terms());
  check_admissible(*ring, order, inputs);
  Engine eng(*ring, order, options);
  std::vector<IPoly> gens;
  for (const auto& in : inputs) gens.push_back(eng.import(in));
  const std::vector<IPoly> basis = eng.run(std::move(gens), true);
  std::vector<WeylOperator> out;
  for (const IPoly& b : basis) out.push_back(WeylOperator::from_terms(ring, eng.export_monic(b)));
  ideal.set_basis(std::move(out), order, eng.stats());
  return ideal;
}

SubmodulePresentation groebner(SubmodulePresentation module, const TermOrder& order,
                               const GbOptions& options) {
  const Ring& ring = module.ring();
  if (order.nvars() != ring->num_vars()) throw InternalError("term order does not match the ring");
  std::vector<std::vector<Term>> inputs;
  for (const auto& v : module.generators()) inputs.push_back(vector_terms(v));
  check_admissible(*ring, order, inputs);
  Engine eng(*ring, order, options);
  eng.set_module(true);
  std::vector<IPoly> gens;
  for (const auto& in : inputs) gens.push_back(eng.import(in));
  const std::vector<IPoly> basis = eng.run(std::move(gens), false);
  std::vector<OperatorVector> out;
  for (const IPoly& b : basis) out.push_back(split_terms(ring, module.rank(), eng.export_monic(b)));
  module.set_basis(std::move(out), order, eng.stats());
  return module;
}

bool ideal_member(const WeylOperator& p, const IdealPresentation& gb) {
  return normal_form(p, gb.basis(), gb.basis_order()).remainder.is_zero();
}

bool same_ideal(const IdealPresentation& a, const IdealPresentation& b, const GbOptions& options) {
  if (!same_ring(a.ring(), b.ring())) return false;
  const TermOrder order = TermOrder::degrevlex(a.ring()->num_vars());
  auto ga = groebner(IdealPresentation(a.ring(), a.best_generators()), order, options);
  auto gb = groebner(IdealPresentation(b.ring(), b.best_generators()), order, options);
  return ga.basis() == gb.basis();
}

IdealPresentation eliminate(const IdealPresentation& ideal, const std::vector<int>& kill,
                            const GbOptions& options) {
  const int nv = ideal.ring()->num_vars();
  const TermOrder order = TermOrder::elimination(nv, kill);
  IdealPresentation gb = groebner(IdealPresentation(ideal.ring(), ideal.best_generators()), order, options);
  std::vector<WeylOperator> kept;
  for (const auto& g : gb.basis())
    if (g.free_of(kill)) kept.push_back(g);
  // Restricted to kill-free words the elimination order is degrevlex, so the
  // kept elements form the reduced degrevlex basis of the intersection.
  IdealPresentation out(ideal.ring(), kept);
  out.set_basis(kept, TermOrder::degrevlex(nv), gb.stats());
  return out;
}

IdealPresentation colon_kernel(const OperatorVector& v, const SubmodulePresentation& J,
                               const TermOrder& order, const GbOptions& options) {
  if (static_cast<int>(v.size()) != J.rank()) throw InputError("vector length differs from module rank");
  const Ring& ring = J.ring();
  const int r = J.rank();
  std::vector<OperatorVector> gens;
  OperatorVector first;
  first.push_back(WeylOperator::constant(ring, 1));
  for (const auto& x : v) first.push_back(x.is_zero() ? WeylOperator(ring) : x);
  gens.push_back(std::move(first));
  const auto& src = J.has_basis() ? J.basis() : J.generators();
  for (const auto& g : src) {
    OperatorVector e;
    e.push_back(WeylOperator(ring));
    for (const auto& x : g) e.push_back(x.is_zero() ? WeylOperator(ring) : x);
    gens.push_back(std::move(e));
  }
  const TermOrder mo = order.with_module(ModuleOrder::kPositionOverTerm);
  SubmodulePresentation gb = groebner(SubmodulePresentation(ring, r + 1, std::move(gens)), mo, options);
  std::vector<WeylOperator> kernel;
  for (const auto& e : gb.basis()) {
    bool only0 = true;
    for (int i = 1; i <= r; ++i) only0 = only0 && e[static_cast<std::size_t>(i)].is_zero();
    if (only0) kernel.push_back(e[0]);
  }
  IdealPresentation out(ring, kernel);
  out.set_basis(kernel, order.with_module(ModuleOrder::kPositionOverTerm), gb.stats());
  return out;
}

UPoly to_upoly(const WeylOperator& op, int var) {
  std::vector<Rational> c;
  for (const Term& t : op.terms()) {
    Monomial m = t.mono;
    const unsigned e = m[var];
    m[var] = 0;
    if (!m.is_one() || m.comp != 0) throw InputError("operator is not a polynomial in a single variable");
    if (c.size() <= e) c.resize(e + 1);
    c[e] += t.coeff;
  }
  return UPoly(std::move(c));
}

WeylOperator from_upoly(const UPoly& p, const Ring& ring, int var) {
  std::vector<Term> terms;
  for (int i = 0; i <= p.degree(); ++i) {
    if (p.coeff(i) == 0) continue;
    Monomial m;
    m[var] = static_cast<std::uint16_t>(i);
    terms.push_back({p.coeff(i), m});
  }
  return WeylOperator::from_terms(ring, std::move(terms));
}

UPoly univariate_generator(std::span<const WeylOperator> gens) {
  UPoly g;
  for (const auto& op : gens) {
    if (op.is_zero()) continue;
    const int s = op.ring()->central(Central::kS);
    if (s < 0) {
      if (!op.is_constant()) throw InputError("operator is not a polynomial in s");
      return UPoly::constant(1);
    }
    g = gcd(g, to_upoly(op, s));
  }
  return g;
}

}  // namespace holozeta
