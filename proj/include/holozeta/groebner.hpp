#ifndef HOLOZETA_GROEBNER_HPP
#define HOLOZETA_GROEBNER_HPP

#include <chrono>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "holozeta/operator.hpp"
#include "holozeta/upoly.hpp"

namespace holozeta {

using Clock = std::chrono::steady_clock;

// Raised when a computation exceeds its wall-clock budget. `stage` names the
// pipeline step that was running.
class TimeoutError : public std::runtime_error {
 public:
  explicit TimeoutError(std::string stage)
      : std::runtime_error("time limit exceeded during " + stage), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

struct GbOptions {
  std::optional<Clock::time_point> deadline;
  std::string stage = "groebner";
  bool chain_criterion = true;
  bool product_criterion = true;
};

struct GbStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t basis_size = 0;
  double seconds = 0;
};

using OperatorVector = std::vector<WeylOperator>;

// Left ideal given by generators, with an optional cached reduced basis.
class IdealPresentation {
 public:
  IdealPresentation() = default;
  IdealPresentation(Ring ring, std::vector<WeylOperator> generators);

  const Ring& ring() const { return ring_; }
  const std::vector<WeylOperator>& generators() const { return generators_; }

  bool has_basis() const { return basis_.has_value(); }
  const std::vector<WeylOperator>& basis() const;
  const TermOrder& basis_order() const;
  const GbStats& stats() const { return stats_; }
  // Generators if no basis is cached.
  const std::vector<WeylOperator>& best_generators() const {
    return basis_ ? *basis_ : generators_;
  }

  void set_basis(std::vector<WeylOperator> basis, TermOrder order, GbStats stats);

 private:
  Ring ring_;
  std::vector<WeylOperator> generators_;
  std::optional<std::vector<WeylOperator>> basis_;
  std::optional<TermOrder> order_;
  GbStats stats_;
};

// Left submodule of the free module of rank `rank`.
class SubmodulePresentation {
 public:
  SubmodulePresentation() = default;
  SubmodulePresentation(Ring ring, int rank, std::vector<OperatorVector> generators);

  const Ring& ring() const { return ring_; }
  int rank() const { return rank_; }
  const std::vector<OperatorVector>& generators() const { return generators_; }

  bool has_basis() const { return basis_.has_value(); }
  const std::vector<OperatorVector>& basis() const;
  const TermOrder& basis_order() const;
  const GbStats& stats() const { return stats_; }

  void set_basis(std::vector<OperatorVector> basis, TermOrder order, GbStats stats);

 private:
  Ring ring_;
  int rank_ = 1;
  std::vector<OperatorVector> generators_;
  std::optional<std::vector<OperatorVector>> basis_;
  std::optional<TermOrder> order_;
  GbStats stats_;
};

struct NormalForm {
  WeylOperator remainder;
  std::vector<WeylOperator> cofactors;  // empty unless tracked
};

// Full reduction of p by G (listing order decides among divisors). With
// tracking, p == sum cofactors[i] * G[i] + remainder.
NormalForm normal_form(const WeylOperator& p, std::span<const WeylOperator> G,
                       const TermOrder& order, bool track_cofactors = false);

// Module version; remainder is a vector of length rank.
OperatorVector module_normal_form(const OperatorVector& p, std::span<const OperatorVector> G,
                                  const Ring& ring, const TermOrder& order);

// Reduced monic Groebner basis. Orders with negative weight rows require
// inputs homogeneous for those rows (InputError otherwise).
IdealPresentation groebner(IdealPresentation ideal, const TermOrder& order,
                           const GbOptions& options = {});
SubmodulePresentation groebner(SubmodulePresentation module, const TermOrder& order,
                               const GbOptions& options = {});

bool ideal_member(const WeylOperator& p, const IdealPresentation& gb);
// Equality of reduced bases (both computed under the same order).
bool same_ideal(const IdealPresentation& a, const IdealPresentation& b,
                const GbOptions& options = {});

// Intersection with the subalgebra free of `kill`, via an elimination order.
// The result lives in the same ring and carries the eliminated part of the
// basis (not yet reduced under a new order).
IdealPresentation eliminate(const IdealPresentation& ideal, const std::vector<int>& kill,
                            const GbOptions& options = {});

// {P : P*v in J}, computed from the rank+1 module D*(1,v) + (0,J) under a
// position-over-term order in which component 0 is smallest. The result is
// a reduced basis under `order`.
IdealPresentation colon_kernel(const OperatorVector& v, const SubmodulePresentation& J,
                               const TermOrder& order, const GbOptions& options = {});

// Monic gcd of operators lying in Q[s] (s = the unique central generator
// named s). Rejects inputs involving any other generator.
UPoly univariate_generator(std::span<const WeylOperator> gens);

// Converts a polynomial in the central generator `var` into a UPoly.
UPoly to_upoly(const WeylOperator& op, int var);
WeylOperator from_upoly(const UPoly& p, const Ring& ring, int var);

}  // namespace holozeta

#endif  // HOLOZETA_GROEBNER_HPP
