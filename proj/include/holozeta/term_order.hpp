#ifndef HOLOZETA_TERM_ORDER_HPP
#define HOLOZETA_TERM_ORDER_HPP

#include <array>
#include <vector>

#include "holozeta/monomial.hpp"

namespace holozeta {

// How components of a free module enter the comparison.
//   kPositionOverTerm: larger component index dominates, terms break ties.
//   kTermOverPosition: terms first, larger component index breaks ties.
enum class ModuleOrder { kPositionOverTerm, kTermOverPosition };

// Integer weight rows compared lexicographically, then graded reverse
// lexicographic on the canonical generator layout.
class TermOrder {
 public:
  using Row = std::array<int, kMaxVars>;

  static TermOrder degrevlex(int nvars);
  // Total degree in `kill` first: any monomial touching `kill` beats any
  // monomial that does not.
  static TermOrder elimination(int nvars, const std::vector<int>& kill);
  static TermOrder weighted(int nvars, std::vector<Row> rows);

  TermOrder with_module(ModuleOrder m) const {
    TermOrder o = *this;
    o.module_ = m;
    return o;
  }

  int compare(const Monomial& a, const Monomial& b) const {
    if (module_ == ModuleOrder::kPositionOverTerm && a.comp != b.comp)
      return a.comp < b.comp ? -1 : 1;
    const int c = compare_terms(a, b);
    if (c != 0) return c;
    if (a.comp != b.comp) return a.comp < b.comp ? -1 : 1;
    return 0;
  }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  int compare_terms(const Monomial& a, const Monomial& b) const {
    for (const Row& r : rows_) {
      long wa = 0, wb = 0;
      for (int v = 0; v < nvars_; ++v) {
        wa += static_cast<long>(r[v]) * a[v];
        wb += static_cast<long>(r[v]) * b[v];
      }
      if (wa != wb) return wa < wb ? -1 : 1;
    }
    int da = 0, db = 0;
    for (int v = 0; v < nvars_; ++v) {
      da += a[v];
      db += b[v];
    }
    if (da != db) return da < db ? -1 : 1;
    for (int v = nvars_ - 1; v >= 0; --v)
      if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
    return 0;
  }

  int nvars() const { return nvars_; }
  const std::vector<Row>& rows() const { return rows_; }
  ModuleOrder module_order() const { return module_; }

  static long row_weight(const Row& r, const Monomial& m, int nvars) {
    long w = 0;
    for (int v = 0; v < nvars; ++v) w += static_cast<long>(r[v]) * m[v];
    return w;
  }
  // Rows with a negative entry; inputs must be homogeneous for these.
  std::vector<Row> negative_rows() const;

  bool operator==(const TermOrder&) const = default;

 private:
  int nvars_ = 0;
  std::vector<Row> rows_;
  ModuleOrder module_ = ModuleOrder::kPositionOverTerm;
};

}  // namespace holozeta

#endif  // HOLOZETA_TERM_ORDER_HPP
