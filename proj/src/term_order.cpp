#include "holozeta/term_order.hpp"

namespace holozeta {

TermOrder TermOrder::degrevlex(int nvars) {
  TermOrder o;
  o.nvars_ = nvars;
  return o;
}

TermOrder TermOrder::elimination(int nvars, const std::vector<int>& kill) {
  TermOrder o;
  o.nvars_ = nvars;
  Row r{};
  for (int v : kill) {
    if (v < 0 || v >= nvars) throw InternalError("elimination variable out of range");
    r[v] = 1;
  }
  o.rows_.push_back(r);
  return o;
}

TermOrder TermOrder::weighted(int nvars, std::vector<Row> rows) {
  TermOrder o;
  o.nvars_ = nvars;
  o.rows_ = std::move(rows);
  return o;
}

std::vector<TermOrder::Row> TermOrder::negative_rows() const {
  std::vector<Row> out;
  for (const Row& r : rows_) {
    for (int v = 0; v < nvars_; ++v) {
      if (r[v] < 0) {
        out.push_back(r);
        break;
      }
    }
  }
  return out;
}

}  // namespace holozeta
