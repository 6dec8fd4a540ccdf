#pragma once

// Per-vertex budget vectors f = (f_1, ..., f_p). Row v holds the p
// non-negative coordinates of vertex v; the row sum is the scalar budget h
// that strict degeneracy of the whole partition consumes.

#include "degpart/degeneracy.hpp"
#include "degpart/hypergraph.hpp"

namespace degpart {

class VectorFunction {
 public:
  VectorFunction() = default;

  VectorFunction(int parts, std::vector<std::vector<int>> rows)
      : parts_(parts), rows_(std::move(rows)) {
    if (parts_ < 1) throw std::invalid_argument("vector function needs p >= 1 parts");
    for (const auto& row : rows_) {
      if (static_cast<int>(row.size()) != parts_)
        throw std::invalid_argument("vector function row width must equal p");
      for (int x : row)
        if (x < 0) throw std::invalid_argument("vector function entries must be >= 0");
    }
  }

  static VectorFunction constant(int vertex_count, std::vector<int> value) {
    std::vector<std::vector<int>> rows(vertex_count, value);
    return VectorFunction(static_cast<int>(value.size()), std::move(rows));
  }

  int parts() const { return parts_; }
  int vertex_count() const { return static_cast<int>(rows_.size()); }

  const std::vector<int>& at(VertexId v) const { return rows_.at(v - 1); }

  // i is 1-based, matching part indices.
  int value(VertexId v, int i) const { return rows_.at(v - 1).at(i - 1); }

  int row_sum(VertexId v) const {
    const auto& row = rows_.at(v - 1);
    int s = 0;
    for (int x : row) s += x;
    return s;
  }

  DegreeBudget row_sums() const {
    DegreeBudget h(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) h[i] = row_sum(static_cast<VertexId>(i) + 1);
    return h;
  }

  DegreeBudget coordinate(int i) const {
    DegreeBudget b(rows_.size());
    for (std::size_t v = 0; v < rows_.size(); ++v) b[v] = rows_[v].at(i - 1);
    return b;
  }

  // f' = (f_2, ..., f_p).
  VectorFunction drop_first() const {
    if (parts_ < 2) throw std::invalid_argument("drop_first needs p >= 2");
    std::vector<std::vector<int>> rows;
    rows.reserve(rows_.size());
    for (const auto& row : rows_) rows.emplace_back(row.begin() + 1, row.end());
    return VectorFunction(parts_ - 1, std::move(rows));
  }

  // Restriction to a vertex subset, relabeled along `order` (new id i takes
  // the row of order[i-1]).
  VectorFunction restrict_to(const std::vector<VertexId>& order) const {
    std::vector<std::vector<int>> rows;
    rows.reserve(order.size());
    for (VertexId v : order) rows.push_back(rows_.at(v - 1));
    return VectorFunction(parts_, std::move(rows));
  }

  bool operator==(const VectorFunction& other) const = default;

 private:
  int parts_ = 1;
  std::vector<std::vector<int>> rows_;
};

inline void require_matching(const Hypergraph& g, const VectorFunction& f) {
  if (f.vertex_count() != g.vertex_count())
    throw std::invalid_argument("vector function must have one row per vertex");
}

}  // namespace degpart
