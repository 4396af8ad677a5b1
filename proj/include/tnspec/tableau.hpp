#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "tnspec/partition.hpp"

namespace tnspec {

// Standard Young tableau: the cells of a shape filled bijectively with
// 1..n, strictly increasing along every row (left to right) and every
// column (row 1 outward). Cells are addressed (row, column), 1-based,
// matching HookLengths.
class StandardTableau {
 public:
  // `entries[i-1][j-1]` is the value in cell (i, j). Validates shape
  // agreement, the bijection onto 1..n and both monotonicity conditions.
  StandardTableau(Partition shape, std::vector<std::vector<int>> entries);

  const Partition& shape() const { return shape_; }
  int n() const { return shape_.n(); }
  int entry(int row, int col) const { return entries_[row - 1][col - 1]; }
  const std::vector<std::vector<int>>& entries() const { return entries_; }

  // (row, column) of a value, 1-based.
  std::pair<int, int> cell_of(int value) const;

  friend bool operator==(const StandardTableau&, const StandardTableau&) =
      default;

 private:
  Partition shape_;
  std::vector<std::vector<int>> entries_;
};

// Content convention used throughout: the content of the value i is
// (row of i) - (column of i). The single-row shape therefore has contents
// 0,-1,...,-(n-1) and a single column 0,1,...,n-1, and the first tableau
// of shape (2,2,1) below has contents (0,-1,1,0,2). The spectrum module
// negates the shape sum, which puts the single-row shape at +C(n,2) in
// the graph spectrum.
std::vector<int> content_vector(const StandardTableau& t);

// Sum of contents over all cells of the shape. The sum is independent of
// the filling, so it is computed straight off the diagram; agreement with
// any tableau of the shape is a tested property.
long long content_sum(const Partition& p);

inline constexpr int kDefaultEnumerationCap = 12;

// All standard tableaux of shape p, generated by placing 1..n in order
// into the smallest admissible cell first, so the sequence is
// deterministic. Tableau counts grow superexponentially with n; shapes
// with n above `cap` are refused (use count_tableaux, or the streaming
// form below, beyond the cap).
std::vector<StandardTableau> enumerate_tableaux(
    const Partition& p, int cap = kDefaultEnumerationCap);

// Streaming enumeration in the same order; visit() returning false stops
// the walk. Not capped: callers that stop early can handle any shape.
void for_each_tableau(const Partition& p,
                      const std::function<bool(const StandardTableau&)>& visit);

// Display rendering: one line per row, top row first, entries separated
// by single spaces. Display only, never parsed back.
std::string render(const StandardTableau& t);

}  // namespace tnspec
