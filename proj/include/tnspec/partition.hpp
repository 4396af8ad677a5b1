#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tnspec/bigint.hpp"

namespace tnspec {

// A partition of n: nonincreasing positive parts summing to n. Part i is
// the number of cells in row i of the Young diagram. Rows are counted
// from the longest row outward; whether the diagram is drawn bottom-up or
// top-down only changes the picture, never any value computed here.
class Partition {
 public:
  // Validates: at least one part, every part >= 1, nonincreasing.
  // Throws std::invalid_argument otherwise.
  explicit Partition(std::vector<int> parts);

  // Parses the "a,b,c" text form used by the CLI and the JSON output.
  // Whitespace is ignored; parts must be nonincreasing positive integers.
  static Partition parse(std::string_view text);

  int n() const { return n_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  int part(int row) const { return parts_[row - 1]; }  // rows are 1-based

  std::string to_string() const;  // "a,b,c"

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

// All partitions of n in reverse-lexicographic order: (n) first,
// (1,...,1) last. Throws std::invalid_argument for n < 1.
std::vector<Partition> enumerate_partitions(int n);

// Conjugate (transposed diagram): part j of the result counts the rows of
// p with at least j cells. An involution.
Partition conjugate(const Partition& p);

// Hook lengths per cell: h(i,j) = arm + leg + 1, addressed 1-based.
struct HookLengths {
  Partition shape;
  std::vector<std::vector<int>> lengths;  // lengths[i-1][j-1] = h(i,j)

  int at(int row, int col) const { return lengths[row - 1][col - 1]; }
};

HookLengths hook_lengths(const Partition& p);

// Number of standard Young tableaux of shape p: n! divided by the product
// of all hook lengths. The division is exact for every valid shape; a
// nonzero remainder means the hooks are wrong and throws std::logic_error.
BigInt count_tableaux(const Partition& p);

BigInt factorial(int n);

}  // namespace tnspec
