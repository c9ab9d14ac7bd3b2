#ifndef SASAKI_COMBINATORICS_HPP
#define SASAKI_COMBINATORICS_HPP

#include <array>
#include <cstdint>
#include <vector>

namespace sasaki {

// binomial coefficient, exact for the small arguments used here (d <= 15)
std::int64_t binom(int n, int k);

/// Lexicographically ordered p-element subsets of {0,...,d-1} with O(1)
/// rank lookup. Multi-indices are stored as sorted arrays padded with -1.
class MultiIndexSet {
public:
  MultiIndexSet(int dim, int degree);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  int size() const { return static_cast<int>(list_.size()); }

  const std::array<int, 4>& at(int rank) const { return list_[rank]; }

  // rank of a sorted multi-index (strictly increasing entries)
  int rank(const int* idx) const;
  int rank(const std::array<int, 4>& idx) const { return rank(idx.data()); }
  int rank2(int a, int b) const;  // degree-2 convenience, requires a < b

private:
  int dim_;
  int degree_;
  std::vector<std::array<int, 4>> list_;
  std::vector<int> pair_rank_;  // dense d*d table, degree 2 only
};

/// Merge two disjoint sorted index lists, returning the permutation sign of
/// the concatenation relative to the sorted result (0 if not disjoint).
int merge_sign(const int* a, int pa, const int* b, int pb, int* out);

}  // namespace sasaki

#endif
