#include "sasaki/combinatorics.hpp"

#include <stdexcept>

namespace sasaki {

std::int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

MultiIndexSet::MultiIndexSet(int dim, int degree) : dim_(dim), degree_(degree) {
  if (dim < 1 || degree < 1 || degree > 4 || degree > dim)
    throw std::invalid_argument("MultiIndexSet: need 1 <= degree <= min(dim,4)");
  std::array<int, 4> c{};
  c.fill(-1);
  for (int i = 0; i < degree; ++i) c[i] = i;
  list_.reserve(static_cast<std::size_t>(binom(dim, degree)));
  while (true) {
    list_.push_back(c);
    int i = degree - 1;
    while (i >= 0 && c[i] == dim - degree + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < degree; ++j) c[j] = c[j - 1] + 1;
  }
  if (degree_ == 2) {
    pair_rank_.assign(static_cast<std::size_t>(dim) * dim, -1);
    for (int r = 0; r < size(); ++r)
      pair_rank_[static_cast<std::size_t>(list_[r][0]) * dim + list_[r][1]] = r;
  }
}

int MultiIndexSet::rank(const int* idx) const {
  // combinatorial number system, lexicographic order
  std::int64_t r = 0;
  int prev = -1;
  for (int t = 0; t < degree_; ++t) {
    for (int v = prev + 1; v < idx[t]; ++v) r += binom(dim_ - 1 - v, degree_ - 1 - t);
    prev = idx[t];
  }
  return static_cast<int>(r);
}

int MultiIndexSet::rank2(int a, int b) const {
  return pair_rank_[static_cast<std::size_t>(a) * dim_ + b];
}

int merge_sign(const int* a, int pa, const int* b, int pb, int* out) {
  // count inversions between the blocks while merging
  int inv = 0;
  int i = 0, j = 0, k = 0;
  while (i < pa && j < pb) {
    if (a[i] == b[j]) return 0;
    if (a[i] < b[j]) {
      out[k++] = a[i++];
    } else {
      out[k++] = b[j++];
      inv += pa - i;
    }
  }
  while (i < pa) out[k++] = a[i++];
  while (j < pb) out[k++] = b[j++];
  return (inv % 2 == 0) ? 1 : -1;
}

}  // namespace sasaki
