#include "modrep/jordan.hpp"

#include <algorithm>

#include "modrep/error.hpp"

namespace modrep {

std::vector<std::size_t> jordan_type(const Matrix& unipotent) {
  const std::size_t n = unipotent.rows();
  if (unipotent.cols() != n) throw PreconditionError("jordan_type: matrix is not square");
  if (n == 0) return {};
  const Matrix nil = unipotent - Matrix::identity(unipotent.field(), n);
  // ranks[k] = rank(nil^k)
  std::vector<std::size_t> ranks{n};
  Matrix power = Matrix::identity(unipotent.field(), n);
  while (ranks.back() > 0) {
    power = power * nil;
    const std::size_t r = rank(power);
    if (r == ranks.back()) throw PreconditionError("jordan_type: matrix is not unipotent");
    ranks.push_back(r);
  }
  ranks.push_back(0);
  std::vector<std::size_t> sizes;
  for (std::size_t k = 1; k + 1 < ranks.size(); ++k) {
    const std::size_t at_least_k = ranks[k - 1] - ranks[k];
    const std::size_t at_least_k1 = ranks[k] - ranks[k + 1];
    for (std::size_t i = 0; i < at_least_k - at_least_k1; ++i) sizes.push_back(k);
  }
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

Rep jordan_block_rep(const Subgroup& cyclic, GroupElement generator, const FieldPtr& field, std::size_t size) {
  Matrix j = Matrix::identity(field, size);
  for (std::size_t i = 0; i + 1 < size; ++i) j(i, i + 1) = field->one();
  return rep_build(cyclic, field, {{generator, j}});
}

StableJordanType stable_jordan_type(const std::vector<std::size_t>& sizes, std::size_t group_order) {
  StableJordanType out;
  for (std::size_t s : sizes) {
    if (s == group_order) {
      ++out.free_blocks;
    } else {
      out.core.push_back(s);
    }
  }
  return out;
}

}  // namespace modrep
