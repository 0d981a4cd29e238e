#pragma once

#include <vector>

#include "modrep/matrix.hpp"
#include "modrep/rep.hpp"

namespace modrep {

/// Jordan block sizes (descending) of a unipotent matrix, read off the
/// ranks of powers of (m - 1). Throws PreconditionError if m - 1 is not
/// nilpotent.
std::vector<std::size_t> jordan_type(const Matrix& unipotent);

/// Representation of a cyclic group sending `generator` to the unipotent
/// Jordan block of the given size.
Rep jordan_block_rep(const Subgroup& cyclic, GroupElement generator, const FieldPtr& field, std::size_t size);

/// Jordan type of the action of `generator` on v.
inline std::vector<std::size_t> jordan_type(const Rep& v, GroupElement generator) {
  return jordan_type(v.action(generator));
}

/// Splits a Jordan type of a cyclic p-group of order n into its free part
/// (blocks of size n, the projective indecomposable) and the rest.
struct StableJordanType {
  std::vector<std::size_t> core;  ///< non-projective blocks, descending
  std::size_t free_blocks = 0;
};
StableJordanType stable_jordan_type(const std::vector<std::size_t>& sizes, std::size_t group_order);

}  // namespace modrep
