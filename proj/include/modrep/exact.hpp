#pragma once

#include <optional>
#include <vector>

#include "modrep/rep.hpp"

namespace modrep {

/// The exact structure E_U on representations of a finite group G:
/// short exact sequences that split after restriction to U.

enum class SplitKind { section, retraction };

/// A U-equivariant one-sided inverse of some GMap.
struct SplitWitness {
  SplitKind kind = SplitKind::section;
  Matrix map;
};

/// Solves {X U-equivariant, f X = 1} (section) or {X U-equivariant,
/// X f = 1} (retraction). Deterministic: free variables are set to zero.
std::optional<SplitWitness> u_split_search(const GMap& f, const Subgroup& u, SplitKind kind);

inline bool is_admissible_epic(const GMap& f, const Subgroup& u) {
  return u_split_search(f, u, SplitKind::section).has_value();
}
inline bool is_admissible_monic(const GMap& f, const Subgroup& u) {
  return u_split_search(f, u, SplitKind::retraction).has_value();
}

/// Turns a U'-equivariant section of f into a U-equivariant one:
/// σ̃ = (1/[U:U']) Σ_{u ∈ U'\U} u^{-1} σ u. Throws PreconditionError when
/// the index vanishes in the field or sigma is not a U'-section.
SplitWitness averaging_section(const Matrix& sigma, const GMap& f, const Subgroup& u_prime, const Subgroup& u);

/// The unit A: X -> Ind_U^G(X|_U) or counit B: ind_U^G(X|_U) -> X, with the
/// explicit splitting (evaluation at e, resp. x -> f_x).
struct AdjunctionMap {
  InducedRep induced;
  GMap map;
  SplitWitness witness;
};

AdjunctionMap adjunction_unit_A(const Rep& x, const Subgroup& u);
AdjunctionMap adjunction_counit_B(const Rep& x, const Subgroup& u);

enum class RelativeSide { projective, injective };

struct RelativityResult {
  bool holds = false;
  std::optional<SplitWitness> witness;
};

/// Relative U-projectivity (B splits G-equivariantly) or relative
/// U-injectivity (A has a G-equivariant retraction).
RelativityResult relative_projectivity_test(const Rep& p, const Subgroup& u, RelativeSide side);

/// T(X) = coker(A) on the complement of im(A)'s pivot coordinates.
struct Suspension {
  Rep rep;
  GMap unit;      ///< A
  GMap quotient;  ///< Ind_U^G(X|_U) -> T(X)
};
Suspension suspension_T(const Rep& x, const Subgroup& u);

/// Ω(X) = ker(B).
struct Loop {
  Rep rep;
  GMap inclusion;  ///< Ω(X) -> ind_U^G(X|_U)
  GMap counit;     ///< B
};
Loop loop_Omega(const Rep& x, const Subgroup& u);

enum class StableFlavor { injective, projective };

struct StableHomResult {
  StableFlavor flavor = StableFlavor::injective;
  std::size_t total_dim = 0;
  std::size_t factoring_dim = 0;
  std::size_t stable_dim = 0;
  /// Echelon basis of the normal forms of Hom(V1, V2) modulo the factoring
  /// maps; one matrix per stable dimension.
  std::vector<Matrix> quotient_basis;
};

/// Hom modulo maps factoring through a relative injective (through A) or a
/// relative projective (through B).
StableHomResult stable_hom(const Rep& v1, const Rep& v2, const Subgroup& u, StableFlavor flavor);

/// The factoring subspace itself, flattened like HomSpace.
Subspace factoring_maps(const Rep& v1, const Rep& v2, const Subgroup& u, StableFlavor flavor);

}  // namespace modrep
