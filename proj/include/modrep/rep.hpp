#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "modrep/field.hpp"
#include "modrep/group.hpp"
#include "modrep/matrix.hpp"

namespace modrep {

/// A finite-dimensional representation of a subgroup `domain` of some
/// ambient FinGroup, acting on column vectors. Cheap to copy: the action
/// is shared and immutable.
class Rep {
 public:
  Rep() = default;
  /// `action` is aligned with domain.members(). Verifies that every matrix
  /// is square of size dim, action(e) = 1 and action(g s) = action(g)
  /// action(s) for every g and every generator s (which implies the
  /// homomorphism law on all pairs). Throws InputError.
  Rep(Subgroup domain, FieldPtr field, std::size_t dim, std::vector<Matrix> action);

  /// Skips verification; for representations built by this library.
  struct Unchecked {};
  Rep(Subgroup domain, FieldPtr field, std::size_t dim, std::vector<Matrix> action, Unchecked);

  static Rep trivial(const Subgroup& domain, const FieldPtr& field, std::size_t dim = 1);
  /// Left regular representation on the basis domain.members().
  static Rep regular(const Subgroup& domain, const FieldPtr& field);
  static Rep zero(const Subgroup& domain, const FieldPtr& field);

  const Subgroup& domain() const { return data_->domain; }
  const GroupPtr& group() const { return data_->domain.parent(); }
  const FieldPtr& field() const { return data_->field; }
  std::size_t dim() const { return data_->dim; }
  /// Action of an element of the domain (ambient index).
  const Matrix& action(GroupElement g) const { return data_->action[data_->domain.position(g)]; }
  const std::vector<Matrix>& actions() const { return data_->action; }

  bool same_action(const Rep& other) const;

 private:
  struct Data {
    Subgroup domain;
    FieldPtr field;
    std::size_t dim = 0;
    std::vector<Matrix> action;
  };
  std::shared_ptr<const Data> data_;
};

/// An equivariant map source -> target, matrix of shape
/// (target.dim, source.dim).
class GMap {
 public:
  GMap() = default;
  /// Verifies matrix * source(g) = target(g) * matrix on generators.
  GMap(Rep source, Rep target, Matrix matrix);
  struct Unchecked {};
  GMap(Rep source, Rep target, Matrix matrix, Unchecked);

  const Rep& source() const { return source_; }
  const Rep& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }

  bool is_injective() const;
  bool is_surjective() const;
  Subspace kernel() const;
  Subspace image() const;

 private:
  Rep source_, target_;
  Matrix matrix_;
};

GMap compose(const GMap& after, const GMap& before);
GMap identity_map(const Rep& v);

/// 0 -> V' -> V -> V'' -> 0 with left injective, right surjective and
/// im(left) = ker(right). Throws InputError otherwise.
class SES {
 public:
  SES(GMap left, GMap right);
  const GMap& left() const { return left_; }
  const GMap& right() const { return right_; }

 private:
  GMap left_, right_;
};

/// A homomorphism from an abelian subgroup C into F^x.
class Character {
 public:
  /// Values aligned with domain.members(). Verifies multiplicativity,
  /// value(e) = 1, nonzero values and triviality on p-elements.
  Character(Subgroup domain, FieldPtr field, std::vector<Scalar> values);
  static Character trivial(const Subgroup& domain, const FieldPtr& field);

  const Subgroup& domain() const { return domain_; }
  const FieldPtr& field() const { return field_; }
  Scalar operator()(GroupElement c) const { return values_[domain_.position(c)]; }
  const std::vector<Scalar>& values() const { return values_; }
  bool is_trivial_on(const Subgroup& s) const;

 private:
  Subgroup domain_;
  FieldPtr field_;
  std::vector<Scalar> values_;
};

/// Every character of an abelian subgroup with values in F^x.
std::vector<Character> all_characters(const Subgroup& c, const FieldPtr& field);

// -------------------------------------------------------------- operations

/// Extends generator images to the whole domain by word evaluation.
/// Throws InputError on a violated relation, a singular image, or images
/// that do not generate the domain.
Rep rep_build(const Subgroup& domain, const FieldPtr& field,
              const std::map<GroupElement, Matrix>& generator_images);

Rep rep_restrict(const Rep& v, const Subgroup& u);

Rep direct_sum(std::span<const Rep> parts);
/// Change of basis: action g -> P action(g) P^{-1}.
Rep conjugate_basis(const Rep& v, const Matrix& p);

/// ind_U^H(W) for W a representation of U <= H. Basis is indexed by
/// (coset, W-basis vector) with coset order from CosetTable(U, H); the
/// vector with index i * dim W + j is the function supported on U r_i
/// with value e_j at r_i. H acts by right translation. At finite index
/// this is also the full induction Ind_U^H.
struct InducedRep {
  Rep rep;
  Rep inducing;                      ///< W
  std::vector<GroupElement> cosets;  ///< representatives r_i of U\H
  std::size_t identity_coset = 0;    ///< i with r_i in U

  /// W -> ind W, w -> f_w supported on U with f_w(e) = w (U-equivariant).
  Matrix section_at_identity() const;
  /// ind W -> W, f -> f(e) (U-equivariant).
  Matrix evaluation_at_identity() const;
};

InducedRep rep_induce(const Rep& w, const Subgroup& h);

/// Hom_G(V1, V2) as a subspace of row-major flattened (dim V2 x dim V1)
/// matrices, in canonical echelon form.
struct HomSpace {
  std::size_t rows = 0;  ///< dim V2
  std::size_t cols = 0;  ///< dim V1
  Subspace flat;

  std::size_t dim() const { return flat.dim(); }
  Matrix element(std::size_t i) const;
  bool contains(const Matrix& m) const { return flat.contains(flatten(m)); }
};

/// Linear conditions M v1(s) = v2(s) M for s in gens, on the row-major
/// flattening of M (dim v2 x dim v1).
Matrix equivariance_system(const Rep& v1, const Rep& v2, std::span<const GroupElement> gens);

/// Requires both representations on the same domain and field.
HomSpace hom_space(const Rep& v1, const Rep& v2);
/// Same, but equivariance is only imposed for the generators of u.
HomSpace hom_space_over(const Rep& v1, const Rep& v2, const Subgroup& u);

Subspace fixed_points(const Rep& v, const Subgroup& u);
std::size_t cyclic_dim(const Rep& v, const Vector& x);
/// Span of the orbit of x.
Subspace cyclic_submodule(const Rep& v, const Vector& x);

/// Subrepresentation on an invariant subspace, in the subspace's canonical
/// basis, with its inclusion map.
struct SubRep {
  Rep rep;
  GMap inclusion;
};
SubRep subrep(const Rep& v, const Subspace& invariant);

/// Quotient V / W on the complement spanned by the non-pivot coordinates
/// of W's echelon basis, with the quotient map.
struct QuotientRep {
  Rep rep;
  GMap projection;
  std::vector<std::size_t> complement;  ///< coordinates kept
};
QuotientRep quotient(const Rep& v, const Subspace& invariant);

/// Ω_v: subgroups U of V's domain K fixing x with [K : U] > dim F[K]x;
/// with a central subgroup c, the index is [K : U(C ∩ K)] instead.
/// Throws PreconditionError for x = 0 and CapExceeded past the subgroup
/// enumeration cap.
std::vector<Subgroup> omega_v(const Rep& v, const Vector& x, const Subgroup* c = nullptr);

/// φ_{U,x}: ind_U^K(F) -> V, f -> Σ_{κ ∈ U\K} f(κ) κ^{-1} x. Requires x
/// to be U-fixed.
GMap phi_Uv(const Rep& v, const Subgroup& u, const Vector& x);

/// One block of S: the pair (x, U) it is indexed by.
struct SummandIndex {
  Vector vector;
  Subgroup subgroup;  ///< U, or U(C ∩ K) in the central-character variant
  std::size_t offset = 0;
  std::size_t dim = 0;
};

/// φ: S = ⊕_x ⊕_{U ∈ Ω_x} ind_U^K(F) -> V, kept block by block.
struct PhiAssembly {
  std::vector<SummandIndex> summands;
  std::vector<GMap> blocks;    ///< φ_{U,x} per summand
  Matrix phi;                  ///< dim V x dim S, blocks side by side
  std::vector<Vector> dropped; ///< chosen vectors whose Ω set was empty

  std::size_t source_dim() const { return phi.cols(); }
  /// S as a single dense representation; only sensible for small S.
  Rep source() const;
  GMap map() const;
  bool is_surjective() const;
};

/// Default vector choice: every nonzero vector when q^dim <= 256, else the
/// orbit of the standard basis. Vectors with empty Ω set are dropped and
/// listed; throws PreconditionError if the rest no longer spans V.
PhiAssembly assemble_phi(const Rep& v, const Subgroup* c = nullptr,
                         std::optional<std::vector<Vector>> vectors = std::nullopt);
std::vector<Vector> default_phi_vectors(const Rep& v);

/// Frobenius reciprocity. Lower: Hom_U(W, V|_U) -> Hom_G(ind_U^G W, V).
/// Upper: Hom_U(V|_U, W) -> Hom_G(V, Ind_U^G W). G is V's domain and U is
/// W's domain.
enum class Adjunction { lower, upper };

GMap frobenius_transport(const Rep& w, const Rep& v, Adjunction side, const Matrix& input);
/// Inverse transport back to the U-side matrix.
Matrix frobenius_transport_back(const Rep& w, const Rep& v, Adjunction side, const GMap& input);

/// V^χ and, when the averaging formula is defined, the projector
/// (1/[C:N]) Σ_{c ∈ C/N} χ(c^{-1}) c, N the elements of C acting trivially
/// on V with χ = 1.
struct ChiEigenspace {
  Subspace space;
  std::optional<Matrix> projector;
};
ChiEigenspace chi_eigenspace(const Rep& v, const Character& chi);

/// V ⊠ χ on KC: (k c) v = χ(c) k v. Requires C central and V(x) = χ(x)
/// on C ∩ K; throws PreconditionError otherwise.
Rep extend_by_chi(const Rep& v, const Character& chi, const Subgroup& kc);

}  // namespace modrep
