#include "modrep/exact.hpp"

#include "modrep/error.hpp"

namespace modrep {

std::optional<SplitWitness> u_split_search(const GMap& f, const Subgroup& u, SplitKind kind) {
  const Rep& src = f.source();
  const Rep& tgt = f.target();
  if (!u.is_subgroup_of(src.domain())) throw PreconditionError("u_split_search: U is not a subgroup of G");
  const FieldPtr& field = src.field();
  const Matrix& fm = f.matrix();
  const std::size_t ds = src.dim(), dt = tgt.dim();

  Matrix equiv, comp, rhs;
  std::size_t rows = 0, cols = 0;
  if (kind == SplitKind::section) {
    // X : tgt -> src, f X = 1 on tgt.
    rows = ds;
    cols = dt;
    equiv = equivariance_system(tgt, src, u.generators());
    comp = Matrix(field, dt * dt, ds * dt);
    rhs = Matrix(field, dt * dt, 1);
    for (std::size_t a = 0; a < dt; ++a) {
      for (std::size_t c = 0; c < dt; ++c) {
        const std::size_t r = a * dt + c;
        for (std::size_t b = 0; b < ds; ++b) comp(r, b * dt + c) = fm(a, b);
        if (a == c) rhs(r, 0) = field->one();
      }
    }
  } else {
    // X : tgt -> src, X f = 1 on src.
    rows = ds;
    cols = dt;
    equiv = equivariance_system(tgt, src, u.generators());
    comp = Matrix(field, ds * ds, ds * dt);
    rhs = Matrix(field, ds * ds, 1);
    for (std::size_t a = 0; a < ds; ++a) {
      for (std::size_t c = 0; c < ds; ++c) {
        const std::size_t r = a * ds + c;
        for (std::size_t b = 0; b < dt; ++b) comp(r, a * dt + b) = fm(b, c);
        if (a == c) rhs(r, 0) = field->one();
      }
    }
  }
  const Matrix lhs_parts[] = {equiv, comp};
  const Matrix rhs_parts[] = {Matrix(field, equiv.rows(), 1), rhs};
  const auto sol = linear_solve(vstack(lhs_parts), vstack(rhs_parts));
  if (!sol) return std::nullopt;
  return SplitWitness{kind, unflatten(field, sol->col_vector(0), rows, cols)};
}

SplitWitness averaging_section(const Matrix& sigma, const GMap& f, const Subgroup& u_prime, const Subgroup& u) {
  const Rep& v = f.source();
  const Rep& w = f.target();
  const FiniteField& fld = *v.field();
  const FinGroup& g = *v.group();
  if (!u_prime.is_subgroup_of(u) || !u.is_subgroup_of(v.domain())) {
    throw PreconditionError("averaging_section: need U' <= U <= G");
  }
  const std::size_t index = u.order() / u_prime.order();
  if (index % fld.characteristic() == 0) {
    throw PreconditionError("averaging_section: [U:U'] = " + std::to_string(index) + " is divisible by p");
  }
  if (sigma.rows() != v.dim() || sigma.cols() != w.dim() || !(f.matrix() * sigma).is_identity()) {
    throw PreconditionError("averaging_section: sigma is not a section of f");
  }
  for (GroupElement s : u_prime.generators()) {
    if (!(sigma * w.action(s) == v.action(s) * sigma)) {
      throw PreconditionError("averaging_section: sigma is not U'-equivariant");
    }
  }
  Matrix acc(v.field(), v.dim(), w.dim());
  for (GroupElement r : coset_reps(u_prime, u)) acc = acc + v.action(g.inv(r)) * sigma * w.action(r);
  acc = acc.scaled(fld.inv(fld.from_int(static_cast<long long>(index))));
  return SplitWitness{SplitKind::section, std::move(acc)};
}

AdjunctionMap adjunction_unit_A(const Rep& x, const Subgroup& u) {
  InducedRep ind = rep_induce(rep_restrict(x, u), x.domain());
  const std::size_t d = x.dim();
  Matrix a(x.field(), ind.rep.dim(), d);
  for (std::size_t i = 0; i < ind.cosets.size(); ++i) a.set_block(i * d, 0, x.action(ind.cosets[i]));
  GMap map(x, ind.rep, std::move(a));
  SplitWitness witness{SplitKind::retraction, ind.evaluation_at_identity()};
  return AdjunctionMap{std::move(ind), std::move(map), std::move(witness)};
}

AdjunctionMap adjunction_counit_B(const Rep& x, const Subgroup& u) {
  InducedRep ind = rep_induce(rep_restrict(x, u), x.domain());
  const FinGroup& g = *x.group();
  const std::size_t d = x.dim();
  Matrix b(x.field(), d, ind.rep.dim());
  for (std::size_t i = 0; i < ind.cosets.size(); ++i) b.set_block(0, i * d, x.action(g.inv(ind.cosets[i])));
  GMap map(ind.rep, x, std::move(b));
  SplitWitness witness{SplitKind::section, ind.section_at_identity()};
  return AdjunctionMap{std::move(ind), std::move(map), std::move(witness)};
}

RelativityResult relative_projectivity_test(const Rep& p, const Subgroup& u, RelativeSide side) {
  RelativityResult out;
  if (side == RelativeSide::projective) {
    out.witness = u_split_search(adjunction_counit_B(p, u).map, p.domain(), SplitKind::section);
  } else {
    out.witness = u_split_search(adjunction_unit_A(p, u).map, p.domain(), SplitKind::retraction);
  }
  out.holds = out.witness.has_value();
  return out;
}

Suspension suspension_T(const Rep& x, const Subgroup& u) {
  AdjunctionMap a = adjunction_unit_A(x, u);
  QuotientRep q = quotient(a.induced.rep, a.map.image());
  return Suspension{std::move(q.rep), std::move(a.map), std::move(q.projection)};
}

Loop loop_Omega(const Rep& x, const Subgroup& u) {
  AdjunctionMap b = adjunction_counit_B(x, u);
  SubRep k = subrep(b.induced.rep, b.map.kernel());
  return Loop{std::move(k.rep), std::move(k.inclusion), std::move(b.map)};
}

Subspace factoring_maps(const Rep& v1, const Rep& v2, const Subgroup& u, StableFlavor flavor) {
  std::vector<Vector> maps;
  if (flavor == StableFlavor::injective) {
    const AdjunctionMap a = adjunction_unit_A(v1, u);
    const HomSpace h = hom_space(a.induced.rep, v2);
    for (std::size_t i = 0; i < h.dim(); ++i) maps.push_back(flatten(h.element(i) * a.map.matrix()));
  } else {
    const AdjunctionMap b = adjunction_counit_B(v2, u);
    const HomSpace h = hom_space(v1, b.induced.rep);
    for (std::size_t i = 0; i < h.dim(); ++i) maps.push_back(flatten(b.map.matrix() * h.element(i)));
  }
  return Subspace::span(v1.field(), v1.dim() * v2.dim(), maps);
}

StableHomResult stable_hom(const Rep& v1, const Rep& v2, const Subgroup& u, StableFlavor flavor) {
  const HomSpace total = hom_space(v1, v2);
  const Subspace factoring = factoring_maps(v1, v2, u, flavor);
  if (!total.flat.contains(factoring)) throw Error("stable_hom: factoring maps are not equivariant");
  StableHomResult out;
  out.flavor = flavor;
  out.total_dim = total.dim();
  out.factoring_dim = factoring.dim();
  out.stable_dim = out.total_dim - out.factoring_dim;
  std::vector<Vector> normal;
  for (std::size_t i = 0; i < total.dim(); ++i) normal.push_back(factoring.reduce(total.flat.basis_vector(i)));
  const Subspace q = Subspace::span(v1.field(), v1.dim() * v2.dim(), normal);
  if (q.dim() != out.stable_dim) throw Error("stable_hom: quotient dimension mismatch");
  for (std::size_t i = 0; i < q.dim(); ++i) {
    out.quotient_basis.push_back(unflatten(v1.field(), q.basis_vector(i), v2.dim(), v1.dim()));
  }
  return out;
}

}  // namespace modrep
