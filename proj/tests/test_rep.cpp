#include "doctest.h"

#include <random>

#include "modrep/error.hpp"
#include "modrep/rep.hpp"

using namespace modrep;

namespace {

GroupElement el(const GroupPtr& g, const std::string& label) {
  auto x = g->find(label);
  REQUIRE(x.has_value());
  return *x;
}

Vector unit(const FieldPtr& f, std::size_t n, std::size_t i) {
  Vector v(n, f->zero());
  v[i] = f->one();
  return v;
}

Matrix random_hom(const HomSpace& h, const FieldPtr& f, std::mt19937_64& rng) {
  Matrix m(f, h.rows, h.cols);
  for (std::size_t i = 0; i < h.dim(); ++i) {
    m = m + h.element(i).scaled(f->element(static_cast<std::uint32_t>(rng() % f->order())));
  }
  return m;
}

bool all_equal(const Vector& v, Scalar s) {
  return std::all_of(v.begin(), v.end(), [&](Scalar x) { return x == s; });
}

}  // namespace

TEST_CASE("rep_build examples") {
  auto c2 = make_cyclic(2);
  auto g = Subgroup::whole(c2);
  auto f2 = FiniteField::create(2);
  auto f3 = FiniteField::create(3);
  auto t = rep_build(g, f2, {{1, Matrix::from_ints(f2, {{1}})}});
  CHECK(t.dim() == 1);
  auto reg = rep_build(g, f2, {{1, Matrix::from_ints(f2, {{0, 1}, {1, 0}})}});
  CHECK(reg.dim() == 2);
  CHECK(reg.same_action(Rep::regular(g, f2)));
  auto sgn = rep_build(g, f3, {{1, Matrix::from_ints(f3, {{2}})}});
  CHECK(sgn.action(1) == Matrix::from_ints(f3, {{2}}));
  // 2 has order 2 in F_3 but not in F_5 (relation g^2 = e violated).
  auto f5 = FiniteField::create(5);
  CHECK_THROWS_AS(rep_build(g, f5, {{1, Matrix::from_ints(f5, {{2}})}}), InputError);
  CHECK_THROWS_AS(rep_build(g, f3, {{1, Matrix::from_ints(f3, {{0}})}}), InputError);
}

TEST_CASE("rep_restrict examples") {
  auto s3 = make_symmetric3();
  auto f3 = FiniteField::create(3);
  auto reg = Rep::regular(Subgroup::whole(s3), f3);
  CHECK(rep_restrict(reg, Subgroup::whole(s3)).same_action(reg));
  auto c3 = subgroup_generate(s3, {el(s3, "(1 2 3)")});
  auto r = rep_restrict(reg, c3);
  CHECK(r.dim() == 6);
  CHECK(r.domain() == c3);
  auto e = rep_restrict(reg, Subgroup::trivial(s3));
  CHECK(e.action(s3->identity()).is_identity());
}

TEST_CASE("rep_induce examples") {
  auto f2 = FiniteField::create(2);
  auto f3 = FiniteField::create(3);
  auto c2 = make_cyclic(2);
  auto whole = Subgroup::whole(c2);
  auto w = Rep::regular(whole, f2);
  CHECK(rep_induce(w, whole).rep.same_action(w));
  auto ind = rep_induce(Rep::trivial(Subgroup::trivial(c2), f2), whole);
  CHECK(ind.rep.dim() == 2);
  CHECK(ind.rep.same_action(Rep::regular(whole, f2)));
  auto s3 = make_symmetric3();
  auto c2s = subgroup_generate(s3, {el(s3, "(1 2)")});
  CHECK(rep_induce(Rep::trivial(c2s, f3), Subgroup::whole(s3)).rep.dim() == 3);
}

TEST_CASE("hom_space examples") {
  auto f2 = FiniteField::create(2);
  auto c2 = Subgroup::whole(make_cyclic(2));
  CHECK(hom_space(Rep::trivial(c2, f2), Rep::trivial(c2, f2)).dim() == 1);
  CHECK(hom_space(Rep::trivial(c2, f2), Rep::regular(c2, f2)).dim() == 1);
  auto s3 = make_symmetric3();
  auto g = Subgroup::whole(s3);
  std::map<GroupElement, Matrix> sign;
  sign.emplace(el(s3, "(1 2)"), Matrix::from_ints(f2, {{-1}}));
  sign.emplace(el(s3, "(1 2 3)"), Matrix::from_ints(f2, {{1}}));
  CHECK(hom_space(Rep::trivial(g, f2), rep_build(g, f2, sign)).dim() == 1);
  auto f3 = FiniteField::create(3);
  std::map<GroupElement, Matrix> sign3;
  sign3.emplace(el(s3, "(1 2)"), Matrix::from_ints(f3, {{-1}}));
  sign3.emplace(el(s3, "(1 2 3)"), Matrix::from_ints(f3, {{1}}));
  CHECK(hom_space(Rep::trivial(g, f3), rep_build(g, f3, sign3)).dim() == 0);
}

TEST_CASE("fixed_points and cyclic_dim examples") {
  auto f2 = FiniteField::create(2);
  auto c2g = make_cyclic(2);
  auto c2 = Subgroup::whole(c2g);
  auto reg = Rep::regular(c2, f2);
  CHECK(fixed_points(reg, Subgroup::trivial(c2g)).dim() == 2);
  auto fp = fixed_points(reg, c2);
  REQUIRE(fp.dim() == 1);
  CHECK(fp.basis() == Matrix::from_ints(f2, {{1, 1}}));
  CHECK(cyclic_dim(reg, Vector(2, f2->zero())) == 0);
  CHECK(cyclic_dim(reg, Vector{f2->one(), f2->one()}) == 1);
  CHECK(cyclic_dim(reg, unit(f2, 2, c2.position(c2g->identity()))) == 2);
}

TEST_CASE("omega_v examples") {
  auto f2 = FiniteField::create(2);
  auto c4 = make_cyclic(4);
  auto k = Subgroup::whole(c4);
  auto t = Rep::trivial(k, f2);
  auto om = omega_v(t, Vector{f2->one()});
  REQUIRE(om.size() == 2);
  CHECK(om[0].order() == 1);
  CHECK(om[1].order() == 2);
  CHECK_THROWS_AS(omega_v(t, Vector{f2->zero()}), PreconditionError);
  auto c2 = make_cyclic(2);
  auto reg = Rep::regular(Subgroup::whole(c2), f2);
  CHECK(omega_v(reg, unit(f2, 2, 0)).empty());
}

TEST_CASE("phi_Uv examples") {
  auto f2 = FiniteField::create(2);
  auto c2 = make_cyclic(2);
  auto k = Subgroup::whole(c2);
  auto t = Rep::trivial(k, f2);
  auto e = Subgroup::trivial(c2);
  auto phi = phi_Uv(t, e, Vector{f2->one()});
  CHECK(phi.matrix() == Matrix::from_ints(f2, {{1, 1}}));
  CHECK(phi.kernel().dim() == 1);
  CHECK_THROWS_AS(phi_Uv(Rep::regular(k, f2), k, unit(f2, 2, 0)), PreconditionError);
}

TEST_CASE("phi_Uv properties over p-groups") {
  for (auto [name, p] : {std::pair{"C2", 2u}, {"C4", 2u}, {"C2xC2", 2u}, {"C3", 3u}, {"D4", 2u}, {"Q8", 2u}}) {
    auto g = builtin_group(name);
    auto f = FiniteField::create(p);
    auto k = Subgroup::whole(g);
    CAPTURE(name);
    std::vector<Rep> reps{Rep::trivial(k, f), Rep::regular(k, f)};
    if (g->order() <= 4) reps.push_back(direct_sum(std::vector<Rep>{Rep::trivial(k, f), Rep::regular(k, f)}));
    for (const Rep& v : reps) {
      CHECK(fixed_points(v, k).dim() > 0);
      for (const Vector& x : default_phi_vectors(v)) {
        for (const Subgroup& u : omega_v(v, x)) {
          auto phi = phi_Uv(v, u, x);
          CHECK(phi.kernel().dim() > 0);
          CosetTable cosets(u, k);
          CHECK(phi.matrix().col_vector(cosets.identity_coset()) == x);
          CHECK(phi.image() == cyclic_submodule(v, x));
        }
      }
    }
  }
}

TEST_CASE("assemble_phi examples") {
  auto f2 = FiniteField::create(2);
  auto c2 = make_cyclic(2);
  auto k = Subgroup::whole(c2);
  auto a = assemble_phi(Rep::trivial(k, f2));
  REQUIRE(a.summands.size() == 1);
  CHECK(a.summands[0].subgroup.order() == 1);
  CHECK(a.source().same_action(Rep::regular(k, f2)));
  CHECK(a.phi == Matrix::from_ints(f2, {{1, 1}}));
  CHECK(a.is_surjective());
  // The only fixed vector of F[C_2] is e + g, which maps to 0.
  auto fixed = fixed_points(a.source(), k);
  for (std::size_t i = 0; i < fixed.dim(); ++i) CHECK(all_equal(a.phi.apply(fixed.basis_vector(i)), f2->zero()));

  auto z = assemble_phi(Rep::zero(k, f2));
  CHECK(z.source_dim() == 0);
  CHECK(z.summands.empty());

  // The regular representation is projective: no vector has a kernel
  // producing U, so assembly has nothing to cover it with.
  CHECK_THROWS_AS(assemble_phi(Rep::regular(k, f2)), PreconditionError);
}

TEST_CASE("induced fixed points are the constants") {
  for (auto [name, p] : {std::pair{"C4", 2u}, {"S3", 3u}, {"D4", 2u}, {"A4", 2u}, {"C9", 3u}}) {
    auto g = builtin_group(name);
    auto f = FiniteField::create(p);
    auto k = Subgroup::whole(g);
    for (const Subgroup& u : all_subgroups(k)) {
      auto ind = rep_induce(Rep::trivial(u, f), k);
      auto fp = fixed_points(ind.rep, k);
      REQUIRE(fp.dim() == 1);
      CHECK(all_equal(fp.basis_vector(0), f->one()));
      CHECK(ind.rep.dim() == u.index_in(k));
    }
  }
}

TEST_CASE("frobenius_transport examples and round trips") {
  auto f3 = FiniteField::create(3);
  auto s3 = make_symmetric3();
  auto g = Subgroup::whole(s3);
  auto c2 = subgroup_generate(s3, {el(s3, "(1 2)")});
  auto w = Rep::trivial(c2, f3);
  auto v = Rep::trivial(g, f3);
  CHECK(hom_space(rep_induce(w, g).rep, v).dim() == 1);
  CHECK(hom_space(w, rep_restrict(v, c2)).dim() == 1);

  // U = G: transport is the identity.
  auto reg = Rep::regular(g, f3);
  auto id = frobenius_transport(reg, reg, Adjunction::lower, Matrix::identity(f3, 6));
  CHECK(id.matrix().is_identity());

  std::mt19937_64 rng(20);
  auto vreg = Rep::regular(g, f3);
  auto wsum = direct_sum(std::vector<Rep>{w, w});
  for (int trial = 0; trial < 20; ++trial) {
    auto lower_in = random_hom(hom_space(wsum, rep_restrict(vreg, c2)), f3, rng);
    auto lower = frobenius_transport(wsum, vreg, Adjunction::lower, lower_in);
    CHECK(frobenius_transport_back(wsum, vreg, Adjunction::lower, lower) == lower_in);
    auto upper_in = random_hom(hom_space(rep_restrict(vreg, c2), wsum), f3, rng);
    auto upper = frobenius_transport(wsum, vreg, Adjunction::upper, upper_in);
    CHECK(frobenius_transport_back(wsum, vreg, Adjunction::upper, upper) == upper_in);
  }
  CHECK_THROWS(frobenius_transport(w, v, Adjunction::lower, Matrix::from_ints(f3, {{2, 1}})));
}

TEST_CASE("chi_eigenspace examples") {
  auto f4 = FiniteField::create(2, 2);
  auto c3 = make_cyclic(3);
  auto c = Subgroup::whole(c3);
  auto reg = Rep::regular(c, f4);
  auto e = Subgroup::trivial(c3);
  auto triv = chi_eigenspace(rep_restrict(reg, e), Character::trivial(e, f4));
  CHECK(triv.space.dim() == 3);
  REQUIRE(triv.projector.has_value());
  CHECK(triv.projector->is_identity());

  const Scalar omega = f4->element(2);
  REQUIRE(f4->mult_order(omega) == 3);
  Character chi(c, f4, {f4->one(), omega, f4->mul(omega, omega)});
  auto eig = chi_eigenspace(reg, chi);
  CHECK(eig.space.dim() == 1);
  REQUIRE(eig.projector.has_value());
  CHECK(*eig.projector * *eig.projector == *eig.projector);
  CHECK(mat_reduce(*eig.projector).image == eig.space);
  for (const Character& x : all_characters(c, f4)) {
    auto ev = chi_eigenspace(reg, x);
    CHECK(ev.space.dim() == 1);
  }
  CHECK(all_characters(c, f4).size() == 3);
  // No nontrivial cube roots of unity in F_2, and characters must be
  // trivial on p-elements.
  CHECK(all_characters(c, FiniteField::create(2)).size() == 1);
  CHECK_THROWS_AS(Character(c, f4, {f4->one(), omega, omega}), InputError);
  auto c2 = Subgroup::whole(make_cyclic(2));
  CHECK(all_characters(c2, f4).size() == 1);
}

TEST_CASE("extend_by_chi examples") {
  auto f4 = FiniteField::create(2, 2);
  const Scalar omega = f4->element(2);
  auto g = direct_product(make_cyclic(2), make_cyclic(3));
  auto whole = Subgroup::whole(g);
  auto k = Subgroup(g, {0, 3});
  auto c = Subgroup(g, {0, 1, 2});
  Character chi(c, f4, {f4->one(), omega, f4->mul(omega, omega)});
  auto v = Rep::trivial(k, f4);
  auto ext = extend_by_chi(v, chi, whole);
  CHECK(ext.dim() == 1);
  CHECK(ext.action(1) == Matrix(f4, 1, 1) + Matrix::identity(f4, 1).scaled(omega));
  CHECK(rep_restrict(ext, k).same_action(v));

  auto e = Subgroup::trivial(g);
  CHECK(extend_by_chi(v, Character::trivial(e, f4), k).same_action(v));

  auto c3 = Subgroup::whole(make_cyclic(3));
  Character bad(c3, f4, {f4->one(), omega, f4->mul(omega, omega)});
  CHECK_THROWS_AS(extend_by_chi(Rep::trivial(c3, f4), bad, c3), PreconditionError);
}

TEST_CASE("quotients and subreps") {
  auto f3 = FiniteField::create(3);
  auto c3 = Subgroup::whole(make_cyclic(3));
  auto reg = Rep::regular(c3, f3);
  auto fp = fixed_points(reg, c3);
  auto sub = subrep(reg, fp);
  CHECK(sub.rep.dim() == 1);
  auto q = quotient(reg, fp);
  CHECK(q.rep.dim() == 2);
  CHECK(q.projection.is_surjective());
  CHECK(q.projection.kernel() == fp);
  SES ses(sub.inclusion, q.projection);
  CHECK(ses.left().is_injective());
  CHECK_THROWS_AS(subrep(reg, Subspace::span(Matrix::from_ints(f3, {{1, 0, 0}}))), PreconditionError);
}
