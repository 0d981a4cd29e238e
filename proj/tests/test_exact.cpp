#include "doctest.h"

#include <random>

#include "modrep/error.hpp"
#include "modrep/exact.hpp"
#include "modrep/jordan.hpp"

using namespace modrep;

namespace {

Matrix random_invertible(const FieldPtr& f, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = f->element(static_cast<std::uint32_t>(rng() % f->order()));
    if (rank(m) == n) return m;
  }
}

// A few small representations of G, randomly conjugated.
std::vector<Rep> sample_reps(const Subgroup& g, const FieldPtr& f, std::mt19937_64& rng) {
  std::vector<Rep> out{Rep::trivial(g, f)};
  if (g.order() <= 4) out.push_back(Rep::regular(g, f));
  for (const Subgroup& u : all_subgroups(g)) {
    const std::size_t idx = u.index_in(g);
    if (idx > 1 && idx <= 3) {
      out.push_back(rep_induce(Rep::trivial(u, f), g).rep);
      break;
    }
  }
  out.push_back(direct_sum(std::vector<Rep>{Rep::trivial(g, f), out.back()}));
  const Rep last = out.back();
  out.push_back(conjugate_basis(last, random_invertible(f, last.dim(), rng)));
  return out;
}

GroupElement el(const GroupPtr& g, const std::string& label) {
  auto x = g->find(label);
  REQUIRE(x.has_value());
  return *x;
}

}  // namespace

TEST_CASE("u_split_search examples") {
  auto f2 = FiniteField::create(2);
  auto c2 = make_cyclic(2);
  auto g = Subgroup::whole(c2);
  auto e = Subgroup::trivial(c2);
  auto aug = GMap(Rep::regular(g, f2), Rep::trivial(g, f2), Matrix::from_ints(f2, {{1, 1}}));
  auto sec = u_split_search(aug, e, SplitKind::section);
  REQUIRE(sec.has_value());
  CHECK((aug.matrix() * sec->map).is_identity());
  CHECK_FALSE(u_split_search(aug, g, SplitKind::section).has_value());
  auto reg = Rep::regular(g, f2);
  auto id = u_split_search(identity_map(reg), g, SplitKind::section);
  REQUIRE(id.has_value());
  CHECK(id->map.is_identity());
  auto ret = u_split_search(identity_map(reg), g, SplitKind::retraction);
  REQUIRE(ret.has_value());
  CHECK(ret->map.is_identity());
}

TEST_CASE("averaging_section examples") {
  auto f3 = FiniteField::create(3);
  auto c2 = make_cyclic(2);
  auto g = Subgroup::whole(c2);
  auto e = Subgroup::trivial(c2);
  auto aug = GMap(Rep::regular(g, f3), Rep::trivial(g, f3), Matrix::from_ints(f3, {{1, 1}}));
  const auto sigma = Matrix::from_ints(f3, {{1}, {0}});  // 1 -> e
  auto avg = averaging_section(sigma, aug, e, g);
  CHECK(avg.map == Matrix::from_ints(f3, {{2}, {2}}));
  CHECK((aug.matrix() * avg.map).is_identity());
  CHECK(averaging_section(avg.map, aug, g, g).map == avg.map);
  auto f2 = FiniteField::create(2);
  auto aug2 = GMap(Rep::regular(g, f2), Rep::trivial(g, f2), Matrix::from_ints(f2, {{1, 1}}));
  CHECK_THROWS_AS(averaging_section(Matrix::from_ints(f2, {{1}, {0}}), aug2, e, g), PreconditionError);
}

TEST_CASE("adjunction maps examples") {
  auto f2 = FiniteField::create(2);
  auto c2 = make_cyclic(2);
  auto g = Subgroup::whole(c2);
  auto e = Subgroup::trivial(c2);
  auto x = Rep::trivial(g, f2);
  auto a = adjunction_unit_A(x, e);
  CHECK(a.map.matrix() == Matrix::from_ints(f2, {{1}, {1}}));
  CHECK(a.map.image().dim() == 1);
  auto b = adjunction_counit_B(x, e);
  CHECK(b.map.matrix() == Matrix::from_ints(f2, {{1, 1}}));
  auto reg = Rep::regular(g, f2);
  CHECK(adjunction_unit_A(reg, g).map.matrix().is_identity());
  CHECK(adjunction_counit_B(reg, g).map.matrix().is_identity());
}

TEST_CASE("adjunction witnesses on random representations") {
  std::mt19937_64 rng(3);
  int checked = 0;
  for (auto [name, p] : {std::pair{"S3", 3u}, {"C4", 2u}, {"D4", 2u}, {"A4", 3u}, {"C2xC2", 2u}}) {
    auto g = Subgroup::whole(builtin_group(name));
    auto f = FiniteField::create(p);
    auto subs = all_subgroups(g);
    for (const Rep& x : sample_reps(g, f, rng)) {
      const Subgroup& u = subs[rng() % subs.size()];
      auto a = adjunction_unit_A(x, u);
      CHECK((a.witness.map * a.map.matrix()).is_identity());
      CHECK(hom_space_over(a.induced.rep, x, u).contains(a.witness.map));
      CHECK(is_admissible_monic(a.map, u));
      auto b = adjunction_counit_B(x, u);
      CHECK((b.map.matrix() * b.witness.map).is_identity());
      CHECK(hom_space_over(x, b.induced.rep, u).contains(b.witness.map));
      CHECK(is_admissible_epic(b.map, u));
      ++checked;
    }
  }
  CHECK(checked >= 20);
}

TEST_CASE("relative projectivity examples") {
  auto f3 = FiniteField::create(3);
  auto s3 = make_symmetric3();
  auto g = Subgroup::whole(s3);
  auto c3 = subgroup_generate(s3, {el(s3, "(1 2 3)")});
  auto triv = Rep::trivial(g, f3);
  auto r = relative_projectivity_test(triv, c3, RelativeSide::projective);
  CHECK(r.holds);
  CHECK(r.witness.has_value());
  CHECK_FALSE(relative_projectivity_test(triv, Subgroup::trivial(s3), RelativeSide::projective).holds);
  for (const Subgroup& u : all_subgroups(g)) {
    auto ind = rep_induce(Rep::trivial(u, f3), g).rep;
    CHECK(relative_projectivity_test(ind, u, RelativeSide::projective).holds);
    CHECK(relative_projectivity_test(ind, u, RelativeSide::injective).holds);
  }
}

TEST_CASE("suspension and loop examples") {
  auto f2 = FiniteField::create(2);
  auto c2 = make_cyclic(2);
  auto g = Subgroup::whole(c2);
  auto e = Subgroup::trivial(c2);
  auto x = Rep::trivial(g, f2);
  auto t = suspension_T(x, e);
  CHECK(t.rep.dim() == 1);
  CHECK(t.rep.same_action(x));
  auto o = loop_Omega(x, e);
  CHECK(o.rep.dim() == 1);
  CHECK(o.rep.same_action(x));
  CHECK(suspension_T(x, g).rep.dim() == 0);
  CHECK(loop_Omega(x, g).rep.dim() == 0);

  auto f3 = FiniteField::create(3);
  auto c3g = make_cyclic(3);
  auto c3 = Subgroup::whole(c3g);
  auto j1 = jordan_block_rep(c3, 1, f3, 1);
  auto om = loop_Omega(j1, Subgroup::trivial(c3g));
  CHECK(jordan_type(om.rep, 1) == std::vector<std::size_t>{2});
}

TEST_CASE("suspension dimension and exactness") {
  std::mt19937_64 rng(5);
  for (auto [name, p] : {std::pair{"S3", 2u}, {"C2xC2", 2u}, {"C9", 3u}}) {
    auto g = Subgroup::whole(builtin_group(name));
    auto f = FiniteField::create(p);
    for (const Rep& x : sample_reps(g, f, rng)) {
      for (const Subgroup& u : all_subgroups(g)) {
        auto t = suspension_T(x, u);
        CHECK(t.rep.dim() == u.index_in(g) * x.dim() - x.dim());
        SES ses(t.unit, t.quotient);
        CHECK(is_admissible_monic(ses.left(), u));
        auto o = loop_Omega(x, u);
        CHECK(o.rep.dim() == u.index_in(g) * x.dim() - x.dim());
        SES ses2(o.inclusion, o.counit);
        CHECK(is_admissible_epic(ses2.right(), u));
      }
    }
  }
}

TEST_CASE("jordan oracle") {
  auto f3 = FiniteField::create(3);
  CHECK(jordan_type(Matrix::identity(f3, 3)) == std::vector<std::size_t>{1, 1, 1});
  CHECK(jordan_type(Matrix::from_ints(f3, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}})) == std::vector<std::size_t>{3});
  CHECK(jordan_type(Matrix::from_ints(f3, {{1, 0, 1}, {0, 1, 0}, {0, 0, 1}})) == std::vector<std::size_t>{2, 1});
  auto st = stable_jordan_type({3, 2, 3, 1}, 3);
  CHECK(st.core == std::vector<std::size_t>{2, 1});
  CHECK(st.free_blocks == 2);
  CHECK_THROWS_AS(jordan_type(Matrix::from_ints(f3, {{2}})), PreconditionError);
}

TEST_CASE("cyclic p-group T and Omega against the Jordan oracle") {
  for (unsigned p : {2u, 3u, 5u}) {
    auto cg = make_cyclic(p);
    auto c = Subgroup::whole(cg);
    auto e = Subgroup::trivial(cg);
    auto f = FiniteField::create(p);
    const GroupElement gen = 1;
    CHECK(jordan_type(Rep::regular(c, f), gen) == std::vector<std::size_t>{p});
    for (std::size_t i = 1; i < p; ++i) {
      CAPTURE(p);
      CAPTURE(i);
      auto j = jordan_block_rep(c, gen, f, i);
      auto om = loop_Omega(j, e);
      auto t = suspension_T(j, e);
      // ind_{e}(J_i) is free of rank i, so Omega(J_i) = J_{p-i} + (i - 1) free
      // blocks; the stable class is J_{p-i}.
      auto om_type = stable_jordan_type(jordan_type(om.rep, gen), p);
      CHECK(om_type.core == std::vector<std::size_t>{p - i});
      CHECK(om_type.free_blocks == i - 1);
      auto t_type = stable_jordan_type(jordan_type(t.rep, gen), p);
      CHECK(t_type.core == std::vector<std::size_t>{p - i});
      CHECK(t_type.free_blocks == i - 1);
      auto back = stable_jordan_type(jordan_type(loop_Omega(t.rep, e).rep, gen), p);
      CHECK(back.core == std::vector<std::size_t>{i});
    }
    auto triv = Rep::trivial(c, f);
    auto s = stable_hom(triv, triv, e, StableFlavor::injective);
    CHECK(s.total_dim == 1);
    CHECK(s.stable_dim == 1);
    CHECK(stable_hom(triv, triv, e, StableFlavor::projective).stable_dim == 1);
  }
}

TEST_CASE("stable_hom examples") {
  auto f2 = FiniteField::create(2);
  auto c2 = make_cyclic(2);
  auto g = Subgroup::whole(c2);
  auto e = Subgroup::trivial(c2);
  auto reg = Rep::regular(g, f2);
  auto triv = Rep::trivial(g, f2);
  auto r = stable_hom(triv, reg, e, StableFlavor::injective);
  CHECK(r.stable_dim == 0);
  CHECK(r.total_dim == r.factoring_dim);
  for (const Rep& a : {triv, reg}) {
    for (const Rep& b : {triv, reg}) {
      CHECK(stable_hom(a, b, g, StableFlavor::injective).stable_dim == 0);
      CHECK(stable_hom(a, b, g, StableFlavor::projective).stable_dim == 0);
    }
  }
}

TEST_CASE("frobenius property: relative projectives are relative injectives") {
  std::mt19937_64 rng(9);
  for (auto [name, p] : {std::pair{"S3", 3u}, {"S3", 2u}, {"D4", 2u}, {"Q8", 2u}, {"C4", 2u}}) {
    auto g = Subgroup::whole(builtin_group(name));
    auto f = FiniteField::create(p);
    for (const Rep& x : sample_reps(g, f, rng)) {
      for (const Subgroup& u : all_subgroups(g)) {
        const bool proj = relative_projectivity_test(x, u, RelativeSide::projective).holds;
        const bool inj = relative_projectivity_test(x, u, RelativeSide::injective).holds;
        CHECK(proj == inj);
        // A relatively projective object has trivial stable endomorphisms.
        if (proj) CHECK(stable_hom(x, x, u, StableFlavor::injective).stable_dim == 0);
      }
    }
  }
}
