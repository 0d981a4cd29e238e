#include "doctest.h"

#include <random>

#include "modrep/error.hpp"
#include "modrep/matrix.hpp"

using namespace modrep;

namespace {

Matrix random_matrix(const FieldPtr& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f->element(static_cast<std::uint32_t>(rng() % f->order()));
  return m;
}

}  // namespace

TEST_CASE("mat_reduce examples") {
  auto f2 = FiniteField::create(2);
  auto f3 = FiniteField::create(3);
  auto id = mat_reduce(Matrix::identity(f2, 3));
  CHECK(id.rank == 3);
  CHECK(id.kernel.dim() == 0);

  auto z = mat_reduce(Matrix(f3, 2, 2));
  CHECK(z.rank == 0);
  CHECK(z.kernel.dim() == 2);

  auto ones = mat_reduce(Matrix::from_ints(f2, {{1, 1}, {1, 1}}));
  CHECK(ones.rank == 1);
  REQUIRE(ones.kernel.dim() == 1);
  CHECK(ones.kernel.basis() == Matrix::from_ints(f2, {{1, 1}}));
  CHECK(ones.image == Subspace::span(Matrix::from_ints(f2, {{1, 1}})));
}

TEST_CASE("linear_solve examples") {
  auto f2 = FiniteField::create(2);
  auto b = Matrix::from_ints(f2, {{1, 0, 1}, {0, 1, 1}});
  CHECK(linear_solve(Matrix::identity(f2, 2), b) == b);
  CHECK_FALSE(linear_solve(Matrix(f2, 2, 2), Matrix::from_ints(f2, {{1}, {0}})).has_value());
  auto x = linear_solve(Matrix::from_ints(f2, {{1, 1}, {0, 0}}), Matrix::from_ints(f2, {{1}, {0}}));
  REQUIRE(x.has_value());
  CHECK(*x == Matrix::from_ints(f2, {{1}, {0}}));
  CHECK_THROWS_AS(linear_solve(Matrix(f2, 2, 2), Matrix(f2, 3, 1)), InputError);
}

TEST_CASE("rank-nullity and solver properties on random matrices") {
  std::mt19937_64 rng(7);
  for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {3u, 2u}}) {
    auto f = FiniteField::create(p, k);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
      Matrix m = random_matrix(f, r, c, rng);
      auto red = mat_reduce(m);
      CHECK(red.rank + red.kernel.dim() == c);
      CHECK(rank(red.rref) == red.rank);
      CHECK(red.image.dim() == red.rank);
      for (std::size_t i = 0; i < red.kernel.dim(); ++i) {
        auto v = m.apply(red.kernel.basis_vector(i));
        CHECK(std::all_of(v.begin(), v.end(), [](Scalar s) { return s.code == 0; }));
      }
      // A consistent right-hand side is always solved exactly.
      Matrix x0 = random_matrix(f, c, 2, rng);
      auto x = linear_solve(m, m * x0);
      REQUIRE(x.has_value());
      CHECK(m * *x == m * x0);
      if (r == c) {
        auto inv = inverse(m);
        CHECK(inv.has_value() == (red.rank == r));
        if (inv) CHECK((m * *inv).is_identity());
      }
    }
  }
}

TEST_CASE("subspace canonical form") {
  auto f3 = FiniteField::create(3);
  auto a = Subspace::span(Matrix::from_ints(f3, {{1, 2, 0}, {0, 1, 1}}));
  auto b = Subspace::span(Matrix::from_ints(f3, {{1, 0, 1}, {0, 2, 2}, {1, 0, 1}}));
  CHECK(a == b);
  CHECK(a.basis() == b.basis());
  CHECK(a.dim() == 2);
  CHECK(a.contains(Vector{f3->from_int(1), f3->from_int(0), f3->from_int(1)}));
  CHECK_FALSE(a.contains(Vector{f3->from_int(0), f3->from_int(0), f3->from_int(1)}));
  auto c = Subspace::span(Matrix::from_ints(f3, {{0, 0, 1}}));
  CHECK(a.sum(c) == Subspace::full(f3, 3));
  CHECK(a.intersect(c).dim() == 0);
  CHECK(a.intersect(a) == a);
  auto v = Vector{f3->from_int(2), f3->from_int(1), f3->from_int(0)};
  auto co = a.coordinates(v);
  REQUIRE(co.has_value());
  CHECK(Matrix::row(f3, *co) * a.basis() == Matrix::row(f3, v));
}

TEST_CASE("subspace lattice identities on random spans") {
  std::mt19937_64 rng(11);
  auto f = FiniteField::create(2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = Subspace::span(random_matrix(f, rng() % 4, 5, rng));
    auto b = Subspace::span(random_matrix(f, rng() % 4, 5, rng));
    CHECK(a.dim() + b.dim() == a.sum(b).dim() + a.intersect(b).dim());
    CHECK(a.sum(b).contains(a));
    CHECK(a.contains(a.intersect(b)));
    CHECK(b.contains(a.intersect(b)));
  }
}

TEST_CASE("block helpers") {
  auto f2 = FiniteField::create(2);
  auto a = Matrix::from_ints(f2, {{1, 0}, {1, 1}});
  auto b = Matrix::from_ints(f2, {{1}});
  std::vector<Matrix> parts{a, b};
  auto d = block_diag(parts);
  CHECK(d.rows() == 3);
  CHECK(d.block(0, 0, 2, 2) == a);
  CHECK(d.block(2, 2, 1, 1) == b);
  CHECK(unflatten(f2, flatten(a), 2, 2) == a);
  std::vector<Matrix> h{a, a};
  CHECK(hstack(h).cols() == 4);
  CHECK(vstack(h).rows() == 4);
  CHECK(a.transpose().transpose() == a);
}
