#include <doctest.h>

#include <cmath>
#include <set>

#include "liegeo/catalog.hpp"
#include "liegeo/errors.hpp"
#include "liegeo/filiform.hpp"
#include "liegeo/random.hpp"
#include "liegeo/search.hpp"

using namespace liegeo;

namespace {

Vector ints(std::initializer_list<long> v) { return Vector::from_ints(v); }

std::set<Subspace> spaces(const SearchResult& r) {
  std::set<Subspace> out;
  for (const auto& h : r.found) out.insert(h.space());
  return out;
}

}  // namespace

TEST_CASE("rational reconstruction") {
  const auto v = rational_reconstruction({0.5, -0.25, 1.0 / 3.0});
  REQUIRE(v);
  // scaled so the largest coordinate is 1
  CHECK(*v == Vector{1, Scalar(-1, 2), Scalar(2, 3)});
  CHECK_FALSE(rational_reconstruction({1.0, M_PI / 10}, 100, 1e-12).has_value());
}

TEST_CASE("numeric geodesics on so3 land on a principal axis") {
  const MetricLieAlgebra mg(so3(), Metric(Matrix::diagonal(ints({1, 2, 3}))));
  SearchBudget b;
  b.seed = 9;
  const auto r = find_geodesic_numeric(mg, b);
  CHECK(r.converged);
  CHECK(r.residual <= 1e-10);
  REQUIRE(r.rational);
  CHECK(r.exact_confirmed);
  std::size_t nonzero = 0;
  for (const auto& c : *r.rational) nonzero += sgn(c) != 0;
  CHECK(nonzero == 1);
}

TEST_CASE("numeric geodesics on the solvable exp algebra give plus or minus X") {
  const auto r = find_geodesic_numeric(MetricLieAlgebra(solv_exp()), SearchBudget{});
  CHECK(r.converged);
  REQUIRE(r.rational);
  CHECK(r.exact_confirmed);
  CHECK(Subspace::span(3, {*r.rational}) == Subspace::coordinate(3, {1}));
  CHECK(std::abs(std::abs(r.unit_vector[0]) - 1) < 1e-9);
}

TEST_CASE("numeric geodesics on an abelian algebra converge at the first start") {
  const auto r = find_geodesic_numeric(MetricLieAlgebra(LieAlgebra::abelian(4)), SearchBudget{});
  CHECK(r.converged);
  CHECK(r.starts_used == 1);
  CHECK(r.residual == 0);
}

TEST_CASE("adapted orthogonal basis") {
  Rng rng(2);
  const MetricLieAlgebra mg(dim6_example(), Metric(random_spd_gram(rng, 6)));
  const auto e = adapted_orthogonal_basis(mg);
  REQUIRE(e.size() == 6);
  CHECK(rank(Matrix::from_rows(e, 6)) == 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) CHECK(mg.metric.inner(e[i], e[j]) == 0);
}

TEST_CASE("search on L6 finds the even coordinates") {
  SearchBudget b;
  b.max_candidates = 2000;
  const auto r = search_tg_subalgebras(MetricLieAlgebra(standard_filiform(6)), 3, b);
  CHECK(spaces(r).count(Subspace::coordinate(6, {2, 4, 6})));
  CHECK_FALSE(r.note.empty());
}

TEST_CASE("search on L4 finds exactly the two planes") {
  SearchBudget b;
  b.max_candidates = 3000;
  const auto r = search_tg_subalgebras(MetricLieAlgebra(standard_filiform(4)), 2, b);
  const std::set<Subspace> want = {Subspace::coordinate(4, {2, 4}),
                                   Subspace::span(4, {ints({0, 1, 0, -1}), ints({0, 0, 1, 0})})};
  CHECK(spaces(r) == want);
}

TEST_CASE("search on the dim-6 example finds nothing above dimension 2") {
  SearchBudget b;
  b.max_candidates = 1500;
  const MetricLieAlgebra mg(dim6_example());
  for (std::size_t k = 3; k < 6; ++k) CHECK(search_tg_subalgebras(mg, k, b).found.empty());
}

TEST_CASE("search arguments and budget") {
  const MetricLieAlgebra mg(standard_filiform(5));
  SearchBudget b;
  b.max_candidates = 40;
  CHECK_THROWS_AS(search_tg_subalgebras(mg, 0, b), InvalidArgument);
  CHECK_THROWS_AS(search_tg_subalgebras(mg, 5, b), InvalidArgument);
  const auto r = search_tg_subalgebras(mg, 2, b);
  CHECK(r.candidates == 40);
  CHECK(r.budget_exhausted);
  CHECK(r.found_coordinate + r.found_pencil + r.found_random == r.found.size());
  b.max_candidates = 0;
  CHECK_THROWS_AS(search_tg_subalgebras(mg, 2, b), InvalidArgument);
}

TEST_CASE("search is deterministic for a seed") {
  SearchBudget b;
  b.seed = 77;
  b.max_candidates = 600;
  Rng rng(4);
  const MetricLieAlgebra mg(standard_filiform(6), Metric(random_spd_gram(rng, 6)));
  CHECK(spaces(search_tg_subalgebras(mg, 2, b)) == spaces(search_tg_subalgebras(mg, 2, b)));
}

TEST_CASE("maximal nilpotency probe") {
  const LieAlgebra l5 = standard_filiform(5);
  CHECK(contains_maximal_nilpotency(l5, Subspace::coordinate(5, {1, 2})).found);
  CHECK_FALSE(contains_maximal_nilpotency(l5, Subspace::coordinate(5, {2, 3, 4, 5})).found);
  const auto p = contains_maximal_nilpotency(l5, Subspace::span(5, {ints({1, 0, 1, 0, 0}), ints({0, 0, 0, 1, 0})}));
  REQUIRE(p.found);
  CHECK(has_maximal_nilpotency_rank(l5, *p.element));
}

TEST_CASE("properties of the codimension-2 example") {
  const Cd2f c = cd2f_construction(6);
  const MetricLieAlgebra mg(c.algebra, c.metric);
  const auto p = verify_found_subalgebra_properties(mg, c.h);
  CHECK(p.ok());
  CHECK(p.codim2);
  CHECK(p.z_bracket_in_h);
  CHECK(p.z_bracket_in_center);
  CHECK_FALSE(p.contains_max_nilpotent);
  CHECK_THROWS_AS(verify_found_subalgebra_properties(MetricLieAlgebra(standard_filiform(4)),
                                                     Subalgebra(standard_filiform(4), Subspace::coordinate(4, {2, 3, 4}))),
                  InvalidArgument);
}

TEST_CASE("dimension audit on L5 and L6") {
  SearchBudget b;
  b.max_candidates = 800;
  const auto a5 = audit_dimension_bounds(MetricLieAlgebra(standard_filiform(5)), b);
  CHECK(a5.max_dim_found == 2);
  const auto a6 = audit_dimension_bounds(MetricLieAlgebra(standard_filiform(6)), b);
  CHECK(a6.max_dim_found == 3);
  CHECK_FALSE(a6.note.empty());
  CHECK_THROWS_AS(audit_dimension_bounds(MetricLieAlgebra(heis6_2center()), b), InvalidArgument);
}
