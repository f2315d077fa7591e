// Seeded property checks. LIEGEO_SEED overrides the base seed.
#include <doctest.h>

#include "liegeo/catalog.hpp"
#include "liegeo/filiform.hpp"
#include "liegeo/io.hpp"
#include "liegeo/random.hpp"
#include "liegeo/search.hpp"

using namespace liegeo;

namespace {

Rng rng_for(std::uint64_t salt) { return Rng(default_seed() ^ (salt * 0x9e3779b97f4a7c15ULL)); }

MetricLieAlgebra random_metric_algebra(Rng& rng) {
  const auto fx = all_fixtures();
  const LieAlgebra& g = fx[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(fx.size()) - 1))];
  return MetricLieAlgebra(g, Metric(random_spd_gram(rng, g.dim())));
}

}  // namespace

TEST_CASE("linear algebra identities on random matrices") {
  Rng rng = rng_for(1);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 6));
    const Matrix m = random_invertible(rng, n);
    const auto inv = inverse(m);
    REQUIRE(inv);
    CHECK(m * *inv == Matrix::identity(n));
    CHECK(determinant(m) * determinant(*inv) == 1);

    Matrix a(n, n + 2);
    for (std::size_t r = 0; r < n; ++r) a.set_row(r, random_int_vector(rng, n + 2, 2));
    const Matrix k = kernel(a);
    CHECK(rank(a) + k.rows() == n + 2);
    for (std::size_t r = 0; r < k.rows(); ++r) CHECK((a * k.row(r)).is_zero());
    // row operations do not change the canonical subspace
    CHECK(Subspace::row_space(a) == Subspace::row_space(m * a));
  }
}

TEST_CASE("the connection is torsion free and metric compatible") {
  Rng rng = rng_for(2);
  for (int t = 0; t < 60; ++t) {
    const MetricLieAlgebra mg = random_metric_algebra(rng);
    const std::size_t n = mg.dim();
    const Vector x = random_int_vector(rng, n, 3), y = random_int_vector(rng, n, 3), z = random_int_vector(rng, n, 3);
    CHECK(levi_civita(mg, x, y) - levi_civita(mg, y, x) == mg.algebra.bracket(x, y));
    CHECK(mg.metric.inner(levi_civita(mg, x, y), z) + mg.metric.inner(y, levi_civita(mg, x, z)) == 0);
  }
}

TEST_CASE("the geodesic defect is orthogonal to y and matches nabla_y y") {
  Rng rng = rng_for(3);
  for (int t = 0; t < 60; ++t) {
    const MetricLieAlgebra mg = random_metric_algebra(rng);
    const Vector y = random_rational_vector(rng, mg.dim(), 3, 3);
    const Vector f = geodesic_defect(mg, y);
    CHECK(mg.metric.inner(f, y) == 0);
    CHECK(f == levi_civita(mg, y, y));
    CHECK(is_geodesic(mg, Scalar(-5, 3) * y).geodesic == f.is_zero());
  }
}

TEST_CASE("central subspaces and subalgebras orthogonal to [g, g] are totally geodesic") {
  Rng rng = rng_for(4);
  for (const auto& g : nilpotent_fixtures()) {
    for (int t = 0; t < 5; ++t) {
      const MetricLieAlgebra mg(g, Metric(random_spd_gram(rng, g.dim())));
      const Subspace z = center(g);
      if (!z.is_zero() && !z.is_whole()) CHECK_MESSAGE(totally_geodesic_fast(mg, z), g.name());
      const Subspace perp = orthogonal_complement(mg.metric, derived_algebra(g));
      if (!perp.is_zero() && is_subalgebra(g, perp)) CHECK_MESSAGE(totally_geodesic_fast(mg, perp), g.name());
    }
  }
}

TEST_CASE("isometric changes of basis preserve the totally geodesic verdict") {
  Rng rng = rng_for(5);
  for (int t = 0; t < 20; ++t) {
    const MetricLieAlgebra mg = random_metric_algebra(rng);
    const std::size_t n = mg.dim();
    const auto gens = std::vector<Vector>{random_int_vector(rng, n, 1)};
    const auto h = generated_subalgebra_capped(mg.algebra, gens, n - 1);
    if (!h || h->is_zero()) continue;
    const Matrix m = random_invertible(rng, n);
    // new basis Y_i = sum_k M(i,k) X_k; Gram becomes M G M^T
    const MetricLieAlgebra moved(change_basis(mg.algebra, m), Metric(m * mg.metric.gram() * m.transpose()));
    const Matrix minv = *inverse(m);
    std::vector<Vector> rows;
    for (const auto& v : h->basis_vectors()) rows.push_back(left_multiply(v, minv));
    const Subspace h2 = Subspace::span(n, rows);
    CHECK(totally_geodesic_fast(mg, *h) == totally_geodesic_fast(moved, h2));
  }
}

TEST_CASE("Vergne relations survive random changes of basis") {
  Rng rng = rng_for(6);
  for (const auto& g : filiform_fixtures()) {
    for (int t = 0; t < 3; ++t) {
      const LieAlgebra moved = change_basis(g, random_invertible(rng, g.dim()));
      const VergneBasis vb = vergne_basis(moved);
      CHECK_NOTHROW(verify_vergne_relations(moved, vb));
      if (g.dim() % 2 == 1) CHECK(vb.alpha == 0);
    }
  }
}

TEST_CASE("every search result passes the exact check") {
  Rng rng = rng_for(7);
  SearchBudget b;
  b.seed = rng.next();
  b.max_candidates = 300;
  for (std::size_t n = 4; n <= 6; ++n) {
    const MetricLieAlgebra mg(standard_filiform(n), Metric(random_spd_gram(rng, n)));
    for (std::size_t k = 1; k < n; ++k) {
      const auto r = search_tg_subalgebras(mg, k, b);
      CHECK(r.candidates <= b.max_candidates);
      for (const auto& h : r.found) {
        CHECK(h.dim() == k);
        CHECK(is_totally_geodesic(mg, h).totally_geodesic);
        CHECK(verify_found_subalgebra_properties(mg, h).ok());
      }
    }
  }
}

TEST_CASE("algebra files round-trip for random algebras and metrics") {
  Rng rng = rng_for(8);
  for (int t = 0; t < 20; ++t) {
    const MetricLieAlgebra mg = random_metric_algebra(rng);
    AlgebraFile f;
    f.algebra = change_basis(mg.algebra, random_invertible(rng, mg.dim()));
    f.metric = mg.metric;
    f.subalgebras.push_back({"c", center(f.algebra).basis_vectors()});
    const std::string text = emit_algebra_file(f);
    const AlgebraFile g = parse_algebra_file(text);
    CHECK(g.algebra == f.algebra);
    CHECK(*g.metric == *f.metric);
    CHECK(emit_algebra_file(g) == text);
  }
}
