#include "liegeo_cli/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>

#include "liegeo/catalog.hpp"
#include "liegeo/random.hpp"
#include "liegeo/search.hpp"

namespace liegeo::cli {

namespace {

using clock_type = std::chrono::steady_clock;

double since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

struct Found {
  MetricLieAlgebra mg;
  Subalgebra h;
  std::string origin;
};

struct Outcome {
  bool pass = true;
  std::string detail;
  std::map<std::string, std::string> values;
  std::map<std::string, std::vector<std::string>> witnesses;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

Vector combination(Rng& rng, const std::vector<Vector>& basis, std::size_t n) {
  Vector v(n);
  while (v.is_zero())
    for (const auto& b : basis) v.add_scaled(Scalar(rng.uniform_int(-3, 3)), b);
  return v;
}

Vector nonzero_rational(Rng& rng, std::size_t n) { return random_rational_vector(rng, n, 5, 4); }

std::vector<Vector> units(std::size_t n) {
  std::vector<Vector> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(Vector::unit(n, i));
  return out;
}

class Suite {
 public:
  Suite(SuiteLevel level, std::uint64_t seed) : full_(level == SuiteLevel::full), seed_(seed) {}

  Report run() {
    Report r;
    run_item(r, "1 connection is torsion-free and metric", 10, [&](Outcome& o) { connection(o); });
    run_item(r, "2 solvable rotation example: span(Y,Z) totally geodesic, complement not invariant", 1,
             [&](Outcome& o) { solvable_rotation(o); });
    run_item(r, "3 central subspaces and subalgebras orthogonal to [g,g] are totally geodesic", 10,
             [&](Outcome& o) { central(o); });
    run_item(r, "4 codimension-2 construction on L_n, n = 3..12", 5, [&](Outcome& o) { codim2(o); });
    run_item(r, "5 Vergne basis relations under random basis changes", 30, [&](Outcome& o) { vergne(o); });
    run_item(r, "6 numeric geodesic search converges", 0, [&](Outcome& o) { numeric(o); });
    run_item(r, "7 dim6 example: no totally geodesic subalgebra of dim 3 or 4 found", 120,
             [&](Outcome& o) { dim6(o); });
    run_item(r, "8 dimension bounds on L_n and codimension-2 metrics", 120, [&](Outcome& o) { bounds(o); });
    run_item(r, "9 4-dimensional normal form, geodesic cone and 2-dim subalgebras", 60,
             [&](Outcome& o) { four_dim(o); });
    run_item(r, "10 rescaling L_C to L_n preserves totally geodesic subalgebras", 30,
             [&](Outcome& o) { rescaling(o); });
    run_item(r, "11 -Killing metric on so(3): every vector is a geodesic", 5, [&](Outcome& o) { killing(o); });
    run_item(r, "13 codimension one in direct sums; geodesic metrics for single vectors", 10,
             [&](Outcome& o) { direct_sums(o); });
    run_item(r, "12 psi homomorphism and nilpotency; codimension-2 structure", 30,
             [&](Outcome& o) { found_properties(o); });
    std::stable_sort(r.items.begin(), r.items.end(), [](const ReportItem& a, const ReportItem& b) {
      return std::stoi(a.name) < std::stoi(b.name);
    });
    r.command = "verify-paper";
    r.note = std::string(full_ ? "full" : "quick") + " level, seed " + std::to_string(seed_) +
             "; searches give evidence, not proofs of nonexistence";
    r.exit_code = 0;
    for (const auto& it : r.items)
      if (it.verdict != "pass") r.exit_code = 1;
    return r;
  }

 private:
  std::size_t count(std::size_t full, std::size_t quick) const { return full_ ? full : quick; }
  Rng rng_for(std::uint64_t tag) const { return Rng(seed_ * 0x9e3779b97f4a7c15ULL + tag); }

  void run_item(Report& r, const std::string& name, double limit, const std::function<void(Outcome&)>& body) {
    ReportItem it;
    it.name = name;
    Outcome o;
    const auto t0 = clock_type::now();
    try {
      body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    it.elapsed = since(t0);
    if (full_ && limit > 0 && it.elapsed > limit)
      o.require(false, "took " + fmt(it.elapsed) + " s, limit " + fmt(limit) + " s");
    it.verdict = o.pass ? "pass" : "fail";
    it.detail = o.detail;
    it.values = std::move(o.values);
    it.witnesses = std::move(o.witnesses);
    r.items.push_back(std::move(it));
  }

  void keep(const MetricLieAlgebra& mg, const Subalgebra& h, const std::string& origin) {
    pool_.push_back({mg, h, origin});
  }

  void connection(Outcome& o) {
    const auto fixtures = all_fixtures();
    Rng rng = rng_for(1);
    const std::size_t pairs = count(200, 40);
    std::size_t identities = 0;
    for (std::size_t p = 0; p < pairs && o.pass; ++p) {
      const LieAlgebra& g = fixtures[p % fixtures.size()];
      const std::size_t n = g.dim();
      const MetricLieAlgebra mg(g, Metric(random_spd_gram(rng, n)));
      std::vector<Vector> probe = units(n);
      probe.push_back(nonzero_rational(rng, n));
      probe.push_back(nonzero_rational(rng, n));
      const std::size_t m = probe.size();
      std::vector<std::vector<Vector>> nab(m, std::vector<Vector>(m));
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) nab[i][j] = levi_civita(mg, probe[i], probe[j]);
      for (std::size_t i = 0; i < m && o.pass; ++i)
        for (std::size_t j = 0; j < m && o.pass; ++j) {
          o.require(nab[i][j] - nab[j][i] == g.bracket(probe[i], probe[j]), "torsion on " + g.name());
          ++identities;
          for (std::size_t k = 0; k < m && o.pass; ++k) {
            o.require(sgn(mg.metric.inner(nab[i][j], probe[k]) + mg.metric.inner(probe[j], nab[i][k])) == 0,
                      "metric compatibility on " + g.name());
            ++identities;
          }
        }
    }
    o.values["pairs"] = std::to_string(pairs);
    o.values["identities"] = std::to_string(identities);
  }

  void solvable_rotation(Outcome& o) {
    const MetricLieAlgebra mg(solv_rot());
    const Subalgebra h(mg.algebra, Subspace::coordinate(3, {2, 3}));
    const TGReport r = is_totally_geodesic(mg, h);
    o.require(r.totally_geodesic, "span(Y,Z) not totally geodesic");
    o.require(!r.complement_invariant, "complement unexpectedly invariant");
    o.require(!is_invariant_complement(mg, h), "invariance check disagrees");
    o.values["totally_geodesic"] = r.totally_geodesic ? "true" : "false";
    o.values["complement_invariant"] = r.complement_invariant ? "true" : "false";
    keep(mg, h, "solv_rot yz");
  }

  void central(Outcome& o) {
    Rng rng = rng_for(3);
    const std::size_t metrics = count(50, 10);
    std::size_t checks = 0;
    for (const auto& g : all_fixtures()) {
      const std::size_t n = g.dim();
      const Subspace z = center(g);
      const Subspace d = derived_algebra(g);
      for (std::size_t m = 0; m < metrics && o.pass; ++m) {
        const MetricLieAlgebra mg(g, Metric(random_spd_gram(rng, n)));
        std::vector<Subspace> cands;
        if (!z.is_zero() && !z.is_whole()) cands.push_back(z);
        if (!z.is_zero()) cands.push_back(Subspace::span(n, {combination(rng, z.basis_vectors(), n)}));
        const Subspace p = orthogonal_complement(mg.metric, d);
        if (!p.is_zero() && !(p.is_whole() && n == 1)) {
          const Subspace line = Subspace::span(n, {combination(rng, p.basis_vectors(), n)});
          if (!line.is_whole()) cands.push_back(line);
          if (!p.is_whole() && p.dim() > 1 && is_subalgebra(g, p)) cands.push_back(p);
        }
        for (const auto& w : cands) {
          const Subalgebra h(g, w);
          o.require(is_totally_geodesic(mg, h).totally_geodesic, "failed on " + g.name());
          ++checks;
          keep(mg, h, "central/orthogonal " + g.name());
        }
      }
    }
    o.values["checks"] = std::to_string(checks);
  }

  void codim2(Outcome& o) {
    for (std::size_t n = 3; n <= 12 && o.pass; ++n) {
      const Cd2f c = cd2f_construction(n);
      const MetricLieAlgebra mg(c.algebra, c.metric);
      o.require(c.h.dim() + 2 == n, "wrong codimension at n = " + std::to_string(n));
      o.require(is_totally_geodesic(mg, c.h).totally_geodesic, "not totally geodesic at n = " + std::to_string(n));
      o.require(cd2f_bracket_identity(c), "bracket identity fails at n = " + std::to_string(n));
      keep(mg, c.h, "codim-2 construction n=" + std::to_string(n));
    }
    o.values["n_range"] = "3..12";
  }

  void vergne(Outcome& o) {
    Rng rng = rng_for(5);
    const std::size_t changes = count(50, 10);
    std::size_t bases = 0;
    for (const auto& g : filiform_fixtures()) {
      const std::size_t n = g.dim();
      for (std::size_t c = 0; c <= changes && o.pass; ++c) {
        const LieAlgebra h = c == 0 ? g : change_basis(g, random_invertible(rng, n));
        const VergneBasis vb = vergne_basis(h);
        verify_vergne_relations(h, vb);
        ++bases;
        if (n % 2 == 1) o.require(sgn(vb.alpha) == 0, "alpha != 0 in odd dimension for " + g.name());
      }
    }
    const VergneBasis irr = vergne_basis(irreg6_example().algebra);
    o.require(irr.alpha == 1, "irreg6 alpha = " + to_string(irr.alpha));
    o.values["irreg6_alpha"] = to_string(irr.alpha);
    const VergneBasis d4 = vergne_basis(dim4_twisted());
    const std::vector<Vector> expected = {Vector::from_ints({1, 0, 0, 0}), Vector::from_ints({-1, 1, 0, 0}),
                                          Vector::from_ints({0, 0, 1, 0}), Vector::from_ints({0, 0, 0, 1})};
    o.require(d4.vectors == expected, "4-dim example basis differs");
    for (std::size_t i = 0; i < d4.vectors.size(); ++i)
      o.witnesses["dim4_basis"].push_back(to_string(d4.vectors[i]));
    o.values["bases_checked"] = std::to_string(bases);
  }

  void numeric(Outcome& o) {
    Rng rng = rng_for(6);
    std::vector<LieAlgebra> algebras;
    for (const auto& g : all_fixtures())
      if (g.dim() >= 3 && g.dim() <= 7) algebras.push_back(g);
    const std::size_t cases = count(100, 30);
    double worst = 0, worst_time = 0, worst_orth = 0;
    for (std::size_t i = 0; i < cases && o.pass; ++i) {
      const LieAlgebra& g = algebras[i % algebras.size()];
      const MetricLieAlgebra mg(g, Metric(random_spd_gram(rng, g.dim())));
      SearchBudget b;
      b.seed = seed_ + i;
      const auto t0 = clock_type::now();
      const NumericGeodesic ng = find_geodesic_numeric(mg, b);
      const double t = since(t0);
      worst = std::max(worst, ng.residual);
      worst_time = std::max(worst_time, t);
      worst_orth = std::max(worst_orth, ng.max_orthogonality_defect);
      o.require(ng.converged && ng.residual <= 1e-10, "no convergence on " + g.name() + ", residual " + fmt(ng.residual));
      o.require(t <= 1.0, "solve on " + g.name() + " took " + fmt(t) + " s");
      o.require(ng.max_orthogonality_defect <= 1e-12, "|<f(Y),Y>| = " + fmt(ng.max_orthogonality_defect));
      if (ng.rational && ng.exact_confirmed)
        o.require(sgn(mg.metric.inner(geodesic_defect(mg, *ng.rational), *ng.rational)) == 0, "rational probe");
    }
    o.values["cases"] = std::to_string(cases);
    o.values["worst_residual"] = fmt(worst);
    o.values["worst_seconds"] = fmt(worst_time);
    o.values["worst_orthogonality"] = fmt(worst_orth);
  }

  void dim6(Outcome& o) {
    Rng rng = rng_for(7);
    const std::size_t metrics = count(50, 8);
    SearchBudget b;
    b.max_candidates = count(10000, 2000);
    std::size_t candidates = 0;
    for (std::size_t m = 0; m < metrics && o.pass; ++m) {
      const MetricLieAlgebra mg(dim6_example(), Metric(random_spd_gram(rng, 6)));
      for (std::size_t k : {3, 4}) {
        b.seed = seed_ + 1000 * m + k;
        const SearchResult r = search_tg_subalgebras(mg, k, b);
        candidates += r.candidates;
        if (!r.found.empty()) {
          o.require(false, "found a totally geodesic subalgebra of dim " + std::to_string(k));
          for (const auto& v : r.found.front().space().basis_vectors()) o.witnesses["found"].push_back(to_string(v));
          for (std::size_t i = 0; i < 6; ++i) o.witnesses["gram"].push_back(to_string(mg.metric.gram().row(i)));
        }
      }
    }
    o.values["metrics"] = std::to_string(metrics);
    o.values["budget_per_search"] = std::to_string(b.max_candidates);
    o.values["candidates"] = std::to_string(candidates);
    if (o.pass)
      o.detail = "consistent with the dim-6 bound (no totally geodesic subalgebra of dim > 2); search evidence, not a proof";
  }

  void bounds(Outcome& o) {
    SearchBudget b;
    b.seed = seed_;
    b.max_candidates = count(10000, 1500);
    for (std::size_t n = 4; n <= 8 && o.pass; ++n) {
      const MetricLieAlgebra mg(standard_filiform(n));
      const DimensionAudit a = audit_dimension_bounds(mg, b);
      o.require(2 * a.max_dim_found <= n, "L_" + std::to_string(n) + " exceeds n/2");
      o.values["L" + std::to_string(n) + "_max_dim"] = std::to_string(a.max_dim_found);
      for (std::size_t i = 0; i < a.found.size(); ++i) keep(mg, a.found[i], "audit L_" + std::to_string(n));
    }
    // at n = 4 the subalgebra has dim n/2 and its complement may be invariant
    for (std::size_t n = 4; n <= 8 && o.pass; ++n) {
      const Cd2f c = cd2f_construction(n);
      const MetricLieAlgebra mg(c.algebra, c.metric);
      const DimensionAudit a = audit_dimension_bounds(mg, b);
      bool hit = false;
      for (std::size_t i = 0; i < a.found.size(); ++i) {
        keep(mg, a.found[i], "audit codim-2 metric n=" + std::to_string(n));
        if (a.found[i] == c.h) {
          hit = true;
          if (n == 4) o.values["codim2_n4_invariant"] = a.invariant[i] ? "true" : "false";
          else o.require(!a.invariant[i], "codim-2 subalgebra has invariant complement at n = " + std::to_string(n));
        }
      }
      o.require(hit, "codim-2 subalgebra not found at n = " + std::to_string(n));
      o.values["codim2_n" + std::to_string(n) + "_max_dim"] = std::to_string(a.max_dim_found);
    }
  }

  void four_dim(Outcome& o) {
    Rng rng = rng_for(9);
    const std::size_t fixtures = count(100, 20);
    const std::size_t samples = count(1000, 200);
    const LieAlgebra bases[] = {standard_filiform(4), dim4_twisted(), dim4_beta()};
    std::size_t geodesic_samples = 0, beta_zero = 0;
    SearchBudget b;
    b.max_candidates = 1000;
    for (std::size_t f = 0; f < fixtures && o.pass; ++f) {
      LieAlgebra g0 = bases[f % 3];
      Matrix gram0;
      const bool construct_beta_zero = f % 2 == 0;
      if (construct_beta_zero) {
        Scalar alpha = 0, gamma = 0;
        while (sgn(alpha) == 0) alpha = rng.rational(4, 3);
        while (sgn(gamma) == 0) gamma = rng.rational(4, 3);
        g0 = LieAlgebra::Builder(4, "beta0").add(1, 2, 3, alpha).add(1, 3, 4, gamma).build();
        Vector d(4);
        for (std::size_t i = 0; i < 4; ++i) {
          d[i] = Scalar(rng.uniform_int(1, 4), rng.uniform_int(1, 3));
          d[i].canonicalize();
        }
        gram0 = Matrix::diagonal(d);
      } else {
        gram0 = random_spd_gram(rng, 4);
      }
      const Matrix m = random_invertible(rng, 4);
      const MetricLieAlgebra mg(change_basis(g0, m), Metric(m * gram0 * m.transpose()));
      const FourDimNormalForm nf = normalize_4d(mg);
      o.require(sgn(nf.alpha) > 0 && sgn(nf.gamma) > 0, "alpha or gamma not positive");
      if (construct_beta_zero) o.require(sgn(nf.beta) == 0, "beta not zero on a beta = 0 fixture");
      for (std::size_t s = 0; s < samples && o.pass; ++s) {
        Vector a(4);
        switch (s % 4) {
          case 0:
            a = nonzero_rational(rng, 4);
            break;
          case 1: {
            // on the cone when solvable for z
            const Scalar x = rng.rational(4, 3), y = rng.rational(4, 3);
            const Scalar cz = nf.beta * nf.norms[3] * x + nf.gamma * nf.norms[3] * y;
            a[1] = x;
            a[2] = y;
            if (sgn(cz) != 0) a[3] = -nf.alpha * nf.norms[2] * x * y / cz;
            else a[3] = rng.rational(4, 3);
            break;
          }
          case 2:
            a[0] = rng.rational(4, 3);
            a[1] = rng.rational(4, 3);
            break;
          default:
            a[0] = rng.rational(4, 3);
            a[1] = rng.rational(4, 3);
            a[2 + s % 2] = rng.rational(4, 3);
        }
        if (a.is_zero()) a[1] = 1;
        Vector v(4);
        for (std::size_t i = 0; i < 4; ++i) v.add_scaled(a[i], nf.basis[i]);
        const bool predicted = geodesic_4d(nf, a);
        const bool exact = is_geodesic(mg, v).geodesic;
        geodesic_samples += exact;
        if (predicted != exact) {
          o.require(false, "cone predicate disagrees at " + to_string(a));
          o.witnesses["sample"] = to_strings(a);
        }
      }
      b.seed = seed_ + f;
      const SearchResult r = search_tg_subalgebras(mg, 2, b);
      std::set<Subspace> found;
      for (const auto& h : r.found) {
        found.insert(h.space());
        keep(mg, h, "4-dim fixture");
      }
      if (sgn(nf.beta) == 0) {
        ++beta_zero;
        std::set<Subspace> expected;
        for (const auto& h : tg_2d_subalgebras_4d(mg.algebra, nf)) {
          expected.insert(h.space());
          o.require(is_totally_geodesic(mg, h).totally_geodesic, "stated 2-dim subalgebra not totally geodesic");
        }
        o.require(expected.size() == 2, "expected two 2-dim subalgebras");
        o.require(found == expected, "search found " + std::to_string(found.size()) +
                                         " 2-dim subalgebras, different from the two stated ones");
      } else {
        o.require(found.empty(), "2-dim totally geodesic subalgebra with beta != 0");
      }
    }
    o.values["fixtures"] = std::to_string(fixtures);
    o.values["beta_zero_fixtures"] = std::to_string(beta_zero);
    o.values["samples_per_fixture"] = std::to_string(samples);
    o.values["geodesic_samples"] = std::to_string(geodesic_samples);
  }

  void rescaling(Outcome& o) {
    Rng rng = rng_for(10);
    const std::size_t lists = count(100, 25);
    SearchBudget b;
    b.max_candidates = 300;
    std::size_t mapped = 0;
    for (std::size_t l = 0; l < lists && o.pass; ++l) {
      const std::size_t n = 4 + l % 4;
      std::vector<Scalar> c;
      for (std::size_t i = 2; i < n; ++i) {
        Scalar x = 0;
        while (sgn(x) == 0) x = rng.rational(3, 3);
        c.push_back(x);
      }
      const MetricLieAlgebra lc(filiform_LC(c));
      const MetricLieAlgebra ln(standard_filiform(n));
      const Matrix phi = lc_rescaling_map(c);
      for (std::size_t k = 1; k < n && o.pass; ++k) {
        b.seed = seed_ + 100 * l + k;
        for (const auto& h : search_tg_subalgebras(lc, k, b).found) {
          const Subspace img = image_of(phi, h.space());
          o.require(img.dim() == k && is_subalgebra(ln.algebra, img), "image is not a subalgebra");
          if (!o.pass) break;
          const Subalgebra hi(ln.algebra, img);
          o.require(is_totally_geodesic(ln, hi).totally_geodesic, "image not totally geodesic");
          if (!o.pass) {
            for (const auto& v : h.space().basis_vectors()) o.witnesses["h"].push_back(to_string(v));
            for (const auto& x : c) o.witnesses["c"].push_back(to_string(x));
          }
          ++mapped;
          keep(ln, hi, "rescaled image");
        }
      }
    }
    o.require(mapped > 0, "no totally geodesic subalgebra found to map");
    o.values["lists"] = std::to_string(lists);
    o.values["mapped"] = std::to_string(mapped);
  }

  void killing(Outcome& o) {
    Rng rng = rng_for(11);
    const MetricLieAlgebra mg(so3(), killing_metric(so3()));
    const std::size_t samples = count(1000, 200);
    for (std::size_t s = 0; s < samples && o.pass; ++s) {
      const Vector v = nonzero_rational(rng, 3);
      o.require(is_geodesic(mg, v).geodesic, "not a geodesic: " + to_string(v));
    }
    o.values["samples"] = std::to_string(samples);
  }

  void direct_sums(Outcome& o) {
    Rng rng = rng_for(13);
    SearchBudget b;
    b.seed = seed_;
    b.max_candidates = 500;
    std::size_t sums = 0;
    for (const auto& g : {heis3(), standard_filiform(4), standard_filiform(5), heis6_2center(), dim6_example()}) {
      const std::size_t n = g.dim();
      const LieAlgebra d = direct_sum(g, LieAlgebra::abelian(1));
      Matrix gram(n + 1, n + 1);
      const Matrix block = random_spd_gram(rng, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) gram(r, c) = block(r, c);
      gram(n, n) = Scalar(rng.uniform_int(1, 5), rng.uniform_int(1, 3));
      gram(n, n).canonicalize();
      for (const Metric& metric : {Metric::standard(n + 1), Metric(gram)}) {
        const MetricLieAlgebra mg(d, metric);
        std::vector<std::size_t> first(n);
        for (std::size_t i = 0; i < n; ++i) first[i] = i + 1;
        const Subalgebra h(d, Subspace::coordinate(n + 1, first));
        o.require(is_totally_geodesic(mg, h).totally_geodesic, "first summand not totally geodesic for " + g.name());
        o.require(!search_tg_subalgebras(mg, n, b).found.empty(), "search missed codim 1 in " + g.name());
        keep(mg, h, "direct sum " + g.name());
        ++sums;
      }
    }
    std::size_t vectors = 0;
    for (const auto& g : nilpotent_fixtures()) {
      const std::size_t n = g.dim();
      std::vector<Vector> ys = units(n);
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) {
          ys.push_back(Vector::unit(n, i) + Vector::unit(n, j));
          ys.push_back(Vector::unit(n, i) - Vector::unit(n, j));
        }
      for (int r = 0; r < 10; ++r) ys.push_back(nonzero_rational(rng, n));
      for (const auto& y : ys) {
        const Metric m = construct_geodesic_metric(g, y);
        o.require(is_geodesic(MetricLieAlgebra(g, m), y).geodesic, "constructed metric fails on " + g.name());
        ++vectors;
      }
    }
    const LieAlgebra se = solv_exp();
    bool y_refused = false;
    try {
      construct_geodesic_metric(se, Vector::from_ints({0, 1, 0}));
    } catch (const NoGeodesicMetric& e) {
      y_refused = se.bracket(e.witness(), Vector::from_ints({0, 1, 0})) == Vector::from_ints({0, 1, 0});
      o.witnesses["solv_exp_witness"] = to_strings(e.witness());
    }
    o.require(y_refused, "solv_exp: Y accepted or witness wrong");
    const Metric mx = construct_geodesic_metric(se, Vector::from_ints({1, 0, 0}));
    o.require(is_geodesic(MetricLieAlgebra(se, mx), Vector::from_ints({1, 0, 0})).geodesic, "solv_exp: X refused");
    o.values["direct_sum_metrics"] = std::to_string(sums);
    o.values["geodesic_metric_vectors"] = std::to_string(vectors);
  }

  void found_properties(Outcome& o) {
    std::size_t codim2 = 0;
    for (const auto& f : pool_) {
      if (!o.pass) break;
      const FoundProperties p = verify_found_subalgebra_properties(f.mg, f.h);
      if (!p.ok()) {
        o.require(false, p.violations.front() + " (" + f.origin + ")");
        for (const auto& v : f.h.space().basis_vectors()) o.witnesses["h"].push_back(to_string(v));
      }
      codim2 += p.codim2;
    }
    const Irreg6 irr = irreg6_example();
    const FoundProperties p = verify_found_subalgebra_properties(MetricLieAlgebra(irr.algebra, irr.metric), irr.h);
    o.require(p.ok(), "irreg6 subalgebra reports a violation");
    o.require(!p.a_cap_h_in_center, "irreg6: a cap h inside z(h), expected not");
    for (const auto& v : p.a_cap_h.basis_vectors()) o.witnesses["irreg6_a_cap_h"].push_back(to_string(v));
    o.values["subalgebras_checked"] = std::to_string(pool_.size());
    o.values["codim2_checked"] = std::to_string(codim2);
  }

  bool full_;
  std::uint64_t seed_;
  std::vector<Found> pool_;
};

}  // namespace

Report run_acceptance(SuiteLevel level, std::uint64_t seed) { return Suite(level, seed).run(); }

}  // namespace liegeo::cli
