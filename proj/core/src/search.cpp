#include "liegeo/search.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "liegeo/errors.hpp"
#include "liegeo/random.hpp"

namespace liegeo {

namespace {

bool filiform_nilpotent(const LieAlgebra& g) {
  return g.dim() >= 3 && is_nilpotent(g).nilpotent && is_filiform(g).filiform;
}

// The algebra and metric rewritten in an adapted orthogonal basis E, with
// the structure constants unpacked for the pencil strategy.
struct AdaptedFrame {
  std::size_t n;
  Matrix e;  // rows E_1..E_n
  std::vector<Scalar> norms;
  MetricLieAlgebra mge;
  // c[i][u][v]: E_v coefficient of [E_i, E_u], 0-based
  std::vector<std::vector<std::vector<Scalar>>> c;

  AdaptedFrame(const MetricLieAlgebra& mg, const std::vector<Vector>& basis)
      : n(mg.dim()),
        e(Matrix::from_rows(basis, mg.dim())),
        norms(norm_list(mg, basis)),
        mge(change_basis(mg.algebra, e), Metric(Matrix::diagonal(Vector(norms)))) {
    c.assign(n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t u = 0; u < n; ++u) {
        if (i == u) continue;
        const Vector b = mge.algebra.basis_bracket(i + 1, u + 1);
        for (std::size_t v = 0; v < n; ++v) c[i][u][v] = b[v];
      }
  }

  static std::vector<Scalar> norm_list(const MetricLieAlgebra& mg, const std::vector<Vector>& basis) {
    std::vector<Scalar> out;
    for (const auto& v : basis) out.push_back(mg.metric.norm_sq(v));
    return out;
  }

  // <[E_i, E_u], E_v>
  Scalar b(std::size_t i, std::size_t u, std::size_t v) const { return c[i][u][v] * norms[v]; }
  Scalar s(std::size_t i, std::size_t u, std::size_t v) const { return b(i, u, v) + b(i, v, u); }

  Subspace to_original(const Subspace& w) const {
    std::vector<Vector> rows;
    for (const auto& r : w.basis_vectors()) rows.push_back(left_multiply(r, e));
    return Subspace::span(n, rows);
  }
};

// Values of b != 0 allowed by one constraint; nullopt means unconstrained.
using ValueSet = std::optional<std::vector<Scalar>>;

ValueSet linear_values(const Scalar& c0, const Scalar& c1) {
  if (sgn(c1) != 0) {
    Scalar r = -c0 / c1;
    if (sgn(r) == 0) return std::vector<Scalar>{};
    return std::vector<Scalar>{r};
  }
  if (sgn(c0) == 0) return std::nullopt;
  return std::vector<Scalar>{};
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  mpq_class r(sqrt(num), sqrt(den));
  r.canonicalize();
  return r;
}

ValueSet quadratic_values(const Scalar& q0, const Scalar& q1, const Scalar& q2) {
  if (sgn(q2) == 0) return linear_values(q0, q1);
  std::vector<Scalar> out;
  const auto root = rational_sqrt(q1 * q1 - 4 * q0 * q2);
  if (!root) return out;
  for (int sign : {1, -1}) {
    Scalar r = (-q1 + sign * *root) / (2 * q2);
    r.canonicalize();
    if (sgn(r) != 0 && std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  }
  return out;
}

void intersect_into(ValueSet& acc, const ValueSet& next) {
  if (!next) return;
  if (!acc) {
    acc = next;
    return;
  }
  std::vector<Scalar> kept;
  for (const auto& v : *acc)
    if (std::find(next->begin(), next->end(), v) != next->end()) kept.push_back(v);
  acc = kept;
}

// Lexicographic k-subsets of {0..n-1}.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t pos = k; pos-- > 0;) {
    if (idx[pos] < n - k + pos) {
      ++idx[pos];
      for (std::size_t q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  return idx;
}

class Searcher {
 public:
  Searcher(const MetricLieAlgebra& mg, std::size_t k, const SearchBudget& budget)
      : mg_(mg), k_(k), budget_(budget), frame_(mg, adapted_orthogonal_basis(mg)) {}

  SearchResult run() {
    coordinate();
    pencil();
    random();
    SearchResult out;
    for (const auto& w : found_) out.found.emplace_back(mg_.algebra, w);
    out.candidates = used_;
    out.found_coordinate = per_strategy_[0];
    out.found_pencil = per_strategy_[1];
    out.found_random = per_strategy_[2];
    out.budget_exhausted = used_ >= budget_.max_candidates;
    out.note = "search evidence only; an empty result does not prove nonexistence";
    return out;
  }

 private:
  bool spend() {
    if (used_ >= budget_.max_candidates) return false;
    ++used_;
    return true;
  }

  // w in E-coordinates, already known to have dimension k.
  void consider(const Subspace& w, int strategy) {
    if (!is_subalgebra(frame_.mge.algebra, w)) return;
    if (!totally_geodesic_fast(frame_.mge, w)) return;
    Subspace orig = frame_.to_original(w);
    if (found_.count(orig)) return;
    const Subalgebra h(mg_.algebra, orig);
    if (!is_totally_geodesic(mg_, h).totally_geodesic)
      throw InternalInvariantError("search: candidate lost the totally geodesic property in the defining basis");
    found_.insert(std::move(orig));
    ++per_strategy_[strategy];
  }

  void coordinate() {
    const std::size_t n = frame_.n;
    auto idx = first_combination(k_);
    do {
      if (!spend()) return;
      std::vector<std::size_t> one_based;
      for (auto i : idx) one_based.push_back(i + 1);
      consider(Subspace::coordinate(n, one_based), 0);
    } while (next_combination(idx, n));
  }

  void pencil() {
    const std::size_t n = frame_.n;
    for (std::size_t psize = 1; psize <= k_; ++psize) {
      auto sidx = first_combination(k_);
      do {
        std::vector<bool> in_s(n, false);
        for (auto s : sidx) in_s[s] = true;
        for (std::size_t m = 0; m < n; ++m) {
          if (in_s[m]) continue;
          std::vector<std::size_t> below;
          for (auto s : sidx)
            if (s < m) below.push_back(s);
          if (below.size() < psize) continue;
          auto pidx = first_combination(psize);
          do {
            std::vector<std::size_t> p;
            for (auto q : pidx) p.push_back(below[q]);
            if (!pencil_case(sidx, m, p)) return;
          } while (next_combination(pidx, below.size()));
        }
      } while (next_combination(sidx, n));
    }
  }

  // false once the budget is exhausted
  bool pencil_case(const std::vector<std::size_t>& sidx, std::size_t m, const std::vector<std::size_t>& p) {
    const std::size_t n = frame_.n;
    std::vector<bool> in_p(n, false), outside(n, true);
    for (auto q : p) in_p[q] = true;
    for (auto s : sidx) outside[s] = false;
    outside[m] = false;
    std::vector<std::size_t> fixed;
    for (auto s : sidx)
      if (!in_p[s]) fixed.push_back(s);

    if (!spend()) return false;
    std::vector<ValueSet> values(p.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (!outside[i]) continue;
      for (std::size_t a = 0; a < fixed.size(); ++a)
        for (std::size_t b = a; b < fixed.size(); ++b)
          if (sgn(frame_.s(i, fixed[a], fixed[b])) != 0) return true;
      for (std::size_t q = 0; q < p.size(); ++q) {
        for (auto s : fixed) intersect_into(values[q], linear_values(frame_.s(i, p[q], s), frame_.s(i, m, s)));
        intersect_into(values[q],
                       quadratic_values(frame_.b(i, p[q], p[q]), frame_.s(i, p[q], m), frame_.b(i, m, m)));
        if (values[q] && values[q]->empty()) return true;
      }
    }
    std::vector<std::vector<Scalar>> choices;
    for (auto& v : values) choices.push_back(v ? *v : std::vector<Scalar>{1, -1});

    std::vector<std::size_t> pick(p.size(), 0);
    bool first = true;
    while (true) {
      if (!first && !spend()) return false;
      first = false;
      std::vector<Vector> rows;
      for (auto s : fixed) rows.push_back(Vector::unit(n, s + 1));
      for (std::size_t q = 0; q < p.size(); ++q) {
        Vector y = Vector::unit(n, p[q] + 1);
        y[m] = choices[q][pick[q]];
        rows.push_back(std::move(y));
      }
      consider(Subspace::span(n, rows), 1);
      std::size_t pos = 0;
      while (pos < p.size() && ++pick[pos] == choices[pos].size()) pick[pos++] = 0;
      if (pos == p.size()) return true;
    }
  }

  void random() {
    const std::size_t n = frame_.n;
    Rng rng(budget_.seed ^ (0x5851f42d4c957f2dULL * (k_ + 1)));
    static const int coeffs[] = {1, -1, 2, -2};
    while (spend()) {
      const std::size_t gens = (k_ >= 2 && rng.uniform_int(0, 1) == 0) ? k_ - 1 : k_;
      std::vector<Vector> frame;
      for (std::size_t g = 0; g < gens; ++g) {
        Vector v(n);
        const auto nnz = static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(std::min<std::size_t>(3, n))));
        for (std::size_t t = 0; t < nnz; ++t) {
          const auto pos = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(n) - 1));
          v[pos] = coeffs[rng.uniform_int(0, 3)];
        }
        frame.push_back(std::move(v));
      }
      const auto w = generated_subalgebra_capped(frame_.mge.algebra, frame, k_);
      if (!w || w->dim() != k_) continue;
      if (!totally_geodesic_fast(frame_.mge, *w)) continue;
      consider(*w, 2);
    }
  }

  const MetricLieAlgebra& mg_;
  std::size_t k_;
  SearchBudget budget_;
  AdaptedFrame frame_;
  std::set<Subspace> found_;
  std::size_t used_ = 0;
  std::size_t per_strategy_[3] = {0, 0, 0};
};

std::string describe(const Subspace& w) {
  std::ostringstream os;
  os << "{";
  for (std::size_t r = 0; r < w.dim(); ++r) os << (r ? ", " : "") << to_string(w.basis_vector(r));
  os << "}";
  return os.str();
}

bool nilpotent_matrix(const Matrix& m) {
  if (m.rows() == 0) return true;
  return power(m, static_cast<unsigned>(m.rows())).is_zero();
}

}  // namespace

std::vector<Vector> adapted_orthogonal_basis(const MetricLieAlgebra& mg) {
  const std::size_t n = mg.dim();
  std::vector<Vector> basis;
  if (filiform_nilpotent(mg.algebra)) {
    basis = vergne_basis(mg.algebra).vectors;
  } else {
    for (std::size_t i = 1; i <= n; ++i) basis.push_back(Vector::unit(n, i));
  }
  return gram_schmidt_adapted(mg.metric, basis);
}

SearchResult search_tg_subalgebras(const MetricLieAlgebra& mg, std::size_t k, const SearchBudget& budget) {
  if (k < 1 || k >= mg.dim())
    throw InvalidArgument("search_tg_subalgebras: need 1 <= k < dim, got k = " + std::to_string(k));
  if (budget.max_candidates == 0) throw InvalidArgument("search_tg_subalgebras: empty budget");
  return Searcher(mg, k, budget).run();
}

MaxNilpotencyProbe contains_maximal_nilpotency(const LieAlgebra& g, const Subspace& w) {
  MaxNilpotencyProbe out;
  const auto b = w.basis_vectors();
  if (b.empty()) return out;
  const std::size_t d = b.size();
  for (std::size_t t = 1; t <= 2 * d - 1; ++t) {
    Vector x(g.dim());
    Scalar pw = 1;
    for (const auto& v : b) {
      x.add_scaled(pw, v);
      pw *= static_cast<long>(t);
    }
    if (has_maximal_nilpotency_rank(g, x)) {
      out.found = true;
      out.element = std::move(x);
      return out;
    }
  }
  return out;
}

FoundProperties verify_found_subalgebra_properties(const MetricLieAlgebra& mg, const Subalgebra& h) {
  const LieAlgebra& g = mg.algebra;
  if (!totally_geodesic_fast(mg, h.space()))
    throw InvalidArgument("verify_found_subalgebra_properties: subalgebra is not totally geodesic");
  FoundProperties out;
  out.totally_geodesic = true;
  out.complement_invariant = is_invariant_complement(mg, h);
  const Subspace perp = orthogonal_complement(mg.metric, h.space());
  const bool nilpotent = is_nilpotent(g).nilpotent;
  const auto hb = h.space().basis_vectors();

  for (std::size_t a = 0; a < hb.size(); ++a) {
    const Matrix pa = psi_map(mg, h, hb[a]);
    for (std::size_t b = a + 1; b < hb.size(); ++b) {
      const Matrix pb = psi_map(mg, h, hb[b]);
      if (psi_map(mg, h, g.bracket(hb[a], hb[b])) != pa * pb - pb * pa) out.psi_homomorphism = false;
    }
  }
  if (!out.psi_homomorphism) out.violations.push_back("psi is not a homomorphism");

  if (nilpotent) {
    std::vector<Vector> samples = hb;
    for (std::size_t t = 2; t <= 2 * hb.size(); ++t) {
      Vector x(g.dim());
      Scalar pw = 1;
      for (const auto& v : hb) {
        x.add_scaled(pw, v);
        pw *= static_cast<long>(t);
      }
      samples.push_back(std::move(x));
    }
    for (const auto& y : samples)
      if (!nilpotent_matrix(psi_map(mg, h, y))) out.psi_nilpotent = false;
    if (!out.psi_nilpotent) out.violations.push_back("psi(y) is not nilpotent");

    const Subspace z = h.own_center();
    const Subspace a = generated_subalgebra(g, perp.basis_vectors()).space();
    out.a_cap_h = a.intersect(h.space());
    out.a_cap_h_in_center = z.contains(out.a_cap_h);
    out.codim2 = perp.dim() == 2;
    if (out.codim2) {
      const Vector zz = g.bracket(perp.basis_vector(0), perp.basis_vector(1));
      out.z_bracket_in_h = h.space().contains(zz);
      out.z_bracket_in_center = z.contains(zz);
      if (!out.z_bracket_in_h) out.violations.push_back("[Z1, Z2] not in h");
      if (!out.z_bracket_in_center) out.violations.push_back("[Z1, Z2] not in z(h)");
      if (!out.a_cap_h_in_center) out.violations.push_back("a cap h not in z(h)");
    }
  }

  if (nilpotent && filiform_nilpotent(g)) {
    out.contains_max_nilpotent = contains_maximal_nilpotency(g, h.space()).found;
    out.complement_contains_max_nilpotent = contains_maximal_nilpotency(g, perp).found;
    out.dim_bound_applies = out.complement_invariant && out.complement_contains_max_nilpotent;
    if (out.dim_bound_applies) {
      out.dim_bound_holds = 2 * h.dim() <= g.dim();
      if (!out.dim_bound_holds) out.violations.push_back("dim h > n/2 with invariant complement of maximal nilpotency");
    }
  }
  return out;
}

DimensionAudit audit_dimension_bounds(const MetricLieAlgebra& mg, const SearchBudget& budget) {
  const LieAlgebra& g = mg.algebra;
  if (!filiform_nilpotent(g)) throw InvalidArgument("audit_dimension_bounds: algebra is not filiform");
  const std::size_t n = g.dim();
  const bool standard_ln = mg.metric.is_standard() && g == standard_filiform(n).renamed(g.name());
  DimensionAudit out;
  out.n = n;
  out.found_per_dim.assign(n, 0);
  for (std::size_t k = 1; k < n; ++k) {
    SearchResult r = search_tg_subalgebras(mg, k, budget);
    out.candidates += r.candidates;
    out.found_per_dim[k] = r.found.size();
    for (auto& h : r.found) {
      const bool inv = is_invariant_complement(mg, h);
      const std::string witness = describe(h.space());
      if (inv && 2 * k > n)
        throw PropertyViolation("invariant complement with dim h > n/2", witness);
      if (standard_ln && 2 * k > n)
        throw PropertyViolation("standard filiform metric with dim h > n/2", witness);
      if (k == n - 1) {
        const Subspace perp = orthogonal_complement(mg.metric, h.space());
        if (!is_ideal(g, h.space()) || !center(g).contains(perp))
          throw PropertyViolation("codimension-one totally geodesic subalgebra is not a direct summand", witness);
      }
      if (k + 2 == n && n >= 3 && !is_standard_filiform(g))
        throw PropertyViolation("codimension-two totally geodesic subalgebra in a non-standard filiform algebra",
                                witness);
      if (k >= 2 && contains_maximal_nilpotency(g, h.space()).found)
        throw PropertyViolation("totally geodesic subalgebra of dim >= 2 contains a maximal-nilpotency element",
                                witness);
      out.max_dim_found = std::max(out.max_dim_found, k);
      out.any_invariant_complement = out.any_invariant_complement || inv;
      out.invariant.push_back(inv);
      out.found.push_back(std::move(h));
    }
  }
  out.note = "bounds checked on found subalgebras only; the search is not exhaustive";
  return out;
}

}  // namespace liegeo
