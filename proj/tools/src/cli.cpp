#include "liegeo_cli/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "liegeo/catalog.hpp"
#include "liegeo/random.hpp"
#include "liegeo/search.hpp"
#include "liegeo_cli/acceptance.hpp"

namespace liegeo::cli {

namespace {

using clock_type = std::chrono::steady_clock;

double since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

std::string decimal(double x, const char* fmt = "%.6e") {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, x);
  return buf;
}

std::string read_all(const std::string& path, std::istream& in) {
  std::ostringstream os;
  if (path == "-") {
    os << in.rdbuf();
    return os.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot open " + path);
  os << f.rdbuf();
  return os.str();
}

AlgebraFile load(const std::string& path, std::istream& in) { return parse_algebra_file(read_all(path, in)); }

void require_jacobi(const LieAlgebra& g) {
  const auto v = verify_jacobi(g);
  if (!v.holds) {
    const auto& t = *v.triple;
    throw InvalidArgument("Jacobi identity fails for (" + std::to_string(t[0]) + ", " + std::to_string(t[1]) + ", " +
                          std::to_string(t[2]) + "), residual " + to_string(v.residual));
  }
}

std::vector<std::string> rows_of(const Subspace& w) {
  std::vector<std::string> out;
  for (const auto& v : w.basis_vectors()) out.push_back(to_string(v));
  return out;
}

ReportItem item(std::string name, bool pass, std::string detail = {}) {
  ReportItem it;
  it.name = std::move(name);
  it.verdict = pass ? "pass" : "fail";
  it.detail = std::move(detail);
  return it;
}

Subspace even_span(std::size_t n) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 2; i <= n; i += 2) idx.push_back(i);
  return Subspace::coordinate(n, idx);
}

NamedSubspace named(std::string name, const Subspace& w) { return {std::move(name), w.basis_vectors()}; }

struct Options {
  bool json = false;
  std::string file = "-";
  std::string subalgebra;
  bool invariance = false;
  std::string vector;
  bool numeric = false;
  std::uint64_t seed = 0;
  bool seed_given = false;
  double tol = 1e-10;
  std::string catalog_name;
  std::vector<std::string> catalog_params;
  std::string output;
  std::size_t dim = 0;
  std::size_t budget = 10000;
  std::string level = "quick";
};

Report cmd_check(const Options& o, std::istream& in) {
  const AlgebraFile f = load(o.file, in);
  const LieAlgebra& g = f.algebra;
  Report r;
  const auto jac = verify_jacobi(g);
  ReportItem j = item("jacobi", jac.holds);
  if (!jac.holds) {
    const auto& t = *jac.triple;
    j.witnesses["triple"] = {std::to_string(t[0]), std::to_string(t[1]), std::to_string(t[2])};
    j.witnesses["residual"] = to_strings(jac.residual);
    r.items.push_back(std::move(j));
    return r;
  }
  r.items.push_back(std::move(j));
  const auto nil = is_nilpotent(g);
  ReportItem ni = item("nilpotent", true);
  ni.verdict = "info";
  ni.values["nilpotent"] = nil.nilpotent ? "true" : "false";
  if (nil.nilpotent) ni.values["class"] = std::to_string(nil.nilpotency_class);
  r.items.push_back(std::move(ni));
  ReportItem se = item("lower central series", true);
  se.verdict = "info";
  std::vector<std::string> dims;
  for (const auto& s : lower_central_series(g)) dims.push_back(std::to_string(s.dim()));
  se.witnesses["dims"] = dims;
  se.values["derived_dim"] = std::to_string(derived_algebra(g).dim());
  se.values["center_dim"] = std::to_string(center(g).dim());
  if (nil.nilpotent && g.dim() >= 3) se.values["filiform"] = is_filiform(g).filiform ? "true" : "false";
  r.items.push_back(std::move(se));
  return r;
}

Subspace pick_subspace(const AlgebraFile& f, const std::string& text) {
  if (auto w = f.find_subspace(text)) return *w;
  if (text.find_first_of(",;") == std::string::npos && !is_rational_string(text))
    throw InvalidArgument("unknown subalgebra \"" + text + "\"");
  return Subspace::span(f.algebra.dim(), parse_inline_basis(text, f.algebra.dim()));
}

Report cmd_tg(const Options& o, std::istream& in) {
  const AlgebraFile f = load(o.file, in);
  require_jacobi(f.algebra);
  const MetricLieAlgebra mg = f.metric_algebra();
  const Subspace w = pick_subspace(f, o.subalgebra);
  if (w.is_zero() || w.is_whole()) throw InvalidArgument("subalgebra must be proper and nonzero");
  if (!is_subalgebra(f.algebra, w)) throw InvalidArgument("subspace is not closed under the bracket");
  const Subalgebra h(f.algebra, w);
  const TGReport tg = is_totally_geodesic(mg, h);
  Report r;
  ReportItem it = item("totally geodesic", tg.totally_geodesic);
  it.witnesses["basis"] = rows_of(w);
  if (tg.witness) {
    it.witnesses["x"] = to_strings(tg.witness->x);
    it.witnesses["y"] = to_strings(tg.witness->y);
    it.witnesses["z"] = to_strings(tg.witness->z);
    it.witnesses["indices"] = {std::to_string(tg.witness->indices[0]), std::to_string(tg.witness->indices[1]),
                               std::to_string(tg.witness->indices[2])};
    it.values["value"] = to_string(tg.witness->value);
  }
  r.items.push_back(std::move(it));
  if (o.invariance) {
    ReportItem inv = item("complement invariant", true);
    inv.verdict = "info";
    inv.values["invariant"] = is_invariant_complement(mg, h) ? "true" : "false";
    r.items.push_back(std::move(inv));
  }
  return r;
}

Report cmd_geodesics(const Options& o, std::istream& in) {
  const AlgebraFile f = load(o.file, in);
  require_jacobi(f.algebra);
  const MetricLieAlgebra mg = f.metric_algebra();
  Report r;
  if (!o.vector.empty()) {
    const auto vs = parse_inline_basis(o.vector, mg.dim());
    if (vs.size() != 1) throw InvalidArgument("--vector takes a single vector");
    const GeodesicReport g = is_geodesic(mg, vs[0]);
    ReportItem it = item("geodesic", g.geodesic);
    it.witnesses["vector"] = to_strings(vs[0]);
    it.witnesses["defect"] = to_strings(g.defect);
    it.values["residual_norm_sq"] = to_string(g.residual_norm_sq);
    r.items.push_back(std::move(it));
    return r;
  }
  if (!o.numeric) throw InvalidArgument("geodesics: pass --vector or --numeric");
  SearchBudget b;
  b.seed = o.seed;
  b.tolerance = o.tol;
  const NumericGeodesic ng = find_geodesic_numeric(mg, b);
  ReportItem it = item("numeric geodesic", ng.converged);
  std::vector<std::string> unit;
  for (double x : ng.unit_vector) unit.push_back(decimal(x, "%.15g"));
  it.witnesses["unit_vector"] = unit;
  it.values["residual"] = decimal(ng.residual);
  it.values["starts"] = std::to_string(ng.starts_used);
  it.values["max_orthogonality_defect"] = decimal(ng.max_orthogonality_defect);
  it.values["exact_confirmed"] = ng.exact_confirmed ? "true" : "false";
  if (ng.rational) it.witnesses["rational"] = to_strings(*ng.rational);
  r.items.push_back(std::move(it));
  r.note = ng.exact_confirmed ? "rational reconstruction confirmed exactly" : "numeric result; not confirmed exactly";
  return r;
}

Report cmd_vergne(const Options& o, std::istream& in) {
  const AlgebraFile f = load(o.file, in);
  require_jacobi(f.algebra);
  const LieAlgebra& g = f.algebra;
  if (g.dim() < 3 || !is_nilpotent(g).nilpotent || !is_filiform(g).filiform)
    throw InvalidArgument("vergne: algebra is not filiform");
  const RegularityReport reg = regularity_report(g, o.seed);
  verify_vergne_relations(g, reg.computed);
  Report r;
  ReportItem it = item("vergne basis", true);
  for (std::size_t i = 0; i < reg.computed.vectors.size(); ++i)
    it.witnesses["X" + std::to_string(i + 1)] = to_strings(reg.computed.vectors[i]);
  it.values["alpha"] = to_string(reg.computed.alpha);
  r.items.push_back(std::move(it));
  ReportItem rg = item("regularity", true);
  rg.verdict = "info";
  rg.values["regular_basis_found"] = reg.regular_basis_found ? "true" : "false";
  rg.values["attempts"] = std::to_string(reg.attempts);
  rg.detail = reg.verdict;
  if (reg.regular_basis)
    for (std::size_t i = 0; i < reg.regular_basis->vectors.size(); ++i)
      rg.witnesses["X" + std::to_string(i + 1)] = to_strings(reg.regular_basis->vectors[i]);
  r.items.push_back(std::move(rg));
  return r;
}

Report cmd_search(const Options& o, std::istream& in) {
  const AlgebraFile f = load(o.file, in);
  require_jacobi(f.algebra);
  const MetricLieAlgebra mg = f.metric_algebra();
  SearchBudget b;
  b.seed = o.seed;
  b.max_candidates = o.budget;
  const SearchResult s = search_tg_subalgebras(mg, o.dim, b);
  Report r;
  for (std::size_t i = 0; i < s.found.size(); ++i) {
    ReportItem it = item("subalgebra " + std::to_string(i + 1), true);
    it.witnesses["basis"] = rows_of(s.found[i].space());
    it.values["complement_invariant"] = is_invariant_complement(mg, s.found[i]) ? "true" : "false";
    r.items.push_back(std::move(it));
  }
  ReportItem sum = item("search", true);
  sum.verdict = "info";
  sum.values["found"] = std::to_string(s.found.size());
  sum.values["candidates"] = std::to_string(s.candidates);
  sum.values["found_coordinate"] = std::to_string(s.found_coordinate);
  sum.values["found_pencil"] = std::to_string(s.found_pencil);
  sum.values["found_random"] = std::to_string(s.found_random);
  sum.values["dim"] = std::to_string(o.dim);
  r.items.push_back(std::move(sum));
  r.note = s.note;
  return r;
}

int exit_for(const Report& r) {
  for (const auto& it : r.items)
    if (it.verdict == "fail") return kFail;
  return kOk;
}

}  // namespace

AlgebraFile catalog_file(const std::string& name, const std::vector<std::string>& params) {
  AlgebraFile f;
  if (name == "cd2f") {
    const std::size_t n = catalog_algebra(name, params).dim();
    Cd2f c = cd2f_construction(n);
    f.algebra = c.algebra.renamed("cd2f" + std::to_string(n));
    f.metric = c.metric;
    f.subalgebras.push_back(named("h", c.h.space()));
    return f;
  }
  if (name == "irreg6") {
    Irreg6 e = irreg6_example();
    f.algebra = e.algebra;
    f.metric = e.metric;
    f.subalgebras.push_back(named("h", e.h.space()));
    return f;
  }
  f.algebra = catalog_algebra(name, params);
  const std::size_t n = f.algebra.dim();
  if (name == "Ln") {
    f.subalgebras.push_back(named("even", even_span(n)));
    f.subalgebras.push_back(named("center", center(f.algebra)));
  } else if (name == "heis3") {
    f.subalgebras.push_back(named("center", center(f.algebra)));
  } else if (name == "solv_rot") {
    f.subalgebras.push_back(named("yz", Subspace::coordinate(3, {2, 3})));
  }
  return f;
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations with metric Lie algebras", "liegeo"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Machine-readable JSON output");

  auto* check = app.add_subcommand("check", "Jacobi identity, nilpotency and central series");
  check->add_option("file", o.file, "Algebra file, - for stdin")->required();

  auto* tg = app.add_subcommand("tg", "Totally geodesic test for a subalgebra");
  tg->add_option("file", o.file, "Algebra file, - for stdin")->required();
  tg->add_option("--subalgebra", o.subalgebra, "Name from the file or inline rows \"1,0,0;0,1,0\"")->required();
  tg->add_flag("--invariance", o.invariance, "Also report whether the complement is invariant");

  auto* geo = app.add_subcommand("geodesics", "Exact geodesic test or numeric geodesic search");
  geo->add_option("file", o.file, "Algebra file, - for stdin")->required();
  auto* vec_opt = geo->add_option("--vector", o.vector, "Vector as \"a,b,c\"");
  auto* num_opt = geo->add_flag("--numeric", o.numeric, "Multi-start numeric search");
  vec_opt->excludes(num_opt);
  geo->add_option("--seed", o.seed, "Seed for the numeric search");
  geo->add_option("--tol", o.tol, "Residual tolerance")->check(CLI::PositiveNumber);

  auto* vg = app.add_subcommand("vergne", "Vergne basis and regularity report");
  vg->add_option("file", o.file, "Algebra file, - for stdin")->required();
  vg->add_option("--seed", o.seed, "Seed for the regularity search");

  auto* cat = app.add_subcommand("catalog", "Write a catalog algebra file");
  cat->add_option("name", o.catalog_name, "Catalog entry")->required();
  cat->add_option("params", o.catalog_params, "Numeric parameters");
  cat->add_option("-o,--output", o.output, "Output path (default stdout)");

  auto* st = app.add_subcommand("search-tg", "Search for totally geodesic subalgebras");
  st->add_option("file", o.file, "Algebra file, - for stdin")->required();
  st->add_option("--dim", o.dim, "Subalgebra dimension")->required()->check(CLI::PositiveNumber);
  st->add_option("--seed", o.seed, "Seed");
  st->add_option("--budget", o.budget, "Candidate budget")->check(CLI::PositiveNumber);

  auto* vp = app.add_subcommand("verify-paper", "Run the acceptance suite");
  vp->add_option("--level", o.level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  vp->add_option("--seed", o.seed, "Seed");

  for (auto* sub : {geo, vg, st, vp}) sub->get_option("--seed")->each([&](const std::string&) { o.seed_given = true; });

  std::string command;
  const auto t0 = clock_type::now();
  auto emit_error = [&](int code, const std::string& msg) {
    err << "error: " << msg << "\n";
    if (o.json) {
      Report r;
      r.command = command;
      r.items.push_back(item("error", false, msg));
      r.exit_code = code;
      r.elapsed = since(t0);
      out << emit_report(r, ReportFormat::json);
    }
    return code;
  };

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(std::move(rev));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  command = app.get_subcommands().front()->get_name();
  if (!o.seed_given) o.seed = default_seed();

  try {
    if (command == "catalog") {
      const std::string text = emit_algebra_file(catalog_file(o.catalog_name, o.catalog_params));
      if (o.output.empty() || o.output == "-") {
        out << text;
      } else {
        std::ofstream f(o.output, std::ios::binary);
        if (!f || !(f << text)) throw InvalidArgument("cannot write " + o.output);
      }
      return kOk;
    }
    Report r;
    if (command == "check") r = cmd_check(o, in);
    else if (command == "tg") r = cmd_tg(o, in);
    else if (command == "geodesics") r = cmd_geodesics(o, in);
    else if (command == "vergne") r = cmd_vergne(o, in);
    else if (command == "search-tg") r = cmd_search(o, in);
    else r = run_acceptance(o.level == "full" ? SuiteLevel::full : SuiteLevel::quick, o.seed);
    r.command = command;
    r.exit_code = exit_for(r);
    r.elapsed = since(t0);
    out << emit_report(r, o.json ? ReportFormat::json : ReportFormat::human);
    return r.exit_code;
  } catch (const PropertyViolation& e) {
    return emit_error(kFail, std::string(e.what()) + "; witness " + e.witness());
  } catch (const InvalidArgument& e) {
    return emit_error(kInputError, e.what());
  } catch (const InternalInvariantError& e) {
    return emit_error(kInternalError, std::string("internal invariant violated: ") + e.what());
  }
}

}  // namespace liegeo::cli
