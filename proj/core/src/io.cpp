#include "liegeo/io.hpp"

#include <cstdio>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

namespace liegeo {

using nlohmann::json;

namespace {

std::string at(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }
std::string field(const std::string& base, const std::string& key) { return base.empty() ? key : base + "." + key; }

std::size_t index_in_range(const json& v, const std::string& path, std::size_t dim) {
  if (!v.is_number_integer()) throw ParseError(path, "expected an integer");
  const auto i = v.get<long long>();
  if (i < 1 || static_cast<std::size_t>(i) > dim)
    throw ParseError(path, "index " + std::to_string(i) + " out of range 1.." + std::to_string(dim));
  return static_cast<std::size_t>(i);
}

Scalar rational_field(const json& v, const std::string& path) {
  if (!v.is_string()) throw ParseError(path, "expected a rational string");
  const auto& s = v.get_ref<const std::string&>();
  if (!is_rational_string(s)) throw ParseError(path, "malformed rational \"" + s + "\"");
  return parse_scalar(s);
}

Vector vector_field(const json& v, const std::string& path, std::size_t dim) {
  if (!v.is_array()) throw ParseError(path, "expected an array");
  if (v.size() != dim) throw ParseError(path, "expected " + std::to_string(dim) + " entries");
  Vector out(dim);
  for (std::size_t i = 0; i < dim; ++i) out[i] = rational_field(v[i], at(path, i));
  return out;
}

void only_keys(const json& obj, const std::string& path, std::initializer_list<const char*> keys) {
  for (const auto& [k, _] : obj.items()) {
    bool ok = false;
    for (const char* allowed : keys) ok = ok || k == allowed;
    if (!ok) throw ParseError(field(path, k), "unknown field");
  }
}

json strings(const Vector& v) { return json(to_strings(v)); }

}  // namespace

bool is_rational_string(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  const std::size_t num_start = i;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
  if (i == num_start) return false;
  if (i == s.size()) return true;
  if (s[i] != '/') return false;
  const std::size_t den_start = ++i;
  bool nonzero = false;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') nonzero = nonzero || s[i++] != '0';
  return i == s.size() && i > den_start && nonzero;
}

MetricLieAlgebra AlgebraFile::metric_algebra() const {
  return metric ? MetricLieAlgebra(algebra, *metric) : MetricLieAlgebra(algebra);
}

std::optional<Subspace> AlgebraFile::find_subspace(const std::string& name) const {
  for (const auto& s : subalgebras)
    if (s.name == name) return Subspace::span(algebra.dim(), s.basis);
  return std::nullopt;
}

AlgebraFile parse_algebra_file(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("", std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("", "top level must be an object");
  only_keys(root, "", {"dim", "name", "brackets", "metric", "subalgebras"});

  if (!root.contains("dim")) throw ParseError("dim", "missing");
  const json& jd = root["dim"];
  if (!jd.is_number_integer() || jd.get<long long>() < 1) throw ParseError("dim", "expected a positive integer");
  const auto n = static_cast<std::size_t>(jd.get<long long>());

  std::string name;
  if (root.contains("name")) {
    if (!root["name"].is_string()) throw ParseError("name", "expected a string");
    name = root["name"].get<std::string>();
  }

  LieAlgebra::Builder builder(n, name);
  if (root.contains("brackets")) {
    const json& jb = root["brackets"];
    if (!jb.is_array()) throw ParseError("brackets", "expected an array");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t e = 0; e < jb.size(); ++e) {
      const std::string p = at("brackets", e);
      const json& entry = jb[e];
      if (!entry.is_object()) throw ParseError(p, "expected an object");
      only_keys(entry, p, {"i", "j", "coeffs"});
      for (const char* key : {"i", "j", "coeffs"})
        if (!entry.contains(key)) throw ParseError(field(p, key), "missing");
      const std::size_t i = index_in_range(entry["i"], field(p, "i"), n);
      const std::size_t j = index_in_range(entry["j"], field(p, "j"), n);
      if (i == j) throw ParseError(field(p, "i"), "i must differ from j");
      if (i > j) throw ParseError(field(p, "i"), "i must be less than j");
      if (!seen.insert({i, j}).second) throw ParseError(p, "duplicate bracket for (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      const json& jc = entry["coeffs"];
      const std::string pc = field(p, "coeffs");
      if (!jc.is_array()) throw ParseError(pc, "expected an array");
      std::set<std::size_t> ks;
      for (std::size_t t = 0; t < jc.size(); ++t) {
        const std::string pt = at(pc, t);
        if (!jc[t].is_array() || jc[t].size() != 2) throw ParseError(pt, "expected [k, \"rational\"]");
        const std::size_t k = index_in_range(jc[t][0], at(pt, 0), n);
        if (!ks.insert(k).second) throw ParseError(at(pt, 0), "repeated index " + std::to_string(k));
        builder.add(i, j, k, rational_field(jc[t][1], at(pt, 1)));
      }
    }
  }

  AlgebraFile out;
  out.algebra = builder.build(JacobiCheck::skip);

  if (root.contains("metric")) {
    const json& jm = root["metric"];
    if (!jm.is_object()) throw ParseError("metric", "expected an object");
    only_keys(jm, "metric", {"gram"});
    if (!jm.contains("gram")) throw ParseError("metric.gram", "missing");
    const json& jg = jm["gram"];
    if (!jg.is_array() || jg.size() != n) throw ParseError("metric.gram", "expected " + std::to_string(n) + " rows");
    Matrix g(n, n);
    for (std::size_t r = 0; r < n; ++r) g.set_row(r, vector_field(jg[r], at("metric.gram", r), n));
    try {
      out.metric = Metric(std::move(g));
    } catch (const InvalidArgument& e) {
      throw ParseError("metric.gram", e.what());
    }
  }

  if (root.contains("subalgebras")) {
    const json& js = root["subalgebras"];
    if (!js.is_array()) throw ParseError("subalgebras", "expected an array");
    std::set<std::string> names;
    for (std::size_t s = 0; s < js.size(); ++s) {
      const std::string p = at("subalgebras", s);
      if (!js[s].is_object()) throw ParseError(p, "expected an object");
      only_keys(js[s], p, {"name", "basis"});
      if (!js[s].contains("name") || !js[s]["name"].is_string()) throw ParseError(field(p, "name"), "expected a string");
      NamedSubspace ns;
      ns.name = js[s]["name"].get<std::string>();
      if (!names.insert(ns.name).second) throw ParseError(field(p, "name"), "duplicate name \"" + ns.name + "\"");
      if (!js[s].contains("basis") || !js[s]["basis"].is_array()) throw ParseError(field(p, "basis"), "expected an array");
      const json& jb = js[s]["basis"];
      for (std::size_t v = 0; v < jb.size(); ++v) ns.basis.push_back(vector_field(jb[v], at(field(p, "basis"), v), n));
      out.subalgebras.push_back(std::move(ns));
    }
  }
  return out;
}

std::string emit_algebra_file(const AlgebraFile& f) {
  const std::size_t n = f.algebra.dim();
  json root;
  root["dim"] = n;
  if (!f.algebra.name().empty()) root["name"] = f.algebra.name();
  json brackets = json::array();
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      const Vector b = f.algebra.basis_bracket(i, j);
      if (b.is_zero()) continue;
      json coeffs = json::array();
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(b[k]) != 0) coeffs.push_back(json::array({k + 1, to_string(b[k])}));
      brackets.push_back({{"i", i}, {"j", j}, {"coeffs", coeffs}});
    }
  root["brackets"] = brackets;
  if (f.metric) {
    json gram = json::array();
    for (std::size_t r = 0; r < n; ++r) gram.push_back(strings(f.metric->gram().row(r)));
    root["metric"] = {{"gram", gram}};
  }
  if (!f.subalgebras.empty()) {
    json subs = json::array();
    for (const auto& s : f.subalgebras) {
      json basis = json::array();
      for (const auto& v : s.basis) basis.push_back(strings(v));
      subs.push_back({{"name", s.name}, {"basis", basis}});
    }
    root["subalgebras"] = subs;
  }
  return root.dump(1) + "\n";
}

std::vector<Vector> parse_inline_basis(std::string_view text, std::size_t dim) {
  std::vector<Vector> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    const std::string_view part = text.substr(start, end - start);
    std::vector<Scalar> coords;
    std::size_t s = 0;
    while (s <= part.size()) {
      const std::size_t e = std::min(part.find(',', s), part.size());
      std::string tok(part.substr(s, e - s));
      const auto first = tok.find_first_not_of(' ');
      const auto last = tok.find_last_not_of(' ');
      tok = first == std::string::npos ? "" : tok.substr(first, last - first + 1);
      if (!is_rational_string(tok)) throw InvalidArgument("inline basis: malformed rational \"" + tok + "\"");
      coords.push_back(parse_scalar(tok));
      s = e + 1;
    }
    if (coords.size() != dim)
      throw InvalidArgument("inline basis: vector " + std::to_string(out.size() + 1) + " has " +
                            std::to_string(coords.size()) + " entries, expected " + std::to_string(dim));
    out.emplace_back(std::move(coords));
    start = end + 1;
  }
  return out;
}

std::string emit_report(const Report& r, ReportFormat format) {
  if (format == ReportFormat::json) {
    json items = json::array();
    for (const auto& it : r.items)
      items.push_back({{"name", it.name},
                       {"verdict", it.verdict},
                       {"detail", it.detail},
                       {"witnesses", it.witnesses},
                       {"values", it.values},
                       {"elapsed", it.elapsed}});
    json root = {{"command", r.command}, {"items", items}, {"note", r.note}, {"elapsed", r.elapsed},
                 {"exit_code", r.exit_code}};
    return root.dump(1) + "\n";
  }
  std::ostringstream os;
  for (const auto& it : r.items) {
    std::string tag = it.verdict;
    for (auto& ch : tag) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    os << tag << "  " << it.name;
    if (!it.detail.empty()) os << ": " << it.detail;
    char buf[32];
    std::snprintf(buf, sizeof buf, " (%.3fs)", it.elapsed);
    os << buf << "\n";
    for (const auto& [k, v] : it.values) os << "    " << k << " = " << v << "\n";
    for (const auto& [k, vs] : it.witnesses) {
      os << "    " << k << ":";
      for (const auto& s : vs) os << " " << s;
      os << "\n";
    }
  }
  if (!r.note.empty()) os << "note: " << r.note << "\n";
  return os.str();
}

Report parse_report(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError("", std::string("malformed report: ") + e.what());
  }
  try {
    Report r;
    r.command = root.at("command").get<std::string>();
    r.note = root.at("note").get<std::string>();
    r.elapsed = root.at("elapsed").get<double>();
    r.exit_code = root.at("exit_code").get<int>();
    for (const auto& it : root.at("items")) {
      ReportItem item;
      item.name = it.at("name").get<std::string>();
      item.verdict = it.at("verdict").get<std::string>();
      item.detail = it.at("detail").get<std::string>();
      item.witnesses = it.at("witnesses").get<std::map<std::string, std::vector<std::string>>>();
      item.values = it.at("values").get<std::map<std::string, std::string>>();
      item.elapsed = it.at("elapsed").get<double>();
      r.items.push_back(std::move(item));
    }
    return r;
  } catch (const json::exception& e) {
    throw ParseError("", std::string("malformed report: ") + e.what());
  }
}

}  // namespace liegeo
