#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liegeo/errors.hpp"
#include "liegeo/metric.hpp"

namespace liegeo {

/// Malformed or invalid algebra file. `path()` names the offending field,
/// e.g. "brackets[0].i"; empty for syntax errors.
class ParseError : public InvalidArgument {
 public:
  ParseError(const std::string& path, const std::string& message)
      : InvalidArgument(path.empty() ? message : path + ": " + message), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

struct NamedSubspace {
  std::string name;
  std::vector<Vector> basis;
};

/// Algebra, optional metric and named subspaces as stored on disk. Brackets
/// are kept as written; the Jacobi identity is not checked on load.
struct AlgebraFile {
  LieAlgebra algebra = LieAlgebra::abelian(1);
  std::optional<Metric> metric;
  std::vector<NamedSubspace> subalgebras;

  /// The stored metric, or the standard one.
  MetricLieAlgebra metric_algebra() const;
  /// nullopt when no subspace carries that name.
  std::optional<Subspace> find_subspace(const std::string& name) const;
};

AlgebraFile parse_algebra_file(std::string_view text);
/// JSON with sorted keys; parse(emit(f)) reproduces f.
std::string emit_algebra_file(const AlgebraFile& f);

/// "1,0,-1/2;0,1,0" -> two vectors of length dim.
std::vector<Vector> parse_inline_basis(std::string_view text, std::size_t dim);

/// True when every character matches -?\d+(/\d+)? with a nonzero denominator.
bool is_rational_string(std::string_view s);

struct ReportItem {
  std::string name;
  /// "pass", "fail" or "info"
  std::string verdict;
  std::string detail;
  std::map<std::string, std::vector<std::string>> witnesses;
  std::map<std::string, std::string> values;
  double elapsed = 0;

  friend bool operator==(const ReportItem&, const ReportItem&) = default;
};

struct Report {
  std::string command;
  std::vector<ReportItem> items;
  std::string note;
  double elapsed = 0;
  int exit_code = 0;

  friend bool operator==(const Report&, const Report&) = default;
};

enum class ReportFormat { human, json };

std::string emit_report(const Report& r, ReportFormat format);
/// Inverse of emit_report(r, ReportFormat::json).
Report parse_report(std::string_view json_text);

}  // namespace liegeo
