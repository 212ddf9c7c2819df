#pragma once

// Documents of schema "eos/1": JSON objects with "kind" and "version" keys.
// Every number travels as a string, either "num/den" (exact) or a decimal.

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "eos/feasibility.hpp"
#include "eos/generator.hpp"
#include "eos/number.hpp"
#include "eos/recovery.hpp"

namespace eos {

inline constexpr const char* kSchemaVersion = "eos/1";

enum class DocKind { Beta, Nu, P, U, Measure, TSpec, Dist, Verdict, Report };

const char* to_string(DocKind k);

struct BetaDoc {
  std::vector<Number> values;
};

struct NuDoc {
  std::vector<Number> nu;
  Number lambda;
  int n = 0;
};

struct PDoc {
  std::vector<Number> values;
};

struct UDoc {
  std::vector<Number> values;
};

struct MeasureDoc {
  AtomicMeasure measure;
};

// Law of T as written by a user: beta(a, b), uniform, degenerate(rho) or atomic.
struct LawSpec {
  LawKind kind = LawKind::Uniform;
  Number a = 1;
  Number b = 1;
  Number rho = Number(Rational(1, 2));
  AtomicMeasure atoms;

  MixingDistribution to_mixing() const;
};

struct TSpecDoc {
  LawSpec law;
};

struct DistDoc {
  std::vector<Number> values;
  std::vector<Number> masses;
};

struct VerdictDoc {
  FeasibilityVerdict verdict;
};

// Named table plus scalar fields, e.g. a quantile grid or a validation report.
struct ReportDoc {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::map<std::string, std::string> fields;
};

using Payload = std::variant<BetaDoc, NuDoc, PDoc, UDoc, MeasureDoc, TSpecDoc, DistDoc, VerdictDoc, ReportDoc>;

struct Document {
  Payload payload;

  DocKind kind() const { return static_cast<DocKind>(payload.index()); }
};

enum class Format { Json, Csv };

// Throws SyntaxError (with line and column), SchemaVersionMismatch, or
// InvariantViolation (with the offending field path). Decimal strings are
// read as doubles unless force_exact, which converts them exactly.
Document parse(std::string_view text, bool force_exact = false);

// Compact JSON with sorted keys, or CSV with a header row and LF line
// endings (no trailing newline). CSV exists for beta, nu, p, u, measure,
// dist and report; other kinds throw UnsupportedFormat.
std::string emit(const Document& doc, Format format = Format::Json);

// Command-line shorthands:
//   law:  "beta:2,2" | "uniform" | "degenerate:1/2" | "atomic:0.3:1/2,0.7:1/2"
//   dist: "atoms:-2:1/2,2:1/2"
LawSpec parse_law_spec(std::string_view text, bool force_exact = false);
DistDoc parse_dist_spec(std::string_view text, bool force_exact = false);

// "1,2,3" -> numbers
std::vector<Number> parse_number_list(std::string_view text, bool force_exact = false);

FeasibilityStatus status_from_string(std::string_view s);
VerdictReason reason_from_string(std::string_view s);

}  // namespace eos
