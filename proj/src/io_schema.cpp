#include "eos/io_schema.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "eos/error.hpp"

namespace eos {

using json = nlohmann::json;

const char* to_string(DocKind k) {
  switch (k) {
    case DocKind::Beta: return "beta";
    case DocKind::Nu: return "nu";
    case DocKind::P: return "p";
    case DocKind::U: return "u";
    case DocKind::Measure: return "measure";
    case DocKind::TSpec: return "tspec";
    case DocKind::Dist: return "dist";
    case DocKind::Verdict: return "verdict";
    case DocKind::Report: return "report";
  }
  return "unknown";
}

FeasibilityStatus status_from_string(std::string_view s) {
  if (s == "Feasible") return FeasibilityStatus::Feasible;
  if (s == "Infeasible") return FeasibilityStatus::Infeasible;
  throw Error(ErrorCode::InvariantViolation, "unknown status '" + std::string(s) + "'", "status");
}

VerdictReason reason_from_string(std::string_view s) {
  for (VerdictReason r : {VerdictReason::LowOrder, VerdictReason::StrictDefinite,
                          VerdictReason::OpenSupportDeterminate, VerdictReason::NecessaryPsdFailed,
                          VerdictReason::BoundaryAtomAtEndpoint, VerdictReason::ClosedFormN4,
                          VerdictReason::ClosedFormN5}) {
    if (s == to_string(r)) return r;
  }
  throw Error(ErrorCode::InvariantViolation, "unknown reason '" + std::string(s) + "'", "reason");
}

MixingDistribution LawSpec::to_mixing() const {
  switch (kind) {
    case LawKind::Beta: return MixingDistribution::beta(a.value(), b.value());
    case LawKind::Uniform: return MixingDistribution::uniform();
    case LawKind::Degenerate: return MixingDistribution::degenerate(rho);
    case LawKind::Atomic: return MixingDistribution::atomic(atoms);
    case LawKind::Density: break;
  }
  throw Error(ErrorCode::InvalidSequence, "law cannot be written as a spec");
}

namespace {

// ------------------------------------------------------------- reading

struct Reader {
  bool force_exact;

  [[noreturn]] void fail(const std::string& path, const std::string& what) const {
    throw Error(ErrorCode::InvariantViolation, what, path);
  }

  const json& field(const json& obj, const std::string& key, const std::string& path) const {
    auto it = obj.find(key);
    if (it == obj.end()) fail(path.empty() ? key : path + "." + key, "missing field");
    return *it;
  }

  Number number(const json& v, const std::string& path) const {
    try {
      if (v.is_string()) return Number::parse(v.get<std::string>(), force_exact);
      if (v.is_number_integer()) return Number::parse(v.dump(), force_exact);
      if (v.is_number_float()) {
        return force_exact ? Number(Rational(v.get<double>())) : Number(v.get<double>());
      }
    } catch (const Error& e) {
      fail(path, e.what());
    }
    fail(path, "expected a number");
  }

  std::string string(const json& v, const std::string& path) const {
    if (!v.is_string()) fail(path, "expected a string");
    return v.get<std::string>();
  }

  std::vector<Number> numbers(const json& v, const std::string& path) const {
    if (!v.is_array()) fail(path, "expected an array");
    std::vector<Number> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(number(v[i], path + "[" + std::to_string(i) + "]"));
    return out;
  }

  AtomicMeasure atoms(const json& v, const std::string& path) const {
    if (!v.is_array()) fail(path, "expected an array of atoms");
    std::vector<Atom> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::string p = path + "[" + std::to_string(i) + "]";
      if (!v[i].is_object()) fail(p, "expected an atom object");
      out.push_back(Atom{number(field(v[i], "location", p), p + ".location"),
                         number(field(v[i], "weight", p), p + ".weight")});
    }
    try {
      return AtomicMeasure(std::move(out));
    } catch (const Error& e) {
      fail(path, e.what());
    }
  }
};

bool less(const Number& a, const Number& b) {
  if (a.exact() && b.exact()) return a.rational() < b.rational();
  return a.value() < b.value();
}

void check_increasing(const Reader& r, const std::vector<Number>& v, const std::string& path) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!less(v[i - 1], v[i])) r.fail(path + "[" + std::to_string(i) + "]", "values must be strictly increasing");
  }
}

void check_probability(const Reader& r, const std::vector<Number>& v, const std::string& path) {
  if (v.empty()) r.fail(path, "empty vector");
  for (std::size_t i = 0; i < v.size(); ++i) {
    const bool negative = v[i].exact() ? sgn(v[i].rational()) < 0 : v[i].value() < 0;
    if (negative) r.fail(path + "[" + std::to_string(i) + "]", "probabilities must be nonnegative");
  }
  try {
    if (all_exact(v)) {
      ProbabilityVector<Rational> p(from_numbers<Rational>(v));
    } else {
      ProbabilityVector<double> p(from_numbers<double>(v));
    }
  } catch (const Error& e) {
    r.fail(path, e.what());
  }
}

LawSpec read_law(const Reader& r, const json& obj) {
  LawSpec law;
  const std::string name = r.string(r.field(obj, "law", ""), "law");
  auto positive = [&](const char* key) {
    Number x = r.number(r.field(obj, key, ""), key);
    if (!(x.value() > 0)) r.fail(key, "shape must be positive");
    return x;
  };
  if (name == "beta") {
    law.kind = LawKind::Beta;
    law.a = positive("a");
    law.b = positive("b");
  } else if (name == "uniform") {
    law.kind = LawKind::Uniform;
  } else if (name == "degenerate") {
    law.kind = LawKind::Degenerate;
    law.rho = r.number(r.field(obj, "rho", ""), "rho");
    const bool inside = law.rho.exact() ? (law.rho.rational() > 0 && law.rho.rational() < 1)
                                        : (law.rho.value() > 0 && law.rho.value() < 1);
    if (!inside) r.fail("rho", "rho must lie in (0, 1)");
  } else if (name == "atomic") {
    law.kind = LawKind::Atomic;
    law.atoms = r.atoms(r.field(obj, "atoms", ""), "atoms");
    for (std::size_t i = 0; i < law.atoms.size(); ++i) {
      const Number& t = law.atoms.atoms()[i].location;
      if (!(t.value() > 0 && t.value() < 1)) {
        r.fail("atoms[" + std::to_string(i) + "].location", "atoms of T must lie in (0, 1)");
      }
    }
  } else {
    r.fail("law", "unknown law '" + name + "'");
  }
  return law;
}

DistDoc read_dist(const Reader& r, const json& v, const std::string& path) {
  if (!v.is_array()) r.fail(path, "expected an array of atoms");
  DistDoc d;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    if (!v[i].is_object()) r.fail(p, "expected an atom object");
    d.values.push_back(r.number(r.field(v[i], "value", p), p + ".value"));
    d.masses.push_back(r.number(r.field(v[i], "mass", p), p + ".mass"));
  }
  check_increasing(r, d.values, path + ".value");
  try {
    if (all_exact(d.values) && all_exact(d.masses)) {
      DiscreteDistribution<Rational> x(from_numbers<Rational>(d.values), from_numbers<Rational>(d.masses));
    } else {
      DiscreteDistribution<double> x(from_numbers<double>(d.values), from_numbers<double>(d.masses));
    }
  } catch (const Error& e) {
    r.fail(path, e.what());
  }
  return d;
}

VerdictDoc read_verdict(const Reader& r, const json& obj) {
  FeasibilityVerdict v;
  v.status = status_from_string(r.string(r.field(obj, "status", ""), "status"));
  v.reason = reason_from_string(r.string(r.field(obj, "reason", ""), "reason"));
  const json& exact = r.field(obj, "exact", "");
  if (!exact.is_boolean()) r.fail("exact", "expected a boolean");
  v.exact = exact.get<bool>();
  if (obj.contains("epsilon_witness")) v.epsilon_witness = r.number(obj["epsilon_witness"], "epsilon_witness");
  if (obj.contains("certificate")) v.certificate = r.atoms(obj["certificate"], "certificate");
  if (obj.contains("endpoint_measure")) v.endpoint_measure = r.atoms(obj["endpoint_measure"], "endpoint_measure");
  if (obj.contains("boundary_distance")) {
    v.boundary_distance = r.number(obj["boundary_distance"], "boundary_distance").value();
  }
  if (v.feasible() && (!v.certificate || !v.epsilon_witness)) {
    r.fail("certificate", "a feasible verdict carries a certificate and a witness");
  }
  return VerdictDoc{std::move(v)};
}

ReportDoc read_report(const Reader& r, const json& obj) {
  ReportDoc d;
  d.name = r.string(r.field(obj, "name", ""), "name");
  const json& cols = r.field(obj, "columns", "");
  if (!cols.is_array()) r.fail("columns", "expected an array");
  for (std::size_t i = 0; i < cols.size(); ++i) d.columns.push_back(r.string(cols[i], "columns[" + std::to_string(i) + "]"));
  const json& rows = r.field(obj, "rows", "");
  if (!rows.is_array()) r.fail("rows", "expected an array");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string p = "rows[" + std::to_string(i) + "]";
    if (!rows[i].is_array() || rows[i].size() != d.columns.size()) r.fail(p, "row width must match columns");
    std::vector<std::string> row;
    for (std::size_t j = 0; j < rows[i].size(); ++j) row.push_back(r.string(rows[i][j], p + "[" + std::to_string(j) + "]"));
    d.rows.push_back(std::move(row));
  }
  if (obj.contains("fields")) {
    const json& f = obj["fields"];
    if (!f.is_object()) r.fail("fields", "expected an object");
    for (auto it = f.begin(); it != f.end(); ++it) d.fields[it.key()] = r.string(it.value(), "fields." + it.key());
  }
  return d;
}

std::pair<int, int> line_column(std::string_view text, std::size_t byte) {
  // nlohmann reports the 1-based position of the last byte read.
  const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

// ------------------------------------------------------------- writing

json strings(const std::vector<Number>& xs) {
  json a = json::array();
  for (const Number& x : xs) a.push_back(x.str());
  return a;
}

json atoms_json(const AtomicMeasure& m) {
  json a = json::array();
  for (const Atom& atom : m.atoms()) a.push_back({{"location", atom.location.str()}, {"weight", atom.weight.str()}});
  return a;
}

json law_json(const LawSpec& law) {
  json j;
  switch (law.kind) {
    case LawKind::Beta:
      j["law"] = "beta";
      j["a"] = law.a.str();
      j["b"] = law.b.str();
      break;
    case LawKind::Uniform: j["law"] = "uniform"; break;
    case LawKind::Degenerate:
      j["law"] = "degenerate";
      j["rho"] = law.rho.str();
      break;
    case LawKind::Atomic:
      j["law"] = "atomic";
      j["atoms"] = atoms_json(law.atoms);
      break;
    case LawKind::Density: throw Error(ErrorCode::UnsupportedFormat, "density laws have no spec form");
  }
  return j;
}

struct JsonWriter {
  json operator()(const BetaDoc& d) const { return {{"values", strings(d.values)}}; }
  json operator()(const NuDoc& d) const { return {{"nu", strings(d.nu)}, {"lambda", d.lambda.str()}, {"n", d.n}}; }
  json operator()(const PDoc& d) const { return {{"values", strings(d.values)}}; }
  json operator()(const UDoc& d) const { return {{"values", strings(d.values)}}; }
  json operator()(const MeasureDoc& d) const { return {{"atoms", atoms_json(d.measure)}}; }
  json operator()(const TSpecDoc& d) const { return law_json(d.law); }
  json operator()(const DistDoc& d) const {
    json a = json::array();
    for (std::size_t i = 0; i < d.values.size(); ++i) a.push_back({{"value", d.values[i].str()}, {"mass", d.masses[i].str()}});
    return {{"atoms", a}};
  }
  json operator()(const VerdictDoc& d) const {
    const FeasibilityVerdict& v = d.verdict;
    json j = {{"status", to_string(v.status)}, {"reason", to_string(v.reason)}, {"exact", v.exact}};
    if (v.epsilon_witness) j["epsilon_witness"] = v.epsilon_witness->str();
    if (v.certificate) j["certificate"] = atoms_json(*v.certificate);
    if (v.endpoint_measure) j["endpoint_measure"] = atoms_json(*v.endpoint_measure);
    if (v.boundary_distance) j["boundary_distance"] = Number(*v.boundary_distance).str();
    return j;
  }
  json operator()(const ReportDoc& d) const {
    json rows = json::array();
    for (const auto& row : d.rows) rows.push_back(row);
    json fields = json::object();
    for (const auto& [k, v] : d.fields) fields[k] = v;
    return {{"name", d.name}, {"columns", d.columns}, {"rows", rows}, {"fields", fields}};
  }
};

std::string csv_vector(const char* index, const char* column, const std::vector<Number>& xs, int first) {
  std::ostringstream out;
  out << index << ',' << column;
  for (std::size_t i = 0; i < xs.size(); ++i) out << '\n' << (first + static_cast<int>(i)) << ',' << xs[i].str();
  return out.str();
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

struct CsvWriter {
  std::string operator()(const BetaDoc& d) const { return csv_vector("j", "beta", d.values, 1); }
  std::string operator()(const NuDoc& d) const { return csv_vector("k", "nu", d.nu, 0); }
  std::string operator()(const PDoc& d) const { return csv_vector("k", "p", d.values, 0); }
  std::string operator()(const UDoc& d) const { return csv_vector("k", "u", d.values, 0); }
  std::string operator()(const MeasureDoc& d) const {
    std::ostringstream out;
    out << "location,weight";
    for (const Atom& a : d.measure.atoms()) out << '\n' << a.location.str() << ',' << a.weight.str();
    return out.str();
  }
  std::string operator()(const DistDoc& d) const {
    std::ostringstream out;
    out << "value,mass";
    for (std::size_t i = 0; i < d.values.size(); ++i) out << '\n' << d.values[i].str() << ',' << d.masses[i].str();
    return out.str();
  }
  std::string operator()(const ReportDoc& d) const {
    std::ostringstream out;
    for (std::size_t i = 0; i < d.columns.size(); ++i) out << (i ? "," : "") << csv_cell(d.columns[i]);
    for (const auto& row : d.rows) {
      out << '\n';
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
    }
    return out.str();
  }
  std::string operator()(const TSpecDoc&) const { throw Error(ErrorCode::UnsupportedFormat, "tspec has no csv form"); }
  std::string operator()(const VerdictDoc&) const {
    throw Error(ErrorCode::UnsupportedFormat, "verdict has no csv form");
  }
};

}  // namespace

Document parse(std::string_view text, bool force_exact) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte);
    throw Error(ErrorCode::SyntaxError, e.what(), line, column);
  }
  const Reader r{force_exact};
  if (!j.is_object()) throw Error(ErrorCode::SyntaxError, "document must be a JSON object", 1, 1);
  auto version = j.find("version");
  if (version == j.end() || !version->is_string() || version->get<std::string>() != kSchemaVersion) {
    throw Error(ErrorCode::SchemaVersionMismatch, std::string("expected version ") + kSchemaVersion, "version");
  }
  const std::string kind = r.string(r.field(j, "kind", ""), "kind");
  try {
    if (kind == "beta") {
      BetaDoc d{r.numbers(r.field(j, "values", ""), "values")};
      if (d.values.size() < 2) r.fail("values", "need at least two values");
      if (d.values.size() > static_cast<std::size_t>(kMaxOrder)) r.fail("values", "at most 64 values");
      check_increasing(r, d.values, "values");
      return Document{d};
    }
    if (kind == "nu") {
      NuDoc d;
      d.nu = r.numbers(r.field(j, "nu", ""), "nu");
      d.lambda = r.number(r.field(j, "lambda", ""), "lambda");
      const json& n = r.field(j, "n", "");
      if (!n.is_number_integer()) r.fail("n", "expected an integer");
      d.n = n.get<int>();
      if (d.n < 2 || static_cast<int>(d.nu.size()) != d.n - 1) r.fail("nu", "length must be n - 1");
      return Document{d};
    }
    if (kind == "p") {
      PDoc d{r.numbers(r.field(j, "values", ""), "values")};
      check_probability(r, d.values, "values");
      return Document{d};
    }
    if (kind == "u") {
      UDoc d{r.numbers(r.field(j, "values", ""), "values")};
      if (d.values.size() < 2) r.fail("values", "need u_0 and u_1 at least");
      return Document{d};
    }
    if (kind == "measure") return Document{MeasureDoc{r.atoms(r.field(j, "atoms", ""), "atoms")}};
    if (kind == "tspec") return Document{TSpecDoc{read_law(r, j)}};
    if (kind == "dist") return Document{read_dist(r, r.field(j, "atoms", ""), "atoms")};
    if (kind == "verdict") return Document{read_verdict(r, j)};
    if (kind == "report") return Document{read_report(r, j)};
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvariantViolation, e.what(), kind);
  }
  r.fail("kind", "unknown document kind '" + kind + "'");
}

std::string emit(const Document& doc, Format format) {
  if (format == Format::Csv) return std::visit(CsvWriter{}, doc.payload);
  json j = std::visit(JsonWriter{}, doc.payload);
  j["kind"] = to_string(doc.kind());
  j["version"] = kSchemaVersion;
  return j.dump();
}

// ------------------------------------------------------------ shorthands

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

std::vector<std::pair<Number, Number>> pairs(std::string_view body, bool force_exact) {
  std::vector<std::pair<Number, Number>> out;
  for (std::string_view item : split(body, ',')) {
    // The value may itself be negative, so split on the last ':'.
    item = trim(item);
    const std::size_t colon = item.rfind(':');
    if (colon == std::string_view::npos) throw Error(ErrorCode::SyntaxError, "expected value:mass in '" + std::string(item) + "'");
    out.emplace_back(Number::parse(trim(item.substr(0, colon)), force_exact),
                     Number::parse(trim(item.substr(colon + 1)), force_exact));
  }
  return out;
}

}  // namespace

std::vector<Number> parse_number_list(std::string_view text, bool force_exact) {
  std::vector<Number> out;
  text = trim(text);
  if (text.empty()) throw Error(ErrorCode::SyntaxError, "empty number list");
  for (std::string_view item : split(text, ',')) out.push_back(Number::parse(trim(item), force_exact));
  return out;
}

LawSpec parse_law_spec(std::string_view text, bool force_exact) {
  text = trim(text);
  const std::size_t colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const std::string_view body = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  json j;
  j["version"] = kSchemaVersion;
  j["kind"] = "tspec";
  j["law"] = std::string(name);
  if (name == "beta") {
    const auto ab = parse_number_list(body, force_exact);
    if (ab.size() != 2) throw Error(ErrorCode::SyntaxError, "beta law takes two shapes: beta:a,b");
    j["a"] = ab[0].str();
    j["b"] = ab[1].str();
  } else if (name == "degenerate") {
    const auto rho = parse_number_list(body, force_exact);
    if (rho.size() != 1) throw Error(ErrorCode::SyntaxError, "degenerate law takes one point: degenerate:rho");
    j["rho"] = rho[0].str();
  } else if (name == "atomic") {
    json atoms = json::array();
    for (const auto& [t, w] : pairs(body, force_exact)) atoms.push_back({{"location", t.str()}, {"weight", w.str()}});
    j["atoms"] = atoms;
  } else if (name != "uniform") {
    throw Error(ErrorCode::SyntaxError, "unknown law '" + std::string(name) + "'");
  }
  return std::get<TSpecDoc>(parse(j.dump(), force_exact).payload).law;
}

DistDoc parse_dist_spec(std::string_view text, bool force_exact) {
  text = trim(text);
  constexpr std::string_view prefix = "atoms:";
  if (text.substr(0, prefix.size()) != prefix) throw Error(ErrorCode::SyntaxError, "distribution must start with 'atoms:'");
  json atoms = json::array();
  for (const auto& [v, m] : pairs(text.substr(prefix.size()), force_exact)) {
    atoms.push_back({{"value", v.str()}, {"mass", m.str()}});
  }
  json j = {{"version", kSchemaVersion}, {"kind", "dist"}, {"atoms", atoms}};
  return std::get<DistDoc>(parse(j.dump(), force_exact).payload);
}

}  // namespace eos
