#include <algorithm>
#include <climits>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "json.hpp"
#include "lab.hpp"
#include "qumode/errors.hpp"
#include "qumode/graph.hpp"

namespace qumode::lab {

using nlohmann::json;

namespace {

// Size caps that keep dense matrices within memory and runtime budgets.
constexpr int kMaxVibronicCutoff = 40;
constexpr int kMaxSingleModeCutoff = 2000;
constexpr int kMaxSbmCutoff = 400;
constexpr long long kMaxQpeDimension = 2048;
constexpr long long kMaxTimePoints = 1000000;

class Reader {
 public:
  Reader(const json& object, std::string path, std::vector<Diagnostic>& diagnostics)
      : object_(object), path_(std::move(path)), diagnostics_(diagnostics) {}

  std::string field(std::string_view key) const {
    return path_.empty() ? std::string(key) : path_ + "." + std::string(key);
  }

  const json* find(std::string_view key) const {
    const auto it = object_.find(std::string(key));
    return it == object_.end() ? nullptr : &*it;
  }

  void error(std::string_view key, std::string message) {
    diagnostics_.push_back({Diagnostic::Severity::kError, field(key), std::move(message)});
  }

  void warning(std::string_view key, std::string message) {
    diagnostics_.push_back({Diagnostic::Severity::kWarning, field(key), std::move(message)});
  }

  Reader nested(std::string_view key, const json& object) const {
    return Reader(object, field(key), diagnostics_);
  }

  void reject_unknown(std::initializer_list<std::string_view> allowed) {
    for (auto it = object_.begin(); it != object_.end(); ++it) {
      if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end()) {
        error(it.key(), "unknown key");
      }
    }
  }

  std::optional<double> real(std::string_view key, std::optional<double> fallback = {}) {
    const json* v = find(key);
    if (v == nullptr) {
      if (!fallback) error(key, "missing required field");
      return fallback;
    }
    if (!v->is_number() || !std::isfinite(v->get<double>())) {
      error(key, "must be a finite number");
      return std::nullopt;
    }
    return v->get<double>();
  }

  std::optional<double> positive(std::string_view key, std::optional<double> fallback = {}) {
    const std::optional<double> x = real(key, fallback);
    if (x && *x <= 0.0) {
      error(key, "must be positive");
      return std::nullopt;
    }
    return x;
  }

  std::optional<int> integer(std::string_view key, std::optional<int> fallback, int min,
                             int max = INT_MAX) {
    const json* v = find(key);
    if (v == nullptr) {
      if (!fallback) error(key, "missing required field");
      return fallback;
    }
    if (!v->is_number_integer()) {
      error(key, "must be an integer");
      return std::nullopt;
    }
    const long long x = v->get<long long>();
    if (x < min) {
      error(key, "must be >= " + std::to_string(min));
      return std::nullopt;
    }
    if (x > max) {
      error(key, "must be <= " + std::to_string(max));
      return std::nullopt;
    }
    return static_cast<int>(x);
  }

  std::optional<std::uint64_t> count(std::string_view key, std::uint64_t fallback) {
    const json* v = find(key);
    if (v == nullptr) return fallback;
    if (!v->is_number_integer() || v->get<long long>() < 0) {
      error(key, "must be a non-negative integer");
      return std::nullopt;
    }
    return v->get<std::uint64_t>();
  }

  std::optional<Complex> complex(std::string_view key, Complex fallback) {
    const json* v = find(key);
    if (v == nullptr) return fallback;
    const std::optional<Complex> z = as_complex(*v);
    if (!z) error(key, "must be a number or a [re, im] pair");
    return z;
  }

  std::optional<std::string> string(std::string_view key, std::optional<std::string> fallback = {}) {
    const json* v = find(key);
    if (v == nullptr) {
      if (!fallback) error(key, "missing required field");
      return fallback;
    }
    if (!v->is_string()) {
      error(key, "must be a string");
      return std::nullopt;
    }
    return v->get<std::string>();
  }

  static std::optional<Complex> as_complex(const json& v) {
    if (v.is_number()) {
      const double x = v.get<double>();
      return std::isfinite(x) ? std::optional<Complex>(x) : std::nullopt;
    }
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
      const Complex z(v[0].get<double>(), v[1].get<double>());
      if (std::isfinite(z.real()) && std::isfinite(z.imag())) return z;
    }
    return std::nullopt;
  }

  /// Square matrix given as a list of rows of numbers or [re, im] pairs.
  std::optional<Matrix> square_matrix(std::string_view key) {
    const json* v = find(key);
    if (v == nullptr) {
      error(key, "missing required field");
      return std::nullopt;
    }
    if (!v->is_array() || v->empty()) {
      error(key, "must be a non-empty list of rows");
      return std::nullopt;
    }
    const auto n = static_cast<Eigen::Index>(v->size());
    Matrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const json& row = (*v)[static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
        error(key, "must be square (row " + std::to_string(i) + " has the wrong length)");
        return std::nullopt;
      }
      for (Eigen::Index j = 0; j < n; ++j) {
        const std::optional<Complex> z = as_complex(row[static_cast<std::size_t>(j)]);
        if (!z) {
          error(key, "entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not a number");
          return std::nullopt;
        }
        m(i, j) = *z;
      }
    }
    return m;
  }

  std::optional<Vector> complex_vector(std::string_view key) {
    const json* v = find(key);
    if (v == nullptr) return std::nullopt;
    if (!v->is_array() || v->empty()) {
      error(key, "must be a non-empty list");
      return std::nullopt;
    }
    Vector out(static_cast<Eigen::Index>(v->size()));
    for (std::size_t i = 0; i < v->size(); ++i) {
      const std::optional<Complex> z = as_complex((*v)[i]);
      if (!z) {
        error(key, "entry " + std::to_string(i) + " is not a number");
        return std::nullopt;
      }
      out(static_cast<Eigen::Index>(i)) = *z;
    }
    return out;
  }

  /// Either a list of numbers or {"start", "stop", "count"} (inclusive).
  std::optional<std::vector<double>> grid(std::string_view key) {
    const json* v = find(key);
    if (v == nullptr) {
      error(key, "missing required field");
      return std::nullopt;
    }
    std::vector<double> out;
    if (v->is_array()) {
      for (const json& x : *v) {
        if (!x.is_number() || !std::isfinite(x.get<double>())) {
          error(key, "must contain only finite numbers");
          return std::nullopt;
        }
        out.push_back(x.get<double>());
      }
    } else if (v->is_object()) {
      Reader range(*v, field(key), diagnostics_);
      range.reject_unknown({"start", "stop", "count"});
      const auto start = range.real("start");
      const auto stop = range.real("stop");
      const auto n = range.integer("count", std::nullopt, 1, static_cast<int>(kMaxTimePoints));
      if (!start || !stop || !n) return std::nullopt;
      for (int i = 0; i < *n; ++i) {
        out.push_back(*n == 1 ? *start : *start + (*stop - *start) * i / (*n - 1));
      }
    } else {
      error(key, "must be a list or a {start, stop, count} object");
      return std::nullopt;
    }
    if (out.empty()) {
      error(key, "must not be empty");
      return std::nullopt;
    }
    return out;
  }

 private:
  const json& object_;
  std::string path_;
  std::vector<Diagnostic>& diagnostics_;
};

std::optional<VibronicParams> parse_vibronic(Reader& r) {
  r.reject_unknown({"cutoff", "alpha1", "alpha2", "z1", "z2", "theta", "phi", "omega1", "omega2", "e00",
                    "prepared", "maxq"});
  VibronicParams p;
  const auto cutoff = r.integer("cutoff", std::nullopt, 2, kMaxVibronicCutoff);
  const auto alpha1 = r.complex("alpha1", 0.0);
  const auto alpha2 = r.complex("alpha2", 0.0);
  const auto z1 = r.complex("z1", 0.0);
  const auto z2 = r.complex("z2", 0.0);
  const auto theta = r.real("theta", 0.0);
  const auto phi = r.real("phi", 0.0);
  const auto omega1 = r.positive("omega1");
  const auto omega2 = r.positive("omega2");
  const auto e00 = r.real("e00", 0.0);

  FockIndex prepared = {0, 0};
  if (const json* v = r.find("prepared")) {
    if (!v->is_array() || v->size() != 2 || !(*v)[0].is_number_integer() || !(*v)[1].is_number_integer() ||
        (*v)[0].get<long long>() < 0 || (*v)[1].get<long long>() < 0) {
      r.error("prepared", "must be a pair of non-negative integers");
      return std::nullopt;
    }
    prepared = {(*v)[0].get<int>(), (*v)[1].get<int>()};
  }
  if (!cutoff) return std::nullopt;
  if (prepared[0] >= *cutoff || prepared[1] >= *cutoff) {
    r.error("prepared", "quanta must be below the cutoff");
  }
  const auto maxq = r.integer("maxq", *cutoff - 1, 0, *cutoff - 1);
  if (!alpha1 || !alpha2 || !z1 || !z2 || !theta || !phi || !omega1 || !omega2 || !e00 || !maxq) {
    return std::nullopt;
  }
  p.spec = {*alpha1, *alpha2, *z1, *z2, *theta, *phi};
  p.cutoff = *cutoff;
  p.prepared = prepared;
  p.maxq = *maxq;
  p.omega1 = *omega1;
  p.omega2 = *omega2;
  p.e00 = *e00;
  return p;
}

std::optional<SbmEvolveParams> parse_sbm(Reader& r) {
  r.reject_unknown({"hamiltonian", "units", "initial_site", "initial_state", "times", "cutoff"});
  SbmEvolveParams p;
  std::string default_units = "dimensionless";
  std::optional<Matrix> h;
  if (const json* v = r.find("hamiltonian"); v != nullptr && v->is_string()) {
    if (v->get<std::string>() != "fmo") {
      r.error("hamiltonian", "unknown named Hamiltonian (known: fmo)");
    } else {
      h = fmo_hamiltonian().entries;
      default_units = "1/cm";
    }
  } else {
    h = r.square_matrix("hamiltonian");
  }
  const auto units = r.string("units", default_units);
  if (units && *units != "1/cm" && *units != "rad/ps" && *units != "dimensionless") {
    r.error("units", "must be one of 1/cm, rad/ps, dimensionless");
  }
  const auto times = r.grid("times");
  if (times) {
    for (double t : *times) {
      if (t < 0.0) {
        r.error("times", "must be non-negative");
        break;
      }
    }
  }
  if (!h) return std::nullopt;
  const int k = static_cast<int>(h->rows());
  if ((*h - h->adjoint()).cwiseAbs().maxCoeff() > kSbmHermitianTolerance) {
    r.error("hamiltonian", "must be Hermitian");
  }
  const auto cutoff = r.integer("cutoff", minimum_sbm_cutoff(k), minimum_sbm_cutoff(k), kMaxSbmCutoff);

  Vector initial = Vector::Zero(k);
  const bool has_site = r.find("initial_site") != nullptr;
  const bool has_state = r.find("initial_state") != nullptr;
  if (has_site && has_state) {
    r.error("initial_state", "give either initial_site or initial_state, not both");
  } else if (has_state) {
    const auto state = r.complex_vector("initial_state");
    if (state && state->size() != k) r.error("initial_state", "length must equal the Hamiltonian size");
    else if (state && std::abs(state->norm() - 1.0) > 1e-9) r.error("initial_state", "must be normalized");
    else if (state) initial = *state;
  } else {
    const auto site = r.integer("initial_site", 1, 1, k);
    if (site) initial(*site - 1) = 1.0;
  }
  if (!units || !times || !cutoff) return std::nullopt;
  p.hamiltonian = {*h, *units};
  if (*units == "1/cm") p.hamiltonian = to_angular_frequency(p.hamiltonian);
  p.initial = initial;
  p.times = *times;
  p.cutoff = *cutoff;
  return p;
}

std::optional<KerrSweepParams> parse_kerr(Reader& r) {
  r.reject_unknown({"kerr", "xi_grid", "cutoff", "levels", "dos"});
  KerrSweepParams p;
  const auto kerr = r.positive("kerr", 1.0);
  const auto grid = r.grid("xi_grid");
  if (grid && !std::is_sorted(grid->begin(), grid->end())) {
    r.warning("xi_grid", "not sorted; points are written in the given order");
  }
  const auto cutoff = r.integer("cutoff", 80, 2, kMaxSingleModeCutoff);
  const auto levels = r.integer("levels", 20, 1);
  if (cutoff && levels && *levels > *cutoff) r.error("levels", "must not exceed the cutoff");

  bool dos_ok = true;
  if (const json* v = r.find("dos")) {
    if (!v->is_object()) {
      r.error("dos", "must be an object");
      dos_ok = false;
    } else {
      Reader d = r.nested("dos", *v);
      d.reject_unknown({"xi", "bins", "cutoff", "fraction", "output"});
      const auto xi = d.real("xi");
      const auto bins = d.integer("bins", 60, 10);
      const auto dos_cutoff = d.integer("cutoff", cutoff.value_or(80), 2, kMaxSingleModeCutoff);
      const auto fraction = d.positive("fraction", 0.8);
      if (fraction && *fraction > 1.0) d.error("fraction", "must be in (0, 1]");
      const auto output = d.string("output");
      dos_ok = xi && bins && dos_cutoff && fraction && output;
      if (dos_ok) p.dos = DosParams{*xi, *bins, *dos_cutoff, *fraction, *output};
    }
  }
  if (!kerr || !grid || !cutoff || !levels || !dos_ok) return std::nullopt;
  p.kerr = *kerr;
  p.xi_grid = *grid;
  p.cutoff = *cutoff;
  p.levels = *levels;
  return p;
}

std::optional<DoubleWellRunParams> parse_doublewell(Reader& r) {
  r.reject_unknown({"k4", "k2", "k1", "mass", "cutoff", "levels"});
  const auto k4 = r.real("k4", 1.0);
  if (k4 && *k4 < 0.0) r.error("k4", "must be non-negative");
  const auto k2 = r.real("k2", 0.0);
  const auto k1 = r.real("k1", 0.0);
  const auto mass = r.positive("mass", 1.0);
  const auto cutoff = r.integer("cutoff", 80, 2, kMaxSingleModeCutoff);
  const auto levels = r.integer("levels", 10, 1);
  if (cutoff && levels && *levels > *cutoff) r.error("levels", "must not exceed the cutoff");
  if (k4 && k2 && *k4 == 0.0 && *k2 >= 0.0) {
    r.error("k2", "with k4 = 0 the potential is unbounded unless k2 < 0");
  }
  if (!k4 || *k4 < 0.0 || !k2 || !k1 || !mass || !cutoff || !levels) return std::nullopt;
  DoubleWellRunParams p;
  p.well = {*k4, *k2, *k1, *mass, *cutoff};
  p.levels = *levels;
  return p;
}

std::optional<Eigen::MatrixXd> inline_edges(Reader& r) {
  const json* v = r.find("edges");
  if (!v->is_array()) {
    r.error("edges", "must be a list of [i, j] or [i, j, weight]");
    return std::nullopt;
  }
  std::ostringstream text;
  for (std::size_t e = 0; e < v->size(); ++e) {
    const json& edge = (*v)[e];
    const bool shape_ok = edge.is_array() && (edge.size() == 2 || edge.size() == 3) &&
                          edge[0].is_number_integer() && edge[1].is_number_integer() &&
                          (edge.size() == 2 || edge[2].is_number());
    if (!shape_ok) {
      r.error("edges", "edge " + std::to_string(e) + " must be [i, j] or [i, j, weight]");
      return std::nullopt;
    }
    text << edge[0].get<long long>() << ' ' << edge[1].get<long long>();
    if (edge.size() == 3) text << ' ' << format_real(edge[2].get<double>());
    text << '\n';
  }
  const auto vertices = r.integer("vertices", 0, 0, kMaxHafnianDimension);
  if (!vertices) return std::nullopt;
  std::istringstream in(text.str());
  try {
    GraphAdjacency g = read_edge_list(in, *vertices);
    return g.matrix();
  } catch (const DomainError& e) {
    r.error("edges", e.what());
    return std::nullopt;
  }
}

std::optional<HafnianParams> parse_hafnian(Reader& r, const std::filesystem::path& base_dir) {
  r.reject_unknown({"adjacency", "edges", "vertices", "edge_list"});
  const int sources = (r.find("adjacency") != nullptr) + (r.find("edges") != nullptr) +
                      (r.find("edge_list") != nullptr);
  if (sources != 1) {
    r.error("adjacency", "give exactly one of adjacency, edges, edge_list");
    return std::nullopt;
  }
  std::optional<Eigen::MatrixXd> a;
  std::string source = "adjacency";
  if (r.find("adjacency") != nullptr) {
    const auto m = r.square_matrix("adjacency");
    if (m) {
      if (m->imag().cwiseAbs().maxCoeff() != 0.0) r.error("adjacency", "entries must be real");
      else a = m->real();
    }
  } else if (r.find("edges") != nullptr) {
    source = "edges";
    a = inline_edges(r);
  } else {
    source = "edge_list";
    const auto file = r.string("edge_list");
    if (!file) return std::nullopt;
    const std::filesystem::path path = base_dir / *file;
    std::ifstream in(path);
    if (!in) throw IoError("cannot read edge list " + path.string());
    const auto vertices = r.integer("vertices", 0, 0, kMaxHafnianDimension);
    if (!vertices) return std::nullopt;
    try {
      a = read_edge_list(in, *vertices).matrix();
    } catch (const DomainError& e) {
      r.error("edge_list", e.what());
    }
  }
  if (!a) return std::nullopt;
  if (a->rows() > kMaxHafnianDimension) {
    r.error(source, "graph has " + std::to_string(a->rows()) + " vertices; the exact limit is " +
                        std::to_string(kMaxHafnianDimension));
    return std::nullopt;
  }
  try {
    GraphAdjacency g(*a);
  } catch (const DomainError& e) {
    r.error(source, e.what());
    return std::nullopt;
  }
  return HafnianParams{*a};
}

std::optional<QpeRunParams> parse_qpe(Reader& r) {
  r.reject_unknown({"d", "t", "phases", "eigenstate_index", "unitary", "eigenstate", "shots", "seed"});
  const auto d = r.integer("d", std::nullopt, 2);
  const auto t = r.integer("t", std::nullopt, 1);
  const auto shots = r.count("shots", 0);
  const auto seed = r.count("seed", 0);
  if (!d || !t || !shots || !seed) return std::nullopt;
  long long dimension = *d;
  for (int q = 0; q < *t && dimension <= kMaxQpeDimension; ++q) dimension *= *d;
  if (dimension > kMaxQpeDimension) {
    r.error("t", "register dimension d^(t+1) exceeds " + std::to_string(kMaxQpeDimension));
    return std::nullopt;
  }

  QpeRunParams p;
  p.spec.d = *d;
  p.spec.t = *t;
  p.shots = *shots;
  p.seed = *seed;
  const bool diagonal = r.find("phases") != nullptr;
  const bool explicit_u = r.find("unitary") != nullptr;
  if (diagonal == explicit_u) {
    r.error("phases", "give exactly one of phases or unitary");
    return std::nullopt;
  }
  if (diagonal) {
    if (r.find("eigenstate") != nullptr) r.error("eigenstate", "use eigenstate_index with phases");
    const auto phases = r.grid("phases");
    if (!phases) return std::nullopt;
    if (static_cast<int>(phases->size()) != *d) {
      r.error("phases", "must list d = " + std::to_string(*d) + " eigenphases");
      return std::nullopt;
    }
    const auto index = r.integer("eigenstate_index", 0, 0, *d - 1);
    if (!index) return std::nullopt;
    p.spec.unitary = Matrix::Zero(*d, *d);
    for (int j = 0; j < *d; ++j) {
      p.spec.unitary(j, j) = std::exp(Complex(0.0, 2.0 * std::numbers::pi * (*phases)[static_cast<std::size_t>(j)]));
    }
    p.spec.eigenstate = Vector::Zero(*d);
    p.spec.eigenstate(*index) = 1.0;
    return p;
  }
  if (r.find("eigenstate_index") != nullptr) r.error("eigenstate_index", "use eigenstate with unitary");
  const auto u = r.square_matrix("unitary");
  const auto psi = r.complex_vector("eigenstate");
  if (!psi) r.error("eigenstate", "missing required field");
  if (!u || !psi) return std::nullopt;
  if (u->rows() != *d) {
    r.error("unitary", "must be d x d");
    return std::nullopt;
  }
  if (psi->size() != *d) {
    r.error("eigenstate", "must have length d");
    return std::nullopt;
  }
  if ((u->adjoint() * *u - Matrix::Identity(*d, *d)).cwiseAbs().maxCoeff() > 1e-9) {
    r.error("unitary", "is not unitary within 1e-9");
    return std::nullopt;
  }
  if (std::abs(psi->norm() - 1.0) > 1e-9) {
    r.error("eigenstate", "must be normalized");
    return std::nullopt;
  }
  const Vector image = *u * *psi;
  const Complex lambda = psi->dot(image);
  if ((image - lambda * *psi).norm() > 1e-8) {
    r.error("eigenstate", "is not an eigenvector of the unitary");
    return std::nullopt;
  }
  p.spec.unitary = *u;
  p.spec.eigenstate = *psi;
  return p;
}

}  // namespace

std::string to_string(const Diagnostic& d) {
  std::string out = d.severity == Diagnostic::Severity::kError ? "error: " : "warning: ";
  if (!d.field.empty()) out += d.field + ": ";
  return out + d.message;
}

bool has_errors(std::span<const Diagnostic> diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(), [](const Diagnostic& d) {
    return d.severity == Diagnostic::Severity::kError;
  });
}

ParsedConfig parse_config(std::string_view text, const std::filesystem::path& base_dir) {
  ParsedConfig result;
  auto& diags = result.diagnostics;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    diags.push_back({Diagnostic::Severity::kError, "", std::string("invalid JSON: ") + e.what()});
    return result;
  }
  if (!doc.is_object()) {
    diags.push_back({Diagnostic::Severity::kError, "", "config must be a JSON object"});
    return result;
  }

  Reader top(doc, "", diags);
  top.reject_unknown({"experiment", "output", "params", "description", "threads"});
  ExperimentConfig config;
  const auto experiment = top.string("experiment");
  const auto output = top.string("output");
  const auto description = top.string("description", "");
  const auto threads = top.integer("threads", 1, 1, 256);
  if (output && output->empty()) top.error("output", "must not be empty");

  const json empty = json::object();
  const json* params_json = top.find("params");
  if (params_json == nullptr) {
    top.error("params", "missing required field");
    params_json = &empty;
  } else if (!params_json->is_object()) {
    top.error("params", "must be an object");
    params_json = &empty;
  }
  Reader params = top.nested("params", *params_json);

  std::optional<ExperimentParams> typed;
  if (experiment) {
    const std::string& e = *experiment;
    if (e == "vibronic") {
      if (auto p = parse_vibronic(params)) typed = std::move(*p);
    } else if (e == "sbm-evolve") {
      if (auto p = parse_sbm(params)) typed = std::move(*p);
    } else if (e == "kerrcat-sweep") {
      if (auto p = parse_kerr(params)) {
        if (p->dos) p->dos->output = base_dir / p->dos->output;
        typed = std::move(*p);
      }
    } else if (e == "doublewell") {
      if (auto p = parse_doublewell(params)) typed = std::move(*p);
    } else if (e == "hafnian") {
      if (auto p = parse_hafnian(params, base_dir)) typed = std::move(*p);
    } else if (e == "qpe") {
      if (auto p = parse_qpe(params)) typed = std::move(*p);
    } else {
      top.error("experiment",
                "unknown experiment '" + e +
                    "' (known: vibronic, sbm-evolve, kerrcat-sweep, doublewell, hafnian, qpe)");
    }
  }

  if (has_errors(diags) || !typed || !experiment || !output || !description || !threads) return result;
  config.experiment = *experiment;
  config.description = *description;
  config.output = base_dir / *output;
  config.threads = *threads;
  config.params = std::move(*typed);
  result.config = std::move(config);
  return result;
}

ParsedConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  if (in.bad()) throw IoError("cannot read config " + path.string());
  return parse_config(text.str(), path.parent_path());
}

}  // namespace qumode::lab
