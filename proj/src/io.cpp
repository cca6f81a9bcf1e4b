#include "liecert/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

namespace liecert {

using nlohmann::json;

const char* to_string(InputErrorKind k) {
  switch (k) {
    case InputErrorKind::io:
      return "io";
    case InputErrorKind::syntax:
      return "syntax";
    case InputErrorKind::format:
      return "format";
    case InputErrorKind::index:
      return "index";
    case InputErrorKind::axiom:
      return "axiom";
  }
  return "?";
}

InputError::InputError(InputErrorKind kind, std::string location, const std::string& message)
    : Error(std::string(to_string(kind)) + " error at " + location + ": " + message),
      kind_(kind),
      location_(std::move(location)) {}

namespace {

[[noreturn]] void format_error(const std::string& where, const std::string& msg) {
  throw InputError(InputErrorKind::format, where, msg);
}

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) format_error(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) format_error(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t as_index(const json& j, const std::string& where) {
  if (!j.is_number_integer()) format_error(where, "expected an integer");
  if (j.is_number_unsigned()) return j.get<std::size_t>();
  auto v = j.get<long long>();
  if (v < 0) throw InputError(InputErrorKind::index, where, "negative index " + std::to_string(v));
  return static_cast<std::size_t>(v);
}

Scalar as_scalar(const Field& f, const json& j, const std::string& where) {
  try {
    if (j.is_string()) return f.parse(j.get<std::string>());
    if (j.is_number_integer()) return f.parse(j.dump());
  } catch (const ArgumentError& e) {
    format_error(where, e.what());
  }
  format_error(where, "coefficients must be exact strings such as \"3/2\"");
}

void check_index(std::size_t v, std::size_t dim, const std::string& where) {
  if (v >= dim)
    throw InputError(InputErrorKind::index, where,
                     "index " + std::to_string(v) + " out of range for dimension " + std::to_string(dim));
}

}  // namespace

json field_to_json(const Field& f) {
  if (f.is_rational()) return {{"kind", "rational"}};
  return {{"kind", "prime"}, {"p", f.characteristic()}};
}

Field field_from_json(const json& j, const std::string& location) {
  const auto& kind = member(j, "kind", location);
  if (!kind.is_string()) format_error(location + "/kind", "expected a string");
  const auto k = kind.get<std::string>();
  if (k == "rational") return Field::rationals();
  if (k == "prime") {
    const auto& p = member(j, "p", location);
    if (!p.is_number_integer() || p.get<long long>() <= 0) format_error(location + "/p", "expected a positive integer");
    try {
      return Field::prime(p.get<std::uint64_t>());
    } catch (const ArgumentError& e) {
      format_error(location + "/p", e.what());
    }
  }
  format_error(location + "/kind", "unknown field kind \"" + k + "\"");
}

json vec_to_json(std::span<const Scalar> v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(s.to_string());
  return a;
}

json mat_to_json(const Mat& m) {
  json a = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(vec_to_json(m.row(r)));
  return a;
}

json int_vec_to_json(std::span<const mpz_class> v) {
  json a = json::array();
  for (const auto& x : v) {
    if (x.fits_slong_p())
      a.push_back(x.get_si());
    else
      a.push_back(x.get_str());
  }
  return a;
}

ParsedAlgebra parse_algebra_json(const json& j, bool check_axioms) {
  if (!j.is_object()) format_error("/", "expected an object");
  const Field f = field_from_json(member(j, "field", "/"));
  const std::size_t dim = as_index(member(j, "dim", "/"), "/dim");

  const auto& basis = member(j, "basis", "/");
  if (!basis.is_array()) format_error("/basis", "expected an array of labels");
  if (basis.size() != dim)
    format_error("/basis", std::to_string(basis.size()) + " labels for dimension " + std::to_string(dim));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!basis[i].is_string()) format_error("/basis/" + std::to_string(i), "expected a string");
    labels.push_back(basis[i].get<std::string>());
  }

  StructureTable table(f, dim);
  const auto& entries = member(j, "table", "/");
  if (!entries.is_array()) format_error("/table", "expected an array");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const std::string at = "/table/" + std::to_string(e);
    const auto& entry = entries[e];
    const std::size_t i = as_index(member(entry, "i", at), at + "/i");
    const std::size_t jj = as_index(member(entry, "j", at), at + "/j");
    check_index(i, dim, at + "/i");
    check_index(jj, dim, at + "/j");
    if (i >= jj) format_error(at, "entries must have i < j");
    if (!seen.insert({i, jj}).second) format_error(at, "duplicate entry for this pair");
    const auto& coeffs = member(entry, "coeffs", at);
    if (!coeffs.is_array()) format_error(at + "/coeffs", "expected an array of [k, coefficient]");
    Vec v = zero_vec(f, dim);
    for (std::size_t c = 0; c < coeffs.size(); ++c) {
      const std::string cat = at + "/coeffs/" + std::to_string(c);
      const auto& pair = coeffs[c];
      if (!pair.is_array() || pair.size() != 2) format_error(cat, "expected [k, coefficient]");
      const std::size_t k = as_index(pair[0], cat + "/0");
      check_index(k, dim, cat + "/0");
      v[k] += as_scalar(f, pair[1], cat + "/1");
    }
    table.set(i, jj, v);
  }
  LieAlgebra l(std::move(labels), std::move(table));

  std::optional<BilinearForm> form;
  if (auto it = j.find("form"); it != j.end()) {
    if (!it->is_array() || it->size() != dim) format_error("/form", "expected a dim x dim matrix");
    Mat g(f, dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
      const auto& row = (*it)[r];
      const std::string rat = "/form/" + std::to_string(r);
      if (!row.is_array() || row.size() != dim) format_error(rat, "expected a row of length dim");
      for (std::size_t c = 0; c < dim; ++c) g(r, c) = as_scalar(f, row[c], rat + "/" + std::to_string(c));
    }
    try {
      form.emplace(std::move(g));
    } catch (const ShapeError& e) {
      format_error("/form", e.what());
    }
  }

  if (check_axioms) {
    try {
      require_valid(l);
    } catch (const AxiomError& e) {
      InputError err(InputErrorKind::axiom, "/table", e.what());
      err.triple = e.triple();
      throw err;
    }
  }
  return {std::move(l), std::move(form)};
}

ParsedAlgebra parse_algebra_text(std::string_view text, bool check_axioms) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(InputErrorKind::syntax, "byte " + std::to_string(e.byte), e.what());
  }
  return parse_algebra_json(j, check_axioms);
}

ParsedAlgebra parse_algebra_file(const std::filesystem::path& path, bool check_axioms) {
  return parse_algebra_text(read_file(path), check_axioms);
}

json algebra_to_json(const LieAlgebra& l, const BilinearForm* form) {
  json j;
  j["field"] = field_to_json(l.field());
  j["dim"] = l.dim();
  j["basis"] = l.labels();
  json table = json::array();
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t k = i + 1; k < l.dim(); ++k) {
      const auto& v = l.table().upper(i, k);
      json coeffs = json::array();
      for (std::size_t c = 0; c < v.size(); ++c)
        if (!v[c].is_zero()) coeffs.push_back(json::array({c, v[c].to_string()}));
      if (!coeffs.empty()) table.push_back({{"i", i}, {"j", k}, {"coeffs", std::move(coeffs)}});
    }
  j["table"] = std::move(table);
  if (form) j["form"] = mat_to_json(form->gram());
  return j;
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InputError(InputErrorKind::io, path.string(), "cannot open for writing");
  out << j.dump(2) << '\n';
  if (!out) throw InputError(InputErrorKind::io, path.string(), "write failed");
}

ExponentTorus parse_torus_json(const json& j) {
  const std::size_t n = as_index(member(j, "n", "/"), "/n");
  const auto& order = member(j, "N", "/");
  if (!order.is_number_integer()) format_error("/N", "expected an integer");
  const auto& e = member(j, "E", "/");
  if (!e.is_array() || e.size() != n * n) format_error("/E", "expected n*n row-major integers");
  IntMat m(n, n);
  for (std::size_t i = 0; i < n * n; ++i) {
    if (!e[i].is_number_integer()) format_error("/E/" + std::to_string(i), "expected an integer");
    m(i / n, i % n) = static_cast<long>(e[i].get<long long>());
  }
  try {
    return ExponentTorus(mpz_class(static_cast<long>(order.get<long long>())), std::move(m));
  } catch (const Error& ex) {
    format_error("/E", ex.what());
  }
}

json certificate_to_json(const Certificate& c) {
  json j;
  j["subject"] = c.subject;
  j["applicable"] = c.applicable;
  j["verdict"] = to_string(c.verdict());
  json claims = json::array();
  for (const auto& cl : c.claims) claims.push_back({{"name", cl.name}, {"holds", cl.holds}, {"detail", cl.detail}});
  j["claims"] = std::move(claims);
  j["dims"] = c.dims;
  j["facts"] = c.facts;
  json ws = json::array();
  for (const auto& w : c.witnesses) {
    json rows = json::array();
    for (const auto& r : w.rows) rows.push_back(vec_to_json(r));
    ws.push_back({{"name", w.name}, {"rows", std::move(rows)}});
  }
  j["witnesses"] = std::move(ws);
  return j;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(InputErrorKind::io, path.string(), "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string content_digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

}  // namespace liecert
