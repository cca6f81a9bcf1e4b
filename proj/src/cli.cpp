#include "liecert/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <optional>
#include <sstream>
#include <vector>

#include "liecert/catalog.hpp"
#include "liecert/derivations.hpp"
#include "liecert/forms.hpp"
#include "liecert/holomorph.hpp"
#include "liecert/io.hpp"
#include "liecert/lie_algebra.hpp"
#include "liecert/quantum_torus.hpp"

namespace liecert {

using nlohmann::json;

namespace {

struct Report {
  json input = json::object();
  json results = json::object();
  Verdict verdict = Verdict::pass;
};

json mat_rows(const std::vector<Vec>& rows) {
  json a = json::array();
  for (const auto& r : rows) a.push_back(vec_to_json(r));
  return a;
}

json subspace_json(const Subspace& s) { return {{"dim", s.dim()}, {"basis", mat_rows(s.basis())}}; }

void print_subspace(std::ostream& out, const std::string& name, const Subspace& s) {
  out << name << ": dim " << s.dim() << '\n';
  for (const auto& v : s.basis()) out << "  " << format_vec(v) << '\n';
}

void print_certificate(std::ostream& out, const Certificate& c) {
  out << c.subject << ": " << to_string(c.verdict()) << '\n';
  for (const auto& cl : c.claims) {
    out << "  [" << (cl.holds ? "x" : " ") << "] " << cl.name;
    if (!cl.detail.empty()) out << " (" << cl.detail << ')';
    out << '\n';
  }
  if (!c.dims.empty()) {
    out << "  dims:";
    for (const auto& [k, v] : c.dims) out << ' ' << k << '=' << v;
    out << '\n';
  }
  if (!c.facts.empty()) {
    out << "  facts:";
    for (const auto& [k, v] : c.facts) out << ' ' << k << '=' << (v ? "true" : "false");
    out << '\n';
  }
  for (const auto& w : c.witnesses) {
    out << "  witness " << w.name << ":\n";
    for (const auto& r : w.rows) out << "    " << format_vec(r) << '\n';
  }
}

Report from_certificate(const Certificate& c) {
  Report r;
  r.results["certificate"] = certificate_to_json(c);
  r.verdict = c.verdict();
  return r;
}

/// Loads an algebra file and records its digest in the report.
ParsedAlgebra load(const std::string& path, Report& r, bool check_axioms = true) {
  const std::string text = read_file(path);
  r.input = {{"path", path}, {"digest", content_digest(text)}};
  return parse_algebra_text(text, check_axioms);
}

IntVec parse_int_list(const std::string& s) {
  IntVec out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    mpz_class z;
    if (item.empty() || z.set_str(item, 10) != 0)
      throw InputError(InputErrorKind::format, "--e", "'" + item + "' is not an integer");
    out.push_back(z);
  }
  return out;
}

CatalogSpec parse_part(const std::string& text, const Field& f) {
  CatalogSpec spec;
  spec.field = f;
  auto colon = text.find(':');
  spec.name = text.substr(0, colon);
  std::size_t param = 0;
  if (colon != std::string::npos) {
    try {
      std::size_t used = 0;
      param = std::stoul(text.substr(colon + 1), &used);
      if (used != text.size() - colon - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ArgumentError("bad part parameter in '" + text + "'");
    }
  }
  spec.n = spec.k = param;
  return spec;
}

struct TorusArgs {
  std::size_t n = 0;
  long long order = 0;
  std::string entries;
  std::string spec;
};

ExponentTorus load_torus(const TorusArgs& a, Report& r) {
  if (!a.spec.empty()) {
    const std::string text = read_file(a.spec);
    r.input = {{"path", a.spec}, {"digest", content_digest(text)}};
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw InputError(InputErrorKind::syntax, "byte " + std::to_string(e.byte), e.what());
    }
    return parse_torus_json(j);
  }
  if (a.n == 0) throw ArgumentError("torus needs --n and --e, or --spec FILE");
  IntVec e = parse_int_list(a.entries);
  if (e.size() != a.n * a.n)
    throw InputError(InputErrorKind::format, "--e", "expected " + std::to_string(a.n * a.n) + " entries");
  IntMat m(a.n, a.n);
  for (std::size_t i = 0; i < e.size(); ++i) m(i / a.n, i % a.n) = e[i];
  std::ostringstream canon;
  canon << "n=" << a.n << ";N=" << a.order << ";E=" << a.entries;
  r.input = {{"path", nullptr}, {"digest", content_digest(canon.str())}};
  return ExponentTorus(mpz_class(static_cast<long>(a.order)), std::move(m));
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact certificates for derivation algebras, holomorphs and completeness", "liecert"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string json_path;
  app.add_option("--json", json_path, "write the machine-readable report here");

  std::string file, emit, out_path, cat_name;
  std::size_t max_levels = 5, cat_n = 0, cat_k = 0;
  std::uint64_t cat_p = 0;
  std::vector<std::string> parts;
  long box = 3;
  TorusArgs torus;

  std::function<Report()> action;
  auto file_cmd = [&](const char* name, const char* help) {
    auto* sc = app.add_subcommand(name, help);
    sc->add_option("FILE", file, "algebra file")->required();
    return sc;
  };

  auto* validate_cmd = file_cmd("validate", "check antisymmetry and the Jacobi identity");
  validate_cmd->callback([&] {
    action = [&] {
      Report r;
      const auto p = load(file, r, false);
      Certificate c = validate(p.algebra);
      print_certificate(out, c);
      r.results["dim"] = p.algebra.dim();
      r.results["certificate"] = certificate_to_json(c);
      r.verdict = c.verdict();
      return r;
    };
  });

  file_cmd("center", "basis of the center")->callback([&] {
    action = [&] {
      Report r;
      const auto p = load(file, r);
      const Subspace z = center(p.algebra);
      print_subspace(out, "center", z);
      r.results["center"] = subspace_json(z);
      return r;
    };
  });

  file_cmd("derived", "basis of [g,g]")->callback([&] {
    action = [&] {
      Report r;
      const auto p = load(file, r);
      const Subspace d = derived_subalgebra(p.algebra);
      print_subspace(out, "derived", d);
      out << "perfect: " << (d.dim() == p.algebra.dim() ? "true" : "false") << '\n';
      r.results["derived"] = subspace_json(d);
      r.results["perfect"] = d.dim() == p.algebra.dim();
      return r;
    };
  });

  auto* der_cmd = file_cmd("der", "derivation algebra basis and dimensions");
  der_cmd->add_option("--emit-algebra", emit, "write Der g as an algebra file");
  der_cmd->callback([&] {
    action = [&] {
      Report r;
      const auto p = load(file, r);
      const DerivationSpace d = derivation_basis(p.algebra);
      const std::size_t n = p.algebra.dim();
      out << "der: dim " << d.dim() << ", inner " << d.inner.dim() << ", outer " << d.dim() - d.inner.dim() << '\n';
      json basis = json::array();
      for (std::size_t k = 0; k < d.basis.size(); ++k) {
        out << "  " << d.der_algebra.labels()[k] << " = " << format_vec(d.basis[k].flatten()) << '\n';
        basis.push_back(mat_to_json(d.basis[k]));
      }
      r.results["dims"] = {{"dim", n}, {"der", d.dim()}, {"inner", d.inner.dim()}, {"outer", d.dim() - d.inner.dim()}};
      r.results["basis"] = std::move(basis);
      r.results["inner"] = subspace_json(d.inner);
      if (!emit.empty()) {
        write_json_file(emit, algebra_to_json(d.der_algebra));
        out << "wrote " << emit << '\n';
      }
      return r;
    };
  });

  file_cmd("complete", "zero center and every derivation inner")->callback([&] {
    action = [&] {
      Report r;
      const auto p = load(file, r);
      const Certificate c = is_complete(p.algebra);
      print_certificate(out, c);
      Report rep = from_certificate(c);
      rep.input = r.input;
      return rep;
    };
  });

  auto* hol_cmd = file_cmd("holomorph", "build g + Der g with its bracket");
  hol_cmd->add_option("--emit-algebra", emit, "write the holomorph as an algebra file");
  hol_cmd->callback([&] {
    action = [&] {
      Report r;
      const auto p = load(file, r);
      const Holomorph h = build_holomorph(p.algebra);
      out << "holomorph: dim " << h.algebra.dim() << " (g " << h.g_dim << " + der " << h.der_dim << ")\n";
      r.results["dims"] = {{"dim", h.algebra.dim()}, {"g", h.g_dim}, {"der", h.der_dim}};
      r.results["algebra"] = algebra_to_json(h.algebra);
      if (!emit.empty()) {
        write_json_file(emit, algebra_to_json(h.algebra));
        out << "wrote " << emit << '\n';
      }
      return r;
    };
  });

  auto* tower_cmd = file_cmd("tower", "g, Der g, Der Der g, ... until complete");
  tower_cmd->add_option("--max", max_levels, "maximum number of derivation steps")->capture_default_str();
  tower_cmd->callback([&] {
    action = [&] {
      Report r;
      const auto p = load(file, r);
      const TowerReport t = derivation_tower(p.algebra, max_levels);
      out << "tower dims:";
      for (auto d : t.dims) out << ' ' << d;
      out << "\nstatus: " << to_string(t.status) << '\n';
      r.results["dims"] = t.dims;
      r.results["status"] = to_string(t.status);
      r.verdict = t.status == TowerStatus::complete_reached ? Verdict::pass : Verdict::fail;
      return r;
    };
  });

  file_cmd("verify", "completeness theorem certificate")->callback([&] {
    action = [&] {
      Report r;
      const auto p = load(file, r);
      const Certificate c = verify_completeness_theorem(p.algebra);
      print_certificate(out, c);
      if (c.applicable) {
        const bool hol = c.facts.at("holomorph_complete"), oc = c.facts.at("outer_centerless");
        out << "(i) Der g complete: " << (c.facts.at("der_complete") ? "true" : "false") << '\n';
        out << "(ii) holomorph complete: " << (hol ? "true" : "false")
            << ", outer center zero: " << (oc ? "true" : "false") << '\n';
      }
      Report rep = from_certificate(c);
      rep.input = r.input;
      return rep;
    };
  });

  file_cmd("form", "invariance, nondegeneracy and [g,g]^perp = C(g)")->callback([&] {
    action = [&] {
      Report r;
      const auto p = load(file, r);
      const bool given = p.form.has_value();
      const BilinearForm b = given ? *p.form : killing_form(p.algebra);
      out << "form: " << (given ? "from file" : "Killing") << '\n';
      const Certificate c = check_perp_center(b, p.algebra);
      print_certificate(out, c);
      Report rep = from_certificate(c);
      rep.input = r.input;
      rep.results["form"] = {{"source", given ? "file" : "killing"}, {"gram", mat_to_json(b.gram())}};
      return rep;
    };
  });

  auto* torus_cmd = app.add_subcommand("torus", "quantum torus exponent computations");
  torus_cmd->require_subcommand(1);
  auto torus_opts = [&](CLI::App* sc) {
    sc->add_option("--n", torus.n, "number of generators");
    sc->add_option("--order", torus.order, "order N of the root of unity, 0 for generic q");
    sc->add_option("--e", torus.entries, "E row-major, comma separated");
    sc->add_option("--spec", torus.spec, "torus JSON file {n, N, E}");
  };
  auto* rad_cmd = torus_cmd->add_subcommand("rad", "lattice basis of rad(f)");
  torus_opts(rad_cmd);
  rad_cmd->callback([&] {
    action = [&] {
      Report r;
      const ExponentTorus t = load_torus(torus, r);
      const auto rad = radical_basis(t);
      out << "rad(f): rank " << rad.size() << '\n';
      json basis = json::array();
      for (const auto& v : rad) {
        basis.push_back(int_vec_to_json(v));
        out << " ";
        for (const auto& x : v) out << ' ' << x;
        out << '\n';
      }
      r.results["rank"] = rad.size();
      r.results["basis"] = std::move(basis);
      return r;
    };
  });
  auto* graded_cmd = torus_cmd->add_subcommand("graded", "central/commutator split of a degree box");
  torus_opts(graded_cmd);
  graded_cmd->add_option("--box", box, "box radius")->capture_default_str();
  graded_cmd->callback([&] {
    action = [&] {
      Report r;
      const ExponentTorus t = load_torus(torus, r);
      const GradedCheck g = graded_decomposition_check(t, box);
      print_certificate(out, g.certificate);
      Report rep = from_certificate(g.certificate);
      rep.input = r.input;
      return rep;
    };
  });

  auto* cat_cmd = app.add_subcommand("catalog", "write a named example algebra");
  cat_cmd->add_option("NAME", cat_name, "abelian, heisenberg, affine2, sl, current_sl2, direct_sum")->required();
  cat_cmd->add_option("--n", cat_n, "size parameter for abelian and sl");
  cat_cmd->add_option("--k", cat_k, "truncation for current_sl2");
  cat_cmd->add_option("--p", cat_p, "prime field characteristic (default: rationals)");
  cat_cmd->add_option("--part", parts, "direct_sum part as name[:param]");
  cat_cmd->add_option("--out", out_path, "output file")->required();
  cat_cmd->callback([&] {
    action = [&] {
      Report r;
      CatalogSpec spec;
      spec.name = cat_name;
      spec.n = cat_n;
      spec.k = cat_k;
      spec.field = cat_p == 0 ? Field::rationals() : Field::prime(cat_p);
      for (const auto& part : parts) spec.parts.push_back(parse_part(part, spec.field));
      const LieAlgebra l = build_named(spec);
      const json j = algebra_to_json(l);
      write_json_file(out_path, j);
      out << "wrote " << out_path << ": " << cat_name << " over " << l.field().name() << ", dim " << l.dim() << '\n';
      r.input = {{"path", nullptr}, {"digest", content_digest(j.dump())}};
      r.results["dim"] = l.dim();
      r.results["path"] = out_path;
      return r;
    };
  });

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_pass : exit_input;
  }

  json report;
  report["command"] = json(std::vector<std::string>(args.begin(), args.end()));
  int code = exit_pass;
  try {
    Report r = action();
    report["input"] = r.input;
    report["results"] = std::move(r.results);
    report["verdict"] = to_string(r.verdict);
    code = r.verdict == Verdict::fail ? exit_fail : exit_pass;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    if (e.triple) err << "violating triple: " << (*e.triple)[0] << ' ' << (*e.triple)[1] << ' ' << (*e.triple)[2] << '\n';
    report["error"] = {{"kind", to_string(e.kind())}, {"location", e.location()}, {"message", e.what()}};
    if (e.triple) report["error"]["triple"] = *e.triple;
    code = exit_input;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    report["error"] = {{"kind", "internal"}, {"message", e.what()}};
    code = exit_internal;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    report["error"] = {{"kind", "argument"}, {"message", e.what()}};
    code = exit_input;
  }
  if (!json_path.empty()) {
    try {
      write_json_file(json_path, report);
    } catch (const InputError& e) {
      err << "error: " << e.what() << '\n';
      return exit_input;
    }
  }
  return code;
}

}  // namespace liecert
