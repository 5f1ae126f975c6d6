#include "kholo/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iterator>
#include <ostream>
#include <sstream>

#include "kholo/corpus.hpp"
#include "kholo/error.hpp"
#include "kholo/expr.hpp"

namespace kholo {

namespace {

constexpr std::size_t kMaxDimension = 16;

struct Options {
  std::size_t n = 0;  // 0: infer from the input
  std::string t = "t";
  double tol = numeric::kDefaultTolerance;
  unsigned bound = 5;
  std::string format = "doc";
  std::uint64_t seed = 1;
  std::vector<std::string> inputs;
};

// An argument naming an existing file is replaced by the file's contents.
std::string read_input(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return arg;
  std::ifstream in(arg, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidDocument, "cannot read '" + arg + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  return text;
}

void collect_indices(const Expr& e, std::size_t& n) {
  if (e.op == Expr::Op::Variable) {
    if (auto v = parse_variable_name(e.name); v && v->index > 0) n = std::max<std::size_t>(n, v->index);
    else if (e.name.size() == 1 && std::string_view("xyzw").find(e.name[0]) != std::string_view::npos) n = std::max<std::size_t>(n, 1);
  }
  for (const auto& a : e.args) collect_indices(a, n);
}

std::size_t dimension_for(const Options& o, const std::vector<std::string>& texts) {
  if (o.n != 0) {
    if (o.n > kMaxDimension) throw Error(ErrorKind::IndexOutOfRange, "-n must be at most " + std::to_string(kMaxDimension));
    return o.n;
  }
  std::size_t n = 1;
  for (const auto& text : texts) collect_indices(parse_expr(text), n);
  if (n > kMaxDimension) throw Error(ErrorKind::IndexOutOfRange, "inputs use more than " + std::to_string(kMaxDimension) + " coordinates");
  return n;
}

// "1, 1+i" -> {z1 = 1, z2 = 1+i}
Assignment parse_point(const std::string& text, std::size_t n) {
  Assignment point;
  std::size_t start = 0, k = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string part = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (++k > n) throw Error(ErrorKind::SyntaxError, "point '" + text + "' has more than " + std::to_string(n) + " coordinates");
    point[variable_name(VarKind::Z, static_cast<std::uint32_t>(k))] = parse_gaussian(part);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (k != n) throw Error(ErrorKind::IncompleteAssignment, "point '" + text + "' needs " + std::to_string(n) + " coordinates");
  return point;
}

void need_inputs(const Options& o, std::size_t count, const char* what) {
  if (o.inputs.size() != count) throw Error(ErrorKind::SyntaxError, std::string("expected ") + what);
}

struct Outcome {
  ReportDocument doc;
  bool verdict = true;
};

Outcome run_reconstruct(const Options& o) {
  need_inputs(o, 1, "one expression u");
  const std::string text = read_input(o.inputs[0]);
  const std::size_t n = dimension_for(o, {text});
  CartanReport r = reconstruct_from_real_part(parse_poly(text, VarSpace::real(n)));
  const bool ok = r.reconstructed;
  return {{"reconstruct", Json{{"u", text}, {"n", n}}, std::move(r)}, ok};
}

Outcome run_pluriharmonic(const Options& o) {
  need_inputs(o, 1, "one expression u");
  const std::string text = read_input(o.inputs[0]);
  const std::size_t n = dimension_for(o, {text});
  SparsePoly u = parse_poly(text, VarSpace::real(n));
  PluriharmonicCheck c = check_pluriharmonic(u);
  const bool ok = c.pluriharmonic;
  return {{"pluriharmonic", Json{{"u", text}, {"n", n}}, PluriharmonicReport{std::move(u), std::move(c)}}, ok};
}

Outcome run_verify_g(const Options& o) {
  need_inputs(o, 1, "one expression f");
  const std::string text = read_input(o.inputs[0]);
  const std::size_t n = dimension_for(o, {text});
  SparsePoly f = parse_poly(text, VarSpace::complex(n));
  GReport r{f, build_g(f), verify_g_holomorphic(f), restrict_g_identity(f)};
  const bool ok = r.holomorphy.holomorphic && r.identities.halving.equal && r.identities.real_slice.equal;
  return {{"verify-g", Json{{"f", text}, {"n", n}}, std::move(r)}, ok};
}

Outcome run_eliminate(const Options& o) {
  need_inputs(o, 2, "two expressions P1 P2");
  const std::string a = read_input(o.inputs[0]), b = read_input(o.inputs[1]);
  const std::size_t n = dimension_for(o, {a, b});
  const VarSpace space = VarSpace::real_t(n);
  const AnnihilatorPair pair(parse_poly(a, space), parse_poly(b, space));
  EliminationReport r = eliminate_annihilator(pair, o.bound);
  const bool ok = !r.degenerate;
  return {{"eliminate", Json{{"p1", a}, {"p2", b}, {"n", n}, {"bound", o.bound}}, std::move(r)}, ok};
}

Outcome run_discriminant(const Options& o) {
  need_inputs(o, 1, "one expression P");
  const std::string text = read_input(o.inputs[0]);
  const std::size_t n = dimension_for(o, {text});
  SparsePoly p = parse_poly(text, VarSpace::complex_t(n));
  if (o.t != "t") throw Error(ErrorKind::UnknownVariable, "the fiber variable must be 't'");
  SparsePoly d = discriminant(p, o.t);
  return {{"discriminant", Json{{"p", text}, {"n", n}, {"t", o.t}}, DiscriminantReport{std::move(p), o.t, std::move(d)}}, true};
}

Outcome run_fibers(const Options& o) {
  if (o.inputs.size() < 2) throw Error(ErrorKind::SyntaxError, "expected an expression P followed by sample points");
  const std::string text = read_input(o.inputs[0]);
  const std::size_t n = dimension_for(o, {text});
  if (o.t != "t") throw Error(ErrorKind::UnknownVariable, "the fiber variable must be 't'");
  const SparsePoly p = parse_poly(text, VarSpace::complex_t(n));
  std::vector<Assignment> path;
  Json points = Json::array();
  for (std::size_t k = 1; k < o.inputs.size(); ++k) {
    path.push_back(parse_point(o.inputs[k], n));
    points.push_back(o.inputs[k]);
  }
  BranchReport r = numeric::covering_check(p, path, o.tol, o.t);
  const bool ok = r.violations.empty() && r.covering_degree.has_value();
  return {{"fibers", Json{{"p", text}, {"n", n}, {"t", o.t}, {"tol", o.tol}, {"points", points}}, std::move(r)}, ok};
}

Outcome run_route(const Options& o) {
  need_inputs(o, 1, "one complex document");
  const std::string text = read_input(o.inputs[0]);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidDocument, e.what());
  }
  const RouteInput in = route_input_from_json(j);
  const Subcomplex marked(in.complex, in.marked, in.from, in.to);
  RouteReport r;
  r.path = route_path(in.complex, marked);
  r.avoidance = verify_avoidance(r.path, in.complex, marked);
  const bool ok = r.avoidance.avoids;
  return {{"route", route_input_to_json(in), std::move(r)}, ok};
}

Outcome run_selftest_command(const Options& o) {
  SelftestReport r = run_selftest(o.seed);
  bool ok = true;
  for (const auto& it : r.items) ok = ok && it.passed;
  return {{"selftest", Json{{"seed", o.seed}}, std::move(r)}, ok};
}

std::string plain_poly(const SparsePoly& p) { return print_poly(p); }

std::string plain(const ReportDocument& doc) {
  std::ostringstream out;
  auto yes = [](bool b) { return b ? "true" : "false"; };
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, CartanReport>) {
          out << "f = " << plain_poly(r.f) << "\nresidual = " << plain_poly(r.residual) << "\npluriharmonic = "
              << yes(r.pluriharmonic) << "\nreconstructed = " << yes(r.reconstructed) << "\n";
        } else if constexpr (std::is_same_v<T, PluriharmonicReport>) {
          out << "pluriharmonic = " << yes(r.check.pluriharmonic) << "\n";
          for (const auto& w : r.check.witnesses)
            out << "d2u/dz" << w.j << "dzbar" << w.k << " = " << plain_poly(w.value) << "\n";
        } else if constexpr (std::is_same_v<T, GReport>) {
          out << "g = " << plain_poly(r.g) << "\nholomorphic = " << yes(r.holomorphy.holomorphic)
              << "\nhalving = " << yes(r.identities.halving.equal) << "\nreal_slice = " << yes(r.identities.real_slice.equal) << "\n";
        } else if constexpr (std::is_same_v<T, EliminationReport>) {
          out << "basepoint = (";
          for (std::size_t k = 0; k < r.basepoint.x0.size(); ++k) out << (k ? ", " : "") << r.basepoint.x0[k] << "+" << r.basepoint.y0[k] << "*i";
          out << ")\nq1 = " << plain_poly(r.q1) << "\nq2 = " << plain_poly(r.q2) << "\nr = " << plain_poly(r.r)
              << "\ndegenerate = " << yes(r.degenerate) << "\n";
        } else if constexpr (std::is_same_v<T, DiscriminantReport>) {
          out << plain_poly(r.d) << "\n";
        } else if constexpr (std::is_same_v<T, BranchReport>) {
          out << "discriminant = " << plain_poly(r.d) << "\n";
          for (const auto& s : r.samples) {
            out << "sample";
            for (const auto& [name, value] : s.point) out << " " << name << "=" << to_string(value);
            out << ": " << s.fiber_count << " roots (exact " << s.exact_distinct << ")\n";
          }
          out << "covering_degree = " << (r.covering_degree ? std::to_string(*r.covering_degree) : "none") << "\n";
        } else if constexpr (std::is_same_v<T, RouteReport>) {
          for (const auto& w : r.path.waypoints) {
            out << "(";
            for (Eigen::Index k = 0; k < w.position.size(); ++k) out << (k ? ", " : "") << w.position(k).to_string();
            out << ")\n";
          }
          out << "avoids = " << yes(r.avoidance.avoids) << "\n";
        } else {
          for (const auto& it : r.items) out << (it.passed ? "PASS " : "FAIL ") << it.name << " " << it.detail << "\n";
        }
      },
      doc.result);
  return out.str();
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tools for holomorphic reconstruction, elimination, branch loci and simplicial routing", "kholo"};
  app.set_version_flag("--version", toolkit_version());
  app.require_subcommand(1);
  Options o;
  std::function<Outcome(const Options&)> run;

  auto add = [&](const std::string& name, const std::string& help, std::function<Outcome(const Options&)> fn,
                 const std::string& inputs_help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("-n", o.n, "number of complex coordinates (default: inferred)");
    sub->add_option("-t", o.t, "fiber variable");
    sub->add_option("--tol", o.tol, "root clustering tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--bound", o.bound, "basepoint search radius");
    sub->add_option("--format", o.format, "doc or plain")->check(CLI::IsMember({"doc", "plain"}));
    sub->add_option("--seed", o.seed, "corpus seed for selftest");
    if (!inputs_help.empty()) sub->add_option("inputs", o.inputs, inputs_help);
    sub->callback([&run, fn] { run = fn; });
  };
  add("reconstruct", "holomorphic f from a real part u(x, y)", run_reconstruct, "u (expression or file)");
  add("pluriharmonic", "test whether u(x, y) is pluriharmonic", run_pluriharmonic, "u (expression or file)");
  add("verify-g", "check g(z, w) built from f(z)", run_verify_g, "f (expression or file)");
  add("eliminate", "annihilating polynomial from P1(x, y, t), P2(x, y, t)", run_eliminate, "P1 P2 (expressions or files)");
  add("discriminant", "discriminant of P(z, t) in t", run_discriminant, "P (expression or file)");
  add("fibers", "fiber counts of P(z, t) at sample points", run_fibers, "P followed by points such as \"1,1+i\"");
  add("route", "barycentric path in a simplicial complex", run_route, "complex document (JSON text or file)");
  add("selftest", "randomized consistency run", run_selftest_command, "");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help, diag;
    const int code = app.exit(e, help, diag);
    out << help.str();
    err << diag.str();
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    Outcome result = run(o);
    out << (o.format == "plain" ? plain(result.doc) : serialize(result.doc)) << std::flush;
    return result.verdict ? kExitOk : kExitNegative;
  } catch (const Error& e) {
    err << "kholo: " << e.what() << "\n";
    if (e.kind() == ErrorKind::Disconnected) return kExitNegative;
    return e.is_internal() ? kExitInternal : kExitInput;
  } catch (const std::exception& e) {
    err << "kholo: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

SelftestReport run_selftest(std::uint64_t seed) {
  SelftestReport report{seed, {}};
  corpus::Rng rng(seed);
  auto record = [&](std::string name, const std::function<std::string()>& body) {
    SelftestItem item{std::move(name), false, ""};
    try {
      item.detail = body();
      item.passed = item.detail.empty();
      if (item.passed) item.detail = "ok";
    } catch (const std::exception& e) {
      item.detail = e.what();
    }
    report.items.push_back(std::move(item));
  };

  record("cartan round trip", [&]() -> std::string {
    for (int k = 0; k < 20; ++k) {
      const VarSpace space = VarSpace::complex(1 + static_cast<std::size_t>(k % 3));
      const SparsePoly f = corpus::random_poly(rng, space, {4, 5, 100, false, true});
      if (!(reconstruct_from_real_part(split_real_imag(f).re).f == f)) return "mismatch for f = " + print_poly(f);
    }
    return "";
  });
  record("g identities", [&]() -> std::string {
    for (int k = 0; k < 10; ++k) {
      const VarSpace space = VarSpace::complex(1 + static_cast<std::size_t>(k % 2));
      const SparsePoly f = corpus::random_poly(rng, space, {3, 4, 100, false, false});
      const auto ids = restrict_g_identity(f);
      if (!verify_g_holomorphic(f).holomorphic || !ids.halving.equal || !ids.real_slice.equal)
        return "failure for f = " + print_poly(f);
    }
    return "";
  });
  record("annihilator", [&]() -> std::string {
    for (int k = 0; k < 4; ++k) {
      const SparsePoly f = corpus::random_poly(rng, VarSpace::complex(1), {2, 3, 10, false, false});
      const auto parts = split_real_imag(f);
      const VarSpace space = VarSpace::real_t(1);
      const SparsePoly t = SparsePoly::variable(space, "t");
      const AnnihilatorPair pair(t - change_space(parts.re, space), t - change_space(parts.im, space));
      if (!verify_annihilator(eliminate_annihilator(pair).r, f)) return "failure for f = " + print_poly(f);
    }
    return "";
  });
  record("discriminant goldens", []() -> std::string {
    const VarSpace space = VarSpace::complex_t(1);
    const std::pair<const char*, const char*> cases[] = {{"t^2 - z1", "4*z1"}, {"t^2 + 2*t - z1", "4*z1 + 4"}, {"t^3 - z1", "-27*z1^2"}};
    for (const auto& [p, d] : cases)
      if (!(discriminant(parse_poly(p, space)) == parse_poly(d, VarSpace::complex(1)))) return std::string("wrong value for ") + p;
    return "";
  });
  record("parser round trip", [&]() -> std::string {
    for (int k = 0; k < 50; ++k) {
      const SparsePoly p = corpus::random_poly(rng, VarSpace::complex_t(2), {5, 6, 100, false, false});
      if (!(parse_poly(print_poly(p), p.space()) == p)) return "mismatch for " + print_poly(p);
    }
    return "";
  });
  record("router soundness", [&]() -> std::string {
    for (int k = 0; k < 10; ++k) {
      const auto grid = corpus::random_grid(rng);
      const Subcomplex marked(grid.complex, grid.marked, grid.from, grid.to);
      try {
        const PLPath path = route_path(grid.complex, marked);
        if (!verify_avoidance(path, grid.complex, marked).avoids) return "route meets a marked face in trial " + std::to_string(k);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Disconnected) throw;
      }
    }
    return "";
  });
  record("fiber counts", [&]() -> std::string {
    const SparsePoly p = parse_poly("t^2 - z1", VarSpace::complex_t(1));
    for (int k = 0; k < 5; ++k) {
      const Assignment z0{{"z1", corpus::random_gaussian(rng, 20)}};
      if (locus_membership(discriminant(p), z0)) continue;
      if (numeric::fiber_count(p, z0) != 2) return "wrong count at z1 = " + to_string(z0.at("z1"));
    }
    return "";
  });
  return report;
}

}  // namespace kholo
