#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "arcline/bounds.hpp"
#include "arcline/error.hpp"
#include "arcline/ff_search.hpp"
#include "arcline/line_locus.hpp"
#include "arcline/prolongation.hpp"
#include "arcline/schubert_oracle.hpp"
#include "cli.hpp"
#include "verify.hpp"

namespace arcline::cli {
namespace {

constexpr const char* kRationalCaveat = "rational, not geometric";

struct Rendered {
  Json payload = Json::object();
  std::string text;
};

std::string big(const BigInt& v) { return v.get_str(); }

Json class_json(const ChowClass& c) {
  Json arr = Json::array();
  for (const auto& [e, coeff] : c.terms()) arr.push_back({{"a", e.a}, {"b", e.b}, {"coeff", big(coeff)}});
  return arr;
}

Json schubert_json(const schubert::SchubertClass& c) {
  Json arr = Json::array();
  for (const auto& [p, coeff] : c.terms()) arr.push_back({{"a", p.a}, {"b", p.b}, {"coeff", big(coeff)}});
  return arr;
}

Json point_json(const ff::FFPoint& p) {
  Json arr = Json::array();
  for (auto x : p) arr.push_back(x);
  return arr;
}

BigInt gaussian_lines(unsigned n, std::uint64_t p) {
  // [n+1 choose 2]_p = (p^{n+1} - 1)(p^n - 1) / ((p^2 - 1)(p - 1))
  BigInt q(static_cast<unsigned long>(p)), a, b;
  mpz_pow_ui(a.get_mpz_t(), q.get_mpz_t(), n + 1);
  mpz_pow_ui(b.get_mpz_t(), q.get_mpz_t(), n);
  return (a - 1) * (b - 1) / ((q * q - 1) * (q - 1));
}

// Options per subcommand, filled by CLI11.
struct TypeOpts {
  unsigned ambient = 0;
  std::vector<unsigned> type;
  bool oracle = false;
  bool fano = false;
};

struct ContactOpts {
  unsigned ambient = 0;
  unsigned degree = 0;
  unsigned order = 0;
  std::optional<unsigned> sweep;
};

struct BoundOpts {
  unsigned dim = 0;
  std::optional<unsigned> codim;
  unsigned min_degree = 2;
  bool table = false;
};

struct ArcOpts {
  std::string poly;
  unsigned order = 0;
  bool full = false;
};

struct FFOpts {
  std::uint64_t prime = 0;
  unsigned ambient = 0;
  std::vector<std::string> polys;
  std::vector<long long> through;
  bool list = false;
  std::uint64_t max_lines = 50'000'000;
};

struct VerifyOpts {
  unsigned max_ambient = 8;
};

Json type_inputs(const TypeOpts& o) { return {{"ambient", o.ambient}, {"type", o.type}}; }

Rendered run_lines(const TypeOpts& o) {
  const CIType t(o.ambient, o.type);
  const LineCount lc = count_lines(t);
  Rendered r;
  r.payload["type"] = t.degrees();
  r.payload["ambient"] = t.ambient();
  r.payload["class"] = class_json(lc.certificate);
  r.payload["count"] = big(lc.value);
  std::ostringstream os;
  os << to_string(t) << "\nclass: " << to_string(lc.certificate) << "\nlines: " << lc.value << '\n';
  if (o.oracle) {
    const BigInt oc = schubert::oracle_count_lines(t);
    r.payload["oracle_count"] = big(oc);
    r.payload["agrees"] = oc == lc.value;
    os << "schubert oracle: " << oc << (oc == lc.value ? " (agrees)" : " (DISAGREES)") << '\n';
  }
  r.text = os.str();
  return r;
}

Rendered run_point_lines(const TypeOpts& o) {
  const CIType t(o.ambient, o.type);
  const LineCount lc = lines_through_point(t);
  Rendered r;
  r.payload["type"] = t.degrees();
  r.payload["ambient"] = t.ambient();
  r.payload["class"] = class_json(lc.certificate);
  r.payload["count"] = big(lc.value);
  std::ostringstream os;
  os << to_string(t) << "\nclass: " << to_string(lc.certificate) << "\nlines through a general point: " << lc.value
     << '\n';
  r.text = os.str();
  return r;
}

Rendered run_locus(const TypeOpts& o) {
  const CIType t(o.ambient, o.type);
  const ChowClass c = line_locus_class(t);
  Rendered r;
  r.payload["type"] = t.degrees();
  r.payload["ambient"] = t.ambient();
  r.payload["class"] = class_json(c);
  r.text = to_string(t) + "\nclass: " + to_string(c) + "\n";
  return r;
}

Rendered run_contact(const ContactOpts& o) {
  const ChowClass c = contact_class(o.ambient, o.degree, o.order);
  Rendered r;
  r.payload["ambient"] = o.ambient;
  r.payload["degree"] = o.degree;
  r.payload["order"] = o.order;
  r.payload["class"] = class_json(c);
  r.text = "class: " + to_string(c) + "\n";
  if (o.sweep) {
    const BigInt deg = swept_degree(c, *o.sweep);
    r.payload["sweep"] = *o.sweep;
    r.payload["swept_degree"] = big(deg);
    r.text += "swept degree: " + big(deg) + "\n";
  }
  return r;
}

Rendered run_bound(const BoundOpts& o) {
  BoundQuery q;
  q.dimension = o.dim;
  q.codim = o.codim;
  q.min_degree = o.min_degree;
  const auto types = enumerate_types(q);
  const auto b = bound(q);
  Rendered r;
  r.payload["dimension"] = o.dim;
  r.payload["codim"] = o.codim ? Json(*o.codim) : Json(nullptr);
  r.payload["min_degree"] = o.min_degree;
  r.payload["bound"] = b ? Json(big(*b)) : Json(nullptr);
  std::ostringstream os;
  os << "bound: " << (b ? big(*b) : std::string("none (no admissible type)")) << '\n';
  if (o.table) {
    Json rows = Json::array();
    std::size_t width = 0;
    for (const auto& tc : types) width = std::max(width, to_string(CIType(tc.ambient, tc.degrees)).size());
    for (const auto& tc : types) {
      rows.push_back({{"type", tc.degrees}, {"ambient", tc.ambient}, {"count", big(tc.count)}});
      os << "  " << std::left << std::setw(static_cast<int>(width)) << to_string(CIType(tc.ambient, tc.degrees))
         << "  " << tc.count << '\n';
    }
    r.payload["table"] = std::move(rows);
  }
  r.text = os.str();
  return r;
}

Rendered run_oracle(const TypeOpts& o) {
  const CIType t(o.ambient, o.type);
  Rendered r;
  r.payload["type"] = t.degrees();
  r.payload["ambient"] = t.ambient();
  const auto factors = schubert::chern_root_factors(t);
  const auto cls = schubert::to_schubert(schubert::symmetric_expand(factors), t.ambient());
  r.payload["schubert_class"] = schubert_json(cls);
  std::ostringstream os;
  os << to_string(t) << "\ntop Chern class: " << schubert::to_string(cls) << '\n';
  if (o.fano) {
    const BigInt deg = schubert::fano_degree(t);
    r.payload["fano_degree"] = big(deg);
    os << "Fano scheme degree: " << deg << '\n';
  } else {
    const BigInt n = schubert::oracle_count_lines(t);
    r.payload["count"] = big(n);
    os << "lines: " << n << '\n';
  }
  r.text = os.str();
  return r;
}

Rendered run_arc_ideal(const ArcOpts& o) {
  const SparsePoly f = parse_poly(o.poly);
  const ProlongedSystem sys = o.full ? full_expansion(f, o.order) : arc_ideal(f, o.order);
  Rendered r;
  r.payload["polynomial"] = to_string(f);
  r.payload["cutoff"] = sys.cutoff;
  Json eqs = Json::array();
  std::ostringstream os;
  for (std::size_t i = 0; i < sys.coefficients.size(); ++i) {
    const std::string text = to_string(sys.coefficients[i]);
    eqs.push_back({{"weight", i}, {"polynomial", text}});
    os << "f" << i << " = " << text << '\n';
  }
  r.payload["equations"] = std::move(eqs);
  r.text = os.str();
  return r;
}

Rendered run_ff_lines(const FFOpts& o) {
  if (o.prime > 0xFFFFFFFFULL) throw DomainError(Diagnosis::InvalidArgument, "prime must be below 2^31");
  ff::FFConfig cfg;
  cfg.prime = static_cast<std::uint32_t>(o.prime);
  cfg.ambient = o.ambient;
  for (const auto& text : o.polys) cfg.generators.push_back(parse_poly(text, o.ambient));
  const ff::LineSearch search(cfg);

  Rendered r;
  r.payload["prime"] = o.prime;
  r.payload["ambient"] = o.ambient;
  Json gens = Json::array();
  for (const auto& g : cfg.generators) gens.push_back(to_string(g));
  r.payload["generators"] = std::move(gens);

  std::vector<ff::FFLine> found;
  std::ostringstream os;
  if (o.through.empty()) {
    const BigInt total = gaussian_lines(o.ambient, o.prime);
    if (total > BigInt(static_cast<unsigned long>(o.max_lines))) {
      throw DomainError(Diagnosis::InvalidArgument, "search would visit " + big(total) + " lines, above --max-lines " +
                                                        std::to_string(o.max_lines));
    }
    found = search.lines();
    r.payload["mode"] = "all";
    r.payload["searched"] = big(total);
    os << "F_" << o.prime << "-rational lines on the variety: " << found.size();
  } else {
    const ff::FFPoint pt = search.normalize(o.through);
    found = search.lines_through(pt);
    r.payload["mode"] = "through";
    r.payload["point"] = point_json(pt);
    os << "F_" << o.prime << "-rational lines through the point: " << found.size();
  }
  os << " (" << kRationalCaveat << ")\n";
  r.payload["count"] = found.size();
  r.payload["caveat"] = kRationalCaveat;
  if (o.list) {
    Json arr = Json::array();
    for (const auto& l : found) {
      arr.push_back({{"base", point_json(l.base)}, {"direction", point_json(l.direction)}});
      os << "  <" << point_json(l.base).dump() << ", " << point_json(l.direction).dump() << ">\n";
    }
    r.payload["lines"] = std::move(arr);
  }
  r.text = os.str();
  return r;
}

Rendered run_verify_cmd(const VerifyOpts& o, unsigned threads, bool& all_passed) {
  if (o.max_ambient < 3 || o.max_ambient > 12) {
    throw DomainError(Diagnosis::InvalidArgument, "--max-ambient must lie in 3..12");
  }
  const auto results = run_verify(o.max_ambient, threads);
  Rendered r;
  Json rows = Json::array();
  std::size_t width = 0;
  for (const auto& c : results) width = std::max(width, c.name.size());
  std::ostringstream os;
  all_passed = true;
  std::size_t failed = 0;
  for (const auto& c : results) {
    rows.push_back({{"name", c.name}, {"cases", c.cases}, {"passed", c.passed}, {"detail", c.detail}});
    all_passed = all_passed && c.passed;
    if (!c.passed) ++failed;
    os << (c.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << c.name << "  "
       << std::right << std::setw(6) << c.cases << " cases";
    if (!c.passed) os << "  " << c.detail;
    os << '\n';
  }
  os << results.size() - failed << "/" << results.size() << " checks passed\n";
  r.payload["checks"] = std::move(rows);
  r.payload["check_count"] = results.size();
  r.payload["all_passed"] = all_passed;
  r.text = os.str();
  return r;
}

}  // namespace

Outcome dispatch(const std::vector<std::string>& args) {
  CLI::App app{"Line counts on complete intersections via arc spaces", "arcline"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  bool json = false;
  TypeOpts type_opts;
  ContactOpts contact_opts;
  BoundOpts bound_opts;
  ArcOpts arc_opts;
  FFOpts ff_opts;
  VerifyOpts verify_opts;

  auto add_type = [&](CLI::App* sub) {
    sub->add_option("--ambient,-n", type_opts.ambient, "Ambient projective dimension n")->required();
    sub->add_option("--type,-t", type_opts.type, "Degrees d1,d2,...")->required()->delimiter(',');
    sub->add_flag("--json", json, "Emit a JSON report");
  };

  auto* lines = app.add_subcommand("lines", "Number of lines on a generic complete intersection");
  add_type(lines);
  lines->add_flag("--oracle", type_opts.oracle, "Cross-check with the Schubert-calculus oracle");

  auto* point_lines = app.add_subcommand("point-lines", "Number of lines through a general point");
  add_type(point_lines);

  auto* locus = app.add_subcommand("locus", "Normal form of the line-locus class");
  add_type(locus);

  auto* contact = app.add_subcommand("contact", "Class of arcs with contact order at least k");
  contact->add_option("--ambient,-n", contact_opts.ambient, "Ambient projective dimension n")->required();
  contact->add_option("--degree,-d", contact_opts.degree, "Hypersurface degree")->required();
  contact->add_option("--order,-k", contact_opts.order, "Contact order k, 1..d+1")->required();
  contact->add_option("--sweep", contact_opts.sweep, "Fiber codimension; report the degree of the swept locus");
  contact->add_flag("--json", json, "Emit a JSON report");

  auto* bnd = app.add_subcommand("bound", "Upper bound for lines through a general point");
  bnd->add_option("--dim,-m", bound_opts.dim, "Variety dimension m")->required();
  bnd->add_option("--codim,-r", bound_opts.codim, "Fix the codimension r");
  bnd->add_option("--min-degree", bound_opts.min_degree, "Least allowed degree")->capture_default_str();
  bnd->add_flag("--table", bound_opts.table, "List every admissible type");
  bnd->add_flag("--json", json, "Emit a JSON report");

  auto* oracle = app.add_subcommand("oracle", "Schubert-calculus line count on G(2,n+1)");
  add_type(oracle);
  oracle->add_flag("--fano", type_opts.fano, "Plucker degree of the Fano scheme of lines");

  auto* arc = app.add_subcommand("arc-ideal", "Prolonged equations f0..fm of a polynomial");
  arc->add_option("--poly,-p", arc_opts.poly, "Polynomial in x0, x1, ...")->required();
  arc->add_option("--order,-m", arc_opts.order, "Arc order m")->required();
  arc->add_flag("--full", arc_opts.full, "Keep every coefficient up to d*m (homogeneous input)");
  arc->add_flag("--json", json, "Emit a JSON report");

  auto* ffl = app.add_subcommand("ff-lines", "Brute-force line count over F_p");
  ffl->add_option("--prime,-p", ff_opts.prime, "Prime modulus")->required();
  ffl->add_option("--ambient,-n", ff_opts.ambient, "Ambient projective dimension n")->required();
  ffl->add_option("--poly", ff_opts.polys, "Defining equation; repeat for several");
  ffl->add_option("--through", ff_opts.through, "Count lines through this point c0,c1,...")->delimiter(',');
  ffl->add_flag("--list", ff_opts.list, "Print every line found");
  ffl->add_option("--max-lines", ff_opts.max_lines, "Refuse searches larger than this")->capture_default_str();
  ffl->add_flag("--json", json, "Emit a JSON report");

  auto* ver = app.add_subcommand("verify", "Run every cross-module check");
  ver->add_option("--max-ambient", verify_opts.max_ambient, "Largest ambient dimension swept, 3..12")
      ->capture_default_str();
  ver->add_flag("--json", json, "Emit a JSON report");

  Outcome out;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, err;
    const int code = app.exit(e, o, err);
    out.out = o.str();
    out.err = err.str();
    out.exit_code = code == 0 ? 0 : 2;
    return out;
  }

  CLI::App* sub = app.get_subcommands().front();
  RunReport report;
  report.command = sub->get_name();
  std::function<Rendered()> body;
  bool verify_passed = true;

  if (sub == lines || sub == point_lines || sub == locus || sub == oracle) {
    report.inputs = type_inputs(type_opts);
    if (sub == lines) {
      report.inputs["oracle"] = type_opts.oracle;
      body = [&] { return run_lines(type_opts); };
    } else if (sub == point_lines) {
      body = [&] { return run_point_lines(type_opts); };
    } else if (sub == locus) {
      body = [&] { return run_locus(type_opts); };
    } else {
      report.inputs["fano"] = type_opts.fano;
      body = [&] { return run_oracle(type_opts); };
    }
  } else if (sub == contact) {
    report.inputs = {{"ambient", contact_opts.ambient}, {"degree", contact_opts.degree}, {"order", contact_opts.order}};
    report.inputs["sweep"] = contact_opts.sweep ? Json(*contact_opts.sweep) : Json(nullptr);
    body = [&] { return run_contact(contact_opts); };
  } else if (sub == bnd) {
    report.inputs = {{"dim", bound_opts.dim}};
    report.inputs["codim"] = bound_opts.codim ? Json(*bound_opts.codim) : Json(nullptr);
    report.inputs["min_degree"] = bound_opts.min_degree;
    report.inputs["table"] = bound_opts.table;
    body = [&] { return run_bound(bound_opts); };
  } else if (sub == arc) {
    report.inputs = {{"poly", arc_opts.poly}, {"order", arc_opts.order}, {"full", arc_opts.full}};
    body = [&] { return run_arc_ideal(arc_opts); };
  } else if (sub == ffl) {
    report.inputs = {{"prime", ff_opts.prime}, {"ambient", ff_opts.ambient}, {"poly", ff_opts.polys}};
    report.inputs["through"] = ff_opts.through.empty() ? Json(nullptr) : Json(ff_opts.through);
    body = [&] { return run_ff_lines(ff_opts); };
  } else {
    const unsigned threads = thread_cap();
    report.inputs = {{"max_ambient", verify_opts.max_ambient}, {"threads", threads}};
    body = [&, threads] { return run_verify_cmd(verify_opts, threads, verify_passed); };
  }

  auto fail = [&](int code, Json error, const std::string& line) {
    out.exit_code = code;
    if (json) {
      Json j = Json::object();
      j["command"] = report.command;
      j["inputs"] = report.inputs;
      j["error"] = std::move(error);
      out.out = j.dump(2) + "\n";
    } else {
      out.err = "arcline " + report.command + ": " + line + "\n";
    }
  };

  try {
    const auto start = std::chrono::steady_clock::now();
    Rendered r = body();
    report.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.payload = std::move(r.payload);
    out.out = json ? report.to_json().dump(2) + "\n" : r.text;
    out.exit_code = verify_passed ? 0 : 1;
    out.report = std::move(report);
  } catch (const DomainError& e) {
    const std::string name(diagnosis_name(e.diagnosis()));
    fail(1, {{"kind", "domain"}, {"diagnosis", name}, {"message", e.what()}}, name + ": " + e.what());
  } catch (const ParseError& e) {
    fail(2, {{"kind", "parse"}, {"position", e.position()}, {"message", e.what()}}, e.what());
  }
  return out;
}

}  // namespace arcline::cli
