#include "hpdt/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hpdt/json_io.hpp"
#include "hpdt/kernels.hpp"

namespace hpdt::cli {

namespace {

using io::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  bool csv = false;
  bool json_out = false;
  bool verbose = false;
  std::string kernel = "auto";
};

struct SearchFlags {
  unsigned threads = 1;
  std::string checkpoint;
  unsigned checkpoint_every = 256;

  SearchOptions options() const {
    SearchOptions o;
    o.threads = threads;
    if (!checkpoint.empty()) o.checkpoint = checkpoint;
    o.checkpoint_every = checkpoint_every;
    return o;
  }
};

void add_search_flags(CLI::App* sub, SearchFlags& f) {
  sub->add_option("--threads", f.threads, "worker threads")->envname("HPDT_THREADS")->check(CLI::PositiveNumber);
  sub->add_option("--checkpoint", f.checkpoint, "resume from / write progress to this file");
  sub->add_option("--checkpoint-every", f.checkpoint_every, "search-rs: r rows between checkpoint writes (taxicab writes after every batch of sum segments)")
      ->check(CLI::PositiveNumber);
}

bool is_gaussian_text(const std::string& s) { return s.find('i') != std::string::npos; }

Rational parse_rational(const std::string& s) {
  try {
    return Rational::parse(s);
  } catch (const std::exception&) {
    throw UsageError("not a rational number: '" + s + "'");
  }
}

GaussianRational parse_gauss(const std::string& s) {
  try {
    return parse_gaussian(s);
  } catch (const std::exception&) {
    throw UsageError("not a Gaussian rational: '" + s + "'");
  }
}

std::vector<Rational> parse_rationals(const std::vector<std::string>& v) {
  std::vector<Rational> out;
  for (const auto& s : v) out.push_back(parse_rational(s));
  return out;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void csv_row(std::ostream& out, std::initializer_list<std::string> cells) {
  bool first = true;
  for (const auto& c : cells) {
    if (!first) out << ',';
    out << csv_cell(c);
    first = false;
  }
  out << '\n';
}

std::string text_of(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

// ---------------------------------------------------------------------------
// verify

std::vector<json> read_records(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    buf << in.rdbuf();
  }
  const std::string text = buf.str();
  std::vector<json> records;
  try {
    records.push_back(json::parse(text));
    return records;
  } catch (const json::parse_error&) {
  }
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      records.push_back(json::parse(line));
    } catch (const json::parse_error& e) {
      throw UsageError(std::string("bad JSON input: ") + e.what());
    }
  }
  return records;
}

template <class T>
bool verify_and_print(const std::vector<T>& elems, int power, const Common& c, std::ostream& out) {
  const auto verdict = verify_tuple(elems, power);
  if (c.csv) {
    if (verdict.ok()) {
      for (const auto& [ij, w] : verdict.tuple->witnesses) {
        csv_row(out, {std::to_string(ij.first), std::to_string(ij.second), "ok", w.str()});
      }
    } else {
      for (const auto& f : verdict.failures) {
        csv_row(out, {std::to_string(f.pair.first), std::to_string(f.pair.second), "fail", f.value.str()});
      }
    }
  } else {
    emit(out, io::tuple_record(elems, power, verdict));
  }
  return verdict.ok();
}

int verify_strings(const std::vector<std::string>& texts, int power, const Common& c, std::ostream& out) {
  if (texts.size() < 2) throw UsageError("verify needs at least two elements");
  bool gaussian = false;
  for (const auto& t : texts) gaussian = gaussian || is_gaussian_text(t);
  bool ok;
  if (gaussian) {
    std::vector<GaussianRational> v;
    for (const auto& t : texts) v.push_back(parse_gauss(t));
    ok = verify_and_print(v, power, c, out);
  } else {
    ok = verify_and_print(parse_rationals(texts), power, c, out);
  }
  return ok ? kOk : kFalse;
}

// ---------------------------------------------------------------------------
// curve

template <class F>
json point_report(const Curve<F>& curve, const Point<F>& p) {
  return {{"point", io::to_json(p)}, {"on_curve", curve.on_curve(p)}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact construction, verification and search for higher-power Diophantine triples."};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_flag("--json", common.json_out, "JSON output (default)");
  app.add_flag("--csv", common.csv, "CSV output; columns are listed in each subcommand's help");
  app.add_flag("-v,--verbose", common.verbose, "run metadata on stderr");
  app.add_option("--kernel", common.kernel, "search kernels")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  // verify
  auto* verify = app.add_subcommand("verify", "check a_i a_j + 1 is a k-th power for all pairs");
  verify->footer("CSV columns: i,j,status,root_or_value");
  int verify_k = 4;
  std::vector<std::string> verify_elems;
  std::string verify_input;
  verify->add_option("--k", verify_k, "power")->check(CLI::Range(2, 64));
  verify->add_option("elements", verify_elems, "rationals p/q or Gaussian a+bi");
  verify->add_option("--input", verify_input, "JSON triple/tuple record(s); - for stdin");

  // construct
  auto* construct = app.add_subcommand("construct", "regular 2k-th power triple from (r, s)");
  construct->footer("CSV columns: k,r,s,t,a,b,c");
  std::string cr, cs;
  int ck = 2;
  construct->add_option("--r", cr, "r (rational or Gaussian)")->required();
  construct->add_option("--s", cs, "s (rational or Gaussian)")->required();
  construct->add_option("--k", ck, "half power: the triple is a 2k-th power triple")->check(CLI::Range(1, 32));

  // family
  auto* family = app.add_subcommand("family", "evaluate a parametric family (JSON-lines, one point per --param)");
  family->footer("CSV columns: family,param,r,s,t,a,b,c");
  std::string fam_id;
  std::vector<std::string> fam_params;
  std::string fam_k;
  family->add_option("id", fam_id, "fam1 fam2 fam2k fam3a fam3b fam4")->required();
  family->add_option("--param", fam_params, "parameter u (alpha for fam2)")->required();
  family->add_option("--k", fam_k, "k for fam2k");

  // prove-family
  auto* prove = app.add_subcommand("prove-family", "symbolic identity checks over Q(u)");
  prove->footer("CSV columns: subject,check,result");
  std::string prove_id;
  std::string prove_k = "2";
  prove->add_option("id", prove_id, "family id or 'all'")->required();
  prove->add_option("--k", prove_k, "k for fam2k");

  // curve
  auto* curve = app.add_subcommand("curve", "catalog curves and the group law");
  curve->footer("CSV columns: field,value");
  std::string curve_id;
  std::vector<std::string> curve_params, curve_point, curve_add;
  long curve_mul = 1;
  bool curve_torsion = false, curve_alpha_s = false;
  curve->add_option("id", curve_id, "E_r fam1 fam2k fam2 rsq sec7 cubicZ cubicK alpha2")->required();
  curve->add_option("--param", curve_params, "curve parameters");
  curve->add_option("--point", curve_point, "x y, or x alone to lift with the larger y")->expected(1, 2);
  curve->add_option("--add", curve_add, "x y of a second point")->expected(2);
  curve->add_option("--mul", curve_mul, "multiply the point by n");
  curve->add_flag("--torsion", curve_torsion, "torsion order of the point (up to 12)");
  curve->add_flag("--alpha-s", curve_alpha_s, "E_r only: map the result to (alpha, s)");

  // search-rs
  auto* search_rs = app.add_subcommand("search-rs", "integer pairs 1 < r < s < bound giving rational t");
  search_rs->footer("CSV columns: r,s,t,integral");
  std::uint64_t rs_bound = 0;
  SearchFlags rs_flags;
  search_rs->add_option("--bound", rs_bound, "exclusive upper bound on s")->required();
  add_search_flags(search_rs, rs_flags);

  // pell
  auto* pell = app.add_subcommand("pell", "solutions of p^2 - 3r^2 = 1");
  pell->footer("CSV columns: index,p,r,p_over_r,p_over_2r");
  int pell_count = 9, pell_digits = 11;
  std::string pell_checkpoint;
  pell->add_option("--count", pell_count, "number of solutions")->check(CLI::PositiveNumber);
  pell->add_option("--digits", pell_digits, "decimal places for the ratios")->check(CLI::Range(0, 1000));
  pell->add_option("--checkpoint", pell_checkpoint, "accepted for symmetry; pell is instant");

  // taxicab
  auto* taxicab = app.add_subcommand("taxicab", "X^k + Y^k = Z^k + W^k with entries <= bound");
  taxicab->footer("CSV columns: X,Y,Z,W,k,square_product");
  std::uint64_t tx_bound = 0;
  int tx_k = 3;
  bool tx_square = false, tx_sextic = false;
  SearchFlags tx_flags;
  taxicab->add_option("--bound", tx_bound, "largest entry")->required();
  taxicab->add_option("--k", tx_k, "3 or 4")->check(CLI::IsMember({3, 4}));
  taxicab->add_flag("--require-square-product", tx_square, "keep hits with XYZW a square");
  taxicab->add_flag("--sextic", tx_sextic, "k = 3: add x^6 + h^3 y^6 rewritings and sextic triples");
  add_search_flags(taxicab, tx_flags);

  // gaussian
  auto* gaussian = app.add_subcommand("gaussian", "quartic triples over Q(i)");
  gaussian->footer("CSV columns: origin,a,b,c");
  int gbox = 0;
  gaussian->add_option("--box", gbox, "scan seeds with |Re r|, |Im r| <= box; 0 verifies only")
      ->check(CLI::Range(0, 1000));

  // euler-octic
  auto* euler = app.add_subcommand("euler-octic", "Euler's quartic parametrization and its genus-2 reduction");
  euler->footer("CSV columns: check,result  (or a,X,Y,Z,W,degenerate with --a)");
  std::vector<std::string> euler_a;
  euler->add_option("--a", euler_a, "evaluate X, Y, Z, W at these a");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    for (const auto* sub : app.get_subcommands()) target = sub;
    out << target->help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }
  if (common.csv && common.json_out) {
    err << "usage error: --json and --csv are exclusive\n";
    return kUsage;
  }

  const auto started = std::chrono::steady_clock::now();
  int code = kOk;
  try {
    if (common.kernel == "scalar") kernels::force_isa(kernels::Isa::scalar);
    else if (common.kernel == "avx2") kernels::force_isa(kernels::Isa::avx2);
    else kernels::force_isa(std::nullopt);

    if (*verify) {
      if (!verify_input.empty()) {
        if (!verify_elems.empty()) throw UsageError("give elements or --input, not both");
        for (const auto& rec : read_records(verify_input)) {
          const json& body = rec.contains("triple") ? rec.at("triple") : rec;
          const auto in = io::parse_tuple_record(body);
          code = std::max(code, verify_strings(in.elements, in.power, common, out));
        }
      } else {
        code = verify_strings(verify_elems, verify_k, common, out);
      }
    } else if (*construct) {
      auto print = [&](const auto& tri) {
        if (!tri) {
          json j{{"schema", io::kTripleSchema}, {"k", 2 * ck}, {"r", cr}, {"s", cs}, {"triple", nullptr}};
          j["reason"] = "(r^k s^k - 1)/(s^k - r^k) is not a k-th power";
          if (common.csv) err << "no triple: " << j["reason"].get<std::string>() << '\n';
          else emit(out, j);
          code = kFalse;
          return;
        }
        if (common.csv) {
          csv_row(out, {std::to_string(tri->power()), tri->r.str(), tri->s.str(), tri->t.str(), tri->a.str(),
                        tri->b.str(), tri->c.str()});
        } else {
          emit(out, io::triple_record(*tri));
        }
      };
      if (is_gaussian_text(cr) || is_gaussian_text(cs)) {
        print(construct_regular(parse_gauss(cr), parse_gauss(cs), ck));
      } else {
        print(construct_regular(parse_rational(cr), parse_rational(cs), ck));
      }
    } else if (*family) {
      const auto id = parse_family(fam_id);
      if (!id) throw UsageError("unknown family '" + fam_id + "'");
      std::optional<Rational> k;
      if (!fam_k.empty()) k = parse_rational(fam_k);
      if (*id == FamilyId::fam2k && !k) throw UsageError("fam2k needs --k");
      for (const auto& p : parse_rationals(fam_params)) {
        const FamilyPoint pt = family_triple(*id, p, k);
        if (common.csv) {
          const auto& t = pt.triple;
          csv_row(out, {fam_id, p.str(), t.r.str(), t.s.str(), t.t.str(), t.a.str(), t.b.str(), t.c.str()});
        } else {
          out << io::to_json(pt).dump() << '\n';
        }
      }
    } else if (*prove) {
      std::vector<FamilyId> ids;
      if (prove_id == "all") {
        ids.assign(kAllFamilies.begin(), kAllFamilies.end());
      } else if (auto id = parse_family(prove_id)) {
        ids.push_back(*id);
      } else {
        throw UsageError("unknown family '" + prove_id + "'");
      }
      const Rational k = parse_rational(prove_k);
      for (FamilyId id : ids) {
        const ProofReport rep = symbolic_verify(id, k);
        if (!rep.all_passed()) code = kFalse;
        if (common.csv) {
          for (const auto& c : rep.checks) csv_row(out, {rep.subject, c.name, c.passed ? "PASS" : "FAIL"});
        } else {
          emit(out, io::to_json(rep));
        }
      }
    } else if (*curve) {
      const auto params = parse_rationals(curve_params);
      Curve<Rational> E = [&] {
        try {
          return curve_catalog(curve_id, params);
        } catch (const CurveError&) {
          throw;
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
      }();
      json j{{"schema", "hpdt.curve/1"}, {"id", curve_id}, {"curve", io::to_json(E)}};
      j["params"] = json::array();
      for (const auto& p : params) j["params"].push_back(io::to_json(p));
      if (!curve_point.empty()) {
        const Rational px = parse_rational(curve_point[0]);
        Rational py;
        if (curve_point.size() == 2) {
          py = parse_rational(curve_point[1]);
        } else {
          // y^2 + (a1 x + a3) y = x^3 + a2 x^2 + a4 x + a6
          const Rational lin = E.a1() * px + E.a3();
          const Rational rhs = ((px + E.a2()) * px + E.a4()) * px + E.a6();
          const auto root = rational_kth_root(lin * lin + Rational(4) * rhs, 2);
          if (!root) throw UsageError("no rational point with x = " + px.str());
          py = (*root - lin) / Rational(2);
        }
        Point<Rational> P(px, py);
        j["input"] = point_report(E, P);
        if (!E.on_curve(P)) {
          code = kFalse;
        } else {
          Point<Rational> R = E.mul(curve_mul, P);
          if (!curve_add.empty()) {
            Point<Rational> Q(parse_rational(curve_add[0]), parse_rational(curve_add[1]));
            j["addend"] = point_report(E, Q);
            if (!E.on_curve(Q)) throw UsageError("--add point is not on the curve");
            R = E.add(R, Q);
          }
          j["mul"] = curve_mul;
          j["result"] = io::to_json(R);
          if (curve_torsion) {
            const auto ord = E.torsion_order(P);
            j["torsion_order"] = ord ? json(*ord) : json(nullptr);
          }
          if (curve_alpha_s) {
            if (curve_id != "E_r") throw UsageError("--alpha-s applies to E_r only");
            const auto as = er_to_alpha_s(params.at(0), R);
            j["alpha"] = io::to_json(as.alpha);
            j["s"] = io::to_json(as.s);
          }
        }
      }
      if (common.csv) {
        for (const auto& key : {"a1", "a2", "a3", "a4", "a6", "discriminant"}) {
          csv_row(out, {key, text_of(j["curve"][key])});
        }
        if (j.contains("result")) {
          const auto& r = j["result"];
          if (r.contains("x")) {
            csv_row(out, {"x", text_of(r["x"])});
            csv_row(out, {"y", text_of(r["y"])});
          } else {
            csv_row(out, {"x", "infinity"});
          }
        }
        for (const auto& key : {"torsion_order", "alpha", "s"}) {
          if (j.contains(key)) csv_row(out, {key, text_of(j[key])});
        }
      } else {
        emit(out, j);
      }
    } else if (*search_rs) {
      const auto hits = search_integer_pairs(rs_bound, rs_flags.options());
      if (common.csv) {
        for (const auto& h : hits) {
          csv_row(out, {std::to_string(h.r), std::to_string(h.s), h.t.str(), h.integral ? "true" : "false"});
        }
      } else {
        json j{{"schema", "hpdt.search-rs/1"}, {"bound", rs_bound}, {"hits", json::array()}};
        for (const auto& h : hits) j["hits"].push_back(io::to_json(h));
        emit(out, j);
      }
    } else if (*pell) {
      const auto seq = pell_sequence(pell_count);
      json j{{"schema", "hpdt.pell/1"}, {"count", pell_count}, {"solutions", json::array()}};
      for (const auto& s : seq) {
        const std::string q1 = decimal_expansion(Rational(s.p, s.r), pell_digits);
        const std::string q2 = decimal_expansion(Rational(s.p, 2 * s.r), pell_digits);
        if (common.csv) {
          csv_row(out, {std::to_string(s.index), s.p.get_str(), s.r.get_str(), q1, q2});
        } else {
          json e = io::to_json(s);
          e["p_over_r"] = q1;
          e["p_over_2r"] = q2;
          j["solutions"].push_back(e);
        }
      }
      if (!common.csv) emit(out, j);
    } else if (*taxicab) {
      auto hits = taxicab_search(tx_bound, tx_k, tx_flags.options());
      if (tx_square) std::erase_if(hits, [](const TaxicabHit& h) { return !h.square_product; });
      if (common.csv) {
        for (const auto& h : hits) {
          csv_row(out, {std::to_string(h.X), std::to_string(h.Y), std::to_string(h.Z), std::to_string(h.W),
                        std::to_string(h.k), h.square_product ? "true" : "false"});
        }
      } else {
        json j{{"schema", "hpdt.taxicab/1"}, {"bound", tx_bound}, {"k", tx_k},
               {"require_square_product", tx_square}, {"hits", json::array()}};
        for (const auto& h : hits) {
          json e = io::to_json(h);
          if (tx_sextic && tx_k == 3) {
            if (auto f = sextic_form_check(h)) e["sextic_form"] = io::to_json(*f);
            e["sextic_triples"] = json::array();
            const auto big = [](std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); };
            for (const auto& aff : dehomogenize(big(h.X), big(h.Y), big(h.Z), big(h.W), 3)) {
              auto tri = from_taxicab(aff.x, aff.y, aff.z, 3);
              if (!tri || tri->a <= 0 || tri->b <= 0 || tri->c <= 0) continue;
              // (r, s, t) and (r, t, s) give the same set; keep a < b
              if (tri->a < tri->b) {
                e["sextic_triples"].push_back(io::triple_record(*tri));
              }
            }
          }
          j["hits"].push_back(e);
        }
        emit(out, j);
      }
    } else if (*gaussian) {
      const auto scan = gaussian_verify_and_scan(gbox);
      if (common.csv) {
        for (const auto* list : {&scan.known, &scan.found}) {
          for (const auto& g : *list) {
            csv_row(out, {g.origin, g.elements[0].str(), g.elements[1].str(), g.elements[2].str()});
          }
        }
      } else {
        json j{{"schema", "hpdt.gaussian/1"}, {"box", gbox}, {"known", json::array()}, {"found", json::array()}};
        for (const auto& g : scan.known) j["known"].push_back(io::to_json(g));
        for (const auto& g : scan.found) j["found"].push_back(io::to_json(g));
        emit(out, j);
      }
    } else if (*euler) {
      if (!euler_a.empty()) {
        json j{{"schema", "hpdt.euler-values/1"}, {"values", json::array()}};
        for (const auto& a : parse_rationals(euler_a)) {
          const auto v = euler_quartic_parametrization(a);
          if (common.csv) {
            csv_row(out, {a.str(), v.xyzw[0].str(), v.xyzw[1].str(), v.xyzw[2].str(), v.xyzw[3].str(),
                          v.degenerate ? "true" : "false"});
          } else {
            j["values"].push_back({{"a", a.str()},
                                   {"X", v.xyzw[0].str()},
                                   {"Y", v.xyzw[1].str()},
                                   {"Z", v.xyzw[2].str()},
                                   {"W", v.xyzw[3].str()},
                                   {"degenerate", v.degenerate}});
          }
        }
        if (!common.csv) emit(out, j);
      } else {
        const ProofReport rep = euler_reduction_check();
        if (!rep.all_passed()) code = kFalse;
        if (common.csv) {
          for (const auto& c : rep.checks) csv_row(out, {c.name, c.passed ? "PASS" : "FAIL"});
        } else {
          emit(out, io::to_json(rep));
        }
      }
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {  // InvalidInput, ExcludedParameter
    err << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const DegenerateTriple& e) {
    err << "degenerate: " << e.what() << '\n';
    return kFalse;
  } catch (const CurveError& e) {
    err << "curve error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (common.verbose) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
    err << "kernel=" << kernels::isa_name(kernels::active_isa()) << " elapsed_ms=" << ms.count() << '\n';
  }
  return code;
}

}  // namespace hpdt::cli
