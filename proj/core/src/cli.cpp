#include "widecat/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "widecat/closure.hpp"
#include "widecat/complex.hpp"
#include "widecat/errors.hpp"
#include "widecat/finab.hpp"
#include "widecat/ideal.hpp"
#include "widecat/locus.hpp"
#include "widecat/module.hpp"
#include "widecat/resolution.hpp"
#include "widecat/subcat.hpp"
#include "widecat/textio.hpp"

namespace widecat {

namespace {

using OJson = nlohmann::ordered_json;

// ------------------------------------------------------ @file expansion

// Splits an arguments file into whitespace-separated tokens.  Double or
// single quotes group text (and may be glued to unquoted text); `#` at
// the start of a token comments out the rest of its line.
std::vector<std::string> tokenize_argfile(const std::string& text) {
  std::vector<std::string> out;
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] == '#') {
      while (i < n && text[i] != '\n') ++i;
      continue;
    }
    std::string tok;
    while (i < n && !std::isspace(static_cast<unsigned char>(text[i]))) {
      char c = text[i];
      if (c == '"' || c == '\'') {
        char q = c;
        ++i;
        while (i < n && text[i] != q) tok += text[i++];
        ++i;  // closing quote (tolerated if missing at end of file)
      } else {
        tok += c;
        ++i;
      }
    }
    out.push_back(std::move(tok));
  }
  return out;
}

std::vector<std::string> expand_argfiles(
    const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (const std::string& a : args) {
    if (a.size() > 1 && a[0] == '@') {
      std::ifstream in(a.substr(1));
      if (!in) {
        throw ParseError(1, 1,
                         "cannot read arguments file '" + a.substr(1) + "'");
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      for (std::string& t : tokenize_argfile(buf.str())) {
        out.push_back(std::move(t));
      }
    } else {
      out.push_back(a);
    }
  }
  return out;
}

// --------------------------------------------------------- JSON helpers

OJson poly_matrix_json(const PolyMatrix& m, const RingDescriptor& ring) {
  OJson rows = OJson::array();
  for (int i = 0; i < m.rows; ++i) {
    OJson row = OJson::array();
    for (int j = 0; j < m.cols; ++j) {
      row.push_back(poly_to_string(m.at(i, j), ring));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

OJson int_matrix_json(const IntMatrix& m) {
  OJson rows = OJson::array();
  for (int i = 0; i < m.rows; ++i) {
    OJson row = OJson::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

OJson any_matrix_json(const AnyMatrix& m, const RingDescriptor& ring) {
  if (const auto* pm = std::get_if<PolyMatrix>(&m)) {
    return poly_matrix_json(*pm, ring);
  }
  return int_matrix_json(std::get<IntMatrix>(m));
}

OJson group_list_json(const std::vector<FinAbGroup>& gs) {
  OJson a = OJson::array();
  for (const FinAbGroup& g : gs) a.push_back(fin_ab_name(g));
  return a;
}

OJson report_json(bool json_mode, const std::string& command) {
  OJson j;
  j["schema"] = 1;
  j["command"] = command;
  (void)json_mode;
  return j;
}

void emit(std::ostream& out, const OJson& j) { out << j.dump(2) << "\n"; }

// The canonical ZZ-ideal generator of a comma-separated integer list,
// folded with the ring modulus.
Int z_ideal_generator(const std::string& text, const RingDescriptor& ring) {
  Int g = ring.int_modulus;
  for (const Int& v : parse_int_list(text)) {
    Int t;
    mpz_gcd(t.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    g = t;
  }
  return g;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string group_list_str(const std::vector<FinAbGroup>& gs) {
  std::string out;
  for (size_t i = 0; i < gs.size(); ++i) {
    if (i) out += ", ";
    out += fin_ab_name(gs[i]);
  }
  return out;
}

// Kernel generators of an integer matrix acting on (Z/n)^rows.
IntMatrix z_matrix_syzygies(const IntMatrix& a, const Int& n) {
  if (a.rows == 0) return IntMatrix::identity(a.cols);
  if (n != 0) {
    IntMatrix nid(a.rows, a.rows);
    for (int i = 0; i < a.rows; ++i) nid.at(i, i) = n;
    IntMatrix full = kernel_basis_z(mat_hcat(a, nid));
    IntMatrix top(a.cols, full.cols);
    for (int i = 0; i < a.cols; ++i) {
      for (int j = 0; j < full.cols; ++j) top.at(i, j) = full.at(i, j);
    }
    return top;
  }
  return kernel_basis_z(a);
}

// --------------------------------------------------------- subcommands

struct CliOpts {
  bool json = false;

  std::string ring;
  std::string input;
  std::string second;
  std::string ideal;
  std::string module;
  std::string wide;
  std::string complex_text;
  std::string op;
  std::string gens;
  std::string degrees;
  int cap = kDefaultPdCap;
  int degree = 0;
  bool has_degree = false;
  long modulus = 0;
  long bound = 64;
  int snake = 0;
  bool verify = false;
};

int run_gb(const CliOpts& o, std::ostream& out) {
  RingDescriptor ring = parse_ring(o.ring);
  if (ring.kind == RingKind::integer) {
    Int g = z_ideal_generator(o.input, ring);
    if (o.json) {
      OJson j = report_json(o.json, "gb");
      j["ring"] = ring_to_string(ring);
      j["basis"] = OJson::array({g.get_str()});
      emit(out, j);
    } else {
      out << g.get_str() << "\n";
    }
    return 0;
  }
  IdealGB basis = groebner_basis(ring, parse_poly_list(o.input, ring));
  if (o.json) {
    OJson j = report_json(o.json, "gb");
    j["ring"] = ring_to_string(ring);
    OJson gens = OJson::array();
    for (const Poly& f : basis.gens) gens.push_back(poly_to_string(f, ring));
    j["basis"] = std::move(gens);
    emit(out, j);
  } else {
    for (const Poly& f : basis.gens) out << poly_to_string(f, ring) << "\n";
  }
  return 0;
}

int run_nf(const CliOpts& o, std::ostream& out) {
  RingDescriptor ring = parse_ring(o.ring);
  std::string result;
  if (ring.kind == RingKind::integer) {
    Int g = z_ideal_generator(o.ideal, ring);
    Int v = parse_int_list(o.input).at(0);
    if (g != 0) {
      Int r;
      mpz_mod(r.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
      v = r;
    }
    result = v.get_str();
  } else {
    IdealGB basis = groebner_basis(ring, parse_poly_list(o.ideal, ring));
    result = poly_to_string(normal_form(parse_poly(o.input, ring), basis),
                            ring);
  }
  if (o.json) {
    OJson j = report_json(o.json, "nf");
    j["ring"] = ring_to_string(ring);
    j["normal_form"] = result;
    emit(out, j);
  } else {
    out << result << "\n";
  }
  return 0;
}

int run_ideal(const CliOpts& o, std::ostream& out) {
  RingDescriptor ring = parse_ring(o.ring);
  if (ring.kind != RingKind::poly) {
    throw DomainError("unsupported-ring",
                      "ideal operations need a polynomial ring");
  }
  IdealGB a = groebner_basis(ring, parse_poly_list(o.input, ring));
  std::optional<IdealGB> result;
  std::optional<bool> answer;
  if (o.op == "sum") {
    result = ideal_sum(a, groebner_basis(ring, parse_poly_list(o.second, ring)));
  } else if (o.op == "product") {
    result = ideal_product(
        a, groebner_basis(ring, parse_poly_list(o.second, ring)));
  } else if (o.op == "intersect") {
    result = ideal_intersection(
        a, groebner_basis(ring, parse_poly_list(o.second, ring)));
  } else if (o.op == "quotient") {
    result = ideal_quotient(a, parse_poly(o.second, ring));
  } else if (o.op == "contains") {
    answer = ideal_contains(a, parse_poly(o.second, ring));
  } else if (o.op == "radical-member") {
    answer = radical_member(parse_poly(o.second, ring), a);
  } else if (o.op == "eq") {
    answer =
        ideal_eq(a, groebner_basis(ring, parse_poly_list(o.second, ring)));
  } else {
    throw ParseError(1, 1, "unknown ideal operation '" + o.op + "'");
  }
  if (o.json) {
    OJson j = report_json(o.json, "ideal");
    j["ring"] = ring_to_string(ring);
    j["op"] = o.op;
    if (answer) {
      j["result"] = *answer;
    } else {
      OJson gens = OJson::array();
      for (const Poly& f : result->gens) {
        gens.push_back(poly_to_string(f, ring));
      }
      j["result"] = std::move(gens);
    }
    emit(out, j);
  } else if (answer) {
    out << bool_str(*answer) << "\n";
  } else {
    for (const Poly& f : result->gens) out << poly_to_string(f, ring) << "\n";
  }
  return 0;
}

int run_syz(const CliOpts& o, std::ostream& out) {
  RingDescriptor ring = parse_ring(o.ring);
  OJson j = report_json(o.json, "syz");
  j["ring"] = ring_to_string(ring);
  std::string text;
  if (ring.kind == RingKind::poly) {
    PolyMatrix s = syzygy_module(parse_poly_matrix(o.input, ring), ring);
    text = poly_matrix_to_string(s, ring);
    j["syzygies"] = poly_matrix_json(s, ring);
  } else {
    IntMatrix s =
        z_matrix_syzygies(parse_int_matrix(o.input), ring.int_modulus);
    text = int_matrix_to_string(s);
    j["syzygies"] = int_matrix_json(s);
  }
  if (o.json) {
    emit(out, j);
  } else {
    out << text << "\n";
  }
  return 0;
}

FPModule module_with_degrees(const CliOpts& o, const RingDescriptor& ring) {
  FPModule m = parse_module(o.module, ring);
  if (!o.degrees.empty()) {
    std::vector<int> degs;
    for (const Int& v : parse_int_list(o.degrees)) {
      if (!v.fits_sint_p()) {
        throw DomainError("invalid-module", "generator degree out of range");
      }
      degs.push_back(static_cast<int>(v.get_si()));
    }
    if (static_cast<int>(degs.size()) != m.ngens) {
      throw DomainError("invalid-module",
                        "degrees count must match the generator count");
    }
    m.degrees = std::move(degs);
  }
  return m;
}

int run_resolve(const CliOpts& o, std::ostream& out) {
  RingDescriptor ring = parse_ring(o.ring);
  FPModule m = module_with_degrees(o, ring);
  FreeResolution res = minimal_free_resolution(m, o.cap);
  if (o.json) {
    OJson j = report_json(o.json, "resolve");
    j["ring"] = ring_to_string(ring);
    j["ranks"] = res.ranks;
    j["minimal"] = res.minimal;
    if (res.minimal) {
      j["pd"] = static_cast<int>(res.ranks.size()) - 1;
    } else {
      j["pd"] = nullptr;
    }
    j["degrees"] = res.degrees;
    OJson maps = OJson::array();
    for (const PolyMatrix& d : res.maps) {
      maps.push_back(poly_matrix_json(d, ring));
    }
    j["maps"] = std::move(maps);
    emit(out, j);
    return 0;
  }
  out << "ranks:";
  for (int r : res.ranks) out << " " << r;
  out << "\n";
  if (res.minimal) {
    out << "pd: " << res.ranks.size() - 1 << "\n";
  } else {
    out << "minimal: false\n";
  }
  for (size_t k = 0; k < res.maps.size(); ++k) {
    out << "d" << k + 1 << ": " << poly_matrix_to_string(res.maps[k], ring)
        << "\n";
  }
  return 0;
}

int run_supp(const CliOpts& o, std::ostream& out) {
  RingDescriptor ring = parse_ring(o.ring);
  FPModule m = parse_module(o.module, ring);
  std::string text = locus_to_string(support_of(m));
  if (o.json) {
    OJson j = report_json(o.json, "supp");
    j["ring"] = ring_to_string(ring);
    j["module"] = module_to_string(m);
    j["support"] = text;
    emit(out, j);
  } else {
    out << text << "\n";
  }
  return 0;
}

int run_homology(const CliOpts& o, std::ostream& out) {
  RingDescriptor ring = parse_ring(o.ring);
  FreeComplex x = parse_complex(o.complex_text, ring);
  int lo = o.has_degree ? o.degree : x.low;
  int hi = o.has_degree ? o.degree : x.top();
  OJson arr = OJson::array();
  std::string text;
  for (int n = lo; n <= hi; ++n) {
    FPModule h = complex_homology(x, n);
    std::string hs = module_to_string(h);
    text += "H_" + std::to_string(n) + ": " + hs + "\n";
    OJson e;
    e["degree"] = n;
    e["module"] = hs;
    arr.push_back(std::move(e));
  }
  if (o.json) {
    OJson j = report_json(o.json, "homology");
    j["ring"] = ring_to_string(ring);
    j["homology"] = std::move(arr);
    emit(out, j);
  } else {
    out << text;
  }
  return 0;
}

int run_koszul(const CliOpts& o, std::ostream& out) {
  RingDescriptor ring = parse_ring(o.ring);
  FreeComplex k = ring.kind == RingKind::poly
                      ? koszul_complex(ring, parse_poly_list(o.input, ring))
                      : koszul_complex_z(ring, parse_int_list(o.input));
  std::string text = complex_to_string(k);
  if (o.json) {
    OJson j = report_json(o.json, "koszul");
    j["ring"] = ring_to_string(ring);
    j["complex"] = text;
    j["support"] = locus_to_string(support_of_complex(k));
    emit(out, j);
  } else {
    out << text << "\n";
  }
  return 0;
}

std::optional<RingDescriptor> optional_ring(const CliOpts& o) {
  if (o.ring.empty()) return std::nullopt;
  return parse_ring(o.ring);
}

int run_classify(const CliOpts& o, std::ostream& out) {
  WideSubcat w = parse_wide(o.wide, optional_ring(o));
  ViewsChain v = views_chain(w);
  std::string datum = locus_to_string(w.datum);
  if (o.json) {
    OJson j = report_json(o.json, "classify");
    j["ring"] = ring_to_string(w.ring);
    OJson gens = OJson::array();
    for (const FPModule& m : w.gens) gens.push_back(module_to_string(m));
    j["generators"] = std::move(gens);
    j["datum"] = datum;
    OJson views;
    views["wide"] = locus_to_string(v.wide_view.datum);
    views["serre"] = locus_to_string(v.serre_view.datum);
    views["torsion"] = locus_to_string(v.torsion_view.datum);
    j["views"] = std::move(views);
    j["order_complement"] = locus_to_string(v.order_view.locus);
    emit(out, j);
    return 0;
  }
  out << "ring: " << ring_to_string(w.ring) << "\n";
  out << "generators: " << w.gens.size() << "\n";
  out << "datum: " << datum << "\n";
  out << "views: wide = serre = torsion\n";
  out << "order view: complement of " << locus_to_string(v.order_view.locus)
      << "\n";
  return 0;
}

int run_member(const CliOpts& o, std::ostream& out) {
  WideSubcat w = parse_wide(o.wide, optional_ring(o));
  FPModule m = parse_module(o.module, w.ring);
  bool member = wide_member(w, m);
  if (o.json) {
    OJson j = report_json(o.json, "member");
    j["ring"] = ring_to_string(w.ring);
    j["module"] = module_to_string(m);
    j["wide_datum"] = locus_to_string(w.datum);
    j["member"] = member;
    emit(out, j);
  } else {
    out << bool_str(member) << "\n";
  }
  return 0;
}

int run_fg(const CliOpts& o, std::ostream& out) {
  WideSubcat w = parse_wide(o.wide, optional_ring(o));
  ThickSubcat t = f_map(w);
  WideSubcat w2 = g_map(t);
  ThickSubcat t2 = f_map(w2);
  bool gf = locus_eq(w2.datum, w.datum);
  bool fg = locus_eq(t2.datum, t.datum);
  if (o.json) {
    OJson j = report_json(o.json, "fg");
    j["ring"] = ring_to_string(w.ring);
    j["datum"] = locus_to_string(w.datum);
    j["thick_datum"] = locus_to_string(t.datum);
    j["gf_datum"] = locus_to_string(w2.datum);
    j["gf_equal"] = gf;
    j["fg_equal"] = fg;
    emit(out, j);
    return 0;
  }
  out << "datum: " << locus_to_string(w.datum) << "\n";
  out << "f(W) datum: " << locus_to_string(t.datum) << "\n";
  out << "gf(W) datum: " << locus_to_string(w2.datum) << "\n";
  out << "gf(W) = W: " << bool_str(gf) << "\n";
  out << "fg(f(W)) = f(W): " << bool_str(fg) << "\n";
  return 0;
}

int run_uv(const CliOpts& o, std::ostream& out) {
  WideSubcat w = parse_wide(o.wide, optional_ring(o));
  WideSubcat up = inflate_u(w);
  WideSubcat back = restrict_v(up, w.ring);
  bool roundtrip = locus_eq(back.datum, w.datum);
  if (o.json) {
    OJson j = report_json(o.json, "uv");
    j["ring"] = ring_to_string(w.ring);
    j["ambient"] = ring_to_string(up.ring);
    j["datum"] = locus_to_string(w.datum);
    j["inflated_datum"] = locus_to_string(up.datum);
    j["restricted_datum"] = locus_to_string(back.datum);
    j["roundtrip"] = roundtrip;
    emit(out, j);
    return 0;
  }
  out << "quotient ring: " << ring_to_string(w.ring) << "\n";
  out << "ambient ring: " << ring_to_string(up.ring) << "\n";
  out << "datum: " << locus_to_string(w.datum) << "\n";
  out << "u(W) datum: " << locus_to_string(up.datum) << "\n";
  out << "vu(W) datum: " << locus_to_string(back.datum) << "\n";
  out << "vu(W) = W: " << bool_str(roundtrip) << "\n";
  return 0;
}

const char* witness_kind_name(WitnessKind k) {
  switch (k) {
    case WitnessKind::generator:
      return "generator";
    case WitnessKind::kernel:
      return "kernel";
    case WitnessKind::cokernel:
      return "cokernel";
    case WitnessKind::extension:
      return "extension";
  }
  return "generator";
}

int run_oracle(const CliOpts& o, std::ostream& out) {
  std::vector<FinAbGroup> gens = parse_group_list(o.gens);
  ClosureReport rep = closure_tower(gens, o.modulus, o.bound);
  std::optional<bool> verified;
  if (o.verify) verified = verify_witnesses(rep);
  std::optional<SnakeReport> snake;
  if (o.snake > 0) snake = snake_closure_checks(rep, o.snake);
  if (o.json) {
    OJson j = report_json(o.json, "oracle");
    j["generators"] = group_list_json(rep.generators);
    j["modulus"] = rep.modulus;
    j["bound"] = rep.bound;
    OJson tower = OJson::array();
    for (const auto& layer : rep.tower) tower.push_back(group_list_json(layer));
    j["tower"] = std::move(tower);
    j["stabilized"] = rep.stabilized;
    j["final"] = group_list_json(rep.tower.back());
    j["predicted"] = group_list_json(rep.predicted);
    j["equal"] = rep.equal;
    j["missing"] = group_list_json(rep.missing);
    j["extra"] = group_list_json(rep.extra);
    OJson ws = OJson::array();
    for (const ClosureWitness& w : rep.witnesses) {
      OJson e;
      e["member"] = fin_ab_name(w.member);
      e["level"] = w.level;
      e["kind"] = witness_kind_name(w.kind);
      e["x"] = fin_ab_name(w.x);
      e["y"] = fin_ab_name(w.y);
      ws.push_back(std::move(e));
    }
    j["witnesses"] = std::move(ws);
    if (verified) j["witnesses_verified"] = *verified;
    if (snake) {
      OJson s;
      s["samples"] = snake->samples;
      s["violations"] = snake->violations;
      j["snake"] = std::move(s);
    }
    emit(out, j);
    return 0;
  }
  out << "generators: " << group_list_str(rep.generators) << "\n";
  out << "modulus: " << rep.modulus << "\n";
  out << "bound: " << rep.bound << "\n";
  for (size_t i = 0; i < rep.tower.size(); ++i) {
    out << "D" << i << ": " << group_list_str(rep.tower[i]) << "\n";
  }
  out << "stabilized: " << bool_str(rep.stabilized) << "\n";
  out << "predicted: " << group_list_str(rep.predicted) << "\n";
  out << "equal: " << bool_str(rep.equal) << "\n";
  if (!rep.missing.empty()) {
    out << "missing: " << group_list_str(rep.missing) << "\n";
  }
  if (!rep.extra.empty()) {
    out << "extra: " << group_list_str(rep.extra) << "\n";
  }
  if (verified) {
    out << "witnesses verified: " << bool_str(*verified) << "\n";
  }
  if (snake) {
    out << "snake checks: " << snake->samples << " samples, "
        << snake->violations << " violations\n";
  }
  return 0;
}

int run_specz(const CliOpts& o, std::ostream& out) {
  SpecZSet a = parse_specz(o.input);
  std::optional<SpecZSet> result;
  std::optional<bool> answer;
  if (o.op == "union") {
    result = specz_union(a, parse_specz(o.second));
  } else if (o.op == "intersect") {
    result = specz_intersect(a, parse_specz(o.second));
  } else if (o.op == "complement") {
    result = specz_complement(a);
  } else if (o.op == "member") {
    if (o.second == "generic" || o.second == "(0)") {
      answer = a.generic;
    } else {
      answer = specz_member(a, parse_int_list(o.second).at(0));
    }
  } else if (o.op == "subset") {
    answer = specz_subset(a, parse_specz(o.second));
  } else if (o.op == "eq") {
    answer = specz_eq(a, parse_specz(o.second));
  } else {
    throw ParseError(1, 1, "unknown specz operation '" + o.op + "'");
  }
  if (o.json) {
    OJson j = report_json(o.json, "specz");
    j["op"] = o.op;
    if (answer) {
      j["result"] = *answer;
    } else {
      j["result"] = specz_to_string(*result);
    }
    emit(out, j);
  } else if (answer) {
    out << bool_str(*answer) << "\n";
  } else {
    out << specz_to_string(*result) << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CliOpts o;
  CLI::App app{
      "widecat — classify subcategories of finitely presented modules by "
      "closed-locus data.\nArguments of the form @file are expanded to the "
      "whitespace-separated tokens of that file."};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "emit machine-readable JSON (schema 1)");

  auto add_json = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "emit machine-readable JSON (schema 1)");
  };

  CLI::App* gb = app.add_subcommand("gb", "reduced Groebner basis");
  gb->add_option("--ring", o.ring, "ring literal")->required();
  gb->add_option("gens", o.input, "comma-separated generators")->required();
  add_json(gb);

  CLI::App* nf = app.add_subcommand("nf", "normal form modulo an ideal");
  nf->add_option("--ring", o.ring, "ring literal")->required();
  nf->add_option("--ideal", o.ideal, "comma-separated ideal generators")
      ->required();
  nf->add_option("element", o.input, "element to reduce")->required();
  add_json(nf);

  CLI::App* id = app.add_subcommand("ideal", "ideal arithmetic");
  id->add_option("--ring", o.ring, "ring literal")->required();
  id->add_option("--op", o.op,
                 "sum | product | intersect | quotient | contains | "
                 "radical-member | eq")
      ->required();
  id->add_option("a", o.input, "first ideal (generator list)")->required();
  id->add_option("b", o.second, "second ideal, or a single element");
  add_json(id);

  CLI::App* syz = app.add_subcommand("syz", "column syzygies of a matrix");
  syz->add_option("--ring", o.ring, "ring literal")->required();
  syz->add_option("matrix", o.input, "presentation matrix")->required();
  add_json(syz);

  CLI::App* res = app.add_subcommand("resolve", "minimal free resolution");
  res->add_option("--ring", o.ring, "ring literal")->required();
  res->add_option("--module", o.module, "module literal")->required();
  res->add_option("--degrees", o.degrees, "generator degrees (graded runs)");
  res->add_option("--cap", o.cap, "length cap (error beyond it)");
  add_json(res);

  CLI::App* supp = app.add_subcommand("supp", "support of a module");
  supp->add_option("--ring", o.ring, "ring literal")->required();
  supp->add_option("--module", o.module, "module literal")->required();
  add_json(supp);

  CLI::App* hom = app.add_subcommand("homology", "homology of a complex");
  hom->add_option("--ring", o.ring, "ring literal")->required();
  hom->add_option("--complex", o.complex_text, "complex literal")->required();
  CLI::Option* deg = hom->add_option("--degree", o.degree, "single degree");
  add_json(hom);

  CLI::App* kos = app.add_subcommand("koszul", "Koszul complex on elements");
  kos->add_option("--ring", o.ring, "ring literal")->required();
  kos->add_option("elements", o.input, "comma-separated elements")
      ->required();
  add_json(kos);

  CLI::App* cls = app.add_subcommand(
      "classify", "classifying datum and views of a wide subcategory");
  cls->add_option("--ring", o.ring, "ring for bare module lists");
  cls->add_option("--wide", o.wide, "subcategory literal")->required();
  add_json(cls);

  CLI::App* mem = app.add_subcommand("member", "wide-subcategory membership");
  mem->add_option("--ring", o.ring, "ring for bare module lists");
  mem->add_option("--module", o.module, "module literal")->required();
  mem->add_option("--wide", o.wide, "subcategory literal")->required();
  add_json(mem);

  CLI::App* fg = app.add_subcommand(
      "fg", "module-side / complex-side correspondence roundtrip");
  fg->add_option("--ring", o.ring, "ring for bare module lists");
  fg->add_option("--wide", o.wide, "subcategory literal")->required();
  add_json(fg);

  CLI::App* uv = app.add_subcommand(
      "uv", "quotient-ring inflate/restrict roundtrip");
  uv->add_option("--ring", o.ring, "quotient ring for bare module lists");
  uv->add_option("--wide", o.wide, "subcategory literal over a quotient ring")
      ->required();
  add_json(uv);

  CLI::App* ora = app.add_subcommand(
      "oracle", "brute-force closure tower over finite abelian groups");
  ora->add_option("--gens", o.gens, "comma-separated group literals")
      ->required();
  ora->add_option("--modulus", o.modulus,
                  "restrict the universe to ZZ/n-modules (0 = none)");
  ora->add_option("--bound", o.bound, "universe order bound (default 64)");
  ora->add_option("--snake", o.snake, "run N randomized exactness checks");
  ora->add_flag("--verify", o.verify, "re-verify all membership witnesses");
  add_json(ora);

  CLI::App* spz = app.add_subcommand("specz", "subsets of Spec Z");
  spz->add_option("--op", o.op,
                  "union | intersect | complement | member | subset | eq")
      ->required();
  spz->add_option("a", o.input, "set literal")->required();
  spz->add_option("b", o.second, "second set, prime, or 'generic'");
  add_json(spz);

  try {
    std::vector<std::string> expanded = expand_argfiles(args);
    std::vector<const char*> argv;
    argv.push_back("widecat");
    for (const std::string& a : expanded) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());

    o.has_degree = deg->count() > 0;
    if (app.got_subcommand(gb)) return run_gb(o, out);
    if (app.got_subcommand(nf)) return run_nf(o, out);
    if (app.got_subcommand(id)) return run_ideal(o, out);
    if (app.got_subcommand(syz)) return run_syz(o, out);
    if (app.got_subcommand(res)) return run_resolve(o, out);
    if (app.got_subcommand(supp)) return run_supp(o, out);
    if (app.got_subcommand(hom)) return run_homology(o, out);
    if (app.got_subcommand(kos)) return run_koszul(o, out);
    if (app.got_subcommand(cls)) return run_classify(o, out);
    if (app.got_subcommand(mem)) return run_member(o, out);
    if (app.got_subcommand(fg)) return run_fg(o, out);
    if (app.got_subcommand(uv)) return run_uv(o, out);
    if (app.got_subcommand(ora)) return run_oracle(o, out);
    if (app.got_subcommand(spz)) return run_specz(o, out);
    return 0;
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  } catch (const ParseError& e) {
    err << "parse error at line " << e.line() << ", column " << e.column()
        << ": " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error[" << e.name() << "]: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error[internal]: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace widecat
