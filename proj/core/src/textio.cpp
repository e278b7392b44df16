#include "widecat/textio.hpp"

#include <cctype>
#include <map>
#include <string_view>
#include <utility>

#include "widecat/errors.hpp"
#include "widecat/ideal.hpp"
#include "widecat/resolution.hpp"

namespace widecat {

namespace {

constexpr long kMaxExponent = 65535;

// Scanning state over one input string, tracking the 1-based line/column
// of the next unread character for error reporting.
struct Cursor {
  std::string_view s;
  size_t pos = 0;
  int line = 1;
  int col = 1;

  explicit Cursor(std::string_view text, int start_line = 1,
                  int start_col = 1)
      : s(text), line(start_line), col(start_col) {}

  bool raw_end() const { return pos >= s.size(); }
  char peek() const { return raw_end() ? '\0' : s[pos]; }

  char get() {
    char c = s[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }

  void skip_ws() {
    while (!raw_end() && std::isspace(static_cast<unsigned char>(peek()))) {
      get();
    }
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line, col, msg);
  }

  bool try_eat(char c) {
    skip_ws();
    if (peek() == c) {
      get();
      return true;
    }
    return false;
  }

  void expect(char c, const std::string& what) {
    skip_ws();
    if (peek() != c) fail("expected " + what);
    get();
  }

  bool at_ident() {
    skip_ws();
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string ident() {
    skip_ws();
    std::string out;
    while (!raw_end()) {
      char c = peek();
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        out += get();
      } else {
        break;
      }
    }
    return out;
  }

  Int digits(const std::string& what) {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("expected " + what);
    }
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d += get();
    return Int(d);
  }

  Int integer(const std::string& what) {
    skip_ws();
    bool neg = try_eat('-');
    Int v = digits(what);
    return neg ? Int(-v) : v;
  }

  long bounded_nat(const std::string& what, long max) {
    skip_ws();
    Int v = digits(what);
    if (!v.fits_slong_p() || v.get_si() > max) fail(what + " is too large");
    return v.get_si();
  }

  void end_check() {
    skip_ws();
    if (!raw_end()) fail("unexpected trailing text");
  }
};

// A raw substring captured between balanced delimiters, remembering where
// it started so nested parses report true positions.
struct Block {
  std::string text;
  int line = 1;
  int col = 1;
};

Block capture_balanced(Cursor& cur, char open, char close) {
  cur.expect(open, std::string("'") + open + "'");
  Block b{"", cur.line, cur.col};
  size_t start = cur.pos;
  int depth = 1;
  while (!cur.raw_end()) {
    char c = cur.get();
    if (c == open) ++depth;
    if (c == close && --depth == 0) {
      b.text = std::string(cur.s.substr(start, cur.pos - 1 - start));
      return b;
    }
  }
  cur.fail(std::string("unterminated '") + open + "'");
}

// ---------------------------------------------------------- polynomials

Poly parse_expr(Cursor& cur, const RingDescriptor& ring);

Poly parse_pfactor(Cursor& cur, const RingDescriptor& ring);

Poly parse_pbase(Cursor& cur, const RingDescriptor& ring) {
  cur.skip_ws();
  char c = cur.peek();
  if (c == '(') {
    cur.get();
    Poly inner = parse_expr(cur, ring);
    cur.expect(')', "')'");
    return inner;
  }
  if (c == '-') {
    cur.get();
    return poly_neg(parse_pfactor(cur, ring));
  }
  if (std::isdigit(static_cast<unsigned char>(c))) {
    Int num = cur.digits("a number");
    Int den = 1;
    size_t mark = cur.pos;
    int ml = cur.line, mc = cur.col;
    if (cur.try_eat('/')) {
      cur.skip_ws();
      if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        den = cur.digits("a denominator");
        if (den == 0) cur.fail("zero denominator");
      } else {
        // The slash belongs to an enclosing construct (e.g. `R/(...)`).
        cur.pos = mark;
        cur.line = ml;
        cur.col = mc;
      }
    }
    return Poly::constant(Coeff::of_fraction(num, den, ring.characteristic),
                          ring.nvars());
  }
  if (cur.at_ident()) {
    int l = cur.line, co = cur.col;
    std::string name = cur.ident();
    for (int i = 0; i < ring.nvars(); ++i) {
      if (ring.vars[static_cast<size_t>(i)] == name) {
        return Poly::variable(i, ring.nvars(), ring.characteristic);
      }
    }
    throw ParseError(l, co, "unknown variable '" + name + "'");
  }
  cur.fail("expected a polynomial term");
}

Poly parse_pfactor(Cursor& cur, const RingDescriptor& ring) {
  Poly base = parse_pbase(cur, ring);
  if (cur.try_eat('^')) {
    long k = cur.bounded_nat("an exponent", kMaxExponent);
    return poly_pow(base, static_cast<unsigned>(k), ring.order);
  }
  return base;
}

Poly parse_pterm(Cursor& cur, const RingDescriptor& ring) {
  Poly acc = parse_pfactor(cur, ring);
  while (cur.try_eat('*')) {
    acc = poly_mul(acc, parse_pfactor(cur, ring), ring.order);
  }
  return acc;
}

Poly parse_expr(Cursor& cur, const RingDescriptor& ring) {
  Poly acc = parse_pterm(cur, ring);
  for (;;) {
    cur.skip_ws();
    char c = cur.peek();
    if (c == '+') {
      cur.get();
      acc = poly_add(acc, parse_pterm(cur, ring), ring.order);
    } else if (c == '-') {
      cur.get();
      acc = poly_sub(acc, parse_pterm(cur, ring), ring.order);
    } else {
      return acc;
    }
  }
}

std::vector<Poly> parse_poly_list_impl(Cursor& cur,
                                       const RingDescriptor& ring) {
  std::vector<Poly> out;
  cur.skip_ws();
  if (cur.raw_end()) return out;
  for (;;) {
    out.push_back(parse_expr(cur, ring));
    if (!cur.try_eat(',')) return out;
  }
}

// -------------------------------------------------------------- matrices

PolyMatrix parse_poly_matrix_impl(Cursor& cur, const RingDescriptor& ring) {
  cur.expect('[', "'['");
  std::vector<std::vector<Poly>> rows;
  if (!cur.try_eat(']')) {
    for (;;) {
      cur.skip_ws();
      int l = cur.line, c = cur.col;
      cur.expect('[', "'[' starting a row");
      std::vector<Poly> row;
      if (!cur.try_eat(']')) {
        for (;;) {
          row.push_back(parse_expr(cur, ring));
          if (cur.try_eat(',')) continue;
          cur.expect(']', "']' ending the row");
          break;
        }
      }
      if (!rows.empty() && row.size() != rows.front().size()) {
        throw ParseError(l, c, "rows have differing lengths");
      }
      rows.push_back(std::move(row));
      if (cur.try_eat(',')) continue;
      cur.expect(']', "']' ending the matrix");
      break;
    }
  }
  int r = static_cast<int>(rows.size());
  int c = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  PolyMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) {
      m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
  }
  return m;
}

IntMatrix parse_int_matrix_impl(Cursor& cur) {
  cur.expect('[', "'['");
  std::vector<std::vector<Int>> rows;
  if (!cur.try_eat(']')) {
    for (;;) {
      cur.skip_ws();
      int l = cur.line, c = cur.col;
      cur.expect('[', "'[' starting a row");
      std::vector<Int> row;
      if (!cur.try_eat(']')) {
        for (;;) {
          row.push_back(cur.integer("a matrix entry"));
          if (cur.try_eat(',')) continue;
          cur.expect(']', "']' ending the row");
          break;
        }
      }
      if (!rows.empty() && row.size() != rows.front().size()) {
        throw ParseError(l, c, "rows have differing lengths");
      }
      rows.push_back(std::move(row));
      if (cur.try_eat(',')) continue;
      cur.expect(']', "']' ending the matrix");
      break;
    }
  }
  int r = static_cast<int>(rows.size());
  int c = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) {
      m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
  }
  return m;
}

std::vector<Int> parse_int_list_impl(Cursor& cur) {
  std::vector<Int> out;
  cur.skip_ws();
  if (cur.raw_end()) return out;
  for (;;) {
    out.push_back(cur.integer("an integer"));
    if (!cur.try_eat(',')) return out;
  }
}

// ----------------------------------------------------------------- rings

RingDescriptor parse_ring_impl(Cursor& cur) {
  cur.skip_ws();
  int l = cur.line, c = cur.col;
  std::string head = cur.ident();
  if (head == "ZZ") {
    if (cur.try_eat('/')) {
      Int n = cur.digits("a modulus");
      return make_integer_ring(n);
    }
    return make_integer_ring(0);
  }
  std::int64_t p = 0;
  if (head == "QQ") {
    p = 0;
  } else if (head == "Fp") {
    cur.expect('(', "'('");
    p = cur.bounded_nat("a characteristic", (1L << 31) - 1);
    cur.expect(')', "')'");
  } else {
    throw ParseError(l, c,
                     "unknown ring '" + head + "' (expected QQ, Fp(p), ZZ)");
  }
  cur.expect('[', "'[' opening the variable list");
  std::vector<std::string> vars;
  for (;;) {
    cur.skip_ws();
    if (!cur.at_ident()) cur.fail("expected a variable name");
    vars.push_back(cur.ident());
    if (cur.try_eat(',')) continue;
    cur.expect(']', "']' closing the variable list");
    break;
  }
  std::optional<Block> mod;
  cur.skip_ws();
  if (cur.peek() == '/') {
    cur.get();
    mod = capture_balanced(cur, '(', ')');
  }
  MonomialOrder ord;
  if (cur.at_ident()) {
    int ol = cur.line, oc = cur.col;
    std::string name = cur.ident();
    if (name == "lex") {
      ord.kind = OrderKind::lex;
    } else if (name == "grevlex") {
      ord.kind = OrderKind::grevlex;
    } else {
      throw ParseError(ol, oc, "unknown monomial order '" + name + "'");
    }
  }
  RingDescriptor base = make_poly_ring(p, vars, ord);
  if (!mod) return base;
  Cursor mc(mod->text, mod->line, mod->col);
  std::vector<Poly> gens = parse_poly_list_impl(mc, base);
  mc.end_check();
  return quotient_ring(base, gens);
}

// ---------------------------------------------------------------- groups

FinAbGroup parse_group_impl(Cursor& cur) {
  cur.skip_ws();
  if (cur.peek() == '0') {
    cur.get();
    return FinAbGroup{};
  }
  std::vector<long> orders;
  for (;;) {
    cur.skip_ws();
    int l = cur.line, c = cur.col;
    std::string head = cur.ident();
    if (head != "Z") {
      throw ParseError(l, c, "expected a Z/n summand");
    }
    cur.expect('/', "'/' in Z/n");
    long n = cur.bounded_nat("a cyclic order", 1L << 20);
    if (n == 0) cur.fail("cyclic order must be positive");
    orders.push_back(n);
    if (!cur.try_eat('+')) break;
  }
  return make_fin_ab(orders);
}

// --------------------------------------------------------------- modules

FPModule parse_module_impl(Cursor& cur, const RingDescriptor& ring) {
  cur.skip_ws();
  char c = cur.peek();
  if (c == '[') {
    if (ring.kind == RingKind::poly) {
      return make_fp_module(ring, parse_poly_matrix_impl(cur, ring));
    }
    return make_fp_module_z(ring, parse_int_matrix_impl(cur));
  }
  if (c == '0') {
    cur.get();
    return fp_zero(ring);
  }
  if (!cur.at_ident()) cur.fail("expected a module literal");
  int l = cur.line, co = cur.col;
  std::string head = cur.ident();
  if (head == "R") {
    cur.skip_ws();
    if (cur.peek() == '^') {
      cur.get();
      long n = cur.bounded_nat("a rank", 4096);
      return fp_free(ring, static_cast<int>(n));
    }
    if (cur.peek() == '/') {
      cur.get();
      if (ring.kind == RingKind::poly) {
        Block b = capture_balanced(cur, '(', ')');
        Cursor bc(b.text, b.line, b.col);
        std::vector<Poly> gens = parse_poly_list_impl(bc, ring);
        bc.end_check();
        return fp_cyclic(groebner_basis(ring, gens));
      }
      Block b = capture_balanced(cur, '(', ')');
      Cursor bc(b.text, b.line, b.col);
      Int g = 0;
      for (const Int& v : parse_int_list_impl(bc)) {
        Int t;
        mpz_gcd(t.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        g = t;
      }
      bc.end_check();
      return fp_cyclic_z(ring, g);
    }
    return fp_free(ring, 1);
  }
  if (head == "Z" && ring.kind == RingKind::integer) {
    // Canonical-decomposition literal: summands Z, Z^r, Z/m joined by +.
    long free_rank = 0;
    std::vector<long> orders;
    for (;;) {
      cur.skip_ws();
      if (cur.peek() == '^') {
        cur.get();
        free_rank += cur.bounded_nat("a rank", 4096);
      } else if (cur.peek() == '/') {
        cur.get();
        long n = cur.bounded_nat("a cyclic order", 1L << 20);
        if (n == 0) cur.fail("cyclic order must be positive");
        orders.push_back(n);
      } else {
        free_rank += 1;
      }
      if (!cur.try_eat('+')) break;
      cur.skip_ws();
      int sl = cur.line, sc = cur.col;
      if (cur.ident() != "Z") {
        throw ParseError(sl, sc, "expected a Z summand");
      }
    }
    if (free_rank > 0 && ring.int_modulus != 0) {
      throw ParseError(l, co, "free summand Z requires the ring ZZ");
    }
    FinAbGroup g = make_fin_ab(orders);
    if (free_rank == 0) return fin_ab_module(ring, g);
    if (g.parts.empty()) return fp_free(ring, static_cast<int>(free_rank));
    int t = static_cast<int>(g.parts.size());
    IntMatrix rel(static_cast<int>(free_rank) + t, t);
    for (int i = 0; i < t; ++i) {
      rel.at(static_cast<int>(free_rank) + i, i) =
          g.parts[static_cast<size_t>(i)];
    }
    return make_fp_module_z(ring, rel);
  }
  throw ParseError(l, co, "unknown module literal '" + head + "'");
}

std::vector<FPModule> parse_module_list_impl(Cursor& cur,
                                             const RingDescriptor& ring) {
  std::vector<FPModule> out;
  cur.skip_ws();
  if (cur.raw_end()) return out;
  for (;;) {
    out.push_back(parse_module_impl(cur, ring));
    if (!cur.try_eat(';')) return out;
  }
}

std::string order_name(OrderKind k) {
  return k == OrderKind::lex ? "lex" : "grevlex";
}

}  // namespace

// ------------------------------------------------------- public parsers

RingDescriptor parse_ring(const std::string& text) {
  Cursor cur(text);
  RingDescriptor r = parse_ring_impl(cur);
  cur.end_check();
  return r;
}

Poly parse_poly(const std::string& text, const RingDescriptor& ring) {
  Cursor cur(text);
  Poly f = parse_expr(cur, ring);
  cur.end_check();
  return f;
}

std::vector<Poly> parse_poly_list(const std::string& text,
                                  const RingDescriptor& ring) {
  Cursor cur(text);
  std::vector<Poly> fs = parse_poly_list_impl(cur, ring);
  cur.end_check();
  return fs;
}

PolyMatrix parse_poly_matrix(const std::string& text,
                             const RingDescriptor& ring) {
  Cursor cur(text);
  PolyMatrix m = parse_poly_matrix_impl(cur, ring);
  cur.end_check();
  return m;
}

IntMatrix parse_int_matrix(const std::string& text) {
  Cursor cur(text);
  IntMatrix m = parse_int_matrix_impl(cur);
  cur.end_check();
  return m;
}

std::vector<Int> parse_int_list(const std::string& text) {
  Cursor cur(text);
  std::vector<Int> out = parse_int_list_impl(cur);
  cur.end_check();
  return out;
}

FinAbGroup parse_group(const std::string& text) {
  Cursor cur(text);
  FinAbGroup g = parse_group_impl(cur);
  cur.end_check();
  return g;
}

std::vector<FinAbGroup> parse_group_list(const std::string& text) {
  Cursor cur(text);
  std::vector<FinAbGroup> out;
  cur.skip_ws();
  if (cur.raw_end()) return out;
  for (;;) {
    out.push_back(parse_group_impl(cur));
    if (!cur.try_eat(',')) break;
  }
  cur.end_check();
  return out;
}

FPModule parse_module(const std::string& text, const RingDescriptor& ring) {
  Cursor cur(text);
  FPModule m = parse_module_impl(cur, ring);
  cur.end_check();
  return m;
}

std::vector<FPModule> parse_module_list(const std::string& text,
                                        const RingDescriptor& ring) {
  Cursor cur(text);
  std::vector<FPModule> ms = parse_module_list_impl(cur, ring);
  cur.end_check();
  return ms;
}

WideSubcat parse_wide(const std::string& text,
                      const std::optional<RingDescriptor>& fallback_ring) {
  Cursor cur(text);
  Cursor saved = cur;
  if (cur.at_ident() && cur.ident() == "wide") {
    Block rb = capture_balanced(cur, '[', ']');
    Cursor rc(rb.text, rb.line, rb.col);
    RingDescriptor ring = parse_ring_impl(rc);
    rc.end_check();
    Block mb = capture_balanced(cur, '{', '}');
    cur.end_check();
    Cursor mc(mb.text, mb.line, mb.col);
    std::vector<FPModule> mods = parse_module_list_impl(mc, ring);
    mc.end_check();
    return wide_generated_by(ring, std::move(mods));
  }
  cur = saved;
  if (!fallback_ring) {
    cur.skip_ws();
    cur.fail("a bare module list needs a declared ring");
  }
  std::vector<FPModule> mods = parse_module_list_impl(cur, *fallback_ring);
  cur.end_check();
  return wide_generated_by(*fallback_ring, std::move(mods));
}

ClosedLocus parse_locus(const std::string& text, const RingDescriptor& ring) {
  Cursor cur(text);
  cur.skip_ws();
  int l = cur.line, c = cur.col;
  if (cur.ident() != "V") {
    throw ParseError(l, c, "expected a locus V(...)");
  }
  Block b = capture_balanced(cur, '(', ')');
  cur.end_check();
  Cursor bc(b.text, b.line, b.col);
  if (ring.kind == RingKind::integer) {
    Int g = 0;
    for (const Int& v : parse_int_list_impl(bc)) {
      Int t;
      mpz_gcd(t.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      g = t;
    }
    bc.end_check();
    return locus_from_ideal_z(ring, g);
  }
  std::vector<Poly> gens = parse_poly_list_impl(bc, ring);
  bc.end_check();
  return locus_from_ideal(groebner_basis(ring, gens));
}

SpecZSet parse_specz(const std::string& text) {
  Cursor cur(text);
  bool cofinite = cur.try_eat('~');
  cur.expect('{', "'{'");
  std::vector<Int> points;
  if (!cur.try_eat('}')) {
    for (;;) {
      points.push_back(cur.digits("a prime"));
      if (cur.try_eat(',')) continue;
      cur.expect('}', "'}'");
      break;
    }
  }
  bool generic = false;
  cur.skip_ws();
  if (cur.peek() == '+') {
    cur.get();
    cur.skip_ws();
    int l = cur.line, c = cur.col;
    if (cur.ident() != "generic") {
      throw ParseError(l, c, "expected 'generic'");
    }
    generic = true;
  }
  cur.end_check();
  return make_specz(cofinite, std::move(points), generic);
}

ZModuleDescriptor parse_zmodule(const std::string& text) {
  Cursor cur(text);
  cur.skip_ws();
  if (cur.peek() == '0') {
    cur.get();
    cur.end_check();
    return {};
  }
  ZModuleDescriptor out;
  for (;;) {
    cur.skip_ws();
    int l = cur.line, c = cur.col;
    std::string head = cur.ident();
    if (head == "Q") {
      out.summands.push_back({ZSummandKind::rationals, 0, 0});
    } else if (head == "Z_") {
      // ident() already ate the underscore of Z_(p).
      cur.expect('(', "'(' in Z_(p)");
      Int p = cur.digits("a prime");
      cur.expect(')', "')'");
      if (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) {
        throw ParseError(l, c, "Z_(p) needs a prime p");
      }
      out.summands.push_back({ZSummandKind::local, p, 0});
    } else if (head == "Z") {
      cur.skip_ws();
      if (cur.peek() == '/') {
        cur.get();
        Int m = cur.digits("a modulus");
        long k = 1;
        if (cur.try_eat('^')) k = cur.bounded_nat("an exponent", 64);
        if (m == 0) cur.fail("modulus must be positive");
        Int full;
        mpz_pow_ui(full.get_mpz_t(), m.get_mpz_t(),
                   static_cast<unsigned long>(k));
        for (const auto& [p, e] : factor_int(full)) {
          out.summands.push_back({ZSummandKind::primary, p, e});
        }
      } else {
        out.summands.push_back({ZSummandKind::integers, 0, 0});
      }
    } else {
      throw ParseError(l, c, "expected a summand Z, Q, Z_(p), or Z/p^k");
    }
    if (!cur.try_eat('+')) break;
  }
  cur.end_check();
  return out;
}

FreeComplex parse_complex(const std::string& text,
                          const RingDescriptor& ring) {
  Cursor cur(text);
  cur.expect('{', "'{'");
  std::optional<long> low;
  std::optional<std::vector<int>> ranks;
  struct DEntry {
    AnyMatrix mat;
    int line;
    int col;
  };
  std::map<long, DEntry> dmats;
  for (;;) {
    cur.skip_ws();
    if (cur.try_eat('}')) break;
    int l = cur.line, c = cur.col;
    std::string key = cur.ident();
    cur.expect('=', "'=' after the key");
    if (key == "low") {
      if (low) throw ParseError(l, c, "duplicate key 'low'");
      Int v = cur.integer("an integer");
      if (!v.fits_slong_p()) throw ParseError(l, c, "low is out of range");
      low = v.get_si();
    } else if (key == "ranks") {
      if (ranks) throw ParseError(l, c, "duplicate key 'ranks'");
      cur.expect('[', "'['");
      std::vector<int> rs;
      if (!cur.try_eat(']')) {
        for (;;) {
          rs.push_back(static_cast<int>(cur.bounded_nat("a rank", 4096)));
          if (cur.try_eat(',')) continue;
          cur.expect(']', "']'");
          break;
        }
      }
      ranks = std::move(rs);
    } else if (key.size() > 1 && key[0] == 'd' &&
               std::isdigit(static_cast<unsigned char>(key[1]))) {
      long n = 0;
      for (size_t i = 1; i < key.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(key[i]))) {
          throw ParseError(l, c, "unknown key '" + key + "'");
        }
        n = n * 10 + (key[i] - '0');
        if (n > 1000000) throw ParseError(l, c, "differential index too large");
      }
      if (dmats.count(n)) {
        throw ParseError(l, c, "duplicate key '" + key + "'");
      }
      AnyMatrix m = ring.kind == RingKind::poly
                        ? AnyMatrix(parse_poly_matrix_impl(cur, ring))
                        : AnyMatrix(parse_int_matrix_impl(cur));
      dmats.emplace(n, DEntry{std::move(m), l, c});
    } else {
      throw ParseError(l, c, "unknown key '" + key + "'");
    }
    cur.skip_ws();
    if (cur.try_eat(';')) continue;
    cur.expect('}', "'}' or ';'");
    break;
  }
  cur.end_check();
  if (!ranks) {
    throw ParseError(1, 1, "a complex literal needs a 'ranks' entry");
  }
  long lo = low.value_or(0);
  long len = static_cast<long>(ranks->size());
  for (const auto& [n, e] : dmats) {
    if (n < lo + 1 || n > lo + len - 1) {
      throw ParseError(e.line, e.col, "differential index out of range");
    }
  }
  std::vector<AnyMatrix> diffs;
  for (long i = 0; i + 1 < len; ++i) {
    long n = lo + i + 1;
    auto it = dmats.find(n);
    if (it != dmats.end()) {
      diffs.push_back(std::move(it->second.mat));
    } else if (ring.kind == RingKind::poly) {
      diffs.emplace_back(PolyMatrix((*ranks)[static_cast<size_t>(i)],
                                    (*ranks)[static_cast<size_t>(i + 1)]));
    } else {
      diffs.emplace_back(IntMatrix((*ranks)[static_cast<size_t>(i)],
                                   (*ranks)[static_cast<size_t>(i + 1)]));
    }
  }
  return make_complex(ring, static_cast<int>(lo), std::move(*ranks),
                      std::move(diffs));
}

// ------------------------------------------------------ public printers

std::string ring_to_string(const RingDescriptor& ring) {
  if (ring.kind == RingKind::integer) {
    if (ring.int_modulus == 0) return "ZZ";
    return "ZZ/" + ring.int_modulus.get_str();
  }
  std::string out = ring.characteristic == 0
                        ? "QQ"
                        : "Fp(" + std::to_string(ring.characteristic) + ")";
  out += "[";
  for (size_t i = 0; i < ring.vars.size(); ++i) {
    if (i) out += ",";
    out += ring.vars[i];
  }
  out += "]";
  if (!ring.modulus.empty()) {
    out += "/(" + poly_list_to_string(ring.modulus, ring) + ")";
  }
  out += " " + order_name(ring.order.kind);
  return out;
}

std::string poly_to_string(const Poly& f, const RingDescriptor& ring) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : f.terms()) {
    bool neg = false;
    std::string cs;
    if (ring.characteristic == 0) {
      neg = sgn(t.c.rat()) < 0;
      cs = Rat(abs(t.c.rat())).get_str();
    } else {
      cs = std::to_string(t.c.residue_value());
    }
    std::string mono;
    for (int i = 0; i < ring.nvars(); ++i) {
      std::uint32_t e = t.m.e[static_cast<size_t>(i)];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring.vars[static_cast<size_t>(i)];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    std::string body;
    if (mono.empty()) {
      body = cs;
    } else if (cs == "1") {
      body = mono;
    } else {
      body = cs + "*" + mono;
    }
    if (first) {
      out += (neg ? "-" : "") + body;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  return out;
}

std::string poly_list_to_string(const std::vector<Poly>& fs,
                                const RingDescriptor& ring) {
  std::string out;
  for (size_t i = 0; i < fs.size(); ++i) {
    if (i) out += ", ";
    out += poly_to_string(fs[i], ring);
  }
  return out;
}

std::string poly_matrix_to_string(const PolyMatrix& m,
                                  const RingDescriptor& ring) {
  std::string out = "[";
  for (int i = 0; i < m.rows; ++i) {
    if (i) out += ", ";
    out += "[";
    for (int j = 0; j < m.cols; ++j) {
      if (j) out += ", ";
      out += poly_to_string(m.at(i, j), ring);
    }
    out += "]";
  }
  out += "]";
  return out;
}

std::string int_matrix_to_string(const IntMatrix& m) {
  std::string out = "[";
  for (int i = 0; i < m.rows; ++i) {
    if (i) out += ", ";
    out += "[";
    for (int j = 0; j < m.cols; ++j) {
      if (j) out += ", ";
      out += m.at(i, j).get_str();
    }
    out += "]";
  }
  out += "]";
  return out;
}

std::string any_matrix_to_string(const AnyMatrix& m,
                                 const RingDescriptor& ring) {
  if (const auto* pm = std::get_if<PolyMatrix>(&m)) {
    return poly_matrix_to_string(*pm, ring);
  }
  return int_matrix_to_string(std::get<IntMatrix>(m));
}

std::string locus_to_string(const ClosedLocus& l) {
  if (l.ring.kind == RingKind::integer) {
    return "V(" + std::get<Int>(l.data).get_str() + ")";
  }
  const IdealGB& a = std::get<IdealGB>(l.data);
  if (a.gens.empty()) return "V(0)";
  return "V(" + poly_list_to_string(a.gens, l.ring) + ")";
}

std::string module_to_string(const FPModule& m) {
  if (m.ring.kind == RingKind::poly) {
    const FPModule simp = simplified_presentation(m);
    const PolyMatrix& rel = std::get<PolyMatrix>(simp.rel);
    bool all_zero = true;
    for (const Poly& f : rel.a) {
      if (!f.is_zero()) all_zero = false;
    }
    if (simp.ngens == 0) return "0";
    if (all_zero) {
      return simp.ngens == 1 ? "R" : "R^" + std::to_string(simp.ngens);
    }
    if (simp.ngens == 1) {
      std::vector<Poly> gens;
      for (int j = 0; j < rel.cols; ++j) {
        if (!rel.at(0, j).is_zero()) gens.push_back(rel.at(0, j));
      }
      return "R/(" + poly_list_to_string(gens, m.ring) + ")";
    }
    return poly_matrix_to_string(rel, m.ring);
  }
  // Integer rings: print the canonical decomposition Z^r+Z/q1+...
  const IntMatrix& rel = std::get<IntMatrix>(m.rel);
  IntMatrix work = rel;
  if (m.ring.int_modulus != 0) {
    IntMatrix nid(m.ngens, m.ngens);
    for (int i = 0; i < m.ngens; ++i) nid.at(i, i) = m.ring.int_modulus;
    work = mat_hcat(rel, nid);
  }
  std::vector<Int> diag;
  if (work.cols > 0) diag = smith_normal_form(work).diagonal();
  long free_rank = 0;
  std::vector<Int> parts;
  for (int i = 0; i < m.ngens; ++i) {
    Int d = i < static_cast<int>(diag.size())
                ? Int(abs(diag[static_cast<size_t>(i)]))
                : Int(0);
    if (d == 0) {
      ++free_rank;
    } else if (d != 1) {
      for (const auto& [p, e] : factor_int(d)) {
        Int q;
        mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(),
                   static_cast<unsigned long>(e));
        parts.push_back(q);
      }
    }
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  if (free_rank == 1) {
    out = "Z";
  } else if (free_rank > 1) {
    out = "Z^" + std::to_string(free_rank);
  }
  for (const Int& q : parts) {
    if (!out.empty()) out += "+";
    out += "Z/" + q.get_str();
  }
  return out.empty() ? "0" : out;
}

std::string specz_to_string(const SpecZSet& s) {
  std::string out = s.cofinite ? "~{" : "{";
  for (size_t i = 0; i < s.points.size(); ++i) {
    if (i) out += ",";
    out += s.points[i].get_str();
  }
  out += "}";
  if (s.generic) out += "+generic";
  return out;
}

std::string complex_to_string(const FreeComplex& x) {
  std::string out = "{low=" + std::to_string(x.low) + "; ranks=[";
  for (size_t i = 0; i < x.ranks.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(x.ranks[i]);
  }
  out += "]";
  for (size_t i = 0; i < x.diffs.size(); ++i) {
    out += "; d" + std::to_string(x.low + static_cast<int>(i) + 1) + "=" +
           any_matrix_to_string(x.diffs[i], x.ring);
  }
  out += "}";
  return out;
}

}  // namespace widecat
