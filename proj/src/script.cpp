#include "idealis/script.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace idealis {

namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  long value = 0;
  SourcePos pos;
};

const std::set<std::string> kCommandWords = {
    "equal",   "contains", "member", "reduction", "rr",       "powerscan",
    "expequal", "bigscan",  "minsub", "radequal",  "dim",      "guarantees"};

const std::set<std::string> kReserved = {
    "ring",  "order", "over", "ideal",  "assert", "max",   "window", "budget",
    "candidates", "true", "false", "collapse", "nocollapse", "reduction",
    "noreduction", "yes", "no", "unknown", "witness", "nowitness", "equal",
    "contains", "member", "rr", "powerscan", "expequal", "bigscan", "minsub",
    "radequal", "dim", "guarantees", "Q", "Z", "sg"};

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  SourcePos pos;
  size_t i = 0;
  auto advance = [&](char c) {
    if (c == '\n') {
      ++pos.line;
      pos.col = 1;
    } else {
      ++pos.col;
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '#') {  // comment to end of line
      while (i < src.size() && src[i] != '\n') advance(src[i++]);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(c);
      ++i;
      continue;
    }
    SourcePos start = pos;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string word;
      while (i < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
        word.push_back(src[i]);
        advance(src[i++]);
      }
      out.push_back({Tok::Ident, word, 0, start});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
        num.push_back(src[i]);
        advance(src[i++]);
      }
      if (num.size() > 18) throw ParseError("integer literal too large", start);
      out.push_back({Tok::Int, num, std::stol(num), start});
      continue;
    }
    if (c == '=' && i + 1 < src.size() && src[i + 1] == '=') {
      out.push_back({Tok::Punct, "==", 0, start});
      advance(src[i++]);
      advance(src[i++]);
      continue;
    }
    static const std::string singles = ";,()[]<>=^*+-/";
    if (singles.find(c) != std::string::npos) {
      out.push_back({Tok::Punct, std::string(1, c), 0, start});
      advance(src[i++]);
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }
  out.push_back({Tok::End, "", 0, pos});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& src) : toks_(lex(src)) {}

  SessionScript parse() {
    SessionScript s;
    if (!(peek().kind == Tok::Ident && peek().text == "ring"))
      throw ParseError("script must start with a ring declaration", peek().pos);
    s.ring = parse_ring();
    while (peek().kind != Tok::End) {
      if (peek().kind == Tok::Ident && peek().text == "ring")
        throw ParseError("only one ring per script", peek().pos);
      if (peek().kind == Tok::Ident && !is_command_start() && peek2().text == "=") {
        s.bindings.push_back(parse_binding(s));
      } else {
        s.commands.push_back(parse_command(s));
      }
    }
    return s;
  }

 private:
  const Token& peek() const { return toks_[idx_]; }
  const Token& peek2() const { return toks_[std::min(idx_ + 1, toks_.size() - 1)]; }
  Token next() { return toks_[idx_++]; }

  bool is_command_start() const {
    return peek().kind == Tok::Ident &&
           (peek().text == "assert" || kCommandWords.count(peek().text));
  }

  void expect_punct(const std::string& p) {
    if (!(peek().kind == Tok::Punct && peek().text == p))
      throw ParseError("expected '" + p + "'", peek().pos);
    next();
  }
  bool accept_punct(const std::string& p) {
    if (peek().kind == Tok::Punct && peek().text == p) {
      next();
      return true;
    }
    return false;
  }
  std::string expect_ident(const std::string& what) {
    if (peek().kind != Tok::Ident) throw ParseError("expected " + what, peek().pos);
    return next().text;
  }
  int expect_int(const std::string& what) {
    if (peek().kind != Tok::Int) throw ParseError("expected " + what, peek().pos);
    long v = next().value;
    if (v > 1000000) throw ParseError(what + " out of range", peek().pos);
    return static_cast<int>(v);
  }
  bool accept_word(const std::string& w) {
    if (peek().kind == Tok::Ident && peek().text == w) {
      next();
      return true;
    }
    return false;
  }

  RingSpec parse_ring() {
    RingSpec spec;
    next();  // ring
    if (accept_word("sg")) {
      expect_punct("<");
      spec.sg_gens.push_back(expect_int("semigroup generator"));
      while (accept_punct(",")) spec.sg_gens.push_back(expect_int("semigroup generator"));
      expect_punct(">");
      if (!accept_word("over")) throw ParseError("expected 'over'", peek().pos);
      std::string field = expect_ident("coefficient domain (Q or Z)");
      if (field == "Q")
        spec.engine = EngineKind::SemigroupQ;
      else if (field == "Z")
        spec.engine = EngineKind::SemigroupZ;
      else
        throw ParseError("coefficient domain must be Q or Z", peek().pos);
      spec.vars = {"t"};
      expect_punct(";");
      return spec;
    }
    if (!accept_word("Q")) throw ParseError("expected 'Q[...]' or 'sg<...>'", peek().pos);
    spec.engine = EngineKind::Polynomial;
    expect_punct("[");
    spec.vars.push_back(expect_ident("variable name"));
    while (accept_punct(",")) spec.vars.push_back(expect_ident("variable name"));
    expect_punct("]");
    for (const std::string& v : spec.vars)
      if (kReserved.count(v)) throw ParseError("'" + v + "' is reserved", peek().pos);

    // relations are lexed now but parsed only once the order clause is known
    size_t rel_start = 0, rel_end = 0;
    if (accept_punct("/")) {
      expect_punct("(");
      rel_start = idx_;
      int depth = 1;
      while (depth > 0) {
        if (peek().kind == Tok::End) throw ParseError("unterminated relation list", peek().pos);
        if (peek().kind == Tok::Punct && peek().text == "(") ++depth;
        if (peek().kind == Tok::Punct && peek().text == ")") --depth;
        next();
      }
      rel_end = idx_ - 1;
    }
    spec.order = MonomialOrder::grevlex();
    if (accept_word("order")) {
      std::string o = expect_ident("order name");
      if (o == "lex")
        spec.order = MonomialOrder::lex();
      else if (o == "grevlex")
        spec.order = MonomialOrder::grevlex();
      else
        throw ParseError("unknown order '" + o + "'", peek().pos);
    }
    expect_punct(";");

    if (rel_end > rel_start) {  // parse the saved relation tokens with the final order
      size_t save = idx_;
      idx_ = rel_start;
      spec.relations.push_back(parse_poly_expr(spec));
      while (accept_punct(",")) spec.relations.push_back(parse_poly_expr(spec));
      if (idx_ != rel_end) throw ParseError("malformed relation list", peek().pos);
      idx_ = save;
      for (const Polynomial& r : spec.relations)
        if (r.is_zero()) throw ParseError("zero relation", peek().pos);
    }
    return spec;
  }

  Rational parse_coefficient() {
    long num = peek().value;
    SourcePos p = peek().pos;
    next();
    if (accept_punct("/")) {
      if (peek().kind != Tok::Int) throw ParseError("expected denominator", peek().pos);
      long den = next().value;
      if (den == 0) throw ParseError("zero denominator", p);
      return Rational(Integer(num), Integer(den));
    }
    return Rational(Integer(num));
  }

  // expr := ['-'] product (('+'|'-') product)*
  Polynomial parse_poly_expr(const RingSpec& ring) {
    bool neg = accept_punct("-");
    Polynomial acc = parse_poly_product(ring);
    if (neg) acc = -acc;
    while (true) {
      if (accept_punct("+")) {
        acc = acc + parse_poly_product(ring);
      } else if (accept_punct("-")) {
        acc = acc - parse_poly_product(ring);
      } else {
        return acc;
      }
    }
  }

  // product := factor ('*' factor)*   (implicit multiplication is an error)
  Polynomial parse_poly_product(const RingSpec& ring) {
    Polynomial acc = parse_poly_factor(ring);
    while (accept_punct("*")) acc = acc * parse_poly_factor(ring);
    return acc;
  }

  // factor := atom ['^' INT]
  Polynomial parse_poly_factor(const RingSpec& ring) {
    Polynomial base = parse_poly_atom(ring);
    if (accept_punct("^")) {
      int e = expect_int("exponent");
      Polynomial acc = Polynomial::constant(base.nvars(), base.order(), Rational(1));
      for (int k = 0; k < e; ++k) acc = acc * base;
      return acc;
    }
    return base;
  }

  Polynomial parse_poly_atom(const RingSpec& ring) {
    int n = static_cast<int>(ring.vars.size());
    if (accept_punct("(")) {
      Polynomial e = parse_poly_expr(ring);
      expect_punct(")");
      return e;
    }
    if (peek().kind == Tok::Int)
      return Polynomial::constant(n, ring.order, parse_coefficient());
    if (peek().kind == Tok::Ident) {
      auto it = std::find(ring.vars.begin(), ring.vars.end(), peek().text);
      if (it == ring.vars.end())
        throw ParseError("unknown variable '" + peek().text + "'", peek().pos);
      next();
      return Polynomial::variable(n, ring.order, static_cast<int>(it - ring.vars.begin()));
    }
    throw ParseError("expected a polynomial", peek().pos);
  }

  // semigroup generator / member argument: [coeff '*'] t ['^' INT] | coeff
  std::pair<Rational, int> parse_sg_term() {
    SourcePos p = peek().pos;
    bool neg = accept_punct("-");
    Rational c(1);
    bool have_coeff = false;
    if (peek().kind == Tok::Int) {
      c = parse_coefficient();
      have_coeff = true;
      if (!accept_punct("*")) {
        if (neg) c = -c;
        return {c, 0};  // plain constant means exponent zero
      }
    }
    (void)have_coeff;
    if (!(peek().kind == Tok::Ident && peek().text == "t"))
      throw ParseError("expected a term like 2*t^5", p);
    next();
    int e = 1;
    if (accept_punct("^")) e = expect_int("exponent");
    if (neg) c = -c;
    if (c.is_zero()) throw ParseError("zero coefficient in term", p);
    return {c, e};
  }

  IdealLiteral parse_ideal_literal(const SessionScript& s) {
    IdealLiteral lit;
    if (!accept_word("ideal")) throw ParseError("expected 'ideal(...)'", peek().pos);
    expect_punct("(");
    if (accept_punct(")")) return lit;  // zero ideal
    do {
      if (s.ring.engine == EngineKind::Polynomial)
        lit.polys.push_back(parse_poly_expr(s.ring));
      else
        lit.terms.push_back(parse_sg_term());
    } while (accept_punct(","));
    expect_punct(")");
    return lit;
  }

  Binding parse_binding(SessionScript& s) {
    SourcePos p = peek().pos;
    std::string name = expect_ident("binding name");
    if (kReserved.count(name)) throw ParseError("'" + name + "' is reserved", p);
    if (s.ring.engine == EngineKind::Polynomial) {
      for (const std::string& v : s.ring.vars)
        if (v == name) throw ParseError("'" + name + "' is already a variable", p);
    } else if (name == "t") {
      throw ParseError("'t' is already a variable", p);
    }
    for (const Binding& b : s.bindings)
      if (b.name == name) throw ParseError("'" + name + "' is already bound", p);
    expect_punct("=");
    Binding b{name, parse_ideal_literal(s)};
    expect_punct(";");
    return b;
  }

  IdealRef parse_ideal_ref(const SessionScript& s) {
    IdealRef ref;
    do {
      SourcePos p = peek().pos;
      std::string name = expect_ident("ideal name");
      bool bound = std::any_of(s.bindings.begin(), s.bindings.end(),
                               [&](const Binding& b) { return b.name == name; });
      if (!bound) throw ParseError("unbound name '" + name + "'", p);
      int power = 1;
      if (accept_punct("^")) {
        power = expect_int("power");
        if (power < 1) throw ParseError("power must be positive", p);
      }
      ref.factors.push_back({name, power});
    } while (accept_punct("*"));
    return ref;
  }

  Expected parse_expected(const SessionScript& s) {
    Expected e;
    if (accept_word("true")) {
      e.kind = Expected::Kind::Bool;
      e.b = true;
    } else if (accept_word("false")) {
      e.kind = Expected::Kind::Bool;
      e.b = false;
    } else if (peek().kind == Tok::Int) {
      e.kind = Expected::Kind::Int;
      e.n = expect_int("expected value");
    } else if (accept_word("collapse")) {
      e.kind = Expected::Kind::CollapseAt;
      e.n = expect_int("collapse exponent");
    } else if (accept_word("nocollapse")) {
      e.kind = Expected::Kind::NoCollapse;
    } else if (accept_word("reduction")) {
      e.kind = Expected::Kind::ReductionAt;
      e.n = expect_int("reduction exponent");
    } else if (accept_word("noreduction")) {
      e.kind = Expected::Kind::NoReduction;
    } else if (accept_word("yes")) {
      e.kind = Expected::Kind::Yes;
      e.n = expect_int("power exponent");
    } else if (accept_word("no")) {
      e.kind = Expected::Kind::No;
    } else if (accept_word("unknown")) {
      e.kind = Expected::Kind::Unknown;
    } else if (accept_word("witness")) {
      if (peek().kind == Tok::Int) {
        e.kind = Expected::Kind::WitnessAt;
        e.n = expect_int("collapse exponent");
      } else {
        e.kind = Expected::Kind::Witness;
      }
    } else if (accept_word("nowitness")) {
      e.kind = Expected::Kind::NoWitness;
    } else if (accept_word("guarantees")) {
      e.kind = Expected::Kind::Tags;
      expect_punct("(");
      if (!accept_punct(")")) {
        do {
          std::string tag = expect_ident("guarantee tag");
          std::replace(tag.begin(), tag.end(), '_', '-');
          e.tags.push_back(tag);
        } while (accept_punct(","));
        expect_punct(")");
      }
      std::sort(e.tags.begin(), e.tags.end());
    } else if (peek().kind == Tok::Ident && peek().text == "ideal") {
      e.kind = Expected::Kind::IdealLit;
      e.ideal = parse_ideal_literal(s);
    } else {
      throw ParseError("malformed expected value", peek().pos);
    }
    return e;
  }

  Command parse_command(const SessionScript& s) {
    Command c;
    c.pos = peek().pos;
    c.is_assert = accept_word("assert");
    std::string word = expect_ident("command");
    if (!kCommandWords.count(word)) throw ParseError("unknown command '" + word + "'", c.pos);

    auto ref = [&]() { return parse_ideal_ref(s); };
    auto opt_bound = [&](const char* kw, std::optional<int>& slot) {
      if (accept_word(kw)) slot = expect_int(kw);
    };

    if (word == "equal") {
      c.kind = CommandKind::Equal;
      c.refs = {ref(), ref()};
    } else if (word == "contains") {
      c.kind = CommandKind::Contains;
      c.refs = {ref(), ref()};
    } else if (word == "member") {
      c.kind = CommandKind::Member;
      if (s.ring.engine == EngineKind::Polynomial)
        c.poly = parse_poly_expr(s.ring);
      else
        c.term = parse_sg_term();
      c.refs = {ref()};
    } else if (word == "reduction") {
      c.kind = CommandKind::Reduction;
      c.refs = {ref(), ref()};
      opt_bound("max", c.mmax);
    } else if (word == "rr") {
      c.kind = CommandKind::RR;
      c.refs = {ref()};
      opt_bound("max", c.mmax);
      opt_bound("window", c.window);
    } else if (word == "powerscan") {
      c.kind = CommandKind::PowerScan;
      c.refs = {ref(), ref()};
      opt_bound("max", c.nmax);
    } else if (word == "expequal") {
      c.kind = CommandKind::ExpEqual;
      c.refs = {ref(), ref()};
      opt_bound("max", c.nmax);
    } else if (word == "bigscan") {
      c.kind = CommandKind::BigScan;
      c.refs = {ref()};
      opt_bound("budget", c.budget);
      opt_bound("max", c.nmax);
      if (accept_word("candidates")) {
        c.candidates.push_back(ref());
        while (accept_punct(",")) c.candidates.push_back(ref());
      }
    } else if (word == "minsub") {
      c.kind = CommandKind::MinSub;
      c.refs = {ref(), ref()};
      opt_bound("max", c.nmax);
    } else if (word == "radequal") {
      c.kind = CommandKind::RadEqual;
      c.refs = {ref(), ref()};
    } else if (word == "dim") {
      c.kind = CommandKind::Dim;
      c.refs = {ref()};
    } else if (word == "guarantees") {
      c.kind = CommandKind::Guarantees;
      c.refs = {ref(), ref()};
    }

    if (accept_punct("==")) {
      if (!c.is_assert) throw ParseError("'==' is only allowed after assert", c.pos);
      c.expected = parse_expected(s);
    } else if (c.is_assert) {
      throw ParseError("assert needs '== expected'", c.pos);
    }
    expect_punct(";");
    return c;
  }

  std::vector<Token> toks_;
  size_t idx_ = 0;
};

}  // namespace

std::string command_name(CommandKind k) {
  switch (k) {
    case CommandKind::Equal: return "equal";
    case CommandKind::Contains: return "contains";
    case CommandKind::Member: return "member";
    case CommandKind::Reduction: return "reduction";
    case CommandKind::RR: return "rr";
    case CommandKind::PowerScan: return "powerscan";
    case CommandKind::ExpEqual: return "expequal";
    case CommandKind::BigScan: return "bigscan";
    case CommandKind::MinSub: return "minsub";
    case CommandKind::RadEqual: return "radequal";
    case CommandKind::Dim: return "dim";
    case CommandKind::Guarantees: return "guarantees";
  }
  return "?";
}

std::string IdealRef::str() const {
  std::string s;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) s += "*";
    s += factors[i].name;
    if (factors[i].power != 1) s += "^" + std::to_string(factors[i].power);
  }
  return s;
}

SessionScript parse_script(const std::string& source) { return Parser(source).parse(); }

namespace {

std::string sg_term_str(const std::pair<Rational, int>& t, EngineKind engine) {
  std::ostringstream out;
  if (engine == EngineKind::SemigroupZ || !t.first.is_one()) out << t.first.str() << "*";
  out << "t";
  if (t.second != 1) out << "^" << t.second;
  if (t.second == 0) return t.first.str();  // plain constant
  return out.str();
}

std::string literal_str(const IdealLiteral& lit, const RingSpec& ring) {
  std::ostringstream out;
  out << "ideal(";
  if (ring.engine == EngineKind::Polynomial) {
    RingDescriptor rd(ring.vars, ring.order, ring.relations);
    for (size_t i = 0; i < lit.polys.size(); ++i) {
      if (i) out << ", ";
      out << to_string(lit.polys[i], rd);
    }
  } else {
    for (size_t i = 0; i < lit.terms.size(); ++i) {
      if (i) out << ", ";
      out << sg_term_str(lit.terms[i], ring.engine);
    }
  }
  out << ")";
  return out.str();
}

std::string expected_str(const Expected& e, const RingSpec& ring) {
  switch (e.kind) {
    case Expected::Kind::Bool: return e.b ? "true" : "false";
    case Expected::Kind::Int: return std::to_string(e.n);
    case Expected::Kind::CollapseAt: return "collapse " + std::to_string(e.n);
    case Expected::Kind::NoCollapse: return "nocollapse";
    case Expected::Kind::ReductionAt: return "reduction " + std::to_string(e.n);
    case Expected::Kind::NoReduction: return "noreduction";
    case Expected::Kind::Yes: return "yes " + std::to_string(e.n);
    case Expected::Kind::No: return "no";
    case Expected::Kind::Unknown: return "unknown";
    case Expected::Kind::IdealLit: return literal_str(e.ideal, ring);
    case Expected::Kind::Witness: return "witness";
    case Expected::Kind::WitnessAt: return "witness " + std::to_string(e.n);
    case Expected::Kind::NoWitness: return "nowitness";
    case Expected::Kind::Tags: {
      std::string s = "guarantees(";
      for (size_t i = 0; i < e.tags.size(); ++i) {
        std::string t = e.tags[i];
        std::replace(t.begin(), t.end(), '-', '_');
        if (i) s += ", ";
        s += t;
      }
      return s + ")";
    }
  }
  return "?";
}

}  // namespace

std::string command_text(const Command& c, const RingSpec& ring) {
  std::ostringstream out;
  out << command_name(c.kind);
  if (c.kind == CommandKind::Member) {
    if (c.poly) {
      RingDescriptor rd(ring.vars, ring.order, ring.relations);
      out << " " << to_string(*c.poly, rd);
    } else if (c.term) {
      out << " " << sg_term_str(*c.term, ring.engine);
    }
  }
  for (const IdealRef& r : c.refs) out << " " << r.str();
  if (c.budget) out << " budget " << *c.budget;
  if (c.nmax) out << " max " << *c.nmax;
  if (c.mmax) out << " max " << *c.mmax;
  if (c.window) out << " window " << *c.window;
  if (!c.candidates.empty()) {
    out << " candidates ";
    for (size_t i = 0; i < c.candidates.size(); ++i) {
      if (i) out << ", ";
      out << c.candidates[i].str();
    }
  }
  return out.str();
}

std::string to_text(const SessionScript& s) {
  std::ostringstream out;
  out << "ring ";
  if (s.ring.engine == EngineKind::Polynomial) {
    out << "Q[";
    for (size_t i = 0; i < s.ring.vars.size(); ++i) {
      if (i) out << ",";
      out << s.ring.vars[i];
    }
    out << "]";
    if (!s.ring.relations.empty()) {
      RingDescriptor rd(s.ring.vars, s.ring.order, {});
      out << "/(";
      for (size_t i = 0; i < s.ring.relations.size(); ++i) {
        if (i) out << ", ";
        out << to_string(s.ring.relations[i], rd);
      }
      out << ")";
    }
    out << " order " << s.ring.order.name();
  } else {
    out << "sg<";
    for (size_t i = 0; i < s.ring.sg_gens.size(); ++i) {
      if (i) out << ",";
      out << s.ring.sg_gens[i];
    }
    out << "> over " << (s.ring.engine == EngineKind::SemigroupZ ? "Z" : "Q");
  }
  out << ";\n";
  for (const Binding& b : s.bindings)
    out << b.name << " = " << literal_str(b.value, s.ring) << ";\n";
  for (const Command& c : s.commands) {
    if (c.is_assert) out << "assert ";
    out << command_text(c, s.ring);
    if (c.expected) out << " == " << expected_str(*c.expected, s.ring);
    out << ";\n";
  }
  return out.str();
}

}  // namespace idealis
