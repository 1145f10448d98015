#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "idealis/ideal_theory.hpp"
#include "idealis/semigroup.hpp"

namespace idealis {

struct SourcePos {
  int line = 1;
  int col = 1;
};

struct ParseError : Error {
  ParseError(const std::string& msg, SourcePos p)
      : Error("parse error at line " + std::to_string(p.line) + ", column " +
              std::to_string(p.col) + ": " + msg),
        pos(p) {}
  SourcePos pos;
};

enum class EngineKind { Polynomial, SemigroupQ, SemigroupZ };

// One ring per script.  Either a (quotient of a) polynomial ring over Q or a
// numerical-semigroup power-series ring over Q or Z.
struct RingSpec {
  EngineKind engine = EngineKind::Polynomial;
  std::vector<std::string> vars;
  MonomialOrder order;
  std::vector<Polynomial> relations;
  std::vector<int> sg_gens;

  friend bool operator==(const RingSpec& a, const RingSpec& b) {
    return a.engine == b.engine && a.vars == b.vars && a.order == b.order &&
           a.relations == b.relations && a.sg_gens == b.sg_gens;
  }
};

// Generators as written: polynomials for the polynomial engine, coefficient
// and exponent pairs for the semigroup engines.
struct IdealLiteral {
  std::vector<Polynomial> polys;
  std::vector<std::pair<Rational, int>> terms;  // (coefficient, exponent)
  friend bool operator==(const IdealLiteral&, const IdealLiteral&) = default;
};

struct Binding {
  std::string name;
  IdealLiteral value;
  friend bool operator==(const Binding&, const Binding&) = default;
};

// Product of powers of bound names, e.g. I^2*J.
struct IdealRef {
  struct Factor {
    std::string name;
    int power = 1;
    friend bool operator==(const Factor&, const Factor&) = default;
  };
  std::vector<Factor> factors;
  std::string str() const;
  friend bool operator==(const IdealRef&, const IdealRef&) = default;
};

enum class CommandKind {
  Equal,
  Contains,
  Member,
  Reduction,
  RR,
  PowerScan,
  ExpEqual,
  BigScan,
  MinSub,
  RadEqual,
  Dim,
  Guarantees,
};

std::string command_name(CommandKind k);

// Right-hand side of an `assert ... == ...` check.
struct Expected {
  enum class Kind {
    Bool,
    Int,
    CollapseAt,
    NoCollapse,
    ReductionAt,
    NoReduction,
    Yes,
    No,
    Unknown,
    IdealLit,
    Witness,
    WitnessAt,
    NoWitness,
    Tags,
  } kind = Kind::Bool;
  bool b = false;
  int n = 0;
  IdealLiteral ideal;
  std::vector<std::string> tags;
  friend bool operator==(const Expected&, const Expected&) = default;
};

struct Command {
  CommandKind kind = CommandKind::Equal;
  SourcePos pos;
  std::vector<IdealRef> refs;
  std::optional<Polynomial> poly;                     // member, polynomial engine
  std::optional<std::pair<Rational, int>> term;       // member, semigroup engines
  std::optional<int> nmax, mmax, window, budget;      // only when written explicitly
  std::vector<IdealRef> candidates;                   // bigscan
  bool is_assert = false;
  std::optional<Expected> expected;

  friend bool operator==(const Command& a, const Command& b) {
    // source position deliberately ignored: pretty-print round trips move text
    return a.kind == b.kind && a.refs == b.refs && a.poly == b.poly && a.term == b.term &&
           a.nmax == b.nmax && a.mmax == b.mmax && a.window == b.window && a.budget == b.budget &&
           a.candidates == b.candidates && a.is_assert == b.is_assert && a.expected == b.expected;
  }
};

struct SessionScript {
  RingSpec ring;
  std::vector<Binding> bindings;
  std::vector<Command> commands;
  friend bool operator==(const SessionScript&, const SessionScript&) = default;
};

SessionScript parse_script(const std::string& source);
std::string to_text(const SessionScript& script);
std::string command_text(const Command& c, const RingSpec& ring);

struct ExecOptions {
  int nmax = 8;
  int mmax = 8;
  int window = 2;
  int budget = 200;
  uint64_t seed = 0;
};

struct CommandResult {
  std::string command;
  std::vector<std::string> inputs;
  nlohmann::json verdict;
  std::optional<std::string> certificate;
  nlohmann::json bounds = nlohmann::json::object();
  std::vector<std::string> heuristic_flags;
  double elapsed_ms = 0.0;
  bool is_assert = false;
  std::optional<bool> pass;       // set for asserts (or errors)
  std::optional<std::string> error;
  std::string text;               // one-line rendering
};

struct RunReport {
  std::vector<CommandResult> results;
  bool ok = true;
};

RunReport execute(const SessionScript& script, const ExecOptions& options);

nlohmann::json to_json(const RunReport& report, const SessionScript& script);
std::string to_text(const RunReport& report);

}  // namespace idealis
