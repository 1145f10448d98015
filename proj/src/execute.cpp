#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include "idealis/ideal_theory.hpp"
#include "idealis/script.hpp"
#include "idealis/semigroup.hpp"

namespace idealis {

namespace {

using nlohmann::json;

std::string ideal_str(const Ideal& a) {
  std::ostringstream out;
  out << "ideal(";
  for (size_t i = 0; i < a.generators().size(); ++i) {
    if (i) out << ", ";
    out << to_string(a.generators()[i], *a.ring());
  }
  out << ")";
  return out.str();
}

json bool_verdict(bool v) { return json{{"kind", "bool"}, {"value", v}}; }

// Each engine knows how to resolve references, run the commands its ring
// supports, and check expected values against real objects (ideal equality,
// not string comparison).
class PolyEngine {
 public:
  PolyEngine(const SessionScript& s, const ExecOptions& opt) : script_(s), opt_(opt) {
    ring_ = std::make_shared<const RingDescriptor>(s.ring.vars, s.ring.order, s.ring.relations);
    for (const Binding& b : s.bindings) env_.emplace(b.name, make_ideal(b.value));
  }

  Ideal make_ideal(const IdealLiteral& lit) const { return Ideal(ring_, lit.polys); }

  Ideal resolve(const IdealRef& ref) const {
    std::optional<Ideal> acc;
    for (const auto& f : ref.factors) {
      Ideal part = ideal_power(env_.at(f.name), f.power);
      acc = acc ? ideal_product(*acc, part) : part;
    }
    return *acc;
  }

  void run(const Command& c, CommandResult& r) {
    switch (c.kind) {
      case CommandKind::Equal: {
        bool v = ideal_equal(resolve(c.refs[0]), resolve(c.refs[1]));
        finish_bool(c, r, v);
        break;
      }
      case CommandKind::Contains: {
        bool v = ideal_contains(resolve(c.refs[0]), resolve(c.refs[1]));
        finish_bool(c, r, v);
        break;
      }
      case CommandKind::Member: {
        bool v = is_member(*c.poly, resolve(c.refs[0]));
        finish_bool(c, r, v);
        break;
      }
      case CommandKind::RadEqual: {
        bool v = radical_equal(resolve(c.refs[0]), resolve(c.refs[1]));
        finish_bool(c, r, v);
        break;
      }
      case CommandKind::Dim: {
        int d = dimension(resolve(c.refs[0]));
        r.verdict = json{{"kind", "int"}, {"value", d}};
        r.text += std::to_string(d);
        if (c.expected)
          note_pass(c, r, c.expected->kind == Expected::Kind::Int && c.expected->n == d);
        break;
      }
      case CommandKind::PowerScan: {
        int nmax = c.nmax.value_or(opt_.nmax);
        r.bounds["n_max"] = nmax;
        PowerScanReport rep = power_scan(resolve(c.refs[0]), resolve(c.refs[1]), nmax);
        finish_powerscan(c, r, rep.checked_up_to, rep.per_n, rep.least_equal_n,
                         rep.persistence_verified);
        break;
      }
      case CommandKind::Reduction: {
        int mmax = c.mmax.value_or(opt_.mmax);
        r.bounds["m_max"] = mmax;
        ReductionReport rep = is_reduction(resolve(c.refs[0]), resolve(c.refs[1]), mmax);
        r.verdict = json{{"kind", "reduction"},
                         {"is_reduction", rep.is_reduction},
                         {"checked_up_to", rep.checked_up_to}};
        if (rep.least_m) r.verdict["least_m"] = *rep.least_m;
        if (rep.is_reduction)
          r.text += "reduction at m=" + std::to_string(*rep.least_m);
        else
          r.text += "no reduction up to m=" + std::to_string(rep.checked_up_to);
        if (c.expected) {
          const Expected& e = *c.expected;
          bool ok = (e.kind == Expected::Kind::ReductionAt && rep.is_reduction &&
                     *rep.least_m == e.n) ||
                    (e.kind == Expected::Kind::NoReduction && !rep.is_reduction);
          note_pass(c, r, ok);
        }
        break;
      }
      case CommandKind::RR: {
        int mmax = c.mmax.value_or(opt_.mmax);
        int window = c.window.value_or(opt_.window);
        r.bounds["m_max"] = mmax;
        r.bounds["window"] = window;
        RRClosureResult res = ratliff_rush(resolve(c.refs[0]), mmax, window);
        r.heuristic_flags.push_back("window-stabilization");
        json chain = json::array();
        for (const Ideal& link : res.chain) chain.push_back(ideal_str(link));
        r.verdict = json{{"kind", "rr"},
                         {"closure", ideal_str(res.closure)},
                         {"stabilized_at_m", res.stabilized_at_m},
                         {"window", res.window},
                         {"heuristic", res.heuristic},
                         {"chain", chain}};
        r.text += ideal_str(res.closure) + " (chain stable from m=" +
                  std::to_string(res.stabilized_at_m) + ")";
        if (c.expected)
          note_pass(c, r,
                    c.expected->kind == Expected::Kind::IdealLit &&
                        ideal_equal(res.closure, make_ideal(c.expected->ideal)));
        break;
      }
      case CommandKind::ExpEqual: {
        int nmax = c.nmax.value_or(opt_.nmax);
        r.bounds["n_max"] = nmax;
        r.bounds["m_max"] = opt_.mmax;
        r.bounds["window"] = opt_.window;
        ExpEqualVerdict v =
            is_exponentially_equal(resolve(c.refs[0]), resolve(c.refs[1]), nmax, opt_.mmax,
                                   opt_.window);
        finish_expequal(c, r, v);
        break;
      }
      case CommandKind::BigScan: {
        int budget = c.budget.value_or(opt_.budget);
        int nmax = c.nmax.value_or(opt_.nmax);
        r.bounds["budget"] = budget;
        r.bounds["n_max"] = nmax;
        r.bounds["seed"] = opt_.seed;
        std::vector<Ideal> user;
        for (const IdealRef& ref : c.candidates) user.push_back(resolve(ref));
        BigScanReport rep = big_witness_search(resolve(c.refs[0]), user, budget, nmax, opt_.seed);
        r.heuristic_flags.push_back("bounded-search");
        r.verdict = json{{"kind", "bigscan"},
                         {"found", rep.witness.has_value()},
                         {"candidates_tried", rep.candidates_tried}};
        if (rep.witness) {
          const BigWitness& w = *rep.witness;
          r.verdict["witness"] = ideal_str(w.candidate);
          r.verdict["route"] = w.route;
          if (w.collapse_n) r.verdict["collapse_n"] = *w.collapse_n;
          if (w.route == "rr-containment") r.heuristic_flags.push_back("window-stabilization");
          r.certificate = w.route;
          r.text += "witness " + ideal_str(w.candidate) + " via " + w.route;
          if (w.collapse_n) r.text += " at n=" + std::to_string(*w.collapse_n);
          r.text += " (tried " + std::to_string(rep.candidates_tried) + ")";
        } else {
          r.text += "no witness among " + std::to_string(rep.candidates_tried) + " candidates";
        }
        if (c.expected) {
          const Expected& e = *c.expected;
          bool ok = false;
          if (e.kind == Expected::Kind::Witness) ok = rep.witness.has_value();
          if (e.kind == Expected::Kind::WitnessAt)
            ok = rep.witness && rep.witness->collapse_n && *rep.witness->collapse_n == e.n;
          if (e.kind == Expected::Kind::NoWitness) ok = !rep.witness.has_value();
          note_pass(c, r, ok);
        }
        break;
      }
      case CommandKind::MinSub: {
        int nmax = c.nmax.value_or(opt_.nmax);
        r.bounds["n_max"] = nmax;
        Ideal sub = minimal_exp_equal_subideal(resolve(c.refs[0]), resolve(c.refs[1]), nmax);
        json gens = json::array();
        for (const Polynomial& g : sub.generators()) gens.push_back(to_string(g, *ring_));
        r.verdict = json{{"kind", "minsub"}, {"subideal", ideal_str(sub)}, {"generators", gens}};
        r.text += ideal_str(sub);
        if (c.expected)
          note_pass(c, r,
                    c.expected->kind == Expected::Kind::IdealLit &&
                        ideal_equal(sub, make_ideal(c.expected->ideal)));
        break;
      }
      case CommandKind::Guarantees: {
        std::vector<std::string> tags = strictness_guarantees(resolve(c.refs[0]),
                                                              resolve(c.refs[1]));
        std::sort(tags.begin(), tags.end());  // parser sorts expected tags the same way
        r.verdict = json{{"kind", "guarantees"}, {"tags", tags}};
        if (tags.empty()) {
          r.text += "none";
        } else {
          for (size_t i = 0; i < tags.size(); ++i) r.text += (i ? ", " : "") + tags[i];
        }
        if (c.expected)
          note_pass(c, r, c.expected->kind == Expected::Kind::Tags && c.expected->tags == tags);
        break;
      }
    }
  }

  void finish_bool(const Command& c, CommandResult& r, bool v) {
    r.verdict = bool_verdict(v);
    r.text += v ? "true" : "false";
    if (c.expected)
      note_pass(c, r, c.expected->kind == Expected::Kind::Bool && c.expected->b == v);
  }

  static void note_pass(const Command&, CommandResult& r, bool ok) { r.pass = ok; }

  void finish_powerscan(const Command& c, CommandResult& r, int checked,
                        const std::vector<std::pair<int, bool>>& per_n,
                        std::optional<int> least, bool persistence) {
    json pn = json::array();
    for (auto [n, eq] : per_n) pn.push_back(json{{"n", n}, {"equal", eq}});
    r.verdict = json{{"kind", "powerscan"},
                     {"collapse", least.has_value()},
                     {"checked_up_to", checked},
                     {"per_n", pn},
                     {"persistence_verified", persistence}};
    if (least) r.verdict["least_equal_n"] = *least;
    if (least)
      r.text += "collapse at n=" + std::to_string(*least);
    else
      r.text += "no collapse up to n=" + std::to_string(checked);
    if (c.expected) {
      const Expected& e = *c.expected;
      bool ok = (e.kind == Expected::Kind::CollapseAt && least && *least == e.n) ||
                (e.kind == Expected::Kind::NoCollapse && !least);
      note_pass(c, r, ok);
    }
  }

  void finish_expequal(const Command& c, CommandResult& r, const ExpEqualVerdict& v) {
    const char* word = v.kind == ExpEqualVerdict::Kind::Yes            ? "yes"
                       : v.kind == ExpEqualVerdict::Kind::NoUpToBound ? "no-up-to-bound"
                                                                       : "unknown";
    r.verdict = json{{"kind", "expequal"}, {"verdict", word}, {"n_checked", v.n_checked}};
    if (v.n0) r.verdict["n0"] = *v.n0;
    if (!v.certificate.empty()) {
      r.verdict["certificate"] = v.certificate;
      r.certificate = v.certificate;
    }
    if (v.kind == ExpEqualVerdict::Kind::Yes) {
      r.text += "yes from n=" + std::to_string(*v.n0);
    } else if (v.kind == ExpEqualVerdict::Kind::NoUpToBound) {
      r.text += "no up to n=" + std::to_string(v.n_checked);
      if (!v.certificate.empty()) r.text += " (" + v.certificate + ")";
      if (v.certificate == "rr-differ") r.heuristic_flags.push_back("window-stabilization");
    } else {
      r.text += "unknown";
    }
    if (c.expected) {
      const Expected& e = *c.expected;
      bool ok = (e.kind == Expected::Kind::Yes && v.kind == ExpEqualVerdict::Kind::Yes &&
                 v.n0 && *v.n0 == e.n) ||
                (e.kind == Expected::Kind::No && v.kind == ExpEqualVerdict::Kind::NoUpToBound) ||
                (e.kind == Expected::Kind::Unknown && v.kind == ExpEqualVerdict::Kind::Unknown);
      note_pass(c, r, ok);
    }
  }

  const SessionScript& script_;
  const ExecOptions& opt_;
  RingPtr ring_;
  std::map<std::string, Ideal> env_;
};

// Q and Z semigroup engines share everything but the term-ideal type, so the
// command loop is a template over it.
template <class TermIdeal>
class SgEngine {
 public:
  SgEngine(const SessionScript& s, const ExecOptions& opt) : script_(s), opt_(opt) {
    sg_ = std::make_shared<const NumericalSemigroup>(s.ring.sg_gens);
    for (const Binding& b : s.bindings) env_.emplace(b.name, make_ideal(b.value));
  }

  TermIdeal make_ideal(const IdealLiteral& lit) const;

  TermIdeal resolve(const IdealRef& ref) const {
    std::optional<TermIdeal> acc;
    for (const auto& f : ref.factors) {
      TermIdeal part = sg_ideal_power(env_.at(f.name), f.power);
      acc = acc ? sg_ideal_product(*acc, part) : part;
    }
    return *acc;
  }

  bool member(const std::pair<Rational, int>& term, const TermIdeal& a) const;

  void run(const Command& c, CommandResult& r) {
    switch (c.kind) {
      case CommandKind::Equal: {
        bool v = sg_ideal_equal(resolve(c.refs[0]), resolve(c.refs[1]));
        finish_bool(c, r, v);
        break;
      }
      case CommandKind::Contains: {
        bool v = sg_ideal_contains(resolve(c.refs[0]), resolve(c.refs[1]));
        finish_bool(c, r, v);
        break;
      }
      case CommandKind::Member: {
        bool v = member(*c.term, resolve(c.refs[0]));
        finish_bool(c, r, v);
        break;
      }
      case CommandKind::PowerScan: {
        int nmax = c.nmax.value_or(opt_.nmax);
        r.bounds["n_max"] = nmax;
        SgPowerScanReport rep = sg_power_scan(resolve(c.refs[0]), resolve(c.refs[1]), nmax);
        json pn = json::array();
        for (auto [n, eq] : rep.per_n) pn.push_back(json{{"n", n}, {"equal", eq}});
        r.verdict = json{{"kind", "powerscan"},
                         {"collapse", rep.least_equal_n.has_value()},
                         {"checked_up_to", rep.checked_up_to},
                         {"per_n", pn},
                         {"persistence_verified", rep.persistence_verified}};
        if (rep.least_equal_n) r.verdict["least_equal_n"] = *rep.least_equal_n;
        if (rep.least_equal_n)
          r.text += "collapse at n=" + std::to_string(*rep.least_equal_n);
        else
          r.text += "no collapse up to n=" + std::to_string(rep.checked_up_to);
        if (c.expected) {
          const Expected& e = *c.expected;
          bool ok = (e.kind == Expected::Kind::CollapseAt && rep.least_equal_n &&
                     *rep.least_equal_n == e.n) ||
                    (e.kind == Expected::Kind::NoCollapse && !rep.least_equal_n);
          r.pass = ok;
        }
        break;
      }
      case CommandKind::RR: {
        int mmax = c.mmax.value_or(opt_.mmax);
        int window = c.window.value_or(opt_.window);
        r.bounds["m_max"] = mmax;
        r.bounds["window"] = window;
        auto res = sg_ratliff_rush(resolve(c.refs[0]), mmax, window);
        r.heuristic_flags.push_back("window-stabilization");
        json chain = json::array();
        for (const TermIdeal& link : res.chain) chain.push_back(to_string(link));
        r.verdict = json{{"kind", "rr"},
                         {"closure", to_string(res.closure)},
                         {"stabilized_at_m", res.stabilized_at_m},
                         {"window", res.window},
                         {"heuristic", res.heuristic},
                         {"chain", chain}};
        r.text += to_string(res.closure) + " (chain stable from m=" +
                  std::to_string(res.stabilized_at_m) + ")";
        if (c.expected)
          r.pass = c.expected->kind == Expected::Kind::IdealLit &&
                   sg_ideal_equal(res.closure, make_ideal(c.expected->ideal));
        break;
      }
      default:
        throw Error("'" + command_name(c.kind) + "' is not available in semigroup rings");
    }
  }

  void finish_bool(const Command& c, CommandResult& r, bool v) {
    r.verdict = bool_verdict(v);
    r.text += v ? "true" : "false";
    if (c.expected)
      r.pass = c.expected->kind == Expected::Kind::Bool && c.expected->b == v;
  }

  const SessionScript& script_;
  const ExecOptions& opt_;
  SemigroupPtr sg_;
  std::map<std::string, TermIdeal> env_;
};

template <>
SemiTermIdeal SgEngine<SemiTermIdeal>::make_ideal(const IdealLiteral& lit) const {
  std::vector<int> exps;
  for (const auto& [coeff, exp] : lit.terms) {
    if (coeff.is_zero()) throw Error("zero generator");
    exps.push_back(exp);
  }
  return SemiTermIdeal(sg_, exps);
}

template <>
SemiTermIdealZ SgEngine<SemiTermIdealZ>::make_ideal(const IdealLiteral& lit) const {
  std::vector<std::pair<int, Integer>> gens;
  for (const auto& [coeff, exp] : lit.terms) {
    if (!coeff.is_integer())
      throw Error("coefficients must be integers in a semigroup ring over Z");
    gens.emplace_back(exp, coeff.numerator());
  }
  return SemiTermIdealZ::from_generators(sg_, gens);
}

template <>
bool SgEngine<SemiTermIdeal>::member(const std::pair<Rational, int>& term,
                                     const SemiTermIdeal& a) const {
  auto [coeff, exp] = term;
  if (!sg_->contains(exp))
    throw Error("t^" + std::to_string(exp) + " is not an element of the ring");
  if (coeff.is_zero()) return true;
  return a.contains_exponent(exp);
}

template <>
bool SgEngine<SemiTermIdealZ>::member(const std::pair<Rational, int>& term,
                                      const SemiTermIdealZ& a) const {
  auto [coeff, exp] = term;
  if (!sg_->contains(exp))
    throw Error("t^" + std::to_string(exp) + " is not an element of the ring");
  if (!coeff.is_integer())
    throw Error("coefficients must be integers in a semigroup ring over Z");
  if (coeff.is_zero()) return true;
  Integer content = a.content(exp);
  if (content == 0) return false;
  return coeff.numerator() % content == 0;
}

std::string ring_str(const RingSpec& ring) {
  std::ostringstream out;
  if (ring.engine == EngineKind::Polynomial) {
    out << "Q[";
    for (size_t i = 0; i < ring.vars.size(); ++i) out << (i ? "," : "") << ring.vars[i];
    out << "]";
    if (!ring.relations.empty()) {
      RingDescriptor rd(ring.vars, ring.order, {});
      out << "/(";
      for (size_t i = 0; i < ring.relations.size(); ++i) {
        if (i) out << ", ";
        out << to_string(ring.relations[i], rd);
      }
      out << ")";
    }
    out << " order " << ring.order.name();
  } else {
    out << "sg<";
    for (size_t i = 0; i < ring.sg_gens.size(); ++i)
      out << (i ? "," : "") << ring.sg_gens[i];
    out << "> over " << (ring.engine == EngineKind::SemigroupZ ? "Z" : "Q");
  }
  return out.str();
}

template <class Engine>
RunReport run_with(Engine& engine, const SessionScript& script) {
  RunReport report;
  for (const Command& c : script.commands) {
    CommandResult r;
    r.command = command_name(c.kind);
    if (c.poly) {
      RingDescriptor rd(script.ring.vars, script.ring.order, script.ring.relations);
      r.inputs.push_back(to_string(*c.poly, rd));
    }
    if (c.term)
      r.inputs.push_back(c.term->first.str() + "*t^" + std::to_string(c.term->second));
    for (const IdealRef& ref : c.refs) r.inputs.push_back(ref.str());
    r.is_assert = c.is_assert;
    r.text = command_text(c, script.ring) + " -> ";
    auto t0 = std::chrono::steady_clock::now();
    try {
      engine.run(c, r);
    } catch (const Error& e) {
      r.error = e.what();
      r.pass = false;
      r.verdict = json{{"kind", "error"}, {"message", e.what()}};
      r.text += std::string("error: ") + e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (c.is_assert && !r.error) {
      r.text += r.pass.value_or(false) ? " [ok]" : " [FAIL]";
    }
    if (r.pass.has_value() && !*r.pass) report.ok = false;
    report.results.push_back(std::move(r));
  }
  return report;
}

}  // namespace

RunReport execute(const SessionScript& script, const ExecOptions& options) {
  switch (script.ring.engine) {
    case EngineKind::Polynomial: {
      PolyEngine engine(script, options);
      return run_with(engine, script);
    }
    case EngineKind::SemigroupQ: {
      SgEngine<SemiTermIdeal> engine(script, options);
      return run_with(engine, script);
    }
    case EngineKind::SemigroupZ: {
      SgEngine<SemiTermIdealZ> engine(script, options);
      return run_with(engine, script);
    }
  }
  throw Error("unreachable");
}

nlohmann::json to_json(const RunReport& report, const SessionScript& script) {
  json out;
  out["ring"] = ring_str(script.ring);
  out["ok"] = report.ok;
  json results = json::array();
  for (const CommandResult& r : report.results) {
    json item;
    item["command"] = r.command;
    item["inputs"] = r.inputs;
    item["verdict"] = r.verdict;
    if (r.certificate) item["certificate"] = *r.certificate;
    item["bounds"] = r.bounds;
    item["heuristic_flags"] = r.heuristic_flags;
    item["elapsed_ms"] = r.elapsed_ms;
    item["assert"] = r.is_assert;
    if (r.pass) item["pass"] = *r.pass;
    if (r.error) item["error"] = *r.error;
    item["text"] = r.text;
    results.push_back(std::move(item));
  }
  out["results"] = std::move(results);
  return out;
}

std::string to_text(const RunReport& report) {
  std::ostringstream out;
  for (const CommandResult& r : report.results) out << r.text << "\n";
  out << (report.ok ? "ok" : "FAILED") << "\n";
  return out.str();
}

}  // namespace idealis
