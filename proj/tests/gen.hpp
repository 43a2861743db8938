#pragma once
// Seeded generator of well-formed specification ASTs for round-trip property
// tests.  Every shape produced here must survive format -> parse unchanged,
// so the generator sticks to canonical homes (no stray statements) and valid
// literals; adversarial inputs are covered by hand-written cases instead.

#include <random>
#include <string>
#include <vector>

#include "symboleo/ast.hpp"

namespace symboleo::testgen {

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  ContractSpec spec() {
    ContractSpec s;
    int shape = pick(0, 9);
    if (shape == 0) {  // fragment: sections only
      s.fragment = true;
      fill_sections(s, /*min_sections=*/1);
      return s;
    }
    if (shape != 1) {  // usually include a domain
      s.domain.name = lower_name();
      int n = pick(1, 4);
      for (int i = 0; i < n; ++i) s.domain.concepts.push_back(concept_());
    }
    if (shape != 2 || s.domain.concepts.empty()) {  // usually a contract too
      s.name = upper_name();
      int params = pick(0, 3);
      for (int i = 0; i < params; ++i) s.signature.push_back(parameter());
      fill_sections(s, s.domain.concepts.empty() ? 1 : 0);
    }
    return s;
  }

 private:
  std::mt19937 rng_;

  int pick(int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  bool chance(int percent) { return pick(1, 100) <= percent; }

  template <typename T>
  const T& one_of(const std::vector<T>& pool) {
    return pool[static_cast<std::size_t>(pick(0, static_cast<int>(pool.size()) - 1))];
  }

  std::string lower_name() {
    static const std::vector<std::string> stems = {
        "alpha", "bravo", "delta", "omega", "kappa", "sigma",
        "tau",   "zeta",  "nova",  "luna",  "terra", "vega"};
    std::string n = one_of(stems);
    if (chance(40)) n += std::to_string(pick(0, 9));
    return n;
  }

  std::string upper_name() {
    std::string n = lower_name();
    n[0] = static_cast<char>(n[0] - 'a' + 'A');
    return n;
  }

  std::string predicate_name() {
    static const std::vector<std::string> names = {
        "Happens",  "HappensAfter", "WhappensBefore", "HappensWithin",
        "Violated", "Fulfilled",    "Triggered",      "Occurred",
        "Expired",  "IsEqual"};
    return one_of(names);
  }

  std::string type_name() {
    static const std::vector<std::string> names = {"Number", "String", "Date",
                                                   "Boolean"};
    return chance(50) ? one_of(names) : upper_name();
  }

  ValueExprPtr value(int depth) {
    int kind = pick(0, depth > 0 ? 6 : 4);
    switch (kind) {
      case 0: {
        std::vector<std::string> segs;
        int n = pick(1, 3);
        for (int i = 0; i < n; ++i) segs.push_back(lower_name());
        return make_path(segs, {});
      }
      case 1: {
        static const std::vector<std::string> nums = {
            "0", "1", "2", "5", "7", "10", "42", "100", "3.14", "0.5", "500000"};
        return make_number(one_of(nums), {});
      }
      case 2: {
        static const std::vector<std::string> strs = {
            "plain", "with \"quotes\"", "back\\slash", "line\nbreak", "tab\tstop"};
        return make_string(one_of(strs), {});
      }
      case 3: {
        static const std::vector<std::string> dates = {
            "2024-01-15", "2025-12-31", "1999-06-01", "2030-02-28"};
        return make_date(one_of(dates), {});
      }
      case 4:
        return make_bool(chance(50), {});
      default: {
        static const std::vector<BinaryOp> ops = {BinaryOp::Add, BinaryOp::Sub,
                                                  BinaryOp::Mul, BinaryOp::Div,
                                                  BinaryOp::Mod};
        return make_binary(one_of(ops), value(depth - 1), value(depth - 1), {});
      }
    }
  }

  // Value used as a predicate argument: a leading boolean token would reparse
  // as a situation argument, so those shapes are replaced with a path.
  ValueExprPtr arg_value(int depth) {
    ValueExprPtr v = value(depth);
    const ValueExpr* left = v.get();
    while (left->kind == ValueExpr::Kind::Binary) left = left->lhs.get();
    if (left->kind == ValueExpr::Kind::Bool) return make_path({lower_name()}, {});
    return v;
  }

  SituationExprPtr situation(int depth) {
    int kind = pick(0, depth > 0 ? 5 : 2);
    switch (kind) {
      case 0:
        return make_true({});
      case 1: {
        std::vector<SituationExpr::PredicateArg> args;
        int n = pick(0, 3);
        for (int i = 0; i < n; ++i) {
          if (depth > 0 && chance(35)) {
            args.emplace_back(situation(depth - 1));
          } else {
            args.emplace_back(arg_value(depth > 0 ? 1 : 0));
          }
        }
        return make_predicate(predicate_name(), std::move(args), {});
      }
      case 2: {
        static const std::vector<ComparisonOp> ops = {
            ComparisonOp::Eq, ComparisonOp::Ne, ComparisonOp::Lt,
            ComparisonOp::Le, ComparisonOp::Gt, ComparisonOp::Ge};
        // A bare bool lhs reparses fine, but "true % 2 == x" would be read
        // as the situation `true` with trailing junk; keep binaries clean.
        ValueExprPtr lhs = value(1);
        if (lhs->kind == ValueExpr::Kind::Binary) {
          const ValueExpr* left = lhs.get();
          while (left->kind == ValueExpr::Kind::Binary) left = left->lhs.get();
          if (left->kind == ValueExpr::Kind::Bool) lhs = make_path({lower_name()}, {});
        }
        return make_comparison(one_of(ops), std::move(lhs), value(1), {});
      }
      case 3:
        return make_not(situation(depth - 1), {});
      default: {
        std::vector<SituationExprPtr> children;
        int n = pick(2, 3);
        for (int i = 0; i < n; ++i) children.push_back(situation(depth - 1));
        return kind == 4 ? make_and(std::move(children), {})
                         : make_or(std::move(children), {});
      }
    }
  }

  DomainConcept concept_() {
    DomainConcept c;
    c.name = upper_name();
    switch (pick(0, 4)) {
      case 0: c.kind = ConceptKind::Role; break;
      case 1: c.kind = ConceptKind::Asset; break;
      case 2: c.kind = ConceptKind::Event; break;
      case 3:
        c.kind = ConceptKind::Enumeration;
        for (int i = pick(1, 3); i > 0; --i) c.enum_literals.push_back(upper_name());
        break;
      default:
        c.kind = ConceptKind::Derived;
        c.parent = upper_name();
        break;
    }
    if (c.kind != ConceptKind::Enumeration && chance(60)) {
      for (int i = pick(1, 3); i > 0; --i) {
        Attribute a;
        a.name = lower_name();
        a.type_name = type_name();
        a.is_env = c.kind == ConceptKind::Event && chance(40);
        c.attributes.push_back(std::move(a));
      }
    }
    return c;
  }

  Parameter parameter() {
    Parameter p;
    p.name = lower_name();
    p.type_name = type_name();
    if (chance(15)) p.initializer = value(1);
    return p;
  }

  Declaration declaration() {
    Declaration d;
    d.name = lower_name();
    d.type_name = type_name();
    if (chance(40)) {
      if (chance(25)) {  // bare ":= value" form, only legal on its own
        AttributeInit init;
        init.value = value(1);
        d.initializers.push_back(std::move(init));
      } else {
        for (int i = pick(1, 2); i > 0; --i) {
          AttributeInit init;
          init.attribute = lower_name();
          init.value = value(1);
          d.initializers.push_back(std::move(init));
        }
      }
    }
    return d;
  }

  Norm norm(NormKind kind, SourceSection home) {
    Norm n;
    n.name = lower_name();
    n.kind = kind;
    n.home = home;
    if (chance(50)) n.trigger = situation(1);
    n.first_party = make_path({lower_name()}, {});
    n.second_party = make_path({lower_name()}, {});
    n.antecedent = chance(40) ? make_true({}) : situation(1);
    n.consequent = situation(2);
    return n;
  }

  void fill_sections(ContractSpec& s, int min_sections) {
    int made = 0;
    if (chance(60)) {
      for (int i = pick(1, 3); i > 0; --i) s.declarations.push_back(declaration());
      ++made;
    }
    if (chance(35)) {
      for (int i = pick(1, 2); i > 0; --i) s.preconditions.push_back(situation(2));
      ++made;
    }
    if (chance(25)) {
      s.postconditions.push_back(situation(2));
      ++made;
    }
    if (chance(70)) {
      for (int i = pick(1, 3); i > 0; --i) {
        s.obligations.push_back(norm(NormKind::Obligation, SourceSection::Obligations));
      }
      ++made;
    }
    if (chance(20)) {
      s.surviving_obligations.push_back(
          norm(NormKind::Obligation, SourceSection::SurvivingObligations));
      ++made;
    }
    if (chance(55)) {
      for (int i = pick(1, 2); i > 0; --i) {
        s.powers.push_back(norm(NormKind::Power, SourceSection::Powers));
      }
      ++made;
    }
    if (chance(35)) {
      for (int i = pick(1, 2); i > 0; --i) s.constraints.push_back(situation(1));
      ++made;
    }
    if (made < min_sections) {
      s.obligations.push_back(norm(NormKind::Obligation, SourceSection::Obligations));
    }
  }
};

}  // namespace symboleo::testgen
