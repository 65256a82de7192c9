#pragma once

// Backward-applicable logical rules: axiom, decision/reaction, and the
// alpha (structural unfolding) / beta (focus splitting) schemata, each
// carrying its term constructor.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lg/sequent.hpp"

namespace lg {

struct RuleApp {
  std::string rule;               // name as it appears in derivation output
  Sequent conclusion;             // the (displayed) sequent the rule fires on
  std::vector<Sequent> premises;  // backward-search subgoals
  std::function<Term(const std::vector<Term>&)> build;
};

// Provider of rule applications; the shared search engine is parameterized
// over it so the LGT/LGQ variants can reuse display and structural machinery.
class CalculusBase {
 public:
  virtual ~CalculusBase() = default;
  // First available invertible expansion (applied eagerly by the prover).
  virtual std::optional<RuleApp> invertible_app(const Sequent& s, const DisplayClass& cls,
                                                NameGen& gen) const = 0;
  // Branching candidates at an unfocused sequent, in deterministic order.
  virtual std::vector<RuleApp> unfocused_apps(const Sequent& s, const DisplayClass& cls,
                                              NameGen& gen) const = 0;
  // The at-most-one rule applicable to a focused sequent.
  virtual std::optional<RuleApp> focused_app(const Sequent& s, NameGen& gen) const = 0;
};

// The term-labeled focused calculus for LG.
class MainCalculus : public CalculusBase {
 public:
  std::optional<RuleApp> invertible_app(const Sequent& s, const DisplayClass& cls,
                                        NameGen& gen) const override;
  std::vector<RuleApp> unfocused_apps(const Sequent& s, const DisplayClass& cls,
                                      NameGen& gen) const override;
  std::optional<RuleApp> focused_app(const Sequent& s, NameGen& gen) const override;
};

const MainCalculus& main_calculus();

// Individual rule families (the prover goes through CalculusBase; these are
// the inspectable building blocks).
std::optional<RuleApp> axiom(const Sequent& s);
std::vector<RuleApp> decide(const Sequent& s, const DisplayClass& cls, NameGen& gen);
std::vector<RuleApp> decide(const Sequent& s, NameGen& gen);
std::optional<RuleApp> react(const Sequent& s, NameGen& gen);
std::vector<RuleApp> alpha_expansions(const Sequent& s, const DisplayClass& cls, NameGen& gen);
std::vector<RuleApp> alpha_expansions(const Sequent& s, NameGen& gen);
std::vector<RuleApp> beta_expansions(const Sequent& s, NameGen& gen);

}  // namespace lg
