#pragma once

// Optional structural-rule packages: linear distributivity of tensor over
// par in rule format, and the half-De-Morgan (co)negation interactions.
// Applications are term-transparent and match modulo display equivalence.

#include <string>
#include <vector>

#include "lg/calculus.hpp"
#include "lg/sequent.hpp"

namespace lg {

struct RulePackage {
  bool dist = false;    // the four Grishin interaction rules
  bool halfdm = false;  // the four (co)negation interaction rules
  // Probe-only rules for the non-derivability harness; never CLI-enabled.
  bool probe_assoc = false;
  bool probe_comm = false;

  bool empty() const { return !dist && !halfdm && !probe_assoc && !probe_comm; }
};

RulePackage parse_rule_package(const std::string& flags);  // "dist,halfdm"
std::string show_rule_package(const RulePackage& pkg);

std::vector<RuleApp> structural_expansions(const Sequent& s, const DisplayClass& cls,
                                           const RulePackage& pkg);
std::vector<RuleApp> structural_expansions(const Sequent& s, const RulePackage& pkg);

struct InstanceCheck {
  std::string sequent;
  bool derivable_with_rules = false;
  bool derivable_without = false;
};

struct InstanceReport {
  std::vector<InstanceCheck> rows;
  bool ok = false;  // every row derivable with, underivable without
};

// The four distributivity postulates over distinct atoms, proved under
// {dist} and refuted under the empty package.
InstanceReport distributivity_instance_checks();

}  // namespace lg
