#include "lg/structural.hpp"

#include <sstream>

namespace lg {

RulePackage parse_rule_package(const std::string& flags) {
  RulePackage pkg;
  std::stringstream ss(flags);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item == "dist")
      pkg.dist = true;
    else if (item == "halfdm")
      pkg.halfdm = true;
    else
      throw ParseError("unknown rule package '" + item + "' (expected dist or halfdm)", 0);
  }
  return pkg;
}

std::string show_rule_package(const RulePackage& pkg) {
  std::string out;
  auto add = [&out](const char* name) {
    if (!out.empty()) out += ",";
    out += name;
  };
  if (pkg.dist) add("dist");
  if (pkg.halfdm) add("halfdm");
  if (pkg.probe_assoc) add("probe_assoc");
  if (pkg.probe_comm) add("probe_comm");
  return out;
}

namespace {

RuleApp transparent(std::string rule, Sequent conclusion, Sequent premise) {
  RuleApp app;
  app.rule = std::move(rule);
  app.conclusion = std::move(conclusion);
  app.premises = {std::move(premise)};
  app.build = [](const std::vector<Term>& ts) { return ts.at(0); };
  return app;
}

}  // namespace

std::vector<RuleApp> structural_expansions(const Sequent& s, const DisplayClass& cls,
                                           const RulePackage& pkg) {
  std::vector<RuleApp> out;
  if (s.kind != SeqKind::Unfocused || pkg.empty()) return out;
  for (const Sequent& m : cls.members) {
    const Struct& a = m.ant;
    const CoStruct& c = m.con;
    if (pkg.dist && a->kind == SKind::Prod && c->kind == CKind::Par) {
      const Struct g = a->s1, d = a->s2;
      const CoStruct sig = c->k1, pi = c->k2;
      out.push_back(transparent("(⦸,/)", m, unfocused(s_lsub(pi, g), c_over(d, sig))));
      out.push_back(transparent("(⊘,\\)", m, unfocused(s_rsub(d, sig), c_under(pi, g))));
      out.push_back(transparent("(⦸,\\)", m, unfocused(s_lsub(pi, d), c_under(sig, g))));
      out.push_back(transparent("(⊘,/)", m, unfocused(s_rsub(g, sig), c_over(d, pi))));
    }
    if (pkg.halfdm) {
      if (a->kind == SKind::RSubStr && c->kind == CKind::LNegStr)  // G </ P |- LN{D}
        out.push_back(transparent("(⊘,ln)", m, unfocused(s_prod(a->s1, c->s1), a->k1)));
      if (a->kind == SKind::LSubStr && c->kind == CKind::RNegStr)  // P /> D |- RN{G}
        out.push_back(transparent("(⦸,rn)", m, unfocused(s_prod(c->s1, a->s1), a->k1)));
      if (a->kind == SKind::RSubStr && c->kind == CKind::RNegStr)  // D </ P |- RN{G}
        out.push_back(transparent("(⊘,rn)", m, unfocused(s_prod(c->s1, a->s1), a->k1)));
      if (a->kind == SKind::LSubStr && c->kind == CKind::LNegStr)  // P /> G |- LN{D}
        out.push_back(transparent("(⦸,ln)", m, unfocused(s_prod(a->s1, c->s1), a->k1)));
    }
    if (pkg.probe_assoc && a->kind == SKind::Prod) {
      if (a->s2->kind == SKind::Prod)  // G1.(G2.G3)  <=  (G1.G2).G3
        out.push_back(transparent("assoc", m,
                                  unfocused(s_prod(s_prod(a->s1, a->s2->s1), a->s2->s2), c)));
      if (a->s1->kind == SKind::Prod)  // (G1.G2).G3  <=  G1.(G2.G3)
        out.push_back(transparent("assoc", m,
                                  unfocused(s_prod(a->s1->s1, s_prod(a->s1->s2, a->s2)), c)));
    }
    if (pkg.probe_comm && a->kind == SKind::Prod) {
      if (a->s2->kind == SKind::Prod)  // G1.(G2.G3)  <=  G2.(G1.G3)
        out.push_back(transparent("comm", m,
                                  unfocused(s_prod(a->s2->s1, s_prod(a->s1, a->s2->s2)), c)));
      if (a->s1->kind == SKind::Prod)  // (G1.G2).G3  <=  (G1.G3).G2
        out.push_back(transparent("comm", m,
                                  unfocused(s_prod(s_prod(a->s1->s1, a->s2), a->s1->s2), c)));
    }
  }
  return out;
}

std::vector<RuleApp> structural_expansions(const Sequent& s, const RulePackage& pkg) {
  return structural_expansions(s, display_class(s), pkg);
}

}  // namespace lg
