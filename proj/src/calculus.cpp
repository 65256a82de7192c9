#include "lg/calculus.hpp"

namespace lg {

namespace {

Term id_build(const std::vector<Term>& ts) { return ts.at(0); }

RuleApp rename_app(std::string rule, Sequent conclusion, Sequent premise, const Name& from,
                   const Name& to) {
  RuleApp app;
  app.rule = std::move(rule);
  app.conclusion = std::move(conclusion);
  app.premises = {std::move(premise)};
  app.build = [from, to](const std::vector<Term>& ts) { return subst(ts.at(0), from, mk_var(to)); };
  return app;
}

RuleApp case_app(std::string rule, Sequent conclusion, Sequent premise, const Name& scrutinee,
                 const Name& x, const Name& y) {
  RuleApp app;
  app.rule = std::move(rule);
  app.conclusion = std::move(conclusion);
  app.premises = {std::move(premise)};
  app.build = [scrutinee, x, y](const std::vector<Term>& ts) {
    return mk_case(mk_var(scrutinee), x, y, ts.at(0));
  };
  return app;
}

RuleApp pair_app(std::string rule, Sequent conclusion, std::vector<Sequent> premises) {
  RuleApp app;
  app.rule = std::move(rule);
  app.conclusion = std::move(conclusion);
  app.premises = std::move(premises);
  app.build = [](const std::vector<Term>& ts) { return mk_pair(ts.at(0), ts.at(1)); };
  return app;
}

RuleApp through_app(std::string rule, Sequent conclusion, Sequent premise) {
  RuleApp app;
  app.rule = std::move(rule);
  app.conclusion = std::move(conclusion);
  app.premises = {std::move(premise)};
  app.build = id_build;
  return app;
}

// alpha on a displayed compound positive input.
std::optional<RuleApp> alpha_input(const Sequent& d, NameGen& gen) {
  const Formula f = d.ant->f;
  const Name phi = d.ant->label;
  switch (f->conn) {
    case Conn::Tensor: {  // A*B^x  =>  A^y . B^z
      const Name y = gen.fresh_var(), z = gen.fresh_var();
      return case_app("α-⊗", d, unfocused(s_prod(s_leaf(f->l, y), s_leaf(f->r, z)), d.con), phi, y, z);
    }
    case Conn::RSub: {  // A./B^x  =>  A^y </ B^n
      const Name y = gen.fresh_var(), nu = gen.fresh_covar();
      return case_app("α-⊘", d, unfocused(s_rsub(s_leaf(f->l, y), c_leaf(f->r, nu)), d.con), phi, y, nu);
    }
    case Conn::LSub: {  // B.\A^x  =>  B^k /> A^z
      const Name kappa = gen.fresh_covar(), z = gen.fresh_var();
      return case_app("α-⦸", d, unfocused(s_lsub(c_leaf(f->l, kappa), s_leaf(f->r, z)), d.con), phi,
                      kappa, z);
    }
    case Conn::RCoNeg: {  // rc(A)^x  =>  RC{A^k}
      const Name kappa = gen.fresh_covar();
      return rename_app("α-rc", d, unfocused(s_rconeg(c_leaf(f->l, kappa)), d.con), kappa, phi);
    }
    case Conn::LCoNeg: {
      const Name kappa = gen.fresh_covar();
      return rename_app("α-lc", d, unfocused(s_lconeg(c_leaf(f->l, kappa)), d.con), kappa, phi);
    }
    default: return std::nullopt;
  }
}

// alpha on a displayed compound negative output.
std::optional<RuleApp> alpha_output(const Sequent& d, NameGen& gen) {
  const Formula f = d.con->f;
  const Name phi = d.con->label;
  switch (f->conn) {
    case Conn::Par: {  // A+B^e  =>  B^k o A^n
      const Name kappa = gen.fresh_covar(), nu = gen.fresh_covar();
      return case_app("α-⊕", d, unfocused(d.ant, c_par(c_leaf(f->r, kappa), c_leaf(f->l, nu))), phi,
                      kappa, nu);
    }
    case Conn::Over: {  // A/B^e  =>  B^y -> A^n
      const Name y = gen.fresh_var(), nu = gen.fresh_covar();
      return case_app("α-/", d, unfocused(d.ant, c_over(s_leaf(f->r, y), c_leaf(f->l, nu))), phi, y, nu);
    }
    case Conn::Under: {  // B\A^e  =>  A^k <- B^z
      const Name kappa = gen.fresh_covar(), z = gen.fresh_var();
      return case_app("α-\\", d, unfocused(d.ant, c_under(c_leaf(f->r, kappa), s_leaf(f->l, z))), phi,
                      kappa, z);
    }
    case Conn::LNeg: {  // ln(A)^e  =>  LN{A^y}
      const Name y = gen.fresh_var();
      return rename_app("α-ln", d, unfocused(d.ant, c_lneg(s_leaf(f->l, y))), y, phi);
    }
    case Conn::RNeg: {
      const Name y = gen.fresh_var();
      return rename_app("α-rn", d, unfocused(d.ant, c_rneg(s_leaf(f->l, y))), y, phi);
    }
    default: return std::nullopt;
  }
}

bool alpha_eligible(const LeafRef& leaf) {
  if (leaf.input) return polarity(leaf.f) == Polarity::Pos && leaf.f->conn != Conn::Atom;
  return polarity(leaf.f) == Polarity::Neg;
}

}  // namespace

std::optional<RuleApp> axiom(const Sequent& s) {
  if (s.kind != SeqKind::FocusC || s.focus->conn != Conn::Atom) return std::nullopt;
  if (s.ant->kind != SKind::Leaf || !formula_eq(s.ant->f, s.focus)) return std::nullopt;
  RuleApp app;
  app.rule = "Ax";
  app.conclusion = s;
  const Name x = s.ant->label;
  app.build = [x](const std::vector<Term>&) { return mk_var(x); };
  return app;
}

std::optional<RuleApp> react(const Sequent& s, NameGen& gen) {
  if (s.kind == SeqKind::FocusC && polarity(s.focus) == Polarity::Neg) {
    const Name eps = gen.fresh_covar();
    const LinType ann = translate(s.focus);
    RuleApp app;
    app.rule = "R∘";
    app.conclusion = s;
    app.premises = {unfocused(s.ant, c_leaf(s.focus, eps))};
    app.build = [eps, ann](const std::vector<Term>& ts) { return mk_lam(eps, ann, ts.at(0)); };
    return app;
  }
  if (s.kind == SeqKind::FocusH && polarity(s.focus) == Polarity::Pos) {
    const Name x = gen.fresh_var();
    const LinType ann = translate(s.focus);
    RuleApp app;
    app.rule = "R•";
    app.conclusion = s;
    app.premises = {unfocused(s_leaf(s.focus, x), s.con)};
    app.build = [x, ann](const std::vector<Term>& ts) { return mk_lam(x, ann, ts.at(0)); };
    return app;
  }
  return std::nullopt;
}

std::vector<RuleApp> decide(const Sequent& s, const DisplayClass& cls, NameGen& gen) {
  (void)gen;
  std::vector<RuleApp> out;
  if (s.kind != SeqKind::Unfocused) return out;
  for (const LeafRef& leaf : leaves_of(s)) {
    if (leaf.input && polarity(leaf.f) == Polarity::Neg) {
      if (auto d = display(cls, leaf.label)) {
        RuleApp app;
        app.rule = "D•";
        app.conclusion = *d;
        app.premises = {focus_hypothesis(d->con, leaf.f)};
        const Name x = leaf.label;
        app.build = [x](const std::vector<Term>& ts) { return mk_app(mk_var(x), ts.at(0)); };
        out.push_back(std::move(app));
      }
    } else if (!leaf.input && polarity(leaf.f) == Polarity::Pos) {
      if (auto d = display(cls, leaf.label)) {
        RuleApp app;
        app.rule = "D∘";
        app.conclusion = *d;
        app.premises = {focus_conclusion(d->ant, leaf.f)};
        const Name eps = leaf.label;
        app.build = [eps](const std::vector<Term>& ts) { return mk_app(mk_var(eps), ts.at(0)); };
        out.push_back(std::move(app));
      }
    }
  }
  return out;
}

std::vector<RuleApp> decide(const Sequent& s, NameGen& gen) {
  return decide(s, display_class(s), gen);
}

std::vector<RuleApp> alpha_expansions(const Sequent& s, const DisplayClass& cls, NameGen& gen) {
  std::vector<RuleApp> out;
  if (s.kind != SeqKind::Unfocused) return out;
  for (const LeafRef& leaf : leaves_of(s)) {
    if (!alpha_eligible(leaf)) continue;
    auto d = display(cls, leaf.label);
    if (!d) continue;
    auto app = leaf.input ? alpha_input(*d, gen) : alpha_output(*d, gen);
    if (app) out.push_back(std::move(*app));
  }
  return out;
}

std::vector<RuleApp> alpha_expansions(const Sequent& s, NameGen& gen) {
  return alpha_expansions(s, display_class(s), gen);
}

std::vector<RuleApp> beta_expansions(const Sequent& s, NameGen& gen) {
  (void)gen;
  std::vector<RuleApp> out;
  if (s.kind == SeqKind::FocusC) {
    const Formula f = s.focus;
    const Struct a = s.ant;
    switch (f->conn) {
      case Conn::Tensor:  // G.D |- [A*B]  from  G |- [A]  and  D |- [B]
        if (a->kind == SKind::Prod)
          out.push_back(pair_app("β-⊗", s,
                                 {focus_conclusion(a->s1, f->l), focus_conclusion(a->s2, f->r)}));
        break;
      case Conn::RSub:  // G </ S |- [A./B]  from  G |- [A]  and  [B] |- S
        if (a->kind == SKind::RSubStr)
          out.push_back(pair_app("β-⊘", s,
                                 {focus_conclusion(a->s1, f->l), focus_hypothesis(a->k1, f->r)}));
        break;
      case Conn::LSub:  // S /> G |- [B.\A]  from  [B] |- S  and  G |- [A]
        if (a->kind == SKind::LSubStr)
          out.push_back(pair_app("β-⦸", s,
                                 {focus_hypothesis(a->k1, f->l), focus_conclusion(a->s1, f->r)}));
        break;
      case Conn::RCoNeg:  // RC{S} |- [rc(A)]  from  [A] |- S
        if (a->kind == SKind::RCoNegStr)
          out.push_back(through_app("β-rc", s, focus_hypothesis(a->k1, f->l)));
        break;
      case Conn::LCoNeg:
        if (a->kind == SKind::LCoNegStr)
          out.push_back(through_app("β-lc", s, focus_hypothesis(a->k1, f->l)));
        break;
      default: break;
    }
    return out;
  }
  if (s.kind == SeqKind::FocusH) {
    const Formula f = s.focus;
    const CoStruct c = s.con;
    switch (f->conn) {
      case Conn::Par:  // [A+B] |- S o P  from  [B] |- S  and  [A] |- P
        if (c->kind == CKind::Par)
          out.push_back(pair_app("β-⊕", s,
                                 {focus_hypothesis(c->k1, f->r), focus_hypothesis(c->k2, f->l)}));
        break;
      case Conn::Over:  // [A/B] |- D -> P  from  D |- [B]  and  [A] |- P
        if (c->kind == CKind::Over)
          out.push_back(pair_app("β-/", s,
                                 {focus_conclusion(c->s1, f->r), focus_hypothesis(c->k1, f->l)}));
        break;
      case Conn::Under:  // [B\A] |- P <- D  from  [A] |- P  and  D |- [B]
        if (c->kind == CKind::Under)
          out.push_back(pair_app("β-\\", s,
                                 {focus_hypothesis(c->k1, f->r), focus_conclusion(c->s1, f->l)}));
        break;
      case Conn::LNeg:  // [ln(A)] |- LN{D}  from  D |- [A]
        if (c->kind == CKind::LNegStr)
          out.push_back(through_app("β-ln", s, focus_conclusion(c->s1, f->l)));
        break;
      case Conn::RNeg:
        if (c->kind == CKind::RNegStr)
          out.push_back(through_app("β-rn", s, focus_conclusion(c->s1, f->l)));
        break;
      default: break;
    }
    return out;
  }
  return out;
}

std::optional<RuleApp> MainCalculus::invertible_app(const Sequent& s, const DisplayClass& cls,
                                                    NameGen& gen) const {
  if (s.kind != SeqKind::Unfocused) return std::nullopt;
  for (const LeafRef& leaf : leaves_of(s)) {
    if (!alpha_eligible(leaf)) continue;
    auto d = display(cls, leaf.label);
    if (!d) continue;
    auto app = leaf.input ? alpha_input(*d, gen) : alpha_output(*d, gen);
    if (app) return app;
  }
  return std::nullopt;
}

std::vector<RuleApp> MainCalculus::unfocused_apps(const Sequent& s, const DisplayClass& cls,
                                                  NameGen& gen) const {
  return decide(s, cls, gen);
}

std::optional<RuleApp> MainCalculus::focused_app(const Sequent& s, NameGen& gen) const {
  if (s.kind == SeqKind::FocusC) {
    if (s.focus->conn == Conn::Atom) return axiom(s);
    if (polarity(s.focus) == Polarity::Neg) return react(s, gen);
    auto betas = beta_expansions(s, gen);
    if (betas.empty()) return std::nullopt;
    return betas.front();
  }
  if (s.kind == SeqKind::FocusH) {
    if (polarity(s.focus) == Polarity::Pos) return react(s, gen);
    auto betas = beta_expansions(s, gen);
    if (betas.empty()) return std::nullopt;
    return betas.front();
  }
  return std::nullopt;
}

const MainCalculus& main_calculus() {
  static const MainCalculus calc;
  return calc;
}

}  // namespace lg
