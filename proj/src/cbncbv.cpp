#include "lg/cbncbv.hpp"

#include <set>

namespace lg {

LinType cbn_type(const Formula& a) {
  switch (a->conn) {
    case Conn::Atom: return t_neg(t_atom(a->atom));
    case Conn::Over:   // A/B and B\A: ~|B| * |A|
      return t_prod(t_neg(cbn_type(a->r)), cbn_type(a->l));
    case Conn::Under: return t_prod(t_neg(cbn_type(a->l)), cbn_type(a->r));
    case Conn::LSub:   // B.\A and A./B: ~(|B| * ~|A|)
      return t_neg(t_prod(cbn_type(a->l), t_neg(cbn_type(a->r))));
    case Conn::RSub: return t_neg(t_prod(cbn_type(a->r), t_neg(cbn_type(a->l))));
    case Conn::Tensor:  // homomorphic, all-negative row
      return t_prod(t_neg(cbn_type(a->l)), t_neg(cbn_type(a->r)));
    case Conn::Par: return t_prod(cbn_type(a->l), cbn_type(a->r));
    default:
      throw UnsupportedConnective("(co)negations are outside the CBN translation");
  }
}

LinType cbv_type(const Formula& a) {
  switch (a->conn) {
    case Conn::Atom: return t_atom(a->atom);
    case Conn::Over:   // A/B and B\A: ~(|B| * ~|A|)
      return t_neg(t_prod(cbv_type(a->r), t_neg(cbv_type(a->l))));
    case Conn::Under: return t_neg(t_prod(cbv_type(a->l), t_neg(cbv_type(a->r))));
    case Conn::LSub:   // B.\A and A./B: ~|B| * |A|
      return t_prod(t_neg(cbv_type(a->l)), cbv_type(a->r));
    case Conn::RSub: return t_prod(t_neg(cbv_type(a->r)), cbv_type(a->l));
    case Conn::Tensor:  // homomorphic, all-positive row
      return t_prod(cbv_type(a->l), cbv_type(a->r));
    case Conn::Par: return t_prod(t_neg(cbv_type(a->l)), t_neg(cbv_type(a->r)));
    default:
      throw UnsupportedConnective("(co)negations are outside the CBV translation");
  }
}

// ------------------------------------------------------------------- LGT

namespace {

RuleApp through1(std::string rule, Sequent conclusion, Sequent premise,
                 std::function<Term(const std::vector<Term>&)> build) {
  RuleApp app;
  app.rule = std::move(rule);
  app.conclusion = std::move(conclusion);
  app.premises = {std::move(premise)};
  app.build = std::move(build);
  return app;
}

Term pattern_lam(const Name& x, const Name& y, NameGen& gen, const Term& body) {
  const Name z = gen.fresh_var();
  return mk_lam(z, nullptr, mk_case(mk_var(z), x, y, body));
}

}  // namespace

std::optional<RuleApp> LgtCalculus::invertible_app(const Sequent&, const DisplayClass&,
                                                   NameGen&) const {
  return std::nullopt;
}

std::vector<RuleApp> LgtCalculus::unfocused_apps(const Sequent& s, const DisplayClass& cls,
                                                 NameGen& gen) const {
  std::vector<RuleApp> out;
  if (s.kind != SeqKind::Unfocused) return out;
  for (const LeafRef& leaf : leaves_of(s)) {
    auto d = display(cls, leaf.label);
    if (!d) continue;
    if (leaf.input) {
      // D: any hypothesis may enter the stoup.
      RuleApp app;
      app.rule = "D";
      app.conclusion = *d;
      app.premises = {focus_hypothesis(d->con, leaf.f)};
      const Name x = leaf.label;
      app.build = [x](const std::vector<Term>& ts) { return mk_app(mk_var(x), ts.at(0)); };
      out.push_back(std::move(app));
      continue;
    }
    const Formula f = leaf.f;
    const Name nu = leaf.label;
    switch (f->conn) {
      case Conn::Tensor: {  // (nu <lam e. M, lam k. N>) from G |- A^e and D |- B^k
        if (d->ant->kind != SKind::Prod) break;
        const Name eps = gen.fresh_covar(), kappa = gen.fresh_covar();
        RuleApp app;
        app.rule = "⊗∘";
        app.conclusion = *d;
        app.premises = {unfocused(d->ant->s1, c_leaf(f->l, eps)),
                        unfocused(d->ant->s2, c_leaf(f->r, kappa))};
        app.build = [nu, eps, kappa](const std::vector<Term>& ts) {
          return mk_app(mk_var(nu),
                        mk_pair(mk_lam(eps, nullptr, ts.at(0)), mk_lam(kappa, nullptr, ts.at(1))));
        };
        out.push_back(std::move(app));
        break;
      }
      case Conn::Under: {  // case nu of <e,y>. M from G |- A^e <- B^y
        const Name eps = gen.fresh_covar(), y = gen.fresh_var();
        out.push_back(through1(
            "\\∘", *d, unfocused(d->ant, c_under(c_leaf(f->r, eps), s_leaf(f->l, y))),
            [nu, eps, y](const std::vector<Term>& ts) { return mk_case(mk_var(nu), eps, y, ts.at(0)); }));
        break;
      }
      case Conn::Over: {  // mirror of \∘: premise G |- B^y -> A^e
        const Name eps = gen.fresh_covar(), y = gen.fresh_var();
        out.push_back(through1(
            "/∘", *d, unfocused(d->ant, c_over(s_leaf(f->r, y), c_leaf(f->l, eps))),
            [nu, eps, y](const std::vector<Term>& ts) { return mk_case(mk_var(nu), eps, y, ts.at(0)); }));
        break;
      }
      case Conn::Par: {  // case nu of <k,e>. M from G |- B^k o A^e
        const Name kappa = gen.fresh_covar(), eps = gen.fresh_covar();
        out.push_back(through1("⊕∘", *d,
                               unfocused(d->ant, c_par(c_leaf(f->r, kappa), c_leaf(f->l, eps))),
                               [nu, kappa, eps](const std::vector<Term>& ts) {
                                 return mk_case(mk_var(nu), kappa, eps, ts.at(0));
                               }));
        break;
      }
      case Conn::RSub: {  // (nu <N, lam e. M>) from [B] |- S and G |- A^e
        if (d->ant->kind != SKind::RSubStr) break;
        const Name eps = gen.fresh_covar();
        RuleApp app;
        app.rule = "⊘∘";
        app.conclusion = *d;
        app.premises = {focus_hypothesis(d->ant->k1, f->r),
                        unfocused(d->ant->s1, c_leaf(f->l, eps))};
        app.build = [nu, eps](const std::vector<Term>& ts) {
          return mk_app(mk_var(nu), mk_pair(ts.at(0), mk_lam(eps, nullptr, ts.at(1))));
        };
        out.push_back(std::move(app));
        break;
      }
      case Conn::LSub: {  // mirror of ⊘∘
        if (d->ant->kind != SKind::LSubStr) break;
        const Name eps = gen.fresh_covar();
        RuleApp app;
        app.rule = "⦸∘";
        app.conclusion = *d;
        app.premises = {focus_hypothesis(d->ant->k1, f->l),
                        unfocused(d->ant->s1, c_leaf(f->r, eps))};
        app.build = [nu, eps](const std::vector<Term>& ts) {
          return mk_app(mk_var(nu), mk_pair(ts.at(0), mk_lam(eps, nullptr, ts.at(1))));
        };
        out.push_back(std::move(app));
        break;
      }
      default: break;
    }
  }
  return out;
}

std::optional<RuleApp> LgtCalculus::focused_app(const Sequent& s, NameGen& gen) const {
  if (s.kind != SeqKind::FocusH) return std::nullopt;
  const Formula f = s.focus;
  const CoStruct c = s.con;
  switch (f->conn) {
    case Conn::Atom: {  // Ax: [p] |- p^e with term e
      if (c->kind != CKind::Leaf || !formula_eq(c->f, f)) return std::nullopt;
      RuleApp app;
      app.rule = "Ax";
      app.conclusion = s;
      const Name eps = c->label;
      app.build = [eps](const std::vector<Term>&) { return mk_var(eps); };
      return app;
    }
    case Conn::Tensor: {  // lam <x,y>. M from A^x . B^y |- P
      const Name x = gen.fresh_var(), y = gen.fresh_var();
      return through1("⊗•", s, unfocused(s_prod(s_leaf(f->l, x), s_leaf(f->r, y)), c),
                      [x, y, &gen](const std::vector<Term>& ts) {
                        NameGen& g = gen;
                        return pattern_lam(x, y, g, ts.at(0));
                      });
    }
    case Conn::Under: {  // <lam e. N, M> from D |- B^e and [A] |- P
      if (c->kind != CKind::Under) return std::nullopt;
      const Name eps = gen.fresh_covar();
      RuleApp app;
      app.rule = "\\•";
      app.conclusion = s;
      app.premises = {unfocused(c->s1, c_leaf(f->l, eps)), focus_hypothesis(c->k1, f->r)};
      app.build = [eps](const std::vector<Term>& ts) {
        return mk_pair(mk_lam(eps, nullptr, ts.at(0)), ts.at(1));
      };
      return app;
    }
    case Conn::Over: {  // mirror: [A/B] |- D -> P
      if (c->kind != CKind::Over) return std::nullopt;
      const Name eps = gen.fresh_covar();
      RuleApp app;
      app.rule = "/•";
      app.conclusion = s;
      app.premises = {unfocused(c->s1, c_leaf(f->r, eps)), focus_hypothesis(c->k1, f->l)};
      app.build = [eps](const std::vector<Term>& ts) {
        return mk_pair(mk_lam(eps, nullptr, ts.at(0)), ts.at(1));
      };
      return app;
    }
    case Conn::Par: {  // <N, M> from [B] |- S and [A] |- P
      if (c->kind != CKind::Par) return std::nullopt;
      RuleApp app;
      app.rule = "⊕•";
      app.conclusion = s;
      app.premises = {focus_hypothesis(c->k1, f->r), focus_hypothesis(c->k2, f->l)};
      app.build = [](const std::vector<Term>& ts) { return mk_pair(ts.at(0), ts.at(1)); };
      return app;
    }
    case Conn::RSub: {  // lam <y,n>. M from A^y </ B^n |- P
      const Name y = gen.fresh_var(), nu = gen.fresh_covar();
      return through1("⊘•", s, unfocused(s_rsub(s_leaf(f->l, y), c_leaf(f->r, nu)), c),
                      [y, nu, &gen](const std::vector<Term>& ts) {
                        NameGen& g = gen;
                        return pattern_lam(y, nu, g, ts.at(0));
                      });
    }
    case Conn::LSub: {  // mirror of ⊘•
      const Name nu = gen.fresh_covar(), y = gen.fresh_var();
      return through1("⦸•", s, unfocused(s_lsub(c_leaf(f->l, nu), s_leaf(f->r, y)), c),
                      [nu, y, &gen](const std::vector<Term>& ts) {
                        NameGen& g = gen;
                        return pattern_lam(nu, y, g, ts.at(0));
                      });
    }
    default: return std::nullopt;
  }
}

// ------------------------------------------------------------------- LGQ

std::optional<RuleApp> LgqCalculus::invertible_app(const Sequent&, const DisplayClass&,
                                                   NameGen&) const {
  return std::nullopt;
}

std::vector<RuleApp> LgqCalculus::unfocused_apps(const Sequent& s, const DisplayClass& cls,
                                                 NameGen& gen) const {
  std::vector<RuleApp> out;
  if (s.kind != SeqKind::Unfocused) return out;
  for (const LeafRef& leaf : leaves_of(s)) {
    auto d = display(cls, leaf.label);
    if (!d) continue;
    if (!leaf.input) {
      // D: any conclusion may enter the stoup.
      RuleApp app;
      app.rule = "D";
      app.conclusion = *d;
      app.premises = {focus_conclusion(d->ant, leaf.f)};
      const Name eps = leaf.label;
      app.build = [eps](const std::vector<Term>& ts) { return mk_app(mk_var(eps), ts.at(0)); };
      out.push_back(std::move(app));
      continue;
    }
    const Formula f = leaf.f;
    const Name z = leaf.label;
    switch (f->conn) {
      case Conn::Tensor: {  // case z of <y,w>. M from A^y . B^w |- P
        const Name y = gen.fresh_var(), w = gen.fresh_var();
        out.push_back(through1(
            "⊗•", *d, unfocused(s_prod(s_leaf(f->l, y), s_leaf(f->r, w)), d->con),
            [z, y, w](const std::vector<Term>& ts) { return mk_case(mk_var(z), y, w, ts.at(0)); }));
        break;
      }
      case Conn::Under: {  // (z <N, lam x. M>) from D |- [B] and A^x |- P
        if (d->con->kind != CKind::Under) break;
        const Name x = gen.fresh_var();
        RuleApp app;
        app.rule = "\\•";
        app.conclusion = *d;
        app.premises = {focus_conclusion(d->con->s1, f->l),
                        unfocused(s_leaf(f->r, x), d->con->k1)};
        app.build = [z, x](const std::vector<Term>& ts) {
          return mk_app(mk_var(z), mk_pair(ts.at(0), mk_lam(x, nullptr, ts.at(1))));
        };
        out.push_back(std::move(app));
        break;
      }
      case Conn::Over: {  // mirror
        if (d->con->kind != CKind::Over) break;
        const Name x = gen.fresh_var();
        RuleApp app;
        app.rule = "/•";
        app.conclusion = *d;
        app.premises = {focus_conclusion(d->con->s1, f->r),
                        unfocused(s_leaf(f->l, x), d->con->k1)};
        app.build = [z, x](const std::vector<Term>& ts) {
          return mk_app(mk_var(z), mk_pair(ts.at(0), mk_lam(x, nullptr, ts.at(1))));
        };
        out.push_back(std::move(app));
        break;
      }
      case Conn::Par: {  // (z <lam y. N, lam x. M>) from B^y |- S and A^x |- P
        if (d->con->kind != CKind::Par) break;
        const Name y = gen.fresh_var(), x = gen.fresh_var();
        RuleApp app;
        app.rule = "⊕•";
        app.conclusion = *d;
        app.premises = {unfocused(s_leaf(f->r, y), d->con->k1),
                        unfocused(s_leaf(f->l, x), d->con->k2)};
        app.build = [z, y, x](const std::vector<Term>& ts) {
          return mk_app(mk_var(z),
                        mk_pair(mk_lam(y, nullptr, ts.at(0)), mk_lam(x, nullptr, ts.at(1))));
        };
        out.push_back(std::move(app));
        break;
      }
      case Conn::RSub: {  // case z of <x,k>. M from A^x </ B^k |- P
        const Name x = gen.fresh_var(), kappa = gen.fresh_covar();
        out.push_back(through1("⊘•", *d,
                               unfocused(s_rsub(s_leaf(f->l, x), c_leaf(f->r, kappa)), d->con),
                               [z, x, kappa](const std::vector<Term>& ts) {
                                 return mk_case(mk_var(z), x, kappa, ts.at(0));
                               }));
        break;
      }
      case Conn::LSub: {  // mirror
        const Name kappa = gen.fresh_covar(), x = gen.fresh_var();
        out.push_back(through1("⦸•", *d,
                               unfocused(s_lsub(c_leaf(f->l, kappa), s_leaf(f->r, x)), d->con),
                               [z, kappa, x](const std::vector<Term>& ts) {
                                 return mk_case(mk_var(z), kappa, x, ts.at(0));
                               }));
        break;
      }
      default: break;
    }
  }
  return out;
}

std::optional<RuleApp> LgqCalculus::focused_app(const Sequent& s, NameGen& gen) const {
  if (s.kind != SeqKind::FocusC) return std::nullopt;
  const Formula f = s.focus;
  const Struct a = s.ant;
  switch (f->conn) {
    case Conn::Atom: {  // Ax: p^x |- [p] with term x
      if (a->kind != SKind::Leaf || !formula_eq(a->f, f)) return std::nullopt;
      RuleApp app;
      app.rule = "Ax";
      app.conclusion = s;
      const Name x = a->label;
      app.build = [x](const std::vector<Term>&) { return mk_var(x); };
      return app;
    }
    case Conn::Tensor: {  // <M,N> from G |- [A] and D |- [B]
      if (a->kind != SKind::Prod) return std::nullopt;
      RuleApp app;
      app.rule = "⊗∘";
      app.conclusion = s;
      app.premises = {focus_conclusion(a->s1, f->l), focus_conclusion(a->s2, f->r)};
      app.build = [](const std::vector<Term>& ts) { return mk_pair(ts.at(0), ts.at(1)); };
      return app;
    }
    case Conn::Under: {  // lam <e,y>. M from G |- A^e <- B^y
      const Name eps = gen.fresh_covar(), y = gen.fresh_var();
      return through1("\\∘", s, unfocused(a, c_under(c_leaf(f->r, eps), s_leaf(f->l, y))),
                      [eps, y, &gen](const std::vector<Term>& ts) {
                        NameGen& g = gen;
                        return pattern_lam(eps, y, g, ts.at(0));
                      });
    }
    case Conn::Over: {  // mirror
      const Name eps = gen.fresh_covar(), y = gen.fresh_var();
      return through1("/∘", s, unfocused(a, c_over(s_leaf(f->r, y), c_leaf(f->l, eps))),
                      [eps, y, &gen](const std::vector<Term>& ts) {
                        NameGen& g = gen;
                        return pattern_lam(eps, y, g, ts.at(0));
                      });
    }
    case Conn::Par: {  // lam <k,e>. M from G |- B^k o A^e
      const Name kappa = gen.fresh_covar(), eps = gen.fresh_covar();
      return through1("⊕∘", s, unfocused(a, c_par(c_leaf(f->r, kappa), c_leaf(f->l, eps))),
                      [kappa, eps, &gen](const std::vector<Term>& ts) {
                        NameGen& g = gen;
                        return pattern_lam(kappa, eps, g, ts.at(0));
                      });
    }
    case Conn::RSub: {  // <lam w. N, M> from B^w |- S and G |- [A]
      if (a->kind != SKind::RSubStr) return std::nullopt;
      const Name w = gen.fresh_var();
      RuleApp app;
      app.rule = "⊘∘";
      app.conclusion = s;
      app.premises = {unfocused(s_leaf(f->r, w), a->k1), focus_conclusion(a->s1, f->l)};
      app.build = [w](const std::vector<Term>& ts) {
        return mk_pair(mk_lam(w, nullptr, ts.at(0)), ts.at(1));
      };
      return app;
    }
    case Conn::LSub: {  // mirror
      if (a->kind != SKind::LSubStr) return std::nullopt;
      const Name w = gen.fresh_var();
      RuleApp app;
      app.rule = "⦸∘";
      app.conclusion = s;
      app.premises = {unfocused(s_leaf(f->l, w), a->k1), focus_conclusion(a->s1, f->r)};
      app.build = [w](const std::vector<Term>& ts) {
        return mk_pair(mk_lam(w, nullptr, ts.at(0)), ts.at(1));
      };
      return app;
    }
    default: return std::nullopt;
  }
}

const LgtCalculus& lgt_calculus() {
  static const LgtCalculus calc;
  return calc;
}
const LgqCalculus& lgq_calculus() {
  static const LgqCalculus calc;
  return calc;
}

// ----------------------------------------------------------------- report

CompareReport compare(const Formula& a, const BaseMap& base) {
  // Collect atoms so the report can delinearize even when the base map has
  // gaps; unmapped atoms default to e.
  BaseMap extended = base;
  std::function<void(const Formula&)> scan = [&](const Formula& f) {
    if (f->conn == Conn::Atom) {
      extended.emplace(f->atom, st_e());
      return;
    }
    if (f->l) scan(f->l);
    if (f->r) scan(f->r);
  };
  scan(a);

  CompareReport report;
  report.cbn.label = "cbn";
  report.cbn.lexical = t_neg(cbn_type(a));
  report.cbv.label = "cbv";
  report.cbv.lexical = cbv_type(a);
  report.polarized.label = "polarized";
  report.polarized.lexical = t_neg(translate(a));
  for (CompareRow* row : {&report.cbn, &report.cbv, &report.polarized}) {
    row->delin = delinearize_type(row->lexical, extended);
    row->negations = neg_count(row->lexical);
  }
  return report;
}

}  // namespace lg
