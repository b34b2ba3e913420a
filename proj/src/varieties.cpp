#include "tolfac/varieties.hpp"

#include <numeric>

#include "tolfac/factor.hpp"

namespace tolfac {

  namespace {

    Term x(std::size_t i) {
      return Term::var(i);
    }

    Term app(std::string const& f, std::vector<Term> args) {
      return Term::app(f, std::move(args));
    }

    // The six lattice laws over arbitrary binary term builders.
    template <typename Join, typename Meet>
    std::vector<Identity> lattice_laws(Join j, Meet m) {
      auto a = x(0), b = x(1), c = x(2);
      return {
          Identity(j(a, b), j(b, a)),
          Identity(m(a, b), m(b, a)),
          Identity(j(j(a, b), c), j(a, j(b, c))),
          Identity(m(m(a, b), c), m(a, m(b, c))),
          Identity(a, j(a, m(a, b))),
          Identity(a, m(a, j(a, b))),
      };
    }

    Term join2(Term a, Term b) {
      return app("join", {std::move(a), std::move(b)});
    }

    Term meet2(Term a, Term b) {
      return app("meet", {std::move(a), std::move(b)});
    }

    std::vector<Identity> rot_laws(std::size_t n) {
      Term gn = x(0);
      for (std::size_t k = 0; k < n; ++k) {
        gn = app("g", {gn});
      }
      auto g = [](Term t) { return app("g", {std::move(t)}); };
      return {
          Identity(gn, x(0)),
          Identity(g(join2(x(0), x(1))), join2(g(x(0)), g(x(1)))),
          Identity(g(meet2(x(0), x(1))), meet2(g(x(0)), g(x(1)))),
      };
    }

    Term projection_term(std::size_t n) {
      std::vector<Term> args;
      for (std::size_t k = 0; k < n; ++k) {
        args.push_back(x(k));
      }
      return app(projection_symbol(n), std::move(args));
    }

    // idempotence and e(x.., e(y..) in slot i, ..x) = e(x.., y_i, ..x)
    std::vector<Identity> set_join_laws(std::size_t n) {
      std::string const     e = projection_symbol(n);
      std::vector<Identity> out;
      out.emplace_back(app(e, std::vector<Term>(n, x(0))), x(0));
      std::vector<Term> ys;
      for (std::size_t k = 0; k < n; ++k) {
        ys.push_back(x(n + k));
      }
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<Term> lhs, rhs;
        for (std::size_t k = 0; k < n; ++k) {
          lhs.push_back(k == i ? app(e, ys) : x(k));
          rhs.push_back(k == i ? x(n + i) : x(k));
        }
        out.emplace_back(app(e, lhs), app(e, rhs), 2 * n);
      }
      return out;
    }

    void require(bool ok, std::string const& what) {
      if (!ok) {
        throw InvalidArgument(what);
      }
    }

    FiniteAlgebra expand(FiniteAlgebra const& a, Signature const& sig, std::vector<Term> defs) {
      return term_expansion(a, sig, defs);
    }

  }  // namespace

  std::string projection_symbol(std::size_t n) {
    return "e" + std::to_string(n);
  }

  Signature rot_signature() {
    return Signature({{"join", 2}, {"meet", 2}, {"g", 1}});
  }

  Signature latt_signature() {
    return Signature({{"tjoin", 3}, {"tmeet", 3}});
  }

  Signature tau_signature(std::size_t n) {
    return Signature({{"join", 2}, {"meet", 2}, {"g", 1}, {projection_symbol(n), n}, {"star", 2}});
  }

  std::vector<Identity> lattice_identities() {
    return lattice_laws(join2, meet2);
  }

  Variety lat() {
    return Variety{"Lat", lattice_signature(), lattice_identities(), std::nullopt, std::nullopt};
  }

  Variety set_projection(std::size_t n, std::size_t i) {
    require(n >= 1 && i >= 1 && i <= n, "projection variety needs 1 <= i <= n");
    return Variety{"Set" + std::to_string(n) + "^" + std::to_string(i),
                   Signature({{projection_symbol(n), n}}),
                   {Identity(projection_term(n), x(i - 1), n)},
                   std::nullopt,
                   std::nullopt};
  }

  Variety set_join(std::size_t n) {
    require(n >= 1, "Set_n needs n >= 1");
    Signature                          sig({{projection_symbol(n), n}});
    std::vector<std::vector<Identity>> parts;
    for (std::size_t i = 1; i <= n; ++i) {
      parts.push_back(set_projection(n, i).identities);
    }
    return Variety{"Set" + std::to_string(n), sig, set_join_laws(n),
                   JoinSpec(sig, std::move(parts), projection_term(n)), std::nullopt};
  }

  Variety rot(std::size_t n) {
    require(n >= 1, "Rot_n needs n >= 1");
    auto ids = lattice_identities();
    for (auto& id : rot_laws(n)) {
      ids.push_back(std::move(id));
    }
    return Variety{"Rot" + std::to_string(n), rot_signature(), std::move(ids), std::nullopt,
                   std::nullopt};
  }

  Variety latt() {
    auto tj = [](Term a, Term b) { return app("tjoin", {a, b, b}); };
    auto tm = [](Term a, Term b) { return app("tmeet", {a, b, b}); };
    auto ids = lattice_laws(tj, tm);
    ids.emplace_back(app("tjoin", {x(0), x(1), x(2)}), app("tjoin", {x(0), tm(x(1), x(2)), tm(x(1), x(2))}));
    ids.emplace_back(app("tmeet", {x(0), x(1), x(2)}), app("tmeet", {x(0), tj(x(1), x(2)), tj(x(1), x(2))}));
    AlterEgo ego{std::make_shared<Variety const>(lat()), latt_to_lat, lat_to_latt};
    return Variety{"LatT", latt_signature(), std::move(ids), std::nullopt, std::move(ego)};
  }

  Variety rot_lift(std::size_t m, std::size_t n) {
    require(m >= 1 && n >= 1, "lifted rotational variety needs m, n >= 1");
    auto ids = rot(m).identities;
    ids.emplace_back(projection_term(n), x(0), n);
    ids.emplace_back(app("star", {x(0), x(1)}), x(0));
    return Variety{"RotLift(" + std::to_string(m) + "," + std::to_string(n) + ")",
                   tau_signature(n), std::move(ids), std::nullopt, std::nullopt};
  }

  Variety set_lift(std::size_t n) {
    require(n >= 1, "lifted projection variety needs n >= 1");
    std::vector<Identity> ids;
    ids.emplace_back(join2(x(0), x(1)), x(0));
    ids.emplace_back(meet2(x(0), x(1)), x(0));
    ids.emplace_back(app("g", {x(0)}), x(0));
    ids.emplace_back(app("star", {x(0), x(1)}), x(1));
    for (auto& id : set_join_laws(n)) {
      ids.push_back(std::move(id));
    }
    return Variety{"SetLift(" + std::to_string(n) + ")", tau_signature(n), std::move(ids),
                   std::nullopt, std::nullopt};
  }

  Variety combined(std::size_t m, std::size_t n) {
    auto const sig = tau_signature(n);
    // star is a rectangular band operation commuting with every operation
    auto                  star = [](Term a, Term b) { return app("star", {std::move(a), std::move(b)}); };
    std::vector<Identity> ids;
    ids.emplace_back(star(x(0), x(0)), x(0));
    ids.emplace_back(star(star(x(0), x(1)), x(2)), star(x(0), x(2)));
    ids.emplace_back(star(x(0), star(x(1), x(2))), star(x(0), x(2)));
    for (auto const& s : sig) {
      std::vector<Term> xs, ys, mixed;
      for (std::size_t k = 0; k < s.arity; ++k) {
        xs.push_back(x(k));
        ys.push_back(x(s.arity + k));
        mixed.push_back(star(x(k), x(s.arity + k)));
      }
      ids.emplace_back(star(app(s.name, xs), app(s.name, ys)), app(s.name, mixed), 2 * s.arity);
    }
    JoinSpec spec(sig, {rot_lift(m, n).identities, set_lift(n).identities}, star(x(0), x(1)));
    return Variety{"V(" + std::to_string(m) + "," + std::to_string(n) + ")", sig, std::move(ids),
                   std::move(spec), std::nullopt};
  }

  Variety builtin(std::string const& name, std::vector<std::size_t> const& params) {
    auto need = [&](std::size_t k) {
      require(params.size() == k, "variety " + name + " takes " + std::to_string(k)
                                      + " parameter(s), got " + std::to_string(params.size()));
    };
    if (name == "Lat") {
      need(0);
      return lat();
    }
    if (name == "LatT") {
      need(0);
      return latt();
    }
    if (name == "Set") {
      need(2);
      return set_projection(params[0], params[1]);
    }
    if (name == "SetJoin") {
      need(1);
      return set_join(params[0]);
    }
    if (name == "Rot") {
      need(1);
      return rot(params[0]);
    }
    if (name == "RotLift") {
      need(2);
      return rot_lift(params[0], params[1]);
    }
    if (name == "SetLift") {
      need(1);
      return set_lift(params[0]);
    }
    if (name == "V") {
      need(2);
      return combined(params[0], params[1]);
    }
    throw InvalidArgument("unknown variety '" + name + "'");
  }

  MembershipVerdict member_of(Variety const& v, FiniteAlgebra const& a) {
    if (!(a.signature() == v.signature)) {
      throw InvalidArgument("algebra signature " + a.signature().to_string()
                            + " differs from the signature of " + v.name + ", "
                            + v.signature.to_string());
    }
    MembershipVerdict out;
    for (auto const& id : v.identities) {
      auto r = holds_identity(a, id);
      if (!r.holds) {
        out.member     = false;
        out.failing    = id;
        out.assignment = std::move(r.counterexample);
        out.reason     = "fails " + id.to_string();
        return out;
      }
    }
    if (v.join) {
      auto const dec = decompose_algebra(a, *v.join);
      if (!dec.member) {
        out.member = false;
        out.reason = dec.failed_check;
        return out;
      }
      for (std::size_t i = 0; i < dec.quotients.size(); ++i) {
        for (auto const& id : v.join->subvariety_identities[i]) {
          auto r = holds_identity(dec.quotients[i], id);
          if (!r.holds) {
            out.member     = false;
            out.failing    = id;
            out.assignment = std::move(r.counterexample);
            out.reason     = "quotient " + std::to_string(i) + " fails " + id.to_string();
            return out;
          }
        }
      }
    }
    return out;
  }

  FiniteAlgebra lat_to_latt(FiniteAlgebra const& lattice) {
    auto const v = member_of(lat(), lattice);
    require(v.member, "not a lattice: " + v.reason);
    return expand(lattice, latt_signature(),
                  {join2(x(0), meet2(x(1), x(2))), meet2(x(0), join2(x(1), x(2)))});
  }

  FiniteAlgebra latt_to_lat(FiniteAlgebra const& algebra) {
    Variety const target = latt();
    auto const    v      = member_of(target, algebra);
    require(v.member, "not in LatT: " + v.reason);
    return expand(algebra, lattice_signature(),
                  {app("tjoin", {x(0), x(1), x(1)}), app("tmeet", {x(0), x(1), x(1)})});
  }

  FiniteAlgebra make_rotational(FiniteAlgebra const&        lattice,
                                std::vector<Element> const& g,
                                std::size_t                 n) {
    auto const v = member_of(lat(), lattice);
    require(v.member, "not a lattice: " + v.reason);
    require(g.size() == lattice.size(), "g must have one image per element");
    for (auto y : g) {
      require(y < lattice.size(), "g has an image out of range");
    }
    AlgebraMap map{lattice, lattice, g};
    require(is_bijective(map) && is_homomorphism(map), "g is not a lattice automorphism");
    for (Element a = 0; a < lattice.size(); ++a) {
      Element y = a;
      for (std::size_t k = 0; k < n; ++k) {
        y = g[y];
      }
      require(y == a, "g^" + std::to_string(n) + " is not the identity");
    }
    return FiniteAlgebra::from_function(
        lattice.size(), rot_signature(), [&](std::size_t op, std::span<Element const> args) {
          return op == 2 ? g[args[0]] : lattice.apply(op, args);
        });
  }

  std::vector<FiniteAlgebra> rot_corpus(std::size_t n, std::size_t max_lattice_size) {
    std::vector<FiniteAlgebra> out;
    for (auto const& l : enumerate_lattices(max_lattice_size)) {
      for (auto const& g : automorphisms(l)) {
        bool order_divides = true;
        for (Element a = 0; a < l.size() && order_divides; ++a) {
          Element y = a;
          for (std::size_t k = 0; k < n; ++k) {
            y = g[y];
          }
          order_divides = y == a;
        }
        if (order_divides) {
          out.push_back(make_rotational(l, g, n));
        }
      }
    }
    return out;
  }

  FiniteAlgebra projection_algebra(std::size_t size, std::size_t n, std::size_t i) {
    require(n >= 1 && i >= 1 && i <= n, "projection algebra needs 1 <= i <= n");
    return FiniteAlgebra::from_function(size, Signature({{projection_symbol(n), n}}),
                                        [i](std::size_t, std::span<Element const> args) {
                                          return args[i - 1];
                                        });
  }

  FiniteAlgebra lift_rotational(FiniteAlgebra const& a, std::size_t n) {
    require(a.signature() == rot_signature(), "lift_rotational needs the {join, meet, g} signature");
    return FiniteAlgebra::from_function(a.size(), tau_signature(n),
                                        [&](std::size_t op, std::span<Element const> args) {
                                          return op < 3 ? a.apply(op, args) : args[0];
                                        });
  }

  FiniteAlgebra lift_projection(FiniteAlgebra const& a) {
    auto const& sig = a.signature();
    require(sig.size() == 1 && sig[0].name == projection_symbol(sig[0].arity),
            "lift_projection needs a single e<n> symbol");
    std::size_t const n = sig[0].arity;
    return FiniteAlgebra::from_function(a.size(), tau_signature(n),
                                        [&](std::size_t op, std::span<Element const> args) {
                                          switch (op) {
                                            case 3:
                                              return a.apply(0, args);
                                            case 4:
                                              return args[1];
                                            default:
                                              return args[0];
                                          }
                                        });
  }

  ////////////////////////////////////////////////////////////////////////
  // Probes
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(Verdict v) {
    switch (v) {
      case Verdict::holds:
        return "holds";
      case Verdict::fails:
        return "fails";
      default:
        return "inconclusive";
    }
  }

  namespace {

    // Covering construction in the alter ego, translated back.
    std::optional<std::string> cover_via_alter_ego(Variety const&        v,
                                                   FiniteAlgebra const&  a,
                                                   BinaryRelation const& t) {
      auto const& ego   = *v.alter_ego;
      auto const  other = ego.to(a);
      auto const  cover = covering_construction(other, t);
      auto const  d     = ego.from(cover.cover);
      if (!member_of(v, d).member) {
        return "translated cover is not in " + v.name;
      }
      AlgebraMap phi{d, a, cover.phi.values};
      if (!is_homomorphism(phi) || !is_surjective(phi)) {
        return "translated projection is not a surjective homomorphism";
      }
      if (!is_congruence(d, cover.theta)) {
        return "kernel is not a congruence of the translated cover";
      }
      if (!(image_relation(phi, cover.theta) == t)) {
        return "image of the kernel differs from the tolerance";
      }
      return std::nullopt;
    }

    void fail(PropertyVerdict& p, std::size_t k, BinaryRelation const& t, std::string detail) {
      if (p.verdict == Verdict::fails) {
        return;
      }
      p.verdict       = Verdict::fails;
      p.algebra_index = k;
      p.tolerance     = t;
      p.detail        = std::move(detail);
    }

    void mark_inconclusive(PropertyVerdict& p, std::size_t k, BinaryRelation const& t, std::string detail) {
      if (p.verdict != Verdict::holds) {
        return;
      }
      p.verdict       = Verdict::inconclusive;
      p.algebra_index = k;
      p.tolerance     = t;
      p.detail        = std::move(detail);
    }

  }  // namespace

  PropertyReport probe_properties(Variety const&                    v,
                                  std::vector<FiniteAlgebra> const& sample,
                                  std::string                       sample_description,
                                  Budget const&                     budget) {
    PropertyReport report;
    report.variety  = v.name;
    report.sample   = std::move(sample_description);
    report.algebras = sample.size();
    report.p1.verdict = report.p2.verdict = report.p3.verdict = Verdict::holds;
    report.p4.verdict = Verdict::inconclusive;
    report.p4.detail  = "no proper tolerance in the sample";

    for (std::size_t k = 0; k < sample.size(); ++k) {
      auto const& a = sample[k];
      auto const  m = member_of(v, a);
      if (!m.member) {
        throw InvalidArgument("sample algebra " + std::to_string(k) + " is not in " + v.name + ": "
                              + m.reason);
      }
      for (auto const& t : all_tolerances(a, budget).members) {
        ++report.tolerances;
        if (report.p4.verdict != Verdict::holds && !t.is_transitive()) {
          report.p4 = PropertyVerdict{Verdict::holds, "proper tolerance {" + t.to_string() + "}", k, t};
        }
        auto const f = is_factorable(a, t);
        if (!f.factorable()) {
          std::string const w = f.witness->to_string();
          fail(report.p1, k, t, w);
          fail(report.p2, k, t, w);
        } else {
          auto const q = member_of(v, *f.quotient);
          if (!q.member) {
            fail(report.p2, k, t, "quotient " + q.reason);
          }
        }
        if (report.p3.verdict == Verdict::fails) {
          continue;
        }
        try {
          if (f.factorable()) {
            auto const cover = covering_construction(a, t);
            auto const d     = member_of(v, cover.cover);
            if (!d.member) {
              fail(report.p3, k, t, "cover is not in " + v.name + ": " + d.reason);
            }
          } else if (v.alter_ego) {
            if (auto problem = cover_via_alter_ego(v, a, t)) {
              fail(report.p3, k, t, *problem);
            }
          } else {
            mark_inconclusive(report.p3, k, t,
                              "not factorable and no term-equivalent variety to build a cover in");
          }
        } catch (NotFactorable const& e) {
          mark_inconclusive(report.p3, k, t, e.what());
        } catch (VerificationFailure const& e) {
          fail(report.p3, k, t, e.what());
        }
      }
    }
    for (auto* p : {&report.p1, &report.p2, &report.p3}) {
      if (p->verdict == Verdict::holds) {
        p->detail = "no counterexample among " + std::to_string(report.tolerances)
                    + " tolerances of the sample";
      }
    }
    return report;
  }

}  // namespace tolfac
