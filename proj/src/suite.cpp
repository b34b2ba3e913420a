#include "tolfac/suite.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>

#include "tolfac/factor.hpp"
#include "tolfac/io.hpp"
#include "tolfac/joinprod.hpp"
#include "tolfac/lattices.hpp"
#include "tolfac/varieties.hpp"

namespace tolfac::suite {

  namespace {

    // Time limits in seconds, one per criterion.
    constexpr double limits[criterion_count + 1] = {0, 10, 1, 60, 60, 30, 30, 1, 10, 60, 1, 30, 5};

    constexpr std::size_t oracle_max_size      = 5;
    constexpr std::size_t lat_strong_max_size  = 6;
    constexpr std::size_t lat_strong_count     = 25;
    constexpr std::size_t cover_lattice_max    = 5;
    constexpr std::size_t rot_max_order        = 3;
    constexpr std::size_t rot_lattice_max      = 6;
    constexpr std::size_t set_factor_max       = 3;
    constexpr std::size_t equivalence_max_size = 5;

    std::vector<std::size_t> const expected_lattice_counts = {1, 1, 1, 2, 5, 15};

    using Clock = std::chrono::steady_clock;

    double since(Clock::time_point t0) {
      return std::chrono::duration<double>(Clock::now() - t0).count();
    }

    // Collects the first few failure messages and counts the rest.
    class Failures {
     public:
      void add(std::string msg) {
        if (_shown.size() < 3) {
          _shown.push_back(std::move(msg));
        }
        ++_count;
      }
      bool empty() const {
        return _count == 0;
      }
      std::string summary() const {
        std::string out = std::to_string(_count) + " failure(s): ";
        for (std::size_t i = 0; i < _shown.size(); ++i) {
          out += (i ? "; " : "") + _shown[i];
        }
        return out;
      }

     private:
      std::vector<std::string> _shown;
      std::size_t              _count = 0;
    };

    std::string fixture(Config const& c, std::string const& name) {
      return (c.fixture_dir.empty() ? std::string(".") : c.fixture_dir) + "/" + name;
    }

    FiniteAlgebra chain(std::size_t n) {
      auto leq = BinaryRelation::diagonal(n);
      for (Element a = 0; a < n; ++a) {
        for (Element b = a; b < n; ++b) {
          leq.set(a, b);
        }
      }
      return lattice_from_order(leq);
    }

    std::vector<FiniteAlgebra> lattices_up_to(std::size_t n) {
      return enumerate_lattices(n, std::max(n, default_lattice_bound));
    }

    std::vector<ProductStructure> set2_products() {
      std::vector<ProductStructure> out;
      for (std::size_t s1 = 1; s1 <= set_factor_max; ++s1) {
        for (std::size_t s2 = 1; s2 <= set_factor_max; ++s2) {
          out.emplace_back(std::vector<FiniteAlgebra>{projection_algebra(s1, 2, 1), projection_algebra(s2, 2, 2)});
          out.emplace_back(std::vector<FiniteAlgebra>{projection_algebra(s2, 2, 2), projection_algebra(s1, 2, 1)});
        }
      }
      return out;
    }

    std::string product_name(ProductStructure const& p) {
      std::string out;
      for (auto const& f : p.factors()) {
        out += (out.empty() ? "" : " x ") + std::string("P") + std::to_string(f.size()) + "("
               + f.signature()[0].name + ")";
      }
      return out;
    }

    ////////////////////////////////////////////////////////////////////
    // Criteria
    ////////////////////////////////////////////////////////////////////

    std::string tolerance_oracle(Config const& c, Failures& fails) {
      std::vector<std::pair<std::string, FiniteAlgebra>> corpus;
      auto add = [&](std::string name, FiniteAlgebra a) {
        if (a.size() <= oracle_max_size) {
          corpus.emplace_back(std::move(name), std::move(a));
        }
      };
      std::size_t k = 0;
      for (auto const& l : lattices_up_to(oracle_max_size)) {
        add("lattice " + std::to_string(k), l);
        add("LatT lattice " + std::to_string(k), lat_to_latt(l));
        ++k;
      }
      for (std::size_t n = 2; n <= rot_max_order; ++n) {
        k = 0;
        for (auto const& r : rot_corpus(n, oracle_max_size)) {
          add("Rot" + std::to_string(n) + " member " + std::to_string(k++), r);
        }
      }
      for (std::size_t s = 1; s <= oracle_max_size; ++s) {
        add("P" + std::to_string(s) + " e2=x1", projection_algebra(s, 2, 1));
        add("P" + std::to_string(s) + " e2=x2", projection_algebra(s, 2, 2));
      }
      for (std::size_t s = 1; s <= 3; ++s) {
        add("P" + std::to_string(s) + " e3=x2", projection_algebra(s, 3, 2));
      }
      for (auto const& p : set2_products()) {
        add(product_name(p), p.product());
      }
      add("C2 x C2", ProductStructure({chain(2), chain(2)}).product());
      add("lifted C2", lift_rotational(make_rotational(chain(2), {0, 1}, 2), 2));
      add("lifted P2", lift_projection(projection_algebra(2, 2, 2)));
      add("lifted C2 x lifted P2",
          ProductStructure({lift_rotational(make_rotational(chain(2), {0, 1}, 2), 2),
                            lift_projection(projection_algebra(2, 2, 2))})
              .product());

      std::size_t total = 0;
      for (auto const& [name, a] : corpus) {
        auto const fast   = tolerances_by_join_closure(a, c.budget);
        auto const oracle = tolerances_by_brute_force(a, c.budget);
        total += oracle.members.size();
        if (fast.members != oracle.members) {
          fails.add(name + ": join closure " + std::to_string(fast.members.size())
                    + " tolerances, brute force " + std::to_string(oracle.members.size()));
        }
      }
      return std::to_string(corpus.size()) + " algebras, " + std::to_string(total)
             + " tolerances, sets identical";
    }

    std::string band3(Config const& c, Failures& fails) {
      auto const band     = read_algebra_file(fixture(c, "band3.json")).algebra;
      auto const expected = read_algebra_file(fixture(c, "band3_quotient.json")).algebra;
      if (!(band == projection_algebra(3, 2, 1))) {
        fails.add("band3.json is not the 3-element first-projection algebra");
        return "";
      }
      auto const t = parse_tolerance("01,12", 3);
      if (!is_tolerance(band, t)) {
        fails.add("T is not a tolerance");
      }
      if (t.is_transitive()) {
        fails.add("T is transitive");
      }
      auto const bs = blocks(band, t);
      if (bs.to_string() != "{{0,1},{1,2}}") {
        fails.add("blocks are " + bs.to_string());
      }
      auto const v = is_factorable(band, t);
      if (!v.factorable()) {
        fails.add("not factorable: " + v.witness->to_string());
        return "";
      }
      auto const& q = *v.quotient;
      if (!(q == expected)) {
        fails.add("quotient table differs from fixture band3_quotient.json");
      }
      Identity const law(Term::app("e2", {Term::var(0), Term::var(1)}), Term::var(0));
      auto const     h = holds_identity(q, law);
      if (!h.holds) {
        fails.add("quotient fails e2(x,y)=x");
      }
      if (!holds_identity(expected, law).holds) {
        fails.add("fixture quotient fails e2(x,y)=x");
      }
      return "blocks " + bs.to_string() + ", proper, factorable, quotient of size "
             + std::to_string(q.size()) + " satisfies e2(x,y)=x";
    }

    std::string lat_strong(Config const& c, Failures& fails) {
      auto const ls = lattices_up_to(lat_strong_max_size);
      if (ls.size() != lat_strong_count) {
        fails.add("expected " + std::to_string(lat_strong_count) + " lattices, got "
                  + std::to_string(ls.size()));
      }
      Variety const v     = lat();
      std::size_t   total = 0;
      for (std::size_t k = 0; k < ls.size(); ++k) {
        for (auto const& t : all_tolerances(ls[k], c.budget).members) {
          ++total;
          auto const f = is_factorable(ls[k], t);
          if (!f.factorable()) {
            fails.add("lattice " + std::to_string(k) + " {" + t.to_string() + "}: " + f.witness->to_string());
          } else if (auto m = member_of(v, *f.quotient); !m.member) {
            fails.add("lattice " + std::to_string(k) + " {" + t.to_string() + "}: quotient " + m.reason);
          }
        }
      }
      return std::to_string(ls.size()) + " lattices, " + std::to_string(total)
             + " tolerances, all factorable with lattice quotients";
    }

    void check_cover(FiniteAlgebra const& a,
                     BinaryRelation const& t,
                     Variety const&       v,
                     std::string const&   label,
                     Failures&            fails) {
      try {
        auto const r = covering_construction(a, t);
        if (auto m = member_of(v, r.cover); !m.member) {
          fails.add(label + ": D not in " + v.name + ": " + m.reason);
        }
        if (!is_congruence(r.cover, r.theta)) {
          fails.add(label + ": theta is not a congruence");
        }
        if (!is_surjective(r.phi) || !is_homomorphism(r.phi)) {
          fails.add(label + ": phi is not a surjective homomorphism");
        }
        if (!(image_relation(r.phi, r.theta) == t)) {
          fails.add(label + ": phi(theta) differs from T");
        }
      } catch (NotFactorable const& e) {
        fails.add(label + ": " + e.what());
      } catch (VerificationFailure const& e) {
        fails.add(label + ": " + e.what());
      }
    }

    std::string covers(Config const& c, Failures& fails) {
      std::size_t pairs = 0;
      Variety const lv = lat();
      auto const    ls = lattices_up_to(cover_lattice_max);
      for (std::size_t k = 0; k < ls.size(); ++k) {
        for (auto const& t : all_tolerances(ls[k], c.budget).members) {
          ++pairs;
          check_cover(ls[k], t, lv, "lattice " + std::to_string(k) + " {" + t.to_string() + "}", fails);
        }
      }
      for (std::size_t n = 2; n <= 3; ++n) {
        Variety const rv = rot(n);
        auto const    rs = rot_corpus(n, rot_lattice_max);
        for (std::size_t k = 0; k < rs.size(); ++k) {
          for (auto const& t : all_tolerances(rs[k], c.budget).members) {
            ++pairs;
            check_cover(rs[k], t, rv,
                        rv.name + " member " + std::to_string(k) + " {" + t.to_string() + "}", fails);
          }
        }
      }
      return std::to_string(pairs) + " (algebra, tolerance) pairs; D in the variety, theta a "
             "congruence, phi onto, phi(theta) = T";
    }

    std::string set_products(Config const& c, Failures& fails) {
      std::size_t pairs = 0;
      for (auto const& p : set2_products()) {
        for (auto const& t : all_tolerances(p.product(), c.budget).members) {
          ++pairs;
          auto const label = product_name(p) + " {" + t.to_string() + "}";
          auto const dec   = decompose_tolerance(p, t);
          if (!dec.exact) {
            fails.add(label + ": not a product of its projections");
            continue;
          }
          auto const rep = decompose_blocks(p, t);
          if (!rep.passed()) {
            fails.add(label + ": " + rep.failure);
          }
        }
      }
      return std::to_string(set2_products().size()) + " products, " + std::to_string(pairs)
             + " tolerances; all exact, blocks are products, block counts multiply";
    }

    std::string quotient_products(Config const& c, Failures& fails) {
      std::size_t pairs = 0;
      for (auto const& p : set2_products()) {
        for (auto const& t : all_tolerances(p.product(), c.budget).members) {
          ++pairs;
          auto const label = product_name(p) + " {" + t.to_string() + "}";
          try {
            if (!verify_quotient_product(p, t).isomorphic) {
              fails.add(label + ": A/T is not isomorphic to the product of the factor quotients");
            }
          } catch (NotFactorable const& e) {
            fails.add(label + ": " + e.what());
          } catch (InvalidArgument const& e) {
            fails.add(label + ": " + e.what());
          }
        }
      }
      return std::to_string(pairs) + " tolerances; A/T isomorphic to A1/T1 x A2/T2 in every case";
    }

    std::string witness_search(Config const& c, Failures& fails, double& fixture_seconds) {
      auto const t0      = Clock::now();
      auto const frozen  = read_witness_fixture(fixture(c, "latt_witness.json"));
      auto const& a      = frozen.algebra.algebra;
      auto const  member = member_of(latt(), a);
      if (!member.member) {
        fails.add("fixture algebra is not in LatT: " + member.reason);
      }
      if (!is_tolerance(a, frozen.tolerance)) {
        fails.add("fixture relation is not a tolerance");
        return "";
      }
      auto const v = is_factorable(a, frozen.tolerance);
      if (v.factorable()) {
        fails.add("fixture tolerance is factorable");
        return "";
      }
      auto const& w = *v.witness;
      if (w.symbol != "tjoin" || w.tuple.size() != 3 || w.containers.size() < 2) {
        fails.add("fixture witness is not a tjoin image inside two blocks: " + w.to_string());
      }
      if (w.to_string() != frozen.witness.to_string()) {
        fails.add("recomputed witness " + w.to_string() + " differs from frozen "
                  + frozen.witness.to_string());
      }
      fixture_seconds = since(t0);

      auto const t1   = Clock::now();
      auto const ls   = lattices_up_to(c.search_max_size);
      auto const hit  = find_nonfactorable_witness(
          lattice_stream(c.search_max_size, std::max(c.search_max_size, default_lattice_bound),
                         lat_to_latt),
          c.budget, "tjoin");
      if (!hit) {
        fails.add("no tjoin witness among LatT lattices up to size "
                  + std::to_string(c.search_max_size));
      } else if (!(hit->algebra == a) || !(hit->tolerance == frozen.tolerance)) {
        fails.add("search found a different witness than the fixture: lattice "
                  + std::to_string(hit->algebra_index) + " {" + hit->tolerance.to_string() + "}");
      }
      auto const native = find_nonfactorable_witness(stream_of(ls), c.budget);
      if (native) {
        fails.add("native lattice " + std::to_string(native->algebra_index)
                  + " is not factorable: " + native->witness.to_string());
      }
      double const search = since(t1);
      if (search > c.search_seconds) {
        fails.add("search took " + std::to_string(search) + " s, budget "
                  + std::to_string(c.search_seconds) + " s");
      }
      std::ostringstream os;
      os.precision(3);
      os << "fixture re-verified: " << a.size()
         << "-element lattice, T = {" << frozen.tolerance.to_string() << "}, " << w.to_string()
         << "; search over " << ls.size() << " lattices of size <= " << c.search_max_size
         << " reproduces it, native signature has none (" << search << " s)";
      return os.str();
    }

    std::string term_equivalence(Config const& c, Failures& fails) {
      auto const ls = lattices_up_to(equivalence_max_size);
      std::size_t total = 0;
      for (std::size_t k = 0; k < ls.size(); ++k) {
        auto const conv = lat_to_latt(ls[k]);
        auto const a    = all_tolerances(ls[k], c.budget).members;
        auto const b    = all_tolerances(conv, c.budget).members;
        total += a.size();
        if (a != b) {
          fails.add("lattice " + std::to_string(k) + ": " + std::to_string(a.size()) + " vs "
                    + std::to_string(b.size()) + " tolerances");
        }
        if (!(latt_to_lat(conv) == ls[k])) {
          fails.add("lattice " + std::to_string(k) + ": round trip changes the tables");
        }
      }
      return std::to_string(ls.size()) + " lattices, " + std::to_string(total)
             + " tolerances, identical before and after conversion";
    }

    std::string rotational(Config const& c, Failures& fails) {
      std::size_t members = 0, pairs = 0;
      for (std::size_t n = 1; n <= rot_max_order; ++n) {
        Variety const v  = rot(n);
        auto const    rs = rot_corpus(n, rot_lattice_max);
        members += rs.size();
        for (std::size_t k = 0; k < rs.size(); ++k) {
          auto const& a = rs[k];
          auto const& g = a.table("g");
          for (auto const& t : all_tolerances(a, c.budget).members) {
            ++pairs;
            auto const label = v.name + " member " + std::to_string(k) + " {" + t.to_string() + "}";
            auto const f     = is_factorable(a, t);
            if (!f.factorable()) {
              fails.add(label + ": " + f.witness->to_string());
              continue;
            }
            if (auto m = member_of(v, *f.quotient); !m.member) {
              fails.add(label + ": quotient " + m.reason);
            }
            for (auto const& b : f.blocks.blocks) {
              Bitset image(a.size());
              for (auto x : b.elements()) {
                image.set(g[x]);
              }
              if (!f.blocks.index_of(image)) {
                fails.add(label + ": g" + b.to_string() + " is not a block");
              }
            }
          }
        }
      }
      return std::to_string(members) + " rotational lattices (n <= 3), " + std::to_string(pairs)
             + " tolerances; factorable, quotients in Rot_n, blocks mapped to blocks";
    }

    std::string permutability(Config const& c, Failures& fails) {
      auto const c3 = chain(3);
      auto const p  = congruences_permute(c3, c.budget);
      if (p.permute) {
        fails.add("congruences of C3 permute");
      }
      std::optional<BinaryRelation> proper;
      for (auto const& t : all_tolerances(c3, c.budget).members) {
        if (!t.is_transitive()) {
          proper = t;
          break;
        }
      }
      if (!proper) {
        fails.add("C3 has no proper tolerance");
        return "";
      }
      std::string out = "C3 congruences do not permute";
      if (p.witness) {
        out += " ({" + p.witness->first.to_string() + "} vs {" + p.witness->second.to_string() + "})";
      }
      return out + "; proper tolerance {" + proper->to_string() + "}";
    }

    std::string lattice_counts(Config const&, Failures& fails) {
      auto const ls = lattices_up_to(expected_lattice_counts.size());
      std::vector<std::size_t> extension(expected_lattice_counts.size(), 0);
      for (auto const& l : ls) {
        ++extension[l.size() - 1];
      }
      std::vector<std::size_t> brute;
      for (std::size_t s = 1; s <= expected_lattice_counts.size(); ++s) {
        brute.push_back(brute_force_lattice_orders(s).size());
      }
      auto show = [](std::vector<std::size_t> const& v) {
        std::string out;
        for (auto x : v) {
          out += (out.empty() ? "" : ",") + std::to_string(x);
        }
        return out;
      };
      if (extension != expected_lattice_counts) {
        fails.add("coatom extension counts " + show(extension));
      }
      if (brute != expected_lattice_counts) {
        fails.add("brute-force counts " + show(brute));
      }
      return "coatom extension " + show(extension) + ", brute force " + show(brute);
    }

    std::string negative_control(Config const& c, Failures& fails) {
      ProductStructure const p({chain(2), chain(2)});
      std::size_t            non_exact = 0, total = 0;
      for (auto const& t : all_tolerances(p.product(), c.budget).members) {
        ++total;
        if (!decompose_tolerance(p, t).exact) {
          ++non_exact;
        }
      }
      if (non_exact > 0) {
        return std::to_string(non_exact) + " of " + std::to_string(total)
               + " tolerances of C2 x C2 are not products";
      }
      Bitset diagonal(p.product().size());
      diagonal.set(p.encode(std::vector<Element>{0, 0}));
      diagonal.set(p.encode(std::vector<Element>{1, 1}));
      auto const dec = decompose_subalgebra(p, diagonal);
      if (dec.is_product) {
        fails.add("diagonal of C2 x C2 reported as a product");
        return "";
      }
      auto const& m = *dec.missing;
      return "all " + std::to_string(total) + " tolerances of C2 x C2 are products; diagonal "
             "subalgebra flagged as non-product, missing (" + std::to_string(m[0]) + ","
             + std::to_string(m[1]) + ")";
    }

    std::string const titles[criterion_count + 1] = {
        "",
        "tolerance enumeration matches brute force (<= 5 elements)",
        "3-element projection algebra witness",
        "lattices of size <= 6 are strongly factorable",
        "covering construction on lattices and rotational lattices",
        "Set2 products: tolerances and blocks decompose",
        "Set2 products: A/T is the product of the factor quotients",
        "LatT non-factorability witness search",
        "Lat to LatT conversion preserves tolerances",
        "rotational lattices: factorable, quotients in Rot_n, blocks rotate",
        "C3: non-permuting congruences and a proper tolerance",
        "lattice generator cross-check",
        "negative control on C2 x C2",
    };

  }  // namespace

  CriterionResult run_criterion(int id, Config const& config) {
    if (id < 1 || id > criterion_count) {
      throw InvalidArgument("no criterion " + std::to_string(id));
    }
    CriterionResult r;
    r.id            = id;
    r.title         = titles[id];
    r.limit_seconds = limits[id];
    Failures   fails;
    auto const t0 = Clock::now();
    double     timed_part = -1;
    try {
      switch (id) {
        case 1: r.detail = tolerance_oracle(config, fails); break;
        case 2: r.detail = band3(config, fails); break;
        case 3: r.detail = lat_strong(config, fails); break;
        case 4: r.detail = covers(config, fails); break;
        case 5: r.detail = set_products(config, fails); break;
        case 6: r.detail = quotient_products(config, fails); break;
        case 7: r.detail = witness_search(config, fails, timed_part); break;
        case 8: r.detail = term_equivalence(config, fails); break;
        case 9: r.detail = rotational(config, fails); break;
        case 10: r.detail = permutability(config, fails); break;
        case 11: r.detail = lattice_counts(config, fails); break;
        default: r.detail = negative_control(config, fails); break;
      }
    } catch (BudgetExceeded const&) {
      throw;
    } catch (std::exception const& e) {
      fails.add(e.what());
    }
    r.seconds = since(t0);
    // the search itself has its own budget; the limit applies to the fixture check
    r.timed_seconds = id == 7 && timed_part >= 0 ? timed_part : r.seconds;
    if (r.timed_seconds > r.limit_seconds) {
      fails.add("took " + std::to_string(r.timed_seconds) + " s, limit "
                + std::to_string(r.limit_seconds) + " s");
    }
    r.passed = fails.empty();
    if (!r.passed) {
      r.detail = fails.summary();
    }
    return r;
  }

  std::vector<CriterionResult> run_all(Config const&                                    config,
                                       std::function<void(CriterionResult const&)> const& each) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= criterion_count; ++id) {
      out.push_back(run_criterion(id, config));
      if (each) {
        each(out.back());
      }
    }
    return out;
  }

  std::string format_line(CriterionResult const& r) {
    char head[64];
    std::snprintf(head, sizeof head, "%s [%2d] ", r.passed ? "PASS" : "FAIL", r.id);
    char timing[96];
    if (r.timed_seconds != r.seconds) {
      std::snprintf(timing, sizeof timing, " (%.2f s, limit %.0f s; %.2f s in total): ",
                    r.timed_seconds, r.limit_seconds, r.seconds);
    } else {
      std::snprintf(timing, sizeof timing, " (%.2f s, limit %.0f s): ", r.seconds, r.limit_seconds);
    }
    return head + r.title + timing + r.detail;
  }

  Config config_from_environment(Config defaults) {
    if (char const* dir = std::getenv("TOLFAC_FIXTURES")) {
      defaults.fixture_dir = dir;
    }
    if (char const* n = std::getenv("TOLFAC_SEARCH_MAX_SIZE")) {
      defaults.search_max_size = std::stoul(n);
    }
    if (char const* s = std::getenv("TOLFAC_SEARCH_SECONDS")) {
      defaults.search_seconds = std::stod(s);
    }
    return defaults;
  }

}  // namespace tolfac::suite
