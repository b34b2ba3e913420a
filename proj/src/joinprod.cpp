#include "tolfac/joinprod.hpp"

#include <algorithm>

#include "tolfac/factor.hpp"

namespace tolfac {

  ProductStructure::ProductStructure(std::vector<FiniteAlgebra> factors)
      : _factors(std::move(factors)), _product(direct_product(_factors)) {
    for (auto const& f : _factors) {
      _radices.push_back(f.size());
    }
  }

  Element ProductStructure::encode(std::span<Element const> coordinates) const {
    if (coordinates.size() != _radices.size()) {
      throw InvalidArgument("expected " + std::to_string(_radices.size()) + " coordinates");
    }
    return static_cast<Element>(encode_tuple(coordinates, _radices));
  }

  std::vector<Element> ProductStructure::decode(Element x) const {
    return decode_tuple(x, _radices);
  }

  ////////////////////////////////////////////////////////////////////////
  // JoinSpec
  ////////////////////////////////////////////////////////////////////////

  JoinSpec::JoinSpec(Signature sig, std::vector<std::vector<Identity>> ids, Term term)
      : signature(std::move(sig)), subvariety_identities(std::move(ids)), d(std::move(term)) {
    std::size_t const n = subvariety_identities.size();
    if (n == 0) {
      throw InvalidArgument("a join needs at least one subvariety");
    }
    if (d.is_var() || d.num_vars() != n) {
      throw InvalidArgument("decomposition term " + d.to_string() + " must use exactly "
                            + std::to_string(n) + " variables");
    }
    for (std::size_t i = 0; i < n; ++i) {
      auto const law   = projection_law(i);
      bool       found = false;
      for (auto const& id : subvariety_identities[i]) {
        if ((id.lhs == law.lhs && id.rhs == law.rhs) || (id.lhs == law.rhs && id.rhs == law.lhs)) {
          found = true;
          break;
        }
      }
      if (!found) {
        throw InvalidArgument("subvariety " + std::to_string(i) + " lacks the identity "
                              + law.to_string());
      }
    }
  }

  Identity JoinSpec::projection_law(std::size_t i) const {
    return Identity(d, Term::var(i), arity());
  }

  ////////////////////////////////////////////////////////////////////////
  // Tolerances and blocks over products
  ////////////////////////////////////////////////////////////////////////

  ToleranceDecomposition decompose_tolerance(ProductStructure const& p, BinaryRelation const& t) {
    if (t.size() != p.product().size()) {
      throw InvalidArgument("relation on " + std::to_string(t.size())
                            + " elements does not match a product of size "
                            + std::to_string(p.product().size()));
    }
    ToleranceDecomposition out;
    for (std::size_t i = 0; i < p.arity(); ++i) {
      out.parts.emplace_back(p.radices()[i]);
    }
    for (auto const& [a, b] : t.pairs()) {
      auto const xa = p.decode(a);
      auto const xb = p.decode(b);
      for (std::size_t i = 0; i < p.arity(); ++i) {
        out.parts[i].set(xa[i], xb[i]);
      }
    }
    out.exact = product_relation(out.parts) == t;
    return out;
  }

  BlockDecompositionReport decompose_blocks(ProductStructure const& p, BinaryRelation const& t) {
    auto const dec = decompose_tolerance(p, t);
    if (!dec.exact) {
      throw InvalidArgument("tolerance {" + t.to_string() + "} is not a product of its projections");
    }
    BlockDecompositionReport report;
    report.blocks = blocks(p.product(), t);
    for (std::size_t i = 0; i < p.arity(); ++i) {
      report.factor_blocks.push_back(blocks(p.factors()[i], dec.parts[i]));
    }
    std::size_t const  k = p.arity();
    std::size_t const  n = p.product().size();
    auto note = [&](bool& flag, std::string msg) {
      if (flag && report.failure.empty()) {
        report.failure = std::move(msg);
      }
      flag = false;
    };

    // (a)
    for (auto const& b : report.blocks.blocks) {
      std::vector<Bitset> proj;
      for (std::size_t i = 0; i < k; ++i) {
        proj.emplace_back(p.radices()[i]);
      }
      for (auto x : b.elements()) {
        auto const c = p.decode(x);
        for (std::size_t i = 0; i < k; ++i) {
          proj[i].set(c[i]);
        }
      }
      for (std::size_t i = 0; i < k; ++i) {
        if (!report.factor_blocks[i].index_of(proj[i])) {
          note(report.blocks_are_products,
               "projection " + std::to_string(i) + " of block " + b.to_string()
                   + " is not a block of the factor tolerance");
        }
      }
      std::size_t volume = 1;
      for (auto const& q : proj) {
        volume *= q.count();
      }
      if (volume != b.size()) {
        note(report.blocks_are_products,
             "block " + b.to_string() + " is smaller than the product of its projections");
      }
    }

    // (b)
    std::size_t expected = 1;
    for (auto const& fb : report.factor_blocks) {
      expected *= fb.size();
    }
    if (expected != report.blocks.size()) {
      note(report.counts_multiply, std::to_string(report.blocks.size())
                                       + " blocks, but the factor block counts multiply to "
                                       + std::to_string(expected));
    }
    std::vector<std::size_t> choice(k, 0);
    for (std::size_t step = 0; step < expected; ++step) {
      Bitset               members(n);
      std::vector<Element> coords(k);
      std::vector<std::size_t> pos(k, 0);
      while (true) {
        for (std::size_t i = 0; i < k; ++i) {
          coords[i] = report.factor_blocks[i][choice[i]].elements()[pos[i]];
        }
        members.set(p.encode(coords));
        bool wrapped = true;
        for (std::size_t i = k; i-- > 0;) {
          if (++pos[i] < report.factor_blocks[i][choice[i]].size()) {
            wrapped = false;
            break;
          }
          pos[i] = 0;
        }
        if (wrapped) {
          break;
        }
      }
      if (!report.blocks.index_of(members)) {
        note(report.products_are_blocks,
             "product " + Block(members).to_string() + " of factor blocks is not a block");
      }
      for (std::size_t i = k; i-- > 0;) {
        if (++choice[i] < report.factor_blocks[i].size()) {
          break;
        }
        choice[i] = 0;
      }
    }
    return report;
  }

  SubalgebraDecomposition decompose_subalgebra(ProductStructure const& p, Bitset const& s) {
    if (!is_subuniverse(p.product(), s)) {
      throw InvalidArgument("subset is not closed under the operations");
    }
    SubalgebraDecomposition out;
    std::size_t const       k = p.arity();
    for (std::size_t i = 0; i < k; ++i) {
      out.parts.emplace_back(p.radices()[i]);
    }
    s.for_each([&](std::size_t x) {
      auto const c = p.decode(static_cast<Element>(x));
      for (std::size_t i = 0; i < k; ++i) {
        out.parts[i].set(c[i]);
      }
    });
    out.is_product = true;
    if (s.none()) {
      return out;
    }
    std::vector<std::vector<Element>> lists;
    for (auto const& part : out.parts) {
      std::vector<Element> l;
      part.for_each([&](std::size_t x) { l.push_back(static_cast<Element>(x)); });
      lists.push_back(std::move(l));
    }
    std::vector<std::size_t> pos(k, 0);
    std::vector<Element>     coords(k);
    while (true) {
      for (std::size_t i = 0; i < k; ++i) {
        coords[i] = lists[i][pos[i]];
      }
      if (!s.test(p.encode(coords))) {
        out.is_product = false;
        out.missing    = coords;
        return out;
      }
      bool wrapped = true;
      for (std::size_t i = k; i-- > 0;) {
        if (++pos[i] < lists[i].size()) {
          wrapped = false;
          break;
        }
        pos[i] = 0;
      }
      if (wrapped) {
        break;
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Decomposition by the join term
  ////////////////////////////////////////////////////////////////////////

  JoinDecomposition decompose_algebra(FiniteAlgebra const& algebra, JoinSpec const& spec) {
    if (!(algebra.signature() == spec.signature)) {
      throw InvalidArgument("algebra signature " + algebra.signature().to_string()
                            + " differs from the join signature " + spec.signature.to_string());
    }
    JoinDecomposition   out;
    std::size_t const   n = algebra.size();
    std::size_t const   k = spec.arity();
    std::vector<Element> args(k);
    for (std::size_t i = 0; i < k; ++i) {
      BinaryRelation eta(n);
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          std::fill(args.begin(), args.end(), b);
          args[i] = a;
          if (eval_term(algebra, spec.d, args) == b) {
            eta.set(a, b);
          }
        }
      }
      if (!eta.is_reflexive() || !eta.is_symmetric() || !eta.is_transitive()) {
        out.failed_check = "eta_" + std::to_string(i) + " is not an equivalence";
        out.etas.push_back(std::move(eta));
        return out;
      }
      if (!is_compatible(algebra, eta)) {
        out.failed_check = "eta_" + std::to_string(i) + " is not compatible";
        out.etas.push_back(std::move(eta));
        return out;
      }
      out.etas.push_back(std::move(eta));
    }
    std::vector<AlgebraMap> projections;
    for (auto const& eta : out.etas) {
      auto q = congruence_quotient(algebra, eta);
      out.quotients.push_back(q.algebra);
      projections.push_back(std::move(q.projection));
    }
    auto const               target = direct_product(out.quotients);
    std::vector<std::size_t> radices;
    for (auto const& q : out.quotients) {
      radices.push_back(q.size());
    }
    std::vector<Element> values(n);
    std::vector<Element> coords(k);
    for (Element a = 0; a < n; ++a) {
      for (std::size_t i = 0; i < k; ++i) {
        coords[i] = projections[i](a);
      }
      values[a] = static_cast<Element>(encode_tuple(coords, radices));
    }
    AlgebraMap natural{algebra, target.algebra, std::move(values)};
    if (!is_bijective(natural)) {
      out.failed_check = "natural map to the product of the quotients is not bijective";
      return out;
    }
    if (!is_homomorphism(natural)) {
      out.failed_check = "natural map to the product of the quotients is not a homomorphism";
      return out;
    }
    out.iso    = std::move(natural);
    out.member = true;
    return out;
  }

  IndependenceReport verify_independence(JoinSpec const&                                       spec,
                                         std::vector<std::pair<std::size_t, FiniteAlgebra>> const& members) {
    IndependenceReport report;
    for (std::size_t m = 0; m < members.size(); ++m) {
      auto const& [tag, algebra] = members[m];
      ++report.checked;
      if (tag >= spec.arity()) {
        report.failures.push_back({m, "tag " + std::to_string(tag) + " names no subvariety"});
        continue;
      }
      if (!(algebra.signature() == spec.signature)) {
        report.failures.push_back({m, "signature differs from the join signature"});
        continue;
      }
      for (auto const& id : spec.subvariety_identities[tag]) {
        if (!holds_identity(algebra, id).holds) {
          report.failures.push_back(
              {m, "fails " + id.to_string() + " of subvariety " + std::to_string(tag)});
          break;
        }
      }
      auto const law = spec.projection_law(tag);
      if (!holds_identity(algebra, law).holds) {
        report.failures.push_back({m, "fails " + law.to_string()});
      }
    }
    return report;
  }

  QuotientProductVerdict verify_quotient_product(ProductStructure const& p, BinaryRelation const& t) {
    auto const dec = decompose_tolerance(p, t);
    if (!dec.exact) {
      throw InvalidArgument("tolerance {" + t.to_string() + "} is not a product of its projections");
    }
    QuotientProductVerdict out;
    for (std::size_t i = 0; i < p.arity(); ++i) {
      out.factors.push_back(quotient(p.factors()[i], dec.parts[i]));
    }
    out.whole      = quotient(p.product(), t);
    out.product    = direct_product(out.factors).algebra;
    out.iso        = find_isomorphism(out.whole, out.product);
    out.isomorphic = out.iso.has_value();
    return out;
  }

}  // namespace tolfac
