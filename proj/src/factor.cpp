#include "tolfac/factor.hpp"

#include <array>

namespace tolfac {

  std::string NonFactorableWitness::to_string() const {
    std::string out = symbol + "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (i != 0) {
        out += ",";
      }
      out += tuple[i].to_string();
    }
    out += ") = {";
    for (std::size_t i = 0; i < image.size(); ++i) {
      if (i != 0) {
        out += ",";
      }
      out += std::to_string(image[i]);
    }
    out += "} is contained in";
    for (auto const& c : containers) {
      out += " " + c.to_string();
    }
    return out;
  }

  FactorabilityVerdict is_factorable(FiniteAlgebra const& algebra, BinaryRelation const& tolerance) {
    FactorabilityVerdict verdict{blocks(algebra, tolerance), std::nullopt, {}, std::nullopt};
    auto const&          bs = verdict.blocks;
    std::size_t const    b  = bs.size();

    verdict.block_index.resize(algebra.size());
    for (std::size_t i = 0; i < b; ++i) {
      for (auto x : bs[i].elements()) {
        verdict.block_index[x].push_back(i);
      }
    }

    auto const&                       sig = algebra.signature();
    std::vector<FiniteAlgebra::Table> tables;
    std::vector<std::size_t>          tuple;
    for (std::size_t op = 0; op < sig.size(); ++op) {
      std::size_t const    k   = sig[op].arity;
      std::size_t const    len = table_length(b, k);
      FiniteAlgebra::Table table(len);
      tuple.assign(k, 0);
      for (std::size_t idx = 0; idx < len; ++idx) {
        auto const img = op_image_over_blocks(algebra, bs, op, tuple);
        if (img.containers.empty()) {
          throw VerificationFailure("operation image lies in no block; relation is not a tolerance");
        }
        if (img.containers.size() > 1) {
          NonFactorableWitness w;
          w.symbol = sig[op].name;
          for (auto i : tuple) {
            w.tuple.push_back(bs[i]);
          }
          img.image.for_each([&w](std::size_t x) { w.image.push_back(static_cast<Element>(x)); });
          for (auto i : img.containers) {
            w.containers.push_back(bs[i]);
          }
          verdict.witness = std::move(w);
          return verdict;
        }
        table[idx] = static_cast<Element>(img.containers.front());
        for (std::size_t j = k; j-- > 0;) {
          if (++tuple[j] < b) {
            break;
          }
          tuple[j] = 0;
        }
      }
      tables.push_back(std::move(table));
    }
    verdict.quotient = FiniteAlgebra(b, sig, std::move(tables));
    return verdict;
  }

  FiniteAlgebra quotient(FiniteAlgebra const& algebra, BinaryRelation const& tolerance) {
    auto verdict = is_factorable(algebra, tolerance);
    if (!verdict.factorable()) {
      throw NotFactorable(std::move(*verdict.witness));
    }
    return std::move(*verdict.quotient);
  }

  CoverResult covering_construction(FiniteAlgebra const& algebra, BinaryRelation const& tolerance) {
    auto verdict = is_factorable(algebra, tolerance);
    if (!verdict.factorable()) {
      throw NotFactorable(std::move(*verdict.witness));
    }
    auto const&       bs = verdict.blocks;
    auto const&       q  = *verdict.quotient;
    std::size_t const nq = q.size();

    std::array<FiniteAlgebra, 2> factors{algebra, q};
    auto const                   c = direct_product(factors);

    Bitset d(c.algebra.size());
    for (std::size_t y = 0; y < nq; ++y) {
      for (auto x : bs[y].elements()) {
        d.set(x * nq + y);
      }
    }
    if (!is_subuniverse(c.algebra, d)) {
      throw VerificationFailure("pairs (x, Y) with x in Y do not form a subalgebra");
    }
    auto sub = subalgebra(c.algebra, d);

    std::size_t const                            nd = sub.elements.size();
    std::vector<std::pair<Element, std::size_t>> embedding(nd);
    std::vector<Element>                         first(nd);
    std::vector<Element>                         second(nd);
    for (std::size_t i = 0; i < nd; ++i) {
      Element const x = sub.elements[i] / static_cast<Element>(nq);
      Element const y = sub.elements[i] % static_cast<Element>(nq);
      embedding[i]    = {x, y};
      first[i]        = x;
      second[i]       = y;
    }

    AlgebraMap phi{sub.algebra, algebra, std::move(first)};
    auto       theta = kernel(AlgebraMap{sub.algebra, q, std::move(second)});

    if (!is_congruence(sub.algebra, theta)) {
      throw VerificationFailure("kernel of the second coordinate is not a congruence");
    }
    if (!is_homomorphism(phi)) {
      throw VerificationFailure("first coordinate is not a homomorphism");
    }
    if (!is_surjective(phi)) {
      throw VerificationFailure("first coordinate is not surjective");
    }
    if (!(image_relation(phi, theta) == tolerance)) {
      throw VerificationFailure("image of the congruence differs from the tolerance");
    }
    return CoverResult{sub.algebra, std::move(theta), std::move(phi), std::move(embedding), q};
  }

  AlgebraFactorability is_tolerance_factorable_algebra(FiniteAlgebra const& algebra,
                                                       Budget const&        budget) {
    AlgebraFactorability result;
    for (auto const& t : all_tolerances(algebra, budget).members) {
      ++result.tolerances_checked;
      auto v = is_factorable(algebra, t);
      if (!v.factorable()) {
        result.factorable        = false;
        result.failing_tolerance = t;
        result.witness           = std::move(v.witness);
        return result;
      }
    }
    return result;
  }

  AlgebraStream stream_of(std::vector<FiniteAlgebra> algebras) {
    auto        data = std::make_shared<std::vector<FiniteAlgebra>>(std::move(algebras));
    std::size_t next = 0;
    return [data, next]() mutable -> std::optional<FiniteAlgebra> {
      if (next >= data->size()) {
        return std::nullopt;
      }
      return (*data)[next++];
    };
  }

  std::optional<WitnessHit> find_nonfactorable_witness(AlgebraStream const&       next,
                                                       Budget const&              budget,
                                                       std::optional<std::string> symbol) {
    if (!next) {
      return std::nullopt;
    }
    for (std::size_t index = 0;; ++index) {
      auto algebra = next();
      if (!algebra) {
        return std::nullopt;
      }
      if (symbol) {
        algebra->signature().index_of(*symbol);  // throws on an unknown symbol
      }
      for (auto const& t : all_tolerances(*algebra, budget).members) {
        auto v = is_factorable(*algebra, t);
        if (!v.factorable() && (!symbol || v.witness->symbol == *symbol)) {
          return WitnessHit{index, std::move(*algebra), t, std::move(*v.witness)};
        }
      }
    }
  }

}  // namespace tolfac
