#ifndef TOLFAC_RELATIONS_HPP_
#define TOLFAC_RELATIONS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tolfac/algebra.hpp"
#include "tolfac/bitset.hpp"
#include "tolfac/errors.hpp"

namespace tolfac {

  using ElementPair = std::pair<Element, Element>;

  // n x n boolean matrix stored as packed rows. Ordered lexicographically
  // by the row-major bit string, which is the canonical order everywhere.
  class BinaryRelation {
   public:
    using Word = Bitset::Word;

    BinaryRelation() = default;
    explicit BinaryRelation(std::size_t n);

    static BinaryRelation diagonal(std::size_t n);
    static BinaryRelation total(std::size_t n);

    // Reflexive-symmetric closure of the given pairs.
    static BinaryRelation tolerance_candidate(std::size_t n, std::span<ElementPair const> pairs);

    std::size_t size() const noexcept {
      return _n;
    }

    bool test(Element a, Element b) const noexcept {
      return (_words[a * _wpr + b / 64] >> (b % 64)) & 1U;
    }

    void set(Element a, Element b) noexcept {
      _words[a * _wpr + b / 64] |= Word{1} << (b % 64);
    }

    void reset(Element a, Element b) noexcept {
      _words[a * _wpr + b / 64] &= ~(Word{1} << (b % 64));
    }

    // sets (a, b) and (b, a)
    void set_symmetric(Element a, Element b) noexcept {
      set(a, b);
      set(b, a);
    }

    Bitset row(Element a) const;

    std::size_t count() const noexcept;

    bool is_reflexive() const noexcept;
    bool is_symmetric() const noexcept;
    bool is_transitive() const;
    bool is_subset_of(BinaryRelation const& other) const noexcept;

    // all ordered pairs in row-major order
    std::vector<ElementPair> pairs() const;

    // Unordered off-diagonal pairs a < b, written "01,12" when every element
    // is a single digit and "0-1,1-2" otherwise. Empty string for the
    // diagonal.
    std::string to_string() const;

    BinaryRelation& operator|=(BinaryRelation const& other) noexcept;
    BinaryRelation& operator&=(BinaryRelation const& other) noexcept;

    friend BinaryRelation operator|(BinaryRelation lhs, BinaryRelation const& rhs) {
      lhs |= rhs;
      return lhs;
    }

    friend BinaryRelation operator&(BinaryRelation lhs, BinaryRelation const& rhs) {
      lhs &= rhs;
      return lhs;
    }

    friend bool operator==(BinaryRelation const&, BinaryRelation const&) = default;

    friend bool operator<(BinaryRelation const& lhs, BinaryRelation const& rhs) noexcept {
      if (lhs._n != rhs._n) {
        return lhs._n < rhs._n;
      }
      return Bitset::compare_words(lhs._words, rhs._words) < 0;
    }

    std::size_t hash() const noexcept;

   private:
    std::size_t       _n   = 0;
    std::size_t       _wpr = 0;
    std::vector<Word> _words;
  };

  struct BinaryRelationHash {
    std::size_t operator()(BinaryRelation const& r) const noexcept {
      return r.hash();
    }
  };

  // Relational product: (a, c) iff a R b and b S c for some b.
  BinaryRelation compose(BinaryRelation const& r, BinaryRelation const& s);

  // Compatible with every operation: componentwise images of related tuples
  // are related. No reflexivity or symmetry required.
  bool is_compatible(FiniteAlgebra const& algebra, BinaryRelation const& r);

  bool is_tolerance(FiniteAlgebra const& algebra, BinaryRelation const& r);

  bool is_congruence(FiniteAlgebra const& algebra, BinaryRelation const& r);

  // Smallest tolerance containing `seed`.
  BinaryRelation compatibility_closure(FiniteAlgebra const& algebra, BinaryRelation const& seed);

  BinaryRelation principal_tolerance(FiniteAlgebra const& algebra, Element a, Element b);

  // Requires both arguments to be tolerances.
  BinaryRelation tolerance_join(FiniteAlgebra const&  algebra,
                                BinaryRelation const& s,
                                BinaryRelation const& t);

  // Tolerance lists and their invariants.
  struct ToleranceSet {
    FiniteAlgebra               algebra;
    std::vector<BinaryRelation> members;  // canonical order, no duplicates
  };

  // Universes up to this size are cross-checked against brute force.
  inline constexpr std::size_t brute_force_threshold = 5;

  // Join-closure of the principal tolerances, verified against brute force
  // when the universe has at most brute_force_threshold elements.
  ToleranceSet all_tolerances(FiniteAlgebra const& algebra, Budget const& budget = {});

  // The two routes all_tolerances is built from, exposed for testing.
  ToleranceSet tolerances_by_join_closure(FiniteAlgebra const& algebra, Budget const& budget = {});
  ToleranceSet tolerances_by_brute_force(FiniteAlgebra const& algebra, Budget const& budget = {});

  // Transitive members of all_tolerances.
  std::vector<BinaryRelation> all_congruences(FiniteAlgebra const& algebra,
                                              Budget const&        budget = {});

  // {(phi(x), phi(y)) : (x, y) in theta}; phi must be surjective.
  BinaryRelation image_relation(AlgebraMap const& phi, BinaryRelation const& theta);

  // Relation on the mixed-radix product of the part universes.
  BinaryRelation product_relation(std::span<BinaryRelation const> parts);

  BinaryRelation kernel(AlgebraMap const& map);

  struct PermutabilityVerdict {
    bool permute = true;
    // first non-commuting pair of congruences in canonical order
    std::optional<std::pair<BinaryRelation, BinaryRelation>> witness;
  };

  PermutabilityVerdict congruences_permute(FiniteAlgebra const& algebra,
                                           Budget const&        budget = {});

  // Classes of an equivalence, ordered by least element.
  std::vector<std::vector<Element>> equivalence_classes(BinaryRelation const& theta);

  struct CongruenceQuotient {
    FiniteAlgebra algebra;
    AlgebraMap    projection;
  };

  // Classical quotient; classes numbered by least element.
  CongruenceQuotient congruence_quotient(FiniteAlgebra const& algebra, BinaryRelation const& theta);

}  // namespace tolfac

#endif  // TOLFAC_RELATIONS_HPP_
