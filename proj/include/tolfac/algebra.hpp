#ifndef TOLFAC_ALGEBRA_HPP_
#define TOLFAC_ALGEBRA_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tolfac/bitset.hpp"
#include "tolfac/errors.hpp"

namespace tolfac {

  // Elements of a finite algebra are always 0, ..., n - 1.
  using Element = std::uint32_t;

  inline constexpr Element UNDEFINED = static_cast<Element>(-1);

  struct OpSymbol {
    std::string name;
    std::size_t arity;

    friend bool operator==(OpSymbol const&, OpSymbol const&) = default;
  };

  // Ordered list of operation symbols with unique names.
  class Signature {
   public:
    Signature() = default;
    explicit Signature(std::vector<OpSymbol> symbols);

    std::size_t size() const noexcept {
      return _symbols.size();
    }

    OpSymbol const& operator[](std::size_t i) const {
      return _symbols[i];
    }

    auto begin() const noexcept {
      return _symbols.begin();
    }

    auto end() const noexcept {
      return _symbols.end();
    }

    std::optional<std::size_t> find(std::string_view name) const noexcept;

    // Throws InvalidArgument if `name` is not a symbol of the signature.
    std::size_t index_of(std::string_view name) const;

    std::string to_string() const;

    friend bool operator==(Signature const&, Signature const&) = default;

   private:
    std::vector<OpSymbol> _symbols;
  };

  // Index of the tuple (a_1, ..., a_k) in a table over an n-element
  // universe: row-major, first argument most significant.
  std::size_t tuple_index(std::span<Element const> args, std::size_t n) noexcept;

  // n^k, throwing InvalidArgument if the result does not fit a table.
  std::size_t table_length(std::size_t n, std::size_t arity);

  // A finite algebra on {0, ..., n-1}. Immutable; copies share the tables.
  class FiniteAlgebra {
   public:
    using Table = std::vector<Element>;

    FiniteAlgebra() = default;

    // Validates that every table has n^arity entries, each below n.
    FiniteAlgebra(std::size_t size, Signature signature, std::vector<Table> tables);

    // Builds tables by evaluating `f(op, args)` on every tuple.
    static FiniteAlgebra
    from_function(std::size_t size,
                  Signature   signature,
                  std::function<Element(std::size_t, std::span<Element const>)> const& f);

    std::size_t size() const noexcept {
      return _data ? _data->size : 0;
    }

    Signature const& signature() const noexcept {
      return _data ? _data->signature : empty_signature();
    }

    Table const& table(std::size_t op) const {
      return _data->tables[op];
    }

    Table const& table(std::string_view symbol) const {
      return _data->tables[signature().index_of(symbol)];
    }

    Element apply(std::size_t op, std::span<Element const> args) const noexcept {
      return _data->tables[op][tuple_index(args, _data->size)];
    }

    Element apply(std::string_view symbol, std::span<Element const> args) const;

    friend bool operator==(FiniteAlgebra const& lhs, FiniteAlgebra const& rhs);

   private:
    struct Data {
      std::size_t        size;
      Signature          signature;
      std::vector<Table> tables;
    };

    static Signature const& empty_signature();

    std::shared_ptr<Data const> _data;
  };

  // Operation-symbol tree over variables x0, x1, ...
  class Term {
   public:
    static Term var(std::size_t index);
    static Term app(std::string symbol, std::vector<Term> args = {});

    bool is_var() const noexcept {
      return _symbol.empty();
    }

    std::size_t var_index() const noexcept {
      return _var;
    }

    std::string const& symbol() const noexcept {
      return _symbol;
    }

    std::vector<Term> const& args() const noexcept {
      return _args;
    }

    // One more than the largest variable index occurring (0 if none).
    std::size_t num_vars() const noexcept;

    std::string to_string() const;

    friend bool operator==(Term const&, Term const&) = default;

   private:
    Term() = default;

    std::size_t       _var = 0;
    std::string       _symbol;
    std::vector<Term> _args;
  };

  struct Identity {
    Term        lhs;
    Term        rhs;
    std::size_t nvars;

    // nvars is inferred from the variables that occur.
    Identity(Term l, Term r);
    Identity(Term l, Term r, std::size_t n);

    std::string to_string() const;
  };

  // Map between universes of two algebras; homomorphism-ness is a property
  // checked by is_homomorphism, not an invariant of the type.
  struct AlgebraMap {
    FiniteAlgebra        domain;
    FiniteAlgebra        codomain;
    std::vector<Element> values;

    Element operator()(Element x) const {
      return values[x];
    }
  };

  Element eval_term(FiniteAlgebra const&     algebra,
                    Term const&              term,
                    std::span<Element const> assignment);

  struct IdentityVerdict {
    bool holds = true;
    // first failing assignment in lexicographic order, empty if holds
    std::vector<Element> counterexample;
  };

  // Exhaustive check over all |A|^nvars assignments.
  IdentityVerdict holds_identity(FiniteAlgebra const& algebra, Identity const& id);

  struct DirectProduct {
    FiniteAlgebra           algebra;
    std::vector<AlgebraMap> projections;
  };

  // Universe encoded mixed-radix, first factor most significant.
  DirectProduct direct_product(std::span<FiniteAlgebra const> factors);

  // Mixed-radix helpers matching direct_product's encoding.
  std::size_t              encode_tuple(std::span<Element const>   digits,
                                        std::span<std::size_t const> radices);
  std::vector<Element>     decode_tuple(std::size_t                  index,
                                        std::span<std::size_t const> radices);

  bool is_homomorphism(AlgebraMap const& map);
  bool is_surjective(AlgebraMap const& map);
  bool is_bijective(AlgebraMap const& map);

  // Backtracking search in element order with invariant pruning and
  // propagation. Deterministic.
  std::optional<AlgebraMap> find_isomorphism(FiniteAlgebra const& a,
                                             FiniteAlgebra const& b);

  // All automorphisms, each as the vector of images, in lexicographic order.
  std::vector<std::vector<Element>> automorphisms(FiniteAlgebra const& a);

  // Coordinates the operation depends on, ascending.
  std::vector<std::size_t> essential_coordinates(FiniteAlgebra const& algebra,
                                                 std::string_view     symbol);

  // Smallest subuniverse containing `seed`.
  Bitset subuniverse_generate(FiniteAlgebra const& algebra, Bitset const& seed);

  bool is_subuniverse(FiniteAlgebra const& algebra, Bitset const& subset);

  struct Subalgebra {
    FiniteAlgebra algebra;
    // elements[i] is the element of the parent that i represents
    std::vector<Element> elements;
  };

  // Restriction to a closed subset; element order is inherited. Throws
  // InvalidArgument if the subset is empty or not closed.
  Subalgebra subalgebra(FiniteAlgebra const& algebra, Bitset const& subset);

  // Keeps the listed symbols, in the given order.
  FiniteAlgebra reduct(FiniteAlgebra const& algebra, std::span<std::string const> symbols);

  // Expansion by new operations computed as term functions of `algebra`.
  FiniteAlgebra term_expansion(FiniteAlgebra const&     algebra,
                               Signature const&         target,
                               std::span<Term const>    definitions);

  Bitset full_set(std::size_t n);

}  // namespace tolfac

#endif  // TOLFAC_ALGEBRA_HPP_
