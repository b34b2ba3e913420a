#ifndef TOLFAC_LATTICES_HPP_
#define TOLFAC_LATTICES_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tolfac/algebra.hpp"
#include "tolfac/factor.hpp"
#include "tolfac/relations.hpp"

namespace tolfac {

  // {join/2, meet/2}
  Signature lattice_signature();

  // Lattice operations of a partial order given as its <= matrix. Throws
  // InvalidArgument if some pair lacks a join or a meet.
  FiniteAlgebra lattice_from_order(BinaryRelation const& leq);

  // a <= b iff join(a, b) = b; nullopt unless the algebra has the lattice
  // signature and that relation is a partial order.
  std::optional<BinaryRelation> lattice_order(FiniteAlgebra const& lattice);

  // Strict upper triangle of the order matrix after canonical relabelling,
  // as a '0'/'1' string. Equal for isomorphic orders only.
  std::string canonical_order_code(BinaryRelation const& leq);

  // canonical[i] = element placed at position i. Positions form a linear
  // extension, so the bottom comes first and the top last.
  std::vector<Element> canonical_labelling(BinaryRelation const& leq);

  inline constexpr std::size_t default_lattice_bound = 8;

  // All lattices with at most max_size elements up to isomorphism, ordered by
  // size and then canonical code; each labelled canonically. Built by adding
  // a new coatom to every lattice one size smaller. Throws BudgetExceeded if
  // max_size > bound.
  std::vector<FiniteAlgebra> enumerate_lattices(std::size_t max_size,
                                                std::size_t bound = default_lattice_bound);

  // One <= matrix per isomorphism class of lattices with exactly `size`
  // elements, found by filtering every order on a fixed linear extension and
  // deduplicating by the minimum matrix over all n! relabellings. Oracle for
  // enumerate_lattices; practical up to size 7.
  std::vector<BinaryRelation> brute_force_lattice_orders(std::size_t size);

  // Streams enumerate_lattices(max_size, bound), converted by `convert`.
  AlgebraStream lattice_stream(std::size_t                                           max_size,
                               std::size_t                                           bound,
                               std::function<FiniteAlgebra(FiniteAlgebra const&)> convert = {});

}  // namespace tolfac

#endif  // TOLFAC_LATTICES_HPP_
