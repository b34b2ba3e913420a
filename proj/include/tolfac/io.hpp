#ifndef TOLFAC_IO_HPP_
#define TOLFAC_IO_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "tolfac/algebra.hpp"
#include "tolfac/errors.hpp"
#include "tolfac/factor.hpp"
#include "tolfac/relations.hpp"

namespace tolfac {

  // Malformed file or literal; the message names the offending field.
  class SchemaError : public InvalidArgument {
   public:
    using InvalidArgument::InvalidArgument;
  };

  struct AlgebraFile {
    std::string   name;
    FiniteAlgebra algebra;
  };

  // {"name", "size", "operations": [{"symbol", "arity", "table"}]} with the
  // table nested arity deep, first argument outermost.
  AlgebraFile    algebra_from_json(nlohmann::json const& j, std::string const& where = "");
  nlohmann::json algebra_to_json(AlgebraFile const& file);

  AlgebraFile parse_algebra(std::string_view text);
  AlgebraFile read_algebra_file(std::string const& path);

  // Canonical text: two-space indent, one table row per line for arity >= 2.
  std::string write_algebra(AlgebraFile const& file);
  void        write_text_file(std::string const& path, std::string const& text);
  std::string read_text_file(std::string const& path);

  // "01,12", "0-1,1-2", "delta" or "nabla"; reflexive and symmetric closure
  // of the listed pairs.
  BinaryRelation parse_tolerance(std::string_view literal, std::size_t n);
  // Inverse of parse_tolerance for reflexive symmetric relations.
  std::string tolerance_literal(BinaryRelation const& r);

  std::string fnv1a_hex(std::string_view bytes);

  nlohmann::ordered_json block_json(Block const& b);
  nlohmann::ordered_json witness_json(NonFactorableWitness const& w);

  // Frozen search result: the algebra, the tolerance and its witness.
  struct WitnessFixture {
    AlgebraFile          algebra;
    BinaryRelation       tolerance;
    NonFactorableWitness witness;
  };

  WitnessFixture read_witness_fixture(std::string const& path);
  std::string    write_witness_fixture(WitnessFixture const& fixture);

}  // namespace tolfac

#endif  // TOLFAC_IO_HPP_
