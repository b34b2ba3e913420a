#ifndef TOLFAC_VARIETIES_HPP_
#define TOLFAC_VARIETIES_HPP_

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tolfac/algebra.hpp"
#include "tolfac/errors.hpp"
#include "tolfac/joinprod.hpp"
#include "tolfac/lattices.hpp"
#include "tolfac/relations.hpp"

namespace tolfac {

  struct Variety;

  // A term-equivalent variety with translations both ways.
  struct AlterEgo {
    std::shared_ptr<Variety const>                     variety;
    std::function<FiniteAlgebra(FiniteAlgebra const&)> to;
    std::function<FiniteAlgebra(FiniteAlgebra const&)> from;
  };

  struct Variety {
    std::string             name;
    Signature               signature;
    std::vector<Identity>   identities;
    std::optional<JoinSpec> join;
    std::optional<AlterEgo> alter_ego;
  };

  // Symbol names used by the catalog.
  std::string projection_symbol(std::size_t n);  // "e<n>"
  Signature   rot_signature();                   // {join/2, meet/2, g/1}
  Signature   latt_signature();                  // {tjoin/3, tmeet/3}
  Signature   tau_signature(std::size_t n);      // {join, meet, g, e<n>, star/2}

  std::vector<Identity> lattice_identities();

  Variety lat();
  // e<n>(x_1, ..., x_n) = x_i, 1 <= i <= n
  Variety set_projection(std::size_t n, std::size_t i);
  // join of the n projection varieties, d = e<n>
  Variety set_join(std::size_t n);
  Variety rot(std::size_t n);
  Variety latt();
  // Rot(m) with e<n> and star acting as first projections
  Variety rot_lift(std::size_t m, std::size_t n);
  // Set_n with join, meet, g acting as first projections and star as the
  // second projection
  Variety set_lift(std::size_t n);
  // rot_lift(m, n) joined with set_lift(n), d = star
  Variety combined(std::size_t m, std::size_t n);

  // Looks a variety up by name: "Lat", "LatT", "Set" (params n, i), "SetJoin"
  // (n), "Rot" (n), "RotLift" (m, n), "SetLift" (n), "V" (m, n). Throws
  // InvalidArgument on an unknown name or bad parameters.
  Variety builtin(std::string const& name, std::vector<std::size_t> const& params = {});

  struct MembershipVerdict {
    bool                    member = true;
    std::optional<Identity> failing;
    std::vector<Element>    assignment;
    std::string             reason;  // empty when member
  };

  // Checks every identity; join varieties additionally need a successful
  // decomposition by d with each quotient in its subvariety. Throws
  // InvalidArgument on a signature mismatch.
  MembershipVerdict member_of(Variety const& v, FiniteAlgebra const& a);

  // t_join(x, y, z) = x v (y ^ z), t_meet(x, y, z) = x ^ (y v z). Both check
  // membership of their input and throw InvalidArgument otherwise.
  FiniteAlgebra lat_to_latt(FiniteAlgebra const& lattice);
  FiniteAlgebra latt_to_lat(FiniteAlgebra const& algebra);

  // Adds g as a unary operation. Throws InvalidArgument unless g is an
  // automorphism of the lattice with g^n = id.
  FiniteAlgebra make_rotational(FiniteAlgebra const&        lattice,
                                std::vector<Element> const& g,
                                std::size_t                 n);

  // (L, g) for every lattice with at most max_lattice_size elements and
  // every automorphism g with g^n = id.
  std::vector<FiniteAlgebra> rot_corpus(std::size_t n, std::size_t max_lattice_size);

  // ({0..size-1}, e<n>) with e<n> the i-th projection, 1 <= i <= n.
  FiniteAlgebra projection_algebra(std::size_t size, std::size_t n, std::size_t i);

  // Rot member -> tau(n) algebra with e<n> and star first projections.
  FiniteAlgebra lift_rotational(FiniteAlgebra const& a, std::size_t n);
  // algebra over {e<n>} -> tau(n) algebra with join, meet, g first
  // projections and star the second projection.
  FiniteAlgebra lift_projection(FiniteAlgebra const& a);

  enum class Verdict { holds, fails, inconclusive };

  std::string to_string(Verdict v);

  struct PropertyVerdict {
    Verdict     verdict = Verdict::inconclusive;
    std::string detail;
    // the (algebra, tolerance) the verdict rests on, if any
    std::optional<std::size_t>    algebra_index;
    std::optional<BinaryRelation> tolerance;
  };

  // P1: every tolerance factorable. P2: also every quotient in the variety.
  // P3: every tolerance is the image of a congruence of a member. P4: some
  // tolerance is proper. All verdicts refer to the sample only.
  struct PropertyReport {
    std::string     variety;
    std::string     sample;
    std::size_t     algebras   = 0;
    std::size_t     tolerances = 0;
    PropertyVerdict p1, p2, p3, p4;
  };

  // Throws InvalidArgument if a sample member is not in the variety.
  PropertyReport probe_properties(Variety const&                    v,
                                  std::vector<FiniteAlgebra> const& sample,
                                  std::string                       sample_description,
                                  Budget const&                     budget = {});

}  // namespace tolfac

#endif  // TOLFAC_VARIETIES_HPP_
