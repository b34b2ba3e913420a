#include "tolfac/algebra.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace tolfac {

  ////////////////////////////////////////////////////////////////////////
  // Signature
  ////////////////////////////////////////////////////////////////////////

  Signature::Signature(std::vector<OpSymbol> symbols) : _symbols(std::move(symbols)) {
    std::set<std::string> seen;
    for (auto const& s : _symbols) {
      if (s.name.empty()) {
        throw InvalidArgument("operation symbol with empty name");
      }
      if (!seen.insert(s.name).second) {
        throw InvalidArgument("duplicate operation symbol '" + s.name + "'");
      }
    }
  }

  std::optional<std::size_t> Signature::find(std::string_view name) const noexcept {
    for (std::size_t i = 0; i < _symbols.size(); ++i) {
      if (_symbols[i].name == name) {
        return i;
      }
    }
    return std::nullopt;
  }

  std::size_t Signature::index_of(std::string_view name) const {
    auto i = find(name);
    if (!i) {
      throw InvalidArgument("unknown operation symbol '" + std::string(name) + "'");
    }
    return *i;
  }

  std::string Signature::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < _symbols.size(); ++i) {
      if (i != 0) {
        out += ", ";
      }
      out += _symbols[i].name + "/" + std::to_string(_symbols[i].arity);
    }
    return out + "}";
  }

  ////////////////////////////////////////////////////////////////////////
  // FiniteAlgebra
  ////////////////////////////////////////////////////////////////////////

  std::size_t tuple_index(std::span<Element const> args, std::size_t n) noexcept {
    std::size_t idx = 0;
    for (auto a : args) {
      idx = idx * n + a;
    }
    return idx;
  }

  std::size_t table_length(std::size_t n, std::size_t arity) {
    std::size_t len = 1;
    for (std::size_t i = 0; i < arity; ++i) {
      if (n != 0 && len > std::numeric_limits<std::uint32_t>::max() / n) {
        throw InvalidArgument("operation table of arity " + std::to_string(arity)
                              + " over " + std::to_string(n) + " elements is too large");
      }
      len *= n;
    }
    return len;
  }

  FiniteAlgebra::FiniteAlgebra(std::size_t size, Signature signature, std::vector<Table> tables) {
    if (size == 0) {
      throw InvalidArgument("an algebra must have at least one element");
    }
    if (size >= UNDEFINED) {
      throw InvalidArgument("universe too large");
    }
    if (tables.size() != signature.size()) {
      throw InvalidArgument("expected " + std::to_string(signature.size())
                            + " operation tables, got " + std::to_string(tables.size()));
    }
    for (std::size_t op = 0; op < tables.size(); ++op) {
      auto const expected = table_length(size, signature[op].arity);
      if (tables[op].size() != expected) {
        throw InvalidArgument("table of '" + signature[op].name + "' has "
                              + std::to_string(tables[op].size()) + " entries, expected "
                              + std::to_string(expected));
      }
      for (auto v : tables[op]) {
        if (v >= size) {
          throw InvalidArgument("table of '" + signature[op].name + "' has entry "
                                + std::to_string(v) + " outside universe of size "
                                + std::to_string(size));
        }
      }
    }
    _data = std::make_shared<Data const>(Data{size, std::move(signature), std::move(tables)});
  }

  FiniteAlgebra FiniteAlgebra::from_function(
      std::size_t                                                         size,
      Signature                                                           signature,
      std::function<Element(std::size_t, std::span<Element const>)> const& f) {
    std::vector<Table> tables;
    tables.reserve(signature.size());
    for (std::size_t op = 0; op < signature.size(); ++op) {
      std::size_t const    k   = signature[op].arity;
      std::size_t const    len = table_length(size, k);
      Table                t(len);
      std::vector<Element> args(k, 0);
      for (std::size_t idx = 0; idx < len; ++idx) {
        t[idx] = f(op, args);
        for (std::size_t j = k; j-- > 0;) {
          if (++args[j] < size) {
            break;
          }
          args[j] = 0;
        }
      }
      tables.push_back(std::move(t));
    }
    return FiniteAlgebra(size, std::move(signature), std::move(tables));
  }

  Element FiniteAlgebra::apply(std::string_view symbol, std::span<Element const> args) const {
    auto const op = signature().index_of(symbol);
    if (args.size() != signature()[op].arity) {
      throw InvalidArgument("symbol '" + std::string(symbol) + "' has arity "
                            + std::to_string(signature()[op].arity) + ", got "
                            + std::to_string(args.size()) + " arguments");
    }
    for (auto a : args) {
      if (a >= size()) {
        throw InvalidArgument("argument " + std::to_string(a) + " out of range");
      }
    }
    return apply(op, args);
  }

  bool operator==(FiniteAlgebra const& lhs, FiniteAlgebra const& rhs) {
    if (lhs._data == rhs._data) {
      return true;
    }
    if (!lhs._data || !rhs._data) {
      return false;
    }
    return lhs._data->size == rhs._data->size && lhs._data->signature == rhs._data->signature
           && lhs._data->tables == rhs._data->tables;
  }

  Signature const& FiniteAlgebra::empty_signature() {
    static Signature const empty;
    return empty;
  }

  ////////////////////////////////////////////////////////////////////////
  // Terms and identities
  ////////////////////////////////////////////////////////////////////////

  Term Term::var(std::size_t index) {
    Term t;
    t._var = index;
    return t;
  }

  Term Term::app(std::string symbol, std::vector<Term> args) {
    if (symbol.empty()) {
      throw InvalidArgument("term application with empty symbol");
    }
    Term t;
    t._symbol = std::move(symbol);
    t._args   = std::move(args);
    return t;
  }

  std::size_t Term::num_vars() const noexcept {
    if (is_var()) {
      return _var + 1;
    }
    std::size_t m = 0;
    for (auto const& a : _args) {
      m = std::max(m, a.num_vars());
    }
    return m;
  }

  std::string Term::to_string() const {
    if (is_var()) {
      return "x" + std::to_string(_var);
    }
    std::string out = _symbol;
    if (!_args.empty()) {
      out += "(";
      for (std::size_t i = 0; i < _args.size(); ++i) {
        if (i != 0) {
          out += ",";
        }
        out += _args[i].to_string();
      }
      out += ")";
    }
    return out;
  }

  Identity::Identity(Term l, Term r)
      : lhs(std::move(l)), rhs(std::move(r)), nvars(std::max(lhs.num_vars(), rhs.num_vars())) {}

  Identity::Identity(Term l, Term r, std::size_t n)
      : lhs(std::move(l)), rhs(std::move(r)), nvars(n) {
    if (std::max(lhs.num_vars(), rhs.num_vars()) > nvars) {
      throw InvalidArgument("identity " + to_string() + " uses a variable index >= "
                            + std::to_string(nvars));
    }
  }

  std::string Identity::to_string() const {
    return lhs.to_string() + " = " + rhs.to_string();
  }

  namespace {

    // Postfix program for a term resolved against one signature.
    struct CompiledTerm {
      struct Step {
        bool        is_var;
        std::size_t index;  // variable index or operation index
        std::size_t arity;
      };
      std::vector<Step> steps;
      std::size_t       max_depth = 0;

      Element run(FiniteAlgebra const&     algebra,
                  std::span<Element const> assignment,
                  std::vector<Element>&    stack) const {
        stack.clear();
        for (auto const& s : steps) {
          if (s.is_var) {
            stack.push_back(assignment[s.index]);
          } else {
            auto const base = stack.size() - s.arity;
            auto const v = algebra.apply(s.index, std::span<Element const>(stack).subspan(base));
            stack.resize(base);
            stack.push_back(v);
          }
        }
        return stack.back();
      }
    };

    void compile_into(Signature const& sig, Term const& t, CompiledTerm& out) {
      if (t.is_var()) {
        out.steps.push_back({true, t.var_index(), 0});
        return;
      }
      auto const op = sig.index_of(t.symbol());
      if (sig[op].arity != t.args().size()) {
        throw InvalidArgument("symbol '" + t.symbol() + "' has arity "
                              + std::to_string(sig[op].arity) + " but is applied to "
                              + std::to_string(t.args().size()) + " arguments");
      }
      for (auto const& a : t.args()) {
        compile_into(sig, a, out);
      }
      out.steps.push_back({false, op, t.args().size()});
    }

    CompiledTerm compile(Signature const& sig, Term const& t) {
      CompiledTerm c;
      compile_into(sig, t, c);
      return c;
    }

  }  // namespace

  Element eval_term(FiniteAlgebra const&     algebra,
                    Term const&              term,
                    std::span<Element const> assignment) {
    if (term.num_vars() > assignment.size()) {
      throw InvalidArgument("assignment of length " + std::to_string(assignment.size())
                            + " is too short for term " + term.to_string());
    }
    for (auto a : assignment) {
      if (a >= algebra.size()) {
        throw InvalidArgument("assigned value " + std::to_string(a) + " out of range");
      }
    }
    std::vector<Element> stack;
    return compile(algebra.signature(), term).run(algebra, assignment, stack);
  }

  IdentityVerdict holds_identity(FiniteAlgebra const& algebra, Identity const& id) {
    auto const           lhs = compile(algebra.signature(), id.lhs);
    auto const           rhs = compile(algebra.signature(), id.rhs);
    std::size_t const    n   = algebra.size();
    std::vector<Element> assignment(id.nvars, 0);
    std::vector<Element> stack;
    while (true) {
      if (lhs.run(algebra, assignment, stack) != rhs.run(algebra, assignment, stack)) {
        return {false, assignment};
      }
      std::size_t j = id.nvars;
      while (j > 0) {
        --j;
        if (++assignment[j] < n) {
          break;
        }
        assignment[j] = 0;
        if (j == 0) {
          return {};
        }
      }
      if (id.nvars == 0) {
        return {};
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Products and maps
  ////////////////////////////////////////////////////////////////////////

  std::size_t encode_tuple(std::span<Element const> digits, std::span<std::size_t const> radices) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
      idx = idx * radices[i] + digits[i];
    }
    return idx;
  }

  std::vector<Element> decode_tuple(std::size_t index, std::span<std::size_t const> radices) {
    std::vector<Element> digits(radices.size());
    for (std::size_t i = radices.size(); i-- > 0;) {
      digits[i] = static_cast<Element>(index % radices[i]);
      index /= radices[i];
    }
    return digits;
  }

  DirectProduct direct_product(std::span<FiniteAlgebra const> factors) {
    if (factors.empty()) {
      throw InvalidArgument("direct product of an empty list");
    }
    auto const& sig = factors[0].signature();
    std::vector<std::size_t> radices;
    std::size_t              total = 1;
    for (auto const& f : factors) {
      if (!(f.signature() == sig)) {
        throw InvalidArgument("factors have different signatures: " + sig.to_string()
                              + " vs " + f.signature().to_string());
      }
      radices.push_back(f.size());
      if (total > UNDEFINED / f.size()) {
        throw InvalidArgument("direct product too large");
      }
      total *= f.size();
    }
    std::vector<std::vector<Element>> coords(total);
    for (std::size_t x = 0; x < total; ++x) {
      coords[x] = decode_tuple(x, radices);
    }
    std::vector<Element> digits(factors.size());
    std::vector<Element> fargs;
    auto prod = FiniteAlgebra::from_function(
        total, sig, [&](std::size_t op, std::span<Element const> args) {
          fargs.resize(args.size());
          for (std::size_t i = 0; i < factors.size(); ++i) {
            for (std::size_t j = 0; j < args.size(); ++j) {
              fargs[j] = coords[args[j]][i];
            }
            digits[i] = factors[i].apply(op, fargs);
          }
          return static_cast<Element>(encode_tuple(digits, radices));
        });
    DirectProduct result{prod, {}};
    for (std::size_t i = 0; i < factors.size(); ++i) {
      std::vector<Element> values(total);
      for (std::size_t x = 0; x < total; ++x) {
        values[x] = coords[x][i];
      }
      result.projections.push_back(AlgebraMap{prod, factors[i], std::move(values)});
    }
    return result;
  }

  bool is_homomorphism(AlgebraMap const& map) {
    auto const& a = map.domain;
    auto const& b = map.codomain;
    if (!(a.signature() == b.signature()) || map.values.size() != a.size()) {
      return false;
    }
    for (auto v : map.values) {
      if (v >= b.size()) {
        return false;
      }
    }
    std::vector<Element> args, images;
    for (std::size_t op = 0; op < a.signature().size(); ++op) {
      std::size_t const k   = a.signature()[op].arity;
      auto const&       tab = a.table(op);
      args.assign(k, 0);
      images.assign(k, 0);
      for (std::size_t idx = 0; idx < tab.size(); ++idx) {
        for (std::size_t j = 0; j < k; ++j) {
          images[j] = map.values[args[j]];
        }
        if (map.values[tab[idx]] != b.apply(op, images)) {
          return false;
        }
        for (std::size_t j = k; j-- > 0;) {
          if (++args[j] < a.size()) {
            break;
          }
          args[j] = 0;
        }
      }
    }
    return true;
  }

  bool is_surjective(AlgebraMap const& map) {
    Bitset hit(map.codomain.size());
    for (auto v : map.values) {
      if (v < hit.size()) {
        hit.set(v);
      }
    }
    return hit.count() == map.codomain.size();
  }

  bool is_bijective(AlgebraMap const& map) {
    return map.domain.size() == map.codomain.size() && is_surjective(map);
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism search
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Isomorphism-invariant fingerprint of each element: per operation the
    // number of table entries equal to it, whether it is idempotent for the
    // operation, whether it equals a constant, and (unary) its orbit length.
    std::vector<std::vector<std::size_t>> element_invariants(FiniteAlgebra const& a) {
      std::size_t const                     n = a.size();
      std::vector<std::vector<std::size_t>> inv(n);
      std::vector<Element>                  diag;
      for (std::size_t op = 0; op < a.signature().size(); ++op) {
        std::size_t const        k = a.signature()[op].arity;
        std::vector<std::size_t> indeg(n, 0);
        for (auto v : a.table(op)) {
          ++indeg[v];
        }
        for (Element x = 0; x < n; ++x) {
          inv[x].push_back(indeg[x]);
          if (k == 0) {
            inv[x].push_back(a.table(op)[0] == x);
            continue;
          }
          diag.assign(k, x);
          inv[x].push_back(a.apply(op, diag) == x);
          if (k == 1) {
            std::vector<bool> seen(n, false);
            Element           y   = x;
            std::size_t       len = 0;
            while (!seen[y]) {
              seen[y] = true;
              y       = a.table(op)[y];
              ++len;
            }
            inv[x].push_back(len);
          }
        }
      }
      return inv;
    }

    class IsoSearch {
     public:
      IsoSearch(FiniteAlgebra const& a, FiniteAlgebra const& b)
          : _a(a), _b(b), _inv_a(element_invariants(a)), _inv_b(element_invariants(b)) {}

      // Calls `found(map)` for each isomorphism in lexicographic order; stops
      // when it returns false.
      template <typename F>
      void run(F&& found) {
        if (_a.size() != _b.size() || !(_a.signature() == _b.signature())) {
          return;
        }
        std::multiset<std::vector<std::size_t>> ia(_inv_a.begin(), _inv_a.end());
        std::multiset<std::vector<std::size_t>> ib(_inv_b.begin(), _inv_b.end());
        if (ia != ib) {
          return;
        }
        State s{std::vector<Element>(_a.size(), UNDEFINED),
                std::vector<Element>(_b.size(), UNDEFINED),
                {}};
        for (std::size_t op = 0; op < _a.signature().size(); ++op) {
          if (_a.signature()[op].arity == 0) {
            if (!assign(s, _a.table(op)[0], _b.table(op)[0])) {
              return;
            }
          }
        }
        _stop = false;
        search(s, found);
      }

     private:
      struct State {
        std::vector<Element> fwd;
        std::vector<Element> bwd;
        std::vector<Element> assigned;
      };

      template <typename F>
      void search(State const& s, F& found) {
        if (_stop) {
          return;
        }
        Element x = 0;
        while (x < _a.size() && s.fwd[x] != UNDEFINED) {
          ++x;
        }
        if (x == _a.size()) {
          if (!found(AlgebraMap{_a, _b, s.fwd})) {
            _stop = true;
          }
          return;
        }
        for (Element y = 0; y < _b.size() && !_stop; ++y) {
          if (s.bwd[y] != UNDEFINED || _inv_a[x] != _inv_b[y]) {
            continue;
          }
          State next = s;
          if (assign(next, x, y)) {
            search(next, found);
          }
        }
      }

      // Assigns x -> y and propagates images forced by the operations.
      bool assign(State& s, Element x, Element y) {
        std::vector<Element> queue;
        auto try_set = [&](Element u, Element v) {
          if (s.fwd[u] != UNDEFINED) {
            return s.fwd[u] == v;
          }
          if (s.bwd[v] != UNDEFINED || _inv_a[u] != _inv_b[v]) {
            return false;
          }
          s.fwd[u] = v;
          s.bwd[v] = u;
          s.assigned.push_back(u);
          queue.push_back(u);
          return true;
        };
        if (!try_set(x, y)) {
          return false;
        }
        std::vector<std::size_t> pos;
        std::vector<Element>     args, images;
        while (!queue.empty()) {
          Element const u = queue.back();
          queue.pop_back();
          for (std::size_t op = 0; op < _a.signature().size(); ++op) {
            std::size_t const k = _a.signature()[op].arity;
            if (k == 0) {
              continue;
            }
            // all tuples over the currently assigned elements that contain u
            std::vector<Element> const dom = s.assigned;
            std::size_t const          m   = dom.size();
            pos.assign(k, 0);
            args.resize(k);
            images.resize(k);
            while (true) {
              bool has_u = false;
              for (std::size_t j = 0; j < k; ++j) {
                args[j]   = dom[pos[j]];
                images[j] = s.fwd[args[j]];
                has_u     = has_u || args[j] == u;
              }
              if (has_u && !try_set(_a.apply(op, args), _b.apply(op, images))) {
                return false;
              }
              bool wrapped = true;
              for (std::size_t j = k; j-- > 0;) {
                if (++pos[j] < m) {
                  wrapped = false;
                  break;
                }
                pos[j] = 0;
              }
              if (wrapped) {
                break;
              }
            }
          }
        }
        return true;
      }

      FiniteAlgebra const&                  _a;
      FiniteAlgebra const&                  _b;
      std::vector<std::vector<std::size_t>> _inv_a;
      std::vector<std::vector<std::size_t>> _inv_b;
      bool                                  _stop = false;
    };

  }  // namespace

  std::optional<AlgebraMap> find_isomorphism(FiniteAlgebra const& a, FiniteAlgebra const& b) {
    std::optional<AlgebraMap> result;
    IsoSearch(a, b).run([&result](AlgebraMap m) {
      result = std::move(m);
      return false;
    });
    return result;
  }

  std::vector<std::vector<Element>> automorphisms(FiniteAlgebra const& a) {
    std::vector<std::vector<Element>> result;
    IsoSearch(a, a).run([&result](AlgebraMap m) {
      result.push_back(std::move(m.values));
      return true;
    });
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Dependence and subuniverses
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::size_t> essential_coordinates(FiniteAlgebra const& algebra,
                                                 std::string_view     symbol) {
    auto const        op  = algebra.signature().index_of(symbol);
    std::size_t const k   = algebra.signature()[op].arity;
    std::size_t const n   = algebra.size();
    auto const&       tab = algebra.table(op);
    std::vector<std::size_t> result;
    for (std::size_t i = 0; i < k; ++i) {
      // stride of coordinate i in the row-major table
      std::size_t stride = 1;
      for (std::size_t j = i + 1; j < k; ++j) {
        stride *= n;
      }
      bool depends = false;
      for (std::size_t idx = 0; idx < tab.size() && !depends; ++idx) {
        std::size_t const digit = (idx / stride) % n;
        std::size_t const base  = idx - digit * stride;
        for (std::size_t v = digit + 1; v < n; ++v) {
          if (tab[base + v * stride] != tab[idx]) {
            depends = true;
            break;
          }
        }
      }
      if (depends) {
        result.push_back(i);
      }
    }
    return result;
  }

  Bitset subuniverse_generate(FiniteAlgebra const& algebra, Bitset const& seed) {
    std::size_t const n = algebra.size();
    if (seed.size() != n) {
      throw InvalidArgument("seed set has size " + std::to_string(seed.size())
                            + ", expected " + std::to_string(n));
    }
    Bitset               result(n);
    std::vector<Element> queue;
    std::vector<Element> done;
    auto add = [&](Element x) {
      if (!result.test(x)) {
        result.set(x);
        queue.push_back(x);
      }
    };
    seed.for_each([&](std::size_t x) { add(static_cast<Element>(x)); });
    for (std::size_t op = 0; op < algebra.signature().size(); ++op) {
      if (algebra.signature()[op].arity == 0) {
        add(algebra.table(op)[0]);
      }
    }
    std::vector<std::size_t> pos;
    std::vector<Element>     args;
    while (!queue.empty()) {
      Element const u = queue.back();
      queue.pop_back();
      done.push_back(u);
      std::size_t const m = done.size();
      for (std::size_t op = 0; op < algebra.signature().size(); ++op) {
        std::size_t const k = algebra.signature()[op].arity;
        if (k == 0) {
          continue;
        }
        // tuples over `done` with u in at least one slot
        pos.assign(k, 0);
        args.resize(k);
        while (true) {
          bool has_u = false;
          for (std::size_t j = 0; j < k; ++j) {
            args[j] = done[pos[j]];
            has_u   = has_u || pos[j] == m - 1;
          }
          if (has_u) {
            add(algebra.apply(op, args));
          }
          bool wrapped = true;
          for (std::size_t j = k; j-- > 0;) {
            if (++pos[j] < m) {
              wrapped = false;
              break;
            }
            pos[j] = 0;
          }
          if (wrapped) {
            break;
          }
        }
      }
    }
    return result;
  }

  bool is_subuniverse(FiniteAlgebra const& algebra, Bitset const& subset) {
    return subuniverse_generate(algebra, subset) == subset;
  }

  Subalgebra subalgebra(FiniteAlgebra const& algebra, Bitset const& subset) {
    if (subset.none()) {
      throw InvalidArgument("subalgebra on the empty set");
    }
    if (!is_subuniverse(algebra, subset)) {
      throw InvalidArgument("subset is not closed under the operations");
    }
    std::vector<Element> elements;
    std::vector<Element> index(algebra.size(), UNDEFINED);
    subset.for_each([&](std::size_t x) {
      index[x] = static_cast<Element>(elements.size());
      elements.push_back(static_cast<Element>(x));
    });
    std::vector<Element> pargs;
    auto sub = FiniteAlgebra::from_function(
        elements.size(), algebra.signature(), [&](std::size_t op, std::span<Element const> args) {
          pargs.resize(args.size());
          for (std::size_t j = 0; j < args.size(); ++j) {
            pargs[j] = elements[args[j]];
          }
          return index[algebra.apply(op, pargs)];
        });
    return Subalgebra{std::move(sub), std::move(elements)};
  }

  FiniteAlgebra reduct(FiniteAlgebra const& algebra, std::span<std::string const> symbols) {
    std::vector<OpSymbol>             ops;
    std::vector<FiniteAlgebra::Table> tables;
    for (auto const& s : symbols) {
      auto const op = algebra.signature().index_of(s);
      ops.push_back(algebra.signature()[op]);
      tables.push_back(algebra.table(op));
    }
    return FiniteAlgebra(algebra.size(), Signature(std::move(ops)), std::move(tables));
  }

  FiniteAlgebra term_expansion(FiniteAlgebra const&  algebra,
                               Signature const&      target,
                               std::span<Term const> definitions) {
    if (definitions.size() != target.size()) {
      throw InvalidArgument("need one defining term per target symbol");
    }
    std::vector<CompiledTerm> programs;
    for (std::size_t op = 0; op < target.size(); ++op) {
      if (definitions[op].num_vars() > target[op].arity) {
        throw InvalidArgument("definition of '" + target[op].name + "' uses more than "
                              + std::to_string(target[op].arity) + " variables");
      }
      programs.push_back(compile(algebra.signature(), definitions[op]));
    }
    std::vector<Element> stack;
    return FiniteAlgebra::from_function(
        algebra.size(), target, [&](std::size_t op, std::span<Element const> args) {
          return programs[op].run(algebra, args, stack);
        });
  }

  Bitset full_set(std::size_t n) {
    Bitset b(n);
    b.set_all();
    return b;
  }

}  // namespace tolfac
