#include "tolfac/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace tolfac {

  using nlohmann::json;

  namespace {

    std::string field(std::string const& where, std::string const& name) {
      return where.empty() ? name : where + "." + name;
    }

    json const& require_field(json const& obj, std::string const& where, char const* name) {
      if (!obj.is_object()) {
        throw SchemaError((where.empty() ? std::string("document") : where) + ": expected an object");
      }
      auto it = obj.find(name);
      if (it == obj.end()) {
        throw SchemaError(field(where, name) + ": missing field");
      }
      return *it;
    }

    std::size_t read_count(json const& j, std::string const& where) {
      if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
        throw SchemaError(where + ": expected a nonnegative integer, got " + j.dump());
      }
      return j.get<std::size_t>();
    }

    void read_table(json const&          j,
                    std::size_t          depth,
                    std::size_t          size,
                    std::string const&   where,
                    FiniteAlgebra::Table& out) {
      if (depth == 0) {
        std::size_t const v = read_count(j, where);
        if (v >= size) {
          throw SchemaError(where + ": entry " + std::to_string(v) + " out of range for size "
                            + std::to_string(size));
        }
        out.push_back(static_cast<Element>(v));
        return;
      }
      if (!j.is_array()) {
        throw SchemaError(where + ": expected an array nested " + std::to_string(depth)
                          + " more level(s)");
      }
      if (j.size() != size) {
        throw SchemaError(where + ": expected " + std::to_string(size) + " entries, got "
                          + std::to_string(j.size()));
      }
      for (std::size_t i = 0; i < size; ++i) {
        read_table(j[i], depth - 1, size, where + "[" + std::to_string(i) + "]", out);
      }
    }

    // Writes the sub-table starting at `offset` covering `depth` levels.
    void write_inline(std::ostringstream&         os,
                      FiniteAlgebra::Table const& t,
                      std::size_t                 offset,
                      std::size_t                 depth,
                      std::size_t                 size) {
      if (depth == 0) {
        os << t[offset];
        return;
      }
      std::size_t stride = 1;
      for (std::size_t k = 1; k < depth; ++k) {
        stride *= size;
      }
      os << '[';
      for (std::size_t i = 0; i < size; ++i) {
        if (i != 0) {
          os << ", ";
        }
        write_inline(os, t, offset + i * stride, depth - 1, size);
      }
      os << ']';
    }

    std::string indent_lines(std::string const& text, std::string const& pad) {
      std::string out;
      std::size_t start = 0;
      bool        first = true;
      while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) {
          end = text.size();
        }
        if (!first) {
          out += pad;
        }
        out += text.substr(start, end - start);
        if (end < text.size()) {
          out += '\n';
        }
        first = false;
        start = end + 1;
      }
      return out;
    }

    std::vector<Element> element_list(json const& j, std::string const& where) {
      if (!j.is_array()) {
        throw SchemaError(where + ": expected an array");
      }
      std::vector<Element> out;
      for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(static_cast<Element>(read_count(j[i], where + "[" + std::to_string(i) + "]")));
      }
      return out;
    }

  }  // namespace

  AlgebraFile algebra_from_json(json const& j, std::string const& where) {
    AlgebraFile out;
    auto const& name = require_field(j, where, "name");
    if (!name.is_string()) {
      throw SchemaError(field(where, "name") + ": expected a string");
    }
    out.name               = name.get<std::string>();
    std::size_t const size = read_count(require_field(j, where, "size"), field(where, "size"));
    if (size == 0) {
      throw SchemaError(field(where, "size") + ": must be positive");
    }
    auto const& ops = require_field(j, where, "operations");
    if (!ops.is_array()) {
      throw SchemaError(field(where, "operations") + ": expected an array");
    }
    std::vector<OpSymbol>             symbols;
    std::vector<FiniteAlgebra::Table> tables;
    for (std::size_t k = 0; k < ops.size(); ++k) {
      std::string const here   = field(where, "operations[" + std::to_string(k) + "]");
      auto const&       symbol = require_field(ops[k], here, "symbol");
      if (!symbol.is_string() || symbol.get<std::string>().empty()) {
        throw SchemaError(here + ".symbol: expected a nonempty string");
      }
      std::size_t const arity = read_count(require_field(ops[k], here, "arity"), here + ".arity");
      FiniteAlgebra::Table table;
      table.reserve(table_length(size, arity));
      read_table(require_field(ops[k], here, "table"), arity, size, here + ".table", table);
      symbols.push_back({symbol.get<std::string>(), arity});
      tables.push_back(std::move(table));
    }
    try {
      out.algebra = FiniteAlgebra(size, Signature(std::move(symbols)), std::move(tables));
    } catch (InvalidArgument const& e) {
      throw SchemaError(field(where, "operations") + ": " + e.what());
    }
    return out;
  }

  json algebra_to_json(AlgebraFile const& file) {
    return json::parse(write_algebra(file));
  }

  AlgebraFile parse_algebra(std::string_view text) {
    json j;
    try {
      j = json::parse(text.begin(), text.end());
    } catch (json::parse_error const& e) {
      throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
    return algebra_from_json(j);
  }

  AlgebraFile read_algebra_file(std::string const& path) {
    try {
      return parse_algebra(read_text_file(path));
    } catch (SchemaError const& e) {
      throw SchemaError(path + ": " + e.what());
    }
  }

  std::string write_algebra(AlgebraFile const& file) {
    auto const&        a = file.algebra;
    std::size_t const  n = a.size();
    std::ostringstream os;
    os << "{\n";
    os << "  \"name\": " << json(file.name).dump() << ",\n";
    os << "  \"size\": " << n << ",\n";
    os << "  \"operations\": [";
    auto const& sig = a.signature();
    for (std::size_t op = 0; op < sig.size(); ++op) {
      os << (op == 0 ? "\n" : ",\n");
      os << "    {\n";
      os << "      \"symbol\": " << json(sig[op].name).dump() << ",\n";
      os << "      \"arity\": " << sig[op].arity << ",\n";
      os << "      \"table\": ";
      auto const&       t = a.table(op);
      std::size_t const k = sig[op].arity;
      if (k < 2) {
        write_inline(os, t, 0, k, n);
      } else {
        std::size_t const stride = t.size() / n;
        os << "[\n";
        for (std::size_t i = 0; i < n; ++i) {
          os << "        ";
          write_inline(os, t, i * stride, k - 1, n);
          os << (i + 1 < n ? ",\n" : "\n");
        }
        os << "      ]";
      }
      os << "\n    }";
    }
    os << (sig.size() == 0 ? "]\n" : "\n  ]\n");
    os << "}\n";
    return os.str();
  }

  void write_text_file(std::string const& path, std::string const& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw InvalidArgument("cannot open " + path + " for writing");
    }
    out << text;
    if (!out) {
      throw InvalidArgument("failed writing " + path);
    }
  }

  std::string read_text_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw SchemaError("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  BinaryRelation parse_tolerance(std::string_view literal, std::size_t n) {
    std::string s;
    for (char c : literal) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        s += c;
      }
    }
    if (s == "delta" || s.empty()) {
      return BinaryRelation::diagonal(n);
    }
    if (s == "nabla") {
      return BinaryRelation::total(n);
    }
    auto number = [&](std::string const& tok, std::string const& whole) -> Element {
      if (tok.empty() || tok.size() > 9
          || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw SchemaError("tolerance literal: bad pair '" + whole + "'");
      }
      auto const v = static_cast<std::size_t>(std::stoul(tok));
      if (v >= n) {
        throw SchemaError("tolerance literal: element " + tok + " out of range for size "
                          + std::to_string(n));
      }
      return static_cast<Element>(v);
    };
    std::vector<ElementPair> pairs;
    std::size_t              start = 0;
    while (start <= s.size()) {
      std::size_t end = s.find(',', start);
      if (end == std::string::npos) {
        end = s.size();
      }
      std::string const tok  = s.substr(start, end - start);
      auto const        dash = tok.find('-');
      if (dash != std::string::npos) {
        pairs.emplace_back(number(tok.substr(0, dash), tok), number(tok.substr(dash + 1), tok));
      } else if (tok.size() == 2) {
        pairs.emplace_back(number(tok.substr(0, 1), tok), number(tok.substr(1, 1), tok));
      } else {
        throw SchemaError("tolerance literal: bad pair '" + tok
                          + "' (use two digits like 01 or a dash like 10-11)");
      }
      start = end + 1;
    }
    return BinaryRelation::tolerance_candidate(n, pairs);
  }

  std::string tolerance_literal(BinaryRelation const& r) {
    if (r == BinaryRelation::diagonal(r.size())) {
      return "delta";
    }
    return r.to_string();
  }

  std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }

  nlohmann::ordered_json block_json(Block const& b) {
    return nlohmann::ordered_json(b.elements());
  }

  nlohmann::ordered_json witness_json(NonFactorableWitness const& w) {
    auto tuple = nlohmann::ordered_json::array(), containers = nlohmann::ordered_json::array();
    for (auto const& b : w.tuple) {
      tuple.push_back(block_json(b));
    }
    for (auto const& b : w.containers) {
      containers.push_back(block_json(b));
    }
    nlohmann::ordered_json out;
    out["symbol"]     = w.symbol;
    out["tuple"]      = tuple;
    out["image"]      = w.image;
    out["containers"] = containers;
    return out;
  }

  WitnessFixture read_witness_fixture(std::string const& path) {
    json j;
    try {
      j = json::parse(read_text_file(path));
    } catch (json::parse_error const& e) {
      throw SchemaError(path + ": malformed JSON: " + e.what());
    }
    try {
      WitnessFixture out;
      out.algebra         = algebra_from_json(require_field(j, "", "algebra"), "algebra");
      auto const& tol     = require_field(j, "", "tolerance");
      if (!tol.is_string()) {
        throw SchemaError("tolerance: expected a string literal");
      }
      std::size_t const n = out.algebra.algebra.size();
      out.tolerance       = parse_tolerance(tol.get<std::string>(), n);
      auto const& w       = require_field(j, "", "witness");
      auto const& sym     = require_field(w, "witness", "symbol");
      if (!sym.is_string()) {
        throw SchemaError("witness.symbol: expected a string");
      }
      out.witness.symbol = sym.get<std::string>();
      auto const& tuple  = require_field(w, "witness", "tuple");
      if (!tuple.is_array()) {
        throw SchemaError("witness.tuple: expected an array");
      }
      for (std::size_t i = 0; i < tuple.size(); ++i) {
        out.witness.tuple.emplace_back(n, element_list(tuple[i], "witness.tuple[" + std::to_string(i) + "]"));
      }
      out.witness.image  = element_list(require_field(w, "witness", "image"), "witness.image");
      auto const& cont   = require_field(w, "witness", "containers");
      if (!cont.is_array()) {
        throw SchemaError("witness.containers: expected an array");
      }
      for (std::size_t i = 0; i < cont.size(); ++i) {
        out.witness.containers.emplace_back(
            n, element_list(cont[i], "witness.containers[" + std::to_string(i) + "]"));
      }
      return out;
    } catch (InvalidArgument const& e) {
      throw SchemaError(path + ": " + e.what());
    }
  }

  std::string write_witness_fixture(WitnessFixture const& f) {
    auto list = [](std::vector<Element> const& xs) { return json(xs).dump(); };
    std::ostringstream os;
    os << "{\n";
    os << "  \"schema_version\": 1,\n";
    std::string algebra = write_algebra(f.algebra);
    algebra.pop_back();  // trailing newline
    os << "  \"algebra\": " << indent_lines(algebra, "  ");
    os << ",\n";
    os << "  \"tolerance\": " << json(tolerance_literal(f.tolerance)).dump() << ",\n";
    os << "  \"witness\": {\n";
    os << "    \"symbol\": " << json(f.witness.symbol).dump() << ",\n";
    os << "    \"tuple\": [";
    for (std::size_t i = 0; i < f.witness.tuple.size(); ++i) {
      os << (i ? ", " : "") << list(f.witness.tuple[i].elements());
    }
    os << "],\n";
    os << "    \"image\": " << list(f.witness.image) << ",\n";
    os << "    \"containers\": [";
    for (std::size_t i = 0; i < f.witness.containers.size(); ++i) {
      os << (i ? ", " : "") << list(f.witness.containers[i].elements());
    }
    os << "]\n";
    os << "  }\n";
    os << "}\n";
    return os.str();
  }

}  // namespace tolfac
