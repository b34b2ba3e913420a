// Command-line front end: one subcommand per library operation.

#include <chrono>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tolfac/blocks.hpp"
#include "tolfac/factor.hpp"
#include "tolfac/io.hpp"
#include "tolfac/joinprod.hpp"
#include "tolfac/lattices.hpp"
#include "tolfac/relations.hpp"
#include "tolfac/suite.hpp"
#include "tolfac/varieties.hpp"

#ifndef TOLFAC_FIXTURE_DIR
#define TOLFAC_FIXTURE_DIR "fixtures"
#endif

namespace {

  using namespace tolfac;
  using ojson = nlohmann::ordered_json;

  constexpr int schema_version = 1;

  enum Exit : int { ok = 0, violated = 1, usage = 2, budget_exceeded = 3 };

  struct Outcome {
    int         code = ok;
    std::string verdict;
    ojson       result = ojson::object();
  };

  struct Common {
    std::string out;
    long long   budget = -1;
    bool        timing = false;
    bool        json   = false;
  };

  struct Input {
    std::string path;
    AlgebraFile file;
    std::string digest;
  };

  Input load(std::string const& path) {
    auto text = read_text_file(path);
    Input in{path, {}, fnv1a_hex(text)};
    try {
      in.file = parse_algebra(text);
    } catch (SchemaError const& e) {
      throw SchemaError(path + ": " + e.what());
    }
    return in;
  }

  Budget budget_of(Common const& c) {
    Budget b;
    if (c.budget >= 0) {
      b.max_tolerances = static_cast<std::size_t>(c.budget);
    }
    return b;
  }

  ojson table_json(FiniteAlgebra::Table const& t, std::size_t offset, std::size_t depth, std::size_t n) {
    if (depth == 0) {
      return t[offset];
    }
    std::size_t stride = 1;
    for (std::size_t k = 1; k < depth; ++k) {
      stride *= n;
    }
    ojson out = ojson::array();
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(table_json(t, offset + i * stride, depth - 1, n));
    }
    return out;
  }

  ojson algebra_json(FiniteAlgebra const& a) {
    ojson ops = ojson::object();
    for (std::size_t op = 0; op < a.signature().size(); ++op) {
      ops[a.signature()[op].name] = table_json(a.table(op), 0, a.signature()[op].arity, a.size());
    }
    ojson out;
    out["size"]       = a.size();
    out["operations"] = ops;
    return out;
  }

  ojson blocks_json(BlockSet const& bs) {
    ojson out = ojson::array();
    for (auto const& b : bs.blocks) {
      out.push_back(block_json(b));
    }
    return out;
  }

  ojson relations_json(std::vector<BinaryRelation> const& rs) {
    ojson out = ojson::array();
    for (auto const& r : rs) {
      out.push_back(tolerance_literal(r));
    }
    return out;
  }

  // Human-readable rendering of a report.
  void render(std::ostream& os, ojson const& j, int indent) {
    std::string const pad(static_cast<std::size_t>(indent), ' ');
    for (auto it = j.begin(); it != j.end(); ++it) {
      auto const& v = it.value();
      bool const  nested =
          v.is_object() || (v.is_array() && !v.empty() && (v.front().is_object() || v.dump().size() > 100));
      if (!nested) {
        os << pad << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      } else if (v.is_object()) {
        os << pad << it.key() << ":\n";
        render(os, v, indent + 2);
      } else {
        os << pad << it.key() << ":\n";
        for (auto const& e : v) {
          if (e.is_object()) {
            os << pad << "  -\n";
            render(os, e, indent + 4);
          } else {
            os << pad << "  - " << (e.is_string() ? e.get<std::string>() : e.dump()) << "\n";
          }
        }
      }
    }
  }

  Variety variety_of(std::string const& name, std::vector<std::size_t> const& params) {
    return builtin(name, params);
  }

  ////////////////////////////////////////////////////////////////////
  // Subcommands
  ////////////////////////////////////////////////////////////////////

  Outcome cmd_tolerances(Input const& in, Common const& c) {
    auto const ts = all_tolerances(in.file.algebra, budget_of(c));
    std::vector<BinaryRelation> proper, congruences;
    for (auto const& t : ts.members) {
      (t.is_transitive() ? congruences : proper).push_back(t);
    }
    Outcome o;
    o.verdict               = "computed";
    o.result["count"]       = ts.members.size();
    o.result["tolerances"]  = relations_json(ts.members);
    o.result["congruences"] = relations_json(congruences);
    o.result["proper"]      = relations_json(proper);
    return o;
  }

  std::optional<Outcome> reject_non_tolerance(FiniteAlgebra const& a, BinaryRelation const& t) {
    if (is_tolerance(a, t)) {
      return std::nullopt;
    }
    Outcome o;
    o.code                = usage;  // a precondition of every command taking -t
    o.verdict             = "not a tolerance";
    o.result["tolerance"] = tolerance_literal(t);
    return o;
  }

  Outcome cmd_blocks(Input const& in, std::string const& lit, Common const&) {
    auto const& a = in.file.algebra;
    auto const  t = parse_tolerance(lit, a.size());
    if (auto r = reject_non_tolerance(a, t)) {
      return *r;
    }
    auto const bs = blocks(a, t);
    Outcome    o;
    o.verdict                     = "computed";
    o.result["tolerance"]         = tolerance_literal(t);
    o.result["proper"]            = !t.is_transitive();
    o.result["blocks"]            = blocks_json(bs);
    o.result["blocks_determine"]  = blocks_determine(bs);
    return o;
  }

  Outcome cmd_factorable(Input const& in, std::string const& lit, Common const& c) {
    auto const& a = in.file.algebra;
    Outcome     o;
    if (lit.empty()) {
      auto const r                  = is_tolerance_factorable_algebra(a, budget_of(c));
      o.verdict                     = r.factorable ? "factorable by every tolerance" : "not factorable";
      o.code                        = r.factorable ? ok : violated;
      o.result["tolerances_checked"] = r.tolerances_checked;
      if (!r.factorable) {
        o.result["failing_tolerance"] = tolerance_literal(*r.failing_tolerance);
        o.result["witness"]           = witness_json(*r.witness);
      }
      return o;
    }
    auto const t = parse_tolerance(lit, a.size());
    if (auto r = reject_non_tolerance(a, t)) {
      return *r;
    }
    auto const v          = is_factorable(a, t);
    o.result["tolerance"] = tolerance_literal(t);
    o.result["blocks"]    = blocks_json(v.blocks);
    if (v.factorable()) {
      o.verdict            = "factorable";
      o.result["quotient"] = algebra_json(*v.quotient);
    } else {
      o.verdict           = "not factorable";
      o.code              = violated;
      o.result["witness"] = witness_json(*v.witness);
    }
    return o;
  }

  Outcome cmd_quotient(Input const& in, std::string const& lit, std::string const& write, Common const&) {
    auto const& a = in.file.algebra;
    auto const  t = parse_tolerance(lit, a.size());
    if (auto r = reject_non_tolerance(a, t)) {
      return *r;
    }
    Outcome    o;
    auto const v          = is_factorable(a, t);
    o.result["tolerance"] = tolerance_literal(t);
    o.result["blocks"]    = blocks_json(v.blocks);
    if (!v.factorable()) {
      o.verdict           = "not factorable";
      o.code              = violated;
      o.result["witness"] = witness_json(*v.witness);
      return o;
    }
    o.verdict            = "computed";
    o.result["quotient"] = algebra_json(*v.quotient);
    if (!write.empty()) {
      write_text_file(write, write_algebra({in.file.name + "/T", *v.quotient}));
      o.result["written"] = write;
    }
    return o;
  }

  Outcome cmd_cover(Input const& in, std::string const& lit, Common const&) {
    auto const& a = in.file.algebra;
    auto const  t = parse_tolerance(lit, a.size());
    if (auto r = reject_non_tolerance(a, t)) {
      return *r;
    }
    Outcome o;
    o.result["tolerance"] = tolerance_literal(t);
    try {
      auto const r = covering_construction(a, t);
      ojson      emb = ojson::array();
      for (auto const& [x, y] : r.embedding) {
        emb.push_back({x, y});
      }
      ojson classes = ojson::array();
      for (auto const& cls : equivalence_classes(r.theta)) {
        classes.push_back(cls);
      }
      o.verdict                      = "computed";
      o.result["cover_size"]         = r.cover.size();
      o.result["embedding"]          = emb;
      o.result["theta_classes"]      = classes;
      o.result["phi"]                = r.phi.values;
      o.result["image_equals_tolerance"] = image_relation(r.phi, r.theta) == t;
      o.result["cover"]              = algebra_json(r.cover);
    } catch (NotFactorable const& e) {
      o.verdict           = "not factorable";
      o.code              = violated;
      o.result["witness"] = witness_json(e.witness);
    }
    return o;
  }

  Outcome cmd_decompose_join(Input const& in, Variety const& v) {
    if (!v.join) {
      throw InvalidArgument("variety " + v.name + " is not given as an independent join");
    }
    auto const d = decompose_algebra(in.file.algebra, *v.join);
    Outcome    o;
    o.code             = d.member ? ok : violated;
    o.verdict          = d.member ? "decomposed" : "not a member of the join";
    o.result["variety"] = v.name;
    o.result["etas"]   = relations_json(d.etas);
    if (!d.member) {
      o.result["failed_check"] = d.failed_check;
      return o;
    }
    ojson qs = ojson::array();
    for (auto const& q : d.quotients) {
      qs.push_back(algebra_json(q));
    }
    o.result["quotients"] = qs;
    o.result["iso"]       = d.iso->values;
    return o;
  }

  Outcome cmd_decompose_product(std::vector<Input> const& factors,
                                std::string const&        lit,
                                std::string const&        subset,
                                Common const&             c) {
    std::vector<FiniteAlgebra> algebras;
    for (auto const& f : factors) {
      algebras.push_back(f.file.algebra);
    }
    ProductStructure const p(algebras);
    auto const&            a = p.product();
    Outcome                o;
    o.verdict                 = "decomposed";
    o.result["product_size"]  = a.size();
    if (!subset.empty()) {
      Bitset            s(a.size());
      std::stringstream ss(subset);
      std::string       tok;
      while (std::getline(ss, tok, ',')) {
        auto const x = std::stoul(tok);
        if (x >= a.size()) {
          throw SchemaError("--subalgebra: element " + tok + " out of range");
        }
        s.set(x);
      }
      auto const d = decompose_subalgebra(p, s);
      ojson      parts = ojson::array();
      for (auto const& part : d.parts) {
        parts.push_back(part.to_vector());
      }
      o.result["subalgebra_parts"] = parts;
      o.result["is_product"]       = d.is_product;
      if (!d.is_product) {
        o.code                    = violated;
        o.verdict                 = "subalgebra is not a product";
        o.result["missing_tuple"] = *d.missing;
      }
      return o;
    }
    std::vector<BinaryRelation> ts;
    if (lit.empty()) {
      ts = all_tolerances(a, budget_of(c)).members;
    } else {
      ts.push_back(parse_tolerance(lit, a.size()));
      if (auto r = reject_non_tolerance(a, ts.back())) {
        return *r;
      }
    }
    ojson rows = ojson::array();
    for (auto const& t : ts) {
      auto const dec = decompose_tolerance(p, t);
      ojson      row;
      row["tolerance"] = tolerance_literal(t);
      row["parts"]     = relations_json(dec.parts);
      row["exact"]     = dec.exact;
      if (dec.exact) {
        auto const rep               = decompose_blocks(p, t);
        row["blocks"]                = blocks_json(rep.blocks);
        row["blocks_are_products"]   = rep.blocks_are_products;
        row["block_counts_multiply"] = rep.counts_multiply;
        row["products_are_blocks"]   = rep.products_are_blocks;
        if (!rep.passed()) {
          o.code    = violated;
          o.verdict = "block decomposition failed";
        }
      } else if (o.code == ok) {
        o.code    = violated;
        o.verdict = "some tolerance is not a product";
      }
      rows.push_back(row);
    }
    o.result["tolerances"] = rows;
    return o;
  }

  Outcome cmd_member(Input const& in, Variety const& v) {
    auto const m = member_of(v, in.file.algebra);
    Outcome    o;
    o.code              = m.member ? ok : violated;
    o.verdict           = m.member ? "member" : "not a member";
    o.result["variety"] = v.name;
    if (!m.member) {
      o.result["reason"] = m.reason;
      if (m.failing) {
        o.result["assignment"] = m.assignment;
      }
    }
    return o;
  }

  ojson verdict_json(PropertyVerdict const& p) {
    ojson out;
    out["verdict"] = to_string(p.verdict);
    out["detail"]  = p.detail;
    if (p.algebra_index) {
      out["algebra"] = *p.algebra_index;
    }
    if (p.tolerance) {
      out["tolerance"] = tolerance_literal(*p.tolerance);
    }
    return out;
  }

  Outcome cmd_probe(Variety const& v, std::vector<Input> const& samples, std::size_t lattices, Common const& c) {
    std::vector<FiniteAlgebra> sample;
    std::string                description;
    if (lattices > 0) {
      auto const ls = enumerate_lattices(lattices, std::max(lattices, default_lattice_bound));
      if (v.signature == lattice_signature()) {
        sample = ls;
      } else if (v.signature == latt_signature()) {
        for (auto const& l : ls) {
          sample.push_back(lat_to_latt(l));
        }
      } else if (v.name.rfind("Rot", 0) == 0 && v.signature == rot_signature()) {
        sample = rot_corpus(std::stoul(v.name.substr(3)), lattices);
      } else {
        throw InvalidArgument("--lattices is available for Lat, LatT and Rot only");
      }
      description = "lattices with at most " + std::to_string(lattices) + " elements";
    }
    for (auto const& s : samples) {
      sample.push_back(s.file.algebra);
      description += (description.empty() ? "" : " and ") + s.path;
    }
    if (sample.empty()) {
      throw InvalidArgument("empty sample: give --sample files or --lattices N");
    }
    auto const r = probe_properties(v, sample, description, budget_of(c));
    Outcome    o;
    o.verdict            = "probed over the sample only";
    o.result["variety"]  = r.variety;
    o.result["sample"]   = r.sample;
    o.result["scope"]    = "verdicts hold for the listed sample, not for the whole variety";
    o.result["algebras"] = r.algebras;
    o.result["tolerances"] = r.tolerances;
    o.result["P1_factorable"]        = verdict_json(r.p1);
    o.result["P2_strongly_factorable"] = verdict_json(r.p2);
    o.result["P3_congruence_images"] = verdict_json(r.p3);
    o.result["P4_proper_tolerances"] = verdict_json(r.p4);
    for (auto const* p : {&r.p1, &r.p2, &r.p3}) {
      if (p->verdict == Verdict::fails) {
        o.code = violated;
      }
    }
    return o;
  }

  Outcome cmd_witness_search(std::size_t max_size,
                             std::size_t bound,
                             std::string const& signature,
                             std::string const& symbol,
                             std::string const& freeze,
                             Common const&      c) {
    bool const latt_mode = signature == "latt";
    if (!latt_mode && signature != "lat") {
      throw InvalidArgument("--signature must be latt or lat");
    }
    auto stream = lattice_stream(max_size, bound,
                                 latt_mode ? std::function<FiniteAlgebra(FiniteAlgebra const&)>(lat_to_latt)
                                           : std::function<FiniteAlgebra(FiniteAlgebra const&)>());
    std::optional<std::string> sym;
    if (!symbol.empty()) {
      sym = symbol;
    }
    auto const hit = find_nonfactorable_witness(stream, budget_of(c), sym);
    Outcome    o;
    o.result["signature"] = latt_mode ? "LatT" : "Lat";
    o.result["max_size"]  = max_size;
    if (!hit) {
      o.verdict = "no witness";
      return o;
    }
    o.code                      = violated;
    o.verdict                   = "witness found";
    o.result["lattice_index"]   = hit->algebra_index;
    o.result["lattice_size"]    = hit->algebra.size();
    o.result["tolerance"]       = tolerance_literal(hit->tolerance);
    o.result["blocks"]          = blocks_json(blocks(hit->algebra, hit->tolerance));
    o.result["witness"]         = witness_json(hit->witness);
    o.result["algebra"]         = algebra_json(hit->algebra);
    if (!freeze.empty()) {
      WitnessFixture f{{"LatT witness lattice " + std::to_string(hit->algebra_index), hit->algebra},
                       hit->tolerance, hit->witness};
      write_text_file(freeze, write_witness_fixture(f));
      o.result["frozen"] = freeze;
    }
    return o;
  }

  Outcome cmd_paper_verify(suite::Config const& config, std::vector<int> const& only, bool quiet) {
    Outcome o;
    ojson   rows = ojson::array();
    auto    each = [&](suite::CriterionResult const& r) {
      if (!quiet) {
        std::cout << suite::format_line(r) << std::endl;
      }
      ojson row;
      row["id"]            = r.id;
      row["title"]         = r.title;
      row["passed"]        = r.passed;
      row["detail"]        = r.detail;
      row["limit_seconds"] = r.limit_seconds;
      rows.push_back(row);
      if (!r.passed) {
        o.code = violated;
      }
    };
    if (only.empty()) {
      suite::run_all(config, each);
    } else {
      for (int id : only) {
        each(suite::run_criterion(id, config));
      }
    }
    std::size_t passed = 0;
    for (auto const& r : rows) {
      passed += r["passed"].get<bool>();
    }
    o.verdict             = o.code == ok ? "all criteria pass" : "some criteria fail";
    o.result["passed"]    = passed;
    o.result["total"]     = rows.size();
    o.result["criteria"]  = rows;
    return o;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tolerances, blocks and quotients of finite algebras"};
  app.require_subcommand(1);

  Common      common;
  std::string file, tolerance, write, variety, subset, signature = "latt", symbol, freeze;
  std::vector<std::size_t> params;
  std::vector<std::string> factor_files, sample_files;
  std::size_t              lattices = 0, max_size = 8, bound = 0;
  suite::Config            config;
  config.fixture_dir = TOLFAC_FIXTURE_DIR;
  config             = suite::config_from_environment(config);
  std::vector<int> only;
  bool             all = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", common.out, "Also write the machine-readable report here");
    sub->add_option("--budget", common.budget, "Maximum number of tolerances per algebra");
    sub->add_flag("--timing", common.timing, "Include wall-clock timing in the report");
    sub->add_flag("--json", common.json, "Print the JSON report instead of text");
  };
  auto add_file = [&](CLI::App* sub) { sub->add_option("file", file, "Algebra file")->required(); };
  auto add_tol  = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("-t,--tolerance", tolerance, "Pairs like 01,12 (or delta, nabla)");
    if (required) {
      opt->required();
    }
  };
  auto add_variety = [&](CLI::App* sub) {
    sub->add_option("-V,--variety", variety, "Lat, LatT, Set, SetJoin, Rot, RotLift, SetLift, V")
        ->required();
    sub->add_option("-p,--param", params, "Variety parameters in order");
  };

  auto* s_tol = app.add_subcommand("tolerances", "List every tolerance");
  add_file(s_tol);
  add_common(s_tol);
  auto* s_blocks = app.add_subcommand("blocks", "Blocks of a tolerance");
  add_file(s_blocks);
  add_tol(s_blocks, true);
  add_common(s_blocks);
  auto* s_fact = app.add_subcommand("factorable", "Decide factorability, by one or all tolerances");
  add_file(s_fact);
  add_tol(s_fact, false);
  s_fact->add_flag("--all", all, "Check every tolerance (default without --tolerance)");
  add_common(s_fact);
  auto* s_quot = app.add_subcommand("quotient", "Quotient algebra modulo a tolerance");
  add_file(s_quot);
  add_tol(s_quot, true);
  s_quot->add_option("--write", write, "Write the quotient as an algebra file");
  add_common(s_quot);
  auto* s_cover = app.add_subcommand("cover", "Algebra D, congruence and projection with image T");
  add_file(s_cover);
  add_tol(s_cover, true);
  add_common(s_cover);
  auto* s_dec = app.add_subcommand("decompose", "Join decomposition, or tolerances of a product");
  s_dec->add_option("file", file, "Algebra file (join mode)");
  s_dec->add_option("-V,--variety", variety, "Join variety (join mode)");
  s_dec->add_option("-p,--param", params, "Variety parameters");
  s_dec->add_option("-f,--factor", factor_files, "Factor algebra files (product mode)");
  add_tol(s_dec, false);
  s_dec->add_option("--subalgebra", subset, "Comma-separated product elements");
  add_common(s_dec);
  auto* s_mem = app.add_subcommand("member", "Variety membership");
  add_file(s_mem);
  add_variety(s_mem);
  add_common(s_mem);
  auto* s_probe = app.add_subcommand("probe", "Probe factorability properties over a sample");
  add_variety(s_probe);
  s_probe->add_option("-s,--sample", sample_files, "Sample algebra files");
  s_probe->add_option("--lattices", lattices, "Sample every lattice up to this size");
  add_common(s_probe);
  auto* s_ws = app.add_subcommand("witness-search", "First non-factorable (lattice, tolerance)");
  s_ws->add_option("--max-size", max_size, "Largest lattice size")->capture_default_str();
  s_ws->add_option("--bound", bound, "Enumeration bound (default: max(8, max-size))");
  s_ws->add_option("--signature", signature, "latt or lat")->capture_default_str();
  s_ws->add_option("--symbol", symbol, "Only witnesses for this symbol");
  s_ws->add_option("--freeze", freeze, "Write the witness as a fixture file");
  add_common(s_ws);
  auto* s_pv = app.add_subcommand("paper-verify", "Run every acceptance criterion");
  s_pv->add_option("--fixtures", config.fixture_dir, "Fixture directory")->capture_default_str();
  s_pv->add_option("--search-max-size", config.search_max_size, "Witness search size")
      ->capture_default_str();
  s_pv->add_option("--search-seconds", config.search_seconds, "Witness search time budget")
      ->capture_default_str();
  s_pv->add_option("--only", only, "Run only these criteria");
  add_common(s_pv);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  std::vector<Input> inputs;
  ojson              report;
  report["schema_version"] = schema_version;
  Outcome      outcome;
  auto const   t0 = std::chrono::steady_clock::now();
  std::string  error;
  auto* sub        = app.get_subcommands().front();
  report["command"] = sub->get_name();
  try {
    config.budget = budget_of(common);
    auto main_input = [&]() -> Input const& {
      inputs.push_back(load(file));
      return inputs.back();
    };
    if (sub == s_tol) {
      outcome = cmd_tolerances(main_input(), common);
    } else if (sub == s_blocks) {
      outcome = cmd_blocks(main_input(), tolerance, common);
    } else if (sub == s_fact) {
      outcome = cmd_factorable(main_input(), all ? "" : tolerance, common);
    } else if (sub == s_quot) {
      outcome = cmd_quotient(main_input(), tolerance, write, common);
    } else if (sub == s_cover) {
      outcome = cmd_cover(main_input(), tolerance, common);
    } else if (sub == s_dec) {
      if (!factor_files.empty()) {
        for (auto const& f : factor_files) {
          inputs.push_back(load(f));
        }
        outcome = cmd_decompose_product(inputs, tolerance, subset, common);
      } else if (!file.empty() && !variety.empty()) {
        auto const v = variety_of(variety, params);
        outcome      = cmd_decompose_join(main_input(), v);
      } else {
        throw InvalidArgument("decompose needs FILE --variety NAME, or --factor files");
      }
    } else if (sub == s_mem) {
      auto const v = variety_of(variety, params);
      outcome      = cmd_member(main_input(), v);
    } else if (sub == s_probe) {
      auto const v = variety_of(variety, params);
      for (auto const& f : sample_files) {
        inputs.push_back(load(f));
      }
      outcome = cmd_probe(v, inputs, lattices, common);
    } else if (sub == s_ws) {
      outcome = cmd_witness_search(max_size, bound == 0 ? std::max(max_size, default_lattice_bound) : bound,
                                   signature, symbol, freeze, common);
    } else {
      outcome = cmd_paper_verify(config, only, common.json);
    }
  } catch (BudgetExceeded const& e) {
    outcome.code    = budget_exceeded;
    outcome.verdict = "budget exceeded";
    error           = e.what();
  } catch (InvalidArgument const& e) {
    outcome.code    = usage;
    outcome.verdict = "invalid input";
    error           = e.what();
  } catch (Error const& e) {
    outcome.code    = violated;
    outcome.verdict = "verification failure";
    error           = e.what();
  }

  ojson in_json = ojson::array();
  for (auto const& in : inputs) {
    ojson row;
    row["path"]  = in.path;
    row["name"]  = in.file.name;
    row["size"]  = in.file.algebra.size();
    row["fnv1a"] = in.digest;
    in_json.push_back(row);
  }
  report["inputs"]    = in_json;
  report["verdict"]   = outcome.verdict;
  report["exit_code"] = outcome.code;
  if (!error.empty()) {
    report["error"] = error;
  }
  report["result"] = outcome.result;
  if (common.timing) {
    report["timing"]["seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }

  if (common.json) {
    std::cout << report.dump(2) << "\n";
  } else if (report["command"] != "paper-verify" || !error.empty()) {
    std::ostringstream os;
    render(os, report, 0);
    (error.empty() ? std::cout : std::cerr) << os.str();
  } else {
    std::cout << "verdict: " << outcome.verdict << " (" << outcome.result["passed"].dump() << "/"
              << outcome.result["total"].dump() << ")\n";
  }
  if (!common.out.empty()) {
    try {
      write_text_file(common.out, report.dump(2) + "\n");
    } catch (Error const& e) {
      std::cerr << e.what() << "\n";
      return usage;
    }
  }
  return outcome.code;
}
