#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "spx/blocks.hpp"
#include "spx/brauer.hpp"
#include "spx/errors.hpp"
#include "spx/hooks.hpp"
#include "spx/partition.hpp"
#include "spx/perm_group.hpp"
#include "spx/permutation.hpp"
#include "spx/specht.hpp"
#include "spx/tableau.hpp"

namespace spx::cli {

using Record = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kInvalid = 1, kResource = 2 };

namespace detail {

inline Record strings(const std::vector<Permutation>& gs) {
  Record a = Record::array();
  for (const auto& g : gs) a.push_back(to_string(g));
  return a;
}

inline Record strings(const std::vector<Partition>& ps) {
  Record a = Record::array();
  for (const auto& p : ps) a.push_back(to_string(p));
  return a;
}

inline std::string scalar_text(const Record& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

// One "key: value" line per leaf; arrays of scalars on one line, nested
// records with dotted keys.
inline void flatten(const Record& node, const std::string& prefix, std::ostream& out) {
  if (node.is_object()) {
    for (const auto& [k, v] : node.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  if (node.is_array()) {
    const bool scalars = std::all_of(node.begin(), node.end(), [](const Record& v) { return v.is_primitive(); });
    if (scalars) {
      out << prefix << ":";
      for (const auto& v : node) out << ' ' << scalar_text(v);
      out << '\n';
    } else {
      for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], prefix + "[" + std::to_string(i) + "]", out);
    }
    return;
  }
  out << prefix << ": " << scalar_text(node) << '\n';
}

}  // namespace detail

/// Prints a record as one JSON line (structured) or as key: value lines.
inline void emit(const Record& r, bool structured, std::ostream& out) {
  if (structured)
    out << r.dump() << '\n';
  else
    detail::flatten(r, "", out);
}

struct Caps {
  std::size_t max_group_order = kDefaultGroupCap;
  std::size_t max_dim = kDefaultMaxDim;
};

inline std::uint32_t checked_prime(int p) {
  require_prime(p);
  require(p < 65536, "p must be below 65536");
  return static_cast<std::uint32_t>(p);
}

// ---------------------------------------------------------------------------
// Subcommand bodies. Each returns the record to print.
// ---------------------------------------------------------------------------

inline Record cmd_core(const Partition& lambda, int p) {
  const auto label = p_core_and_weight(lambda, p);
  const auto quotient = p_quotient(lambda, p);
  Record r;
  r["command"] = "core";
  r["lambda"] = to_string(lambda);
  r["p"] = p;
  r["core"] = to_string(label.core);
  r["weight"] = label.weight;
  r["defect_exponent"] = label.defect_exponent;
  r["quotient"] = detail::strings(quotient);
  return r;
}

inline Record cmd_dim(const Partition& lambda) {
  const HookData hooks(lambda);
  Record r;
  r["command"] = "dim";
  r["lambda"] = to_string(lambda);
  r["n"] = lambda.n();
  r["dim"] = hook_dimension(lambda);
  Record rows = Record::array();
  for (const auto& row : hooks.table()) {
    std::string line;
    for (int h : row) line += (line.empty() ? "" : ",") + std::to_string(h);
    rows.push_back(line);
  }
  r["hook_lengths"] = rows;
  return r;
}

inline Record cmd_straighten(const Tableau& u, int p, const Caps& caps) {
  const std::uint32_t q = checked_prime(p);
  const Tableau bar = row_straighten(u);
  const SpechtBasis basis(u.shape(), caps.max_dim);
  const PrimeField ring(q);
  const FpVector coords(q, basis.polytabloid_coordinates(u, ring));
  Record r;
  r["command"] = "straighten";
  r["tableau"] = to_string(u);
  r["shape"] = to_string(u.shape());
  r["p"] = p;
  r["column_standard"] = is_column_standard(u);
  r["row_straightened"] = to_string(bar);
  Record leq = Record::array();
  for (int i = 1; i <= bar.n(); ++i) leq.push_back(to_string(shape_leq(bar, i)));
  r["shape_leq"] = leq;
  r["expansion"] = format_specht_vector(coords, basis);
  Record terms = Record::array();
  const Fp f(q);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i]) {
      Record t;
      t["tableau"] = to_string(basis.tableau(i));
      t["coefficient"] = f.signed_rep(coords[i]);
      terms.push_back(t);
    }
  r["terms"] = terms;
  return r;
}

inline Record cmd_hgroup(const Partition& lambda) {
  const Tableau t = greatest_tableau(lambda);
  Record r;
  r["command"] = "hgroup";
  r["lambda"] = to_string(lambda);
  r["tableau"] = to_string(t);
  r["generators"] = detail::strings(h_group(t).generators());
  r["order"] = h_group_order(t);
  return r;
}

inline Record cmd_vertex_cert(const Partition& lambda, int p, const Caps& caps) {
  const auto c = vertex_certificate(lambda, checked_prime(p), caps.max_dim, caps.max_group_order);
  Record r;
  r["command"] = "vertex-cert";
  r["lambda"] = to_string(c.lambda);
  r["p"] = p;
  r["h_generators"] = detail::strings(c.h_generators);
  r["sylow_generators"] = detail::strings(c.sylow_generators);
  r["sylow_order"] = c.sylow_order;
  r["specht_dim"] = c.specht_dim;
  r["quotient_dim"] = c.quotient_dim;
  r["e_t_nonzero"] = c.e_t_nonzero;
  return r;
}

/// "(1,2)(3,4);(5,6)": generators separated by ';'. Blank means trivial.
inline std::vector<Permutation> parse_generator_list(const std::string& text, int degree) {
  std::vector<Permutation> gens;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    const auto piece = spx::detail::trim(std::string_view(text).substr(start, end - start));
    if (!piece.empty()) gens.push_back(parse_cycles(piece, degree));
    start = end + 1;
  }
  return gens;
}

inline Record cmd_brauer(const Partition& lambda, int p, const std::string& q_text, const Caps& caps) {
  const std::uint32_t pp = checked_prime(p);
  const int n = lambda.n();
  const PermGroup q(n, parse_generator_list(q_text, n), caps.max_group_order);
  require_p_group(q, pp);
  const SpechtModule s = specht_module(lambda, pp, q.generators(), caps.max_dim);
  const BrauerQuotient bq = brauer_quotient(s.rep, q);
  const FpVector et = s.greatest_polytabloid();
  const bool fixed = bq.fixed().contains(et);
  Record r;
  r["command"] = "brauer";
  r["lambda"] = to_string(lambda);
  r["p"] = p;
  r["q_generators"] = detail::strings(q.generators());
  r["q_order"] = q.order();
  r["specht_dim"] = s.rep.dim();
  r["fixed_dim"] = bq.fixed().dim();
  r["radical_dim"] = bq.radical().dim();
  r["quotient_dim"] = bq.dim();
  r["e_t_fixed"] = fixed;
  r["e_t_image"] = !fixed ? "not-fixed" : (brauer_image_nonzero(bq, et) ? "nonzero" : "zero");
  return r;
}

inline Record block_record(const BlockReport& b) {
  Record r;
  r["core"] = to_string(b.label.core);
  r["weight"] = b.label.weight;
  r["defect_exponent"] = b.b;
  r["members"] = detail::strings(b.partitions);
  r["heights"] = b.heights;
  r["all_heights_zero"] = b.all_heights_zero;
  r["witness"] = b.witness ? Record(to_string(*b.witness)) : Record(nullptr);
  r["witness_height"] = b.witness_height;
  r["height_zero_iff_weight_below_p"] = b.all_heights_zero == (b.label.weight < b.label.p);
  return r;
}

inline Record cmd_block(int n, int p, const std::optional<Partition>& core) {
  require_prime(p);
  require(n >= 0, "n must be nonnegative");
  Record r;
  r["command"] = "block";
  r["n"] = n;
  r["p"] = p;
  r["a"] = nu_p_factorial(static_cast<std::uint64_t>(n), p);
  Record blocks = Record::array();
  const auto cores = core ? std::vector<Partition>{*core} : block_cores(n, p);
  for (const auto& c : cores) blocks.push_back(block_record(block_report(n, p, c)));
  r["blocks"] = blocks;
  return r;
}

inline Record cmd_initial(const Partition& core, int w, int p, const std::optional<int>& rr, const Caps& caps) {
  require_prime(p);
  require(w >= 0, "w must be nonnegative");
  const auto d = verify_initial_dimension(core, w, p);
  Record r;
  r["command"] = "initial";
  r["core"] = to_string(core);
  r["w"] = w;
  r["p"] = p;
  r["initial"] = to_string(d.initial);
  r["a"] = d.a;
  r["b"] = d.b;
  r["initial_exponent"] = d.initial_exponent;
  r["equality"] = d.equality;
  r["minimality"] = d.minimality;
  Record table = Record::array();
  for (const auto& [mu, e] : d.table) {
    Record row;
    row["partition"] = to_string(mu);
    row["exponent"] = e;
    table.push_back(row);
  }
  r["exponents"] = table;
  if (rr) {
    const auto ls = verify_local_structure(core, w, *rr, p, caps.max_dim, caps.max_group_order);
    Record l;
    l["r"] = ls.r;
    l["lambda"] = to_string(ls.lambda);
    l["target"] = to_string(ls.target);
    l["y"] = ls.y;
    l["x"] = ls.x;
    l["q_generators"] = detail::strings(ls.q_generators);
    l["q_order"] = ls.q_order;
    l["specht_dim"] = ls.specht_dim;
    l["quotient_dim"] = ls.quotient_dim;
    l["submodule_dim"] = ls.submodule_dim;
    l["target_dim"] = ls.target_dim;
    l["isomorphic"] = ls.isomorphic;
    l["normalizer_trivial"] = ls.normalizer_trivial;
    l["sylow_dim_matches"] = ls.sylow_dim_matches ? Record(*ls.sylow_dim_matches) : Record(nullptr);
    l["ok"] = ls.ok();
    r["local"] = l;
  }
  return r;
}

inline Record cmd_two_row(int n, int p, const Caps& caps) {
  const auto t = two_row_report(n, p, caps.max_dim, caps.max_group_order);
  Record r;
  r["command"] = "two-row";
  r["n"] = n;
  r["p"] = p;
  r["lambda"] = to_string(t.lambda);
  r["dim"] = t.dim;
  r["dim_matches_formula"] = t.dim_matches_formula;
  r["dim_exponent"] = t.dim_exponent;
  r["core"] = to_string(t.label.core);
  r["weight"] = t.label.weight;
  r["case"] = t.case_name;
  r["expected_core"] = t.expected_core ? Record(to_string(*t.expected_core)) : Record(nullptr);
  r["expected_weight"] = t.expected_weight;
  r["case_matches"] = t.case_matches;
  r["a"] = t.a;
  r["b"] = t.b;
  r["defect_order"] = t.defect_order;
  r["certificate_order"] = t.certificate_order ? Record(*t.certificate_order) : Record(nullptr);
  r["certificate_nonzero"] = t.certificate_nonzero ? Record(*t.certificate_nonzero) : Record(nullptr);
  r["lower_bound_consistent"] = t.lower_bound_consistent;
  return r;
}

inline Record cmd_endo(const Partition& lambda, int p, const Caps& caps, bool& undetermined) {
  const SpechtModule s = specht_module(lambda, checked_prime(p), {}, caps.max_dim);
  const auto rep = decide_indecomposable(s.rep);
  Record r;
  r["command"] = "endo";
  r["lambda"] = to_string(lambda);
  r["p"] = p;
  r["specht_dim"] = s.rep.dim();
  r["endomorphism_dim"] = rep.endomorphism_dim;
  r["verdict"] = rep.verdict == Decomposability::indecomposable ? "indecomposable"
                 : rep.verdict == Decomposability::decomposable ? "decomposable"
                                                                 : "undetermined";
  undetermined = rep.verdict == Decomposability::undetermined;
  return r;
}

// ---------------------------------------------------------------------------

/// Runs one invocation; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Specht modules, Brauer quotients and block arithmetic for symmetric groups", "spx"};
  app.require_subcommand(1);
  std::string format = "text";
  Caps caps;
  app.add_option("--format", format, "Output mode")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--max-group-order", caps.max_group_order, "Largest permutation group enumerated")
      ->capture_default_str();
  app.add_option("--max-dim", caps.max_dim, "Largest Specht module dimension built")->capture_default_str();
  app.fallthrough();

  std::string lambda_text, tableau_text, q_text, core_text;
  int p = 0, n = 0, w = 0, r = 0;

  std::function<Record()> action;
  bool undetermined = false;

  auto lambda_opt = [&](CLI::App* sub) { sub->add_option("--lambda", lambda_text, "Partition, e.g. 6,5,2")->required(); };
  auto p_opt = [&](CLI::App* sub) { sub->add_option("--p", p, "Prime")->required(); };

  auto* core = app.add_subcommand("core", "p-core, weight and p-quotient");
  lambda_opt(core);
  p_opt(core);
  core->callback([&] { action = [&] { return cmd_core(parse_partition(lambda_text), p); }; });

  auto* dim = app.add_subcommand("dim", "Hook-length dimension and hook table");
  lambda_opt(dim);
  dim->callback([&] { action = [&] { return cmd_dim(parse_partition(lambda_text)); }; });

  auto* straighten = app.add_subcommand("straighten", "Expand e_u in the standard polytabloid basis");
  straighten->add_option("--tableau", tableau_text, "Tableau, e.g. 1,4,6,7;2,3,5;8")->required();
  p_opt(straighten);
  straighten->callback([&] { action = [&] { return cmd_straighten(parse_tableau(tableau_text), p, caps); }; });

  auto* hgroup = app.add_subcommand("hgroup", "Generators and order of H(t) for the greatest tableau");
  lambda_opt(hgroup);
  hgroup->callback([&] { action = [&] { return cmd_hgroup(parse_partition(lambda_text)); }; });

  auto* vcert = app.add_subcommand("vertex-cert", "Nonvanishing of e_t in the Brauer quotient at a Sylow subgroup of H(t)");
  lambda_opt(vcert);
  p_opt(vcert);
  vcert->callback([&] { action = [&] { return cmd_vertex_cert(parse_partition(lambda_text), p, caps); }; });

  auto* brauer = app.add_subcommand("brauer", "Brauer quotient of S^lambda at a p-subgroup");
  lambda_opt(brauer);
  p_opt(brauer);
  brauer->add_option("--q", q_text, "Generators of Q, e.g. \"(1,2);(3,4)\"")->required();
  brauer->callback([&] { action = [&] { return cmd_brauer(parse_partition(lambda_text), p, q_text, caps); }; });

  auto* block = app.add_subcommand("block", "Block members, heights and the height-zero check");
  block->add_option("--n", n, "Degree")->required();
  p_opt(block);
  auto* core_flag = block->add_option("--core", core_text, "Restrict to the block with this p-core");
  block->callback([&] {
    action = [&] {
      std::optional<Partition> c;
      if (core_flag->count()) c = parse_partition(core_text);
      return cmd_block(n, p, c);
    };
  });

  auto* initial = app.add_subcommand("initial", "Initial partition reports: p-part of the dimension and local structure");
  initial->add_option("--core", core_text, "p-core")->required();
  initial->add_option("--w", w, "Weight")->required();
  p_opt(initial);
  auto* r_flag = initial->add_option("--r", r, "Local structure check with Q of support rp");
  initial->callback([&] {
    action = [&] {
      std::optional<int> rr;
      if (r_flag->count()) rr = r;
      return cmd_initial(parse_partition(core_text), w, p, rr, caps);
    };
  });

  auto* two_row = app.add_subcommand("two-row", "Case analysis for (n-2,2) at an odd prime");
  two_row->add_option("--n", n, "Degree")->required();
  p_opt(two_row);
  two_row->callback([&] { action = [&] { return cmd_two_row(n, p, caps); }; });

  auto* endo = app.add_subcommand("endo", "Endomorphism dimension and indecomposability of S^lambda");
  lambda_opt(endo);
  p_opt(endo);
  endo->callback([&] { action = [&] { return cmd_endo(parse_partition(lambda_text), p, caps, undetermined); }; });

  std::vector<std::string> storage{"spx"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    const auto extras = app.remaining();
    if (app.get_subcommands().empty() && !extras.empty() && extras[0].rfind('-', 0) != 0)
      err << "error: unknown subcommand '" << extras[0] << "'\n\n";
    else
      err << "error: " << e.what() << "\n\n";
    const CLI::App* scope = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << scope->help();
    return kInvalid;
  }

  try {
    const Record rec = action();
    emit(rec, format == "json", out);
    if (undetermined) {
      err << "error: locality test infeasible at endomorphism dimension " << rec["endomorphism_dim"].dump() << '\n';
      return kResource;
    }
    return kOk;
  } catch (const resource_error& e) {
    err << "error: " << e.what() << '\n';
    return kResource;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
}

}  // namespace spx::cli
