#include "gwring/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "gwring/cylinder.hpp"
#include "gwring/expr.hpp"
#include "gwring/line_ring.hpp"
#include "gwring/line_split.hpp"
#include "gwring/module_sim.hpp"

namespace gwring::cli {

namespace {

std::vector<HalfInt> parse_root_list(const std::string& text) {
  std::vector<HalfInt> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse_half_int(item));
  }
  return out;
}

std::pair<std::int64_t, std::int64_t> parse_window(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) throw std::invalid_argument("window must look like a..b");
  std::int64_t a = std::stoll(text.substr(0, dots));
  std::int64_t b = std::stoll(text.substr(dots + 2));
  if (b < a) throw std::invalid_argument("empty window " + text);
  return {a, b};
}

int cmd_components(const cyl::Configuration& w, std::ostream& out) {
  auto comps = cyl::complement_components(w);
  std::size_t noncontractible = 0;
  for (const auto& c : comps) {
    if (!c.contractible) ++noncontractible;
  }
  out << "components: " << comps.size() << " (noncontractible: " << noncontractible << ")\n";
  for (const auto& c : comps) {
    out << to_string(c.id) << " " << (c.contractible ? "contractible" : "noncontractible");
    if (c.id.kind == cyl::ComponentKind::Bounded) {
      out << " faces:";
      for (const auto& f : c.faces) out << " (" << f.a << "," << f.b << ")";
    }
    out << "\n";
  }
  return 0;
}

int cmd_sl2(const std::string& k_text, const std::string& l_text, const std::string& factors,
            std::size_t terms, std::ostream& out, std::ostream& err) {
  sim::YFactor y;
  if (factors == "-+") {
    y = sim::YFactor::Plus;
  } else if (factors == "--") {
    y = sim::YFactor::Minus;
  } else {
    err << "--factors must be -+ or --\n";
    return 2;
  }
  HalfInt k = parse_half_int(k_text);
  HalfInt l = parse_half_int(l_text);
  sim::Sl2Module m = sim::sl2_build(k, l, y, terms);
  sim::Sl2Report r = sim::sl2_verify(m);
  out << "dim=" << r.dim << (m.truncated ? " (truncated)" : "") << "\n";
  out << "h-spectrum:";
  for (const auto& v : r.h_spectrum) out << " " << to_string(v);
  out << "\n";
  out << "[h,e]=2e: " << (r.he_ok ? "OK" : "FAIL") << "\n";
  out << "[h,f]=-2f: " << (r.hf_ok ? "OK" : "FAIL") << "\n";
  out << "[e,f]=h: " << (r.ef_ok ? "OK" : "FAIL") << "\n";
  out << "highest-weight vectors: " << r.highest_weight_vectors << "\n";
  out << "casimir=" << (r.casimir ? to_string(*r.casimir) : std::string("not scalar")) << "\n";
  out << (r.ok() ? "relations OK" : "relations FAILED") << "\n";
  return r.ok() ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grothendieck rings of weight modules: products, normal forms, checks", "gwring"};
  app.require_subcommand(1);

  std::string expr_text;
  std::optional<std::int64_t> opt_m;
  std::optional<std::int64_t> opt_n;
  auto* mul = app.add_subcommand("mul", "Evaluate an expression in its ring");
  mul->add_option("expr", expr_text, "expression")->required();
  mul->add_option("--m", opt_m, "cylinder m (defaults to the profile length)");
  mul->add_option("--n", opt_n, "cylinder n");
  auto* normalize = app.add_subcommand("normalize", "Evaluate and print normal-form monomials");
  normalize->add_option("expr", expr_text, "expression")->required();
  normalize->add_option("--m", opt_m, "cylinder m");
  normalize->add_option("--n", opt_n, "cylinder n");

  std::string t_text;
  auto* simples = app.add_subcommand("simples", "List the simple classes of A(t)");
  simples->add_option("t", t_text, "root multiset, e.g. {1/2:1,5/2:2}")->required();
  auto* indec = app.add_subcommand("indecomposables", "List the indecomposable classes of A(t)");
  indec->add_option("t", t_text, "root multiset")->required();

  std::string file;
  std::string svg_path;
  auto* decompose = app.add_subcommand("decompose", "Chain decomposition of a configuration");
  decompose->add_option("file", file)->required()->check(CLI::ExistingFile);
  auto* components = app.add_subcommand("components", "Complement components of a configuration");
  components->add_option("file", file)->required()->check(CLI::ExistingFile);
  auto* consistency = app.add_subcommand("consistency", "Check the consistency equation");
  consistency->add_option("file", file)->required()->check(CLI::ExistingFile);
  auto* render = app.add_subcommand("render", "Draw a configuration");
  render->add_option("file", file)->required()->check(CLI::ExistingFile);
  render->add_option("--svg", svg_path, "also write an SVG drawing");

  std::string roots_text = "-3/2,-1/2,1/2,3/2";
  std::string window_text = "-8..8";
  int max_mult = 2;
  unsigned threads = 1;
  auto* oracle = app.add_subcommand("oracle-rank1", "Compare tensor rules with explicit modules");
  oracle->add_option("--roots", roots_text, "comma-separated roots")->capture_default_str();
  oracle->add_option("--window", window_text, "weight window a..b")->capture_default_str();
  oracle->add_option("--max-mult", max_mult, "largest multiplicity")->capture_default_str();
  oracle->add_option("--threads", threads, "worker threads")->capture_default_str();

  std::string k_text;
  std::string l_text;
  std::string factors = "-+";
  std::size_t terms = 8;
  auto* sl2 = app.add_subcommand("sl2", "Build and check the sl2 tensor example");
  sl2->add_option("--k", k_text, "half-integer k")->required();
  sl2->add_option("--l", l_text, "half-integer l")->required();
  sl2->add_option("--factors", factors, "-+ (finite) or -- (lowest-weight free)")
      ->capture_default_str();
  sl2->add_option("--terms", terms, "basis size kept for infinite modules")->capture_default_str();

  std::int64_t vm = 3;
  std::int64_t vn = 2;
  std::int64_t max_height = 3;
  auto* verify = app.add_subcommand("verify-cylinder", "Check the cylinder relations");
  verify->add_option("--m", vm)->required();
  verify->add_option("--n", vn)->required();
  verify->add_option("--max-height", max_height, "paths use heights 1/2 .. H-1/2")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (mul->parsed()) {
      out << expr::evaluate(expr_text, opt_m, opt_n) << "\n";
      return 0;
    }
    if (normalize->parsed()) {
      out << expr::normalize(expr_text, opt_m, opt_n) << "\n";
      return 0;
    }
    if (simples->parsed()) {
      for (const auto& c : line::enumerate_simples(line::parse_root_multiset(t_text))) {
        out << to_string(c) << "\n";
      }
      return 0;
    }
    if (indec->parsed()) {
      for (const auto& c : split::enumerate_indecomposables(line::parse_root_multiset(t_text))) {
        out << to_string(c) << "\n";
      }
      return 0;
    }
    if (decompose->parsed()) {
      auto chain = cyl::chain_decompose(cyl::read_config_file(file));
      out << "paths: " << chain.size() << "\n";
      for (const auto& p : chain) out << to_string(p) << "\n";
      return 0;
    }
    if (components->parsed()) return cmd_components(cyl::read_config_file(file), out);
    if (consistency->parsed()) {
      auto w = cyl::read_config_file(file);
      auto [t1, t2] = cyl::config_to_t(w);
      bool ok = cyl::consistency_check(w.geometry(), t1, t2);
      out << "t1 = " << line::to_string(t1) << "\n";
      out << "t2 = " << line::to_string(t2) << "\n";
      out << "consistent: " << (ok ? "true" : "false") << "\n";
      return ok ? 0 : 1;
    }
    if (render->parsed()) {
      auto w = cyl::read_config_file(file);
      out << cyl::render_ascii(w);
      if (!svg_path.empty()) {
        std::ofstream svg(svg_path, std::ios::binary);
        if (!svg) throw std::runtime_error("cannot write " + svg_path);
        svg << cyl::render_svg(w);
      }
      return 0;
    }
    if (oracle->parsed()) {
      auto [lo, hi] = parse_window(window_text);
      auto params = sim::parameters_up_to(parse_root_list(roots_text), max_mult);
      auto rep = sim::oracle_sweep(params, lo, hi, threads);
      out << "parameters: " << rep.parameters << "\n";
      out << "indecomposables: " << rep.indecomposables << "\n";
      out << "pairs: " << rep.pairs << "\n";
      out << "subset mismatches: " << rep.subset_mismatches << "\n";
      out << "class mismatches: " << rep.class_mismatches << "\n";
      out << "simple pairs: " << rep.simple_pairs << " mismatches: " << rep.simple_mismatches
          << "\n";
      out << "gwa failures: " << rep.gwa_failures << "\n";
      for (const auto& ex : rep.examples) out << "  " << ex << "\n";
      out << (rep.ok() ? "oracle OK" : "oracle FAILED") << "\n";
      return rep.ok() ? 0 : 1;
    }
    if (sl2->parsed()) return cmd_sl2(k_text, l_text, factors, terms, out, err);
    if (verify->parsed()) {
      auto g = cyl::CylGeometry::make(vm, vn);
      if (max_height < 1) throw std::invalid_argument("--max-height must be positive");
      auto paths = cyl::paths_in_window(g, HalfInt::from_twice(1),
                                        HalfInt::from_twice(2 * max_height - 1));
      auto rep = cyl::verify_relations(g, paths, {Rational(1), Rational(2), Rational(-1, 3)});
      out << "paths: " << paths.size() << "\n";
      for (const auto& t : rep.tallies) {
        out << t.name << ": " << t.checked << " checked, " << t.failed << " failed\n";
      }
      for (const auto& f : rep.failures) out << "  " << f << "\n";
      out << (rep.ok() ? "relations OK" : "relations FAILED") << "\n";
      return rep.ok() ? 0 : 1;
    }
  } catch (const expr::ParseError& e) {
    err << "parse error at " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace gwring::cli
