#include "homalg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "homalg/algebra_io.hpp"
#include "homalg/envelope.hpp"
#include "homalg/errors.hpp"

namespace homalg::cli {

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct Io {
  std::ostream& out;
  std::ostream& err;
  bool json = false;
};

int report_violations(Io& io, const std::string& what, const Violations& v) {
  if (io.json) {
    Json j;
    j["ok"] = v.empty();
    j["check"] = what;
    j["violations"] = to_json(v);
    io.out << j.dump(2) << "\n";
  } else if (v.empty()) {
    io.out << what << ": ok\n";
  } else {
    io.out << what << ": " << v.size() << " violation(s)\n";
    for (const auto& x : v) io.out << "  " << describe(x) << "\n";
  }
  return v.empty() ? kOk : kViolation;
}

// -- trees / catalan ------------------------------------------------------------

struct TreesArgs {
  std::size_t n = 0;
  std::optional<unsigned> max_weight;
  bool di = false;
};

int cmd_trees(Io& io, const TreesArgs& a) {
  std::vector<std::string> lines;
  std::string kind;
  if (a.di) {
    kind = "diweighted";
    for (const auto& t : enumerate_diweighted(a.n, a.max_weight.value_or(0))) lines.push_back(format(t));
  } else if (a.max_weight) {
    kind = "weighted";
    for (const auto& t : enumerate_weighted(a.n, *a.max_weight)) lines.push_back(format(t));
  } else {
    kind = "plain";
    for (const auto& t : enumerate_trees(a.n)) lines.push_back(format(t));
  }
  if (io.json) {
    Json j;
    j["n"] = a.n;
    j["kind"] = kind;
    if (a.di || a.max_weight) j["max_weight"] = a.max_weight.value_or(0);
    j["count"] = lines.size();
    j["trees"] = lines;
    io.out << j.dump(2) << "\n";
  } else {
    for (const auto& l : lines) io.out << l << "\n";
    io.err << lines.size() << " tree(s)\n";
  }
  return kOk;
}

int cmd_catalan(Io& io, unsigned n) {
  Integer c = catalan(n);
  if (io.json) {
    Json j;
    j["n"] = n;
    j["catalan"] = c.get_str();
    io.out << j.dump(2) << "\n";
  } else {
    io.out << c.get_str() << "\n";
  }
  return kOk;
}

// -- check -------------------------------------------------------------------------

int cmd_check(Io& io, const std::string& path, std::string kind) {
  Json j = read_json_file(path);
  std::string file_kind = kind_of(j);
  if (kind.empty()) {
    if (file_kind == "hom-dialgebra") kind = "hom-dialgebra";
    else if (file_kind == "hom-bimodule") kind = "bimodule";
    else kind = "hom-assoc";
  }
  if (kind == "hom-dialgebra") return report_violations(io, kind, check_hom_dialgebra(dialgebra_from_json(j)));
  if (kind == "bimodule") return report_violations(io, kind, check_bimodule(bimodule_from_json(j)));
  HomNonAsAlgebra a = algebra_from_json(j);
  if (kind == "hom-assoc") return report_violations(io, kind, check_hom_associative(a));
  if (kind == "hom-lie") return report_violations(io, kind, check_hom_lie(a));
  return report_violations(io, kind, check_hom_leibniz(a));
}

// -- derive ------------------------------------------------------------------------

int cmd_derive(Io& io, const std::string& path, const std::string& functor, const std::string& output) {
  Json in = read_json_file(path);
  Json result;
  if (functor == "hlie") result = to_json(hlie(algebra_from_json(in)));
  else if (functor == "hleib") result = to_json(hleib(dialgebra_from_json(in)));
  else if (functor == "di-from-assoc") result = to_json(dialgebra_from_associative(algebra_from_json(in)));
  else result = to_json(dialgebra_from_bimodule(bimodule_from_json(in)));
  std::string text = result.dump(2) + "\n";
  if (output.empty()) {
    io.out << text;
  } else {
    std::ofstream f(output);
    if (!f) throw ParseError(0, "cannot write " + output);
    f << text;
  }
  return kOk;
}

// -- free-basis -----------------------------------------------------------------------

int cmd_free_basis(Io& io, std::size_t dim, const Window& w, bool di) {
  std::vector<std::string> items;
  if (di) {
    for (const auto& m : di_basis_window(dim, w)) items.push_back(format(m));
  } else {
    for (const auto& m : basis_window(dim, w)) items.push_back(format(m));
  }
  if (io.json) {
    Json j;
    j["dim"] = dim;
    j["N"] = w.N;
    j["W"] = w.W;
    j["di"] = di;
    j["count"] = items.size();
    j["monomials"] = items;
    io.out << j.dump(2) << "\n";
  } else {
    for (const auto& s : items) io.out << s << "\n";
    io.err << items.size() << " monomial(s)\n";
  }
  return kOk;
}

// -- envelope -------------------------------------------------------------------------

template <class Q>
int emit_quotient(Io& io, const std::string& kind, const Q& q) {
  QuotientAxiomReport axioms = check_quotient_axioms(q);
  auto table = q.filtration();
  if (io.json) {
    Json j;
    j["kind"] = kind;
    j["window"] = {{"N", q.window().N}, {"W", q.window().W}, {"pad", q.window().pad}};
    j["padded_dim"] = q.padded_dim();
    j["padded_rank"] = q.padded_rank();
    Json rows = Json::array();
    for (const auto& r : table)
      rows.push_back({{"arity", r.arity},
                      {"weight", r.weight},
                      {"window_dim", r.window_dim},
                      {"ideal_rank", r.ideal_rank},
                      {"quotient_dim", r.quotient_dim}});
    j["table"] = std::move(rows);
    j["quotient_dim"] = q.dim();
    Json mons = Json::array();
    for (const auto& m : q.standard_monomials()) mons.push_back(format(m));
    j["standard_monomials"] = std::move(mons);
    j["axioms"] = {{"checked", axioms.checked},
                   {"skipped", axioms.skipped},
                   {"violations", to_json(axioms.violations)}};
    io.out << j.dump(2) << "\n";
  } else {
    io.out << kind << " window N=" << q.window().N << " W=" << q.window().W << " pad=" << q.window().pad
           << " (padded basis " << q.padded_dim() << ", ideal rank " << q.padded_rank() << ")\n";
    io.out << "arity weight window_dim ideal_rank quotient_dim\n";
    for (const auto& r : table)
      io.out << r.arity << " " << r.weight << " " << r.window_dim << " " << r.ideal_rank << " " << r.quotient_dim
             << "\n";
    io.out << "quotient dim " << q.dim() << "\n";
    io.out << "standard monomials:\n";
    for (const auto& m : q.standard_monomials()) io.out << "  " << format(m) << "\n";
    io.out << "quotient axioms: " << axioms.checked << " checked, " << axioms.skipped << " skipped, "
           << axioms.violations.size() << " violation(s)\n";
    for (const auto& v : axioms.violations) io.out << "  " << describe(v) << "\n";
  }
  return axioms.ok() ? kOk : kViolation;
}

int cmd_envelope(Io& io, const std::string& path, const std::string& kind, const Window& w) {
  Json j = read_json_file(path);
  if (kind == "fhas") {
    // Only the Hom-module part of the file matters.
    HomModule v{static_cast<std::size_t>(0), Matrix()};
    if (kind_of(j) == "hom-dialgebra") v = dialgebra_from_json(j).module;
    else v = algebra_from_json(j).module;
    return emit_quotient(io, kind, f_has(v, w));
  }
  HomNonAsAlgebra l = algebra_from_json(j);
  if (kind == "hlie") return emit_quotient(io, kind, u_hlie(l, w));
  return emit_quotient(io, kind, u_hleib(l, w));
}

// -- verify-adjunction -------------------------------------------------------------------

int cmd_verify(Io& io, const std::string& lie_path, const std::string& target_path, const std::string& map_path,
               const std::string& kind, const Window& w) {
  HomNonAsAlgebra l = algebra_from_json(read_json_file(lie_path));
  Json target = read_json_file(target_path);
  Matrix f = map_from_json(read_json_file(map_path));
  MorphismReport r;
  if (kind == "hleib") {
    HomDialgebra d = kind_of(target) == "hom-dialgebra" ? dialgebra_from_json(target)
                                                        : dialgebra_from_associative(algebra_from_json(target));
    r = induced_morphism_check(l, d, f, w);
  } else {
    r = induced_morphism_check(l, algebra_from_json(target), f, w);
  }
  if (io.json) {
    Json j;
    j["ok"] = r.ok();
    j["kind"] = kind;
    j["window"] = {{"N", w.N}, {"W", w.W}, {"pad", w.pad}};
    j["quotient_dim"] = r.quotient_dim;
    j["generators_checked"] = r.generators_checked;
    j["ideal_rows_checked"] = r.ideal_rows_checked;
    j["table_entries_checked"] = r.table_entries_checked;
    j["h"] = to_json(r.h);
    j["violations"] = to_json(r.violations);
    io.out << j.dump(2) << "\n";
  } else {
    io.out << "quotient dim " << r.quotient_dim << "\n";
    io.out << "g on ideal generators: " << r.generators_checked << " checked\n";
    io.out << "g on closed ideal rows: " << r.ideal_rows_checked << " checked\n";
    io.out << "h against partial tables: " << r.table_entries_checked << " entries checked\n";
    io.out << (r.ok() ? "adjunction instance: ok\n" : "adjunction instance: FAILED\n");
    for (const auto& v : r.violations) io.out << "  " << describe(v) << "\n";
  }
  return r.ok() ? kOk : kViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hom-algebra kernel", "homalg"};
  app.require_subcommand(1);
  Io io{out, err};
  std::function<int()> action;

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", io.json, "machine-readable output"); };

  TreesArgs trees;
  auto* t = app.add_subcommand("trees", "enumerate planar binary trees of arity n");
  t->add_option("-n,--n", trees.n, "arity")->required()->check(CLI::PositiveNumber);
  t->add_option("--max-weight", trees.max_weight, "total weight bound (weighted trees)");
  t->add_flag("--di", trees.di, "diweighted trees");
  add_json(t);
  t->callback([&] { action = [&] { return cmd_trees(io, trees); }; });

  unsigned cat_n = 0;
  auto* c = app.add_subcommand("catalan", "Catalan number C_n");
  c->add_option("-n,--n", cat_n, "index")->required();
  add_json(c);
  c->callback([&] { action = [&] { return cmd_catalan(io, cat_n); }; });

  std::string check_file, check_kind;
  auto* ch = app.add_subcommand("check", "check the axioms of an algebra file");
  ch->add_option("file", check_file, "algebra JSON")->required();
  ch->add_option("--kind", check_kind, "identity to check")
      ->check(CLI::IsMember({"hom-assoc", "hom-lie", "hom-leibniz", "hom-dialgebra", "bimodule"}));
  add_json(ch);
  ch->callback([&] { action = [&] { return cmd_check(io, check_file, check_kind); }; });

  std::string derive_file, functor, derive_out;
  auto* d = app.add_subcommand("derive", "apply a functor to an algebra file");
  d->add_option("file", derive_file, "algebra JSON")->required();
  d->add_option("--functor", functor, "construction")
      ->required()
      ->check(CLI::IsMember({"hlie", "hleib", "di-from-assoc", "di-from-bimodule"}));
  d->add_option("-o,--output", derive_out, "write the result here instead of stdout");
  add_json(d);
  d->callback([&] { action = [&] { return cmd_derive(io, derive_file, functor, derive_out); }; });

  std::size_t fb_dim = 0;
  unsigned fb_n = 0, fb_w = 0;
  bool fb_di = false;
  auto* fb = app.add_subcommand("free-basis", "list the free algebra basis inside a window");
  fb->add_option("--dim", fb_dim, "number of generators")->required();
  fb->add_option("-N", fb_n, "maximum arity")->required()->check(CLI::PositiveNumber);
  fb->add_option("-W", fb_w, "maximum total weight")->required();
  fb->add_flag("--di", fb_di, "dialgebra monomials");
  add_json(fb);
  fb->callback([&] { action = [&] { return cmd_free_basis(io, fb_dim, Window(fb_n, fb_w), fb_di); }; });

  std::string env_file, env_kind;
  unsigned env_n = 0, env_w = 0, env_pad = 1;
  auto* e = app.add_subcommand("envelope", "windowed enveloping algebra or free Hom-associative algebra");
  e->add_option("file", env_file, "algebra JSON")->required();
  e->add_option("--kind", env_kind, "quotient")->required()->check(CLI::IsMember({"hlie", "fhas", "hleib"}));
  e->add_option("-N", env_n, "maximum arity")->required()->check(CLI::PositiveNumber);
  e->add_option("-W", env_w, "maximum total weight")->required();
  e->add_option("--pad", env_pad, "padding for the ideal closure")->capture_default_str();
  add_json(e);
  e->callback([&] { action = [&] { return cmd_envelope(io, env_file, env_kind, Window(env_n, env_w, env_pad)); }; });

  std::string v_lie, v_target, v_map, v_kind = "hlie";
  unsigned v_n = 0, v_w = 0, v_pad = 1;
  auto* v = app.add_subcommand("verify-adjunction", "check the universal property on a window");
  v->add_option("--lie", v_lie, "Hom-Lie (or Hom-Leibniz) algebra JSON")->required();
  v->add_option("--assoc,--target", v_target, "Hom-associative algebra (or Hom-dialgebra) JSON")->required();
  v->add_option("--map", v_map, "linear map JSON")->required();
  v->add_option("--kind", v_kind, "hlie or hleib")->check(CLI::IsMember({"hlie", "hleib"}))->capture_default_str();
  v->add_option("-N", v_n, "maximum arity")->required()->check(CLI::PositiveNumber);
  v->add_option("-W", v_w, "maximum total weight")->required();
  v->add_option("--pad", v_pad, "padding for the ideal closure")->capture_default_str();
  add_json(v);
  v->callback([&] { action = [&] { return cmd_verify(io, v_lie, v_target, v_map, v_kind, Window(v_n, v_w, v_pad)); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    int code = app.exit(ex, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action();
  } catch (const HypothesisError& ex) {
    if (io.json) {
      Json j;
      j["ok"] = false;
      j["error"] = ex.what();
      j["violations"] = to_json(ex.violations());
      out << j.dump(2) << "\n";
    } else {
      err << "hypothesis failed: " << ex.what() << "\n";
      for (const auto& x : ex.violations()) err << "  " << describe(x) << "\n";
    }
    return kViolation;
  } catch (const ParseError& ex) {
    err << "parse error: " << ex.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& ex) {
    err << "invalid input: " << ex.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& ex) {
    err << "invalid input: " << ex.what() << "\n";
    return kUsage;
  }
}

}  // namespace homalg::cli
