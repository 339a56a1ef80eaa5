// autocat: diagram checking, evaluation, pregroup parsing, normalization,
// rendering and property harnesses over the library.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "autocat/autocat.hpp"

using namespace autocat;

namespace {

constexpr int kExitEqual = 0;
constexpr int kExitNotEqual = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;

std::size_t max_nodes() {
  if (const char* env = std::getenv("AUTOCAT_MAX_NODES")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw std::runtime_error("AUTOCAT_MAX_NODES is not a positive integer");
  }
  return 100000;
}

void enforce_budget(const Diagram& d, const std::string& what) {
  std::size_t items = 0;
  for (const Slice& s : d.slices) items += s.items.size();
  std::size_t budget = max_nodes();
  if (items > budget)
    throw std::runtime_error(what + " has " + std::to_string(items) +
                             " items, over the AUTOCAT_MAX_NODES budget of " +
                             std::to_string(budget));
}

Signature load_signature(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open signature file '" + path + "'");
  return Signature::parse(in);
}

Diagram load_diagram_file(const std::string& path, const CategoryModel& model) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open diagram file '" + path + "'");
  Diagram d = parse_diagram(in, model);
  enforce_budget(d, "'" + path + "'");
  return d;
}

std::string dir_of(const std::string& path) {
  auto slash = path.find_last_of('/');
  return slash == std::string::npos ? "." : path.substr(0, slash);
}

Interpretation load_interp_file(const std::string& path, const Signature& sig) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open model file '" + path + "'");
  return load_interpretation(in, sig, dir_of(path));
}

void print_trace(const RewriteTrace& trace, std::ostream& out) {
  for (const auto& line : trace) out << line << "\n";
}

// --- check -----------------------------------------------------------------

int cmd_check(const std::string& a_path, const std::string& b_path,
              const std::string& sig_path, const std::string& model_path,
              bool trace) {
  Signature sig = load_signature(sig_path);
  FreeSignatureModel free_model(sig);
  Diagram a = load_diagram_file(a_path, free_model);
  Diagram b = load_diagram_file(b_path, free_model);

  TriState verdict;
  if (!model_path.empty()) {
    Interpretation interp = load_interp_file(model_path, sig);
    StrongMonoidalFunctor F = interp.functor(free_model);
    Diagram ma = map_diagram(F, a), mb = map_diagram(F, b);
    if (trace) {
      RewriteTrace ta, tb;
      normalize(ma, *interp.model, &ta);
      normalize(mb, *interp.model, &tb);
      std::cerr << "# trace " << a_path << "\n";
      print_trace(ta, std::cerr);
      std::cerr << "# trace " << b_path << "\n";
      print_trace(tb, std::cerr);
    }
    verdict = equal(ma, mb, *interp.model);
  } else {
    if (trace) {
      RewriteTrace ta, tb;
      normalize(a, free_model, &ta);
      normalize(b, free_model, &tb);
      std::cerr << "# trace " << a_path << "\n";
      print_trace(ta, std::cerr);
      std::cerr << "# trace " << b_path << "\n";
      print_trace(tb, std::cerr);
    }
    verdict = equal(a, b, free_model);
  }
  std::cout << to_string(verdict) << "\n";
  switch (verdict) {
    case TriState::Equal: return kExitEqual;
    case TriState::NotEqual: return kExitNotEqual;
    default: return kExitUnknown;
  }
}

// --- eval ------------------------------------------------------------------

int cmd_eval(const std::string& d_path, const std::string& sig_path,
             const std::string& model_path) {
  Morphism v;
  std::shared_ptr<MatTensorModel> target;
  if (!model_path.empty()) {
    if (sig_path.empty())
      throw std::runtime_error("--model requires --sig");
    Signature sig = load_signature(sig_path);
    FreeSignatureModel free_model(sig);
    Interpretation interp = load_interp_file(model_path, sig);
    Diagram d = load_diagram_file(d_path, free_model);
    StrongMonoidalFunctor F = interp.functor(free_model);
    v = value(map_diagram(F, d), *interp.model);
    target = interp.model;
  } else {
    // dimension-labeled diagram evaluated directly in the matrix model
    target = std::make_shared<MatTensorModel>();
    Diagram d = load_diagram_file(d_path, *target);
    v = value(d, *target);
  }
  write_matrix(std::cout, MatTensorModel::mat(v));
  return 0;
}

// --- parse -----------------------------------------------------------------

void print_reduction(const Reduction& r) {
  std::cout << "links:";
  for (const auto& [i, j] : r.links) std::cout << " (" << i << "," << j << ")";
  std::cout << "\nsurvivors:";
  for (std::size_t s : r.survivors) std::cout << " " << s;
  std::cout << "\n";
}

int cmd_parse(const std::string& sentence, const std::string& sig_path,
              const std::string& lex_path, const std::string& target_str,
              bool all, bool meaning) {
  Signature sig = load_signature(sig_path);
  std::ifstream lin(lex_path);
  if (!lin) throw std::runtime_error("cannot open lexicon file '" + lex_path + "'");
  Lexicon lex = Lexicon::parse(lin, sig, dir_of(lex_path));

  std::vector<std::string> words;
  std::istringstream ws(sentence);
  std::string w;
  while (ws >> w) words.push_back(w);
  if (words.empty()) throw std::runtime_error("empty sentence");

  std::vector<Interface> types;
  for (const auto& word : words) types.push_back(lex.entry(word).type);
  Interface target = parse_type(target_str, &sig);

  if (all) {
    auto reds = all_reductions(types, target, sig);
    std::cout << reds.size() << " reductions\n";
    for (const auto& r : reds) print_reduction(r);
    return reds.empty() ? 1 : 0;
  }
  auto red = find_reduction(types, target, sig);
  if (!red) {
    std::cout << "no reduction\n";
    return 1;
  }
  print_reduction(*red);
  if (meaning) {
    Interpretation interp;
    interp.dims = sig.dims();
    interp.model = std::make_shared<MatTensorModel>(interp.dims);
    auto state = sentence_meaning(words, lex, interp, target, sig);
    if (!state) return 1;  // unreachable: a reduction was just found
    std::cout << "meaning:\n";
    write_matrix(std::cout, MatTensorModel::mat(*state));
  }
  return 0;
}

// --- normalize -------------------------------------------------------------

int cmd_normalize(const std::string& d_path, const std::string& sig_path,
                  bool trace) {
  Signature sig = load_signature(sig_path);
  FreeSignatureModel model(sig);
  Diagram d = load_diagram_file(d_path, model);
  RewriteTrace t;
  Diagram n = normalize(d, model, trace ? &t : nullptr);
  if (trace) print_trace(t, std::cerr);
  std::cout << print_diagram(n);
  return 0;
}

// --- render ----------------------------------------------------------------

int cmd_render(const std::string& d_path, const std::string& sig_path,
               const std::string& format, const std::string& out_path) {
  Signature sig = load_signature(sig_path);
  FreeSignatureModel model(sig);
  Diagram d = load_diagram_file(d_path, model);
  std::string body = format == "tikz" ? render_tikz(d) : render_svg(d);
  if (out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file '" + out_path + "'");
    out << body;
  }
  return 0;
}

// --- harness ---------------------------------------------------------------

Signature builtin_signature() {
  std::istringstream src(
      "object A\nobject B\nobject C\n"
      "gen f : A -> B\ngen g : B -> C\ngen h : A, B -> C\n"
      "gen u : I -> A\ngen e : A -> I\ngen w : C -> A, B\n");
  return Signature::parse(src);
}

struct Tally {
  int pass = 0, fail = 0;
  void add(bool ok) { ok ? ++pass : ++fail; }
};

int harness_yanking(unsigned seed) {
  MatTensorModel m;
  DiagramGen gen(seed);
  Tally t;
  std::vector<CBase> bases = {CBase::dim(1), CBase::dim(2), CBase::dim(3)};
  for (int trial = 0; trial < 100; ++trial) {
    Interface i = gen.random_interface(bases, 0, 3, 3);
    Diagram zig = compose(tensor(snake_eta(i), identity_diagram(i)),
                          tensor(identity_diagram(i), snake_eps(i)));
    bool ok = normalize(zig, m) == identity_diagram(i);
    long prod = 1;
    for (const SignedObject& so : i) prod *= so.base.dim_value();
    if (ok && prod <= 8) ok = m.is_identity(value(zig, m));
    t.add(ok);
  }
  std::cout << "suite yanking seed " << seed << ": " << t.pass << " pass, "
            << t.fail << " fail\n";
  return t.fail == 0 ? 0 : 1;
}

int harness_bifunctoriality(unsigned seed) {
  MatTensorModel mt;
  AffDirectSumModel am;
  DiagramGen gen(seed);
  auto rvec = [&](std::size_t n) {
    RatVector v(n);
    for (auto& e : v) e = Rational(gen.uniform(-3, 3));
    return v;
  };
  Tally t;
  for (int trial = 0; trial < 100; ++trial) {
    auto dim = [&] { return static_cast<std::size_t>(gen.uniform(1, 3)); };
    std::size_t a = dim(), b = dim(), c = dim(), d = dim(), e = dim(), h2 = dim();
    Morphism f = mt.from_matrix(gen.random_matrix(b, a));
    Morphism g = mt.from_matrix(gen.random_matrix(c, b));
    Morphism h = mt.from_matrix(gen.random_matrix(e, d));
    Morphism k = mt.from_matrix(gen.random_matrix(h2, e));
    t.add(mt.equal(mt.compose(mt.tensor(g, k), mt.tensor(f, h)),
                   mt.tensor(mt.compose(g, f), mt.compose(k, h))) ==
          TriState::Equal);
    Morphism fa = am.from_parts(gen.random_matrix(b, a), rvec(b));
    Morphism ga = am.from_parts(gen.random_matrix(c, b), rvec(c));
    Morphism ha = am.from_parts(gen.random_matrix(e, d), rvec(e));
    Morphism ka = am.from_parts(gen.random_matrix(h2, e), rvec(h2));
    t.add(am.equal(am.compose(am.tensor(ga, ka), am.tensor(fa, ha)),
                   am.tensor(am.compose(ga, fa), am.compose(ka, ha))) ==
          TriState::Equal);
  }
  std::cout << "suite bifunctoriality seed " << seed << ": " << t.pass
            << " pass, " << t.fail << " fail\n";
  return t.fail == 0 ? 0 : 1;
}

int harness_triangles(unsigned seed, const std::optional<Signature>& sig_opt) {
  Signature sig = sig_opt ? *sig_opt : builtin_signature();
  FreeSignatureModel fm(sig);
  MatTensorModel mt;
  DiagramGen gen(seed);
  Tally t;
  for (int trial = 0; trial < 50; ++trial) {
    Morphism f = mt.from_matrix(gen.random_matrix(
        static_cast<std::size_t>(gen.uniform(1, 4)),
        static_cast<std::size_t>(gen.uniform(1, 4))));
    t.add(mt.equal(value(embed(f), mt), f) == TriState::Equal);
  }
  for (int trial = 0; trial < 30; ++trial) {
    Diagram d = gen.random_progressive(fm, 2);
    if (trial % 2 == 1) d = gen.insert_zigzag(d);
    t.add(check_triangle_L(d, fm) == TriState::Equal);
  }
  std::cout << "suite triangles seed " << seed << ": " << t.pass << " pass, "
            << t.fail << " fail\n";
  return t.fail == 0 ? 0 : 1;
}

int harness_cartesian(unsigned seed) {
  AffDirectSumModel m;
  DiagramGen gen(seed);
  Tally t;
  for (long dimA = 1; dimA <= 3; ++dimA)
    for (long dimB = 1; dimB <= 3; ++dimB)
      for (int trial = 0; trial < 10; ++trial) {
        RatVector off(static_cast<std::size_t>(dimB + dimA));
        for (auto& e : off) e = Rational(gen.uniform(-5, 5));
        Morphism eps = m.from_parts(
            RatMatrix(0, static_cast<std::size_t>(dimA + dimB)), RatVector{});
        Morphism eta = m.from_parts(
            RatMatrix(static_cast<std::size_t>(dimB + dimA), 0), off);
        t.add(cartesian_no_adjoint_witness(dimA, dimB, eps, eta, m).refuted);
      }
  std::cout << "suite cartesian seed " << seed << ": " << t.pass << " pass, "
            << t.fail << " fail\n";
  return t.fail == 0 ? 0 : 1;
}

int harness_conjecture(unsigned seed, const std::optional<Signature>& sig_opt) {
  Signature sig = sig_opt ? *sig_opt : builtin_signature();
  FreeSignatureModel fm(sig);
  DiagramGen gen(seed);
  int single = 0, total = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Diagram d = gen.random_progressive(fm, 3);
    if (trial % 3 == 0) d = gen.insert_zigzag(d);
    Diagram n = normalize(d, fm);
    NodeCount c = count_nodes(n);
    if (c.cups == 0 && c.caps == 0 && c.boxes == 1 && n.slices.size() == 1 &&
        n.slices[0].items.size() == 1)
      ++single;
    ++total;
  }
  std::cout << "suite conjecture seed " << seed << ": " << single << "/"
            << total << " diagrams with zero-winding boundary normalize to a "
            << "single box\n";
  return 0;  // informational, never fails
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"string diagrams over monoidal models"};
  app.require_subcommand(1);

  std::string sig_path, model_path, lex_path, format = "svg", out_path;
  std::string a_path, b_path, d_path, sentence, target_str = "s", suite;
  bool trace = false, all = false, meaning = false;
  unsigned seed = 1;

  auto* check = app.add_subcommand("check", "decide equality of two diagrams");
  check->add_option("a", a_path, "first diagram file")->required();
  check->add_option("b", b_path, "second diagram file")->required();
  check->add_option("--sig", sig_path, "signature file")->required();
  check->add_option("--model", model_path, "interpretation file");
  check->add_flag("--trace", trace, "print rewrite traces to stderr");

  auto* eval = app.add_subcommand("eval", "evaluate a diagram to a matrix");
  eval->add_option("diagram", d_path, "diagram file")->required();
  eval->add_option("--sig", sig_path, "signature file");
  eval->add_option("--model", model_path, "interpretation file");

  auto* parse = app.add_subcommand("parse", "reduce a sentence and optionally evaluate it");
  parse->add_option("sentence", sentence, "space-separated words")->required();
  parse->add_option("--sig", sig_path, "signature file")->required();
  parse->add_option("--lexicon", lex_path, "lexicon file")->required();
  parse->add_option("--target", target_str, "target type (default s)");
  parse->add_flag("--all", all, "list every planar reduction");
  parse->add_flag("--meaning", meaning, "evaluate the sentence state");

  auto* norm = app.add_subcommand("normalize", "print the normal form of a diagram");
  norm->add_option("diagram", d_path, "diagram file")->required();
  norm->add_option("--sig", sig_path, "signature file")->required();
  norm->add_flag("--trace", trace, "print the rewrite trace to stderr");

  auto* render = app.add_subcommand("render", "render a diagram");
  render->add_option("diagram", d_path, "diagram file")->required();
  render->add_option("--sig", sig_path, "signature file")->required();
  render->add_option("--format", format, "svg or tikz")
      ->check(CLI::IsMember({"svg", "tikz"}));
  render->add_option("-o,--out", out_path, "output file (default stdout)");

  auto* harness = app.add_subcommand("harness", "run a property suite");
  harness->add_option("--suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"yanking", "bifunctoriality", "triangles",
                             "cartesian", "conjecture"}));
  harness->add_option("--seed", seed, "generator seed (default 1)");
  harness->add_option("--sig", sig_path, "signature file for diagram suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(a_path, b_path, sig_path, model_path, trace);
    if (eval->parsed()) return cmd_eval(d_path, sig_path, model_path);
    if (parse->parsed())
      return cmd_parse(sentence, sig_path, lex_path, target_str, all, meaning);
    if (norm->parsed()) return cmd_normalize(d_path, sig_path, trace);
    if (render->parsed()) return cmd_render(d_path, sig_path, format, out_path);
    if (harness->parsed()) {
      std::optional<Signature> sig;
      if (!sig_path.empty()) sig = load_signature(sig_path);
      if (suite == "yanking") return harness_yanking(seed);
      if (suite == "bifunctoriality") return harness_bifunctoriality(seed);
      if (suite == "triangles") return harness_triangles(seed, sig);
      if (suite == "cartesian") return harness_cartesian(seed);
      return harness_conjecture(seed, sig);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
