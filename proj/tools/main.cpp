#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "gga/analysis.hpp"
#include "gga/dot.hpp"
#include "gga/format.hpp"

using namespace gga;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitUsage = 3;

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void writeFile(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
}

struct Workspace {
  Gga g;
  AugmentedDigraph aug;
  CoveringTree tree;
  Scaffolding s;
};

Workspace makeWorkspace(const std::string& file, std::string root, int radius) {
  Workspace w{parseAny(readFile(file)), {}, {}, {}};
  Diagnostics d = validateGga(w.g);
  if (!d.ok) throw Error("invalid gga: " + d.joined());
  w.aug = augment(w.g);
  if (root.empty()) root = w.g.base.vertexId(0);
  w.tree = buildStarCoveringTree(w.g, w.aug, root, radius);
  w.s = buildCanonical(w.g, w.aug, w.tree);
  return w;
}

std::vector<UniversalElement> enumerateFor(const Workspace& w, bool stabilizeRoot, long long cap) {
  EnumerationMode mode = EnumerationMode::RootStabilizer;
  if (!stabilizeRoot) {
    if (w.tree.finite()) {
      mode = EnumerationMode::FullIfFinite;
    } else {
      std::cerr << "note: covering tree is not finite at this radius; "
                   "using root-stabilizer mode\n";
    }
  }
  return enumerateUniversal(w.s, w.g, mode, cap);
}

std::string groupSummary(const Workspace& w, const std::vector<UniversalElement>& els) {
  bool abelian = true;
  for (size_t i = 0; i < els.size() && abelian; ++i)
    for (size_t j = i + 1; j < els.size() && abelian; ++j)
      if (!(composeElements(w.s, w.g, els[i], els[j]) ==
            composeElements(w.s, w.g, els[j], els[i])))
        abelian = false;
  std::map<int, int> hist;
  for (const auto& e : els) ++hist[elementOrder(w.s, w.g, e)];
  std::ostringstream out;
  out << "order " << els.size() << ", " << (abelian ? "abelian" : "non-abelian") << ", orders {";
  bool first = true;
  for (auto [ord, count] : hist) {
    out << (first ? "" : ",") << ord << ":" << count;
    first = false;
  }
  out << "}";
  return out.str();
}

int runValidate(const std::string& file) {
  Gga g = parseAny(readFile(file));
  Diagnostics d = validateGga(g);
  if (d.ok) {
    std::cout << "valid: " << g.name << " (" << g.base.vertexCount() << " vertices, "
              << g.base.arcCount() << " arcs)\n";
    return kExitPass;
  }
  for (const auto& issue : d.issues) std::cerr << "invalid: " << issue << "\n";
  return kExitFail;
}

int runAugment(const std::string& file) {
  Gga g = parseAny(readFile(file));
  Diagnostics d = validateGga(g);
  if (!d.ok) throw Error("invalid gga: " + d.joined());
  AugmentedDigraph aug = augment(g);
  std::cout << "augmented digraph for " << g.name << ": " << aug.plus.arcCount()
            << " arcs over " << g.base.arcCount() << " base arcs\n";
  for (int b = 0; b < aug.plus.arcCount(); ++b) {
    const PointSet& X = *g.vertexAction[aug.plus.terminus(b)].points();
    std::cout << "arc " << aug.plus.arcId(b) << " rho " << g.base.arcId(aug.rho[b])
              << " adhesion {";
    for (size_t i = 0; i < aug.adhesion[b].size(); ++i)
      std::cout << (i ? " " : "") << X.token(aug.adhesion[b][i]);
    std::cout << "} gamma " << aug.gamma[b].cycleString() << "\n";
  }
  return kExitPass;
}

int runTree(const std::string& file, const std::string& root, int radius,
            const std::string& dotOut) {
  Workspace w = makeWorkspace(file, root, radius);
  Diagnostics d = validateCoveringTree(w.tree, w.g, w.aug);
  if (!d.ok) throw Error("internal: covering tree invalid: " + d.joined());
  int interior = 0;
  std::map<int, int> levels;
  for (const auto& v : w.tree.verts) {
    interior += v.interior ? 1 : 0;
    ++levels[v.depth];
  }
  std::cout << "covering tree of " << w.g.name << ": root "
            << w.g.base.vertexId(w.tree.verts[0].deltaVertex) << " radius " << radius << "\n";
  std::cout << "vertices " << w.tree.verts.size() << " (interior " << interior << "), edges "
            << w.tree.arcs.size() / 2 << "\n";
  for (auto [depth, count] : levels) std::cout << "level " << depth << ": " << count << "\n";
  if (!dotOut.empty()) writeFile(dotOut, dotTree(w.g, w.aug, w.tree));
  return kExitPass;
}

int runScaffold(const std::string& file, const std::string& root, int radius,
                const std::string& dotOut, const std::string& scafOut) {
  Workspace w = makeWorkspace(file, root, radius);
  Diagnostics d = checkScaffolding(w.s, w.g);
  std::cout << "scaffolding of " << w.g.name << ": " << w.s.verts.size() << " vertices, "
            << w.s.arcs.size() / 2 << " edges, " << w.s.bundles.size() << " bundles\n";
  std::cout << "checker: " << (d.ok ? "pass" : d.joined()) << "\n";
  if (!dotOut.empty()) writeFile(dotOut, dotScaffold(w.s, w.g));
  if (!scafOut.empty()) writeFile(scafOut, serializeScaffolding(w.s, w.g));
  return d.ok ? kExitPass : kExitFail;
}

int runEnumerate(const std::string& file, const std::string& root, int radius, bool stabilizeRoot,
                 long long cap) {
  Workspace w = makeWorkspace(file, root, radius);
  auto els = enumerateFor(w, stabilizeRoot, cap);
  std::cout << groupSummary(w, els) << "\n";
  for (size_t i = 0; i < els.size(); ++i) {
    std::cout << "element " << i + 1 << ":\n";
    std::cout << serializeElement(w.s, w.g, els[i]);
  }
  return kExitPass;
}

int runQuotient(const std::string& file, const std::string& root, int radius) {
  Workspace w = makeWorkspace(file, root, radius);
  QuotientCheckResult q = quotientCheck(w.s, w.g);
  if (!q.decided) {
    std::cout << "[QUOTIENT] UNDECIDED " << q.detail << "\n";
    return kExitUndecided;
  }
  std::cout << "[QUOTIENT] " << (q.ok ? "PASS " : "FAIL ") << q.detail << "\n";
  return q.ok ? kExitPass : kExitFail;
}

int runCheckScaffolding(const std::string& file, const std::string& scafFile) {
  Gga g = parseAny(readFile(file));
  Diagnostics dg = validateGga(g);
  if (!dg.ok) throw Error("invalid gga: " + dg.joined());
  Scaffolding s = parseScaffolding(readFile(scafFile), g);
  Diagnostics d = checkScaffolding(s, g);
  if (d.ok) {
    std::cout << "scaffolding valid\n";
    return kExitPass;
  }
  for (const auto& issue : d.issues) std::cout << "scaffolding invalid: " << issue << "\n";
  return kExitFail;
}

int runTransform(const std::string& which, const std::string& file, const std::string& out) {
  Gga g = parseAny(readFile(file));
  Diagnostics d = validateGga(g);
  if (!d.ok) throw Error("invalid gga: " + d.joined());
  Gga result = which == "reduce"       ? reduceGga(g)
               : which == "arc-reduce" ? arcReduceGga(g)
                                       : subdivideSelfReverse(g).gga;
  writeFile(out, serializeGga(result));
  std::cout << "wrote " << result.name << " to " << out << "\n";
  return kExitPass;
}

int runConvert(const std::string& from, const std::string& file, const std::string& out) {
  std::string text = readFile(file);
  Gga g;
  if (from == "bm") g = parseBm(text);
  else if (from == "box") g = parseBox(text);
  else if (from == "gog") g = parseGog(text);
  else if (from == "lad") g = fromLocalActionDiagram(parseLad(text));
  else throw Error("unknown converter '" + from + "'");
  Diagnostics d = validateGga(g);
  if (!d.ok) throw Error("conversion produced an invalid gga: " + d.joined());
  writeFile(out, serializeGga(g));
  std::cout << "wrote " << g.name << " to " << out << "\n";
  return kExitPass;
}

int runAnalyze(const std::string& what, const std::string& file, const std::string& root,
               int radius, long long cap) {
  Workspace w = makeWorkspace(file, root, radius);

  if (what == "subdeg") {
    SubdegreeReport rep = subdegreeReport(w.g);
    std::cout << rep.text();
    return rep.treeActionSubdegreeFinite && rep.scaffoldingActionSubdegreeFinite ? kExitPass
                                                                                 : kExitFail;
  }

  auto els = enumerateUniversal(w.s, w.g, EnumerationMode::RootStabilizer, cap);

  if (what == "p") {
    Verdict overall = Verdict::Pass;
    for (const auto& ab : w.s.abundles) {
      if (ab.terminus != 0) continue;
      if (!w.s.bundles[ab.origin].interior) continue;
      PropertyPResult r = propertyPCheck(w.s, w.g, els, {0, ab.origin});
      std::cout << "[P] path " << w.s.bundles[0].id << " -- " << w.s.bundles[ab.origin].id << " "
                << verdictWord(r.verdict) << " " << r.detail << "\n";
      if (r.verdict == Verdict::Fail) overall = Verdict::Fail;
      else if (r.verdict == Verdict::Undecided && overall == Verdict::Pass)
        overall = Verdict::Undecided;
    }
    std::cout << "[P] OVERALL " << verdictWord(overall) << "\n";
    return overall == Verdict::Pass ? kExitPass
           : overall == Verdict::Fail ? kExitFail
                                      : kExitUndecided;
  }
  if (what == "ipk") {
    bool allStable = true;
    bool any = false;
    for (int ab = 0; ab < static_cast<int>(w.s.abundles.size()); ++ab) {
      if (w.s.abundles[ab].terminus != 0) continue;
      if (!w.s.bundles[w.s.abundles[ab].origin].interior) continue;
      IpkChain chain = ipkDetect(w.s, w.g, els, ab, radius);
      any = true;
      std::cout << "[IPK] bundle " << w.s.abundles[ab].id;
      if (chain.stabilized) std::cout << " k=" << chain.k;
      else std::cout << " not-stabilized (" << chain.note << ")";
      std::cout << " orders";
      for (int o : chain.orders) std::cout << " " << o;
      std::cout << "\n";
      allStable &= chain.stabilized;
    }
    std::cout << "[IPK] note: single-edge form only; equivalent to the thick-path "
                 "independence property for closed groups\n";
    std::cout << "[IPK] note: fixed-end and invariant-subtree hypotheses are not checked\n";
    std::cout << "[IPK] OVERALL " << (any && allStable ? "PASS" : "UNDECIDED") << "\n";
    return any && allStable ? kExitPass : kExitUndecided;
  }
  if (what == "parity") {
    ParityResult r = parityCheck(w.s, els);
    std::cout << "[PARITY] " << (r.allEqual ? "PASS" : "FAIL")
              << " (both parities occur: " << (r.bothParities ? "yes" : "no") << ")\n";
    return r.allEqual ? kExitPass : kExitFail;
  }
  if (what == "constant-local") {
    bool ok = constantLocalActionCheck(w.s, els);
    std::cout << "[CONSTLOC] " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? kExitPass : kExitFail;
  }
  throw Error("unknown analysis '" + what + "'");
}

int runRender(const std::string& file, const std::string& what, const std::string& root,
              int radius, const std::string& dotOut) {
  Workspace w = makeWorkspace(file, root, radius);
  std::string dot;
  if (what == "base") dot = dotBase(w.g);
  else if (what == "augmented") dot = dotAugmented(w.g, w.aug);
  else if (what == "tree") dot = dotTree(w.g, w.aug, w.tree);
  else if (what == "scaffold") dot = dotScaffold(w.s, w.g);
  else if (what == "tplus") dot = dotTPlus(collapseToTPlus(w.s));
  else throw Error("unknown render target '" + what + "'");
  writeFile(dotOut, dot);
  std::cout << "wrote " << what << " rendering to " << dotOut << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graphs of group actions: scaffoldings, universal groups, property checks"};
  app.require_subcommand(1);

  std::string file, root, dotOut, scafOut, outFile, scafFile, from, what;
  int radius = 2;
  long long cap = 1000000;
  bool stabilizeRoot = false;

  auto* validate = app.add_subcommand("validate", "validate a gga file");
  validate->add_option("file", file)->required();

  auto* augmentCmd = app.add_subcommand("augment", "print the augmented base digraph table");
  augmentCmd->add_option("file", file)->required();

  auto* tree = app.add_subcommand("tree", "build the truncated Star-covering tree");
  tree->add_option("file", file)->required();
  tree->add_option("--root", root, "root base vertex (default: first declared)");
  tree->add_option("--radius", radius, "truncation radius");
  tree->add_option("--dot", dotOut, "write a DOT rendering");

  auto* scaffold = app.add_subcommand("scaffold", "build the canonical scaffolding");
  scaffold->add_option("file", file)->required();
  scaffold->add_option("--root", root);
  scaffold->add_option("--radius", radius);
  scaffold->add_option("--dot", dotOut);
  scaffold->add_option("--out", scafOut, "write the scaffolding in text form");

  auto* enumerate = app.add_subcommand("enumerate", "enumerate universal-group elements");
  enumerate->add_option("file", file)->required();
  enumerate->add_option("--root", root);
  enumerate->add_option("--radius", radius);
  enumerate->add_flag("--stabilize-root", stabilizeRoot, "restrict to the root stabilizer");
  enumerate->add_option("--cap", cap, "element count guard");

  auto* quotientCmd = app.add_subcommand("quotient", "check the tree quotient against the base");
  quotientCmd->add_option("file", file)->required();
  quotientCmd->add_option("--root", root);
  quotientCmd->add_option("--radius", radius);

  auto* check = app.add_subcommand("check-scaffolding", "validate a scaffolding file");
  check->add_option("file", file)->required();
  check->add_option("scaffold", scafFile)->required();

  auto* reduce = app.add_subcommand("reduce", "write the reduced gga");
  reduce->add_option("file", file)->required();
  reduce->add_option("-o,--out", outFile)->required();

  auto* arcReduce = app.add_subcommand("arc-reduce", "write the arc-reduced gga");
  arcReduce->add_option("file", file)->required();
  arcReduce->add_option("-o,--out", outFile)->required();

  auto* subdivide = app.add_subcommand("subdivide", "remove self-reverse arcs by subdivision");
  subdivide->add_option("file", file)->required();
  subdivide->add_option("-o,--out", outFile)->required();

  auto* convert = app.add_subcommand("convert", "convert a sub-format into a gga file");
  convert->add_option("--from", from, "bm|box|gog|lad")->required();
  convert->add_option("file", file)->required();
  convert->add_option("-o,--out", outFile)->required();

  auto* analyze = app.add_subcommand("analyze", "property checks at the truncation");
  analyze->add_option("what", what, "p|ipk|subdeg|parity|constant-local")->required();
  analyze->add_option("file", file)->required();
  analyze->add_option("--root", root);
  analyze->add_option("--radius", radius);
  analyze->add_option("--cap", cap);

  auto* render = app.add_subcommand("render", "DOT renderings");
  render->add_option("file", file)->required();
  render->add_option("--what", what, "base|augmented|tree|scaffold|tplus")->required();
  render->add_option("--root", root);
  render->add_option("--radius", radius);
  render->add_option("--dot", dotOut)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (app.got_subcommand(validate)) return runValidate(file);
    if (app.got_subcommand(augmentCmd)) return runAugment(file);
    if (app.got_subcommand(tree)) return runTree(file, root, radius, dotOut);
    if (app.got_subcommand(scaffold)) return runScaffold(file, root, radius, dotOut, scafOut);
    if (app.got_subcommand(enumerate)) return runEnumerate(file, root, radius, stabilizeRoot, cap);
    if (app.got_subcommand(quotientCmd)) return runQuotient(file, root, radius);
    if (app.got_subcommand(check)) return runCheckScaffolding(file, scafFile);
    if (app.got_subcommand(reduce)) return runTransform("reduce", file, outFile);
    if (app.got_subcommand(arcReduce)) return runTransform("arc-reduce", file, outFile);
    if (app.got_subcommand(subdivide)) return runTransform("subdivide", file, outFile);
    if (app.got_subcommand(convert)) return runConvert(from, file, outFile);
    if (app.got_subcommand(analyze)) return runAnalyze(what, file, root, radius, cap);
    if (app.got_subcommand(render)) return runRender(file, what, root, radius, dotOut);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitFail;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
