#include "gga/format.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace gga {

namespace {

struct Line {
  int number;
  std::string keyword;
  std::string rest;
};

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> splitWs(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string> splitSemicolons(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ';') {
      if (!trim(cur).empty()) out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

std::vector<Line> scan(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int n = 0;
  while (std::getline(in, raw)) {
    ++n;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (raw.empty()) continue;
    size_t sp = raw.find_first_of(" \t");
    std::string kw = sp == std::string::npos ? raw : raw.substr(0, sp);
    std::string rest = sp == std::string::npos ? "" : trim(raw.substr(sp));
    if (!kw.empty() && kw.back() == ':') kw.pop_back();
    lines.push_back({n, kw, rest});
  }
  return lines;
}

struct ArcBlock {
  int line = 0;
  std::string id, from, to, reverse;
  std::vector<std::string> points;
  std::vector<std::string> gens;
  std::vector<std::pair<std::string, std::string>> embed;
  std::string inversion;
  bool hasPoints = false, hasGens = false, hasEmbed = false, hasInversion = false;
  std::vector<std::string> hom;  // gog generator images
};

struct VertexBlock {
  int line = 0;
  std::string id;
  std::vector<std::string> points;
  std::vector<std::string> gens;
  bool hasPoints = false;
};

struct Document {
  std::string format;
  std::string name;
  std::vector<VertexBlock> vertices;
  std::vector<ArcBlock> arcs;
  std::map<std::string, std::pair<int, std::string>> loose;  // bm/box payload lines
};

std::vector<std::pair<std::string, std::string>> parseArrowPairs(int line, const std::string& s) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& tok : splitWs(s)) {
    size_t arrow = tok.find("->");
    if (arrow == std::string::npos)
      throw ParseError(line, "expected 'from->to' pairs, got '" + tok + "'");
    std::string a = tok.substr(0, arrow), b = tok.substr(arrow + 2);
    if (a.empty() || b.empty()) throw ParseError(line, "malformed pair '" + tok + "'");
    out.emplace_back(a, b);
  }
  return out;
}

Document parseDocument(const std::string& text) {
  std::vector<Line> lines = scan(text);
  if (lines.empty()) throw ParseError(1, "empty document");
  Document doc;
  doc.format = lines[0].keyword;
  doc.name = lines[0].rest;
  if (doc.name.empty())
    throw ParseError(lines[0].number, "missing name after '" + doc.format + "'");

  VertexBlock* curV = nullptr;
  ArcBlock* curA = nullptr;
  for (size_t i = 1; i < lines.size(); ++i) {
    const Line& ln = lines[i];
    if (doc.format == "bm" || doc.format == "box") {
      doc.loose[ln.keyword] = {ln.number, ln.rest};
      continue;
    }
    if (ln.keyword == "vertex" || ln.keyword == "vgroup") {
      auto toks = splitWs(ln.rest);
      if (toks.size() != 1) throw ParseError(ln.number, "expected '" + ln.keyword + " ID'");
      doc.vertices.push_back({ln.number, toks[0], {}, {}, false});
      curV = &doc.vertices.back();
      curA = nullptr;
    } else if (ln.keyword == "arc") {
      auto toks = splitWs(ln.rest);
      // arc ID from U to V reverse RID
      if (toks.size() != 7 || toks[1] != "from" || toks[3] != "to" || toks[5] != "reverse")
        throw ParseError(ln.number, "expected 'arc ID from U to V reverse RID'");
      ArcBlock b;
      b.line = ln.number;
      b.id = toks[0];
      b.from = toks[2];
      b.to = toks[4];
      b.reverse = toks[6];
      doc.arcs.push_back(std::move(b));
      curA = &doc.arcs.back();
      curV = nullptr;
    } else if (ln.keyword == "points") {
      if (curA) {
        curA->points = splitWs(ln.rest);
        curA->hasPoints = true;
      } else if (curV) {
        curV->points = splitWs(ln.rest);
        curV->hasPoints = true;
      } else {
        throw ParseError(ln.number, "'points:' outside a vertex or arc block");
      }
    } else if (ln.keyword == "gens") {
      if (curA) {
        curA->gens = splitSemicolons(ln.rest);
        curA->hasGens = true;
      } else if (curV) {
        curV->gens = splitSemicolons(ln.rest);
      } else {
        throw ParseError(ln.number, "'gens:' outside a vertex or arc block");
      }
    } else if (ln.keyword == "embed") {
      if (!curA) throw ParseError(ln.number, "'embed:' outside an arc block");
      curA->embed = parseArrowPairs(ln.number, ln.rest);
      curA->hasEmbed = true;
    } else if (ln.keyword == "inversion") {
      if (!curA) throw ParseError(ln.number, "'inversion:' outside an arc block");
      curA->inversion = trim(ln.rest);
      curA->hasInversion = true;
    } else if (ln.keyword == "hom") {
      if (!curA) throw ParseError(ln.number, "'hom:' outside an arc block");
      curA->hom = splitSemicolons(ln.rest);
    } else if (doc.format == "bm" || doc.format == "box") {
      doc.loose[ln.keyword] = {ln.number, ln.rest};
    } else {
      throw ParseError(ln.number, "unknown keyword '" + ln.keyword + "'");
    }
  }
  return doc;
}

SerreGraph buildBaseGraph(const Document& doc) {
  std::vector<std::string> vertices;
  for (const auto& v : doc.vertices) vertices.push_back(v.id);
  std::vector<ArcDecl> decls;
  for (const auto& a : doc.arcs) decls.push_back({a.id, a.from, a.to, a.reverse});
  try {
    return SerreGraph::make(vertices, decls);
  } catch (const Error& e) {
    throw ParseError(doc.arcs.empty() ? 1 : doc.arcs.front().line, e.what());
  }
}

std::vector<Permutation> parseGens(int line, PointSetPtr pts,
                                   const std::vector<std::string>& texts) {
  std::vector<Permutation> out;
  for (const auto& t : texts) {
    try {
      out.push_back(Permutation::fromCycles(pts, t));
    } catch (const Error& e) {
      throw ParseError(line, e.what());
    }
  }
  return out;
}

}  // namespace

Gga parseGga(const std::string& text) {
  Document doc = parseDocument(text);
  if (doc.format != "gga") throw ParseError(1, "expected a 'gga' document");
  Gga g;
  g.name = doc.name;
  g.base = buildBaseGraph(doc);

  std::set<std::string> ids;
  for (const auto& v : doc.vertices)
    if (!ids.insert(v.id).second) throw ParseError(v.line, "duplicate id '" + v.id + "'");
  for (const auto& a : doc.arcs)
    if (!ids.insert(a.id).second) throw ParseError(a.line, "duplicate id '" + a.id + "'");

  // vertex actions
  std::vector<PointSetPtr> xs(g.base.vertexCount());
  for (const auto& vb : doc.vertices) {
    int v = g.base.vertexIndex(vb.id);
    if (!vb.hasPoints) throw ParseError(vb.line, "vertex '" + vb.id + "' has no points");
    try {
      xs[v] = PointSet::make(vb.id, vb.points);
    } catch (const Error& e) {
      throw ParseError(vb.line, e.what());
    }
    g.vertexAction.push_back(PermAction::make(xs[v], parseGens(vb.line, xs[v], vb.gens)));
  }
  if (static_cast<int>(g.vertexAction.size()) != g.base.vertexCount())
    throw ParseError(1, "some declared vertex has no block");

  // arc actions; the reverse pair shares one point set declared on the first
  std::vector<const ArcBlock*> blockOf(g.base.arcCount(), nullptr);
  for (const auto& ab : doc.arcs) blockOf[g.base.arcIndex(ab.id)] = &ab;
  std::vector<PointSetPtr> ys(g.base.arcCount());
  std::vector<std::optional<PermAction>> acts(g.base.arcCount());
  for (int a = 0; a < g.base.arcCount(); ++a) {
    const ArcBlock& ab = *blockOf[a];
    int r = g.base.reverse(a);
    if (acts[a]) continue;  // already built via the reverse
    const ArcBlock& first = ab;
    if (!first.hasPoints)
      throw ParseError(first.line, "arc '" + first.id + "' (first of its pair) declares no points");
    try {
      ys[a] = PointSet::make(first.id, first.points);
    } catch (const Error& e) {
      throw ParseError(first.line, e.what());
    }
    acts[a] = PermAction::make(ys[a], parseGens(first.line, ys[a], first.gens));
    if (r != a) {
      const ArcBlock& second = *blockOf[r];
      if (second.hasPoints && second.points != first.points)
        throw ParseError(second.line, "points of arc '" + second.id + "' differ from its reverse");
      if (second.hasGens && second.gens != first.gens)
        throw ParseError(second.line, "gens of arc '" + second.id + "' differ from its reverse");
      ys[r] = ys[a];
      acts[r] = acts[a];
    }
  }
  for (int a = 0; a < g.base.arcCount(); ++a) g.arcAction.push_back(*acts[a]);

  // embeddings
  g.embedding.resize(g.base.arcCount());
  for (int a = 0; a < g.base.arcCount(); ++a) {
    const ArcBlock& ab = *blockOf[a];
    if (!ab.hasEmbed) throw ParseError(ab.line, "arc '" + ab.id + "' has no embed line");
    const PointSet& Y = *ys[a];
    const PointSet& X = *xs[g.base.terminus(a)];
    std::vector<int> map(Y.size(), -1);
    std::set<int> used;
    int assigned = 0;
    for (const auto& [from, to] : ab.embed) {
      int y = Y.indexOf(from);
      if (y < 0) throw ParseError(ab.line, "embed source '" + from + "' is not an arc point");
      int x = X.indexOf(to);
      if (x < 0) throw ParseError(ab.line, "embed target '" + to + "' is not a vertex point");
      if (map[y] >= 0) throw ParseError(ab.line, "embed maps '" + from + "' twice");
      if (!used.insert(x).second) throw ParseError(ab.line, "embed is not injective at '" + to + "'");
      map[y] = x;
      ++assigned;
    }
    if (assigned != Y.size()) throw ParseError(ab.line, "embed does not cover all arc points");
    g.embedding[a] = std::move(map);
  }

  // inversion agents (default: identity)
  for (int a = 0; a < g.base.arcCount(); ++a) {
    const ArcBlock& ab = *blockOf[a];
    if (!g.base.selfReverse(a)) {
      if (ab.hasInversion)
        throw ParseError(ab.line, "inversion line on non-self-reverse arc '" + ab.id + "'");
      continue;
    }
    if (!ab.hasInversion) {
      g.inversionAgent.emplace(a, Permutation::identity(ys[a]));
    } else {
      try {
        g.inversionAgent.emplace(a, Permutation::fromCycles(ys[a], ab.inversion));
      } catch (const Error& e) {
        throw ParseError(ab.line, e.what());
      }
    }
  }
  return g;
}

std::string serializeGga(const Gga& g) {
  std::ostringstream out;
  out << "gga " << g.name << "\n";
  for (int v = 0; v < g.base.vertexCount(); ++v) {
    out << "vertex " << g.base.vertexId(v) << "\n";
    out << "points:";
    for (const auto& t : g.vertexAction[v].points()->tokens()) out << " " << t;
    out << "\n";
    out << "gens:";
    bool first = true;
    for (const auto& gen : g.vertexAction[v].generators()) {
      out << (first ? " " : " ; ") << gen.cycleString();
      first = false;
    }
    out << "\n";
  }
  for (int a = 0; a < g.base.arcCount(); ++a) {
    out << "arc " << g.base.arcId(a) << " from " << g.base.vertexId(g.base.origin(a)) << " to "
        << g.base.vertexId(g.base.terminus(a)) << " reverse " << g.base.arcId(g.base.reverse(a))
        << "\n";
    if (g.base.reverse(a) >= a) {  // first of the pair carries points and gens
      out << "points:";
      for (const auto& t : g.arcAction[a].points()->tokens()) out << " " << t;
      out << "\n";
      out << "gens:";
      bool first = true;
      for (const auto& gen : g.arcAction[a].generators()) {
        out << (first ? " " : " ; ") << gen.cycleString();
        first = false;
      }
      out << "\n";
    }
    out << "embed:";
    const PointSet& Y = *g.arcAction[a].points();
    const PointSet& X = *g.vertexAction[g.base.terminus(a)].points();
    for (int y = 0; y < Y.size(); ++y)
      out << " " << Y.token(y) << "->" << X.token(g.embedding[a][y]);
    out << "\n";
    if (g.base.selfReverse(a))
      out << "inversion: " << g.inversionAgent.at(a).cycleString() << "\n";
  }
  return out.str();
}

Gga parseBm(const std::string& text) {
  Document doc = parseDocument(text);
  if (doc.format != "bm") throw ParseError(1, "expected a 'bm' document");
  auto pIt = doc.loose.find("points");
  if (pIt == doc.loose.end()) throw ParseError(1, "bm: missing 'points:' line");
  PointSetPtr pts;
  try {
    pts = PointSet::make("F", splitWs(pIt->second.second));
  } catch (const Error& e) {
    throw ParseError(pIt->second.first, e.what());
  }
  std::vector<std::string> genTexts;
  auto gIt = doc.loose.find("gens");
  if (gIt != doc.loose.end()) genTexts = splitSemicolons(gIt->second.second);
  PermAction f = PermAction::make(pts, parseGens(gIt == doc.loose.end() ? 1 : gIt->second.first,
                                                 pts, genTexts));
  return fromBurgerMozes(doc.name, f);
}

Gga parseBox(const std::string& text) {
  Document doc = parseDocument(text);
  if (doc.format != "box") throw ParseError(1, "expected a 'box' document");
  auto need = [&](const std::string& key) -> std::pair<int, std::string> {
    auto it = doc.loose.find(key);
    if (it == doc.loose.end()) throw ParseError(1, "box: missing '" + key + ":' line");
    return it->second;
  };
  auto makeSide = [&](const std::string& owner, const std::string& pKey, const std::string& gKey) {
    auto [pl, ptext] = need(pKey);
    PointSetPtr pts;
    try {
      pts = PointSet::make(owner, splitWs(ptext));
    } catch (const Error& e) {
      throw ParseError(pl, e.what());
    }
    auto it = doc.loose.find(gKey);
    std::vector<std::string> genTexts =
        it == doc.loose.end() ? std::vector<std::string>{} : splitSemicolons(it->second.second);
    return PermAction::make(pts, parseGens(it == doc.loose.end() ? pl : it->second.first, pts,
                                           genTexts));
  };
  PermAction m = makeSide("M", "m-points", "m-gens");
  PermAction n = makeSide("N", "n-points", "n-gens");
  return fromBoxProduct(doc.name, m, n);
}

Gga parseGog(const std::string& text) {
  Document doc = parseDocument(text);
  if (doc.format != "gog") throw ParseError(1, "expected a 'gog' document");
  GraphOfGroups gog;
  gog.name = doc.name;
  gog.base = buildBaseGraph(doc);

  std::vector<PointSetPtr> vps(gog.base.vertexCount());
  for (const auto& vb : doc.vertices) {
    int v = gog.base.vertexIndex(vb.id);
    if (!vb.hasPoints) throw ParseError(vb.line, "vgroup '" + vb.id + "' has no points");
    try {
      vps[v] = PointSet::make(vb.id, vb.points);
    } catch (const Error& e) {
      throw ParseError(vb.line, e.what());
    }
    gog.vertexGroup.push_back(PermAction::make(vps[v], parseGens(vb.line, vps[v], vb.gens)));
  }

  std::vector<const ArcBlock*> blockOf(gog.base.arcCount(), nullptr);
  for (const auto& ab : doc.arcs) blockOf[gog.base.arcIndex(ab.id)] = &ab;
  std::vector<std::optional<PermAction>> acts(gog.base.arcCount());
  for (int a = 0; a < gog.base.arcCount(); ++a) {
    if (acts[a]) continue;
    const ArcBlock& ab = *blockOf[a];
    if (!ab.hasPoints)
      throw ParseError(ab.line, "arc '" + ab.id + "' (first of its pair) declares no points");
    PointSetPtr pts;
    try {
      pts = PointSet::make(ab.id, ab.points);
    } catch (const Error& e) {
      throw ParseError(ab.line, e.what());
    }
    acts[a] = PermAction::make(pts, parseGens(ab.line, pts, ab.gens));
    int r = gog.base.reverse(a);
    if (r != a) acts[r] = acts[a];
  }
  for (int a = 0; a < gog.base.arcCount(); ++a) gog.arcGroup.push_back(*acts[a]);

  gog.hom.resize(gog.base.arcCount());
  for (int a = 0; a < gog.base.arcCount(); ++a) {
    const ArcBlock& ab = *blockOf[a];
    int t = gog.base.terminus(a);
    if (ab.hom.size() != gog.arcGroup[a].generators().size())
      throw ParseError(ab.line, "hom of arc '" + ab.id + "' must list one image per generator");
    for (const auto& imText : ab.hom) {
      try {
        gog.hom[a].push_back(Permutation::fromCycles(vps[t], imText));
      } catch (const Error& e) {
        throw ParseError(ab.line, e.what());
      }
    }
  }
  try {
    return fromGraphOfGroups(gog);
  } catch (const Error& e) {
    throw ParseError(1, e.what());
  }
}

LadDescription parseLad(const std::string& text) {
  Document doc = parseDocument(text);
  if (doc.format != "lad") throw ParseError(1, "expected a 'lad' document");
  LadDescription lad;
  lad.name = doc.name;
  lad.graph = buildBaseGraph(doc);

  std::vector<const ArcBlock*> blockOf(lad.graph.arcCount(), nullptr);
  for (const auto& ab : doc.arcs) blockOf[lad.graph.arcIndex(ab.id)] = &ab;
  lad.arcPoints.resize(lad.graph.arcCount());
  for (int a = 0; a < lad.graph.arcCount(); ++a) {
    const ArcBlock& ab = *blockOf[a];
    if (!ab.hasPoints) throw ParseError(ab.line, "lad arc '" + ab.id + "' has no points");
    lad.arcPoints[a] = ab.points;
  }
  lad.vertexGens.resize(lad.graph.vertexCount());
  for (const auto& vb : doc.vertices) {
    int v = lad.graph.vertexIndex(vb.id);
    if (vb.hasPoints)
      throw ParseError(vb.line, "lad vertex '" + vb.id + "' must not declare points");
    lad.vertexGens[v] = vb.gens;
  }
  return lad;
}

Gga parseAny(const std::string& text) {
  std::vector<Line> lines = scan(text);
  if (lines.empty()) throw ParseError(1, "empty document");
  const std::string& fmt = lines[0].keyword;
  if (fmt == "gga") return parseGga(text);
  if (fmt == "bm") return parseBm(text);
  if (fmt == "box") return parseBox(text);
  if (fmt == "gog") return parseGog(text);
  if (fmt == "lad") return fromLocalActionDiagram(parseLad(text));
  throw ParseError(lines[0].number, "unknown document format '" + fmt + "'");
}

std::string serializeLad(const LadDescription& lad) {
  std::ostringstream out;
  out << "lad " << lad.name << "\n";
  for (int v = 0; v < lad.graph.vertexCount(); ++v) {
    out << "vertex " << lad.graph.vertexId(v) << "\n";
    out << "gens:";
    bool first = true;
    for (const auto& gen : lad.vertexGens[v]) {
      out << (first ? " " : " ; ") << gen;
      first = false;
    }
    out << "\n";
  }
  for (int a = 0; a < lad.graph.arcCount(); ++a) {
    out << "arc " << lad.graph.arcId(a) << " from " << lad.graph.vertexId(lad.graph.origin(a))
        << " to " << lad.graph.vertexId(lad.graph.terminus(a)) << " reverse "
        << lad.graph.arcId(lad.graph.reverse(a)) << "\n";
    out << "points:";
    for (const auto& t : lad.arcPoints[a]) out << " " << t;
    out << "\n";
  }
  return out.str();
}

std::string serializeScaffolding(const Scaffolding& s, const Gga& g) {
  std::ostringstream out;
  out << "scaffolding over " << s.ggaName << "\n";
  for (const auto& b : s.bundles)
    out << "bundle " << b.id << " pi " << g.base.vertexId(b.piVertex) << " interior "
        << (b.interior ? 1 : 0) << " parent " << (b.parent < 0 ? "-" : s.bundles[b.parent].id)
        << "\n";
  for (const auto& ab : s.abundles)
    out << "abundle " << ab.id << " from " << s.bundles[ab.origin].id << " to "
        << s.bundles[ab.terminus].id << " reverse " << s.abundles[ab.reverse].id << " pi "
        << g.base.arcId(ab.piArc) << "\n";
  for (const auto& v : s.verts)
    out << "svertex " << v.id << " bundle " << s.bundles[v.bundle].id << " point "
        << g.vertexAction[s.bundles[v.bundle].piVertex].points()->token(v.point) << "\n";
  for (const auto& a : s.arcs)
    out << "sarc " << a.id << " abundle " << s.abundles[a.abundle].id << " point "
        << g.arcAction[s.abundles[a.abundle].piArc].points()->token(a.point) << " from "
        << s.verts[a.origin].id << " to " << s.verts[a.terminus].id << " reverse "
        << s.arcs[a.reverse].id << "\n";
  return out.str();
}

Scaffolding parseScaffolding(const std::string& text, const Gga& g) {
  std::vector<Line> lines = scan(text);
  if (lines.empty() || lines[0].keyword != "scaffolding")
    throw ParseError(1, "expected a 'scaffolding' document");
  Scaffolding s;
  {
    auto toks = splitWs(lines[0].rest);
    if (toks.size() != 2 || toks[0] != "over")
      throw ParseError(lines[0].number, "expected 'scaffolding over NAME'");
    s.ggaName = toks[1];
  }
  std::map<std::string, int> bundleIdx, abundleIdx, vertIdx, arcIdx;
  std::vector<std::pair<int, std::string>> bundleParents, abundleReverses, arcReverses;

  for (size_t i = 1; i < lines.size(); ++i) {
    const Line& ln = lines[i];
    auto toks = splitWs(ln.rest);
    if (ln.keyword == "bundle") {
      // bundle ID pi V interior 0|1 parent P|-
      if (toks.size() != 7 || toks[1] != "pi" || toks[3] != "interior" || toks[5] != "parent")
        throw ParseError(ln.number, "expected 'bundle ID pi V interior B parent P'");
      int pv = g.base.vertexIndex(toks[2]);
      if (pv < 0) throw ParseError(ln.number, "unknown base vertex '" + toks[2] + "'");
      bundleIdx[toks[0]] = static_cast<int>(s.bundles.size());
      bundleParents.emplace_back(static_cast<int>(s.bundles.size()), toks[6]);
      s.bundles.push_back({toks[0], pv, toks[4] == "1", -1});
    } else if (ln.keyword == "abundle") {
      if (toks.size() != 9 || toks[1] != "from" || toks[3] != "to" || toks[5] != "reverse" ||
          toks[7] != "pi")
        throw ParseError(ln.number, "expected 'abundle ID from B to B reverse R pi A'");
      auto fromIt = bundleIdx.find(toks[2]);
      auto toIt = bundleIdx.find(toks[4]);
      if (fromIt == bundleIdx.end() || toIt == bundleIdx.end())
        throw ParseError(ln.number, "abundle references an unknown bundle");
      int pa = g.base.arcIndex(toks[8]);
      if (pa < 0) throw ParseError(ln.number, "unknown base arc '" + toks[8] + "'");
      abundleIdx[toks[0]] = static_cast<int>(s.abundles.size());
      abundleReverses.emplace_back(static_cast<int>(s.abundles.size()), toks[6]);
      s.abundles.push_back({toks[0], fromIt->second, toIt->second, -1, pa, -1});
    } else if (ln.keyword == "svertex") {
      if (toks.size() != 5 || toks[1] != "bundle" || toks[3] != "point")
        throw ParseError(ln.number, "expected 'svertex ID bundle B point P'");
      auto bIt = bundleIdx.find(toks[2]);
      if (bIt == bundleIdx.end()) throw ParseError(ln.number, "unknown bundle '" + toks[2] + "'");
      int pt = g.vertexAction[s.bundles[bIt->second].piVertex].points()->indexOf(toks[4]);
      if (pt < 0) throw ParseError(ln.number, "unknown point token '" + toks[4] + "'");
      vertIdx[toks[0]] = static_cast<int>(s.verts.size());
      s.verts.push_back({toks[0], bIt->second, pt});
    } else if (ln.keyword == "sarc") {
      // sarc ID abundle A point P from V to W reverse R
      if (toks.size() != 11 || toks[1] != "abundle" || toks[3] != "point" || toks[5] != "from" ||
          toks[7] != "to" || toks[9] != "reverse")
        throw ParseError(ln.number, "expected 'sarc ID abundle A point P from V to W reverse R'");
      auto abIt = abundleIdx.find(toks[2]);
      if (abIt == abundleIdx.end())
        throw ParseError(ln.number, "unknown abundle '" + toks[2] + "'");
      int pt = g.arcAction[s.abundles[abIt->second].piArc].points()->indexOf(toks[4]);
      if (pt < 0) throw ParseError(ln.number, "unknown arc point token '" + toks[4] + "'");
      auto oIt = vertIdx.find(toks[6]);
      auto tIt = vertIdx.find(toks[8]);
      if (oIt == vertIdx.end() || tIt == vertIdx.end())
        throw ParseError(ln.number, "sarc references an unknown scaffold vertex");
      arcIdx[toks[0]] = static_cast<int>(s.arcs.size());
      arcReverses.emplace_back(static_cast<int>(s.arcs.size()), toks[10]);
      s.arcs.push_back({toks[0], abIt->second, pt, oIt->second, tIt->second, -1});
    } else {
      throw ParseError(ln.number, "unknown keyword '" + ln.keyword + "'");
    }
  }
  // resolve deferred references
  for (auto& [idx, parent] : bundleParents) {
    if (parent == "-") continue;
    auto it = bundleIdx.find(parent);
    if (it == bundleIdx.end()) throw ParseError(1, "unknown parent bundle '" + parent + "'");
    s.bundles[idx].parent = it->second;
  }
  for (auto& [idx, rev] : abundleReverses) {
    auto it = abundleIdx.find(rev);
    if (it == abundleIdx.end()) throw ParseError(1, "unknown reverse abundle '" + rev + "'");
    s.abundles[idx].reverse = it->second;
  }
  for (auto& [idx, rev] : arcReverses) {
    auto it = arcIdx.find(rev);
    if (it == arcIdx.end()) throw ParseError(1, "unknown reverse arc '" + rev + "'");
    s.arcs[idx].reverse = it->second;
  }
  return s;
}

}  // namespace gga
