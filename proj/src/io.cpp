#include "biplane/io.hpp"

#include <fstream>
#include <sstream>

#include "biplane/error.hpp"

namespace biplane {
namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string(what) + ": " + e.what());
  }
}

Json pair_list(const std::vector<std::pair<int, int>>& v) {
  Json out = Json::array();
  for (auto [a, b] : v) out.push_back({a, b});
  return out;
}

std::string_view kind_name(Refutation::Kind k) { return k == Refutation::Kind::Bound ? "bound" : "exhausted"; }

Json fraction(const Fraction& f) { return {{"num", f.num}, {"den", f.den}}; }

Json verdict(const BoundVerdict& v) {
  return {{"bound_name", to_string(v.bound_name)}, {"max_edges", v.max_edges}, {"violated", v.violated}};
}

}  // namespace

std::string dump(const Json& j) { return j.dump() + "\n"; }

Json parse_json(const std::string& text) {
  return guarded("invalid JSON", [&] { return Json::parse(text); });
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << content;
}

Json to_json(const ColoredGraph& g) {
  Json j;
  j["n"] = g.num_vertices();
  Json colors = Json::array();
  for (Color c : g.colors()) colors.push_back(int(c));
  j["colors"] = colors;
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = edges;
  return j;
}

ColoredGraph graph_from_json(const Json& j) {
  auto [n, colors, edges] = guarded("graph schema", [&] {
    const int n = j.at("n").get<int>();
    auto colors = j.at("colors").get<std::vector<int>>();
    std::vector<std::pair<int, int>> edges;
    for (const Json& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::ParseError, "edge must be a pair");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return std::tuple{n, colors, edges};
  });
  return build_graph(n, colors, edges);
}

Json to_json(const Drawing& d) {
  Json j = to_json(d.graph());
  Json crossings = Json::array();
  for (auto [a, b] : d.crossings()) crossings.push_back({a, b});
  j["crossings"] = crossings;
  Json rotations = Json::object();
  for (NodeId x = 0; x < d.num_nodes(); ++x) {
    Json list = Json::array();
    for (Dart dart : d.rotation()[x]) list.push_back({dart_segment(dart), dart_dir(dart)});
    rotations[std::to_string(x)] = list;
  }
  j["rotations"] = rotations;
  return j;
}

Drawing drawing_from_json(const Json& j) {
  ColoredGraph g = graph_from_json(j);
  auto [crossings, rotation] = guarded("drawing schema", [&] {
    std::vector<CrossingPair> crossings;
    for (const Json& c : j.at("crossings")) {
      if (!c.is_array() || c.size() != 2) throw Error(ErrorCode::ParseError, "crossing must be a pair");
      crossings.push_back({c[0].get<int>(), c[1].get<int>()});
    }
    const Json& rot = j.at("rotations");
    if (!rot.is_object()) throw Error(ErrorCode::ParseError, "rotations must be an object");
    Rotation rotation(g.num_vertices() + crossings.size());
    for (auto it = rot.begin(); it != rot.end(); ++it) {
      size_t used = 0;
      int node = -1;
      try {
        node = std::stoi(it.key(), &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != it.key().size() || node < 0 || node >= static_cast<int>(rotation.size())) {
        throw Error(ErrorCode::ParseError, "bad rotation node '" + it.key() + "'");
      }
      for (const Json& dart : it.value()) {
        if (!dart.is_array() || dart.size() != 2) throw Error(ErrorCode::ParseError, "dart must be [segment, dir]");
        const int seg = dart[0].get<int>(), dir = dart[1].get<int>();
        if (seg < 0 || (dir != 0 && dir != 1)) throw Error(ErrorCode::ParseError, "bad dart");
        rotation[node].push_back(make_dart(seg, dir));
      }
    }
    return std::pair{crossings, rotation};
  });
  return build_drawing(std::move(g), std::move(crossings), std::move(rotation));
}

Json to_json(const EdgeClassification& c) {
  Json classes = Json::array();
  for (EdgeClass k : c.edge_class) classes.push_back(to_string(k));
  return {{"p", c.simple}, {"t", c.crossing_pairs}, {"classes", classes}};
}

Json to_json(const CensusReport& r) {
  Json vertices = Json::array();
  for (const VertexCensus& v : r.vertices) {
    vertices.push_back({{"vertex", v.vertex},
                        {"degree", v.degree},
                        {"simple", v.simple},
                        {"left", v.left},
                        {"right", v.right},
                        {"simple_floor", v.simple_floor},
                        {"left_exceeds_simple", v.left_exceeds_simple},
                        {"right_exceeds_simple", v.right_exceeds_simple}});
  }
  return {{"p", r.simple},
          {"t", r.crossing_pairs},
          {"gprime_edges", r.gprime_edges},
          {"gprime_bound", r.gprime_bound},
          {"gprime_bound_holds", r.gprime_bound_holds},
          {"gprime_bound_tight", r.gprime_bound_tight},
          {"flagged", r.flagged},
          {"vertices", vertices}};
}

Json to_json(const VerificationReport& r) {
  Json conditions = Json::array();
  for (const ConditionCheck& c : r.conditions) {
    Json cj = {{"condition", c.condition}, {"evaluated", c.evaluated}, {"passed", c.passed}};
    if (!c.note.empty()) cj["note"] = c.note;
    conditions.push_back(cj);
  }
  Json census = Json::array();
  for (const VertexCensus& v : r.census)
    census.push_back({{"vertex", v.vertex}, {"simple", v.simple}, {"left", v.left}, {"right", v.right}});
  return {{"level", r.level},
          {"all_passed", r.all_passed()},
          {"conditions", conditions},
          {"census", census},
          {"diagnostics", r.diagnostics}};
}

Json to_json(const PartsDecomposition& p) {
  Json parts = Json::array();
  for (const Part& part : p.parts) {
    Json boundaries = Json::array();
    for (const auto& b : part.boundaries) {
      Json darts = Json::array();
      for (Dart d : b) darts.push_back(d);
      boundaries.push_back(darts);
    }
    Json pj = {{"kind", to_string(part.kind)}, {"faces", part.faces}, {"boundaries", boundaries}};
    pj["corners"] = part.corners;
    parts.push_back(pj);
  }
  Json F = Json::array();
  for (auto [a, b] : p.F) F.push_back({a, b});
  return {{"parts", parts},
          {"F", F},
          {"P", p.P},
          {"L", pair_list(p.L)},
          {"boundary_length", p.boundary_length},
          {"strip_faces", p.strip_faces}};
}

Json to_json(const StructureReport& r) {
  Json j = {{"v", r.v},
            {"e", r.e},
            {"t", r.t},
            {"p", r.p},
            {"gprime_edges", r.gprime_edges},
            {"is_quadrangulation", r.is_quadrangulation},
            {"is_biconnected", r.is_biconnected},
            {"max_degree_gprime", r.max_degree_gprime},
            {"two_simple_edges_each", r.two_simple_edges_each},
            {"right_edge_violations", r.right_edge_violations}};
  j["decomposition"] = r.decomposition ? to_json(*r.decomposition) : Json(nullptr);
  Json corners = Json::array();
  for (const CornerCount& c : r.corner_census)
    corners.push_back({{"vertex", c.vertex}, {"corners", c.corners}, {"expected", c.expected}});
  j["corner_census"] = corners;
  j["corner_census_matches"] = r.corner_census_matches;
  Json hits = Json::array();
  for (const Lemma2Hit& h : r.lemma2_hits) {
    hits.push_back({{"crossings", {h.crossing_x, h.crossing_y}},
                    {"u", h.u},
                    {"v", h.v},
                    {"left_edges", {h.left_x, h.left_y}},
                    {"right_edges", {h.right_x, h.right_y}}});
  }
  j["pattern_hits"] = hits;
  j["parity_conclusion"] = r.parity_conclusion;
  j["failures"] = r.failures;
  return j;
}

Json to_json(const std::vector<BoundVerdict>& verdicts) {
  Json out = Json::array();
  for (const BoundVerdict& v : verdicts) out.push_back(verdict(v));
  return out;
}

Json to_json(const DecideResult& r) {
  Json j;
  j["start_size"] = r.start_size;
  j["matchings_exhausted"] = r.matchings_exhausted;
  if (const auto* w = r.witness()) {
    j["verdict"] = "one_planar";
    j["one_planar_crossing_number"] = w->crossings();
    Json m = Json::array();
    for (auto [a, b] : w->matching) m.push_back({a, b});
    j["matching"] = m;
    j["drawing"] = to_json(w->drawing);
  } else if (const auto* f = r.refutation()) {
    j["verdict"] = "refuted";
    j["kind"] = kind_name(f->kind);
    if (f->bound) j["bound"] = verdict(*f->bound);
    j["searched_up_to"] = f->searched_up_to;
    j["complete"] = f->complete;
  } else {
    j["verdict"] = "timeout";
    j["largest_exhausted"] = r.timeout()->largest_exhausted;
  }
  return j;
}

Json to_json(const BetaSearchResult& r) {
  Json j;
  j["v"] = r.v;
  j["beta"] = r.beta ? Json(*r.beta) : Json(nullptr);
  j["timed_out"] = r.timed_out;
  Json log = Json::array();
  for (const BetaLogEntry& e : r.log) {
    log.push_back({{"edges", e.edges},
                   {"classes", e.classes},
                   {"refuted", e.refuted},
                   {"timed_out", e.timed_out},
                   {"witness_found", e.witness_found}});
  }
  j["log"] = log;
  if (r.witness) {
    j["witness_graph"] = to_json(*r.witness_graph);
    j["witness_crossings"] = r.witness->crossings();
    j["witness_drawing"] = to_json(r.witness->drawing);
  }
  return j;
}

Json to_json(const CrBoundDerivation& d) {
  Json steps = Json::array();
  for (const CrStep& s : d.steps) {
    steps.push_back({{"host", "K_{3," + std::to_string(s.host_n) + "}"},
                     {"base", "K_{3," + std::to_string(s.base_m) + "}"},
                     {"base_lb", s.base_lb},
                     {"copies", s.copies},
                     {"multiplicity", s.multiplicity},
                     {"bound", fraction(s.bound)},
                     {"resulting_lb", s.resulting_lb}});
  }
  return {{"steps", steps}, {"final_lb", d.final_lb()}};
}

Json to_json(const K37Refutation& r) {
  return {{"graph", "K_{3,7}"},
          {"vertices", r.vertices},
          {"edges", r.edges},
          {"dense_threshold", r.dense_threshold},
          {"dense", r.dense},
          {"simple_floor_per_vertex", r.simple_floor_per_vertex},
          {"simple_floor", r.simple_floor},
          {"max_crossings", r.max_crossings},
          {"derivation", to_json(r.derivation)},
          {"lower_bound", fraction(r.lower_bound)},
          {"lower_bound_ceil", r.lower_bound_ceil},
          {"verdict", r.contradiction ? "NotOnePlanar" : "undecided"}};
}

Json to_json(const PairSupport& s) {
  Json j = {{"a", s.a}, {"b", s.b}, {"supported", s.supported}};
  if (!s.supported) j["reason"] = s.reason;
  if (s.bound) j["bound"] = verdict(*s.bound);
  return j;
}

}  // namespace biplane
