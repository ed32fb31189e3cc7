#include "twist/io.hpp"

#include <algorithm>

namespace twist {

namespace {

Json vertex_list(const TwistGraph &g, const std::vector<std::size_t> &vs) {
  Json out = Json::array();
  for (auto v : vs)
    out.push_back(g.vertex(v).id);
  return out;
}

Json coloring(const TwistGraph &g, const std::vector<int> &c) {
  Json out = Json::object();
  for (std::size_t v = 0; v < c.size(); ++v)
    out[g.vertex(v).id] = c[v];
  return out;
}

} // namespace

TwistGraph graph_from_json(const nlohmann::json &doc) {
  return parse_twist_graph(doc.dump());
}

Json graph_to_json(const TwistGraph &g) { return Json::parse(serialize_twist_graph(g)); }

PuzzleState state_from_json(const TwistGraph &g, const nlohmann::json &doc,
                            std::size_t home) {
  auto require = [](bool ok, const std::string &msg) {
    if (!ok)
      throw StateError(msg);
  };
  auto only_keys = [](const nlohmann::json &obj, std::initializer_list<const char *> keys,
                      const char *where) {
    for (const auto &[k, _] : obj.items())
      if (std::none_of(keys.begin(), keys.end(), [&](const char *a) { return k == a; }))
        throw StateError("unknown key '" + k + "' in " + where);
  };
  require(doc.is_object(), "state must be a JSON object");
  only_keys(doc, {"format", "blank", "tiles"}, "state");
  require(doc.contains("format") && doc["format"] == "twiststate/1",
          "format must be \"twiststate/1\"");
  require(doc.contains("blank") && doc["blank"].is_string(), "blank must be a vertex id");
  require(doc.contains("tiles") && doc["tiles"].is_array(), "tiles must be an array");

  auto vertex = [&](const nlohmann::json &v, const char *what) {
    require(v.is_string(), std::string(what) + " must be a vertex id");
    auto idx = g.find_vertex(v.get<std::string>());
    require(idx.has_value(), "unknown vertex '" + v.get<std::string>() + "'");
    return *idx;
  };

  const std::size_t n = g.vertex_count();
  PuzzleState s;
  s.blank = vertex(doc["blank"], "blank");
  s.tile_at.assign(n, PuzzleState::kNoTile);
  s.rot.assign(n, 0);
  for (const auto &t : doc["tiles"]) {
    require(t.is_object(), "tile entries must be objects");
    only_keys(t, {"tile", "at", "rot"}, "tile");
    require(t.contains("tile") && t.contains("at"), "tile entries need tile and at");
    std::size_t tile = vertex(t["tile"], "tile");
    std::size_t at = vertex(t["at"], "at");
    require(tile != home, "the home vertex names no tile");
    require(at != s.blank, "a tile sits on the blank");
    require(s.tile_at[at] == PuzzleState::kNoTile, "two tiles on one vertex");
    std::int64_t rot = 0;
    if (t.contains("rot")) {
      require(t["rot"].is_number_integer(), "rot must be an integer");
      rot = t["rot"].get<std::int64_t>();
    }
    require(rot >= 0 && rot < g.modulus(), "rot outside [0, m)");
    s.tile_at[at] = static_cast<std::uint32_t>(tile);
    s.rot[at] = static_cast<Residue>(rot);
  }
  require(doc["tiles"].size() + 1 == n, "every non-blank vertex needs exactly one tile");
  check_state(g, s, home);
  return s;
}

Json state_to_json(const TwistGraph &g, const PuzzleState &s) {
  Json doc;
  doc["format"] = "twiststate/1";
  doc["blank"] = g.vertex(s.blank).id;
  std::vector<std::size_t> where(g.vertex_count(), s.blank);
  for (std::size_t v = 0; v < s.tile_at.size(); ++v)
    if (v != s.blank)
      where[s.tile_at[v]] = v;
  doc["tiles"] = Json::array();
  for (std::size_t tile = 0; tile < g.vertex_count(); ++tile) {
    if (where[tile] == s.blank)
      continue;
    doc["tiles"].push_back({{"tile", g.vertex(tile).id},
                            {"at", g.vertex(where[tile]).id},
                            {"rot", s.rot[where[tile]]}});
  }
  return doc;
}

Json element_to_json(const GroupElement &e) {
  Json x = Json::object(), sigma = Json::object();
  for (std::size_t i = 0; i < e.size(); ++i) {
    x[e.label(i)] = e.x(i);
    sigma[e.label(i)] = e.label(e.sigma(i));
  }
  return {{"m", e.modulus()}, {"x", x}, {"sigma", sigma}};
}

Json validation_to_json(const TwistGraph &g, const ValidationReport &r) {
  return {{"connected", r.connected},
          {"two_vertex_connected", r.two_vertex_connected},
          {"loop_free", r.loop_free},
          {"is_cycle", r.is_cycle},
          {"is_multi_cycle", r.is_multi_cycle},
          {"has_parallel_edges", r.has_parallel_edges},
          {"simple_collapse_class", to_string(r.simple_collapse_class)},
          {"articulation_points", vertex_list(g, r.articulation_points)}};
}

Json descriptor_to_json(const TwistGraph &g, const GroupDescriptor &d) {
  Json doc;
  doc["case"] = to_string(d.kind);
  doc["home"] = g.vertex(d.home).id;
  doc["n"] = d.n;
  doc["m"] = d.m;
  doc["original_m"] = d.original_m;
  doc["d"] = d.reduction.d;
  doc["order"] = d.order.str();

  Json cert;
  Json psi = Json::object();
  for (std::size_t v = 0; v < d.reduction.gauge.psi.size(); ++v)
    psi[g.vertex(v).id] = d.reduction.gauge.psi[v];
  cert["gauge"] = psi;
  cert["validation"] = validation_to_json(g, d.report);
  Json bip{{"value", d.bipartite.value}};
  if (d.bipartite.value)
    bip["coloring"] = coloring(g, d.bipartite.coloring);
  else
    bip["odd_cycle"] = vertex_list(g, d.bipartite.odd_cycle);
  cert["bipartite"] = bip;
  Json tb{{"value", d.twist_bipartite.value}};
  if (d.twist_bipartite.value)
    tb["coloring"] = coloring(g, d.twist_bipartite.coloring);
  else if (!d.twist_bipartite.violating_cycle.empty())
    tb["violating_cycle"] = moves_to_json(g, d.twist_bipartite.violating_cycle);
  cert["twist_bipartite"] = tb;
  cert["surjectivity"] = {{"surjective", d.surjectivity.surjective},
                          {"gcd", d.surjectivity.gcd},
                          {"generator_values", d.surjectivity.generator_values}};
  Json gens = Json::array();
  for (const auto &p : d.generators)
    gens.push_back(moves_to_json(g, p.steps()));
  cert["generators"] = gens;
  if (d.exceptional) {
    cert["relabel"] = vertex_list(g, d.exceptional->relabel);
    cert["permutation_count"] = d.exceptional->permutations.size();
    if (d.exceptional->calibration_generator)
      cert["calibration_generator"] = *d.exceptional->calibration_generator;
  }
  doc["certificates"] = cert;
  return doc;
}

Json reachable_to_json(const TwistGraph &g, const ReachableSet &r) {
  Json per = Json::object();
  for (std::size_t v = 0; v < r.per_blank.size(); ++v)
    per[g.vertex(v).id] = r.per_blank[v];
  return {{"states", r.states.size()},
          {"by_home", r.by_home.size()},
          {"exhausted", r.exhausted},
          {"explored", r.explored},
          {"per_blank", per}};
}

Json verify_to_json(const VerifyReport &r) {
  Json doc;
  doc["undecided"] = r.undecided;
  doc["agree"] = r.agree;
  if (r.kind)
    doc["case"] = to_string(*r.kind);
  doc["order"] = r.order.str();
  doc["states"] = r.states;
  doc["by_home"] = r.by_home;
  Json missing = Json::array(), extra = Json::array();
  for (const auto &e : r.missing)
    missing.push_back(element_to_json(e));
  for (const auto &e : r.extra)
    extra.push_back(element_to_json(e));
  doc["missing"] = missing;
  doc["extra"] = extra;
  if (!r.reason.empty())
    doc["reason"] = r.reason;
  return doc;
}

Json moves_to_json(const TwistGraph &g, const std::vector<Traversal> &moves) {
  Json out = Json::array();
  for (Traversal t : moves)
    out.push_back(g.traversal_name(t));
  return out;
}

std::vector<Traversal> moves_from_json(const TwistGraph &g, const nlohmann::json &doc) {
  if (!doc.is_array())
    throw std::invalid_argument("moves must be an array of move names");
  std::vector<Traversal> out;
  for (const auto &m : doc) {
    if (!m.is_string())
      throw std::invalid_argument("moves must be an array of move names");
    out.push_back(g.parse_traversal(m.get<std::string>()));
  }
  return out;
}

} // namespace twist
