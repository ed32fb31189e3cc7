#include "twist/presets.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace twist {

namespace {

std::string coord_id(double x, double y) {
  auto fmt = [](double v) {
    std::string s = std::to_string(v);
    s.erase(s.find_last_not_of('0') + 1);
    if (s.back() == '.')
      s.pop_back();
    return s;
  };
  return fmt(x) + "," + fmt(y);
}

std::vector<Vertex> ring(const std::vector<std::string> &ids, double radius,
                         double phase) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    double a = phase + 2.0 * std::numbers::pi * static_cast<double>(i) /
                           static_cast<double>(ids.size());
    out.push_back({ids[i], radius * std::cos(a), radius * std::sin(a)});
  }
  return out;
}

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < 1)
    throw std::invalid_argument("bad " + std::string(what) + " in preset name");
  return v;
}

} // namespace

TwistGraph grid_board(int width, int height, int m) {
  if (width < 1 || height < 1 || width * height < 2)
    throw std::invalid_argument("grid needs at least two cells");
  auto id = [](int r, int c) { return "r" + std::to_string(r) + "c" + std::to_string(c); };
  std::vector<Vertex> vertices;
  std::vector<EdgeSpec> edges;
  for (int r = 0; r < height; ++r)
    for (int c = 0; c < width; ++c)
      vertices.push_back({id(r, c), static_cast<double>(c), static_cast<double>(-r)});
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      if (c + 1 < width)
        edges.push_back({"h" + std::to_string(r) + "_" + std::to_string(c), id(r, c),
                         id(r, c + 1), 0});
      if (r + 1 < height)
        edges.push_back({"v" + std::to_string(r) + "_" + std::to_string(c), id(r, c),
                         id(r + 1, c), 0});
    }
  }
  return TwistGraph(m, std::move(vertices), edges, id(height - 1, width - 1));
}

TwistGraph cycle_board(int k, int m) {
  if (k < 3)
    throw std::invalid_argument("cycle needs at least three vertices");
  std::vector<std::string> ids;
  for (int i = 0; i < k; ++i)
    ids.push_back("c" + std::to_string(i));
  std::vector<EdgeSpec> edges;
  for (int i = 0; i < k; ++i)
    edges.push_back({"e" + std::to_string(i), ids[i], ids[(i + 1) % k], 0});
  return TwistGraph(m, ring(ids, 1.0, std::numbers::pi / 2), edges, ids[0]);
}

TwistGraph theta5_board(int m) {
  std::vector<Vertex> vertices{{"left", -1.0, 0.0},
                               {"top", 0.0, 1.0},
                               {"right", 1.0, 0.0},
                               {"center", 0.0, 0.0},
                               {"bottom", 0.0, -1.0}};
  std::vector<EdgeSpec> edges{{"e1", "left", "top", 0},     {"e2", "top", "right", 0},
                              {"e3", "left", "center", 0},  {"e4", "center", "right", 0},
                              {"e5", "left", "bottom", 0},  {"e6", "bottom", "right", 0}};
  return TwistGraph(m, std::move(vertices), edges, "left");
}

TwistGraph theta7_board(int m) {
  std::vector<Vertex> vertices{{"inf", -1.0, 0.0},  {"0", -0.5, 0.87}, {"1", 0.5, 0.87},
                               {"2", 1.0, 0.0},     {"3", 0.5, -0.87}, {"4", -0.5, -0.87},
                               {"center", 0.0, 0.0}};
  std::vector<EdgeSpec> edges{{"inf-0", "inf", "0", 0},        {"0-1", "0", "1", 0},
                              {"1-2", "1", "2", 0},            {"2-3", "2", "3", 0},
                              {"3-4", "3", "4", 0},            {"4-inf", "4", "inf", 0},
                              {"inf-center", "inf", "center", 0},
                              {"center-2", "center", "2", 0}};
  return TwistGraph(m, std::move(vertices), edges, "center");
}

TwistGraph fifteen_plus_four_board() {
  // Board coordinates, top vertex first, then reading order (top to bottom,
  // left to right). Vertex ids are the tile numbers 0..19 in that order; the
  // blank lives at 0 when solved.
  const std::vector<std::pair<double, double>> coords{
      {0, 0},     {-1, -1},   {1, -1},   {-2, -2},   {0, -2},    {2, -2},  {-3, -3},
      {-1, -3},   {1, -3},    {3, -3},   {-2, -4},   {2, -4},    {-1, -4.5}, {1, -4.5},
      {-2, -5.5}, {2, -5.5},  {-1, -6},  {1, -6},    {-2, -7},   {2, -7}};
  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < coords.size(); ++i)
    vertices.push_back({std::to_string(i), coords[i].first, coords[i].second});
  auto at = [&](double x, double y) -> std::string {
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (coords[i].first == x && coords[i].second == y)
        return std::to_string(i);
    throw std::logic_error("no vertex at " + coord_id(x, y));
  };
  // Outer Hamiltonian circuit.
  const std::vector<std::pair<double, double>> rim{
      {0, 0},    {-1, -1},  {-2, -2},   {-3, -3},   {-2, -4}, {-2, -5.5}, {-2, -7},
      {-1, -6},  {-1, -4.5}, {-1, -3},  {0, -2},    {1, -3},  {1, -4.5},  {1, -6},
      {2, -7},   {2, -5.5}, {2, -4},    {3, -3},    {2, -2},  {1, -1}};
  std::vector<EdgeSpec> edges;
  auto add = [&](std::pair<double, double> a, std::pair<double, double> b, int twist) {
    std::string ta = at(a.first, a.second);
    std::string hb = at(b.first, b.second);
    edges.push_back({ta + "-" + hb, ta, hb, twist});
  };
  for (std::size_t i = 0; i < rim.size(); ++i)
    add(rim[i], rim[(i + 1) % rim.size()], 0);
  add({-1, -1}, {0, -2}, 0);
  add({-2, -2}, {-1, -3}, 0);
  add({-1, -3}, {-2, -4}, 0);
  add({-2, -5.5}, {-1, -4.5}, 0);
  add({1, -1}, {0, -2}, 0);
  add({2, -2}, {1, -3}, 0);
  add({1, -3}, {2, -4}, 0);
  add({2, -5.5}, {1, -4.5}, 0);
  // The two rotating edges, oriented left to right.
  add({-1, -4.5}, {1, -4.5}, 1);
  add({-1, -6}, {1, -6}, 1);
  return TwistGraph(4, std::move(vertices), edges, "0");
}

TwistGraph figure8_board() {
  std::vector<Vertex> vertices{{"u", 0.0, 0.0}, {"r", 1.0, 0.0}, {"b", 0.5, -1.0}};
  std::vector<EdgeSpec> edges{{"ur", "u", "r", 0},
                              {"ur_dashed", "u", "r", 1},
                              {"rb", "r", "b", 0},
                              {"bu", "b", "u", 0}};
  return TwistGraph(2, std::move(vertices), edges, "u");
}

TwistGraph k33_board(int m) {
  std::vector<Vertex> vertices;
  for (int i = 0; i < 3; ++i)
    vertices.push_back({"a" + std::to_string(i), static_cast<double>(i), 1.0});
  for (int i = 0; i < 3; ++i)
    vertices.push_back({"b" + std::to_string(i), static_cast<double>(i), 0.0});
  std::vector<EdgeSpec> edges;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      edges.push_back({"a" + std::to_string(i) + "b" + std::to_string(j),
                       "a" + std::to_string(i), "b" + std::to_string(j), 0});
  return TwistGraph(m, std::move(vertices), edges, "a0");
}

TwistGraph k4_board(int m) {
  std::vector<std::string> ids{"v0", "v1", "v2", "v3"};
  std::vector<EdgeSpec> edges;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      edges.push_back({ids[i] + ids[j], ids[i], ids[j], 0});
  return TwistGraph(m, ring(ids, 1.0, std::numbers::pi / 2), edges, "v0");
}

TwistGraph preset(std::string_view name, const PresetOptions &options) {
  const int m = options.m.value_or(1);
  TwistGraph g;
  if (name.starts_with("grid:")) {
    auto spec = name.substr(5);
    auto x = spec.find('x');
    if (x == std::string_view::npos)
      throw std::invalid_argument("grid preset must look like grid:WxH");
    g = grid_board(parse_int(spec.substr(0, x), "width"),
                   parse_int(spec.substr(x + 1), "height"), m);
  } else if (name.starts_with("cycle:")) {
    g = cycle_board(parse_int(name.substr(6), "length"), m);
  } else if (name == "theta5") {
    g = theta5_board(m);
  } else if (name == "theta7") {
    g = theta7_board(m);
  } else if (name == "k33") {
    g = k33_board(m);
  } else if (name == "k4") {
    g = k4_board(m);
  } else if (name == "fifteen_plus_four") {
    g = fifteen_plus_four_board();
  } else if (name == "figure8") {
    g = figure8_board();
  } else {
    throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
  }
  if (options.m && (name == "fifteen_plus_four" || name == "figure8") &&
      *options.m != g.modulus())
    throw std::invalid_argument("preset '" + std::string(name) +
                                "' has a fixed modulus of " +
                                std::to_string(g.modulus()));
  if (options.twists.empty())
    return g;
  std::vector<std::int64_t> twists;
  for (const auto &e : g.edges())
    twists.push_back(e.twist);
  for (const auto &[id, value] : options.twists)
    twists[g.edge_index(id)] = value;
  return g.with_twists(g.modulus(), twists);
}

std::vector<std::string> preset_names() {
  return {"grid:4x4", "cycle:5",          "theta5",  "theta7",
          "fifteen_plus_four", "figure8", "k33",     "k4"};
}

} // namespace twist
