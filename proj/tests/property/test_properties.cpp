#include <gtest/gtest.h>

#include <numeric>

#include "support/boards.hpp"
#include "twist/classifier.hpp"
#include "twist/topology.hpp"

using namespace twist;
using namespace twist::testing;

namespace {

constexpr int kCases = 1000;

const std::vector<std::string> kSmall{"theta5", "theta7", "k4", "k33", "cycle:5", "figure8",
                                      "grid:2x3"};
const std::vector<std::string> kAll{"theta5", "theta7", "k4", "k33", "cycle:5", "figure8",
                                    "grid:2x3", "grid:3x3", "fifteen_plus_four"};

// A named board with a random modulus and random twists on every edge.
TwistGraph random_board(const std::vector<std::string> &names, std::mt19937_64 &rng) {
  TwistGraph base = preset(names[rng() % names.size()]);
  const int m = 1 + static_cast<int>(rng() % 6);
  std::vector<EdgeSpec> specs;
  for (const auto &e : base.edges())
    specs.push_back({e.id, base.vertex(e.tail).id, base.vertex(e.head).id,
                     static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(m))});
  return TwistGraph(m, base.vertices(), specs, base.vertex(base.home()).id);
}

Gauge random_gauge(const TwistGraph &g, std::mt19937_64 &rng) {
  Gauge psi;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    psi.psi.push_back(static_cast<Residue>(rng() % static_cast<std::uint64_t>(g.modulus())));
  return psi;
}

void simple_paths(const TwistGraph &g, std::size_t at, std::size_t to, std::vector<bool> &seen,
                  std::vector<Traversal> &path, std::vector<std::vector<Traversal>> &out) {
  if (at == to) {
    out.push_back(path);
    return;
  }
  for (Traversal t : g.leaving(at)) {
    std::size_t next = g.to(t);
    if (seen[next])
      continue;
    seen[next] = true;
    path.push_back(t);
    simple_paths(g, next, to, seen, path, out);
    path.pop_back();
    seen[next] = false;
  }
}

} // namespace

TEST(Properties, GroupAxioms) {
  std::mt19937_64 rng(101);
  for (int i = 0; i < kCases; ++i) {
    const int m = 1 + static_cast<int>(rng() % 7);
    auto sites = sites_of(1 + rng() % 7);
    auto a = random_element(m, sites, rng), b = random_element(m, sites, rng),
         c = random_element(m, sites, rng);
    auto id = GroupElement::identity(m, sites);
    EXPECT_EQ(gs_multiply(a, gs_multiply(b, c)), gs_multiply(gs_multiply(a, b), c));
    EXPECT_EQ(gs_multiply(a, id), a);
    EXPECT_EQ(gs_multiply(id, a), a);
    EXPECT_TRUE(gs_multiply(a, gs_inverse(a)).is_identity());
    EXPECT_TRUE(gs_multiply(gs_inverse(a), a).is_identity());
    EXPECT_EQ(gs_inverse(gs_multiply(a, b)), gs_multiply(gs_inverse(b), gs_inverse(a)));
    EXPECT_EQ(gs_multiply(a, b).sign(), a.sign() * b.sign());
    EXPECT_EQ(gs_multiply(a, b).eta(m), (a.eta(m) + b.eta(m)) % static_cast<Residue>(m));
  }
}

TEST(Properties, ConjugationReindexes) {
  std::mt19937_64 rng(102);
  for (int i = 0; i < kCases; ++i) {
    const int m = 2 + static_cast<int>(rng() % 6);
    auto sites = sites_of(2 + rng() % 6);
    auto rand = random_element(m, sites, rng);
    std::vector<std::int64_t> zero(sites->size(), 0), x(sites->size());
    for (std::size_t v = 0; v < x.size(); ++v)
      x[v] = rand.x(v);
    std::vector<std::uint32_t> id(sites->size());
    std::iota(id.begin(), id.end(), 0u);
    GroupElement perm(m, sites, rand.sigma(), zero);
    GroupElement rot(m, sites, id, x);
    std::vector<std::int64_t> moved(x.size());
    for (std::size_t v = 0; v < x.size(); ++v)
      moved[v] = x[perm.sigma(v)];
    EXPECT_EQ(gs_multiply(gs_inverse(perm), gs_multiply(rot, perm)),
              GroupElement(m, sites, id, moved));
  }
}

TEST(Properties, HomotopyInvariance) {
  std::mt19937_64 rng(103);
  for (int i = 0; i < kCases; ++i) {
    TwistGraph g = random_board(kAll, rng);
    const std::size_t home = g.home();
    ClosedPath p = random_closed_walk(g, home, rng() % 12, rng);
    std::vector<Traversal> steps = p.steps();
    std::size_t cut = steps.empty() ? 0 : rng() % (steps.size() + 1);
    std::size_t at = cut == 0 ? home : g.to(steps[cut - 1]);
    const auto &out = g.leaving(at);
    Traversal e = out[rng() % out.size()];
    steps.insert(steps.begin() + static_cast<std::ptrdiff_t>(cut), {e, e.reversed()});
    EXPECT_EQ(element_of_path(g, ClosedPath(g, home, steps)), element_of_path(g, p));
  }
}

TEST(Properties, RotationSumIsTwistSum) {
  std::mt19937_64 rng(104);
  for (int i = 0; i < kCases; ++i) {
    TwistGraph g = random_board(kAll, rng);
    ClosedPath p = random_closed_walk(g, g.home(), 1 + rng() % 20, rng);
    EXPECT_EQ(element_of_path(g, p).eta(g.modulus()), phi_gamma(g, cycle_vector(g, p)));
  }
}

TEST(Properties, ClassificationIsGaugeInvariant) {
  std::mt19937_64 rng(105);
  for (int i = 0; i < kCases; ++i) {
    TwistGraph g = random_board(kSmall, rng);
    Gauge psi = random_gauge(g, rng);
    TwistGraph h = gauge_transform(g, psi);
    GroupDescriptor a = classify(g, g.home()), b = classify(h, h.home());
    EXPECT_EQ(a.kind, b.kind);
    EXPECT_EQ(a.order, b.order);
    PuzzleState s = scramble(g, solved_state(g, g.home()), 15, rng());
    std::size_t v = (s.blank + 1 + rng() % (g.vertex_count() - 1)) % g.vertex_count();
    s = rotate_tile(g, s, v, static_cast<std::int64_t>(rng() % 6));
    EXPECT_EQ(is_solvable(a, g, s), is_solvable(b, h, gauge_state(h, s, psi)));
  }
}

TEST(Properties, TransportPathIndependence) {
  std::mt19937_64 rng(106);
  for (int i = 0; i < kCases; ++i) {
    TwistGraph g = random_board(kSmall, rng);
    const std::size_t home = g.home();
    GroupDescriptor d = classify(g, home);
    PuzzleState s = scramble(g, solved_state(g, home), 10 + rng() % 10, rng());
    if (rng() % 2) {
      std::size_t v = (s.blank + 1 + rng() % (g.vertex_count() - 1)) % g.vertex_count();
      s = rotate_tile(g, s, v, 1);
    }
    std::vector<bool> seen(g.vertex_count(), false);
    seen[s.blank] = true;
    std::vector<Traversal> path;
    std::vector<std::vector<Traversal>> paths;
    simple_paths(g, s.blank, home, seen, path, paths);
    ASSERT_FALSE(paths.empty());
    const bool verdict = is_solvable(d, g, s);
    for (const auto &p : paths)
      EXPECT_EQ(accepts(d, state_to_element(g, apply_moves(g, s, p), home)), verdict);
  }
}

TEST(Properties, KernelGeneratorShape) {
  std::mt19937_64 rng(107);
  for (int i = 0; i < kCases; ++i) {
    TwistGraph g = random_board(kAll, rng);
    const std::size_t home = g.home();
    auto gens = rotation_kernel_generators(g, home);
    int a_gcd = g.modulus();
    SiteList sites = home_sites(g, home);
    for (const auto &k : gens) {
      EXPECT_EQ(k.x.sigma(), GroupElement::identity(g.modulus(), sites).sigma());
      std::vector<bool> in(g.vertex_count(), false);
      for (auto v : k.support)
        in[v] = true;
      EXPECT_FALSE(in[home]);
      for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (v != home)
          EXPECT_EQ(k.x.x(k.x.index_of(g.vertex(v).id)), in[v] ? k.a : 0u);
      a_gcd = std::gcd(a_gcd, static_cast<int>(k.a));
    }
    auto witness = is_phi_surjective(g);
    EXPECT_EQ(a_gcd, witness.gcd);
    EXPECT_EQ(a_gcd == 1, witness.surjective);
  }
}
