#include "twist/topology.hpp"

#include <numeric>
#include <set>

#include "twist/dynamics.hpp"

namespace twist {

ClosedPath::ClosedPath(const TwistGraph &g, std::size_t base, std::vector<Traversal> steps)
    : base_(base), steps_(std::move(steps)) {
  if (base_ >= g.vertex_count())
    throw PathError("path base is not a vertex");
  std::size_t at = base_;
  for (Traversal t : steps_) {
    if (t.edge >= g.edge_count())
      throw PathError("path uses an unknown edge");
    if (g.from(t) != at)
      throw PathError("path is not contiguous at step " + g.traversal_name(t));
    at = g.to(t);
  }
  if (at != base_)
    throw PathError("path does not return to its base");
}

ClosedPath ClosedPath::concat(const TwistGraph &g, const ClosedPath &q) const {
  if (q.base_ != base_)
    throw PathError("cannot concatenate paths with different bases");
  auto steps = steps_;
  steps.insert(steps.end(), q.steps_.begin(), q.steps_.end());
  return ClosedPath(g, base_, std::move(steps));
}

ClosedPath ClosedPath::reversed(const TwistGraph &g) const {
  std::vector<Traversal> steps;
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it)
    steps.push_back(it->reversed());
  return ClosedPath(g, base_, std::move(steps));
}

std::vector<Traversal> free_reduce(std::vector<Traversal> steps) {
  std::vector<Traversal> out;
  out.reserve(steps.size());
  for (Traversal t : steps) {
    if (!out.empty() && out.back() == t.reversed())
      out.pop_back();
    else
      out.push_back(t);
  }
  return out;
}

CycleVector cycle_vector(const TwistGraph &g, const ClosedPath &p) {
  const auto m = static_cast<Residue>(g.modulus());
  CycleVector c;
  for (Traversal t : p.steps()) {
    Residue &w = c.omega[t.edge];
    w = t.forward ? (w + 1) % m : (w + m - 1) % m;
  }
  std::erase_if(c.omega, [](const auto &kv) { return kv.second == 0; });
  return c;
}

bool is_cycle(const TwistGraph &g, const CycleVector &c) {
  const auto m = static_cast<std::int64_t>(g.modulus());
  std::vector<std::int64_t> net(g.vertex_count(), 0);
  for (const auto &[e, w] : c.omega) {
    if (e >= g.edge_count())
      return false;
    net[g.edge(e).head] += w;
    net[g.edge(e).tail] -= w;
  }
  for (auto v : net)
    if (((v % m) + m) % m != 0)
      return false;
  return true;
}

Residue phi_gamma(const TwistGraph &g, const CycleVector &omega) {
  if (!is_cycle(g, omega))
    throw PathError("phi_gamma needs a 1-cycle");
  const auto m = static_cast<std::uint64_t>(g.modulus());
  std::uint64_t sum = 0;
  for (const auto &[e, w] : omega.omega)
    sum = (sum + static_cast<std::uint64_t>(g.edge(e).twist) * w) % m;
  return static_cast<Residue>(sum);
}

Residue path_twist(const TwistGraph &g, const std::vector<Traversal> &steps) {
  const auto m = static_cast<std::uint64_t>(g.modulus());
  std::uint64_t sum = 0;
  for (Traversal t : steps)
    sum = (sum + g.twist(t)) % m;
  return static_cast<Residue>(sum);
}

std::vector<ClosedPath> fundamental_generators(const TwistGraph &g, std::size_t base) {
  SpanningTree tree = canonical_spanning_tree(g);
  std::vector<ClosedPath> out;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (tree.in_tree[e])
      continue;
    const Edge &edge = g.edge(e);
    auto steps = tree_path(g, tree, base, edge.tail);
    steps.push_back({e, true});
    auto back = tree_path(g, tree, edge.head, base);
    steps.insert(steps.end(), back.begin(), back.end());
    out.emplace_back(g, base, free_reduce(std::move(steps)));
  }
  return out;
}

SurjectivityWitness is_phi_surjective(const TwistGraph &g) {
  SurjectivityWitness w;
  int d = g.modulus();
  for (const auto &p : fundamental_generators(g, g.home())) {
    Residue v = phi_gamma(g, cycle_vector(g, p));
    w.generator_values.push_back(v);
    d = std::gcd(d, static_cast<int>(v));
  }
  w.gcd = d;
  w.surjective = d == 1;
  return w;
}

KernelGenerator rotation_kernel_element(const TwistGraph &g, const ClosedPath &p) {
  GroupElement e = element_of_path(g, p);
  // Order of sigma: lcm of cycle lengths.
  std::uint64_t order = 1;
  std::vector<bool> seen(e.size(), false);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (seen[i])
      continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = e.sigma(j)) {
      seen[j] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  KernelGenerator k;
  k.exponent = order;
  k.x = gs_power(e, order);
  k.a = phi_gamma(g, cycle_vector(g, p));
  // Peel the stem (prefix mirrored by the suffix); the loop part's vertices,
  // minus the vertex where it hangs off the stem, carry the rotation.
  const auto &steps = p.steps();
  std::size_t stem = 0;
  while (2 * (stem + 1) < steps.size() &&
         steps[stem] == steps[steps.size() - 1 - stem].reversed())
    ++stem;
  std::set<std::size_t> support;
  for (std::size_t i = stem; i + 1 < steps.size() - stem; ++i)
    support.insert(g.to(steps[i]));
  if (!steps.empty())
    support.erase(g.from(steps[stem]));
  k.support.assign(support.begin(), support.end());
  return k;
}

std::vector<KernelGenerator> rotation_kernel_generators(const TwistGraph &g,
                                                        std::size_t base) {
  std::vector<KernelGenerator> out;
  for (const auto &p : fundamental_generators(g, base))
    out.push_back(rotation_kernel_element(g, p));
  return out;
}

} // namespace twist
