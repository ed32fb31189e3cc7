#include "twist/oracle.hpp"

#include <deque>
#include <limits>
#include <unordered_set>

namespace twist {

namespace {

constexpr std::size_t kMaxReported = 10;

// Every element of S(m, n) in key order; only for small n and m.
template <typename Fn> void for_each_element(int m, const SiteList &sites, Fn fn) {
  const std::size_t n = sites->size();
  std::uint64_t perms = 1, rots = 1;
  for (std::size_t i = 2; i <= n; ++i)
    perms *= i;
  for (std::size_t i = 0; i < n; ++i)
    rots *= static_cast<std::uint64_t>(m);
  for (std::uint64_t r = 0; r < perms; ++r)
    for (std::uint64_t dgt = 0; dgt < rots; ++dgt)
      if (!fn(GroupElement::from_key(m, sites, {r, dgt})))
        return;
}

} // namespace

bool state_keyable(const TwistGraph &g) {
  const std::size_t v = g.vertex_count();
  return v >= 1 && v <= 20 && GroupElement::keyable(g.modulus(), v - 1);
}

PackedKey state_key(const TwistGraph &g, const PuzzleState &s, std::size_t home) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> placement(s.tile_at);
  placement[s.blank] = static_cast<std::uint32_t>(home);
  std::uint64_t digits = 0;
  const auto m = static_cast<std::uint64_t>(g.modulus());
  for (std::size_t v = n; v-- > 0;) {
    if (v == s.blank)
      continue;
    digits = digits * m + s.rot[v];
  }
  return {permutation_rank(placement), digits};
}

PuzzleState state_from_key(const TwistGraph &g, PackedKey key, std::size_t home) {
  const std::size_t n = g.vertex_count();
  PuzzleState s;
  s.tile_at = permutation_unrank(key.rank, n);
  s.rot.assign(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    if (s.tile_at[v] == home)
      s.blank = v;
  s.tile_at[s.blank] = PuzzleState::kNoTile;
  const auto m = static_cast<std::uint64_t>(g.modulus());
  for (std::size_t v = 0; v < n; ++v) {
    if (v == s.blank)
      continue;
    s.rot[v] = static_cast<Residue>(key.digits % m);
    key.digits /= m;
  }
  return s;
}

ReachableSet enumerate_reachable(const TwistGraph &g, const PuzzleState &start,
                                 std::size_t cap, std::size_t home) {
  if (!state_keyable(g))
    throw std::invalid_argument("board is too large for packed state keys");
  check_state(g, start, home);
  const SiteList sites = home_sites(g, home);
  ReachableSet out;
  out.per_blank.assign(g.vertex_count(), 0);
  std::unordered_set<PackedKey, PackedKeyHash> seen;
  std::deque<PuzzleState> queue;

  auto visit = [&](PuzzleState s) {
    PackedKey k = state_key(g, s, home);
    if (!seen.insert(k).second)
      return true;
    if (out.states.size() >= cap) {
      seen.erase(k);
      return false;
    }
    out.states.push_back(k);
    ++out.per_blank[s.blank];
    if (s.blank == home)
      out.by_home.push_back(state_to_element(g, s, home, sites));
    queue.push_back(std::move(s));
    return true;
  };

  bool complete = visit(start);
  while (complete && !queue.empty()) {
    PuzzleState s = std::move(queue.front());
    queue.pop_front();
    ++out.explored;
    for (Traversal t : legal_moves(g, s))
      if (!visit(apply_move(g, s, t))) {
        complete = false;
        break;
      }
  }
  out.exhausted = complete && queue.empty();
  return out;
}

BigInt full_space_size(const TwistGraph &g) {
  const std::size_t v = g.vertex_count();
  BigInt total = v;
  for (std::size_t i = 2; i < v; ++i)
    total *= static_cast<unsigned>(i);
  for (std::size_t i = 0; i + 1 < v; ++i)
    total *= g.modulus();
  return total;
}

VerifyReport verify_classifier(const TwistGraph &g, std::size_t home, std::size_t cap) {
  VerifyReport rep;
  GroupDescriptor d;
  try {
    d = classify(g, home, cap);
  } catch (const Undecided &e) {
    rep.undecided = true;
    rep.reason = e.what();
    return rep;
  }
  rep.kind = d.kind;
  rep.order = d.order;
  const BigInt reachable = d.order * g.vertex_count();
  if (reachable > cap) {
    rep.undecided = true;
    rep.reason = "reachable space of " + reachable.str() +
                 " states exceeds the cap of " + std::to_string(cap);
    return rep;
  }
  if (!state_keyable(g)) {
    rep.undecided = true;
    rep.reason = "board is too large for packed state keys";
    return rep;
  }
  ReachableSet reach = enumerate_reachable(g, solved_state(g, home), cap, home);
  rep.states = reach.states.size();
  rep.by_home = reach.by_home.size();
  if (!reach.exhausted) {
    rep.undecided = true;
    rep.reason = "enumeration stopped at the cap";
    return rep;
  }
  for (const auto &e : reach.by_home)
    if (!accepts(d, e) && rep.extra.size() < kMaxReported)
      rep.extra.push_back(e);

  const bool counts_match = BigInt(rep.by_home) == d.order;
  if (!counts_match) {
    BigInt space = 1;
    for (std::size_t i = 2; i <= d.n; ++i)
      space *= static_cast<unsigned>(i);
    for (std::size_t i = 0; i < d.n; ++i)
      space *= g.modulus();
    if (space <= cap && GroupElement::keyable(g.modulus(), d.n)) {
      std::unordered_set<PackedKey, PackedKeyHash> reached;
      for (const auto &e : reach.by_home)
        reached.insert(e.key());
      for_each_element(g.modulus(), d.sites, [&](const GroupElement &e) {
        if (accepts(d, e) && !reached.contains(e.key()))
          rep.missing.push_back(e);
        return rep.missing.size() < kMaxReported;
      });
    }
  }
  rep.agree = counts_match && rep.extra.empty() && rep.missing.empty();
  if (!rep.agree)
    rep.reason = counts_match ? "reached elements rejected by the classifier"
                              : "reachable count " + std::to_string(rep.by_home) +
                                    " differs from group order " + d.order.str();
  return rep;
}

} // namespace twist
