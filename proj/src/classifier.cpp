#include "twist/classifier.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace twist {

namespace {

std::vector<std::uint32_t> compose(const std::vector<std::uint32_t> &a,
                                   const std::vector<std::uint32_t> &b) {
  std::vector<std::uint32_t> out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    out[i] = a[b[i]];
  return out;
}

std::vector<std::uint32_t> invert(const std::vector<std::uint32_t> &a) {
  std::vector<std::uint32_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[a[i]] = static_cast<std::uint32_t>(i);
  return out;
}

bool is_involution_or_id(const std::vector<std::uint32_t> &a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[a[i]] != i)
      return false;
  return true;
}

BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i)
    f *= static_cast<unsigned>(i);
  return f;
}

BigInt power(int m, std::size_t n) {
  BigInt p = 1;
  for (std::size_t i = 0; i < n; ++i)
    p *= m;
  return p;
}

// Twist along the first edge a -> b, if any.
std::optional<Residue> step_twist(const TwistGraph &g, std::size_t a, std::size_t b) {
  for (Traversal t : g.leaving(a))
    if (g.to(t) == b)
      return g.twist(t);
  return std::nullopt;
}

// Sum over the three left -> middle -> right paths of Theta5, mod 3.
Residue theta5_path_sum(const TwistGraph &r, const std::vector<std::size_t> &relabel) {
  const std::size_t left = relabel[0], right = relabel[2];
  std::uint64_t total = 0;
  for (std::size_t mid : {relabel[1], relabel[3], relabel[4]})
    total += *step_twist(r, left, mid) + *step_twist(r, mid, right);
  return static_cast<Residue>(total % 3);
}

ExceptionalData permutation_part(const GroupDescriptor &d, std::size_t expected) {
  ExceptionalData ex;
  std::vector<std::vector<std::uint32_t>> gens;
  for (const auto &e : d.generator_elements)
    gens.push_back(e.sigma());
  auto perms = permutation_closure(d.n, gens, 1000);
  if (!perms || perms->size() != expected)
    throw std::logic_error("exceptional board generated an unexpected permutation group");
  for (const auto &p : *perms)
    ex.permutations.emplace(permutation_rank(p), 0);
  return ex;
}

void calibrate_q(GroupDescriptor &d, bool mod3) {
  auto &ex = *d.exceptional;
  std::optional<std::size_t> pick;
  for (std::size_t i = 0; i < d.generator_elements.size() && !pick; ++i)
    if (!is_involution_or_id(d.generator_elements[i].sigma()))
      pick = i;
  if (!pick)
    throw std::logic_error("Theta5 generators lie in the Klein four-group");
  ex.calibration_generator = pick;
  const auto &g0 = d.generator_elements[*pick].sigma();
  Residue c0 = mod3 ? d.generator_elements[*pick].eta(3) : 1;
  if (c0 == 0)
    throw std::logic_error("Theta5 calibration generator has zero twist mod 3");
  const auto g0inv = invert(g0);
  for (auto &[rank, q] : ex.permutations) {
    auto s = permutation_unrank(rank, d.n);
    if (is_involution_or_id(s))
      q = 0;
    else if (is_involution_or_id(compose(g0inv, s)))
      q = c0;
    else
      q = (2 * c0) % 3;
  }
  if (mod3)
    for (const auto &e : d.generator_elements)
      if (ex.permutations.at(permutation_rank(e.sigma())) != e.eta(3))
        throw std::logic_error("Theta5 generators disagree with the calibrated quotient");
}

} // namespace

std::string_view to_string(GroupCase c) {
  switch (c) {
  case GroupCase::FullGenSym: return "FullGenSym";
  case GroupCase::EvenPermFullRot: return "EvenPermFullRot";
  case GroupCase::TwistBipartiteParity: return "TwistBipartiteParity";
  case GroupCase::Cyclic: return "Cyclic";
  case GroupCase::Theta5Plain: return "Theta5Plain";
  case GroupCase::Theta5Mod3: return "Theta5Mod3";
  case GroupCase::Theta7Plain: return "Theta7Plain";
  case GroupCase::Theta7Parity: return "Theta7Parity";
  case GroupCase::OracleFallback: return "OracleFallback";
  }
  return "?";
}

bool is_exceptional(GroupCase c) {
  return c == GroupCase::Theta5Plain || c == GroupCase::Theta5Mod3 ||
         c == GroupCase::Theta7Plain || c == GroupCase::Theta7Parity;
}

ElementSet::ElementSet(std::vector<GroupElement> elements) : elements_(std::move(elements)) {
  for (const auto &e : elements_) {
    if (GroupElement::keyable(e.modulus(), e.size()))
      keys_.insert(e.key());
    else
      text_.insert(e.to_string());
  }
}

bool ElementSet::contains(const GroupElement &e) const {
  if (GroupElement::keyable(e.modulus(), e.size()))
    return keys_.contains(e.key());
  return text_.contains(e.to_string());
}

bool ExceptionalData::contains(const std::vector<std::uint32_t> &sigma) const {
  return permutations.contains(permutation_rank(sigma));
}

GroupDescriptor classify(const TwistGraph &g, std::size_t home, std::size_t cap) {
  if (home >= g.vertex_count())
    throw std::invalid_argument("home vertex out of range");
  GroupDescriptor d;
  d.home = home;
  d.n = g.vertex_count() - 1;
  d.original_m = g.modulus();
  d.reduction = normalize_and_reduce(g);
  const TwistGraph r = d.reduction.reduced.with_home(home);
  d.m = r.modulus();
  d.sites = home_sites(g, home);

  d.report = validate(r);
  d.bipartite = is_bipartite(r);
  d.twist_bipartite = is_twist_bipartite(r);
  d.surjectivity = is_phi_surjective(r);
  d.generators = fundamental_generators(r, home);
  for (const auto &p : d.generators) {
    GroupElement e = element_of_path(r, p);
    std::vector<std::int64_t> x(e.x().begin(), e.x().end());
    d.generator_elements.emplace_back(d.m, d.sites, e.sigma(), std::move(x));
  }

  const auto &rep = d.report;
  auto fallback = [&] {
    d.kind = GroupCase::OracleFallback;
    auto set = gs_closure(d.m, d.sites, d.generator_elements, cap);
    if (!set)
      throw Undecided("generated group exceeds " + std::to_string(cap) + " elements");
    d.fallback_set.emplace(std::move(*set));
  };

  if (!rep.two_vertex_connected) {
    fallback();
  } else if (rep.simple_collapse_class == CollapseClass::Cycle) {
    if (rep.has_parallel_edges || d.generator_elements.size() != 1) {
      fallback();
    } else {
      d.kind = GroupCase::Cyclic;
      const GroupElement &loop = d.generator_elements.front();
      std::vector<GroupElement> powers{GroupElement::identity(d.m, d.sites)};
      for (GroupElement cur = loop; !cur.is_identity(); cur = gs_multiply(loop, cur))
        powers.push_back(cur);
      d.cyclic_powers.emplace(std::move(powers));
    }
  } else if (rep.simple_collapse_class == CollapseClass::Theta5 && !rep.has_parallel_edges) {
    auto relabel = *match_reference(r, theta5_reference());
    bool mod3 = d.m % 3 == 0 && theta5_path_sum(r, relabel) == 0;
    d.kind = mod3 ? GroupCase::Theta5Mod3 : GroupCase::Theta5Plain;
    d.exceptional = permutation_part(d, 12);
    d.exceptional->relabel = std::move(relabel);
    calibrate_q(d, mod3);
  } else if (rep.simple_collapse_class == CollapseClass::Theta7 && !rep.has_parallel_edges) {
    bool parity = d.m % 2 == 0 && d.twist_bipartite.value;
    d.kind = parity ? GroupCase::Theta7Parity : GroupCase::Theta7Plain;
    d.exceptional = permutation_part(d, 120);
    d.exceptional->relabel = *match_reference(r, theta7_reference());
  } else if (rep.simple_collapse_class != CollapseClass::Other || g.vertex_count() < 4) {
    fallback();
  } else if (d.bipartite.value) {
    d.kind = GroupCase::EvenPermFullRot;
  } else if (d.m % 2 == 0 && d.twist_bipartite.value) {
    d.kind = GroupCase::TwistBipartiteParity;
  } else {
    d.kind = GroupCase::FullGenSym;
  }
  d.order = group_order(d);
  return d;
}

GroupDescriptor classify(const TwistGraph &g) { return classify(g, g.home()); }

BigInt group_order(const GroupDescriptor &d) {
  const BigInt rot = power(d.m, d.n);
  switch (d.kind) {
  case GroupCase::FullGenSym: return rot * factorial(d.n);
  case GroupCase::EvenPermFullRot:
  case GroupCase::TwistBipartiteParity: return rot * factorial(d.n) / 2;
  case GroupCase::Theta5Plain: return rot * 12;
  case GroupCase::Theta5Mod3: return rot * 4;
  case GroupCase::Theta7Plain: return rot * 120;
  case GroupCase::Theta7Parity: return rot * 60;
  case GroupCase::Cyclic: return d.cyclic_powers ? BigInt(d.cyclic_powers->size()) : BigInt(0);
  case GroupCase::OracleFallback: return d.fallback_set ? BigInt(d.fallback_set->size()) : BigInt(0);
  }
  return 0;
}

std::optional<GroupElement> reduce_element(const GroupDescriptor &d, const GroupElement &e) {
  if (e.size() != d.n || e.modulus() != d.original_m)
    throw std::invalid_argument("element does not belong to this board");
  const auto &psi = d.reduction.gauge.psi;
  const std::int64_t m = d.original_m, div = d.reduction.d;
  auto global = [&](std::size_t i) { return i < d.home ? i : i + 1; };
  std::vector<std::uint32_t> from(d.n);
  for (std::size_t i = 0; i < d.n; ++i)
    from[e.sigma(i)] = static_cast<std::uint32_t>(i);
  std::vector<std::int64_t> x(d.n);
  for (std::size_t i = 0; i < d.n; ++i) {
    std::int64_t v = static_cast<std::int64_t>(e.x(i)) + psi[global(i)] - psi[global(from[i])];
    v = ((v % m) + m) % m;
    if (v % div != 0)
      return std::nullopt;
    x[i] = v / div;
  }
  return GroupElement(d.m, d.sites, e.sigma(), std::move(x));
}

bool accepts_reduced(const GroupDescriptor &d, const GroupElement &e) {
  switch (d.kind) {
  case GroupCase::FullGenSym: return true;
  case GroupCase::EvenPermFullRot: return e.sign() == 1;
  case GroupCase::TwistBipartiteParity: return e.eta(2) == (e.sign() == -1 ? 1u : 0u);
  case GroupCase::Theta5Plain:
  case GroupCase::Theta7Plain: return d.exceptional->contains(e.sigma());
  case GroupCase::Theta5Mod3: {
    auto it = d.exceptional->permutations.find(permutation_rank(e.sigma()));
    return it != d.exceptional->permutations.end() && e.eta(3) == it->second;
  }
  case GroupCase::Theta7Parity:
    return d.exceptional->contains(e.sigma()) && e.eta(2) == (e.sign() == -1 ? 1u : 0u);
  case GroupCase::Cyclic: return d.cyclic_powers->contains(e);
  case GroupCase::OracleFallback: return d.fallback_set->contains(e);
  }
  return false;
}

bool accepts(const GroupDescriptor &d, const GroupElement &e) {
  auto r = reduce_element(d, e);
  return r && accepts_reduced(d, *r);
}

bool is_solvable(const GroupDescriptor &d, const TwistGraph &g, const PuzzleState &s) {
  check_state(g, s, d.home);
  PuzzleState at_home = transport_blank_home(g, s, d.home);
  return accepts(d, state_to_element(g, at_home, d.home, d.sites));
}

bool is_solvable(const TwistGraph &g, std::size_t home, const PuzzleState &s) {
  return is_solvable(classify(g, home), g, s);
}

std::vector<std::vector<std::uint32_t>> pgl25_table() {
  constexpr std::uint32_t inf = 5;
  std::set<std::vector<std::uint32_t>> maps;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c)
        for (int dd = 0; dd < 5; ++dd) {
          if ((a * dd - b * c) % 5 == 0)
            continue;
          auto inv5 = [](int v) { // v in 1..4
            for (int w = 1; w < 5; ++w)
              if (v * w % 5 == 1)
                return w;
            return 0;
          };
          std::vector<std::uint32_t> p(6);
          for (int z = 0; z < 5; ++z) {
            int den = (c * z + dd) % 5;
            p[z] = den == 0 ? inf : static_cast<std::uint32_t>((a * z + b) * inv5(den) % 5);
          }
          p[inf] = c == 0 ? inf : static_cast<std::uint32_t>(a * inv5(c) % 5);
          maps.insert(std::move(p));
        }
  return {maps.begin(), maps.end()};
}

std::vector<std::pair<std::vector<std::uint32_t>, Residue>>
a4_quotient(const GroupDescriptor &d) {
  if (d.kind != GroupCase::Theta5Plain && d.kind != GroupCase::Theta5Mod3)
    throw std::invalid_argument("a4_quotient needs a Theta5 board");
  std::vector<std::pair<std::vector<std::uint32_t>, Residue>> out;
  for (const auto &[rank, q] : d.exceptional->permutations)
    out.emplace_back(permutation_unrank(rank, d.n), q);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace twist
