#include "twist/group.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace twist {

namespace {

Residue mod(std::int64_t v, int m) {
  std::int64_t r = v % m;
  return static_cast<Residue>(r < 0 ? r + m : r);
}

void require_composable(const GroupElement &a, const GroupElement &b) {
  if (a.modulus() != b.modulus())
    throw CompositionError("elements have different moduli");
  if (!same_sites(a.sites(), b.sites()))
    throw CompositionError("elements act on different site sets");
}

std::vector<std::uint32_t> invert(const std::vector<std::uint32_t> &p) {
  std::vector<std::uint32_t> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    inv[p[i]] = static_cast<std::uint32_t>(i);
  return inv;
}

} // namespace

SiteList make_sites(std::vector<std::string> labels) {
  return std::make_shared<const std::vector<std::string>>(std::move(labels));
}

bool same_sites(const SiteList &a, const SiteList &b) {
  if (a == b)
    return true;
  if (!a || !b)
    return false;
  return *a == *b;
}

std::uint64_t permutation_rank(std::span<const std::uint32_t> perm) {
  const std::size_t n = perm.size();
  if (n > 20)
    throw std::length_error("permutation too long to rank in 64 bits");
  std::uint64_t rank = 0;
  std::uint32_t used = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t below = perm[i] == 0 ? 0 : std::popcount(used & ((1u << perm[i]) - 1u));
    std::uint64_t smaller = perm[i] - below;
    rank = rank * (n - i) + smaller;
    used |= 1u << perm[i];
  }
  return rank;
}

std::vector<std::uint32_t> permutation_unrank(std::uint64_t rank, std::size_t n) {
  std::vector<std::uint32_t> digits(n);
  for (std::size_t i = n; i-- > 0;) {
    std::uint64_t base = n - i;
    digits[i] = static_cast<std::uint32_t>(rank % base);
    rank /= base;
  }
  std::vector<std::uint32_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0u);
  std::vector<std::uint32_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) {
    perm[i] = pool[digits[i]];
    pool.erase(pool.begin() + digits[i]);
  }
  return perm;
}

int permutation_sign(std::span<const std::uint32_t> perm) {
  std::vector<bool> seen(perm.size(), false);
  std::size_t transpositions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i])
      continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

GroupElement::GroupElement(int m, SiteList sites, std::vector<std::uint32_t> sigma,
                           std::vector<std::int64_t> x)
    : m_(m), sites_(std::move(sites)), sigma_(std::move(sigma)) {
  if (m_ < 1)
    throw std::invalid_argument("modulus must be at least 1");
  if (!sites_)
    throw std::invalid_argument("element needs a site list");
  const std::size_t n = sites_->size();
  if (sigma_.size() != n || x.size() != n)
    throw std::invalid_argument("sigma and x must cover exactly the declared sites");
  std::vector<bool> hit(n, false);
  for (auto s : sigma_) {
    if (s >= n || hit[s])
      throw std::invalid_argument("sigma is not a bijection on the sites");
    hit[s] = true;
  }
  x_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    x_[i] = mod(x[i], m_);
}

GroupElement GroupElement::identity(int m, SiteList sites) {
  const std::size_t n = sites ? sites->size() : 0;
  std::vector<std::uint32_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0u);
  return GroupElement(m, std::move(sites), std::move(sigma),
                      std::vector<std::int64_t>(n, 0));
}

GroupElement GroupElement::from_labels(
    int m, SiteList sites,
    const std::vector<std::pair<std::string, std::string>> &moves,
    const std::vector<std::pair<std::string, std::int64_t>> &rotations) {
  GroupElement id = identity(m, sites);
  std::vector<std::uint32_t> sigma = id.sigma_;
  std::vector<std::int64_t> x(id.size(), 0);
  for (const auto &[from, to] : moves)
    sigma[id.index_of(from)] = static_cast<std::uint32_t>(id.index_of(to));
  for (const auto &[site, value] : rotations)
    x[id.index_of(site)] = value;
  return GroupElement(m, std::move(sites), std::move(sigma), std::move(x));
}

std::size_t GroupElement::index_of(const std::string &label) const {
  auto it = std::find(sites_->begin(), sites_->end(), label);
  if (it == sites_->end())
    throw std::out_of_range("unknown site '" + label + "'");
  return static_cast<std::size_t>(it - sites_->begin());
}

bool GroupElement::is_identity() const {
  for (std::size_t i = 0; i < sigma_.size(); ++i)
    if (sigma_[i] != i || x_[i] != 0)
      return false;
  return true;
}

Residue GroupElement::eta(int a) const {
  std::uint64_t sum = 0;
  for (auto v : x_)
    sum += v;
  return static_cast<Residue>(sum % static_cast<std::uint64_t>(a));
}

bool GroupElement::keyable(int m, std::size_t n) {
  if (n > 20)
    return false;
  long double bound = 1;
  for (std::size_t i = 0; i < n; ++i)
    bound *= m;
  return bound < 1.8e19L;
}

PackedKey GroupElement::key() const {
  PackedKey k;
  k.rank = permutation_rank(sigma_);
  for (auto v : x_)
    k.digits = k.digits * static_cast<std::uint64_t>(m_) + v;
  return k;
}

GroupElement GroupElement::from_key(int m, SiteList sites, PackedKey key) {
  const std::size_t n = sites->size();
  auto sigma = permutation_unrank(key.rank, n);
  std::vector<std::int64_t> x(n);
  for (std::size_t i = n; i-- > 0;) {
    x[i] = static_cast<std::int64_t>(key.digits % static_cast<std::uint64_t>(m));
    key.digits /= static_cast<std::uint64_t>(m);
  }
  return GroupElement(m, std::move(sites), std::move(sigma), std::move(x));
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << "((";
  for (std::size_t i = 0; i < size(); ++i)
    os << (i ? "," : "") << label(i) << ":" << x_[i];
  os << "),";
  // cycle notation
  std::vector<bool> seen(size(), false);
  bool any = false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (seen[i] || sigma_[i] == i)
      continue;
    os << "(";
    for (std::size_t j = i; !seen[j]; j = sigma_[j]) {
      seen[j] = true;
      os << (j == i ? "" : " ") << label(j);
    }
    os << ")";
    any = true;
  }
  if (!any)
    os << "id";
  os << ")";
  return os.str();
}

bool operator==(const GroupElement &a, const GroupElement &b) {
  return a.m_ == b.m_ && same_sites(a.sites_, b.sites_) && a.sigma_ == b.sigma_ &&
         a.x_ == b.x_;
}

GroupElement gs_multiply(const GroupElement &outer, const GroupElement &inner) {
  require_composable(outer, inner);
  const std::size_t n = outer.size();
  const int m = outer.modulus();
  auto tau_inv = invert(outer.sigma());
  std::vector<std::uint32_t> sigma(n);
  std::vector<std::int64_t> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    sigma[i] = outer.sigma(inner.sigma(i));
    x[i] = static_cast<std::int64_t>(outer.x(i)) + inner.x(tau_inv[i]);
  }
  return GroupElement(m, outer.sites(), std::move(sigma), std::move(x));
}

GroupElement gs_inverse(const GroupElement &g) {
  const std::size_t n = g.size();
  auto sigma = invert(g.sigma());
  std::vector<std::int64_t> x(n);
  for (std::size_t i = 0; i < n; ++i)
    x[i] = -static_cast<std::int64_t>(g.x(g.sigma(i)));
  return GroupElement(g.modulus(), g.sites(), std::move(sigma), std::move(x));
}

GroupElement gs_power(const GroupElement &g, std::uint64_t k) {
  GroupElement result = GroupElement::identity(g.modulus(), g.sites());
  GroupElement base = g;
  while (k) {
    if (k & 1u)
      result = gs_multiply(base, result);
    base = gs_multiply(base, base);
    k >>= 1u;
  }
  return result;
}

Projection gs_project(const GroupElement &g, int a) {
  if (a < 1 || g.modulus() % a != 0)
    throw std::invalid_argument("projection modulus " + std::to_string(a) +
                                " does not divide " + std::to_string(g.modulus()));
  Projection p;
  p.sigma = g.sigma();
  p.x_mod_a.reserve(g.size());
  for (auto v : g.x())
    p.x_mod_a.push_back(v % static_cast<Residue>(a));
  p.eta = g.eta(a);
  p.sign = g.sign();
  return p;
}

std::optional<std::vector<GroupElement>>
gs_closure(int m, const SiteList &sites, std::span<const GroupElement> generators,
           std::size_t cap) {
  GroupElement id = GroupElement::identity(m, sites);
  for (const auto &g : generators) {
    if (g.modulus() != m || !same_sites(g.sites(), sites))
      throw CompositionError("generator does not belong to S(m, sites)");
  }
  if (cap < 1)
    return std::nullopt;
  std::vector<GroupElement> elements{id};
  // Keyed membership when possible, otherwise fall back to the printable form.
  const bool keyed = GroupElement::keyable(m, sites->size());
  std::unordered_set<PackedKey, PackedKeyHash> seen_keys;
  std::unordered_set<std::string> seen_text;
  auto insert = [&](const GroupElement &e) {
    return keyed ? seen_keys.insert(e.key()).second
                 : seen_text.insert(e.to_string()).second;
  };
  insert(id);
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto &g : generators) {
      GroupElement next = gs_multiply(g, elements[head]);
      if (insert(next)) {
        if (elements.size() >= cap)
          return std::nullopt;
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

std::optional<std::vector<std::vector<std::uint32_t>>>
permutation_closure(std::size_t n,
                    std::span<const std::vector<std::uint32_t>> generators,
                    std::size_t cap) {
  std::vector<std::uint32_t> id(n);
  std::iota(id.begin(), id.end(), 0u);
  std::vector<std::vector<std::uint32_t>> elements{id};
  std::unordered_set<std::uint64_t> seen{permutation_rank(id)};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto &g : generators) {
      std::vector<std::uint32_t> next(n);
      for (std::size_t i = 0; i < n; ++i)
        next[i] = g[elements[head][i]];
      if (seen.insert(permutation_rank(next)).second) {
        if (elements.size() >= cap)
          return std::nullopt;
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

} // namespace twist
