#ifndef TWIST_GROUP_HPP
#define TWIST_GROUP_HPP

// Arithmetic in the generalized symmetric group S(m,n) = (Z/mZ) wr S_n.
//
// An element is a pair (x, sigma) over an explicit, ordered list of site
// labels. sigma maps the site a tile started on to the site it ends on;
// x is destination-indexed: x[v] is the rotation picked up by whichever
// tile sits on v afterwards. With that convention
//
//     (y, tau) * (x, sigma) = (y + tau.x, tau o sigma),  (tau.x)[v] = x[tau^-1(v)]
//
// and "apply inner, then outer" is the product outer * inner.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace twist {

using Residue = std::uint32_t;

/// Raised when two elements cannot be multiplied (different m or site sets).
class CompositionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable ordered list of site labels shared between elements.
using SiteList = std::shared_ptr<const std::vector<std::string>>;

SiteList make_sites(std::vector<std::string> labels);
bool same_sites(const SiteList &a, const SiteList &b);

/// Fixed-width hash key. Two 64-bit words are enough for every board the
/// enumerators accept (placement rank below 20!, rotation digits below 2^64).
struct PackedKey {
  std::uint64_t rank = 0;
  std::uint64_t digits = 0;

  friend bool operator==(const PackedKey &, const PackedKey &) = default;
  friend auto operator<=>(const PackedKey &, const PackedKey &) = default;
};

struct PackedKeyHash {
  std::size_t operator()(const PackedKey &k) const noexcept {
    std::uint64_t h = k.rank * 0x9E3779B97F4A7C15ull;
    h ^= k.digits + 0x7F4A7C159E3779B9ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

/// Lehmer rank of a permutation of {0..n-1}; n <= 20.
std::uint64_t permutation_rank(std::span<const std::uint32_t> perm);
/// Inverse of permutation_rank.
std::vector<std::uint32_t> permutation_unrank(std::uint64_t rank, std::size_t n);
/// +1 or -1.
int permutation_sign(std::span<const std::uint32_t> perm);

class GroupElement {
public:
  GroupElement() = default;

  /// Validates sigma is a bijection on the sites and normalizes x into [0, m).
  GroupElement(int m, SiteList sites, std::vector<std::uint32_t> sigma,
               std::vector<std::int64_t> x);

  static GroupElement identity(int m, SiteList sites);
  /// Build from labels: sigma given as (from, to) label pairs, x as (site, value).
  static GroupElement from_labels(
      int m, SiteList sites,
      const std::vector<std::pair<std::string, std::string>> &moves,
      const std::vector<std::pair<std::string, std::int64_t>> &rotations);

  int modulus() const { return m_; }
  std::size_t size() const { return sigma_.size(); }
  const SiteList &sites() const { return sites_; }
  const std::string &label(std::size_t i) const { return (*sites_)[i]; }
  std::size_t index_of(const std::string &label) const;

  const std::vector<std::uint32_t> &sigma() const { return sigma_; }
  const std::vector<Residue> &x() const { return x_; }
  std::uint32_t sigma(std::size_t i) const { return sigma_[i]; }
  Residue x(std::size_t i) const { return x_[i]; }

  bool is_identity() const;
  int sign() const { return permutation_sign(sigma_); }
  /// Sum of rotations mod a.
  Residue eta(int a) const;

  /// Canonical key (sigma rank, base-m rotation digits). Requires n <= 20
  /// and m^n < 2^64.
  PackedKey key() const;
  static GroupElement from_key(int m, SiteList sites, PackedKey key);
  static bool keyable(int m, std::size_t n);

  std::string to_string() const;

  friend bool operator==(const GroupElement &a, const GroupElement &b);

private:
  int m_ = 1;
  SiteList sites_;
  std::vector<std::uint32_t> sigma_;
  std::vector<Residue> x_;
};

GroupElement gs_multiply(const GroupElement &outer, const GroupElement &inner);
GroupElement gs_inverse(const GroupElement &g);
GroupElement gs_power(const GroupElement &g, std::uint64_t k);

struct Projection {
  std::vector<std::uint32_t> sigma;
  std::vector<Residue> x_mod_a;
  Residue eta = 0;
  int sign = 1;
};

/// pi, rho_{m,a}, eta_{m,a} and sign in one go. Throws std::invalid_argument
/// when a does not divide m.
Projection gs_project(const GroupElement &g, int a);

/// Breadth-first closure of the generated subgroup. Returns nullopt when the
/// group has more than `cap` elements. Elements come back in BFS discovery
/// order, which is deterministic for a given generator list.
std::optional<std::vector<GroupElement>>
gs_closure(int m, const SiteList &sites, std::span<const GroupElement> generators,
           std::size_t cap);

/// Permutation-only closure over {0..n-1}; perms compose as (a*b)[i] = a[b[i]].
std::optional<std::vector<std::vector<std::uint32_t>>>
permutation_closure(std::size_t n,
                    std::span<const std::vector<std::uint32_t>> generators,
                    std::size_t cap);

} // namespace twist

template <> struct std::hash<twist::PackedKey> {
  std::size_t operator()(const twist::PackedKey &k) const noexcept {
    return twist::PackedKeyHash{}(k);
  }
};

#endif
