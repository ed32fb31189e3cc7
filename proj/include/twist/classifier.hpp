#ifndef TWIST_CLASSIFIER_HPP
#define TWIST_CLASSIFIER_HPP

// Closed-form description of the group of solvable blank-at-home positions.
//
// classify() first regauges the board so the twist vanishes on a spanning
// tree and divides out d = gcd(m, twists); every predicate below is then
// evaluated in those reduced coordinates, where phi_gamma is onto Z/m'Z.
//
//   FullGenSym            all of S(m', n)
//   EvenPermFullRot       sigma even                       (bipartite board)
//   TwistBipartiteParity  sum x == sign(sigma) mod 2       (twist-bipartite board)
//   Theta5Plain           sigma in A4
//   Theta5Mod3            sigma in A4, sum x == q(sigma) mod 3
//   Theta7Plain           sigma in PGL(2,5)
//   Theta7Parity          sigma in PGL(2,5), sum x == sign(sigma) mod 2
//   Cyclic                a power of the single loop element
//   OracleFallback        explicit closure of the generator elements
//
// The A4 / PGL(2,5) sets are not hard-coded: they are the closure of the
// permutation parts of the board's own fundamental generators at the home
// vertex, so any vertex naming and any home works.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "twist/dynamics.hpp"
#include "twist/graph.hpp"
#include "twist/group.hpp"
#include "twist/topology.hpp"

namespace twist {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kDefaultCap = 5'000'000;

/// A bounded enumeration ran out of budget; the question is undecided.
class Undecided : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class GroupCase {
  FullGenSym,
  EvenPermFullRot,
  TwistBipartiteParity,
  Cyclic,
  Theta5Plain,
  Theta5Mod3,
  Theta7Plain,
  Theta7Parity,
  OracleFallback,
};

std::string_view to_string(GroupCase c);
bool is_exceptional(GroupCase c);

/// Explicit group elements with keyed membership.
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(std::vector<GroupElement> elements);

  bool contains(const GroupElement &e) const;
  std::size_t size() const { return elements_.size(); }
  const std::vector<GroupElement> &elements() const { return elements_; }

private:
  std::vector<GroupElement> elements_;
  std::unordered_set<PackedKey, PackedKeyHash> keys_;
  std::unordered_set<std::string> text_;
};

struct ExceptionalData {
  /// Permutation part of the group, over the home sites, by Lehmer rank.
  /// The mapped value is q(sigma) for Theta5 boards and 0 otherwise.
  std::unordered_map<std::uint64_t, Residue> permutations;
  /// Reference vertex -> board vertex (left, top, right, center, bottom for
  /// Theta5; inf, 0, 1, 2, 3, 4, center for Theta7).
  std::vector<std::size_t> relabel;
  /// Theta5 only: index of the generator whose permutation pinned q.
  std::optional<std::size_t> calibration_generator;

  bool contains(const std::vector<std::uint32_t> &sigma) const;
};

struct GroupDescriptor {
  GroupCase kind = GroupCase::OracleFallback;
  std::size_t home = 0;
  std::size_t n = 0;
  int m = 1;            // effective modulus m / d
  int original_m = 1;
  Reduction reduction;  // gauge, d, normalized and reduced boards
  SiteList sites;       // non-home vertices

  ValidationReport report;
  BipartiteResult bipartite;
  TwistBipartiteResult twist_bipartite;
  SurjectivityWitness surjectivity;  // of the reduced board at home

  std::vector<ClosedPath> generators;             // fundamental generators at home
  std::vector<GroupElement> generator_elements;   // in reduced coordinates

  std::optional<ExceptionalData> exceptional;
  std::optional<ElementSet> cyclic_powers;
  std::optional<ElementSet> fallback_set;

  BigInt order;
};

/// Throws Undecided when the fallback closure exceeds `cap` elements.
GroupDescriptor classify(const TwistGraph &g, std::size_t home,
                         std::size_t cap = kDefaultCap);
GroupDescriptor classify(const TwistGraph &g);

BigInt group_order(const GroupDescriptor &d);

/// Blank-at-home element in the board's own coordinates -> reduced
/// coordinates, or nullopt when some rotation is not a multiple of d.
std::optional<GroupElement> reduce_element(const GroupDescriptor &d,
                                           const GroupElement &e);
/// Case predicate on a reduced-coordinate element.
bool accepts_reduced(const GroupDescriptor &d, const GroupElement &reduced);
/// Membership for a blank-at-home element in board coordinates.
bool accepts(const GroupDescriptor &d, const GroupElement &e);

/// Transport the blank home, bridge, and test membership.
bool is_solvable(const GroupDescriptor &d, const TwistGraph &g, const PuzzleState &s);
bool is_solvable(const TwistGraph &g, std::size_t home, const PuzzleState &s);

/// Fractional linear maps z -> (az+b)/(cz+d) over F5 acting on
/// {0,1,2,3,4,inf}; inf is index 5. 120 permutations, sorted.
std::vector<std::vector<std::uint32_t>> pgl25_table();

/// q: A4 -> Z/3Z for a Theta5 descriptor, as (permutation over home sites,
/// value) pairs. Kernel is the Klein four-group; the nontrivial cosets are
/// pinned so q(sigma_p) == phi(p) mod 3 on the calibration generator.
std::vector<std::pair<std::vector<std::uint32_t>, Residue>>
a4_quotient(const GroupDescriptor &d);

} // namespace twist

#endif
