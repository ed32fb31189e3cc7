#ifndef TWIST_TOPOLOGY_HPP
#define TWIST_TOPOLOGY_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "twist/graph.hpp"
#include "twist/group.hpp"

namespace twist {

class PathError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A closed edge walk at `base`. Contiguity and closure are checked on
/// construction.
class ClosedPath {
public:
  ClosedPath() = default;
  ClosedPath(const TwistGraph &g, std::size_t base, std::vector<Traversal> steps);

  std::size_t base() const { return base_; }
  const std::vector<Traversal> &steps() const { return steps_; }
  std::size_t length() const { return steps_.size(); }

  /// p followed by q (both closed at the same base).
  ClosedPath concat(const TwistGraph &g, const ClosedPath &q) const;
  ClosedPath reversed(const TwistGraph &g) const;

private:
  std::size_t base_ = 0;
  std::vector<Traversal> steps_;
};

/// Cancel every e ebar pair (free reduction).
std::vector<Traversal> free_reduce(std::vector<Traversal> steps);

/// Coefficients on the canonical edge orientations, sparse.
struct CycleVector {
  std::map<std::size_t, Residue> omega;
};

CycleVector cycle_vector(const TwistGraph &g, const ClosedPath &p);
bool is_cycle(const TwistGraph &g, const CycleVector &c);

/// sum gamma_e * omega_e mod m. Throws PathError when omega is not a 1-cycle.
Residue phi_gamma(const TwistGraph &g, const CycleVector &omega);
/// Signed twist sum along a path.
Residue path_twist(const TwistGraph &g, const std::vector<Traversal> &steps);

/// One closed path per off-tree edge of the canonical spanning tree:
/// tree path base -> tail, the edge, tree path head -> base, freely reduced.
std::vector<ClosedPath> fundamental_generators(const TwistGraph &g, std::size_t base);

struct SurjectivityWitness {
  bool surjective = false;
  int gcd = 0;                       // gcd(m, phi(p_i) ...)
  std::vector<Residue> generator_values;
};

SurjectivityWitness is_phi_surjective(const TwistGraph &g);

struct KernelGenerator {
  Residue a = 0;
  GroupElement x;                    // pure rotation (x, id) over the non-base sites
  std::vector<std::size_t> support;  // loop vertices other than its attachment point
  std::uint64_t exponent = 0;        // power of the path element that was taken
};

/// The power of element_of_path(p) that kills its permutation part.
KernelGenerator rotation_kernel_element(const TwistGraph &g, const ClosedPath &p);
std::vector<KernelGenerator> rotation_kernel_generators(const TwistGraph &g,
                                                        std::size_t base);

} // namespace twist

#endif
