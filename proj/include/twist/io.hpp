#ifndef TWIST_IO_HPP
#define TWIST_IO_HPP

// JSON documents shared by the command line tool and the HTTP service.
// Everything is emitted with ordered keys so identical inputs give
// byte-identical output.

#include <json.hpp>

#include "twist/classifier.hpp"
#include "twist/dynamics.hpp"
#include "twist/graph.hpp"
#include "twist/oracle.hpp"
#include "twist/solver.hpp"

namespace twist {

using Json = nlohmann::ordered_json;

TwistGraph graph_from_json(const nlohmann::json &doc);
Json graph_to_json(const TwistGraph &g);

/// twiststate/1. Tiles are named by home vertex; unknown keys, missing or
/// duplicate tiles and rotations outside [0, m) raise StateError.
PuzzleState state_from_json(const TwistGraph &g, const nlohmann::json &doc,
                            std::size_t home);
Json state_to_json(const TwistGraph &g, const PuzzleState &s);

Json element_to_json(const GroupElement &e);
Json validation_to_json(const TwistGraph &g, const ValidationReport &r);
/// Case tag, n, m, d, order (decimal string) and certificates.
Json descriptor_to_json(const TwistGraph &g, const GroupDescriptor &d);
Json reachable_to_json(const TwistGraph &g, const ReachableSet &r);
Json verify_to_json(const VerifyReport &r);
Json moves_to_json(const TwistGraph &g, const std::vector<Traversal> &moves);
/// Throws std::invalid_argument on anything but an array of move names.
std::vector<Traversal> moves_from_json(const TwistGraph &g, const nlohmann::json &doc);

} // namespace twist

#endif
