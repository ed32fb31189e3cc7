#ifndef TWIST_PRESETS_HPP
#define TWIST_PRESETS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twist/graph.hpp"

namespace twist {

/// Optional overrides for a preset board. Twists are keyed by edge id and
/// replace the preset's own values; unspecified edges keep them.
struct PresetOptions {
  std::optional<int> m;
  std::map<std::string, std::int64_t> twists;
};

/// Names: "grid:WxH", "cycle:K", "theta5", "theta7", "fifteen_plus_four",
/// "figure8", "k33", "k4". Throws std::invalid_argument for unknown names.
TwistGraph preset(std::string_view name, const PresetOptions &options = {});

/// Preset names accepted by preset(), with parameterized forms shown by example.
std::vector<std::string> preset_names();

TwistGraph grid_board(int width, int height, int m = 1);
TwistGraph cycle_board(int k, int m = 1);
TwistGraph theta5_board(int m = 1);
TwistGraph theta7_board(int m = 1);
TwistGraph fifteen_plus_four_board();
TwistGraph figure8_board();
TwistGraph k33_board(int m = 1);
TwistGraph k4_board(int m = 1);

} // namespace twist

#endif
