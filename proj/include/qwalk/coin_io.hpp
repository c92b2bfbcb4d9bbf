#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qwalk/coin.hpp"

namespace qwalk {

// Coin description as it appears in config files:
//   {"type": "hadamard", "phi": 1.5707963} | {"type": "dft"}
//   | {"type": "custom", "blocks": [[[[re, im], ...], ...], ...]}
// A custom list with one block is shared by all vertices.
struct CoinConfig {
  enum class Type { Hadamard, Dft, Custom };
  Type type = Type::Hadamard;
  double phi = 1.5707963267948966;
  std::vector<Matrix> blocks;

  CoinSpec resolve(const PortGraph& graph) const;
  std::string type_name() const;
};

CoinConfig parse_coin_json(std::string_view text);
std::string coin_to_json(const CoinConfig& coin);

}  // namespace qwalk
