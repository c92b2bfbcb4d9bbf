#include "qwalk/coin_io.hpp"

#include "json.hpp"

namespace qwalk {

using nlohmann::json;

namespace {

Matrix parse_block(const json& rows, const std::string& path) {
  if (!rows.is_array() || rows.empty()) throw ConfigError(path, "expected a non-empty matrix");
  const auto n = rows.size();
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::string rp = path + "[" + std::to_string(r) + "]";
    if (!rows[r].is_array() || rows[r].size() != n) {
      throw ConfigError(rp, "expected a row of " + std::to_string(n) + " entries");
    }
    for (std::size_t c = 0; c < n; ++c) {
      const json& z = rows[r][c];
      const std::string zp = rp + "[" + std::to_string(c) + "]";
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
        throw ConfigError(zp, "expected [re, im]");
      }
      m(r, c) = Complex(z[0].get<double>(), z[1].get<double>());
    }
  }
  return m;
}

}  // namespace

CoinSpec CoinConfig::resolve(const PortGraph& graph) const {
  switch (type) {
    case Type::Hadamard:
      return CoinSpec::shared(hadamard_phi(phi));
    case Type::Dft:
      return graph.is_regular() ? CoinSpec::shared(dft_coin(graph.degree()))
                                : default_coin(graph);
    case Type::Custom:
      if (blocks.size() == 1) return CoinSpec::shared(blocks.front());
      return CoinSpec::per_vertex(blocks);
  }
  return default_coin(graph);
}

std::string CoinConfig::type_name() const {
  switch (type) {
    case Type::Hadamard: return "hadamard";
    case Type::Dft: return "dft";
    case Type::Custom: return "custom";
  }
  return "unknown";
}

CoinConfig parse_coin_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("coin", std::string("JSON syntax error: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("type") || !doc["type"].is_string()) {
    throw ConfigError("coin.type", "expected \"hadamard\", \"dft\" or \"custom\"");
  }
  CoinConfig cfg;
  const auto type = doc["type"].get<std::string>();
  if (type == "hadamard") {
    cfg.type = CoinConfig::Type::Hadamard;
    if (doc.contains("phi")) {
      if (!doc["phi"].is_number()) throw ConfigError("coin.phi", "expected a number");
      cfg.phi = doc["phi"].get<double>();
    }
  } else if (type == "dft") {
    cfg.type = CoinConfig::Type::Dft;
  } else if (type == "custom") {
    cfg.type = CoinConfig::Type::Custom;
    if (!doc.contains("blocks") || !doc["blocks"].is_array() || doc["blocks"].empty()) {
      throw ConfigError("coin.blocks", "expected a non-empty array of matrices");
    }
    for (std::size_t i = 0; i < doc["blocks"].size(); ++i) {
      cfg.blocks.push_back(parse_block(doc["blocks"][i], "coin.blocks[" + std::to_string(i) + "]"));
    }
  } else {
    throw ConfigError("coin.type", "unknown coin type \"" + type + "\"");
  }
  return cfg;
}

std::string coin_to_json(const CoinConfig& coin) {
  json doc = {{"type", coin.type_name()}};
  if (coin.type == CoinConfig::Type::Hadamard) doc["phi"] = coin.phi;
  if (coin.type == CoinConfig::Type::Custom) {
    json blocks = json::array();
    for (const Matrix& b : coin.blocks) {
      json rows = json::array();
      for (int r = 0; r < b.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < b.cols(); ++c) row.push_back({b(r, c).real(), b(r, c).imag()});
        rows.push_back(row);
      }
      blocks.push_back(rows);
    }
    doc["blocks"] = blocks;
  }
  return doc.dump();
}

}  // namespace qwalk
