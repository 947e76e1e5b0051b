#include "setmax/checkpoint.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace setmax {
namespace {

using nlohmann::json;

constexpr const char* kFormatName = "setmax-checkpoint";

// FNV-1a over the serialized body; catches truncation and bit flips that
// still parse as JSON.
std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

json cards_to_json(const std::vector<CardId>& cards) {
  json out = json::array();
  for (CardId c : cards) out.push_back(c.value);
  return out;
}

std::vector<CardId> cards_from_json(const json& j) {
  std::vector<CardId> out;
  for (const auto& v : j) {
    const auto value = v.get<std::uint32_t>();
    if (value >= 6561) throw Error(Errc::checkpoint_corrupt, "card id out of range");
    out.emplace_back(value);
  }
  return out;
}

}  // namespace

void checkpoint_save(const Checkpoint& cp, const std::filesystem::path& path) {
  json body;
  body["config"] = {{"props", cp.props}, {"cards", cp.n}, {"symmetry", cp.symmetry},
                    {"mode", "pruned"}};
  body["units_total"] = cp.units_total;
  json frontier = json::array();
  for (const auto& prefix : cp.frontier) frontier.push_back(cards_to_json(prefix));
  body["frontier"] = std::move(frontier);
  body["best_so_far"] = cp.best_so_far;
  body["witness_unit"] = cp.witness_unit ? json(*cp.witness_unit) : json(nullptr);
  body["witness"] = cards_to_json(cp.witness);
  body["nodes_visited"] = cp.nodes_visited;
  body["configs_pruned"] = cp.configs_pruned;

  const std::string payload = body.dump();
  json doc;
  doc["format"] = kFormatName;
  doc["version"] = Checkpoint::kVersion;
  doc["checksum"] = hex(fnv1a(payload));
  doc["body"] = std::move(body);

  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::io_error, "cannot write checkpoint " + tmp.string());
    out << doc.dump(1) << '\n';
    if (!out.flush()) throw Error(Errc::io_error, "cannot write checkpoint " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(Errc::io_error, "cannot move checkpoint into place: " + ec.message());
}

Checkpoint checkpoint_load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open checkpoint " + path.string());
  std::ostringstream text;
  text << in.rdbuf();

  const std::string where = "checkpoint " + path.string() + ": ";
  json doc = json::parse(text.str(), nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw Error(Errc::checkpoint_corrupt, where + "not valid JSON");
  }
  try {
    if (doc.at("format").get<std::string>() != kFormatName) {
      throw Error(Errc::checkpoint_corrupt, where + "not a setmax checkpoint");
    }
    const int version = doc.at("version").get<int>();
    if (version != Checkpoint::kVersion) {
      throw Error(Errc::checkpoint_version,
                  where + "format version " + std::to_string(version) +
                      " is not supported (expected " + std::to_string(Checkpoint::kVersion) + ")");
    }
    const json& body = doc.at("body");
    if (hex(fnv1a(body.dump())) != doc.at("checksum").get<std::string>()) {
      throw Error(Errc::checkpoint_corrupt, where + "checksum mismatch");
    }

    Checkpoint cp;
    const json& config = body.at("config");
    cp.props = config.at("props").get<int>();
    cp.n = config.at("cards").get<int>();
    cp.symmetry = config.at("symmetry").get<bool>();
    cp.units_total = body.at("units_total").get<std::uint64_t>();
    for (const auto& prefix : body.at("frontier")) cp.frontier.push_back(cards_from_json(prefix));
    cp.best_so_far = body.at("best_so_far").get<std::uint64_t>();
    if (!body.at("witness_unit").is_null()) {
      cp.witness_unit = body.at("witness_unit").get<std::uint64_t>();
    }
    cp.witness = cards_from_json(body.at("witness"));
    cp.nodes_visited = body.at("nodes_visited").get<std::uint64_t>();
    cp.configs_pruned = body.at("configs_pruned").get<std::uint64_t>();
    if (cp.frontier.size() > cp.units_total) {
      throw Error(Errc::checkpoint_corrupt, where + "frontier larger than the unit count");
    }
    return cp;
  } catch (const json::exception& e) {
    throw Error(Errc::checkpoint_corrupt, where + e.what());
  }
}

}  // namespace setmax
