#include "xxchain/manifest.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "json.hpp"
#include "xxchain/version.hpp"

namespace fs = std::filesystem;

namespace xxchain {

std::uint64_t fnv1a64_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for hashing");
  std::uint64_t hash = 0xcbf29ce484222325ull;
  char buffer[1 << 14];
  while (in.read(buffer, sizeof(buffer)) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      hash ^= static_cast<unsigned char>(buffer[i]);
      hash *= 0x100000001b3ull;
    }
  }
  return hash;
}

void RunManifest::save(const std::string& out_dir) const {
  nlohmann::ordered_json doc;
  doc["command"] = command;
  doc["artifact_version"] = kVersion;
  doc["prng"] = kPrngName;
  doc["base_seed"] = base_seed;
  doc["workers"] = workers;
  doc["duration_seconds"] = duration_seconds;
  doc["config"] = config_echo;

  nlohmann::ordered_json outputs = nlohmann::ordered_json::array();
  for (const std::string& file : output_files) {
    const fs::path path = fs::path(out_dir) / file;
    if (!fs::exists(path)) {
      throw std::runtime_error("manifest references missing file '" +
                               path.string() + "'");
    }
    nlohmann::ordered_json entry;
    entry["file"] = file;
    entry["bytes"] = static_cast<std::uint64_t>(fs::file_size(path));
    entry["fnv1a64"] = fnv1a64_file(path.string());
    outputs.push_back(entry);
  }
  doc["outputs"] = outputs;

  const fs::path manifest_path = fs::path(out_dir) / "manifest.json";
  std::ofstream out(manifest_path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write '" + manifest_path.string() + "'");
  }
  out << doc.dump(2) << '\n';
}

bool verify_manifest(const std::string& out_dir) {
  const fs::path manifest_path = fs::path(out_dir) / "manifest.json";
  std::ifstream in(manifest_path);
  if (!in) {
    throw std::runtime_error("cannot open '" + manifest_path.string() + "'");
  }
  nlohmann::json doc = nlohmann::json::parse(in);
  for (const auto& entry : doc.at("outputs")) {
    const fs::path path = fs::path(out_dir) / entry.at("file").get<std::string>();
    if (!fs::exists(path)) return false;
    if (fnv1a64_file(path.string()) != entry.at("fnv1a64").get<std::uint64_t>()) {
      return false;
    }
  }
  return true;
}

}  // namespace xxchain
