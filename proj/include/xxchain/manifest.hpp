#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace xxchain {

// FNV-1a 64-bit digest of a file's bytes.
std::uint64_t fnv1a64_file(const std::string& path);

// Reproducibility record written next to every command's outputs: the
// configuration echo, seed, PRNG name, worker count, wall-clock duration and
// a checksum per output file.
struct RunManifest {
  std::string command;
  std::map<std::string, std::string> config_echo;
  std::uint64_t base_seed = 0;
  unsigned workers = 1;
  double duration_seconds = 0.0;
  std::vector<std::string> output_files;  // relative to the manifest directory

  // Hashes the listed files (which must exist) and writes manifest.json
  // under out_dir.
  void save(const std::string& out_dir) const;
};

// Re-hashes every file referenced by out_dir/manifest.json and reports
// whether all checksums still match.
bool verify_manifest(const std::string& out_dir);

}  // namespace xxchain
