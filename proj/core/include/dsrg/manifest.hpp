#pragma once

#include <string>
#include <utility>
#include <vector>

namespace dsrg {

/// Lowercase hex SHA-256 of a file's contents. Throws IoError when the
/// file cannot be read.
std::string sha256_hex_of_file(const std::string& path);

/// Flat "key: value" sidecar describing how an output file was produced:
/// tool version, command line, parameters, input/output digests, seeds,
/// timings. Keys keep insertion order so repeated runs write identical
/// manifests.
struct Manifest {
  std::vector<std::pair<std::string, std::string>> entries;

  void add(const std::string& key, const std::string& value) {
    entries.emplace_back(key, value);
  }

  std::string str() const;
  void write(const std::string& path) const;
};

/// Sidecar path convention: "<output>.manifest".
std::string manifest_path_for(const std::string& out_path);

}  // namespace dsrg
