#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace cool {

// SHA-256 hex digest (OpenSSL-backed). Used for cache keys, config
// hashes, and parameter fingerprints.
std::string sha256_hex(std::string_view data);

std::string sha256_hex(const double* data, std::size_t n);

}  // namespace cool
