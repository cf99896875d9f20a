#include "cool/hash.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstring>
#include <stdexcept>

namespace cool {

namespace {

std::string digest_to_hex(const unsigned char* md, unsigned len) {
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 0xf]);
  }
  return out;
}

std::string sha256_hex_raw(const void* data, std::size_t n) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned len = 0;
  if (EVP_Digest(data, n, md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256: digest failed");
  }
  return digest_to_hex(md.data(), len);
}

}  // namespace

std::string sha256_hex(std::string_view data) { return sha256_hex_raw(data.data(), data.size()); }

std::string sha256_hex(const double* data, std::size_t n) {
  return sha256_hex_raw(data, n * sizeof(double));
}

}  // namespace cool
