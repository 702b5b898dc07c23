#include "photoseal/digest.hpp"

#include <openssl/evp.h>

#include <array>
#include <stdexcept>

namespace photoseal {

std::string_view to_string(DigestAlgorithm algorithm) noexcept {
  return algorithm == DigestAlgorithm::sha256 ? "sha256" : "sha512";
}

std::optional<DigestAlgorithm> parse_digest_algorithm(std::string_view name) noexcept {
  if (name == "sha256") return DigestAlgorithm::sha256;
  if (name == "sha512") return DigestAlgorithm::sha512;
  return std::nullopt;
}

std::size_t hex_length(DigestAlgorithm algorithm) noexcept { return algorithm == DigestAlgorithm::sha256 ? 64 : 128; }

DigestHex hash_message(std::string_view message, DigestAlgorithm algorithm) {
  const EVP_MD* md = algorithm == DigestAlgorithm::sha256 ? EVP_sha256() : EVP_sha512();
  std::array<unsigned char, EVP_MAX_MD_SIZE> raw{};
  unsigned int size = 0;
  if (EVP_Digest(message.data(), message.size(), raw.data(), &size, md, nullptr) != 1)
    throw std::runtime_error("EVP_Digest failed");

  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * size);
  for (unsigned int i = 0; i < size; ++i) {
    hex += kHex[raw[i] >> 4];
    hex += kHex[raw[i] & 0x0f];
  }
  return {algorithm, std::move(hex)};
}

std::optional<DigestHex> parse_digest_hex(std::string_view hex) {
  DigestAlgorithm algorithm;
  if (hex.size() == 64) algorithm = DigestAlgorithm::sha256;
  else if (hex.size() == 128) algorithm = DigestAlgorithm::sha512;
  else return std::nullopt;
  for (char c : hex)
    if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'))) return std::nullopt;
  return DigestHex{algorithm, std::string(hex)};
}

}  // namespace photoseal
