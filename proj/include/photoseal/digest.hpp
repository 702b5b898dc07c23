#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace photoseal {

enum class DigestAlgorithm { sha256, sha512 };

std::string_view to_string(DigestAlgorithm algorithm) noexcept;
std::optional<DigestAlgorithm> parse_digest_algorithm(std::string_view name) noexcept;

/// Hex length of a digest: 64 for SHA-256, 128 for SHA-512.
std::size_t hex_length(DigestAlgorithm algorithm) noexcept;

/// Lowercase hex rendering of a SHA-2 digest.
struct DigestHex {
  DigestAlgorithm algorithm;
  std::string hex;

  friend bool operator==(const DigestHex&, const DigestHex&) = default;
};

DigestHex hash_message(std::string_view message, DigestAlgorithm algorithm);

/// Accepts exactly 64 or 128 lowercase hex characters and infers the algorithm
/// from the length.
std::optional<DigestHex> parse_digest_hex(std::string_view hex);

}  // namespace photoseal
