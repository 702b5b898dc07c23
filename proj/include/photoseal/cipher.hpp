#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <string>
#include <string_view>

namespace photoseal {

/// Caesar shift in [0, 25].
class CaesarKey {
 public:
  explicit CaesarKey(int shift);

  int shift() const noexcept { return shift_; }

  /// Decimal text, e.g. "16".
  std::string serialize() const;
  /// Strict inverse of serialize(): no sign, no leading zeros, value in [0, 25].
  static CaesarKey parse(std::string_view text);

  friend bool operator==(const CaesarKey&, const CaesarKey&) = default;

 private:
  int shift_;
};

using HillMatrix = Eigen::Matrix<int, 3, 3>;

/// 3x3 Hill key with every entry reduced into [0, 25]. Construction does not
/// require invertibility; operations that need the inverse raise
/// Errc::not_invertible instead.
class HillKey {
 public:
  explicit HillKey(const HillMatrix& entries);

  const HillMatrix& matrix() const noexcept { return k_; }
  int determinant_mod26() const noexcept;
  bool invertible() const noexcept;

  /// Nine comma-separated decimal entries, row-major.
  std::string serialize() const;
  static HillKey parse(std::string_view text);

  friend bool operator==(const HillKey& a, const HillKey& b) { return a.k_ == b.k_; }

 private:
  HillMatrix k_;
};

std::string caesar_encrypt(std::string_view plaintext, CaesarKey key);
std::string caesar_decrypt(std::string_view ciphertext, CaesarKey key);

/// Modular inverse of the key via adjugate and det^-1 mod 26.
HillKey hill_key_inverse(const HillKey& key);

/// Uppercases and drops everything that is not an ASCII letter.
std::string hill_normalize(std::string_view text);

/// Number of 'X' symbols hill_encrypt appends to a plaintext whose normalized
/// length is `normalized_length`.
std::size_t hill_padding(std::size_t normalized_length) noexcept;

/// Row-vector convention: each 3-letter group p becomes p * K mod 26.
std::string hill_encrypt(std::string_view plaintext, const HillKey& key);

/// Returns the padded plaintext. Use the overload taking `padding` to strip the
/// trailing pad symbols recorded at encryption time.
std::string hill_decrypt(std::string_view ciphertext, const HillKey& key);
std::string hill_decrypt(std::string_view ciphertext, const HillKey& key, std::size_t padding);

}  // namespace photoseal
