#include "photoseal/cipher.hpp"

#include "photoseal/error.hpp"

#include <charconv>
#include <numeric>
#include <utility>

namespace photoseal {
namespace {

constexpr int kAlphabet = 26;

int mod26(long long v) noexcept {
  const long long r = v % kAlphabet;
  return static_cast<int>(r < 0 ? r + kAlphabet : r);
}

char shift_letter(char c, int shift) noexcept {
  if (c >= 'a' && c <= 'z') return static_cast<char>('a' + mod26(c - 'a' + shift));
  if (c >= 'A' && c <= 'Z') return static_cast<char>('A' + mod26(c - 'A' + shift));
  return c;
}

std::string apply_shift(std::string_view text, int shift) {
  std::string out(text);
  for (char& c : out) c = shift_letter(c, shift);
  return out;
}

// Strict non-negative decimal: digits only, no leading zeros except "0".
bool parse_decimal(std::string_view text, int& value) {
  if (text.empty() || text.size() > 9) return false;
  if (text.size() > 1 && text.front() == '0') return false;
  for (char c : text)
    if (c < '0' || c > '9') return false;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc() && ptr == text.data() + text.size();
}

long long det3(const HillMatrix& k) {
  const auto m = k.cast<long long>();
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

// Inverse of a mod 26, or 0 when gcd(a, 26) != 1.
int inverse_mod26(int a) {
  int t = 0, new_t = 1, r = kAlphabet, new_r = mod26(a);
  while (new_r != 0) {
    const int q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return r == 1 ? mod26(t) : 0;
}

std::string hill_apply(std::string_view normalized, const HillMatrix& k) {
  std::string out(normalized.size(), 'A');
  Eigen::RowVector3i p;
  for (std::size_t i = 0; i < normalized.size(); i += 3) {
    for (int j = 0; j < 3; ++j) p(j) = normalized[i + j] - 'A';
    const Eigen::RowVector3i c = p * k;
    for (int j = 0; j < 3; ++j) out[i + j] = static_cast<char>('A' + mod26(c(j)));
  }
  return out;
}

}  // namespace

CaesarKey::CaesarKey(int shift) : shift_(shift) {
  if (shift < 0 || shift >= kAlphabet)
    fail(Errc::invalid_key, "Caesar shift must lie in [0, 25], got " + std::to_string(shift));
}

std::string CaesarKey::serialize() const { return std::to_string(shift_); }

CaesarKey CaesarKey::parse(std::string_view text) {
  int value = 0;
  if (!parse_decimal(text, value))
    fail(Errc::invalid_key, "not a Caesar key: '" + std::string(text) + "'");
  return CaesarKey(value);
}

HillKey::HillKey(const HillMatrix& entries) : k_(entries.unaryExpr([](int v) { return mod26(v); })) {}

int HillKey::determinant_mod26() const noexcept { return mod26(det3(k_)); }

bool HillKey::invertible() const noexcept { return std::gcd(determinant_mod26(), kAlphabet) == 1; }

std::string HillKey::serialize() const {
  std::string out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      if (!out.empty()) out += ',';
      out += std::to_string(k_(r, c));
    }
  return out;
}

HillKey HillKey::parse(std::string_view text) {
  HillMatrix m;
  int index = 0;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view field = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    int value = 0;
    if (index >= 9 || !parse_decimal(field, value) || value >= kAlphabet)
      fail(Errc::invalid_key, "not a Hill key: '" + std::string(text) + "'");
    m(index / 3, index % 3) = value;
    ++index;
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (index != 9) fail(Errc::invalid_key, "Hill key needs 9 entries: '" + std::string(text) + "'");
  return HillKey(m);
}

std::string caesar_encrypt(std::string_view plaintext, CaesarKey key) { return apply_shift(plaintext, key.shift()); }

std::string caesar_decrypt(std::string_view ciphertext, CaesarKey key) {
  return apply_shift(ciphertext, kAlphabet - key.shift());
}

HillKey hill_key_inverse(const HillKey& key) {
  const int inv_det = inverse_mod26(key.determinant_mod26());
  if (inv_det == 0)
    fail(Errc::not_invertible, "Hill key determinant " + std::to_string(key.determinant_mod26()) +
                                   " has no inverse mod 26");
  const HillMatrix& k = key.matrix();
  HillMatrix adj;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      // adj(r, c) = cofactor(c, r)
      const int r0 = (c + 1) % 3, r1 = (c + 2) % 3;
      const int c0 = (r + 1) % 3, c1 = (r + 2) % 3;
      adj(r, c) = k(r0, c0) * k(r1, c1) - k(r0, c1) * k(r1, c0);
    }
  return HillKey(adj * inv_det);
}

std::string hill_normalize(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (c >= 'a' && c <= 'z') out += static_cast<char>(c - 'a' + 'A');
    else if (c >= 'A' && c <= 'Z') out += c;
  }
  return out;
}

std::size_t hill_padding(std::size_t normalized_length) noexcept { return (3 - normalized_length % 3) % 3; }

std::string hill_encrypt(std::string_view plaintext, const HillKey& key) {
  if (!key.invertible()) fail(Errc::not_invertible, "Hill key is not invertible mod 26");
  std::string normalized = hill_normalize(plaintext);
  if (normalized.empty()) fail(Errc::empty_input, "Hill plaintext has no letters");
  normalized.append(hill_padding(normalized.size()), 'X');
  return hill_apply(normalized, key.matrix());
}

std::string hill_decrypt(std::string_view ciphertext, const HillKey& key) {
  const std::string normalized = hill_normalize(ciphertext);
  if (normalized.size() % 3 != 0)
    fail(Errc::bad_length, "Hill ciphertext length " + std::to_string(normalized.size()) + " is not a multiple of 3");
  return hill_apply(normalized, hill_key_inverse(key).matrix());
}

std::string hill_decrypt(std::string_view ciphertext, const HillKey& key, std::size_t padding) {
  std::string plain = hill_decrypt(ciphertext, key);
  if (padding > 2 || padding > plain.size() || plain.find_first_not_of('X', plain.size() - padding) != std::string::npos)
    fail(Errc::bad_length, "declared padding does not match the decrypted tail");
  plain.resize(plain.size() - padding);
  return plain;
}

}  // namespace photoseal
