#pragma once

#include "photoseal/cipher.hpp"
#include "photoseal/digest.hpp"
#include "photoseal/entropy.hpp"
#include "photoseal/imageio.hpp"
#include "photoseal/payload.hpp"
#include "photoseal/stego.hpp"
#include "photoseal/transform.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace photoseal {

enum class CipherKind { caesar, hill };

std::string_view to_string(CipherKind kind) noexcept;
std::optional<CipherKind> parse_cipher_kind(std::string_view name) noexcept;

struct SealConfig {
  CipherKind cipher = CipherKind::caesar;
  std::optional<CaesarKey> caesar_key;
  std::optional<HillKey> hill_key;
  DigestAlgorithm digest = DigestAlgorithm::sha512;
  std::size_t row_length = kDefaultRowLength;
  EmbedMode mode = EmbedMode::overwrite;
  int quant_scale = kLosslessScale;

  static SealConfig caesar(int shift);
  static SealConfig hill(const HillKey& key);

  /// True when the key slot matching `cipher` is populated.
  bool has_key() const noexcept;

  /// Throws Errc::invalid_config unless exactly the key matching `cipher` is
  /// set, the row length tiles into 8x8 blocks and the scale is >= 1.
  void validate() const;
  /// Same checks minus the key requirement; verify works without a key.
  void validate_layout() const;

  QuantMatrix quantizer() const { return QuantMatrix::uniform(quant_scale); }
};

enum class Verdict { verified, tampered, undecodable };

std::string_view to_string(Verdict verdict) noexcept;

struct VerificationReport {
  Verdict verdict = Verdict::undecodable;
  EmbedMode mode = EmbedMode::overwrite;
  std::string recovered_message;
  std::string embedded_digest;
  std::string recomputed_digest;
  std::optional<CipherKind> cipher;
  std::optional<DigestAlgorithm> digest_algorithm;
  std::string embedded_key;
  std::size_t stream_bytes = 0;
  /// Why the verdict is not VERIFIED; empty otherwise.
  std::string reason;
};

/// Row 1 of the data block. Caesar keys are their decimal shift; Hill keys
/// are the nine entries followed by ";" and the pad count, e.g.
/// "3,0,0,0,3,0,0,0,3;2".
std::string serialize_key_row(const SealConfig& config, std::size_t hill_pad = 0);

/// Send phase up to (not including) embedding: encrypt, hash, pack, tile,
/// transform, quantize, zig-zag and Huffman-code. Returns the wire stream.
EncodedStream encode_message(std::string_view message, const SealConfig& config);

/// encode_message followed by embedding into `cover`.
GrayImage seal(std::string_view message, const SealConfig& config, const GrayImage& cover);

/// Receive phase. Never throws on hostile image content: every decode
/// failure becomes Verdict::undecodable. A key in `config` is cross-checked
/// against the embedded key row and a mismatch is Verdict::tampered. The
/// digest algorithm and cipher are taken from the embedded rows.
VerificationReport verify(const GrayImage& stego, const SealConfig& config);

/// Runs verify in overwrite mode, then lsb1, and returns the first report
/// that is not undecodable (or the overwrite report if neither decodes).
VerificationReport verify_any_mode(const GrayImage& stego, SealConfig config);

/// Copy of `image` with bit `bit` of pixel `pixel_index` flipped. Throws
/// Errc::out_of_range.
GrayImage tamper(const GrayImage& image, std::size_t pixel_index, unsigned bit);

struct StreamStats {
  EmbedMode mode = EmbedMode::overwrite;
  std::size_t table_entries = 0;
  std::size_t symbol_count = 0;
  std::size_t payload_bits = 0;
  std::size_t header_bytes = 0;
  std::size_t stream_bytes = 0;
  std::size_t pixels_used = 0;

  /// Uncompressed block size over compressed stream bytes.
  double compression_ratio(std::size_t block_elements) const {
    return static_cast<double>(block_elements) / static_cast<double>(stream_bytes);
  }
};

/// Header and size figures of the stream embedded in `stego`, or nullopt when
/// no well-formed stream is present in that mode.
std::optional<StreamStats> inspect(const GrayImage& stego, EmbedMode mode);

}  // namespace photoseal
