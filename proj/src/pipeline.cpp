#include "photoseal/pipeline.hpp"

#include "photoseal/error.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <span>
#include <variant>

namespace photoseal {
namespace {

struct Undecodable {
  std::string reason;
};

struct EmbeddedKey {
  CipherKind cipher;
  std::optional<CaesarKey> caesar;
  std::optional<HillKey> hill;
  std::size_t hill_pad = 0;
};

std::optional<EmbeddedKey> parse_key_row(std::string_view row) {
  try {
    if (row.find(',') == std::string_view::npos) return EmbeddedKey{CipherKind::caesar, CaesarKey::parse(row), {}, 0};
    const std::size_t semi = row.find(';');
    if (semi == std::string_view::npos || semi + 2 != row.size()) return std::nullopt;
    const char pad = row[semi + 1];
    if (pad < '0' || pad > '2') return std::nullopt;
    return EmbeddedKey{CipherKind::hill, {}, HillKey::parse(row.substr(0, semi)), static_cast<std::size_t>(pad - '0')};
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::vector<Symbol> tiles_to_symbols(const TileSequence& tiles, const QuantMatrix& q) {
  std::vector<Symbol> symbols;
  symbols.reserve(tiles.size() * kTileElements);
  for (const Tile& tile : tiles)
    for (std::int32_t v : zigzag_scan(encode_tile(tile, q))) symbols.push_back(to_symbol(v));
  return symbols;
}

// Inverse of tiles_to_symbols that also insists each block is exactly what
// the sender's quantizer would have produced for the recovered tile.
std::variant<TileSequence, Undecodable> symbols_to_tiles(std::span<const Symbol> symbols, const QuantMatrix& q) {
  TileSequence tiles;
  tiles.reserve(symbols.size() / kTileElements);
  std::array<std::int32_t, 64> values{};
  for (std::size_t offset = 0; offset < symbols.size(); offset += kTileElements) {
    for (std::size_t i = 0; i < kTileElements; ++i) {
      const std::int64_t v = from_symbol(symbols[offset + i]);
      if (v < std::numeric_limits<std::int32_t>::min() || v > std::numeric_limits<std::int32_t>::max())
        return Undecodable{"coefficient out of range"};
      values[i] = static_cast<std::int32_t>(v);
    }
    const QuantBlock quantized = zigzag_unscan<std::int32_t>(values);
    Tile tile;
    try {
      tile = decode_tile(quantized, q);
    } catch (const Error&) {
      return Undecodable{"reconstructed tile leaves the byte range"};
    }
    if (encode_tile(tile, q) != quantized) return Undecodable{"coefficients are not the canonical encoding of their tile"};
    tiles.push_back(tile);
  }
  return tiles;
}

VerificationReport undecodable(VerificationReport report, std::string reason) {
  report.verdict = Verdict::undecodable;
  report.recovered_message.clear();
  report.embedded_digest.clear();
  report.recomputed_digest.clear();
  report.reason = std::move(reason);
  return report;
}

}  // namespace

std::string_view to_string(CipherKind kind) noexcept { return kind == CipherKind::caesar ? "caesar" : "hill"; }

std::optional<CipherKind> parse_cipher_kind(std::string_view name) noexcept {
  if (name == "caesar") return CipherKind::caesar;
  if (name == "hill") return CipherKind::hill;
  return std::nullopt;
}

std::string_view to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::verified: return "VERIFIED";
    case Verdict::tampered: return "TAMPERED";
    case Verdict::undecodable: return "UNDECODABLE";
  }
  return "UNDECODABLE";
}

SealConfig SealConfig::caesar(int shift) {
  SealConfig config;
  config.cipher = CipherKind::caesar;
  config.caesar_key = CaesarKey(shift);
  return config;
}

SealConfig SealConfig::hill(const HillKey& key) {
  SealConfig config;
  config.cipher = CipherKind::hill;
  config.hill_key = key;
  return config;
}

bool SealConfig::has_key() const noexcept {
  return cipher == CipherKind::caesar ? caesar_key.has_value() : hill_key.has_value();
}

void SealConfig::validate_layout() const {
  if (row_length == 0 || (kPayloadRows * row_length) % kTileElements != 0)
    fail(Errc::invalid_config, "row length " + std::to_string(row_length) + " does not tile into 8x8 blocks");
  if (quant_scale < 1) fail(Errc::invalid_config, "quantizer scale must be >= 1");
}

void SealConfig::validate() const {
  validate_layout();
  if (!has_key()) fail(Errc::invalid_config, "no key for the " + std::string(to_string(cipher)) + " cipher");
  if (caesar_key && hill_key) fail(Errc::invalid_config, "exactly one cipher key may be set");
  if (cipher == CipherKind::hill && !hill_key->invertible())
    fail(Errc::not_invertible, "Hill key is not invertible mod 26");
}

std::string serialize_key_row(const SealConfig& config, std::size_t hill_pad) {
  if (config.cipher == CipherKind::caesar) return config.caesar_key.value().serialize();
  return config.hill_key.value().serialize() + ";" + std::to_string(hill_pad);
}

EncodedStream encode_message(std::string_view message, const SealConfig& config) {
  config.validate();
  if (message.empty()) fail(Errc::empty_message, "message is empty");

  std::string ciphertext;
  std::size_t hill_pad = 0;
  if (config.cipher == CipherKind::caesar) {
    ciphertext = caesar_encrypt(message, *config.caesar_key);
  } else {
    // The receiver can only hash what it decrypts, and Hill discards
    // everything outside A-Z.
    if (hill_normalize(message) != message)
      fail(Errc::unsupported_message, "the Hill cipher only carries messages made of uppercase letters A-Z");
    hill_pad = hill_padding(message.size());
    ciphertext = hill_encrypt(message, *config.hill_key);
  }
  const DigestHex digest = hash_message(message, config.digest);

  const PayloadBlock block = pack(ciphertext, serialize_key_row(config, hill_pad), digest.hex, config.row_length);
  const std::vector<Symbol> symbols = tiles_to_symbols(to_tiles(block), config.quantizer());
  return huffman_encode(symbols, huffman_build(count_frequencies(symbols)));
}

GrayImage seal(std::string_view message, const SealConfig& config, const GrayImage& cover) {
  return embed(cover, encode_message(message, config).serialize(), config.mode);
}

VerificationReport verify(const GrayImage& stego, const SealConfig& config) {
  VerificationReport report;
  report.mode = config.mode;
  try {
    config.validate_layout();
  } catch (const Error& e) {
    return undecodable(std::move(report), e.what());
  }

  const std::vector<std::uint8_t> carried = extract(stego, capacity(stego, config.mode), config.mode);
  DecodedPrefix decoded;
  try {
    decoded = decode_prefix(carried);
  } catch (const Error& e) {
    return undecodable(std::move(report), std::string(to_string(e.code())) + ": " + e.what());
  }
  report.stream_bytes = decoded.consumed;

  const std::size_t expected_symbols = kPayloadRows * config.row_length;
  if (decoded.symbols.size() != expected_symbols)
    return undecodable(std::move(report), "stream carries " + std::to_string(decoded.symbols.size()) +
                                              " coefficients, expected " + std::to_string(expected_symbols));

  // A stream is accepted only in the exact form the sender would emit for its
  // own symbols, so header or padding edits cannot survive decoding unnoticed.
  const std::vector<std::uint8_t> canonical =
      huffman_encode(decoded.symbols, huffman_build(count_frequencies(decoded.symbols))).serialize();
  if (canonical.size() != decoded.consumed || !std::equal(canonical.begin(), canonical.end(), carried.begin()))
    return undecodable(std::move(report), "stream is not in canonical form");

  auto tiles = symbols_to_tiles(decoded.symbols, config.quantizer());
  if (auto* bad = std::get_if<Undecodable>(&tiles)) return undecodable(std::move(report), bad->reason);

  UnpackedPayload rows;
  try {
    rows = unpack(from_tiles(std::get<TileSequence>(tiles), config.row_length));
  } catch (const Error& e) {
    return undecodable(std::move(report), e.what());
  }

  const std::optional<DigestHex> embedded_digest = parse_digest_hex(rows.digest);
  if (!embedded_digest) return undecodable(std::move(report), "digest row is not a SHA-256 or SHA-512 hex digest");
  const std::optional<EmbeddedKey> key = parse_key_row(rows.key);
  if (!key) return undecodable(std::move(report), "key row is not a serialized key");

  std::string message;
  try {
    if (key->cipher == CipherKind::caesar) {
      message = caesar_decrypt(rows.ciphertext, *key->caesar);
    } else {
      if (hill_normalize(rows.ciphertext) != rows.ciphertext)
        return undecodable(std::move(report), "Hill ciphertext contains symbols outside A-Z");
      message = hill_decrypt(rows.ciphertext, *key->hill, key->hill_pad);
    }
  } catch (const Error& e) {
    return undecodable(std::move(report), e.what());
  }

  report.cipher = key->cipher;
  report.digest_algorithm = embedded_digest->algorithm;
  report.embedded_key = rows.key;
  report.recovered_message = std::move(message);
  report.embedded_digest = embedded_digest->hex;
  report.recomputed_digest = hash_message(report.recovered_message, embedded_digest->algorithm).hex;

  const bool key_matches =
      !config.has_key() ||
      (key->cipher == config.cipher &&
       (config.cipher == CipherKind::caesar ? key->caesar == config.caesar_key : key->hill == config.hill_key));

  if (report.embedded_digest != report.recomputed_digest) {
    report.verdict = Verdict::tampered;
    report.reason = "digest mismatch";
  } else if (!key_matches) {
    report.verdict = Verdict::tampered;
    report.reason = "embedded key differs from the expected key";
  } else {
    report.verdict = Verdict::verified;
  }
  return report;
}

VerificationReport verify_any_mode(const GrayImage& stego, SealConfig config) {
  config.mode = EmbedMode::overwrite;
  VerificationReport first = verify(stego, config);
  if (first.verdict != Verdict::undecodable) return first;
  config.mode = EmbedMode::lsb1;
  VerificationReport second = verify(stego, config);
  return second.verdict != Verdict::undecodable ? second : first;
}

GrayImage tamper(const GrayImage& image, std::size_t pixel_index, unsigned bit) {
  if (pixel_index >= image.pixel_count())
    fail(Errc::out_of_range, "pixel " + std::to_string(pixel_index) + " is outside an image of " +
                                 std::to_string(image.pixel_count()) + " pixels");
  if (bit > 7) fail(Errc::out_of_range, "bit index must be in [0, 7], got " + std::to_string(bit));
  GrayImage out = image;
  out.pixels()[pixel_index] ^= static_cast<std::uint8_t>(1u << bit);
  return out;
}

std::optional<StreamStats> inspect(const GrayImage& stego, EmbedMode mode) {
  const std::vector<std::uint8_t> carried = extract(stego, capacity(stego, mode), mode);
  try {
    const DecodedPrefix decoded = decode_prefix(carried);
    StreamStats stats;
    stats.mode = mode;
    stats.table_entries = decoded.stream.table.size();
    stats.symbol_count = decoded.stream.symbol_count;
    stats.payload_bits = decoded.stream.payload_bits;
    stats.header_bytes = decoded.stream.header_size();
    stats.stream_bytes = decoded.consumed;
    stats.pixels_used = pixels_used(decoded.consumed, mode);
    return stats;
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace photoseal
