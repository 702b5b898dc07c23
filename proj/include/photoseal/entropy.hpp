#pragma once

#include "photoseal/error.hpp"
#include "photoseal/payload.hpp"

#include <Eigen/Core>

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace photoseal {

// ---------------------------------------------------------------------------
// Zig-zag ordering

struct Cell {
  int row;
  int col;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// The JPEG zig-zag visiting order of an 8x8 block, (0,0) first, (7,7) last.
const std::array<Cell, 64>& zigzag_order() noexcept;

template <typename Derived>
std::array<typename Derived::Scalar, 64> zigzag_scan(const Eigen::MatrixBase<Derived>& block) {
  if (block.rows() != 8 || block.cols() != 8)
    fail(Errc::bad_shape, "zigzag_scan expects an 8x8 block, got " + std::to_string(block.rows()) + "x" +
                              std::to_string(block.cols()));
  std::array<typename Derived::Scalar, 64> out{};
  const auto& order = zigzag_order();
  for (std::size_t i = 0; i < 64; ++i) out[i] = block(order[i].row, order[i].col);
  return out;
}

template <typename Scalar>
Block8<Scalar> zigzag_unscan(std::span<const Scalar> sequence) {
  if (sequence.size() != 64)
    fail(Errc::bad_length, "zigzag_unscan expects 64 values, got " + std::to_string(sequence.size()));
  Block8<Scalar> block;
  const auto& order = zigzag_order();
  for (std::size_t i = 0; i < 64; ++i) block(order[i].row, order[i].col) = sequence[i];
  return block;
}

// ---------------------------------------------------------------------------
// Huffman coding

using Symbol = std::uint32_t;
using Frequencies = std::map<Symbol, std::uint64_t>;

/// Signed coefficient -> non-negative symbol: 0, -1, 1, -2, 2 -> 0, 1, 2, 3, 4.
constexpr Symbol to_symbol(std::int32_t value) noexcept {
  return value >= 0 ? static_cast<Symbol>(value) << 1 : (static_cast<Symbol>(-(value + 1)) << 1) | 1u;
}
constexpr std::int64_t from_symbol(Symbol symbol) noexcept {
  const auto half = static_cast<std::int64_t>(symbol >> 1);
  return (symbol & 1u) ? -half - 1 : half;
}

inline constexpr std::uint8_t kStreamMagic = 0x48;
inline constexpr unsigned kMaxCodeLength = 63;

struct Codeword {
  std::uint64_t bits;
  unsigned length;

  std::string to_string() const;
  friend bool operator==(const Codeword&, const Codeword&) = default;
};

/// Canonical prefix code. Codes are always derived from the per-symbol
/// lengths (shorter first, ties by symbol value), so the lengths alone
/// describe the table.
class HuffmanTable {
 public:
  /// Throws Errc::corrupt_header for an empty map, a length outside
  /// [1, kMaxCodeLength] or a Kraft sum above one.
  static HuffmanTable from_lengths(const std::map<Symbol, unsigned>& lengths);

  const std::map<Symbol, Codeword>& codes() const noexcept { return codes_; }
  std::size_t size() const noexcept { return codes_.size(); }
  bool contains(Symbol s) const { return codes_.contains(s); }
  /// Throws Errc::unknown_symbol.
  const Codeword& code(Symbol s) const;
  unsigned max_length() const noexcept { return max_length_; }
  double kraft_sum() const noexcept;

  friend bool operator==(const HuffmanTable& a, const HuffmanTable& b) { return a.codes_ == b.codes_; }

 private:
  std::map<Symbol, Codeword> codes_;
  unsigned max_length_ = 0;
};

Frequencies count_frequencies(std::span<const Symbol> symbols);

/// Optimal prefix code for the given counts. Merges prefer the lower weight,
/// then the lower minimum contained symbol, then the earlier-created node. A
/// single-symbol alphabet is assigned code "0". Zero counts are ignored.
HuffmanTable huffman_build(const Frequencies& frequencies);

/// Self-describing stream. Wire layout, all integers big-endian:
///   0x48 | u16 entry count | entry count x (LEB128 symbol, u8 length)
///   | u32 symbol count | codeword bits MSB-first, zero-padded to a byte.
/// Table entries are written in ascending symbol order.
struct EncodedStream {
  HuffmanTable table;
  std::uint32_t symbol_count = 0;
  std::size_t payload_bits = 0;
  std::vector<std::uint8_t> payload;

  std::size_t header_size() const;
  std::size_t total_size() const { return header_size() + payload.size(); }
  std::vector<std::uint8_t> serialize() const;
};

/// Throws Errc::unknown_symbol when a symbol has no code.
EncodedStream huffman_encode(std::span<const Symbol> symbols, const HuffmanTable& table);

/// Throws Errc::truncated_stream, Errc::invalid_codeword, or
/// Errc::dangling_bits when payload bits remain after symbol_count symbols.
std::vector<Symbol> huffman_decode(const EncodedStream& stream);

/// Parses and decodes a complete wire stream; trailing bytes are
/// Errc::dangling_bits.
std::vector<Symbol> huffman_decode(std::span<const std::uint8_t> wire);

struct DecodedPrefix {
  EncodedStream stream;
  std::vector<Symbol> symbols;
  std::size_t consumed = 0;  ///< bytes of `bytes` occupied by the stream
};

/// Decodes one stream from the front of `bytes` and reports how many bytes it
/// spans; anything after that is left alone. Nonzero pad bits in the last
/// byte are still Errc::dangling_bits.
DecodedPrefix decode_prefix(std::span<const std::uint8_t> bytes);

}  // namespace photoseal
