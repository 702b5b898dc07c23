#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace photoseal {

template <typename Scalar>
using RowMajorMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <typename Scalar>
using Block8 = Eigen::Matrix<Scalar, 8, 8, Eigen::RowMajor>;

using ByteMatrix = RowMajorMatrix<std::uint8_t>;
using Tile = Block8<std::uint8_t>;
using TileSequence = std::vector<Tile>;

inline constexpr std::size_t kDefaultRowLength = 128;
inline constexpr std::size_t kPayloadRows = 3;
inline constexpr std::size_t kTileElements = 64;

enum class PayloadRow : std::size_t { ciphertext = 0, key = 1, digest = 2 };

/// The 3 x L data block: ciphertext, serialized key and digest hex, one per
/// row, each zero-padded to L.
struct PayloadBlock {
  ByteMatrix rows;

  std::size_t row_length() const noexcept { return static_cast<std::size_t>(rows.cols()); }
  std::size_t element_count() const noexcept { return static_cast<std::size_t>(rows.size()); }
};

struct UnpackedPayload {
  std::string ciphertext;
  std::string key;
  std::string digest;

  friend bool operator==(const UnpackedPayload&, const UnpackedPayload&) = default;
};

/// Throws Errc::row_overflow when a row does not fit in `row_length`, and
/// Errc::nul_in_payload when an input contains a zero byte (zero is the pad).
PayloadBlock pack(std::string_view ciphertext, std::string_view key, std::string_view digest,
                  std::size_t row_length = kDefaultRowLength);

/// Strips trailing zero padding from each row. Rows with a zero byte before
/// the padding, or a matrix with other than three rows, are Errc::malformed_block.
UnpackedPayload unpack(const ByteMatrix& rows);
inline UnpackedPayload unpack(const PayloadBlock& block) { return unpack(block.rows); }

/// Number of 8x8 tiles a 3 x L block occupies, or throws Errc::bad_shape.
std::size_t tile_count(std::size_t row_length);

/// The block, flattened row-major, is viewed as an 8 x (3L/8) matrix and cut
/// into 8x8 column bands from left to right.
TileSequence to_tiles(const PayloadBlock& block);
PayloadBlock from_tiles(const TileSequence& tiles, std::size_t row_length);

}  // namespace photoseal
