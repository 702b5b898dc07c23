#include "photoseal/payload.hpp"

#include "photoseal/error.hpp"

#include <array>

namespace photoseal {
namespace {

constexpr std::array<std::string_view, kPayloadRows> kRowNames{"ciphertext", "key", "digest"};

void put_row(ByteMatrix& rows, PayloadRow which, std::string_view text) {
  const auto r = static_cast<Eigen::Index>(which);
  const auto name = std::string(kRowNames[static_cast<std::size_t>(which)]);
  if (text.size() > static_cast<std::size_t>(rows.cols()))
    fail(Errc::row_overflow, name + " row holds " + std::to_string(text.size()) + " bytes but the row length is " +
                                 std::to_string(rows.cols()));
  if (text.find('\0') != std::string_view::npos) fail(Errc::nul_in_payload, name + " row contains a zero byte");
  for (std::size_t i = 0; i < text.size(); ++i) rows(r, static_cast<Eigen::Index>(i)) = static_cast<std::uint8_t>(text[i]);
}

std::string take_row(const ByteMatrix& rows, Eigen::Index r) {
  Eigen::Index end = rows.cols();
  while (end > 0 && rows(r, end - 1) == 0) --end;
  std::string out(static_cast<std::size_t>(end), '\0');
  for (Eigen::Index c = 0; c < end; ++c) {
    if (rows(r, c) == 0)
      fail(Errc::malformed_block, std::string(kRowNames[static_cast<std::size_t>(r)]) + " row has a zero byte before its padding");
    out[static_cast<std::size_t>(c)] = static_cast<char>(rows(r, c));
  }
  return out;
}

}  // namespace

PayloadBlock pack(std::string_view ciphertext, std::string_view key, std::string_view digest, std::size_t row_length) {
  if (row_length == 0) fail(Errc::bad_shape, "row length must be positive");
  PayloadBlock block{ByteMatrix::Zero(kPayloadRows, static_cast<Eigen::Index>(row_length))};
  put_row(block.rows, PayloadRow::ciphertext, ciphertext);
  put_row(block.rows, PayloadRow::key, key);
  put_row(block.rows, PayloadRow::digest, digest);
  return block;
}

UnpackedPayload unpack(const ByteMatrix& rows) {
  if (rows.rows() != static_cast<Eigen::Index>(kPayloadRows))
    fail(Errc::malformed_block, "payload block has " + std::to_string(rows.rows()) + " rows, expected 3");
  return {take_row(rows, 0), take_row(rows, 1), take_row(rows, 2)};
}

std::size_t tile_count(std::size_t row_length) {
  const std::size_t elements = kPayloadRows * row_length;
  if (row_length == 0 || elements % kTileElements != 0)
    fail(Errc::bad_shape, std::to_string(elements) + " elements do not tile into 8x8 blocks");
  return elements / kTileElements;
}

TileSequence to_tiles(const PayloadBlock& block) {
  if (block.rows.rows() != static_cast<Eigen::Index>(kPayloadRows))
    fail(Errc::bad_shape, "payload block must have 3 rows");
  const std::size_t count = tile_count(block.row_length());
  const auto width = static_cast<Eigen::Index>(count * 8);
  // Row-major storage makes the reshape a reinterpretation of the same bytes.
  const Eigen::Map<const ByteMatrix> wide(block.rows.data(), 8, width);
  TileSequence tiles(count);
  for (std::size_t t = 0; t < count; ++t) tiles[t] = wide.middleCols<8>(static_cast<Eigen::Index>(8 * t));
  return tiles;
}

PayloadBlock from_tiles(const TileSequence& tiles, std::size_t row_length) {
  if (tiles.empty() || tiles.size() * kTileElements != kPayloadRows * row_length)
    fail(Errc::bad_shape, std::to_string(tiles.size()) + " tiles cannot form a 3x" + std::to_string(row_length) + " block");
  PayloadBlock block{ByteMatrix(kPayloadRows, static_cast<Eigen::Index>(row_length))};
  Eigen::Map<ByteMatrix> wide(block.rows.data(), 8, static_cast<Eigen::Index>(tiles.size() * 8));
  for (std::size_t t = 0; t < tiles.size(); ++t) wide.middleCols<8>(static_cast<Eigen::Index>(8 * t)) = tiles[t];
  return block;
}

}  // namespace photoseal
