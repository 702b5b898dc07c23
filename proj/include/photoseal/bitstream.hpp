#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace photoseal {

/// MSB-first bit packer; the final partial byte is zero-padded.
class BitWriter {
 public:
  void put(std::uint64_t bits, unsigned length);
  void put_bit(bool bit);

  std::size_t bit_count() const noexcept { return bit_count_; }
  const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }
  std::vector<std::uint8_t> take() && { return std::move(bytes_); }

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t bit_count_ = 0;
};

/// MSB-first bit reader over a borrowed byte span.
class BitReader {
 public:
  explicit BitReader(std::span<const std::uint8_t> bytes) noexcept : bytes_(bytes) {}

  bool exhausted() const noexcept { return position_ >= bytes_.size() * 8; }
  std::size_t position() const noexcept { return position_; }
  std::size_t remaining() const noexcept { return bytes_.size() * 8 - position_; }

  /// Caller must check exhausted() first.
  bool next() noexcept {
    const bool bit = (bytes_[position_ >> 3] >> (7 - (position_ & 7))) & 1u;
    ++position_;
    return bit;
  }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t position_ = 0;
};

}  // namespace photoseal
