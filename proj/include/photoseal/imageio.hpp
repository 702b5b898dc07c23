#pragma once

#include "photoseal/payload.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace photoseal {

/// 8-bit single-channel raster, row-major.
class GrayImage {
 public:
  /// Throws Errc::malformed_header unless width, height >= 1 and the pixel
  /// count matches.
  GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels);
  GrayImage(std::size_t width, std::size_t height, std::uint8_t fill = 0);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t pixel_count() const noexcept { return pixels_.size(); }

  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
  std::span<std::uint8_t> pixels() noexcept { return pixels_; }

  std::uint8_t at(std::size_t row, std::size_t col) const { return pixels_.at(row * width_ + col); }

  /// Eigen view over the same storage.
  Eigen::Map<const ByteMatrix> matrix() const noexcept {
    return {pixels_.data(), static_cast<Eigen::Index>(height_), static_cast<Eigen::Index>(width_)};
  }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<std::uint8_t> pixels_;
};

/// Binary PGM ("P5") with maxval 255. Header tokens may be separated by any
/// whitespace and '#' comments; exactly one whitespace byte precedes the
/// raster. Errors: Errc::bad_magic, Errc::bad_maxval, Errc::malformed_header,
/// Errc::truncated_pixels, Errc::trailing_bytes.
GrayImage read_pgm(std::span<const std::uint8_t> bytes);

/// "P5\n<w> <h>\n255\n" followed by the raw pixels.
std::vector<std::uint8_t> write_pgm(const GrayImage& image);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace photoseal
