#include "photoseal/stego.hpp"

#include "photoseal/error.hpp"

#include <algorithm>
#include <string>

namespace photoseal {
namespace {

void require_capacity(const GrayImage& image, std::size_t length, EmbedMode mode) {
  const std::size_t available = capacity(image, mode);
  if (length > available)
    fail(Errc::capacity_exceeded, "payload needs " + std::to_string(length) + " bytes but the image holds " +
                                      std::to_string(available) + " in " + std::string(to_string(mode)) + " mode");
}

}  // namespace

std::string_view to_string(EmbedMode mode) noexcept { return mode == EmbedMode::overwrite ? "overwrite" : "lsb1"; }

std::optional<EmbedMode> parse_embed_mode(std::string_view name) noexcept {
  if (name == "overwrite") return EmbedMode::overwrite;
  if (name == "lsb1") return EmbedMode::lsb1;
  return std::nullopt;
}

std::size_t capacity(const GrayImage& image, EmbedMode mode) noexcept {
  return mode == EmbedMode::overwrite ? image.pixel_count() : image.pixel_count() / 8;
}

std::size_t pixels_used(std::size_t bytes, EmbedMode mode) noexcept {
  return mode == EmbedMode::overwrite ? bytes : 8 * bytes;
}

GrayImage embed(const GrayImage& cover, std::span<const std::uint8_t> payload, EmbedMode mode) {
  require_capacity(cover, payload.size(), mode);
  GrayImage stego = cover;
  const std::span<std::uint8_t> px = stego.pixels();
  if (mode == EmbedMode::overwrite) {
    std::copy(payload.begin(), payload.end(), px.begin());
    return stego;
  }
  std::size_t p = 0;
  for (std::uint8_t byte : payload)
    for (int bit = 7; bit >= 0; --bit, ++p)
      px[p] = static_cast<std::uint8_t>((px[p] & 0xfe) | ((byte >> bit) & 1u));
  return stego;
}

std::vector<std::uint8_t> extract(const GrayImage& stego, std::size_t length, EmbedMode mode) {
  require_capacity(stego, length, mode);
  const std::span<const std::uint8_t> px = stego.pixels();
  if (mode == EmbedMode::overwrite) return {px.begin(), px.begin() + static_cast<std::ptrdiff_t>(length)};
  std::vector<std::uint8_t> out(length, 0);
  std::size_t p = 0;
  for (std::uint8_t& byte : out)
    for (int bit = 0; bit < 8; ++bit, ++p) byte = static_cast<std::uint8_t>((byte << 1) | (px[p] & 1u));
  return out;
}

}  // namespace photoseal
