#pragma once

#include "photoseal/imageio.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace photoseal {

/// Both modes start at pixel (0, 0) and proceed in raster order.
///  - overwrite: one payload byte replaces one pixel (visible).
///  - lsb1: one payload bit, MSB-first within each byte, replaces a pixel's LSB.
enum class EmbedMode { overwrite, lsb1 };

std::string_view to_string(EmbedMode mode) noexcept;
std::optional<EmbedMode> parse_embed_mode(std::string_view name) noexcept;

/// Payload bytes the image can carry in the given mode.
std::size_t capacity(const GrayImage& image, EmbedMode mode) noexcept;

/// Pixels touched when embedding `bytes` payload bytes.
std::size_t pixels_used(std::size_t bytes, EmbedMode mode) noexcept;

/// Throws Errc::capacity_exceeded.
GrayImage embed(const GrayImage& cover, std::span<const std::uint8_t> payload, EmbedMode mode);
std::vector<std::uint8_t> extract(const GrayImage& stego, std::size_t length, EmbedMode mode);

}  // namespace photoseal
