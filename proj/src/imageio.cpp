#include "photoseal/imageio.hpp"

#include "photoseal/error.hpp"

#include <cerrno>
#include <fstream>
#include <iterator>
#include <limits>
#include <string>
#include <system_error>

namespace photoseal {
namespace {

bool is_space(std::uint8_t c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f'; }

struct HeaderScanner {
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;

  void skip_separators() {
    while (pos_ < bytes_.size()) {
      if (is_space(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else {
        break;
      }
    }
  }

  std::size_t number(const char* field) {
    skip_separators();
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < bytes_.size() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
      if (value > (std::numeric_limits<std::uint32_t>::max() - 9) / 10)
        fail(Errc::malformed_header, std::string("PGM ") + field + " is too large");
      value = value * 10 + (bytes_[pos_++] - '0');
    }
    if (pos_ == start) fail(Errc::malformed_header, std::string("PGM ") + field + " is missing or not a number");
    return value;
  }
};

}  // namespace

GrayImage::GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width == 0 || height == 0) fail(Errc::malformed_header, "image dimensions must be at least 1x1");
  if (pixels_.size() / width != height || pixels_.size() % width != 0)
    fail(Errc::malformed_header, "pixel count does not match " + std::to_string(width) + "x" + std::to_string(height));
}

GrayImage::GrayImage(std::size_t width, std::size_t height, std::uint8_t fill)
    : GrayImage(width, height, std::vector<std::uint8_t>(width * height, fill)) {}

GrayImage read_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') fail(Errc::bad_magic, "not a binary PGM (P5) file");
  HeaderScanner scan{bytes, 2};
  if (scan.pos_ < bytes.size() && !is_space(bytes[scan.pos_]) && bytes[scan.pos_] != '#')
    fail(Errc::bad_magic, "not a binary PGM (P5) file");
  const std::size_t width = scan.number("width");
  const std::size_t height = scan.number("height");
  const std::size_t maxval = scan.number("maxval");
  if (width == 0 || height == 0) fail(Errc::malformed_header, "PGM dimensions must be at least 1x1");
  if (maxval != 255) fail(Errc::bad_maxval, "only maxval 255 is supported, got " + std::to_string(maxval));
  if (scan.pos_ >= bytes.size() || !is_space(bytes[scan.pos_]))
    fail(Errc::malformed_header, "PGM header must end with a single whitespace byte");
  const std::size_t start = scan.pos_ + 1;

  const std::size_t expected = width * height;
  const std::size_t available = bytes.size() - start;
  if (available < expected)
    fail(Errc::truncated_pixels, "expected " + std::to_string(expected) + " pixel bytes, found " + std::to_string(available));
  if (available > expected)
    fail(Errc::trailing_bytes, std::to_string(available - expected) + " bytes follow the pixel raster");
  return GrayImage(width, height, std::vector<std::uint8_t>(bytes.begin() + static_cast<std::ptrdiff_t>(start), bytes.end()));
}

std::vector<std::uint8_t> write_pgm(const GrayImage& image) {
  const std::string header =
      "P5\n" + std::to_string(image.width()) + " " + std::to_string(image.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), image.pixels().begin(), image.pixels().end());
  return out;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in || std::filesystem::is_directory(path))
    throw std::system_error(errno, std::generic_category(), "cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw std::system_error(errno, std::generic_category(), "cannot read " + path.string());
  return bytes;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::system_error(errno, std::generic_category(), "cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::system_error(errno, std::generic_category(), "cannot write " + path.string());
}

}  // namespace photoseal
