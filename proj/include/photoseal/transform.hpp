#pragma once

#include "photoseal/error.hpp"
#include "photoseal/payload.hpp"

#include <Eigen/Core>

#include <cmath>
#include <cstdint>
#include <numbers>

namespace photoseal {

using CoeffBlock = Block8<double>;
using QuantBlock = Block8<std::int32_t>;

/// Smallest integer scale for which an all-ones quantizer is provably
/// lossless on 8-bit tiles. The worst-case reconstruction error of one pixel
/// is (max_x sum_u |C(u, x)|)^2 / (2S) = 6.9794 / (2S), which stays below 1/2
/// from S = 7 onwards.
inline constexpr int kLosslessScale = 7;

/// Orthonormal 8-point DCT-II basis, C(u, x) = a(u) cos((2x + 1) u pi / 16).
template <typename Scalar = double>
const Block8<Scalar>& dct_basis() {
  static const Block8<Scalar> basis = [] {
    Block8<Scalar> c;
    for (int u = 0; u < 8; ++u) {
      const Scalar a = u == 0 ? std::sqrt(Scalar(1) / 8) : std::sqrt(Scalar(2) / 8);
      for (int x = 0; x < 8; ++x)
        c(u, x) = a * std::cos(Scalar(2 * x + 1) * Scalar(u) * std::numbers::pi_v<Scalar> / Scalar(16));
    }
    return c;
  }();
  return basis;
}

namespace detail {
template <typename Derived>
void require_8x8(const Eigen::MatrixBase<Derived>& m, const char* what) {
  if (m.rows() != 8 || m.cols() != 8)
    fail(Errc::bad_shape, std::string(what) + " expects an 8x8 block, got " + std::to_string(m.rows()) + "x" +
                              std::to_string(m.cols()));
}
}  // namespace detail

/// 2-D DCT-II, D = C P C^T.
template <typename Scalar = double, typename Derived>
Block8<Scalar> dct2(const Eigen::MatrixBase<Derived>& tile) {
  detail::require_8x8(tile, "dct2");
  const auto& c = dct_basis<Scalar>();
  return c * tile.template cast<Scalar>() * c.transpose();
}

/// 2-D inverse DCT, P = C^T D C.
template <typename Scalar = double, typename Derived>
Block8<Scalar> idct2(const Eigen::MatrixBase<Derived>& coeffs) {
  detail::require_8x8(coeffs, "idct2");
  const auto& c = dct_basis<Scalar>();
  return c.transpose() * coeffs.template cast<Scalar>() * c;
}

/// Per-coefficient step sizes plus an integer pre-multiplier applied before
/// rounding: quantized = round(scale * c / step).
class QuantMatrix {
 public:
  QuantMatrix(const Block8<int>& steps, int scale);

  /// All-ones steps at the given scale.
  static QuantMatrix uniform(int scale = kLosslessScale);

  const Block8<int>& steps() const noexcept { return steps_; }
  int scale() const noexcept { return scale_; }

 private:
  Block8<int> steps_;
  int scale_;
};

/// Rounds half away from zero.
QuantBlock quantize(const CoeffBlock& coeffs, const QuantMatrix& q);
CoeffBlock dequantize(const QuantBlock& quantized, const QuantMatrix& q);

/// Rounds reconstructed samples back to bytes. Throws Errc::out_of_range when
/// a sample rounds outside [0, 255].
Tile round_to_tile(const CoeffBlock& samples);

/// Tile -> quantized coefficients, the forward half of the payload path.
QuantBlock encode_tile(const Tile& tile, const QuantMatrix& q);
/// Quantized coefficients -> tile.
Tile decode_tile(const QuantBlock& quantized, const QuantMatrix& q);

}  // namespace photoseal
