#include "photoseal/transform.hpp"

namespace photoseal {

QuantMatrix::QuantMatrix(const Block8<int>& steps, int scale) : steps_(steps), scale_(scale) {
  if (scale < 1) fail(Errc::invalid_config, "quantizer scale must be >= 1, got " + std::to_string(scale));
  if (steps.minCoeff() < 1) fail(Errc::invalid_config, "quantizer steps must all be >= 1");
}

QuantMatrix QuantMatrix::uniform(int scale) { return QuantMatrix(Block8<int>::Ones(), scale); }

QuantBlock quantize(const CoeffBlock& coeffs, const QuantMatrix& q) {
  const CoeffBlock scaled = (coeffs * q.scale()).cwiseQuotient(q.steps().cast<double>());
  return scaled.unaryExpr([](double v) { return static_cast<std::int32_t>(std::round(v)); });
}

CoeffBlock dequantize(const QuantBlock& quantized, const QuantMatrix& q) {
  return quantized.cast<double>().cwiseProduct(q.steps().cast<double>()) / q.scale();
}

Tile round_to_tile(const CoeffBlock& samples) {
  Tile tile;
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) {
      const double v = std::round(samples(r, c));
      if (!(v >= 0.0 && v <= 255.0)) fail(Errc::out_of_range, "reconstructed sample outside [0, 255]");
      tile(r, c) = static_cast<std::uint8_t>(v);
    }
  return tile;
}

QuantBlock encode_tile(const Tile& tile, const QuantMatrix& q) { return quantize(dct2(tile), q); }

Tile decode_tile(const QuantBlock& quantized, const QuantMatrix& q) { return round_to_tile(idct2(dequantize(quantized, q))); }

}  // namespace photoseal
