#include "photoseal/transform.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace photoseal;

namespace {

Tile random_tile(std::mt19937_64& rng) {
  Tile t;
  for (int i = 0; i < 64; ++i) t.data()[i] = static_cast<std::uint8_t>(rng());
  return t;
}

oracle::Grid to_grid(const Tile& t) {
  oracle::Grid g{};
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) g[r][c] = t(r, c);
  return g;
}

}  // namespace

TEST(Dct, ConstantAndZeroTiles) {
  const CoeffBlock c = dct2(Tile::Constant(128));
  EXPECT_NEAR(c(0, 0), 1024.0, 1e-9);
  for (int i = 1; i < 64; ++i) EXPECT_NEAR(c.data()[i], 0.0, 1e-9);
  EXPECT_TRUE(dct2(Tile::Zero()).isZero(0.0));

  CoeffBlock dc = CoeffBlock::Zero();
  dc(0, 0) = 1024.0;
  EXPECT_TRUE(idct2(dc).isApprox(CoeffBlock::Constant(128.0), 1e-12));
  EXPECT_TRUE(idct2(CoeffBlock::Zero()).isZero(0.0));
}

TEST(Dct, MatchesFourNestedSumOracle) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const Tile t = random_tile(rng);
    const CoeffBlock c = dct2(t);
    const oracle::Grid ref = oracle::dct2(to_grid(t));
    for (int u = 0; u < 8; ++u)
      for (int v = 0; v < 8; ++v) ASSERT_NEAR(c(u, v), ref[u][v], 1e-9);
  }
}

TEST(Dct, EnergyLinearityAndInverse) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    const Tile a = random_tile(rng), b = random_tile(rng);
    const CoeffBlock ca = dct2(a);
    const double energy = a.cast<double>().squaredNorm();
    ASSERT_NEAR(ca.squaredNorm(), energy, 1e-9 * std::max(1.0, energy));
    ASSERT_LT((idct2(ca) - a.cast<double>()).cwiseAbs().maxCoeff(), 1e-9);

    const double x = coef(rng), y = coef(rng);
    const CoeffBlock mixed = dct2(CoeffBlock(x * a.cast<double>() + y * b.cast<double>()));
    ASSERT_LT((mixed - (x * ca + y * dct2(b))).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(Dct, RejectsNon8x8Input) {
  const Eigen::MatrixXd small = Eigen::MatrixXd::Zero(4, 8);
  EXPECT_THROW(dct2(small), Error);
  EXPECT_THROW(idct2(small), Error);
  EXPECT_NO_THROW(dct2(Eigen::MatrixXd::Zero(8, 8)));
}

TEST(Quantize, IdentityAndExactDivision) {
  const QuantMatrix ones = QuantMatrix::uniform(1);
  QuantBlock ints;
  for (int i = 0; i < 64; ++i) ints.data()[i] = i - 32;
  EXPECT_EQ(quantize(ints.cast<double>(), ones), ints);
  EXPECT_TRUE(dequantize(ints, ones).isApprox(ints.cast<double>()));

  Block8<int> steps = Block8<int>::Ones();
  steps(0, 0) = 16;
  CoeffBlock c = CoeffBlock::Zero();
  c(0, 0) = 1024.0;
  EXPECT_EQ(quantize(c, QuantMatrix(steps, 1))(0, 0), 64);
}

TEST(Quantize, RoundsHalfAwayFromZero) {
  CoeffBlock c = CoeffBlock::Zero();
  c(0, 0) = 2.5;
  c(0, 1) = -2.5;
  c(0, 2) = 0.49999;
  c(0, 3) = -0.5;
  const QuantBlock q = quantize(c, QuantMatrix::uniform(1));
  EXPECT_EQ(q(0, 0), 3);
  EXPECT_EQ(q(0, 1), -3);
  EXPECT_EQ(q(0, 2), 0);
  EXPECT_EQ(q(0, 3), -1);
}

TEST(Quantize, ErrorBound) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> step(1, 40);
  std::uniform_real_distribution<double> value(-2000.0, 2000.0);
  for (int i = 0; i < 200; ++i) {
    Block8<int> steps;
    for (int j = 0; j < 64; ++j) steps.data()[j] = step(rng);
    const int scale = 1 + static_cast<int>(rng() % 40);
    const QuantMatrix q(steps, scale);
    CoeffBlock c;
    for (int j = 0; j < 64; ++j) c.data()[j] = value(rng);
    const CoeffBlock back = dequantize(quantize(c, q), q);
    for (int j = 0; j < 64; ++j)
      ASSERT_LE(std::abs(back.data()[j] - c.data()[j]), steps.data()[j] / (2.0 * scale) + 1e-9);
  }
}

TEST(Quantize, InvalidMatrix) {
  EXPECT_THROW(QuantMatrix::uniform(0), Error);
  EXPECT_THROW(QuantMatrix(Block8<int>::Zero(), 1), Error);
}

// The all-ones quantizer at kLosslessScale must reproduce every byte tile.
TEST(Quantize, DefaultScaleIsLossless) {
  std::mt19937_64 rng(4);
  const QuantMatrix q = QuantMatrix::uniform();
  for (int i = 0; i < 5000; ++i) {
    const Tile t = random_tile(rng);
    ASSERT_EQ(decode_tile(encode_tile(t, q), q), t);
  }
  for (std::uint8_t fill : {0, 1, 127, 254, 255}) {
    const Tile t = Tile::Constant(fill);
    EXPECT_EQ(decode_tile(encode_tile(t, q), q), t);
  }
  const QuantMatrix q32 = QuantMatrix::uniform(32);
  const Tile t = random_tile(rng);
  EXPECT_EQ(decode_tile(encode_tile(t, q32), q32), t);
}

TEST(Quantize, ScaleBoundFromBasis) {
  // Independent recomputation of the worst-case per-pixel error constant.
  double worst = 0.0;
  for (int x = 0; x < 8; ++x) {
    double s = 0.0;
    for (int u = 0; u < 8; ++u)
      s += std::abs((u == 0 ? std::sqrt(1.0 / 8) : 0.5) * std::cos((2 * x + 1) * u * std::numbers::pi / 16));
    worst = std::max(worst, s);
  }
  EXPECT_LT(worst * worst / (2.0 * kLosslessScale), 0.5);
  EXPECT_GE(worst * worst / (2.0 * (kLosslessScale - 1)), 0.5);
}

TEST(Quantize, RoundToTileRejectsOutOfRange) {
  EXPECT_THROW(round_to_tile(CoeffBlock::Constant(255.6)), Error);
  EXPECT_THROW(round_to_tile(CoeffBlock::Constant(-0.6)), Error);
  EXPECT_EQ(round_to_tile(CoeffBlock::Constant(-0.4)), Tile::Zero());
}
