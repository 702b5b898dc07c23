#include "photoseal/cipher.hpp"
#include "photoseal/error.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cctype>
#include <random>

using namespace photoseal;

namespace {

HillMatrix to_hill(const oracle::Mat3& m) {
  HillMatrix k;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) k(r, c) = m[r][c];
  return k;
}

oracle::Mat3 to_mat3(const HillMatrix& k) {
  oracle::Mat3 m{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m[r][c] = k(r, c);
  return m;
}

const oracle::Mat3 kIdentity{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

}  // namespace

TEST(Caesar, ShiftsLettersAndPreservesCase) {
  EXPECT_EQ(caesar_encrypt("IEEE", CaesarKey(16)), "YUUU");
  EXPECT_EQ(caesar_encrypt("abc XYZ", CaesarKey(0)), "abc XYZ");
  EXPECT_EQ(caesar_encrypt("xyz", CaesarKey(3)), "abc");
  EXPECT_EQ(caesar_encrypt("Hello, World 42!", CaesarKey(1)), "Ifmmp, Xpsme 42!");
}

TEST(Caesar, DecryptInvertsPrintedToken) {
  EXPECT_EQ(caesar_decrypt("YUUU", CaesarKey(16)), "IEEE");
  EXPECT_EQ(caesar_decrypt("anything 123", CaesarKey(0)), "anything 123");
}

TEST(Caesar, RoundTripPreservesLengthAndNonLetters) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> shift(0, 25);
  for (int i = 0; i < 1000; ++i) {
    const std::string m = oracle::random_printable(rng, 80);
    const CaesarKey k(shift(rng));
    const std::string c = caesar_encrypt(m, k);
    ASSERT_EQ(c.size(), m.size());
    for (std::size_t j = 0; j < m.size(); ++j)
      if (!std::isalpha(static_cast<unsigned char>(m[j]))) ASSERT_EQ(c[j], m[j]);
    ASSERT_EQ(caesar_decrypt(c, k), m);
  }
}

TEST(Caesar, KeyRangeAndSerialization) {
  EXPECT_THROW(CaesarKey(26), Error);
  EXPECT_THROW(CaesarKey(-1), Error);
  EXPECT_EQ(CaesarKey(16).serialize(), "16");
  EXPECT_EQ(CaesarKey::parse("16"), CaesarKey(16));
  for (const char* bad : {"", "016", "+1", "26", "1a", " 1"}) EXPECT_THROW(CaesarKey::parse(bad), Error) << bad;
}

TEST(Hill, InverseOfIdentityAndDiagonal) {
  EXPECT_EQ(hill_key_inverse(HillKey(HillMatrix::Identity())).matrix(), HillMatrix::Identity());
  const HillKey three(HillMatrix::Identity() * 3);
  EXPECT_EQ(hill_key_inverse(three).matrix(), HillMatrix::Identity() * 9);
}

TEST(Hill, InverseTimesKeyIsIdentity) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    const oracle::Mat3 k = oracle::random_invertible(rng);
    const oracle::Mat3 inv = to_mat3(hill_key_inverse(HillKey(to_hill(k))).matrix());
    ASSERT_EQ(oracle::mul_mod26(k, inv), kIdentity);
    ASSERT_EQ(oracle::mul_mod26(inv, k), kIdentity);
  }
}

TEST(Hill, NotInvertibleExactlyWhenDeterminantSharesAFactorWith26) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(0, 25);
  int singular = 0;
  for (int i = 0; i < 20000; ++i) {
    oracle::Mat3 m{};
    for (auto& row : m)
      for (int& v : row) v = d(rng);
    const HillKey key(to_hill(m));
    if (oracle::invertible_mod26(m)) {
      EXPECT_NO_THROW(hill_key_inverse(key));
    } else {
      ++singular;
      try {
        hill_key_inverse(key);
        ADD_FAILURE() << "expected NotInvertible";
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::not_invertible);
      }
    }
  }
  EXPECT_GT(singular, 1000);
}

TEST(Hill, EncryptFollowsRowVectorConvention) {
  EXPECT_EQ(hill_encrypt("ACT", HillKey(HillMatrix::Identity())), "ACT");
  EXPECT_EQ(hill_encrypt("ABC", HillKey(HillMatrix::Identity() * 3)), "ADG");

  std::mt19937_64 rng(17);
  const oracle::Mat3 k = oracle::random_invertible(rng);
  EXPECT_EQ(hill_encrypt("PAYMOREMONEY", HillKey(to_hill(k))), oracle::hill_rows("PAYMOREMONEY", k));

  // Asymmetric key: the column convention would give a different answer.
  const oracle::Mat3 asym{{{6, 24, 1}, {13, 16, 10}, {20, 17, 15}}};
  EXPECT_EQ(hill_encrypt("ACT", HillKey(to_hill(asym))), oracle::hill_rows("ACT", asym));
  EXPECT_NE(hill_encrypt("ACT", HillKey(to_hill(asym))), "POH");
}

TEST(Hill, NormalizesAndPads) {
  const HillKey id(HillMatrix::Identity());
  EXPECT_EQ(hill_encrypt("a-c t!", id), "ACT");
  EXPECT_EQ(hill_encrypt("HELLO", id), "HELLOX");
  EXPECT_EQ(hill_padding(5), 1u);
  EXPECT_EQ(hill_padding(6), 0u);
  EXPECT_THROW(hill_encrypt("123 !", id), Error);
}

TEST(Hill, DecryptErrors) {
  const HillKey id(HillMatrix::Identity());
  EXPECT_EQ(hill_decrypt("QWERTY", id), "QWERTY");
  try {
    hill_decrypt("ABCD", id);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::bad_length);
  }
  try {
    hill_decrypt("ABC", HillKey(HillMatrix::Identity() * 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_invertible);
  }
  EXPECT_THROW(hill_decrypt("ABC", id, 1), Error);  // 'C' is not padding
}

TEST(Hill, RoundTripSweep) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 10000; ++i) {
    const HillKey key(to_hill(oracle::random_invertible(rng)));
    const std::string p = oracle::random_upper(rng, 1, 40);
    const std::string c = hill_encrypt(p, key);
    ASSERT_EQ(c.size() % 3, 0u);
    ASSERT_EQ(hill_decrypt(c, key, hill_padding(p.size())), p);
  }
}

TEST(Hill, KeySerialization) {
  HillMatrix m;
  m << 6, 24, 1, 13, 16, 10, 20, 17, 15;
  const HillKey key(m);
  EXPECT_EQ(key.serialize(), "6,24,1,13,16,10,20,17,15");
  EXPECT_EQ(HillKey::parse(key.serialize()), key);
  for (const char* bad : {"", "1,2,3", "1,2,3,4,5,6,7,8,9,10", "1,2,3,4,5,6,7,8,26", "1,2,,4,5,6,7,8,9", "01,2,3,4,5,6,7,8,9"})
    EXPECT_THROW(HillKey::parse(bad), Error) << bad;
  // Entries are reduced into [0, 25].
  EXPECT_EQ(HillKey(HillMatrix::Constant(-1)).matrix(), HillMatrix::Constant(25));
}
