#include "photoseal/bitstream.hpp"

namespace photoseal {

void BitWriter::put_bit(bool bit) {
  if ((bit_count_ & 7) == 0) bytes_.push_back(0);
  if (bit) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (bit_count_ & 7));
  ++bit_count_;
}

void BitWriter::put(std::uint64_t bits, unsigned length) {
  for (unsigned i = length; i-- > 0;) put_bit((bits >> i) & 1u);
}

}  // namespace photoseal
