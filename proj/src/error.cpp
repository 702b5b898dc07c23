#include "photoseal/error.hpp"

namespace photoseal {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_key: return "InvalidKey";
    case Errc::not_invertible: return "NotInvertible";
    case Errc::empty_input: return "EmptyInput";
    case Errc::bad_length: return "BadLength";
    case Errc::row_overflow: return "RowOverflow";
    case Errc::nul_in_payload: return "NulInPayload";
    case Errc::malformed_block: return "MalformedBlock";
    case Errc::bad_shape: return "BadShape";
    case Errc::empty_alphabet: return "EmptyAlphabet";
    case Errc::unknown_symbol: return "UnknownSymbol";
    case Errc::corrupt_header: return "CorruptHeader";
    case Errc::truncated_stream: return "TruncatedStream";
    case Errc::dangling_bits: return "DanglingBits";
    case Errc::invalid_codeword: return "InvalidCodeword";
    case Errc::bad_magic: return "BadMagic";
    case Errc::bad_maxval: return "BadMaxval";
    case Errc::truncated_pixels: return "TruncatedPixels";
    case Errc::trailing_bytes: return "TrailingBytes";
    case Errc::malformed_header: return "MalformedHeader";
    case Errc::capacity_exceeded: return "CapacityExceeded";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::empty_message: return "EmptyMessage";
    case Errc::unsupported_message: return "UnsupportedMessage";
    case Errc::invalid_config: return "InvalidConfig";
  }
  return "Unknown";
}

}  // namespace photoseal
