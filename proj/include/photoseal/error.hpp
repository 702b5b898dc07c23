#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace photoseal {

enum class Errc {
  // cipher
  invalid_key,
  not_invertible,
  empty_input,
  bad_length,
  // payload
  row_overflow,
  nul_in_payload,
  malformed_block,
  bad_shape,
  // entropy
  empty_alphabet,
  unknown_symbol,
  corrupt_header,
  truncated_stream,
  dangling_bits,
  invalid_codeword,
  // imageio
  bad_magic,
  bad_maxval,
  truncated_pixels,
  trailing_bytes,
  malformed_header,
  // stego / pipeline
  capacity_exceeded,
  out_of_range,
  empty_message,
  unsupported_message,
  invalid_config,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so that
/// callers (the pipeline, the CLI) can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace photoseal
