#include "photoseal/cli.hpp"

#include "photoseal/error.hpp"
#include "photoseal/pipeline.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <system_error>

namespace photoseal::cli {
namespace {

// Maps an exception from a command body to an exit code.
struct CommandError {
  int code;
  std::string message;
};

GrayImage load_image(const std::string& path) {
  std::vector<std::uint8_t> bytes;
  try {
    bytes = read_file(path);
  } catch (const std::system_error& e) {
    throw CommandError{kExitNoInput, e.what()};
  }
  try {
    return read_pgm(bytes);
  } catch (const Error& e) {
    throw CommandError{kExitDataError, path + ": " + std::string(to_string(e.code())) + ": " + e.what()};
  }
}

void store_image(const std::string& path, const GrayImage& image) {
  try {
    write_file(path, write_pgm(image));
  } catch (const std::system_error& e) {
    throw CommandError{kExitCantCreate, e.what()};
  }
}

struct SealArgs {
  std::string in, out, message, key;
  std::string cipher = "caesar";
  std::string mode = "overwrite";
  std::string digest = "sha512";
  std::size_t row_length = kDefaultRowLength;
  int scale = kLosslessScale;
};

struct VerifyArgs {
  std::string in, key, mode;
  std::string cipher = "caesar";
  std::size_t row_length = kDefaultRowLength;
  int scale = kLosslessScale;
};

struct TamperArgs {
  std::string in, out;
  std::size_t pixel = 0;
  unsigned bit = 0;
};

struct InspectArgs {
  std::string in, mode;
  std::size_t row_length = kDefaultRowLength;
};

void apply_key(SealConfig& config, CipherKind cipher, const std::string& key) {
  config.cipher = cipher;
  if (cipher == CipherKind::caesar) config.caesar_key = CaesarKey::parse(key);
  else config.hill_key = HillKey::parse(key);
}

int do_seal(const SealArgs& args, std::ostream& out) {
  const GrayImage cover = load_image(args.in);
  SealConfig config;
  config.digest = *parse_digest_algorithm(args.digest);
  config.mode = *parse_embed_mode(args.mode);
  config.row_length = args.row_length;
  config.quant_scale = args.scale;
  EncodedStream stream;
  GrayImage stego = cover;
  try {
    apply_key(config, *parse_cipher_kind(args.cipher), args.key);
    stream = encode_message(args.message, config);
    stego = embed(cover, stream.serialize(), config.mode);
  } catch (const Error& e) {
    throw CommandError{kExitUsage, std::string(to_string(e.code())) + ": " + e.what()};
  }
  store_image(args.out, stego);
  out << "status=SEALED\n"
      << "mode=" << to_string(config.mode) << '\n'
      << "stream_bytes=" << stream.total_size() << '\n'
      << "pixels_used=" << pixels_used(stream.total_size(), config.mode) << '\n';
  return kExitVerified;
}

int do_verify(const VerifyArgs& args, std::ostream& out) {
  const GrayImage stego = load_image(args.in);
  SealConfig config;
  config.row_length = args.row_length;
  config.quant_scale = args.scale;
  if (!args.key.empty()) {
    try {
      apply_key(config, *parse_cipher_kind(args.cipher), args.key);
    } catch (const Error& e) {
      throw CommandError{kExitUsage, e.what()};
    }
  }
  VerificationReport report;
  if (args.mode.empty()) {
    report = verify_any_mode(stego, config);
  } else {
    config.mode = *parse_embed_mode(args.mode);
    report = verify(stego, config);
  }

  out << "verdict=" << to_string(report.verdict) << '\n'
      << "mode=" << to_string(report.mode) << '\n'
      << "cipher=" << (report.cipher ? to_string(*report.cipher) : "") << '\n'
      << "key=" << escape_value(report.embedded_key) << '\n'
      << "digest_algorithm=" << (report.digest_algorithm ? to_string(*report.digest_algorithm) : "") << '\n'
      << "embedded_digest=" << report.embedded_digest << '\n'
      << "recomputed_digest=" << report.recomputed_digest << '\n'
      << "stream_bytes=" << report.stream_bytes << '\n'
      << "message=" << escape_value(report.recovered_message) << '\n'
      << "reason=" << escape_value(report.reason) << '\n';
  switch (report.verdict) {
    case Verdict::verified: return kExitVerified;
    case Verdict::tampered: return kExitTampered;
    case Verdict::undecodable: break;
  }
  return kExitUndecodable;
}

int do_tamper(const TamperArgs& args, std::ostream& out) {
  const GrayImage image = load_image(args.in);
  GrayImage modified = image;
  try {
    modified = tamper(image, args.pixel, args.bit);
  } catch (const Error& e) {
    throw CommandError{kExitUsage, e.what()};
  }
  store_image(args.out, modified);
  out << "pixel=" << args.pixel << '\n'
      << "bit=" << args.bit << '\n'
      << "before=" << static_cast<unsigned>(image.pixels()[args.pixel]) << '\n'
      << "after=" << static_cast<unsigned>(modified.pixels()[args.pixel]) << '\n';
  return kExitVerified;
}

int do_inspect(const InspectArgs& args, std::ostream& out) {
  const GrayImage stego = load_image(args.in);
  std::optional<StreamStats> stats;
  if (args.mode.empty()) {
    stats = inspect(stego, EmbedMode::overwrite);
    if (!stats) stats = inspect(stego, EmbedMode::lsb1);
  } else {
    stats = inspect(stego, *parse_embed_mode(args.mode));
  }
  if (!stats) {
    out << "status=UNDECODABLE\n";
    return kExitUndecodable;
  }
  const std::size_t block_elements = kPayloadRows * args.row_length;
  std::ostringstream ratio;
  ratio << std::fixed << std::setprecision(4) << stats->compression_ratio(block_elements);
  out << "status=OK\n"
      << "mode=" << to_string(stats->mode) << '\n'
      << "magic=0x48\n"
      << "table_entries=" << stats->table_entries << '\n'
      << "symbol_count=" << stats->symbol_count << '\n'
      << "payload_bits=" << stats->payload_bits << '\n'
      << "header_bytes=" << stats->header_bytes << '\n'
      << "stream_bytes=" << stats->stream_bytes << '\n'
      << "block_elements=" << block_elements << '\n'
      << "compressed_elements=" << stats->stream_bytes << '\n'
      << "ratio=" << ratio.str() << '\n'
      << "pixels_used=" << stats->pixels_used << '\n';
  return kExitVerified;
}

}  // namespace

std::string escape_value(const std::string& value) {
  std::string out;
  out.reserve(value.size());
  for (const char ch : value) {
    const auto c = static_cast<unsigned char>(ch);
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20 || c >= 0x7f) {
          char buf[5];
          std::snprintf(buf, sizeof buf, "\\x%02x", c);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Seal a message into a grayscale PGM image and verify it later", "photoseal"};
  app.require_subcommand(1);
  const auto choices = [](std::initializer_list<std::string> names) { return CLI::IsMember(std::vector<std::string>(names)); };

  SealArgs seal_args;
  CLI::App* seal_cmd = app.add_subcommand("seal", "Embed a sealed message into a cover image");
  seal_cmd->add_option("--in", seal_args.in, "Cover image (binary PGM)")->required();
  seal_cmd->add_option("--out", seal_args.out, "Stego image to write")->required();
  seal_cmd->add_option("--message", seal_args.message, "Message to seal")->required();
  seal_cmd->add_option("--key", seal_args.key, "Caesar shift 0-25, or nine comma-separated Hill entries")->required();
  seal_cmd->add_option("--cipher", seal_args.cipher, "caesar|hill")->check(choices({"caesar", "hill"}));
  seal_cmd->add_option("--mode", seal_args.mode, "overwrite|lsb1")->check(choices({"overwrite", "lsb1"}));
  seal_cmd->add_option("--digest", seal_args.digest, "sha256|sha512")->check(choices({"sha256", "sha512"}));
  seal_cmd->add_option("--row-length", seal_args.row_length, "Data block row length L (3L divisible by 64)");
  seal_cmd->add_option("--scale", seal_args.scale, "Quantizer scale S")->check(CLI::PositiveNumber);

  VerifyArgs verify_args;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Extract and verify a sealed message");
  verify_cmd->add_option("--in", verify_args.in, "Stego image (binary PGM)")->required();
  verify_cmd->add_option("--key", verify_args.key, "Expected key; a mismatch is reported as TAMPERED");
  verify_cmd->add_option("--cipher", verify_args.cipher, "caesar|hill (meaning of --key)")->check(choices({"caesar", "hill"}));
  verify_cmd->add_option("--mode", verify_args.mode, "overwrite|lsb1 (default: try both)")->check(choices({"overwrite", "lsb1"}));
  verify_cmd->add_option("--row-length", verify_args.row_length, "Data block row length L");
  verify_cmd->add_option("--scale", verify_args.scale, "Quantizer scale S")->check(CLI::PositiveNumber);

  TamperArgs tamper_args;
  CLI::App* tamper_cmd = app.add_subcommand("tamper", "Flip one bit of one pixel");
  tamper_cmd->add_option("--in", tamper_args.in, "Input image")->required();
  tamper_cmd->add_option("--out", tamper_args.out, "Output image")->required();
  tamper_cmd->add_option("--pixel", tamper_args.pixel, "Raster index of the pixel")->required();
  tamper_cmd->add_option("--bit", tamper_args.bit, "Bit 0-7")->required()->check(CLI::Range(0u, 7u));

  InspectArgs inspect_args;
  CLI::App* inspect_cmd = app.add_subcommand("inspect", "Report header fields and compression figures");
  inspect_cmd->add_option("--in", inspect_args.in, "Stego image (binary PGM)")->required();
  inspect_cmd->add_option("--mode", inspect_args.mode, "overwrite|lsb1 (default: try both)")->check(choices({"overwrite", "lsb1"}));
  inspect_cmd->add_option("--row-length", inspect_args.row_length, "Data block row length L");

  std::vector<const char*> argv{"photoseal"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "photoseal: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (seal_cmd->parsed()) return do_seal(seal_args, out);
    if (verify_cmd->parsed()) return do_verify(verify_args, out);
    if (tamper_cmd->parsed()) return do_tamper(tamper_args, out);
    return do_inspect(inspect_args, out);
  } catch (const CommandError& e) {
    err << "photoseal: " << e.message << '\n';
    return e.code;
  }
}

}  // namespace photoseal::cli
