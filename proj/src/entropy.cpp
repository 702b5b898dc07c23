#include "photoseal/entropy.hpp"

#include "photoseal/bitstream.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <tuple>

namespace photoseal {
namespace {

// JPEG zig-zag order as row-major cell indices.
constexpr std::array<int, 64> kZigZagNatural{
    0,  1,  8,  16, 9,  2,  3,  10, 17, 24, 32, 25, 18, 11, 4,  5,  12, 19, 26, 33, 40, 48,
    41, 34, 27, 20, 13, 6,  7,  14, 21, 28, 35, 42, 49, 56, 57, 50, 43, 36, 29, 22, 15, 23,
    30, 37, 44, 51, 58, 59, 52, 45, 38, 31, 39, 46, 53, 60, 61, 54, 47, 55, 62, 63};

constexpr std::size_t kFixedHeaderBytes = 1 + 2 + 4;

struct Node {
  std::uint64_t weight;
  Symbol min_symbol;
  std::size_t order;
  int left = -1;
  int right = -1;
};

void put_be(std::vector<std::uint8_t>& out, std::uint64_t value, int bytes) {
  for (int i = bytes - 1; i >= 0; --i) out.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
}

std::size_t varint_size(Symbol s) {
  std::size_t n = 1;
  while (s >= 0x80) {
    s >>= 7;
    ++n;
  }
  return n;
}

void put_varint(std::vector<std::uint8_t>& out, Symbol s) {
  while (s >= 0x80) {
    out.push_back(static_cast<std::uint8_t>((s & 0x7f) | 0x80));
    s >>= 7;
  }
  out.push_back(static_cast<std::uint8_t>(s));
}

class ByteCursor {
 public:
  explicit ByteCursor(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::uint8_t u8() {
    if (pos_ >= bytes_.size()) fail(Errc::truncated_stream, "stream ends inside its header");
    return bytes_[pos_++];
  }
  std::uint64_t be(int n) {
    std::uint64_t v = 0;
    for (int i = 0; i < n; ++i) v = (v << 8) | u8();
    return v;
  }
  // Minimal-length LEB128, at most 32 bits.
  Symbol varint() {
    std::uint64_t v = 0;
    for (int shift = 0;; shift += 7) {
      const std::uint8_t b = u8();
      if (shift == 28 && b > 0x0f) fail(Errc::corrupt_header, "symbol varint exceeds 32 bits");
      v |= static_cast<std::uint64_t>(b & 0x7f) << shift;
      if (!(b & 0x80)) {
        if (b == 0 && shift > 0) fail(Errc::corrupt_header, "non-minimal symbol varint");
        return static_cast<Symbol>(v);
      }
    }
  }
  std::size_t position() const noexcept { return pos_; }
  std::span<const std::uint8_t> rest() const noexcept { return bytes_.subspan(pos_); }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

// Canonical decoding tables: per length, the first code and where its
// symbols start in `sorted`.
class CanonicalDecoder {
 public:
  explicit CanonicalDecoder(const HuffmanTable& table) {
    std::vector<std::pair<unsigned, Symbol>> entries;
    entries.reserve(table.size());
    for (const auto& [symbol, code] : table.codes()) entries.emplace_back(code.length, symbol);
    std::sort(entries.begin(), entries.end());
    max_length_ = table.max_length();
    first_code_.assign(max_length_ + 1, 0);
    count_.assign(max_length_ + 1, 0);
    offset_.assign(max_length_ + 1, 0);
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const unsigned len = entries[i].first;
      if (count_[len]++ == 0) {
        first_code_[len] = table.code(entries[i].second).bits;
        offset_[len] = i;
      }
      sorted_.push_back(entries[i].second);
    }
  }

  Symbol next(BitReader& reader) const {
    std::uint64_t code = 0;
    for (unsigned len = 1; len <= max_length_; ++len) {
      if (reader.exhausted()) fail(Errc::truncated_stream, "stream ends inside a codeword");
      code = (code << 1) | (reader.next() ? 1u : 0u);
      if (count_[len] != 0 && code >= first_code_[len] && code - first_code_[len] < count_[len])
        return sorted_[offset_[len] + static_cast<std::size_t>(code - first_code_[len])];
    }
    fail(Errc::invalid_codeword, "bit pattern matches no codeword");
  }

 private:
  unsigned max_length_ = 0;
  std::vector<std::uint64_t> first_code_;
  std::vector<std::uint64_t> count_;
  std::vector<std::size_t> offset_;
  std::vector<Symbol> sorted_;
};

std::vector<Symbol> decode_symbols(const HuffmanTable& table, std::uint32_t count, BitReader& reader) {
  // Every codeword is at least one bit long.
  if (count > reader.remaining())
    fail(Errc::truncated_stream, "stream declares " + std::to_string(count) + " symbols but carries only " +
                                     std::to_string(reader.remaining()) + " bits");
  const CanonicalDecoder decoder(table);
  std::vector<Symbol> out;
  out.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) out.push_back(decoder.next(reader));
  return out;
}

void require_zero_padding(BitReader& reader, std::size_t end_bit) {
  while (reader.position() < end_bit)
    if (reader.next()) fail(Errc::dangling_bits, "nonzero bits after the last symbol");
}

}  // namespace

const std::array<Cell, 64>& zigzag_order() noexcept {
  static const std::array<Cell, 64> order = [] {
    std::array<Cell, 64> cells{};
    for (std::size_t i = 0; i < 64; ++i) cells[i] = {kZigZagNatural[i] / 8, kZigZagNatural[i] % 8};
    return cells;
  }();
  return order;
}

std::string Codeword::to_string() const {
  std::string s(length, '0');
  for (unsigned i = 0; i < length; ++i)
    if ((bits >> (length - 1 - i)) & 1u) s[i] = '1';
  return s;
}

HuffmanTable HuffmanTable::from_lengths(const std::map<Symbol, unsigned>& lengths) {
  if (lengths.empty()) fail(Errc::corrupt_header, "Huffman table has no entries");
  std::vector<std::pair<unsigned, Symbol>> order;
  order.reserve(lengths.size());
  constexpr std::uint64_t kOne = std::uint64_t{1} << kMaxCodeLength;
  std::uint64_t kraft = 0;
  for (const auto& [symbol, len] : lengths) {
    if (len < 1 || len > kMaxCodeLength)
      fail(Errc::corrupt_header, "code length " + std::to_string(len) + " outside [1, 63]");
    kraft += kOne >> len;
    if (kraft > kOne) fail(Errc::corrupt_header, "code lengths violate the Kraft inequality");
    order.emplace_back(len, symbol);
  }
  std::sort(order.begin(), order.end());

  HuffmanTable table;
  std::uint64_t code = 0;
  unsigned prev = order.front().first;
  for (const auto& [len, symbol] : order) {
    code <<= (len - prev);
    prev = len;
    table.codes_.emplace(symbol, Codeword{code, len});
    ++code;
  }
  table.max_length_ = order.back().first;
  return table;
}

const Codeword& HuffmanTable::code(Symbol s) const {
  const auto it = codes_.find(s);
  if (it == codes_.end()) fail(Errc::unknown_symbol, "symbol " + std::to_string(s) + " has no code");
  return it->second;
}

double HuffmanTable::kraft_sum() const noexcept {
  double sum = 0.0;
  for (const auto& [symbol, code] : codes_) sum += std::ldexp(1.0, -static_cast<int>(code.length));
  return sum;
}

Frequencies count_frequencies(std::span<const Symbol> symbols) {
  Frequencies f;
  for (Symbol s : symbols) ++f[s];
  return f;
}

HuffmanTable huffman_build(const Frequencies& frequencies) {
  std::vector<Node> nodes;
  for (const auto& [symbol, weight] : frequencies)
    if (weight > 0) nodes.push_back({weight, symbol, nodes.size()});
  if (nodes.empty()) fail(Errc::empty_alphabet, "cannot build a Huffman code without symbols");
  if (nodes.size() == 1) return HuffmanTable::from_lengths({{nodes.front().min_symbol, 1}});

  const auto after = [&nodes](int a, int b) {
    const Node& x = nodes[static_cast<std::size_t>(a)];
    const Node& y = nodes[static_cast<std::size_t>(b)];
    return std::tie(x.weight, x.min_symbol, x.order) > std::tie(y.weight, y.min_symbol, y.order);
  };
  std::priority_queue<int, std::vector<int>, decltype(after)> queue(after);
  const std::size_t leaves = nodes.size();
  for (std::size_t i = 0; i < leaves; ++i) queue.push(static_cast<int>(i));
  nodes.reserve(2 * leaves);
  while (queue.size() > 1) {
    const int a = queue.top();
    queue.pop();
    const int b = queue.top();
    queue.pop();
    const Node& x = nodes[static_cast<std::size_t>(a)];
    const Node& y = nodes[static_cast<std::size_t>(b)];
    nodes.push_back({x.weight + y.weight, std::min(x.min_symbol, y.min_symbol), nodes.size(), a, b});
    queue.push(static_cast<int>(nodes.size() - 1));
  }

  std::map<Symbol, unsigned> lengths;
  std::vector<std::pair<int, unsigned>> stack{{queue.top(), 0u}};
  while (!stack.empty()) {
    const auto [index, depth] = stack.back();
    stack.pop_back();
    const Node& n = nodes[static_cast<std::size_t>(index)];
    if (n.left < 0) {
      if (depth > kMaxCodeLength) fail(Errc::bad_length, "Huffman code longer than 63 bits");
      lengths.emplace(n.min_symbol, depth);
    } else {
      stack.emplace_back(n.left, depth + 1);
      stack.emplace_back(n.right, depth + 1);
    }
  }
  return HuffmanTable::from_lengths(lengths);
}

std::size_t EncodedStream::header_size() const {
  std::size_t n = kFixedHeaderBytes;
  for (const auto& [symbol, code] : table.codes()) n += varint_size(symbol) + 1;
  return n;
}

std::vector<std::uint8_t> EncodedStream::serialize() const {
  if (table.size() > std::numeric_limits<std::uint16_t>::max())
    fail(Errc::bad_length, "Huffman table with " + std::to_string(table.size()) + " entries does not fit the header");
  std::vector<std::uint8_t> out;
  out.reserve(total_size());
  out.push_back(kStreamMagic);
  put_be(out, table.size(), 2);
  for (const auto& [symbol, code] : table.codes()) {
    put_varint(out, symbol);
    out.push_back(static_cast<std::uint8_t>(code.length));
  }
  put_be(out, symbol_count, 4);
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

EncodedStream huffman_encode(std::span<const Symbol> symbols, const HuffmanTable& table) {
  if (symbols.size() > std::numeric_limits<std::uint32_t>::max())
    fail(Errc::bad_length, "too many symbols for one stream");
  BitWriter writer;
  for (Symbol s : symbols) {
    const Codeword& c = table.code(s);
    writer.put(c.bits, c.length);
  }
  EncodedStream stream{table, static_cast<std::uint32_t>(symbols.size()), writer.bit_count(), {}};
  stream.payload = std::move(writer).take();
  return stream;
}

std::vector<Symbol> huffman_decode(const EncodedStream& stream) {
  BitReader reader(stream.payload);
  std::vector<Symbol> out = decode_symbols(stream.table, stream.symbol_count, reader);
  const std::size_t used_bytes = (reader.position() + 7) / 8;
  if (stream.payload.size() > used_bytes)
    fail(Errc::dangling_bits, std::to_string(stream.payload.size() - used_bytes) + " bytes follow the last symbol");
  require_zero_padding(reader, used_bytes * 8);
  return out;
}

DecodedPrefix decode_prefix(std::span<const std::uint8_t> bytes) {
  ByteCursor cursor(bytes);
  if (cursor.u8() != kStreamMagic) fail(Errc::corrupt_header, "stream magic 0x48 not found");
  const auto entries = static_cast<std::size_t>(cursor.be(2));
  std::map<Symbol, unsigned> lengths;
  for (std::size_t i = 0; i < entries; ++i) {
    const Symbol symbol = cursor.varint();
    const unsigned len = cursor.u8();
    if (!lengths.empty() && symbol <= lengths.rbegin()->first)
      fail(Errc::corrupt_header, "table entries are not in ascending symbol order");
    lengths.emplace_hint(lengths.end(), symbol, len);
  }
  HuffmanTable table = HuffmanTable::from_lengths(lengths);
  const auto count = static_cast<std::uint32_t>(cursor.be(4));

  const std::span<const std::uint8_t> rest = cursor.rest();
  BitReader reader(rest);
  std::vector<Symbol> symbols = decode_symbols(table, count, reader);
  const std::size_t payload_bits = reader.position();
  const std::size_t payload_bytes = (payload_bits + 7) / 8;
  require_zero_padding(reader, payload_bytes * 8);

  DecodedPrefix result;
  result.stream.table = std::move(table);
  result.stream.symbol_count = count;
  result.stream.payload_bits = payload_bits;
  result.stream.payload.assign(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(payload_bytes));
  result.symbols = std::move(symbols);
  result.consumed = cursor.position() + payload_bytes;
  return result;
}

std::vector<Symbol> huffman_decode(std::span<const std::uint8_t> wire) {
  DecodedPrefix decoded = decode_prefix(wire);
  if (decoded.consumed != wire.size())
    fail(Errc::dangling_bits, std::to_string(wire.size() - decoded.consumed) + " bytes follow the last symbol");
  return std::move(decoded.symbols);
}

}  // namespace photoseal
