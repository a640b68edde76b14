// graph6 encoding as used by nauty/geng catalogs.
//
// N(n) is one byte n+63 for n <= 62, the 4-byte form 126,b1,b2,b3 for
// n < 2^18 and 126,126 followed by 6 bytes for n < 2^36. The body packs the
// upper triangle column by column, x(0,1), x(0,2), x(1,2), x(0,3), ...,
// six bits per byte (most significant first), each byte offset by 63.

#include <cstdint>
#include <string>

#include "factorspec/error.hpp"
#include "factorspec/graph.hpp"

namespace factorspec {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 36;

std::uint64_t read_group(std::string_view bytes, std::size_t &pos,
                         std::size_t count) {
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (pos >= bytes.size())
      throw FormatError("graph6: truncated size field");
    const auto c = static_cast<unsigned char>(bytes[pos++]);
    if (c < 63 || c > 126)
      throw FormatError("graph6: byte " + std::to_string(c) +
                        " outside 63..126 in size field");
    value = (value << 6) | (c - 63U);
  }
  return value;
}

void write_group(std::string &out, std::uint64_t value, std::size_t count) {
  for (std::size_t i = count; i-- > 0;)
    out.push_back(static_cast<char>(((value >> (6 * i)) & 63U) + 63U));
}

} // namespace

Graph parse_graph6(std::string_view bytes) {
  if (bytes.starts_with(kHeader))
    bytes.remove_prefix(kHeader.size());
  if (bytes.empty())
    throw FormatError("graph6: empty record");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  const auto first = static_cast<unsigned char>(bytes[0]);
  if (first < 63 || first > 126)
    throw FormatError("graph6: byte " + std::to_string(first) +
                      " outside 63..126 in size field");
  if (first != 126) {
    n = first - 63U;
    pos = 1;
  } else if (bytes.size() > 1 && static_cast<unsigned char>(bytes[1]) == 126) {
    pos = 2;
    n = read_group(bytes, pos, 6);
  } else {
    pos = 1;
    n = read_group(bytes, pos, 3);
  }
  if (n >= kMaxOrder)
    throw UnsupportedSizeError("graph6: order " + std::to_string(n) +
                               " not supported");

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t body = (bits + 5) / 6;
  if (bytes.size() - pos < body)
    throw FormatError("graph6: truncated bit stream (expected " +
                      std::to_string(body) + " body bytes, got " +
                      std::to_string(bytes.size() - pos) + ")");
  if (bytes.size() - pos > body)
    throw FormatError("graph6: trailing bytes after record");

  GraphBuilder builder(static_cast<std::size_t>(n));
  std::uint64_t k = 0;
  Vertex u = 0;
  Vertex v = 1;
  for (std::uint64_t i = 0; i < body; ++i) {
    const auto c = static_cast<unsigned char>(bytes[pos + i]);
    if (c < 63 || c > 126)
      throw FormatError("graph6: byte " + std::to_string(c) +
                        " outside 63..126 in body");
    const unsigned value = c - 63U;
    for (int shift = 5; shift >= 0 && k < bits; --shift, ++k) {
      if (((value >> shift) & 1U) != 0)
        builder.add_edge(u, v);
      if (++u == v) {
        u = 0;
        ++v;
      }
    }
  }
  return std::move(builder).build();
}

std::string to_graph6(const Graph &g) {
  const std::uint64_t n = g.order();
  if (n >= kMaxOrder)
    throw UnsupportedSizeError("graph6: order too large");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n < (std::uint64_t{1} << 18)) {
    out.push_back(static_cast<char>(126));
    write_group(out, n, 3);
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(126));
    write_group(out, n, 6);
  }

  unsigned acc = 0;
  int filled = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

} // namespace factorspec
