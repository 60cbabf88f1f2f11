#include "cliquedyn/graph6.hpp"

#include <cstdint>
#include <string>

#include "cliquedyn/errors.hpp"

namespace cliquedyn {

namespace {

constexpr std::size_t kShortMax = 62;
constexpr std::size_t kMediumMax = 258047;
constexpr char kLongMarker = 126;

void append_size(std::string& out, std::size_t n) {
  if (n <= kShortMax) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= kMediumMax) {
    out.push_back(kLongMarker);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out.push_back(kLongMarker);
    out.push_back(kLongMarker);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  append_size(out, n);
  unsigned acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph parse_graph6(std::string_view s) {
  std::size_t pos = 0;
  constexpr std::string_view kHeader = ">>graph6<<";
  if (s.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);

  auto sextet = [&](std::size_t at) -> unsigned {
    if (at >= s.size()) throw ParseError("graph6: truncated input", at);
    const auto c = static_cast<unsigned char>(s[at]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126", at);
    return c - 63U;
  };

  std::size_t n = 0;
  if (pos >= s.size()) throw ParseError("graph6: empty input", pos);
  if (s[pos] != kLongMarker) {
    n = sextet(pos++);
  } else if (pos + 1 < s.size() && s[pos + 1] == kLongMarker) {
    pos += 2;
    for (int i = 0; i < 6; ++i) n = (n << 6) | sextet(pos++);
  } else {
    ++pos;
    for (int i = 0; i < 3; ++i) n = (n << 6) | sextet(pos++);
  }

  const std::uint64_t nbits = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
  const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
  if (s.size() - pos != nbytes)
    throw ParseError("graph6: expected " + std::to_string(nbytes) + " data bytes for order " +
                         std::to_string(n) + ", found " + std::to_string(s.size() - pos),
                     s.size() - pos < nbytes ? s.size() : pos + nbytes);

  GraphBuilder b(n);
  std::uint64_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const std::size_t at = pos + static_cast<std::size_t>(bit / 6);
      if ((sextet(at) >> (5 - bit % 6)) & 1U) b.add_edge(i, j);
    }
  }
  if (bit % 6 != 0) {
    const std::size_t at = pos + nbytes - 1;
    const unsigned pad_mask = (1U << (6 - bit % 6)) - 1;
    if (sextet(at) & pad_mask) throw ParseError("graph6: nonzero padding bits", at);
  }
  return std::move(b).build();
}

}  // namespace cliquedyn
