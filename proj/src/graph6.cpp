#include "randic/graph6.hpp"

#include <string>
#include <vector>

namespace randic {
namespace {

constexpr int kBias = 63;
constexpr char kLongOrderMarker = '~';

bool in_range(char c) { return c >= kBias && c <= kBias + 63; }

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(kLongOrderMarker);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kBias));
    }
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

Graph graph6_decode(std::string_view text) {
  if (text.empty()) throw Graph6Error(Graph6ErrorKind::kEmpty, "graph6: empty input");
  for (char c : text) {
    if (!in_range(c)) {
      throw Graph6Error(Graph6ErrorKind::kByteOutOfRange,
                        "graph6: byte " + std::to_string(static_cast<int>(static_cast<unsigned char>(c))) +
                            " outside 63..126");
    }
  }

  std::size_t pos = 0;
  long order = 0;
  if (text[0] != kLongOrderMarker) {
    order = text[0] - kBias;
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == kLongOrderMarker) {
      throw Graph6Error(Graph6ErrorKind::kUnsupportedOrder, "graph6: orders above 258047 unsupported");
    }
    if (text.size() < 4) throw Graph6Error(Graph6ErrorKind::kBadLength, "graph6: truncated order field");
    for (std::size_t i = 1; i <= 3; ++i) order = (order << 6) | (text[i] - kBias);
    pos = 4;
  }
  if (order > kMaxVertices) {
    throw Graph6Error(Graph6ErrorKind::kUnsupportedOrder,
                      "graph6: order " + std::to_string(order) + " exceeds 64");
  }

  const int n = static_cast<int>(order);
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t data_bytes = (bits + 5) / 6;
  const std::size_t available = text.size() - pos;
  if (available < data_bytes) {
    throw Graph6Error(Graph6ErrorKind::kBadLength,
                      "graph6: expected " + std::to_string(data_bytes) + " data bytes, got " +
                          std::to_string(available));
  }
  if (available > data_bytes) {
    throw Graph6Error(Graph6ErrorKind::kTrailingGarbage, "graph6: trailing bytes after graph data");
  }

  std::vector<VertexMask> rows(static_cast<std::size_t>(n), 0);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int value = text[pos + bit / 6] - kBias;
      if ((value >> (5 - bit % 6)) & 1) {
        rows[i] |= vertex_bit(j);
        rows[j] |= vertex_bit(i);
      }
    }
  }
  if (bits % 6 != 0) {
    const int last = text[pos + data_bytes - 1] - kBias;
    const int unused = static_cast<int>(6 - bits % 6);
    if ((last & ((1 << unused) - 1)) != 0) {
      throw Graph6Error(Graph6ErrorKind::kNonzeroPadding, "graph6: padding bits must be zero");
    }
  }
  return Graph::from_rows(std::move(rows));
}

void read_graph6_stream(std::istream& in,
                        const std::function<void(const Graph&, int line)>& visit) {
  static constexpr std::string_view kHeader = ">>graph6<<";
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view token = line;
    if (number == 1 && token.starts_with(kHeader)) token.remove_prefix(kHeader.size());
    while (!token.empty() && (token.back() == ' ' || token.back() == '\t')) token.remove_suffix(1);
    while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) token.remove_prefix(1);
    if (token.empty()) continue;
    try {
      visit(graph6_decode(token), number);
    } catch (const Graph6Error& e) {
      throw Graph6Error(e.kind(), "line " + std::to_string(number) + ": " + e.what());
    }
  }
}

}  // namespace randic
