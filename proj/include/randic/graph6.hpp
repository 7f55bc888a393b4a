#pragma once

#include <functional>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "randic/graph.hpp"

namespace randic {

enum class Graph6ErrorKind {
  kEmpty,           // no bytes at all
  kByteOutOfRange,  // a byte outside '?'..'~'
  kBadLength,       // too few data bytes for the announced order
  kTrailingGarbage, // bytes after the last data byte
  kNonzeroPadding,  // unused bits of the last byte are set
  kUnsupportedOrder // order larger than kMaxVertices
};

class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(Graph6ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Graph6ErrorKind kind() const { return kind_; }

 private:
  Graph6ErrorKind kind_;
};

/// Headerless graph6 encoding of `g`.
std::string graph6_encode(const Graph& g);

/// Decodes one headerless graph6 token. Throws Graph6Error.
Graph graph6_decode(std::string_view text);

/// Reads one graph per line, skipping blank lines and an optional
/// ">>graph6<<" prefix. The callback receives the 1-based line number.
void read_graph6_stream(std::istream& in,
                        const std::function<void(const Graph&, int line)>& visit);

}  // namespace randic
