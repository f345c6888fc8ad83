#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "oddgirth/graph.hpp"

namespace oddgirth {

/// Largest order representable with the single-byte graph6 size header.
inline constexpr std::size_t kGraph6MaxOrder = 62;

/// Decodes one graph6 line (no trailing newline). Only the single-byte size
/// header is supported. Throws ParseError carrying the offending byte offset
/// for a bad header, a byte outside '?'..'~', a short body, trailing bytes,
/// or non-zero padding bits.
Graph parse_graph6(std::string_view text);

/// Throws SizeLimitError when the order exceeds kGraph6MaxOrder.
std::string encode_graph6(const Graph& g);

}  // namespace oddgirth
