#pragma once

#include <string>
#include <string_view>

#include "trichain/cubic_graph.hpp"

namespace trichain {

/// Standard header-free graph6 encoding (short form for n <= 62, long form
/// up to n <= 258047).  Bit-exact: upper-triangle bits x(i,j) for j > i in
/// column-major order, packed 6 per byte, padded with zeros.
std::string to_graph6(const CubicGraph& g);

/// Decodes and validates; throws MalformedGraph6 on bad bytes or nonzero
/// padding, and NotCubic / NotSimple / OddN if the graph is not simple cubic.
CubicGraph from_graph6(std::string_view text);

} // namespace trichain
