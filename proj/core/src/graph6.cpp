#include "trichain/graph6.hpp"

#include <vector>

namespace trichain {

namespace {

void append_bits(std::string& out, std::uint64_t value, int bit_count, int& bit_pos) {
    for (int i = bit_count - 1; i >= 0; --i) {
        if (bit_pos == 0) out.push_back(63);
        if (value >> i & 1) out.back() += static_cast<char>(1 << (5 - bit_pos));
        bit_pos = (bit_pos + 1) % 6;
    }
}

} // namespace

std::string to_graph6(const CubicGraph& g) {
    const std::uint64_t n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        int pos = 0;
        append_bits(out, n, 18, pos);
    } else {
        throw Error(ErrorCode::BadN, "graph6 form for n > 258047 not supported");
    }
    int pos = 0;
    std::string bits;
    for (Vertex col = 1; col < n; ++col)
        for (Vertex row = 0; row < col; ++row)
            append_bits(bits, g.has_edge(row, col) ? 1 : 0, 1, pos);
    out += bits;
    return out;
}

CubicGraph from_graph6(std::string_view text) {
    std::size_t at = 0;
    auto need = [&](std::size_t count) {
        if (text.size() - at < count)
            throw Error(ErrorCode::MalformedGraph6, "graph6 string truncated");
    };
    auto byte = [&](std::size_t i) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw Error(ErrorCode::MalformedGraph6, "graph6 byte out of range");
        return static_cast<std::uint64_t>(c - 63);
    };

    need(1);
    std::uint64_t n = 0;
    if (text[0] == 126) {
        need(4);
        if (text[1] == 126)
            throw Error(ErrorCode::MalformedGraph6, "graph6 8-byte order not supported");
        n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
        at = 4;
    } else {
        n = byte(0);
        at = 1;
    }

    const std::uint64_t pair_count = n * (n - 1) / 2;
    const std::size_t body_bytes = static_cast<std::size_t>((pair_count + 5) / 6);
    if (text.size() - at != body_bytes)
        throw Error(ErrorCode::MalformedGraph6, "graph6 body length mismatch");

    std::vector<Edge> edges;
    std::uint64_t bit_index = 0;
    for (Vertex col = 1; col < n; ++col)
        for (Vertex row = 0; row < col; ++row, ++bit_index) {
            const std::uint64_t value = byte(at + bit_index / 6);
            if (value >> (5 - bit_index % 6) & 1) edges.emplace_back(row, col);
        }
    // zero padding required in the remaining bits of the last byte
    for (std::uint64_t i = pair_count; i < body_bytes * 6; ++i)
        if (byte(at + i / 6) >> (5 - i % 6) & 1)
            throw Error(ErrorCode::MalformedGraph6, "nonzero graph6 padding");

    return CubicGraph::from_edge_list(static_cast<Vertex>(n), edges);
}

} // namespace trichain
