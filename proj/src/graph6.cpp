#include "biclab/graph6.hpp"

#include <algorithm>

#include "biclab/errors.hpp"

namespace biclab {

namespace {

constexpr int kBias = 63;
constexpr int kLongHeader = 126;

int sextet(std::string_view text, std::size_t pos) {
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) {
        throw ParseError("graph6 byte " + std::to_string(static_cast<int>(c)) + " outside 63..126", pos);
    }
    return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    if (text.empty()) throw ParseError("empty graph6 line", 0);

    std::size_t pos = 0;
    long n = sextet(text, pos++);
    if (n == kLongHeader - kBias) {
        if (text.size() < 4) throw ParseError("truncated length header", text.size());
        if (sextet(text, 1) == kLongHeader - kBias) throw ParseError("eight-byte length header unsupported", 1);
        n = 0;
        for (int i = 0; i < 3; ++i) n = (n << 6) | sextet(text, pos++);
        if (n < 63) throw ParseError("non-canonical long length header", 0);
    }
    if (n > kMaxOrder) throw CapabilityError("graph order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));

    const long pairs = n * (n - 1) / 2;
    const std::size_t body = static_cast<std::size_t>((pairs + 5) / 6);
    if (text.size() != pos + body) {
        throw ParseError("expected " + std::to_string(pos + body) + " bytes for order " + std::to_string(n) +
                             ", found " + std::to_string(text.size()),
                         std::min(text.size(), pos + body));
    }

    std::vector<Edge> edges;
    long bit = 0;
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u, ++bit) {
            const int byte = sextet(text, pos + bit / 6);
            if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
        }
    }
    if (bit % 6 != 0) {
        const std::size_t last = pos + body - 1;
        const int padding_mask = (1 << (6 - bit % 6)) - 1;
        if (sextet(text, last) & padding_mask) throw ParseError("nonzero padding bits", last);
    }
    for (std::size_t i = pos; i < text.size(); ++i) sextet(text, i);
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back(static_cast<char>(kLongHeader));
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
    int acc = 0;
    int filled = 0;
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

void for_each_graph6_line(std::istream& in, const std::function<void(const Graph6Line&)>& visit) {
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto last = line.find_last_not_of(" \t\r");
        visit({number, line.substr(first, last - first + 1)});
    }
}

}  // namespace biclab
