#include "fatchroma/graph6.hpp"

#include <limits>

#include "fatchroma/parse_error.hpp"

namespace fatchroma {

namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;
constexpr long long kShortMax = 62;
constexpr long long kMediumMax = 258047;       // largest n for the 18-bit header
constexpr long long kLongMax = (1LL << 36) - 1;

int sextet_at(std::string_view text, std::size_t i) {
    if (i >= text.size())
        throw ParseError("graph6: truncated input", i);
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < kBias || c > kMaxByte)
        throw ParseError("graph6: byte value " + std::to_string(c) + " outside [63, 126]", i);
    return c - kBias;
}

long long read_header(std::string_view text, std::size_t& pos) {
    const int first = sextet_at(text, pos);
    if (first != kMaxByte - kBias) {
        ++pos;
        return first;
    }
    // '~': extended header.
    const std::size_t start = pos;
    ++pos;
    int groups = 3;
    if (sextet_at(text, pos) == kMaxByte - kBias) {
        groups = 6;
        ++pos;
    }
    long long n = 0;
    for (int i = 0; i < groups; ++i) {
        n = (n << 6) | sextet_at(text, pos);
        ++pos;
    }
    if (groups == 3 && (n <= kShortMax || n > kMediumMax))
        throw ParseError("graph6: non-canonical 18-bit header for n=" + std::to_string(n), start);
    if (groups == 6 && n <= kMediumMax)
        throw ParseError("graph6: non-canonical 36-bit header for n=" + std::to_string(n), start);
    return n;
}

} // namespace

Graph parse_graph6(std::string_view text) {
    std::size_t pos = 0;
    constexpr std::string_view kPrefix = ">>graph6<<";
    if (text.substr(0, kPrefix.size()) == kPrefix)
        pos = kPrefix.size();
    if (pos >= text.size())
        throw ParseError("graph6: empty input", pos);

    const long long n64 = read_header(text, pos);
    if (n64 > std::numeric_limits<int>::max())
        throw ParseError("graph6: vertex count " + std::to_string(n64) + " unsupported", 0);
    const int n = static_cast<int>(n64);

    const long long bit_count = static_cast<long long>(n) * (n - 1) / 2;
    std::vector<std::pair<int, int>> edges;
    int row = 0, col = 1;
    long long consumed = 0;
    while (consumed < bit_count) {
        const std::size_t byte_pos = pos;
        const int value = sextet_at(text, pos);
        ++pos;
        for (int bit = 5; bit >= 0; --bit, ++consumed) {
            const bool set = (value >> bit) & 1;
            if (consumed >= bit_count) {
                if (set)
                    throw ParseError("graph6: nonzero padding bits", byte_pos);
                continue;
            }
            if (set)
                edges.emplace_back(row, col);
            if (++row == col) {
                row = 0;
                ++col;
            }
        }
    }
    if (pos != text.size())
        throw ParseError("graph6: trailing bytes after encoded graph", pos);
    return Graph(n, edges);
}

std::string emit_graph6(const Graph& g) {
    const long long n = g.vertex_count();
    std::string out;

    auto push_sextets = [&out](long long value, int groups) {
        for (int i = groups - 1; i >= 0; --i)
            out.push_back(static_cast<char>(((value >> (6 * i)) & 0x3F) + kBias));
    };

    if (n <= kShortMax) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= kMediumMax) {
        out.push_back(static_cast<char>(kMaxByte));
        push_sextets(n, 3);
    } else if (n <= kLongMax) {
        out.push_back(static_cast<char>(kMaxByte));
        out.push_back(static_cast<char>(kMaxByte));
        push_sextets(n, 6);
    } else {
        throw std::invalid_argument("graph6: vertex count too large to encode");
    }

    int accum = 0;
    int filled = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            accum = (accum << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(accum + kBias));
                accum = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((accum << (6 - filled)) + kBias));
    return out;
}

} // namespace fatchroma
