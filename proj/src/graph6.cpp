#include <string>

#include "walkctl/errors.hpp"
#include "walkctl/graph.hpp"

namespace walkctl {

namespace {
constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kMaxShortOrder = 62;
} // namespace

Graph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
    if (text.empty()) throw InputError("graph6: empty string");
    for (char ch : text)
        if (ch < 63 || ch > 126) throw InputError("graph6: character outside 63..126");
    const int n = text[0] - 63;
    if (n > kMaxShortOrder) throw InputError("graph6: only the short form (n <= 62) is supported");
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    const std::size_t chars = (bits + 5) / 6;
    if (text.size() != 1 + chars)
        throw InputError("graph6: expected " + std::to_string(1 + chars) + " characters, got " +
                         std::to_string(text.size()));
    Graph g(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            const int word = text[1 + k / 6] - 63;
            if (word >> (5 - k % 6) & 1) g.add_edge(i, j);
        }
    for (; k < chars * 6; ++k) {
        const int word = text[1 + k / 6] - 63;
        if (word >> (5 - k % 6) & 1) throw InputError("graph6: nonzero padding bits");
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kMaxShortOrder) throw InputError("graph6: only the short form (n <= 62) is supported");
    std::string out(1, static_cast<char>(n + 63));
    int word = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            word = word << 1 | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(word + 63));
                word = filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((word << (6 - filled)) + 63));
    return out;
}

} // namespace walkctl
