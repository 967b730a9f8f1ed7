#include "zf/graph6.hpp"

#include <fstream>
#include <stdexcept>

namespace zf {

namespace {

std::string strip_line(const std::string& line) {
    std::string s = line;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    // nauty tools sometimes prepend this marker to the first line
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s = s.substr(header.size());
    return s;
}

}  // namespace

Graph parse_graph6(const std::string& raw) {
    std::string s = strip_line(raw);
    if (s.empty()) throw std::invalid_argument("graph6: empty line");
    int header = static_cast<unsigned char>(s[0]);
    if (header == 126)
        throw std::invalid_argument("graph6: long form (n > 62) unsupported");
    if (header < 63 || header > 125)
        throw std::invalid_argument("graph6: malformed header byte");
    int n = header - 63;
    if (n < 1) throw std::invalid_argument("graph6: order must be >= 1");
    long bits = static_cast<long>(n) * (n - 1) / 2;
    size_t need = 1 + static_cast<size_t>((bits + 5) / 6);
    if (s.size() != need)
        throw std::invalid_argument("graph6: line length " + std::to_string(s.size()) +
                                    " does not match order " + std::to_string(n));
    std::vector<std::pair<int, int>> edges;
    long bit = 0;
    for (size_t k = 1; k < s.size(); ++k) {
        int c = static_cast<unsigned char>(s[k]) - 63;
        if (c < 0 || c > 63) throw std::invalid_argument("graph6: byte out of range");
        for (int b = 5; b >= 0; --b, ++bit) {
            bool set = (c >> b) & 1;
            if (bit >= bits) {
                if (set) throw std::invalid_argument("graph6: nonzero trailing bits");
                continue;
            }
            if (set) {
                // bit order: (0,1), (0,2), (1,2), (0,3), ... column-major upper triangle
                long idx = bit;
                int j = 1;
                while (idx >= j) idx -= j, ++j;
                edges.emplace_back(static_cast<int>(idx), j);
            }
        }
    }
    return Graph(n, edges);
}

std::string encode_graph6(const Graph& g) {
    int n = g.n();
    if (n < 1 || n > 62) throw std::invalid_argument("graph6: order must be in [1, 62]");
    std::string out(1, static_cast<char>(63 + n));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

std::vector<std::string> read_graph6_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph6 file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        std::string s = strip_line(line);
        if (!s.empty()) lines.push_back(s);
    }
    return lines;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::vector<Graph> out;
    for (const auto& line : read_graph6_lines(path)) out.push_back(parse_graph6(line));
    return out;
}

void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write graph6 file: " + path);
    for (const auto& g : graphs) out << encode_graph6(g) << "\n";
}

}  // namespace zf
