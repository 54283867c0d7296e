#include "atrans/io.hpp"

#include <sstream>
#include <stdexcept>

#include "atrans/error.hpp"

namespace atrans {

namespace {

bool parse_int(const std::string& token, int& out) {
    try {
        std::size_t used = 0;
        out = std::stoi(token, &used);
        return used == token.size();
    } catch (const std::exception&) {
        return false;
    }
}

} // namespace

Hypergraph parse_hypergraph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    bool have_header = false;
    int n = 0, r = 0, line_no = 0;
    std::vector<VertexSet> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string token;
        std::vector<int> values;
        while (fields >> token) {
            int v;
            if (!parse_int(token, v))
                throw ParseError("line " + std::to_string(line_no) + ": bad integer '" +
                                 token + "'");
            values.push_back(v);
        }
        if (!have_header) {
            if (values.size() != 2)
                throw ParseError("line " + std::to_string(line_no) +
                                 ": header must be 'n r'");
            n = values[0];
            r = values[1];
            if (n < 0 || n > VertexSet::capacity)
                throw ParseError("header: vertex count must be in 0..64");
            if (r < 1)
                throw ParseError("header: uniformity must be at least 1");
            have_header = true;
            continue;
        }
        if (static_cast<int>(values.size()) != r)
            throw ParseError("line " + std::to_string(line_no) + ": edge arity " +
                             std::to_string(values.size()) + ", expected " +
                             std::to_string(r));
        VertexSet e;
        int prev = -1;
        for (int v : values) {
            if (v < 0 || v >= n)
                throw ParseError("line " + std::to_string(line_no) + ": vertex " +
                                 std::to_string(v) + " out of range [0," +
                                 std::to_string(n) + ")");
            if (v == prev)
                throw ParseError("line " + std::to_string(line_no) +
                                 ": duplicate vertex " + std::to_string(v) + " in edge");
            if (v < prev)
                throw ParseError("line " + std::to_string(line_no) +
                                 ": vertices must be strictly increasing");
            prev = v;
            e = e.with(v);
        }
        edges.push_back(e);
    }
    if (!have_header) throw ParseError("missing 'n r' header");
    return Hypergraph(n, r, std::move(edges));
}

std::string serialize_hypergraph(const Hypergraph& h) {
    std::string out = std::to_string(h.n()) + " " + std::to_string(h.r()) + "\n";
    for (VertexSet e : h.edges()) {
        bool first = true;
        e.for_each([&](int v) {
            if (!first) out += ' ';
            out += std::to_string(v);
            first = false;
        });
        out += '\n';
    }
    return out;
}

} // namespace atrans
