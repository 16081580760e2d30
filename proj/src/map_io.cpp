#include "pwdyn/map_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace pwdyn {

namespace {

Rational parse_field(const std::string& field, std::size_t line) {
    try {
        return Rational::parse(field);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line);
    }
}

}  // namespace

PWLMap parse_map(std::string_view text) {
    std::vector<Node> nodes;
    std::vector<std::size_t> lines;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto start = raw.find_first_not_of(" \t\r");
        if (start == std::string::npos || raw[start] == '#') {
            continue;
        }
        std::istringstream fields(raw);
        std::string xs, ys, extra;
        if (!(fields >> xs >> ys)) {
            throw ParseError("expected '<x> <y>'", line);
        }
        if (fields >> extra) {
            throw ParseError("unexpected trailing field '" + extra + "'", line);
        }
        Node node{parse_field(xs, line), parse_field(ys, line)};
        if (!nodes.empty() && !(nodes.back().x < node.x)) {
            throw ParseError("nodes are not sorted: " + node.x.str() + " after " + nodes.back().x.str(), line);
        }
        nodes.push_back(std::move(node));
        lines.push_back(line);
    }
    if (nodes.size() < 2) {
        throw ParseError("a map needs at least two nodes", line == 0 ? 1 : line);
    }
    const Rational& lo = nodes.front().x;
    const Rational& hi = nodes.back().x;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].y < lo || nodes[i].y > hi) {
            throw ParseError("value " + nodes[i].y.str() + " escapes the domain [" + lo.str() + ", " + hi.str() + "]",
                             lines[i]);
        }
    }
    return PWLMap(std::move(nodes));
}

std::string serialize_map(const PWLMap& map) {
    std::string out;
    for (const Node& n : map.nodes()) {
        out += n.x.str();
        out += ' ';
        out += n.y.str();
        out += '\n';
    }
    return out;
}

PWLMap load_map_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open map file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_map(buf.str());
}

}  // namespace pwdyn
