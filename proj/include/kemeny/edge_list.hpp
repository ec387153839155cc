#pragma once

#include <cctype>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kemeny/errors.hpp"
#include "kemeny/graph.hpp"
#include "kemeny/rational.hpp"

namespace kemeny {

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

inline std::size_t parse_index(const std::string& tok, std::size_t line) {
    if (tok.empty() || tok.size() > 18) throw ParseError(line, "bad vertex index '" + tok + "'");
    for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError(line, "bad vertex index '" + tok + "'");
    }
    return std::stoull(tok);
}

}  // namespace detail

/// Reads the edge-list format:
///   optional header "n <count>" before the first edge,
///   one edge per line "u v [weight]" with weight "p/q" or an integer,
///   '#' starts a comment line.
/// Without a header the vertex count is max index + 1.
inline Graph read_edge_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::size_t> declared_n;
    bool seen_edge = false;
    bool any_weight = false;
    EdgeSet edges;
    std::vector<std::optional<Rational>> weights;
    std::size_t max_index = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto toks = detail::split_ws(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks[0] == "n") {
            if (seen_edge || declared_n) throw ParseError(line_no, "header 'n <count>' must come before any edge");
            if (toks.size() != 2) throw ParseError(line_no, "header must be 'n <count>'");
            declared_n = detail::parse_index(toks[1], line_no);
            if (*declared_n == 0) throw ParseError(line_no, "vertex count must be positive");
            continue;
        }
        if (toks.size() < 2 || toks.size() > 3) throw ParseError(line_no, "expected 'u v [weight]'");
        const std::size_t u = detail::parse_index(toks[0], line_no);
        const std::size_t v = detail::parse_index(toks[1], line_no);
        if (u == v) throw ParseError(line_no, "self-loop at vertex " + toks[0]);
        if (declared_n && std::max(u, v) >= *declared_n) {
            throw ParseError(line_no, "vertex index exceeds declared count " + std::to_string(*declared_n));
        }
        std::optional<Rational> w;
        if (toks.size() == 3) {
            try {
                w = Rational::parse(toks[2]);
            } catch (const std::exception& ex) {
                throw ParseError(line_no, ex.what());
            }
            if (w->sign() <= 0) throw ParseError(line_no, "edge weight must be positive");
            any_weight = true;
        }
        const Edge e(u, v);
        for (const Edge& prev : edges) {
            if (prev == e) throw ParseError(line_no, "duplicate edge " + toks[0] + " " + toks[1]);
        }
        edges.push_back(e);
        weights.push_back(w);
        max_index = std::max(max_index, e.v);
        seen_edge = true;
    }

    if (!declared_n && !seen_edge) throw ParseError(line_no, "no edges and no 'n <count>' header");
    const std::size_t n = declared_n ? *declared_n : max_index + 1;
    std::optional<std::vector<Rational>> w;
    if (any_weight) {
        w.emplace();
        for (const auto& x : weights) w->push_back(x.value_or(Rational(1)));
    }
    return Graph(n, std::move(edges), std::move(w));
}

inline Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_edge_list(in);
}

/// "0-2,4-6" -> {{0,2},{4,6}}. Whitespace around items is ignored.
inline EdgeSet parse_edge_spec(const std::string& spec) {
    EdgeSet out;
    if (!spec.empty() && spec.back() == ',') throw GraphError("empty item in edge list '" + spec + "'");
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        const auto last = item.find_last_not_of(" \t");
        if (first == std::string::npos) throw GraphError("empty item in edge list '" + spec + "'");
        item = item.substr(first, last - first + 1);
        const auto dash = item.find('-');
        if (dash == std::string::npos) throw GraphError("edge '" + item + "' is not of the form u-v");
        try {
            const Vertex u = detail::parse_index(item.substr(0, dash), 0);
            const Vertex v = detail::parse_index(item.substr(dash + 1), 0);
            if (u == v) throw GraphError("self-loop '" + item + "'");
            out.emplace_back(u, v);
        } catch (const ParseError&) {
            throw GraphError("edge '" + item + "' is not of the form u-v");
        }
    }
    if (out.empty()) throw GraphError("no edges given");
    return out;
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << "n " << g.n() << '\n';
    for (std::size_t i = 0; i < g.m(); ++i) {
        out << g.edges()[i].u << ' ' << g.edges()[i].v;
        if (g.has_weights()) out << ' ' << g.weight(i).str();
        out << '\n';
    }
}

}  // namespace kemeny
