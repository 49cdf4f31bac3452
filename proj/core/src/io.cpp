#include "zf/io.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "zf/errors.hpp"

namespace zf {

namespace {

/// Shared grammar for the text format. `n <int>` must come before any
/// `e <v1> ... <vk>`; '#' starts a comment line; blank lines are skipped.
std::pair<int, std::vector<VertexSet>> parse_text(std::istream& in) {
    int n = -1;
    std::vector<VertexSet> family;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream tokens(line);
        std::string head;
        if (!(tokens >> head) || head[0] == '#') continue;

        const std::string at = " at line " + std::to_string(lineno);
        if (head == "n") {
            if (n >= 0) throw ParseError("duplicate ground set size" + at);
            if (!(tokens >> n) || n < 0)
                throw ParseError("expected a nonnegative integer after 'n'" + at);
        } else if (head == "e") {
            if (n < 0) throw ParseError("'e' before the 'n' line" + at);
            VertexSet e;
            int v;
            while (tokens >> v) {
                if (v < 1 || v > VertexSet::kMaxGroundSet)
                    throw ParseError("vertex " + std::to_string(v) + " out of range" + at);
                e |= VertexSet::single(v);
            }
            if (!tokens.eof()) throw ParseError("expected vertex numbers after 'e'" + at);
            family.push_back(e);
        } else {
            throw ParseError("unknown directive '" + head + "'" + at);
        }
    }
    if (n < 0) throw ParseError("missing 'n' line");
    return {n, std::move(family)};
}

std::pair<int, std::vector<VertexSet>> parse_json(std::istream& in) {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
        throw ParseError("expected an object with 'vertices' and 'edges'");
    if (!doc["vertices"].is_number_integer())
        throw ParseError("'vertices' must be an integer");
    const int n = doc["vertices"].get<int>();
    if (n < 0) throw ParseError("'vertices' must be nonnegative");
    if (!doc["edges"].is_array()) throw ParseError("'edges' must be an array of arrays");

    std::vector<VertexSet> family;
    for (const auto& edge : doc["edges"]) {
        if (!edge.is_array()) throw ParseError("'edges' must be an array of arrays");
        VertexSet e;
        for (const auto& v : edge) {
            if (!v.is_number_integer()) throw ParseError("vertices must be integers");
            const int vi = v.get<int>();
            if (vi < 1 || vi > VertexSet::kMaxGroundSet)
                throw ParseError("vertex " + std::to_string(vi) + " out of range");
            e |= VertexSet::single(vi);
        }
        family.push_back(e);
    }
    return {n, std::move(family)};
}

bool looks_like_json(std::istream& in) {
    for (;;) {
        const int c = in.peek();
        if (c == EOF) return false;
        if (std::isspace(static_cast<unsigned char>(c))) {
            in.get();
            continue;
        }
        return c == '{';
    }
}

void check_range(int n, const std::vector<VertexSet>& family) {
    if (n > VertexSet::kMaxGroundSet)
        throw GroundSetTooLarge("ground set size " + std::to_string(n) + " exceeds " +
                                std::to_string(VertexSet::kMaxGroundSet));
    const VertexSet omega = VertexSet::full(n);
    for (VertexSet m : family)
        if (!m.subset_of(omega))
            throw VertexOutOfRange("member " + m.to_string() + " leaves the ground set {1,...," +
                                   std::to_string(n) + "}");
}

void write_members_text(std::ostream& out, int n, const std::vector<VertexSet>& members) {
    out << "n " << n << "\n";
    for (VertexSet m : members) {
        out << "e";
        for (int v : m.members()) out << ' ' << v;
        out << "\n";
    }
}

void write_members_json(std::ostream& out, int n, const std::vector<VertexSet>& members) {
    nlohmann::json doc;
    doc["vertices"] = n;
    doc["edges"] = nlohmann::json::array();
    for (VertexSet m : members) doc["edges"].push_back(m.members());
    out << doc.dump() << "\n";
}

} // namespace

std::pair<int, std::vector<VertexSet>> read_family(std::istream& in) {
    auto [n, family] = looks_like_json(in) ? parse_json(in) : parse_text(in);
    check_range(n, family);
    return {n, std::move(family)};
}

Hypergraph read_hypergraph_text(std::istream& in) {
    auto [n, family] = parse_text(in);
    return Hypergraph::validate(n, std::move(family));
}

Hypergraph read_hypergraph_json(std::istream& in) {
    auto [n, family] = parse_json(in);
    return Hypergraph::validate(n, std::move(family));
}

Hypergraph read_hypergraph(std::istream& in) {
    return looks_like_json(in) ? read_hypergraph_json(in) : read_hypergraph_text(in);
}

Hypergraph read_hypergraph_file(const std::string& path) {
    if (path == "-") return read_hypergraph(std::cin);
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    return read_hypergraph(in);
}

std::pair<int, std::vector<VertexSet>> read_family_file(const std::string& path) {
    if (path == "-") return read_family(std::cin);
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    return read_family(in);
}

void write_hypergraph_text(std::ostream& out, const Hypergraph& h) {
    write_members_text(out, h.n(), h.edges());
}

void write_hypergraph_json(std::ostream& out, const Hypergraph& h) {
    write_members_json(out, h.n(), h.edges());
}

void write_clutter_text(std::ostream& out, const Clutter& c) {
    write_members_text(out, c.n, c.members);
}

void write_clutter_json(std::ostream& out, const Clutter& c) {
    write_members_json(out, c.n, c.members);
}

VertexSet parse_vertex_list(const std::string& text, int n) {
    std::string body = text;
    if (!body.empty() && body.front() == '{' && body.back() == '}')
        body = body.substr(1, body.size() - 2);
    if (body.find_first_not_of(" \t") == std::string::npos) return {};

    VertexSet out;
    std::istringstream in(body);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::istringstream num(item);
        int v;
        if (!(num >> v)) throw ParseError("expected a vertex number, got '" + item + "'");
        std::string rest;
        if (num >> rest) throw ParseError("trailing text '" + rest + "' after vertex number");
        if (v < 1 || v > n)
            throw VertexOutOfRange("vertex " + std::to_string(v) +
                                   " leaves the ground set {1,...," + std::to_string(n) + "}");
        out |= VertexSet::single(v);
    }
    return out;
}

} // namespace zf
