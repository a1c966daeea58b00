#include "json_io.hpp"

#include "hankelwalk/error.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hankelwalk::io {

namespace {

Rational rational_field(const Json& value, const std::string& where) {
    if (!value.is_string()) throw Error(ErrorKind::ParseError, where + " must be a \"p/q\" string");
    return parse_rational(value.get<std::string>());
}

const Json& require(const Json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key)) {
        throw Error(ErrorKind::ParseError, std::string("missing field \"") + key + "\"");
    }
    return doc.at(key);
}

std::vector<Rational> rational_list(const Json& arr, const std::string& name) {
    if (!arr.is_array()) throw Error(ErrorKind::ParseError, "\"" + name + "\" must be an array");
    std::vector<Rational> out;
    out.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(rational_field(arr[i], name + "[" + std::to_string(i) + "]"));
    return out;
}

}  // namespace

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, path + ": " + e.what());
    }
}

MomentPrefix sequence_from_json(const Json& doc) {
    auto terms = rational_list(require(doc, "terms"), "terms");
    if (terms.empty()) throw Error(ErrorKind::EmptyPrefix, "\"terms\" is empty");
    if (doc.contains("a0") && rational_field(doc.at("a0"), "a0") != terms.front()) {
        throw Error(ErrorKind::ParseError, "\"a0\" disagrees with terms[0]");
    }
    return MomentPrefix(std::move(terms));
}

Json sequence_to_json(const MomentPrefix& a) {
    return Json{{"a0", to_string(a[0])}, {"terms", rationals(a.terms())}};
}

LevelWeights weights_from_json(const Json& doc) {
    LevelWeights w;
    w.lambda = rational_list(require(doc, "lambda"), "lambda");
    if (doc.contains("terminated")) {
        if (!doc.at("terminated").is_boolean()) throw Error(ErrorKind::ParseError, "\"terminated\" must be a boolean");
        w.terminated = doc.at("terminated").get<bool>();
    }
    return w;
}

Json weights_to_json(const LevelWeights& w) {
    return Json{{"lambda", rationals(w.lambda)}, {"terminated", w.terminated}};
}

bool looks_like_graph(const Json& doc) { return doc.is_object() && doc.contains("edges"); }

ExplicitGraph graph_from_json(const Json& doc) {
    const Json& vertices = require(doc, "vertices");
    if (!vertices.is_array() || vertices.empty())
        throw Error(ErrorKind::ParseError, "\"vertices\" must be a nonempty array");
    std::vector<std::string> labels;
    labels.reserve(vertices.size());
    for (const auto& v : vertices) labels.push_back(v.is_string() ? v.get<std::string>() : v.dump());

    const Json& edge_list = require(doc, "edges");
    if (!edge_list.is_array()) throw Error(ErrorKind::ParseError, "\"edges\" must be an array");
    std::vector<WeightedEdge> edges;
    for (std::size_t i = 0; i < edge_list.size(); ++i) {
        const auto& e = edge_list[i];
        const std::string where = "edges[" + std::to_string(i) + "]";
        if (!e.is_array() || e.size() != 3 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
            throw Error(ErrorKind::ParseError, where + " must be [i, j, \"p/q\"]");
        }
        edges.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>(), rational_field(e[2], where + "[2]")});
    }

    std::size_t root = 0;
    if (doc.contains("root")) {
        if (!doc.at("root").is_number_unsigned()) throw Error(ErrorKind::ParseError, "\"root\" must be a vertex index");
        root = doc.at("root").get<std::size_t>();
    }
    return ExplicitGraph(std::move(labels), std::move(edges), root);
}

Json rationals(const std::vector<Rational>& values) {
    Json arr = Json::array();
    for (const auto& v : values) arr.push_back(to_string(v));
    return arr;
}

Json matrix_to_json(const SymMatrix& m) {
    Json rows = Json::array();
    for (const auto& row : m.rows()) rows.push_back(rationals(row));
    return rows;
}

std::string digest(const Json& doc) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : doc.dump()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

}  // namespace hankelwalk::io
