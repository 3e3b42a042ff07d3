#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "plumbd/charvec.hpp"
#include "plumbd/dinvariant.hpp"
#include "plumbd/errors.hpp"
#include "plumbd/graded_root.hpp"
#include "plumbd/graph.hpp"
#include "plumbd/plumbing.hpp"
#include "plumbd/spinc.hpp"

namespace plumbd {

using nlohmann::json;

namespace detail {

inline long long to_ll(const Int& v, const char* what) {
    if (!v.fits_slong_p()) throw Error(std::string(what) + " does not fit in a 64-bit integer");
    return v.get_si();
}

inline json intvec_json(const IntVec& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(to_ll(x, "vector entry"));
    return arr;
}

inline std::string intvec_csv(const IntVec& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ';';
        s += v[i].get_str();
    }
    return s;
}

}  // namespace detail

// Input document:
//   { "vertices": [{"id": 1, "weight": -2}, ...], "edges": [[1, 2], ...] }
// Ids are positive integers; weights are integers.
inline PlumbingGraph parse_graph(const json& doc) {
    if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
        throw ParseError("expected an object with a \"vertices\" array");
    PlumbingGraph g;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_object() || !v.contains("id") || !v.contains("weight") ||
            !v["id"].is_number_integer() || !v["weight"].is_number_integer())
            throw ParseError("each vertex needs integer \"id\" and \"weight\"");
        long id = v["id"].get<long>();
        if (id <= 0) throw ParseError("vertex ids must be positive");
        g.vertices.push_back({id, v["weight"].get<long>()});
    }
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) throw ParseError("\"edges\" must be an array of pairs");
        for (const auto& e : doc["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                throw ParseError("each edge must be a pair of vertex ids");
            g.edges.emplace_back(e[0].get<long>(), e[1].get<long>());
        }
    }
    return g;
}

inline json graph_to_json(const PlumbingGraph& g) {
    json doc;
    doc["vertices"] = json::array();
    for (const auto& v : g.vertices) doc["vertices"].push_back({{"id", v.id}, {"weight", v.weight}});
    doc["edges"] = json::array();
    for (const auto& [a, b] : g.edges) doc["edges"].push_back({a, b});
    return doc;
}

// Parses and validates; throws ParseError on malformed input, ValidationError
// (listing every violation) on a broken graph.
inline PlumbingGraph load_graph(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    PlumbingGraph g = parse_graph(doc);
    ValidationReport report = validate_graph(g);
    if (!report.ok()) throw ValidationError(report.describe());
    return g;
}

inline PlumbingGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return load_graph(in);
}

inline json manifold_json(const PlumbingMatrix& m) {
    json j;
    j["vertices"] = static_cast<long long>(m.size());
    j["det"] = detail::to_ll(m.det(), "determinant");
    j["h1_order"] = detail::to_ll(abs(m.det()), "|H1|");
    j["negative_definite"] = m.negative_definite();
    if (m.negative_definite()) {
        j["chi_w"] = static_cast<long long>(m.size());
        j["sigma_w"] = -static_cast<long long>(m.size());
    }
    return j;
}

inline json matrix_json(const IntMat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(detail::to_ll(m(i, j), "matrix entry"));
        rows.push_back(row);
    }
    return rows;
}

inline json spinc_table_json(const PlumbingMatrix& m, const std::vector<SpincClass>& classes) {
    json doc;
    doc["manifold"] = manifold_json(m);
    doc["classes"] = json::array();
    for (const auto& cls : classes)
        doc["classes"].push_back({{"index", static_cast<long long>(cls.index)},
                                  {"rep", detail::intvec_json(cls.rep.coords)}});
    return doc;
}

inline std::string spinc_table_csv(const std::vector<SpincClass>& classes) {
    std::string out = "index,rep\n";
    for (const auto& cls : classes) {
        out += std::to_string(cls.index);
        out += ',';
        out += detail::intvec_csv(cls.rep.coords);
        out += '\n';
    }
    return out;
}

inline json dinv_table_json(const PlumbingMatrix& m, const std::vector<SpincClass>& classes,
                            const std::vector<DInvariantReport>& reports) {
    json doc;
    doc["manifold"] = manifold_json(m);
    doc["classes"] = json::array();
    for (std::size_t i = 0; i < reports.size(); ++i) {
        doc["classes"].push_back({{"index", static_cast<long long>(reports[i].class_index)},
                                  {"rep", detail::intvec_json(classes[i].rep.coords)},
                                  {"maximizer", detail::intvec_json(reports[i].maximizer.coords)},
                                  {"max_square", rat_str(reports[i].max_square)},
                                  {"d", rat_str(reports[i].d)}});
    }
    return doc;
}

inline std::string dinv_table_csv(const std::vector<SpincClass>& classes,
                                  const std::vector<DInvariantReport>& reports) {
    std::string out = "index,rep,maximizer,max_square,d\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        out += std::to_string(reports[i].class_index);
        out += ',';
        out += detail::intvec_csv(classes[i].rep.coords);
        out += ',';
        out += detail::intvec_csv(reports[i].maximizer.coords);
        out += ',';
        out += rat_str(reports[i].max_square);
        out += ',';
        out += rat_str(reports[i].d);
        out += '\n';
    }
    return out;
}

// Mirrors the GradedRoot fields.
inline json root_to_json(const GradedRoot& root) {
    json j;
    j["min_level"] = detail::to_ll(root.min_level, "level");
    j["cutoff"] = detail::to_ll(root.cutoff, "level");
    j["base_grading"] = rat_str(root.base_grading);
    j["d"] = rat_str(d_from_root(root));
    j["nodes"] = json::array();
    for (const auto& n : root.nodes) {
        json node;
        node["level"] = detail::to_ll(n.level, "level");
        node["min_point"] = detail::intvec_json(n.min_point);
        node["size"] = static_cast<long long>(n.size);
        node["lambda"] = rat_str(n.lambda);
        if (n.parent >= 0)
            node["parent"] = n.parent;
        else
            node["parent"] = nullptr;
        j["nodes"].push_back(node);
    }
    return j;
}

inline json validate_report_json(const PlumbingGraph& g) {
    json doc;
    ValidationReport report = validate_graph(g);
    doc["valid"] = report.ok();
    doc["violations"] = json::array();
    for (const auto& v : report.violations) {
        json vj;
        vj["kind"] = violation_name(v.kind);
        vj["ids"] = v.ids;
        doc["violations"].push_back(vj);
    }
    return doc;
}

}  // namespace plumbd
