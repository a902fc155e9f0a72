/**
 * JSON and DOT emission. Every ordering is fixed (element ids, cell order,
 * entry order), so outputs are byte-stable across runs for the same input.
 */
#ifndef KCELL_EXPORT_HPP
#define KCELL_EXPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "chain.hpp"
#include "snf.hpp"

namespace kcell {

using Json = nlohmann::ordered_json;

inline Json to_json(const RootSystem& rs) {
    Json j;
    j["type"] = to_string(rs.lie_type);
    j["cartan"] = rs.cartan;
    j["positive_roots"] = rs.positive_roots;
    return j;
}

/** Group dump: elements as {id, word, length} plus the cover-relation edges. */
inline Json to_json(const WeylGroup& wg) {
    Json elements = Json::array();
    for (const auto& w : wg.elements()) {
        Json e;
        e["id"] = w.id;
        Json word = Json::array();
        for (int gen : w.word)
            word.push_back(gen + 1);
        e["word"] = std::move(word);
        e["length"] = w.length;
        elements.push_back(std::move(e));
    }
    Json covers = Json::array();
    for (const auto& w : wg.elements())
        for (const auto& [pos, v] : wg.cover_deletions(w.id)) {
            Json e;
            e["from"] = w.id;
            e["to"] = v;
            e["position"] = pos + 1;
            covers.push_back(std::move(e));
        }
    Json j;
    j["type"] = to_string(wg.roots().lie_type);
    j["elements"] = std::move(elements);
    j["covers"] = std::move(covers);
    return j;
}

inline Json to_json(const CellComplex& cx) {
    Json j;
    j["space"] = to_string(cx.space);
    j["type"] = to_string(cx.lie_type);
    j["dims"] = cx.dims;
    Json boundaries = Json::array();
    for (int d = 1; d <= cx.top_dimension(); ++d) {
        Json b;
        b["d"] = d;
        Json entries = Json::array();
        for (const auto& [r, c, v] : cx.boundary[d].entries)
            entries.push_back(Json::array({r, c, static_cast<long long>(v)}));
        b["entries"] = std::move(entries);
        boundaries.push_back(std::move(b));
    }
    j["boundaries"] = std::move(boundaries);
    return j;
}

inline Json to_json(const std::vector<HomologyGroup>& groups) {
    Json j = Json::array();
    for (const auto& h : groups) {
        Json g;
        g["free_rank"] = h.free_rank;
        Json torsion = Json::array();
        for (const auto& f : h.torsion)
            torsion.push_back(static_cast<long long>(f));
        g["torsion"] = std::move(torsion);
        j.push_back(std::move(g));
    }
    return j;
}

inline Json to_json(const UGroup& ug, const UOrderGraph& g) {
    Json vertices = Json::array();
    for (const auto& u : g.vertices) {
        Json v;
        v["w"] = u.w;
        v["c"] = u.c.bits();
        v["label"] = render_element(ug, u);
        v["length"] = ug.weyl().length(u.w);
        vertices.push_back(std::move(v));
    }
    Json edges = Json::array();
    for (const auto& e : g.edges) {
        Json ej;
        ej["from"] = Json::array({e.from.w, e.from.c.bits()});
        ej["to"] = Json::array({e.to.w, e.to.c.bits()});
        ej["position"] = e.position + 1;
        ej["kind"] = e.kind;
        edges.push_back(std::move(ej));
    }
    Json j;
    j["type"] = to_string(ug.roots().lie_type);
    j["vertices"] = std::move(vertices);
    j["edges"] = std::move(edges);
    return j;
}

namespace detail {

inline const char* length_color(int length) {
    static const char* palette[] = {"blue", "red", "green", "orange",
                                    "purple", "brown", "cyan", "magenta"};
    return palette[length % 8];
}

inline std::string dot_quote(const std::string& s) { return "\"" + s + "\""; }

} // namespace detail

/**
 * DOT rendering of the order graph: one node per element labeled by its
 * normal form, ranks constrained by length, node colors cycling through a
 * palette by length, and one edge from each cell to each cover below it.
 */
inline std::string to_dot(const UGroup& ug, const UOrderGraph& g) {
    std::string out = "digraph order_" + to_string(ug.roots().lie_type) + " {\n";
    out += "  node [shape=box];\n";
    const int top = ug.weyl().max_length();
    for (int d = top; d >= 0; --d) {
        out += "  { rank=same;";
        for (const auto& u : g.vertices)
            if (ug.weyl().length(u.w) == d)
                out += " " + detail::dot_quote(render_element(ug, u)) + ";";
        out += " }\n";
    }
    for (const auto& u : g.vertices)
        out += "  " + detail::dot_quote(render_element(ug, u)) + " [color=" +
               detail::length_color(ug.weyl().length(u.w)) + "];\n";
    for (const auto& e : g.edges)
        out += "  " + detail::dot_quote(render_element(ug, e.from)) + " -> " +
               detail::dot_quote(render_element(ug, e.to)) + ";\n";
    out += "}\n";
    return out;
}

/** DOT rendering of the Bruhat cover graph of W (flag-manifold cells). */
inline std::string to_dot(const WeylGroup& wg) {
    std::string out = "digraph bruhat_" + to_string(wg.roots().lie_type) + " {\n";
    out += "  node [shape=box];\n";
    for (int d = wg.max_length(); d >= 0; --d) {
        out += "  { rank=same;";
        for (int w : wg.by_length()[d])
            out += " " + detail::dot_quote(detail::weyl_label(wg, w, 'r')) + ";";
        out += " }\n";
    }
    for (const auto& w : wg.elements())
        out += "  " + detail::dot_quote(detail::weyl_label(wg, w.id, 'r')) + " [color=" +
               detail::length_color(w.length) + "];\n";
    for (const auto& w : wg.elements())
        for (const auto& [pos, v] : wg.cover_deletions(w.id))
            out += "  " + detail::dot_quote(detail::weyl_label(wg, w.id, 'r')) + " -> " +
                   detail::dot_quote(detail::weyl_label(wg, v, 'r')) + ";\n";
    out += "}\n";
    return out;
}

} // namespace kcell

#endif // KCELL_EXPORT_HPP
