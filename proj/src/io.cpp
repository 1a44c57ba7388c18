#include "srx/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace srx {

namespace {

using ordered_json = nlohmann::ordered_json;

bool count_redundant(const std::vector<std::vector<std::string>>& faces,
                     const SimplicialComplex& dx) {
    // Redundant when some input face is a proper subset of another. Exact
    // duplicates collapse silently.
    for (const auto& ls : faces) {
        Face f = dx.face_from_labels(ls);
        if (!dx.is_facet(f)) return true;
    }
    return false;
}

InputDocument parse_text(std::string_view bytes) {
    std::vector<std::vector<std::string>> faces;
    std::istringstream in{std::string(bytes)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> labels;
        std::string tok;
        while (ls >> tok) labels.push_back(tok);
        if (labels.empty()) continue;
        if (labels.size() == 1 && labels[0] == "{}") {
            faces.push_back({});
            continue;
        }
        for (const auto& lab : labels)
            if (lab == "{}") throw ParseError("the empty-face token {} must be alone on its line", lineno);
        auto sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ParseError("facet repeats a vertex label", lineno);
        faces.push_back(std::move(labels));
    }
    InputDocument doc;
    doc.format = InputFormat::text;
    doc.complex = SimplicialComplex::from_label_facets(faces);
    doc.had_redundant_faces = count_redundant(faces, doc.complex);
    return doc;
}

std::vector<std::vector<std::string>> string_lists(const ordered_json& arr,
                                                   const char* what) {
    if (!arr.is_array()) throw ParseError(std::string(what) + " must be an array of arrays", 0);
    std::vector<std::vector<std::string>> out;
    for (const auto& inner : arr) {
        if (!inner.is_array())
            throw ParseError(std::string(what) + " must be an array of arrays", 0);
        std::vector<std::string> ls;
        for (const auto& v : inner) {
            if (!v.is_string())
                throw ParseError(std::string(what) + " entries must be strings", 0);
            ls.push_back(v.get<std::string>());
        }
        out.push_back(std::move(ls));
    }
    return out;
}

InputDocument parse_json(std::string_view bytes) {
    ordered_json j;
    try {
        j = ordered_json::parse(bytes);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), 0);
    }
    if (!j.is_object() || !j.contains("facets"))
        throw ParseError("JSON input must be an object with a \"facets\" key", 0);
    const auto faces = string_lists(j["facets"], "facets");
    for (const auto& ls : faces) {
        auto sorted = ls;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ParseError("facet repeats a vertex label", 0);
    }
    InputDocument doc;
    doc.format = InputFormat::json;
    doc.complex = SimplicialComplex::from_label_facets(faces);
    doc.had_redundant_faces = count_redundant(faces, doc.complex);
    if (j.contains("partition"))
        doc.partition_labels = string_lists(j["partition"], "partition");
    return doc;
}

}  // namespace

InputDocument parse_input(std::string_view bytes, InputFormat hint) {
    if (hint == InputFormat::text) return parse_text(bytes);
    if (hint == InputFormat::json) {
        InputDocument doc = parse_json(bytes);
        return doc;
    }
    const auto first = bytes.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos || bytes[first] != '{') return parse_text(bytes);
    // "{}" as the first line selects the text format (the empty face).
    auto eol = bytes.find('\n', first);
    std::string first_line(bytes.substr(first, eol == std::string_view::npos ? std::string_view::npos
                                                                             : eol - first));
    while (!first_line.empty() && (first_line.back() == ' ' || first_line.back() == '\t' ||
                                   first_line.back() == '\r'))
        first_line.pop_back();
    if (first_line == "{}") return parse_text(bytes);
    return parse_json(bytes);
}

std::string emit_text(const SimplicialComplex& dx) {
    if (dx.is_void()) return "";
    if (dx.is_irrelevant()) return "{}\n";
    std::string out;
    for (const Face& f : dx.facets()) {
        bool first = true;
        for (VertexId v : f.vertices()) {
            if (!first) out += " ";
            out += dx.label(v);
            first = false;
        }
        out += "\n";
    }
    return out;
}

std::string emit_json(const SimplicialComplex& dx, const BalancedComplex* balanced) {
    ordered_json j;
    ordered_json facets = ordered_json::array();
    for (const Face& f : dx.facets()) {
        ordered_json ls = ordered_json::array();
        for (VertexId v : f.vertices()) ls.push_back(dx.label(v));
        facets.push_back(std::move(ls));
    }
    j["facets"] = std::move(facets);
    if (balanced != nullptr) {
        ordered_json classes = ordered_json::array();
        for (const auto& cls : balanced->classes()) {
            ordered_json ls = ordered_json::array();
            for (VertexId v : cls) ls.push_back(balanced->complex().label(v));
            classes.push_back(std::move(ls));
        }
        j["partition"] = std::move(classes);
    }
    return j.dump(2) + "\n";
}

std::vector<std::vector<VertexId>> partition_from_labels(
    const SimplicialComplex& dx, const std::vector<std::vector<std::string>>& classes) {
    std::vector<std::vector<VertexId>> out;
    out.reserve(classes.size());
    for (const auto& cls : classes) {
        std::vector<VertexId> ids;
        ids.reserve(cls.size());
        for (const auto& lab : cls) ids.push_back(dx.face_from_labels({lab}).vertices()[0]);
        std::sort(ids.begin(), ids.end());
        out.push_back(std::move(ids));
    }
    return out;
}

namespace {

ordered_json int_list(const std::vector<std::int64_t>& v) {
    ordered_json out = ordered_json::array();
    for (auto x : v) out.push_back(x);
    return out;
}

}  // namespace

std::string report_to_json(const DiagnosticsReport& rep, const SimplicialComplex& dx) {
    ordered_json j;
    j["field"] = rep.field.name();
    j["characteristic"] = rep.field.characteristic;
    j["vertices"] = rep.n_vertices;
    j["dim"] = rep.dim;
    j["facets"] = ordered_json::parse(emit_json(dx))["facets"];
    j["f_vector"] = int_list(rep.f_vec);
    j["h_vector"] = int_list(rep.h_vec);
    j["reduced_euler"] = rep.euler_reduced;
    // betti[k] is the reduced rank in dimension k-1
    j["betti"] = int_list(rep.betti.ranks);
    j["depth"] = rep.depth;
    j["depth_links"] = rep.depth_links;
    j["depth_nerves"] = rep.depth_nerves;
    j["depth_rank"] = rep.depth_rank;
    ordered_json mins = ordered_json::array();
    for (const auto& [i, s] : rep.rank_minimizers) {
        ordered_json m;
        m["i"] = i;
        m["drop_ranks"] = ordered_json(s);
        mins.push_back(std::move(m));
    }
    j["rank_depth_minimizers"] = std::move(mins);
    j["serre_level"] = rep.serre;
    ordered_json flags;
    flags["pure"] = rep.pure;
    flags["cohen_macaulay"] = rep.cohen_macaulay;
    flags["buchsbaum"] = rep.buchsbaum;          // extension flag
    flags["gorenstein_star"] = rep.gorenstein_star;
    flags["gorenstein"] = rep.gorenstein;
    flags["doubly_cm"] = rep.doubly_cm;          // extension flag
    j["flags"] = std::move(flags);
    ordered_json wit;
    for (const auto& [k, v] : rep.witnesses) wit[k] = v;
    j["witnesses"] = std::move(wit);
    return j.dump(2) + "\n";
}

std::string report_to_text(const DiagnosticsReport& rep, const SimplicialComplex& dx) {
    // Derived from the JSON form so the two never drift.
    const ordered_json j = ordered_json::parse(report_to_json(rep, dx));
    std::ostringstream out;
    out << "vertices: " << j["vertices"] << "\n";
    out << "dim: " << j["dim"] << "\n";
    out << "field: " << j["field"].get<std::string>() << "\n";
    auto plain_list = [](const ordered_json& arr) {
        std::string s;
        for (const auto& x : arr) {
            if (!s.empty()) s += " ";
            s += x.dump();
        }
        return s;
    };
    out << "f_vector: " << plain_list(j["f_vector"]) << "\n";
    out << "h_vector: " << plain_list(j["h_vector"]) << "\n";
    out << "reduced_euler: " << j["reduced_euler"] << "\n";
    out << "betti: " << plain_list(j["betti"]) << "  (from dimension -1)\n";
    out << "depth: " << j["depth"] << "\n";
    out << "depth_links: " << j["depth_links"] << "\n";
    out << "depth_nerves: " << j["depth_nerves"] << "\n";
    out << "depth_rank: " << j["depth_rank"] << "\n";
    out << "serre_level: " << j["serre_level"] << "\n";
    for (const auto& [key, val] : j["flags"].items()) {
        out << key << ": " << (val.get<bool>() ? "yes" : "no");
        if (key == "buchsbaum" || key == "doubly_cm") out << "  [extension]";
        const auto& wit = j["witnesses"];
        if (!val.get<bool>() && wit.contains(key))
            out << "  (" << wit[key].get<std::string>() << ")";
        out << "\n";
    }
    return out.str();
}

}  // namespace srx
