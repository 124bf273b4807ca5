#include "finitetc/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "finitetc/zoo.hpp"
#include "json.hpp"

namespace finitetc {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{';
    }
    return false;
}

PosetPtr poset_from_names(const std::vector<std::string>& elements,
                          const std::vector<std::pair<std::string, std::string>>& relations,
                          int line_for_errors) {
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (!index.emplace(elements[i], int(i)).second)
            throw ParseError("duplicate element: " + elements[i], line_for_errors);
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& [lo, hi] : relations) {
        auto a = index.find(lo), b = index.find(hi);
        if (a == index.end()) throw ParseError("unknown element: " + lo, line_for_errors);
        if (b == index.end()) throw ParseError("unknown element: " + hi, line_for_errors);
        edges.emplace_back(a->second, b->second);
    }
    return FinitePoset::build(elements, edges);
}

PosetPtr parse_poset_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    if (!j.contains("elements") || !j["elements"].is_array())
        throw ParseError("poset JSON needs an \"elements\" array");
    std::vector<std::string> elements;
    for (const auto& e : j["elements"]) elements.push_back(e.get<std::string>());
    std::vector<std::pair<std::string, std::string>> relations;
    if (j.contains("hasse"))
        for (const auto& pair : j["hasse"]) {
            if (!pair.is_array() || pair.size() != 2)
                throw ParseError("hasse entries must be [lower, upper] pairs");
            relations.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
        }
    return poset_from_names(elements, relations, 0);
}

}  // namespace

PosetPtr parse_poset(const std::string& text) {
    if (looks_like_json(text)) return parse_poset_json(text);
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> relations;
    bool have_elements = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens(strip_comment(line));
        if (toks.empty()) continue;
        if (!have_elements) {
            if (toks[0] != "elements:")
                throw ParseError("expected `elements: ...` as the first line", lineno);
            elements.assign(toks.begin() + 1, toks.end());
            if (elements.empty()) throw ParseError("no elements listed", lineno);
            have_elements = true;
            continue;
        }
        if (toks.size() != 3 || toks[1] != "<")
            throw ParseError("expected `a < b`", lineno);
        relations.emplace_back(toks[0], toks[2]);
    }
    if (!have_elements) throw ParseError("empty poset file");
    return poset_from_names(elements, relations, 0);
}

PosetPtr load_space(const std::string& source) {
    if (is_builtin_space(source)) return builtin_space(source);
    return parse_poset(read_file(source));
}

ComplexPtr parse_complex(const std::string& text) {
    std::vector<std::vector<std::string>> facets_by_name;
    if (looks_like_json(text)) {
        ordered_json j;
        try {
            j = ordered_json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("bad JSON: ") + e.what());
        }
        if (!j.contains("facets") || !j["facets"].is_array())
            throw ParseError("complex JSON needs a \"facets\" array");
        for (const auto& f : j["facets"]) {
            std::vector<std::string> names;
            for (const auto& v : f)
                names.push_back(v.is_string() ? v.get<std::string>()
                                              : std::to_string(v.get<long>()));
            facets_by_name.push_back(std::move(names));
        }
    } else {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            auto toks = tokens(strip_comment(line));
            if (!toks.empty()) facets_by_name.push_back(std::move(toks));
        }
    }
    if (facets_by_name.empty()) throw ParseError("complex has no facets");
    std::vector<std::string> vertices;  // order of first appearance
    std::map<std::string, int> index;
    for (const auto& f : facets_by_name)
        for (const auto& v : f)
            if (index.emplace(v, int(vertices.size())).second) vertices.push_back(v);
    std::vector<std::vector<int>> facets;
    for (const auto& f : facets_by_name) {
        std::vector<int> facet;
        for (const auto& v : f) facet.push_back(index[v]);
        facets.push_back(std::move(facet));
    }
    return SimplicialComplex::build(std::move(vertices), std::move(facets));
}

ComplexPtr load_complex(const std::string& source) { return parse_complex(read_file(source)); }

namespace {

ordered_json witness_json(const SectionWitness& w) {
    ordered_json j;
    j["variant"] = w.variant == Variant::Wedge ? "wedge" : "linear";
    j["n"] = w.n;
    j["m"] = w.m;
    ordered_json paths = ordered_json::array();
    auto elems = w.domain.to_indices();
    for (std::size_t i = 0; i < elems.size(); ++i) {
        ordered_json entry;
        entry["element"] = w.ambient->label(elems[i]);
        ordered_json vals = ordered_json::array();
        for (int v : w.paths[i]) vals.push_back(w.factor->label(v));
        entry["values"] = std::move(vals);
        paths.push_back(std::move(entry));
    }
    j["paths"] = std::move(paths);
    return j;
}

const char* certified_string(const ComplexityReport& r) {
    if (r.value_kind == ComplexityReport::ValueKind::Unknown) return "unknown";
    return r.exact ? "exact" : "upper_bound_at_budget";
}

}  // namespace

std::string report_to_json(const ComplexityReport& r, bool include_timing) {
    ordered_json j;
    j["invariant"] = r.invariant;
    j["n"] = r.n;
    if (r.m) j["m"] = *r.m;
    if (r.k) j["k"] = *r.k;
    switch (r.value_kind) {
        case ComplexityReport::ValueKind::Finite: j["value"] = r.value; break;
        case ComplexityReport::ValueKind::Infinite: j["value"] = "infinite"; break;
        case ComplexityReport::ValueKind::Unknown: j["value"] = "unknown"; break;
    }
    j["certified"] = certified_string(r);
    ordered_json cover = ordered_json::array();
    for (const auto& member : r.cover_labels) cover.push_back(member);
    j["cover"] = std::move(cover);
    if (!r.witnesses.empty()) {
        ordered_json ws = ordered_json::array();
        for (const auto& w : r.witnesses) ws.push_back(witness_json(w));
        j["witnesses"] = std::move(ws);
    }
    if (!r.notes.empty()) j["notes"] = r.notes;
    if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
    return j.dump(2);
}

std::string report_to_text(const ComplexityReport& r) {
    std::ostringstream out;
    out << r.invariant << " (n=" << r.n;
    if (r.m) out << ", m=" << *r.m;
    if (r.k) out << ", k=" << *r.k;
    out << ") = ";
    switch (r.value_kind) {
        case ComplexityReport::ValueKind::Finite: out << r.value; break;
        case ComplexityReport::ValueKind::Infinite: out << "infinite"; break;
        case ComplexityReport::ValueKind::Unknown: out << "unknown"; break;
    }
    out << "  [" << certified_string(r) << "]\n";
    for (std::size_t i = 0; i < r.cover_labels.size(); ++i) {
        out << "  cover[" << i << "] = {";
        for (std::size_t j = 0; j < r.cover_labels[i].size(); ++j) {
            if (j) out << ", ";
            out << r.cover_labels[i][j];
        }
        out << "}\n";
    }
    if (!r.notes.empty()) out << "  notes: " << r.notes << "\n";
    return out.str();
}

std::string witness_to_json(const SectionWitness& w) { return witness_json(w).dump(2); }

}  // namespace finitetc
