#include "json_io.hpp"

#include <algorithm>

#include "ftflag/rootsys.hpp"

namespace ftflag::io {

namespace {

std::string at_str(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

} // namespace

IntMatrix parse_matrix(const json& j) {
    const json* rows = &j;
    if (j.is_object()) {
        if (j.contains("matrix"))
            rows = &j.at("matrix");
        else if (j.contains("intersection_matrix"))
            rows = &j.at("intersection_matrix");
        else
            throw Error(Errc::Parse, "expected a \"matrix\" or \"intersection_matrix\" key");
    }
    if (!rows->is_array() || rows->empty()) throw Error(Errc::Parse, "matrix must be a nonempty array of rows");

    std::vector<std::vector<Int>> out;
    for (std::size_t i = 0; i < rows->size(); ++i) {
        const auto& row = (*rows)[i];
        if (!row.is_array()) throw Error(Errc::Parse, "row " + std::to_string(i + 1) + " is not an array");
        std::vector<Int> r;
        for (std::size_t k = 0; k < row.size(); ++k) {
            const auto& e = row[k];
            if (!e.is_number_integer())
                throw Error(Errc::Parse, "entry at " + at_str(i, k) + " is not an integer: " + e.dump());
            r.push_back(e.get<Int>());
        }
        out.push_back(std::move(r));
    }
    return matrix_from_rows(out);
}

IntMatrix parse_matrix(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(Errc::Parse, std::string("malformed JSON: ") + e.what());
    }
    return parse_matrix(j);
}

json to_json(const IntVector& v) {
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
    return a;
}

json to_json(const RatVector& v) {
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        mpq_class q = v(i);
        q.canonicalize();
        if (q.get_den() == 1)
            a.push_back(q.get_num().get_si());
        else
            a.push_back(to_string(q));
    }
    return a;
}

json to_json(const NodeSet& s) { return json(s); }

json to_json(const DynkinDiagram& d) {
    json edges = json::array();
    for (const auto& e : d.edges()) {
        json o;
        o["nodes"] = {e.a, e.b};
        o["multiplicity"] = e.multiplicity;
        o["arrow_to"] = e.head == 0 ? json(nullptr) : json(e.head);
        edges.push_back(std::move(o));
    }
    json o;
    o["rank"] = d.size();
    o["edges"] = std::move(edges);
    return o;
}

json to_json(const ComponentVerdict& c) {
    json o;
    o["type"] = c.type ? json(c.type->name()) : json(nullptr);
    o["kind"] = kind_name(c.kind);
    o["nodes"] = c.nodes;
    o["kernel"] = c.kernel ? to_json(*c.kernel) : json(nullptr);
    return o;
}

json to_json(const std::vector<InductionStep>& seq) {
    json a = json::array();
    for (const auto& s : seq) {
        json o;
        o["I"] = s.I;
        o["i"] = s.i;
        a.push_back(std::move(o));
    }
    return a;
}

json classification_json(const ClassificationVerdict& v, std::optional<int> dimension_bound) {
    json o;
    o["kind"] = kind_name(v.kind);
    json comps = json::array();
    for (const auto& c : v.components) comps.push_back(to_json(c));
    o["components"] = std::move(comps);
    o["dimension_bound"] = dimension_bound ? json(*dimension_bound) : json(nullptr);
    o["kernel"] = v.affine_kernel ? to_json(*v.affine_kernel) : json(nullptr);
    return o;
}

namespace {

// Induction sequence of a finite component, carried back to the ingested labels.
json component_induction(const CartanMatrix& m, const ComponentVerdict& c) {
    const CartanMatrix sub = principal_submatrix(m, c.nodes);
    const auto perm = find_isomorphism(sub, catalog(*c.type));
    std::vector<int> to_ingested(perm->size());
    for (std::size_t k = 0; k < perm->size(); ++k)
        to_ingested[static_cast<std::size_t>((*perm)[k])] = c.nodes[k];

    std::vector<InductionStep> seq = induction_sequence(*c.type);
    for (auto& s : seq) {
        for (int& v : s.I) v = to_ingested[static_cast<std::size_t>(v - 1)];
        std::sort(s.I.begin(), s.I.end());
        s.i = to_ingested[static_cast<std::size_t>(s.i - 1)];
    }
    return to_json(seq);
}

} // namespace

json ft_report_json(const CartanMatrix& m, const FTReport& r) {
    json o;
    o["verdict"] = kind_name(r.verdict.kind);
    o["ingested_orientation"] = "M[i][j] = -K_i.Gamma_j (results hold up to transpose)";
    json comps = json::array();
    for (const auto& c : r.verdict.components) {
        json co = to_json(c);
        if (c.kind == Kind::Finite) {
            const CartanMatrix sub = principal_submatrix(m, c.nodes);
            co["dimension_bound"] = flag_dimension(sub, complement({}, sub.rank()));
            co["induction"] = component_induction(m, c);
        } else {
            co["dimension_bound"] = nullptr;
            co["induction"] = nullptr;
        }
        comps.push_back(std::move(co));
    }
    o["components"] = std::move(comps);
    o["dimension_bound"] = r.dimension_bound ? json(*r.dimension_bound) : json(nullptr);
    o["affine_witness"] = r.affine_witness ? to_json(*r.affine_witness) : json(nullptr);
    o["consistency"] = consistency_name(r.consistency);
    if (r.minimal_violation) {
        json v;
        v["nodes"] = r.minimal_violation->nodes;
        v["kind"] = kind_name(r.minimal_violation->kind);
        o["minimal_violation"] = std::move(v);
    } else {
        o["minimal_violation"] = nullptr;
    }
    return o;
}

MarkedSpec parse_marked_spec(const json& j) {
    if (!j.is_object() || !j.contains("diagram") || !j.at("diagram").is_string())
        throw Error(Errc::Parse, "marked diagram needs a \"diagram\" string");
    MarkedSpec s;
    s.diagram = j.at("diagram").get<std::string>();
    if (j.contains("marked")) {
        if (!j.at("marked").is_array()) throw Error(Errc::Parse, "\"marked\" must be an array");
        for (const auto& e : j.at("marked")) {
            if (!e.is_number_integer()) throw Error(Errc::Parse, "marked node is not an integer: " + e.dump());
            s.marked.push_back(e.get<int>());
        }
    }
    return s;
}

json to_json(const MarkedSpec& s) {
    json o;
    o["diagram"] = s.diagram;
    o["marked"] = s.marked;
    return o;
}

} // namespace ftflag::io
