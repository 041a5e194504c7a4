#include "ftflag/ftverify.hpp"

#include <algorithm>

#include "ftflag/rootsys.hpp"

namespace ftflag {

const char* consistency_name(Consistency c) {
    return c == Consistency::Consistent ? "Consistent" : "ContradictsFiniteness";
}

CartanMatrix ingest(const IntersectionData& raw) {
    CartanMatrix m = validate_gcm(raw.matrix);
    for (int i = 1; i <= m.rank(); ++i)
        for (int j = i + 1; j <= m.rank(); ++j) {
            if (m.at(i, j) == 0) continue;
            const BigInt p = BigInt(static_cast<long>(m.at(i, j))) * BigInt(static_cast<long>(m.at(j, i)));
            if (p > 3)
                throw Error(Errc::ProductOutOfRange,
                            "product m(" + std::to_string(i) + "," + std::to_string(j) + ")*m(" +
                                std::to_string(j) + "," + std::to_string(i) + ") = " + p.get_str() +
                                " is not 1, 2 or 3: no Picard-number-two FT-manifold has this rank-2 matrix",
                            {i, j});
        }
    return m;
}

namespace {

bool is_connected(const CartanMatrix& m) { return connected_components(m).size() == 1; }

// Connected subsets of `nodes` of size k, in lexicographic order.
void subsets_of_size(const NodeSet& nodes, std::size_t k, std::size_t from, NodeSet& cur,
                     std::vector<NodeSet>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t p = from; p < nodes.size(); ++p) {
        cur.push_back(nodes[p]);
        subsets_of_size(nodes, k, p + 1, cur, out);
        cur.pop_back();
    }
}

std::optional<Violation> smallest_violation(const CartanMatrix& m, const ClassificationVerdict& v) {
    for (const auto& comp : v.components) {
        if (comp.kind == Kind::Finite) continue;
        for (std::size_t k = 2; k <= comp.nodes.size(); ++k) {
            std::vector<NodeSet> candidates;
            NodeSet cur;
            subsets_of_size(comp.nodes, k, 0, cur, candidates);
            for (const auto& s : candidates) {
                const CartanMatrix sub = principal_submatrix(m, s);
                if (!is_connected(sub)) continue;
                const auto c = classify(sub);
                if (c.kind != Kind::Finite) return Violation{s, c.kind};
            }
        }
    }
    return std::nullopt;
}

} // namespace

FTReport verdict(const CartanMatrix& m) {
    FTReport r;
    r.verdict = classify(m);
    for (const auto& c : r.verdict.components) r.product_factors.push_back(c.nodes);
    switch (r.verdict.kind) {
    case Kind::Finite:
        r.dimension_bound = flag_dimension(m, complement({}, m.rank()));
        r.consistency = Consistency::Consistent;
        break;
    case Kind::Affine:
        r.affine_witness = r.verdict.affine_kernel;
        r.consistency = Consistency::ContradictsFiniteness;
        break;
    case Kind::Indefinite:
        r.consistency = Consistency::ContradictsFiniteness;
        r.minimal_violation = smallest_violation(m, r.verdict);
        break;
    }
    return r;
}

std::vector<ProductFactor> decompose_product(const CartanMatrix& m) {
    const auto v = classify(m);
    if (v.kind != Kind::Finite) throw Error(Errc::NotFinite, "product decomposition needs a finite matrix");
    std::vector<ProductFactor> out;
    for (const auto& c : v.components) {
        const CartanMatrix sub = principal_submatrix(m, c.nodes);
        out.push_back({c.nodes, *c.type, flag_dimension(sub, complement({}, sub.rank()))});
    }
    return out;
}

} // namespace ftflag
