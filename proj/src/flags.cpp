#include "ftflag/flags.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace ftflag {

namespace {

NodeSet normalized(NodeSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

bool contains(const NodeSet& s, int v) { return std::binary_search(s.begin(), s.end(), v); }

NodeSet set_union(const NodeSet& a, const NodeSet& b) {
    NodeSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

NodeSet set_difference(const NodeSet& a, const NodeSet& b) {
    NodeSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

void check_range(const CartanMatrix& m, const NodeSet& s) {
    for (int v : s)
        if (v < 1 || v > m.rank())
            throw Error(Errc::IndexOutOfRange, "node " + std::to_string(v) + " out of range 1.." +
                                                   std::to_string(m.rank()), {v});
}

NodeSet all_nodes(int n) {
    NodeSet d(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) d[static_cast<std::size_t>(k)] = k + 1;
    return d;
}

std::string set_str(const NodeSet& s) {
    std::string out = "{";
    for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k]);
    return out + "}";
}

} // namespace

MarkedDiagram::MarkedDiagram(CartanMatrix m, NodeSet marked_nodes)
    : MarkedDiagram(m, std::move(marked_nodes), all_nodes(m.rank())) {}

MarkedDiagram::MarkedDiagram(CartanMatrix m, NodeSet marked_nodes, std::vector<int> node_labels)
    : matrix(std::move(m)), marked(normalized(std::move(marked_nodes))), labels(std::move(node_labels)) {
    if (marked.empty()) throw Error(Errc::EmptyMarking, "marked diagram needs a marked node");
    check_range(matrix, marked);
}

MarkedDiagram fiber_diagram(const CartanMatrix& m, const NodeSet& J_in, const NodeSet& I_in) {
    const NodeSet J = normalized(J_in), I = normalized(I_in);
    check_range(m, J);
    check_range(m, I);
    if (!std::includes(J.begin(), J.end(), I.begin(), I.end()))
        throw Error(Errc::NotNested, "I = " + set_str(I) + " is not contained in J = " + set_str(J));
    const NodeSet residual = set_difference(J, I);
    if (residual.empty()) throw Error(Errc::EmptyResidualMarking, "J \\ I is empty");

    const NodeSet kept = complement(I, m.rank());
    NodeSet marked;
    for (std::size_t k = 0; k < kept.size(); ++k)
        if (contains(residual, kept[k])) marked.push_back(static_cast<int>(k) + 1);
    return MarkedDiagram(principal_submatrix(m, kept), marked, kept);
}

NodeSet neighbors(const CartanMatrix& m, int i) {
    if (i < 1 || i > m.rank())
        throw Error(Errc::IndexOutOfRange, "node " + std::to_string(i) + " out of range", {i});
    NodeSet out;
    for (int j = 1; j <= m.rank(); ++j)
        if (j != i && m.at(i, j) != 0) out.push_back(j);
    return out;
}

bool is_exposed_short(const CartanMatrix& m, const NodeSet& I_in, int i) {
    const NodeSet I = normalized(I_in);
    check_range(m, I);
    if (!contains(I, i)) throw Error(Errc::NodeNotMarked, "node " + std::to_string(i) + " is not marked", {i});

    NodeSet others = I;
    others.erase(std::find(others.begin(), others.end(), i));
    const NodeSet support = complement(others, m.rank());

    // Graph distance from i inside the support.
    std::map<int, int> dist{{i, 0}};
    std::queue<int> q;
    q.push(i);
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int w : neighbors(m, v))
            if (contains(support, w) && !dist.count(w)) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }

    const DynkinDiagram d = to_diagram(m);
    for (const auto& e : d.edges()) {
        if (e.head == 0 || !dist.count(e.a) || !dist.count(e.b)) continue;
        const int tail = e.head == e.a ? e.b : e.a;
        if (dist[e.head] < dist[tail]) return true;
    }
    return false;
}

OneStep onestep_extend(const CartanMatrix& m, const NodeSet& I_in, int i) {
    const NodeSet I = normalized(I_in);
    check_range(m, I);
    if (!contains(I, i)) throw Error(Errc::NodeNotMarked, "node " + std::to_string(i) + " is not marked", {i});
    const NodeSet N = neighbors(m, i);
    NodeSet J = I;
    J.erase(std::find(J.begin(), J.end(), i));

    OneStep s;
    s.I_prime = set_union(I, N);
    s.J_prime = set_union(J, N);
    s.exposed_short = is_exposed_short(m, I, i);
    s.grows_by_one = s.I_prime.size() == I.size() + 1;
    s.large_enough = s.I_prime.size() >= 3;
    return s;
}

NodeSet induction_start(const CartanType& t) {
    if (!is_legal(t)) throw Error(Errc::IllegalType, "illegal finite type " + t.name());
    const int n = t.rank;
    if (n == 1) return {1};
    switch (t.family) {
    case Family::E: return {2, n};
    case Family::F:
    case Family::G: return {1, 2};
    default: return {1, n};
    }
}

std::vector<InductionStep> induction_sequence(const CartanMatrix& m, const NodeSet& start_in) {
    const NodeSet start = normalized(start_in);
    check_range(m, start);
    if (start.empty()) throw Error(Errc::EmptyMarking, "induction needs a nonempty start set");
    const NodeSet D = all_nodes(m.rank());

    for (int first : start) {
        std::vector<InductionStep> seq{{start, first}};
        bool ok = true;
        while (seq.back().I != D) {
            const auto& [I, i] = seq.back();
            const OneStep s = onestep_extend(m, I, i);
            if (!s.valid()) {
                ok = false;
                break;
            }
            const NodeSet added = set_difference(s.I_prime, I);
            seq.push_back({s.I_prime, added.front()});
        }
        if (ok) return seq;
    }
    throw Error(Errc::NoValidSequence, "no valid induction sequence from " + set_str(start));
}

std::vector<InductionStep> induction_sequence(const CartanType& t) {
    return induction_sequence(catalog(t), induction_start(t));
}

std::string check_induction_sequence(const CartanMatrix& m, const std::vector<InductionStep>& seq) {
    if (seq.empty()) return "empty sequence";
    const NodeSet D = all_nodes(m.rank());
    for (std::size_t k = 0; k < seq.size(); ++k) {
        const auto& [I, i] = seq[k];
        if (!contains(I, i)) return "step " + std::to_string(k + 1) + ": i not in I";
        if (k + 1 == seq.size()) break;
        const OneStep s = onestep_extend(m, I, i);
        if (s.exposed_short) return "step " + std::to_string(k + 1) + ": exposed short node";
        if (!s.grows_by_one || !s.large_enough)
            return "step " + std::to_string(k + 1) + ": |I'| = " + std::to_string(s.I_prime.size());
        NodeSet with_next = I;
        with_next.push_back(seq[k + 1].i);
        if (seq[k + 1].I != s.I_prime || normalized(with_next) != seq[k + 1].I)
            return "step " + std::to_string(k + 1) + ": I_{k+1} != I_k u N(i_k) = I_k u {i_{k+1}}";
    }
    if (seq.back().I != D) return "sequence does not end at D";
    return {};
}

WeightVector minimal_ample_weight(const MarkedDiagram& md) {
    IntVector w = IntVector::Zero(md.matrix.rank());
    for (int i : md.marked) w(i - 1) = 1;
    return WeightVector{w};
}

} // namespace ftflag
