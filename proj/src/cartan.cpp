#include "ftflag/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "ftflag/linalg.hpp"

namespace ftflag {

const char* errc_name(Errc code) {
    switch (code) {
    case Errc::NotSquare: return "NotSquare";
    case Errc::BadDiagonal: return "BadDiagonal";
    case Errc::PositiveOffDiagonal: return "PositiveOffDiagonal";
    case Errc::ZeroAsymmetry: return "ZeroAsymmetry";
    case Errc::MultiplicityOverflow: return "MultiplicityOverflow";
    case Errc::InvalidDiagram: return "InvalidDiagram";
    case Errc::EmptySubset: return "EmptySubset";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::IllegalType: return "IllegalType";
    case Errc::NotFinite: return "NotFinite";
    case Errc::NegativeRoot: return "NegativeRoot";
    case Errc::NotARoot: return "NotARoot";
    case Errc::NoStepFound: return "NoStepFound";
    case Errc::SingularSystem: return "SingularSystem";
    case Errc::FullSubset: return "FullSubset";
    case Errc::EmptyMarking: return "EmptyMarking";
    case Errc::BadLetter: return "BadLetter";
    case Errc::RankTooLarge: return "RankTooLarge";
    case Errc::NotNested: return "NotNested";
    case Errc::EmptyResidualMarking: return "EmptyResidualMarking";
    case Errc::NodeNotMarked: return "NodeNotMarked";
    case Errc::NoValidSequence: return "NoValidSequence";
    case Errc::ProductOutOfRange: return "ProductOutOfRange";
    case Errc::InadmissibleDegree: return "InadmissibleDegree";
    case Errc::ZeroNu: return "ZeroNu";
    case Errc::Parse: return "Parse";
    }
    return "Unknown";
}

namespace {

std::string pair_str(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

BigInt product(Int a, Int b) { return BigInt(static_cast<long>(a)) * BigInt(static_cast<long>(b)); }

} // namespace

// ---------------------------------------------------------------------------
// CartanMatrix

CartanMatrix CartanMatrix::validate(const IntMatrix& raw) {
    if (raw.rows() != raw.cols() || raw.rows() == 0)
        throw Error(Errc::NotSquare, "matrix is not square (" + std::to_string(raw.rows()) + "x" +
                                         std::to_string(raw.cols()) + ")");
    const int n = static_cast<int>(raw.rows());
    for (int i = 0; i < n; ++i)
        if (raw(i, i) != 2)
            throw Error(Errc::BadDiagonal,
                        "diagonal entry at " + pair_str(i + 1, i + 1) + " is " +
                            std::to_string(raw(i, i)) + ", expected 2",
                        {i + 1});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (raw(i, j) > 0)
                throw Error(Errc::PositiveOffDiagonal,
                            "positive off-diagonal entry at " + pair_str(i + 1, j + 1), {i + 1, j + 1});
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((raw(i, j) == 0) != (raw(j, i) == 0))
                throw Error(Errc::ZeroAsymmetry, "zero-asymmetry at " + pair_str(i + 1, j + 1),
                            {i + 1, j + 1});
    return CartanMatrix(raw);
}

CartanMatrix CartanMatrix::permuted(const std::vector<int>& perm) const {
    const int n = rank();
    IntMatrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(perm[i], perm[j]) = m_(i, j);
    return CartanMatrix(out);
}

IntMatrix matrix_from_rows(const std::vector<std::vector<Int>>& rows) {
    const auto n = rows.size();
    for (const auto& r : rows)
        if (r.size() != n)
            throw Error(Errc::NotSquare, "matrix is not square: " + std::to_string(n) + " rows, a row of length " +
                                             std::to_string(r.size()));
    IntMatrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    return m;
}

std::vector<std::vector<Int>> matrix_to_rows(const IntMatrix& m) {
    std::vector<std::vector<Int>> rows(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) rows[static_cast<std::size_t>(i)].push_back(m(i, j));
    return rows;
}

// ---------------------------------------------------------------------------
// Diagrams

DynkinDiagram::DynkinDiagram(int nodes, std::vector<DynkinEdge> edges) : n_(nodes) {
    if (nodes < 1) throw Error(Errc::InvalidDiagram, "diagram needs at least one node");
    for (auto& e : edges) {
        if (e.a > e.b) std::swap(e.a, e.b);
        if (e.a < 1 || e.b > nodes || e.a == e.b)
            throw Error(Errc::InvalidDiagram, "bad edge " + pair_str(e.a, e.b), {e.a, e.b});
        if (e.multiplicity < 1 || e.multiplicity > 3)
            throw Error(Errc::InvalidDiagram, "edge " + pair_str(e.a, e.b) + " has multiplicity " +
                                                  std::to_string(e.multiplicity), {e.a, e.b});
        if (e.multiplicity == 1 && e.head != 0)
            throw Error(Errc::InvalidDiagram, "simple edge " + pair_str(e.a, e.b) + " carries an arrow",
                        {e.a, e.b});
        if (e.multiplicity > 1 && e.head != e.a && e.head != e.b)
            throw Error(Errc::InvalidDiagram, "multiple edge " + pair_str(e.a, e.b) + " needs an arrow",
                        {e.a, e.b});
    }
    std::sort(edges.begin(), edges.end(),
              [](const DynkinEdge& x, const DynkinEdge& y) { return std::pair(x.a, x.b) < std::pair(y.a, y.b); });
    for (std::size_t k = 1; k < edges.size(); ++k)
        if (edges[k].a == edges[k - 1].a && edges[k].b == edges[k - 1].b)
            throw Error(Errc::InvalidDiagram, "duplicate edge " + pair_str(edges[k].a, edges[k].b));
    edges_ = std::move(edges);
}

const DynkinEdge* DynkinDiagram::edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    for (const auto& e : edges_)
        if (e.a == i && e.b == j) return &e;
    return nullptr;
}

NodeSet DynkinDiagram::neighbors(int i) const {
    NodeSet out;
    for (const auto& e : edges_) {
        if (e.a == i) out.push_back(e.b);
        if (e.b == i) out.push_back(e.a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

DynkinDiagram to_diagram(const CartanMatrix& m) {
    const int n = m.rank();
    std::vector<DynkinEdge> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const BigInt p = product(m.at(i, j), m.at(j, i));
            if (p == 0) continue;
            if (p >= 4)
                throw Error(Errc::MultiplicityOverflow,
                            "edge " + pair_str(i, j) + " has multiplicity " + p.get_str() + " (at most 3 drawable)",
                            {i, j});
            DynkinEdge e{i, j, static_cast<int>(p.get_si()), 0};
            if (m.at(i, j) > m.at(j, i)) e.head = i;
            if (m.at(j, i) > m.at(i, j)) e.head = j;
            edges.push_back(e);
        }
    return DynkinDiagram(n, std::move(edges));
}

CartanMatrix from_diagram(const DynkinDiagram& d) {
    IntMatrix m = IntMatrix::Zero(d.size(), d.size());
    m.diagonal().setConstant(2);
    for (const auto& e : d.edges()) {
        if (e.multiplicity == 1) {
            m(e.a - 1, e.b - 1) = -1;
            m(e.b - 1, e.a - 1) = -1;
        } else {
            const int tail = e.head == e.a ? e.b : e.a;
            m(e.head - 1, tail - 1) = -1;
            m(tail - 1, e.head - 1) = -e.multiplicity;
        }
    }
    return CartanMatrix::validate(m);
}

CartanMatrix principal_submatrix(const CartanMatrix& m, const NodeSet& nodes) {
    if (nodes.empty()) throw Error(Errc::EmptySubset, "empty node subset");
    NodeSet sorted = nodes;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v : sorted)
        if (v < 1 || v > m.rank())
            throw Error(Errc::IndexOutOfRange, "node " + std::to_string(v) + " out of range 1.." +
                                                   std::to_string(m.rank()), {v});
    const auto k = static_cast<Eigen::Index>(sorted.size());
    IntMatrix sub(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j)
            sub(i, j) = m.at(sorted[static_cast<std::size_t>(i)], sorted[static_cast<std::size_t>(j)]);
    return CartanMatrix::validate(sub);
}

namespace {

std::vector<NodeSet> components_by_adjacency(int n, const std::function<bool(int, int)>& adjacent) {
    std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
    std::vector<NodeSet> out;
    for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        NodeSet comp;
        std::queue<int> q;
        q.push(start);
        seen[static_cast<std::size_t>(start)] = true;
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            comp.push_back(v);
            for (int w = 1; w <= n; ++w)
                if (!seen[static_cast<std::size_t>(w)] && adjacent(v, w)) {
                    seen[static_cast<std::size_t>(w)] = true;
                    q.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

} // namespace

std::vector<NodeSet> connected_components(const DynkinDiagram& d) {
    return components_by_adjacency(d.size(), [&](int i, int j) { return d.edge(i, j) != nullptr; });
}

std::vector<NodeSet> connected_components(const CartanMatrix& m) {
    return components_by_adjacency(m.rank(), [&](int i, int j) { return i != j && m.at(i, j) != 0; });
}

CartanMatrix direct_sum(const std::vector<CartanMatrix>& blocks) {
    Eigen::Index n = 0;
    for (const auto& b : blocks) n += b.rank();
    IntMatrix m = IntMatrix::Zero(n, n);
    Eigen::Index off = 0;
    for (const auto& b : blocks) {
        m.block(off, off, b.rank(), b.rank()) = b.matrix();
        off += b.rank();
    }
    return CartanMatrix::validate(m);
}

std::string to_dot(const DynkinDiagram& d) {
    std::ostringstream os;
    os << "graph dynkin {\n";
    for (int i = 1; i <= d.size(); ++i) os << "  " << i << " [label=\"" << i << "\"];\n";
    for (const auto& e : d.edges()) {
        if (e.head == 0) {
            os << "  " << e.a << " -- " << e.b << ";\n";
            continue;
        }
        const int tail = e.head == e.a ? e.b : e.a;
        for (int k = 0; k < e.multiplicity; ++k)
            os << "  " << tail << " -- " << e.head << " [dir=forward, arrowhead=normal];\n";
    }
    os << "}\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Catalog

std::string CartanType::name() const {
    static constexpr char letters[] = "ABCDEFG";
    return std::string(1, letters[static_cast<int>(family)]) + std::to_string(rank);
}

bool is_legal(const CartanType& t) {
    switch (t.family) {
    case Family::A: return t.rank >= 1;
    case Family::B: return t.rank >= 2;
    case Family::C: return t.rank >= 3;
    case Family::D: return t.rank >= 4;
    case Family::E: return t.rank >= 6 && t.rank <= 8;
    case Family::F: return t.rank == 4;
    case Family::G: return t.rank == 2;
    }
    return false;
}

CartanType parse_cartan_type(std::string_view token) {
    if (token.size() < 2 || token[0] < 'A' || token[0] > 'G')
        throw Error(Errc::Parse, "bad diagram token '" + std::string(token) + "'");
    for (std::size_t k = 1; k < token.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(token[k])))
            throw Error(Errc::Parse, "bad diagram token '" + std::string(token) + "'");
    if (token.size() > 4) throw Error(Errc::IllegalType, "rank too large in '" + std::string(token) + "'");
    CartanType t{static_cast<Family>(token[0] - 'A'), std::stoi(std::string(token.substr(1)))};
    if (!is_legal(t)) throw Error(Errc::IllegalType, "illegal finite type '" + std::string(token) + "'");
    return t;
}

CartanMatrix catalog(Family family, int rank) {
    const CartanType t{family, rank};
    if (!is_legal(t)) throw Error(Errc::IllegalType, "illegal finite type " + t.name());

    const int n = rank;
    IntMatrix m = IntMatrix::Zero(n, n);
    m.diagonal().setConstant(2);
    auto link = [&](int i, int j, Int ij = -1, Int ji = -1) {
        m(i - 1, j - 1) = ij;
        m(j - 1, i - 1) = ji;
    };

    switch (family) {
    case Family::A:
        for (int i = 1; i < n; ++i) link(i, i + 1);
        break;
    case Family::B:
    case Family::C:
        for (int i = 1; i + 1 < n; ++i) link(i, i + 1);
        link(n - 1, n, -1, -2);
        if (family == Family::C) m.transposeInPlace();
        break;
    case Family::D:
        for (int i = 1; i + 1 < n; ++i) link(i, i + 1);
        link(n - 2, n);
        break;
    case Family::E:
        link(1, 3);
        link(2, 4);
        for (int i = 3; i < n; ++i) link(i, i + 1);
        break;
    case Family::F:
        link(1, 2);
        link(2, 3, -2, -1);
        link(3, 4);
        break;
    case Family::G:
        link(1, 2, -1, -3);
        break;
    }
    return CartanMatrix::validate(m);
}

std::vector<CartanType> catalog_types_of_rank(int rank) {
    std::vector<CartanType> out;
    for (int f = 0; f < 7; ++f) {
        CartanType t{static_cast<Family>(f), rank};
        if (is_legal(t)) out.push_back(t);
    }
    return out;
}

CartanMatrix parse_diagram_spec(std::string_view spec) {
    std::vector<CartanMatrix> blocks;
    std::size_t pos = 0;
    while (true) {
        const auto next = spec.find('x', pos);
        const auto token = spec.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
        blocks.push_back(catalog(parse_cartan_type(token)));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return direct_sum(blocks);
}

std::optional<std::vector<int>> find_isomorphism(const CartanMatrix& a, const CartanMatrix& b) {
    const int n = a.rank();
    if (b.rank() != n) return std::nullopt;

    // Cheap invariant: sorted rows of each matrix as multisets.
    auto signature = [n](const CartanMatrix& m) {
        std::vector<std::vector<Int>> rows;
        for (int i = 0; i < n; ++i) {
            std::vector<Int> r;
            for (int j = 0; j < n; ++j) r.push_back(m.matrix()(i, j));
            std::sort(r.begin(), r.end());
            rows.push_back(std::move(r));
        }
        std::sort(rows.begin(), rows.end());
        return rows;
    };
    if (signature(a) != signature(b)) return std::nullopt;

    std::vector<int> perm(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    const auto& ma = a.matrix();
    const auto& mb = b.matrix();

    std::function<bool(int)> extend = [&](int i) -> bool {
        if (i == n) return true;
        for (int c = 0; c < n; ++c) {
            if (used[static_cast<std::size_t>(c)]) continue;
            bool ok = true;
            for (int k = 0; k < i && ok; ++k) {
                const int pk = perm[static_cast<std::size_t>(k)];
                ok = ma(i, k) == mb(c, pk) && ma(k, i) == mb(pk, c);
            }
            if (!ok) continue;
            perm[static_cast<std::size_t>(i)] = c;
            used[static_cast<std::size_t>(c)] = true;
            if (extend(i + 1)) return true;
            used[static_cast<std::size_t>(c)] = false;
        }
        return false;
    };
    if (!extend(0)) return std::nullopt;
    return perm;
}

std::optional<CartanType> identify_finite(const CartanMatrix& connected) {
    for (const auto& t : catalog_types_of_rank(connected.rank()))
        if (find_isomorphism(connected, catalog(t))) return t;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Classification

const char* kind_name(Kind k) {
    switch (k) {
    case Kind::Finite: return "Finite";
    case Kind::Affine: return "Affine";
    case Kind::Indefinite: return "Indefinite";
    }
    return "?";
}

std::optional<RatVector> symmetrizer(const CartanMatrix& m) {
    const int n = m.rank();
    RatVector d = RatVector::Zero(n);
    for (const auto& comp : connected_components(m)) {
        std::queue<int> q;
        d(comp.front() - 1) = 1;
        q.push(comp.front());
        while (!q.empty()) {
            const int i = q.front();
            q.pop();
            for (int j : comp) {
                if (j == i || m.at(i, j) == 0 || d(j - 1) != 0) continue;
                // d_i m(i,j) = d_j m(j,i)
                d(j - 1) = d(i - 1) * Rational(m.at(i, j)) / Rational(m.at(j, i));
                q.push(j);
            }
        }
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (d(i - 1) * Rational(m.at(i, j)) != d(j - 1) * Rational(m.at(j, i))) return std::nullopt;
    return d;
}

bool has_positive_definite_symmetrization(const CartanMatrix& m) {
    const auto d = symmetrizer(m);
    if (!d) return false;
    const RatMatrix form = d->asDiagonal() * to_rational(m.matrix());
    return linalg::is_positive_definite(form);
}

ClassificationVerdict classify(const CartanMatrix& m) {
    ClassificationVerdict verdict;
    IntVector kernel = IntVector::Zero(m.rank());
    bool any_affine = false;
    bool any_indefinite = false;

    for (const auto& nodes : connected_components(m)) {
        const CartanMatrix sub = principal_submatrix(m, nodes);
        ComponentVerdict cv;
        cv.nodes = nodes;

        const bool definite = has_positive_definite_symmetrization(sub);
        const auto type = identify_finite(sub);
        if (definite != type.has_value())
            throw std::logic_error("finiteness checks disagree on component of rank " +
                                   std::to_string(sub.rank()));

        if (definite) {
            cv.kind = Kind::Finite;
            cv.type = type;
        } else {
            const RatMatrix basis = linalg::nullspace(to_rational(sub.matrix()));
            bool positive = basis.cols() == 1;
            IntVector v;
            if (positive) {
                v = linalg::primitive_integer_vector(basis.col(0));
                if (v(0) < 0) v = -v;
                positive = (v.array() > 0).all();
            }
            if (positive) {
                cv.kind = Kind::Affine;
                cv.kernel = v;
                for (std::size_t k = 0; k < nodes.size(); ++k)
                    kernel(nodes[k] - 1) = v(static_cast<Eigen::Index>(k));
                any_affine = true;
            } else {
                cv.kind = Kind::Indefinite;
                any_indefinite = true;
            }
        }
        verdict.components.push_back(std::move(cv));
    }

    if (any_indefinite) {
        verdict.kind = Kind::Indefinite;
    } else if (any_affine) {
        verdict.kind = Kind::Affine;
        verdict.affine_kernel = kernel;
    } else {
        verdict.kind = Kind::Finite;
    }
    return verdict;
}

} // namespace ftflag
