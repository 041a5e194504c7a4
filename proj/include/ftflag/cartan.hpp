#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ftflag/error.hpp"
#include "ftflag/types.hpp"

namespace ftflag {

/// Generalized Cartan matrix: diagonal 2, non-positive off-diagonal, and
/// m(i,j) = 0 exactly when m(j,i) = 0. Immutable once validated.
///
/// `matrix()` is the 0-based Eigen view; `at(i, j)` takes 1-based node labels.
class CartanMatrix {
public:
    /// Throws Error{NotSquare, BadDiagonal, PositiveOffDiagonal, ZeroAsymmetry}.
    static CartanMatrix validate(const IntMatrix& raw);

    int rank() const { return static_cast<int>(m_.rows()); }
    const IntMatrix& matrix() const { return m_; }
    Int at(int i, int j) const { return m_(i - 1, j - 1); }

    CartanMatrix transpose() const { return CartanMatrix(m_.transpose()); }

    /// Simultaneous relabelling: result(perm[i], perm[j]) = this(i, j), 0-based perm.
    CartanMatrix permuted(const std::vector<int>& perm) const;

    bool operator==(const CartanMatrix& other) const { return m_ == other.m_; }

private:
    explicit CartanMatrix(IntMatrix m) : m_(std::move(m)) {}
    IntMatrix m_;
};

inline CartanMatrix validate_gcm(const IntMatrix& raw) { return CartanMatrix::validate(raw); }

/// Builds a matrix from nested rows; throws NotSquare on ragged or non-square input.
IntMatrix matrix_from_rows(const std::vector<std::vector<Int>>& rows);
std::vector<std::vector<Int>> matrix_to_rows(const IntMatrix& m);

// ---------------------------------------------------------------------------
// Dynkin diagrams

/// Edge {a,b} with a < b. `head` is the node the arrow points to, 0 for a simple edge.
struct DynkinEdge {
    int a = 0;
    int b = 0;
    int multiplicity = 1;
    int head = 0;

    bool operator==(const DynkinEdge&) const = default;
};

class DynkinDiagram {
public:
    /// Throws InvalidDiagram when an edge breaks the multiplicity/arrow rules.
    DynkinDiagram(int nodes, std::vector<DynkinEdge> edges);

    int size() const { return n_; }
    const std::vector<DynkinEdge>& edges() const { return edges_; }
    const DynkinEdge* edge(int i, int j) const;
    NodeSet neighbors(int i) const;

    bool operator==(const DynkinDiagram&) const = default;

private:
    int n_;
    std::vector<DynkinEdge> edges_;
};

/// Edge multiplicity m(i,j)·m(j,i); arrow points to i when m(i,j) > m(j,i).
/// Throws MultiplicityOverflow(i,j) when a product is 4 or more.
DynkinDiagram to_diagram(const CartanMatrix& m);
CartanMatrix from_diagram(const DynkinDiagram& d);

/// Rows and columns of `nodes` in ascending order. Throws EmptySubset, IndexOutOfRange.
CartanMatrix principal_submatrix(const CartanMatrix& m, const NodeSet& nodes);

/// Maximal connected node sets, each ascending, ordered by smallest element.
std::vector<NodeSet> connected_components(const DynkinDiagram& d);
std::vector<NodeSet> connected_components(const CartanMatrix& m);

/// Block-diagonal sum, in argument order.
CartanMatrix direct_sum(const std::vector<CartanMatrix>& blocks);

/// Graphviz rendering; multi-edges become parallel edges directed at the arrowhead.
std::string to_dot(const DynkinDiagram& d);

// ---------------------------------------------------------------------------
// Finite catalog

enum class Family { A, B, C, D, E, F, G };

struct CartanType {
    Family family = Family::A;
    int rank = 1;

    std::string name() const;
    bool operator==(const CartanType&) const = default;
};

bool is_legal(const CartanType& t);

/// "B4" -> {B, 4}. Throws Error{Parse} or Error{IllegalType}.
CartanType parse_cartan_type(std::string_view token);

/// Node numbering: A_n path 1..n; B_n double edge on {n-1,n} with
/// (n-1,n) = -1, (n,n-1) = -2; C_n the transpose of B_n; D_n forks at n-2;
/// E_n chain 1-3-4-5-..-n with 2 attached to 4; F_4 chain 1-2-3-4 with
/// (2,3) = -2, (3,2) = -1; G_2 = [[2,-1],[-3,2]].
CartanMatrix catalog(Family family, int rank);
inline CartanMatrix catalog(const CartanType& t) { return catalog(t.family, t.rank); }

/// Every legal catalog type of the given rank.
std::vector<CartanType> catalog_types_of_rank(int rank);

/// Diagram DSL: TYPE ("x" TYPE)*, e.g. "A2xA1". Throws Error{Parse, IllegalType}.
CartanMatrix parse_diagram_spec(std::string_view spec);

/// 0-based perm with b(perm[i], perm[j]) = a(i, j), if one exists.
std::optional<std::vector<int>> find_isomorphism(const CartanMatrix& a, const CartanMatrix& b);

/// Catalog type isomorphic to a connected matrix, if any.
std::optional<CartanType> identify_finite(const CartanMatrix& connected);

// ---------------------------------------------------------------------------
// Classification

enum class Kind { Finite, Affine, Indefinite };
const char* kind_name(Kind k);

/// Positive d with d_i m(i,j) = d_j m(j,i), normalised so the first entry of
/// each connected component is 1. nullopt when m is not symmetrizable.
std::optional<RatVector> symmetrizer(const CartanMatrix& m);

/// Positive definiteness of diag(d)·m by leading principal minors; false if
/// m is not symmetrizable.
bool has_positive_definite_symmetrization(const CartanMatrix& m);

struct ComponentVerdict {
    NodeSet nodes;
    Kind kind = Kind::Finite;
    std::optional<CartanType> type;  // set iff kind == Finite
    std::optional<IntVector> kernel; // set iff kind == Affine; coprime positive entries
};

struct ClassificationVerdict {
    Kind kind = Kind::Finite;
    std::vector<ComponentVerdict> components;
    /// Component kernels embedded in the full index range, zero elsewhere.
    std::optional<IntVector> affine_kernel;
};

/// Finite / affine / indefinite per connected component and overall.
/// Finiteness is decided twice (positive-definite symmetrization and catalog
/// isomorphism); disagreement throws std::logic_error.
ClassificationVerdict classify(const CartanMatrix& m);

} // namespace ftflag
