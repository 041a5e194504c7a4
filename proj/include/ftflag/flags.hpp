#pragma once

#include <string>
#include <vector>

#include "ftflag/rootsys.hpp"

namespace ftflag {

/// Finite Cartan matrix with a nonempty set of marked nodes. `labels[k]` is
/// the node of the originating diagram that node k+1 came from.
struct MarkedDiagram {
    CartanMatrix matrix;
    NodeSet marked;
    std::vector<int> labels;

    /// Throws EmptyMarking, IndexOutOfRange.
    MarkedDiagram(CartanMatrix m, NodeSet marked);
    MarkedDiagram(CartanMatrix m, NodeSet marked, std::vector<int> labels);
};

/// Diagram on D \ I with marking J \ I, reindexed. I may be empty.
/// Throws NotNested (I not inside J), EmptyResidualMarking (J \ I empty).
MarkedDiagram fiber_diagram(const CartanMatrix& m, const NodeSet& J, const NodeSet& I);

/// {j != i : m(i,j) != 0}. Throws IndexOutOfRange.
NodeSet neighbors(const CartanMatrix& m, int i);

/// i is exposed short for I when the component of i in the diagram on
/// D \ (I \ {i}) has an arrow pointing towards i: its head is strictly closer
/// to i than its tail (for an edge at i, the head is i). Throws NodeNotMarked.
bool is_exposed_short(const CartanMatrix& m, const NodeSet& I, int i);

struct OneStep {
    NodeSet I_prime;
    NodeSet J_prime;
    bool exposed_short = false;
    bool grows_by_one = false;  // |I'| = |I| + 1
    bool large_enough = false;  // |I'| >= 3
    bool valid() const { return !exposed_short && grows_by_one && large_enough; }
};

/// J = I \ {i}, I' = I u N(i), J' = J u N(i), with the hypothesis checks. Throws NodeNotMarked.
OneStep onestep_extend(const CartanMatrix& m, const NodeSet& I, int i);

struct InductionStep {
    NodeSet I;
    int i = 0;
    bool operator==(const InductionStep&) const = default;
};

/// Starting set of the induction for a connected type:
/// A,B,C,D: {1,n}; E: {2,n}; F4: {1,2}; G2: {1,2}.
NodeSet induction_start(const CartanType& t);

/// (I_k, i_k), k = 1..r, with I_1 = induction_start(t), I_{k+1} = I_k u N(i_k)
/// = I_k u {i_{k+1}}, each extending step valid, I_r = D. Since N(i_k) adds
/// exactly one node, only i_1 is a free choice; candidates are tried in
/// ascending order. Throws NoValidSequence, IllegalType.
std::vector<InductionStep> induction_sequence(const CartanType& t);

/// Same search on an arbitrary connected finite matrix from a given start set.
std::vector<InductionStep> induction_sequence(const CartanMatrix& m, const NodeSet& start);

/// Checks the three conditions a sequence must satisfy; returns an empty
/// string when they hold, otherwise a description of the first failure.
std::string check_induction_sequence(const CartanMatrix& m, const std::vector<InductionStep>& seq);

/// Weight with coordinate 1 on the marked nodes and 0 elsewhere.
WeightVector minimal_ample_weight(const MarkedDiagram& md);

} // namespace ftflag
