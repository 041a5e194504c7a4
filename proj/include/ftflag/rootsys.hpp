#pragma once

#include <map>
#include <vector>

#include "ftflag/cartan.hpp"

namespace ftflag {

/// Root in simple-root coordinates. Positive roots have all coordinates >= 0.
using RootVector = IntVector;

/// Weight in the fundamental-weight basis: coords(i) = <weight, alpha_i>.
struct WeightVector {
    IntVector coords;
    bool operator==(const WeightVector& o) const { return coords == o.coords; }
};

/// beta_k = beta_j + alpha_l, with k and j 1-based positions in positive_roots().
struct FiltrationStep {
    int k = 0;
    int j = 0;
    int l = 0;
    bool operator==(const FiltrationStep&) const = default;
};

/// <x, alpha_i> = sum_j x_j m(j, i); i is 1-based.
Int pairing(const CartanMatrix& m, const RootVector& x, int i);

/// sigma_i(x) = x - <x, alpha_i> alpha_i.
RootVector reflect(const CartanMatrix& m, const RootVector& x, int i);

WeightVector to_weight(const CartanMatrix& m, const RootVector& x);

bool is_finite(const CartanMatrix& m);

/// Positive roots by closure of the simple roots under simple reflections,
/// sorted by height, then lexicographically ascending. Throws NotFinite.
/// Results are memoized per matrix.
const std::vector<RootVector>& positive_roots(const CartanMatrix& m);

/// Sum of coordinates. Throws NegativeRoot unless all coordinates are >= 0.
Int height(const RootVector& r);

/// Positive roots supported on `support` (coordinates zero elsewhere), in positive_roots() order.
std::vector<RootVector> phi_plus_sub(const CartanMatrix& m, const NodeSet& support);

/// Closed under summands: gamma = a + b in psi with a, b positive forces a, b in psi.
/// Throws NotARoot for an element of psi outside Phi+.
bool is_admissible(const CartanMatrix& m, const std::vector<RootVector>& psi);

/// One step per non-simple position, smallest j first, then smallest l.
/// Throws NoStepFound(k) if a position has no witness.
std::vector<FiltrationStep> build_filtration(const CartanMatrix& m);

/// Componentwise sum; `rank` fixes the length for an empty list.
IntVector sum_roots_coords(const std::vector<RootVector>& roots, int rank);

/// v with v^T m = 2·1^T, checked against the sum of the positive roots.
RatVector anticanonical_coefficients(const CartanMatrix& m);

/// Coefficients m_i (i outside `marked`) of the relative anticanonical class,
/// read off the sum of the positive roots supported away from `marked`.
/// Throws FullSubset when marked = D.
std::map<int, Int> relative_canonical_coefficients(const CartanMatrix& m, const NodeSet& marked);

/// |Phi+| - |Phi+ supported on D \ marked|. Throws EmptyMarking.
int flag_dimension(const CartanMatrix& m, const NodeSet& marked);

/// {1..n} \ s
NodeSet complement(const NodeSet& s, int n);

} // namespace ftflag
