#pragma once

#include <optional>
#include <vector>

#include "ftflag/cartan.hpp"

namespace ftflag {

/// Candidate intersection numbers, entry (i,j) = -K_i . Gamma_j.
struct IntersectionData {
    IntMatrix matrix;
};

enum class Consistency { Consistent, ContradictsFiniteness };
const char* consistency_name(Consistency c);

/// Smallest connected principal configuration that is not of finite type.
struct Violation {
    NodeSet nodes;
    Kind kind = Kind::Affine;
};

struct FTReport {
    ClassificationVerdict verdict;
    std::optional<int> dimension_bound;        // iff Finite
    std::optional<IntVector> affine_witness;   // iff Affine
    std::vector<NodeSet> product_factors;
    Consistency consistency = Consistency::Consistent;
    std::optional<Violation> minimal_violation; // Indefinite only
};

/// Generalized Cartan matrix checks plus m(i,j)·m(j,i) in {1,2,3} for every
/// nonzero pair. Throws the validate_gcm errors and ProductOutOfRange(i,j).
CartanMatrix ingest(const IntersectionData& raw);

/// Finite: dimension bound |Phi+|. Affine: positive coprime kernel witness.
/// Indefinite: smallest non-finite connected subconfiguration.
FTReport verdict(const CartanMatrix& m);

struct ProductFactor {
    NodeSet nodes;
    CartanType type;
    int dimension = 0;
};

/// Connected components with their catalog types and flag dimensions. Throws NotFinite.
std::vector<ProductFactor> decompose_product(const CartanMatrix& m);

} // namespace ftflag
