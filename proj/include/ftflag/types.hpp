#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <gmpxx.h>

namespace Eigen {

// Exact rationals as an Eigen scalar. epsilon() is zero: comparisons are exact.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    typedef mpq_class Real;
    typedef mpq_class NonInteger;
    typedef mpq_class Nested;
    typedef mpq_class Literal;

    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }

    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100
    };
};

} // namespace Eigen

namespace ftflag {

template <class Scalar_, int Rows_ = Eigen::Dynamic, int Cols_ = Eigen::Dynamic>
using mat_type = Eigen::Matrix<Scalar_, Rows_, Cols_>;

template <class Scalar_, int Rows_ = Eigen::Dynamic>
using vec_type = Eigen::Matrix<Scalar_, Rows_, 1>;

using Int = std::int64_t;
using Rational = mpq_class;
using BigInt = mpz_class;

using IntMatrix = mat_type<Int>;
using IntVector = vec_type<Int>;
using RatMatrix = mat_type<Rational>;
using RatVector = vec_type<Rational>;

/// Sorted set of 1-based node labels. Nodes of a rank-n diagram are {1..n}.
using NodeSet = std::vector<int>;

/// Word in the simple reflections, letters are 1-based node labels.
using Word = std::vector<int>;

inline RatMatrix to_rational(const IntMatrix& m) { return m.cast<Rational>(); }
inline RatVector to_rational(const IntVector& v) { return v.cast<Rational>(); }

inline std::string to_string(const Rational& q) {
    mpq_class c = q;
    c.canonicalize();
    return c.get_str();
}

} // namespace ftflag
