#pragma once

#include <optional>
#include <set>
#include <string>

#include "ftflag/types.hpp"

namespace ftflag::picard2 {

// Numeric core of the Picard-number-two case. The model takes as input the
// relation K_j^2 = Delta_j H_j^2 modulo numerical equivalence (Chern-Wu); it
// is assumed here, not derived.

/// nu1 = K1.Gamma2, nu2 = K2.Gamma1, mu1 = H1.Gamma2, mu2 = H2.Gamma1, dim X = m + 1.
struct Rank2Data {
    long nu1 = 0;
    long nu2 = 0;
    long mu1 = 1;
    long mu2 = 1;
    long m = 2;
};

/// z = re + i·sqrt(im_sq).
struct ExactComplex {
    Rational re;
    Rational im_sq;
};

/// Change of basis (-K1, H1)^T = A (-K2, H2)^T.
mat_type<Rational, 2, 2> basechange_matrix(const Rank2Data& d);

/// Im(z^p) = b·Q(a, b²) with Q from the binomial expansion; returns Q(re, im_sq) == 0,
/// and true outright when im_sq == 0.
bool im_power_vanishes(const ExactComplex& z, int p);

/// The polynomial Q(a, s) above evaluated exactly.
Rational im_power_cofactor(const Rational& a, const Rational& s, int p);

/// Degrees m in [1, scan_bound] for which 4cos²(pi/(m+1)) is 1, 2 or 3.
std::set<int> admissible_degrees(int scan_bound = 50);

enum class Rank2Type { A1xA1, A2, B2, G2, Invalid };
const char* rank2_type_name(Rank2Type t);

struct Rank2Classification {
    Rank2Type type = Rank2Type::Invalid;
    std::string reason;  // empty unless Invalid
};

Rank2Classification classify_rank2(long nu1, long nu2);

/// (nu1 nu2 / 4)^(m-1) == (c / 4)^(m-1) with c = 4cos²(pi/(m+1)). Throws InadmissibleDegree.
bool verify_cos_identity(long m, const Rank2Data& d);

/// Delta = -(nu/mu)²·(4/c - 1), c = 4cos²(pi/(m+1)); the result is checked
/// against im_power_vanishes. Throws InadmissibleDegree, ZeroNu.
Rational discriminant_for(long m, long nu, long mu);

} // namespace ftflag::picard2
