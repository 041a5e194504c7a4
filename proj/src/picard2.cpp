#include "ftflag/picard2.hpp"

#include <stdexcept>

#include "ftflag/error.hpp"
#include "ftflag/exact_trig.hpp"

namespace ftflag::picard2 {

namespace {

Rational q(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational power(const Rational& x, long e) {
    Rational r = 1;
    for (long k = 0; k < e; ++k) r *= x;
    return r;
}

int cos_constant(long m) {
    const auto c = four_cos_sq_pi_over(static_cast<int>(m + 1));
    if (m < 1 || !c || *c < 1 || *c > 3)
        throw Error(Errc::InadmissibleDegree, "m = " + std::to_string(m) + " is not one of 2, 3, 5");
    return *c;
}

} // namespace

mat_type<Rational, 2, 2> basechange_matrix(const Rank2Data& d) {
    mat_type<Rational, 2, 2> a;
    a(0, 0) = q(-d.nu1, 2);
    a(0, 1) = q(4 - d.nu1 * d.nu2, 2 * d.mu2);
    a(1, 0) = q(d.mu1, 2);
    a(1, 1) = q(d.mu1 * d.nu2, 2 * d.mu2);
    return a;
}

Rational im_power_cofactor(const Rational& a, const Rational& s, int p) {
    // Im((a + ib)^p) = sum over odd k of C(p,k) a^(p-k) (ib)^k / i
    //               = b · sum over odd k of C(p,k) (-1)^((k-1)/2) a^(p-k) s^((k-1)/2)
    Rational total = 0;
    BigInt binom = 1; // C(p, k)
    for (int k = 0; k <= p; ++k) {
        if (k > 0) binom = binom * (p - k + 1) / k;
        if (k % 2 == 0) continue;
        const int half = (k - 1) / 2;
        Rational term = Rational(binom) * power(a, p - k) * power(s, half);
        total += half % 2 == 0 ? term : Rational(-term);
    }
    return total;
}

bool im_power_vanishes(const ExactComplex& z, int p) {
    if (z.im_sq == 0) return true;
    return im_power_cofactor(z.re, z.im_sq, p) == 0;
}

std::set<int> admissible_degrees(int scan_bound) {
    std::set<int> out;
    for (int m = 1; m <= scan_bound; ++m) {
        const auto c = four_cos_sq_pi_over(m + 1);
        if (c && *c >= 1 && *c <= 3) out.insert(m);
    }
    return out;
}

const char* rank2_type_name(Rank2Type t) {
    switch (t) {
    case Rank2Type::A1xA1: return "A1xA1";
    case Rank2Type::A2: return "A2";
    case Rank2Type::B2: return "B2";
    case Rank2Type::G2: return "G2";
    case Rank2Type::Invalid: return "Invalid";
    }
    return "?";
}

Rank2Classification classify_rank2(long nu1, long nu2) {
    if (nu1 < 0 || nu2 < 0) return {Rank2Type::Invalid, "nu must be nonnegative"};
    if (nu1 == 0 || nu2 == 0) return {Rank2Type::A1xA1, {}};
    const long product = nu1 * nu2;
    if (product > 3)
        return {Rank2Type::Invalid,
                "nu1*nu2 = " + std::to_string(product) + " is not 4cos^2(pi/(m+1)) for any admissible m"};
    if (nu1 != 1 && nu2 != 1) return {Rank2Type::Invalid, "neither nu equals 1"};
    static constexpr Rank2Type by_product[] = {Rank2Type::A1xA1, Rank2Type::A2, Rank2Type::B2, Rank2Type::G2};
    return {by_product[product], {}};
}

bool verify_cos_identity(long m, const Rank2Data& d) {
    const int c = cos_constant(m);
    const Rational lhs = power(q(d.nu1 * d.nu2, 4), m - 1);
    const Rational rhs = power(q(c, 4), m - 1);
    return lhs == rhs;
}

Rational discriminant_for(long m, long nu, long mu) {
    const int c = cos_constant(m);
    if (nu == 0) throw Error(Errc::ZeroNu, "nu = 0: the product case, no negative discriminant is forced");
    if (mu < 1) throw Error(Errc::Parse, "mu must be positive");
    const Rational a = q(nu, mu);
    const Rational delta = -(a * a * (q(4, c) - 1));
    if (!im_power_vanishes({a, -delta}, static_cast<int>(m + 1)))
        throw std::logic_error("discriminant does not make Im(z^(m+1)) vanish");
    return delta;
}

} // namespace ftflag::picard2
