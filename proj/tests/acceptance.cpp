// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
// Every criterion is exact; the only tolerances are the wall-clock budgets below.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "ftflag/coxeter.hpp"
#include "ftflag/flags.hpp"
#include "ftflag/ftverify.hpp"
#include "ftflag/picard2.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace ftflag;

namespace {

// Wall-clock budgets in seconds.
constexpr double kRank2Budget = 1.0;
constexpr double kDimensionBudget = 30.0;
constexpr double kBijectionBudget = 10.0;
constexpr double kAnticanonicalBudget = 5.0;
constexpr double kPicard2Budget = 1.0;
constexpr double kInductionBudget = 5.0;
constexpr double kAffineBudget = 5.0;
constexpr double kFlagDimensionBudget = 5.0;
constexpr double kFiltrationBudget = 5.0;

constexpr int kAffineSamples = 20;
constexpr unsigned kAffineSeed = 20240917;

struct DimensionCase {
    const char* spec;
    int expected;
};

// |Phi+| for the dimension, anticanonical and filtration criteria.
const std::vector<DimensionCase> kDimensionCases = {
    {"A1", 1}, {"A2", 3}, {"A3", 6},  {"A4", 10}, {"B2", 4}, {"B3", 9}, {"B4", 16},
    {"C3", 9}, {"C4", 16}, {"D4", 12}, {"G2", 6}, {"F4", 24},
};

/// Collects the first failure message; `ok()` is true while none occurred.
class Check {
public:
    void expect(bool cond, const std::string& what) {
        if (!cond && msg_.empty()) msg_ = what;
    }
    bool ok() const { return msg_.empty(); }
    const std::string& message() const { return msg_; }

private:
    std::string msg_;
};

std::string str(const IntVector& v) {
    std::ostringstream s;
    s << "(";
    for (Eigen::Index i = 0; i < v.size(); ++i) s << (i ? "," : "") << v(i);
    s << ")";
    return s.str();
}

std::string str(const RatVector& v) {
    std::ostringstream s;
    s << "(";
    for (Eigen::Index i = 0; i < v.size(); ++i) s << (i ? "," : "") << to_string(v(i));
    s << ")";
    return s.str();
}

// 1. Rank-2 sweep through ingest and classify.
void rank2_classification(Check& c) {
    std::set<std::vector<Int>> expected;
    for (const char* spec : {"A1xA1", "A2", "B2", "G2"}) {
        const CartanMatrix m = parse_diagram_spec(spec);
        expected.insert({m.at(1, 2), m.at(2, 1)});
        expected.insert({m.at(2, 1), m.at(1, 2)});
    }
    c.expect(expected.size() == 6, "expected list should hold 6 distinct matrices");

    std::set<std::vector<Int>> accepted;
    for (Int a = 0; a >= -3; --a)
        for (Int b = 0; b >= -3; --b) {
            IntMatrix raw(2, 2);
            raw << 2, a, b, 2;
            try {
                const CartanMatrix m = ingest({raw});
                if (classify(m).kind == Kind::Finite) accepted.insert({a, b});
            } catch (const Error&) {
            }
        }
    c.expect(accepted == expected, "valid-and-finite set differs from the four rank-2 types and transposes");
}

// 2. |Phi+| = longest 0-Hecke length = full flag dimension, plus a word-BFS oracle.
void dimension_agreement(Check& c) {
    for (const auto& [spec, expected] : kDimensionCases) {
        const CartanMatrix m = parse_diagram_spec(spec);
        const int roots = static_cast<int>(positive_roots(m).size());
        const WeylGroup w(m);
        const auto monoid = w.monoid_elements();
        int longest = 0;
        for (const auto& h : monoid) longest = std::max(longest, w.length(h));
        const int flag = flag_dimension(m, complement({}, m.rank()));
        int oracle_longest = 0;
        for (const auto& [k, l] : oracle::weyl_by_words(gen::to_mat(m.matrix())).min_length)
            oracle_longest = std::max(oracle_longest, l);
        std::ostringstream s;
        s << spec << ": roots " << roots << ", longest " << longest << ", flag " << flag << ", word-BFS "
          << oracle_longest << ", expected " << expected;
        c.expect(roots == expected && longest == expected && flag == expected && oracle_longest == expected, s.str());
        c.expect(w.longest_element().second == expected, std::string(spec) + ": longest_element disagrees");
    }
}

// 3. Reduced words of monoid elements equal those of their carriers; |W| = |W'|.
void reduced_word_bijection(Check& c) {
    const std::vector<std::pair<const char*, std::size_t>> cases = {
        {"A2", 6}, {"B2", 8}, {"G2", 12}, {"A3", 24}, {"B3", 48}};
    for (const auto& [spec, order] : cases) {
        const WeylGroup w(parse_diagram_spec(spec));
        const auto group = w.group_elements();
        const auto monoid = w.monoid_elements();
        c.expect(group.size() == order && monoid.size() == order,
                 std::string(spec) + ": |W| = " + std::to_string(group.size()) + ", |W'| = " +
                     std::to_string(monoid.size()) + ", expected " + std::to_string(order));

        const oracle::WeylTable t = oracle::weyl_by_words(gen::to_mat(w.cartan().matrix()));
        const oracle::WordSets words = oracle::brute_force_words(t, w.longest_element().second);
        for (const auto& h : monoid) {
            const auto key = oracle::key(gen::to_mat(h.carrier.action));
            const auto mine = w.reduced_words(h);
            c.expect(mine == words.group_reduced.at(key),
                     std::string(spec) + ": monoid reduced words differ from group reduced words");
            c.expect(mine == words.monoid_reduced.at(key),
                     std::string(spec) + ": monoid reduced words differ from brute force");
        }
    }
}

// 4. Linear solve v^T M = 2 equals the sum of the positive roots.
void anticanonical_cross_check(Check& c) {
    for (const auto& dc : kDimensionCases) {
        const CartanMatrix m = parse_diagram_spec(dc.spec);
        const RatVector solved = anticanonical_coefficients(m);
        const IntVector summed = sum_roots_coords(positive_roots(m), m.rank());
        c.expect(solved == to_rational(summed),
                 std::string(dc.spec) + ": solve " + str(solved) + " vs root sum " + str(summed));
    }
    const std::vector<std::pair<const char*, IntVector>> printed = {
        {"A2", (IntVector(2) << 2, 2).finished()},
        {"B2", (IntVector(2) << 4, 3).finished()},
        {"G2", (IntVector(2) << 10, 6).finished()},
    };
    for (const auto& [spec, v] : printed) {
        const RatVector got = anticanonical_coefficients(parse_diagram_spec(spec));
        c.expect(got == to_rational(v), std::string(spec) + ": got " + str(got) + ", expected " + str(v));
    }
}

// 5. Picard-number-two numeric core.
void picard2_core(Check& c) {
    using namespace picard2;
    for (int bound = 6; bound <= 200; ++bound)
        c.expect(admissible_degrees(bound) == std::set<int>{2, 3, 5},
                 "admissible degrees unstable at scan bound " + std::to_string(bound));

    c.expect(classify_rank2(0, 0).type == Rank2Type::A1xA1, "product 0 -> A1xA1");
    c.expect(classify_rank2(0, 4).type == Rank2Type::A1xA1, "product 0 (0,4) -> A1xA1");
    c.expect(classify_rank2(1, 1).type == Rank2Type::A2, "product 1 -> A2");
    c.expect(classify_rank2(1, 2).type == Rank2Type::B2, "product 2 -> B2");
    c.expect(classify_rank2(3, 1).type == Rank2Type::G2, "product 3 -> G2");
    c.expect(classify_rank2(2, 2).type == Rank2Type::Invalid, "product 4 -> Invalid");

    for (int m : {2, 3, 5})
        for (long nu = 1; nu <= 5; ++nu)
            for (long mu = 1; mu <= 5; ++mu) {
                const Rational d = discriminant_for(m, nu, mu);
                const ExactComplex z{Rational(nu) / mu, -d};
                c.expect(d < 0 && im_power_vanishes(z, m + 1),
                         "discriminant fails at m=" + std::to_string(m) + ", nu=" + std::to_string(nu) +
                             ", mu=" + std::to_string(mu));
            }
}

// 6. Induction sequences.
void induction_sequences(Check& c) {
    for (int n = 3; n <= 8; ++n) {
        const auto seq = induction_sequence(CartanType{Family::A, n});
        std::vector<InductionStep> closed;
        for (int k = 1; k <= n - 1; ++k) {
            NodeSet I;
            for (int x = 1; x <= k; ++x) I.push_back(x);
            I.push_back(n);
            closed.push_back({I, k});
        }
        c.expect(seq == closed, "A" + std::to_string(n) + ": sequence differs from I_k = {1..k, n}, i_k = k");
    }
    for (const char* spec : {"B3", "B4", "B5", "C3", "C4", "C5", "D4", "D5", "D6", "F4"}) {
        const CartanType t = parse_cartan_type(spec);
        try {
            const auto seq = induction_sequence(t);
            c.expect(seq.front().I == induction_start(t), std::string(spec) + ": wrong start set");
            const std::string why = check_induction_sequence(catalog(t), seq);
            c.expect(why.empty(), std::string(spec) + ": " + why);
            for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
                const OneStep s = onestep_extend(catalog(t), seq[k].I, seq[k].i);
                c.expect(s.valid(), std::string(spec) + ": step " + std::to_string(k + 1) + " fails a hypothesis");
            }
        } catch (const Error& e) {
            c.expect(false, std::string(spec) + ": " + e.what());
        }
    }
}

// 7. Affine witnesses on random affine matrices.
void affine_witnesses(Check& c) {
    std::mt19937 rng(kAffineSeed);
    int checked = 0;
    while (checked < kAffineSamples) {
        const oracle::Mat raw = gen::random_affine(rng);
        const CartanMatrix m = validate_gcm(gen::to_eigen(raw));
        if (classify(m).kind != Kind::Affine) {
            c.expect(false, "generator produced a non-affine matrix of rank " + std::to_string(raw.size()));
            continue;
        }
        const FTReport r = verdict(m);
        if (!r.affine_witness) {
            c.expect(false, "affine verdict without witness");
            ++checked;
            continue;
        }
        const IntVector& v = *r.affine_witness;
        std::vector<long> vv(v.data(), v.data() + v.size());
        bool positive = true;
        for (long x : vv) positive = positive && x > 0;
        c.expect(positive, "witness " + str(v) + " is not strictly positive");
        c.expect(oracle::gcd_all(vv) == 1, "witness " + str(v) + " is not primitive");
        c.expect(oracle::apply(raw, vv) == std::vector<long>(raw.size(), 0), "M v != 0 for witness " + str(v));
        ++checked;
    }
}

// 8. Flag dimension spot values.
void flag_dimension_values(Check& c) {
    for (int n = 2; n <= 8; ++n) {
        const CartanMatrix a = catalog(Family::A, n);
        const int ends = flag_dimension(a, {1, n});
        const int full = flag_dimension(a, complement({}, n));
        c.expect(ends == 2 * n - 1, "A" + std::to_string(n) + " {1,n}: " + std::to_string(ends));
        c.expect(full == n * (n + 1) / 2, "A" + std::to_string(n) + " full: " + std::to_string(full));
    }
}

// 9. Filtration by adding simple roots.
void filtration(Check& c) {
    for (const auto& dc : kDimensionCases) {
        const CartanMatrix m = parse_diagram_spec(dc.spec);
        try {
            const auto steps = build_filtration(m);
            const auto& roots = positive_roots(m);
            c.expect(steps.size() == roots.size() - static_cast<std::size_t>(m.rank()),
                     std::string(dc.spec) + ": wrong number of steps");
            for (const auto& s : steps) {
                RootVector sum = roots[static_cast<std::size_t>(s.j - 1)];
                sum(s.l - 1) += 1;
                c.expect(s.j < s.k && sum == roots[static_cast<std::size_t>(s.k - 1)],
                         std::string(dc.spec) + ": step at " + std::to_string(s.k) + " is not a witness");
            }
            for (std::size_t k = 1; k <= roots.size(); ++k)
                c.expect(is_admissible(m, std::vector<RootVector>(roots.begin(), roots.begin() + static_cast<long>(k))),
                         std::string(dc.spec) + ": prefix of length " + std::to_string(k) + " not admissible");
        } catch (const Error& e) {
            c.expect(false, std::string(dc.spec) + ": " + e.what());
        }
    }
}

struct Criterion {
    int id;
    const char* name;
    double budget;
    std::function<void(Check&)> body;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "rank-2 classification sweep", kRank2Budget, rank2_classification},
        {2, "three-way flag dimension agreement", kDimensionBudget, dimension_agreement},
        {3, "reduced-word bijection between W and W'", kBijectionBudget, reduced_word_bijection},
        {4, "anticanonical coefficients: solve vs root sum", kAnticanonicalBudget, anticanonical_cross_check},
        {5, "Picard-number-two numeric core", kPicard2Budget, picard2_core},
        {6, "induction sequences", kInductionBudget, induction_sequences},
        {7, "affine witnesses on random affine matrices", kAffineBudget, affine_witnesses},
        {8, "flag dimension spot values", kFlagDimensionBudget, flag_dimension_values},
        {9, "filtration by simple roots", kFiltrationBudget, filtration},
    };

    int failures = 0;
    for (const auto& cr : criteria) {
        Check c;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            cr.body(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("unexpected exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::ostringstream timing;
        timing.setf(std::ios::fixed);
        timing.precision(3);
        timing << secs << "s / " << cr.budget << "s";
        c.expect(secs < cr.budget, "over time budget");

        std::cout << (c.ok() ? "PASS" : "FAIL") << "  " << cr.id << "  " << cr.name << "  [" << timing.str() << "]";
        if (!c.ok()) std::cout << "  " << c.message();
        std::cout << "\n";
        if (!c.ok()) ++failures;
    }
    std::cout << (failures ? "FAILED " : "ALL PASSED ") << criteria.size() - static_cast<std::size_t>(failures)
              << "/" << criteria.size() << "\n";
    return failures ? 1 : 0;
}
