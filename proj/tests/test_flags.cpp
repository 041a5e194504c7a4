#include <doctest.h>

#include <functional>
#include <random>

#include "ftflag/flags.hpp"
#include "generators.hpp"

using namespace ftflag;

namespace {

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return Errc::Parse;
}

NodeSet minus(const NodeSet& a, const NodeSet& b) {
    NodeSet out;
    for (int x : a)
        if (std::find(b.begin(), b.end(), x) == b.end()) out.push_back(x);
    return out;
}

NodeSet random_subset(int n, std::mt19937& rng) {
    NodeSet s;
    for (int i = 1; i <= n; ++i)
        if (rng() % 2) s.push_back(i);
    return s;
}

const CartanMatrix kB2 = catalog(Family::B, 2);

} // namespace

TEST_CASE("MarkedDiagram construction") {
    const MarkedDiagram md(catalog(Family::A, 3), {3, 1, 3});
    CHECK(md.marked == NodeSet{1, 3});
    CHECK(md.labels == std::vector<int>{1, 2, 3});
    CHECK(code_of([] { MarkedDiagram(catalog(Family::A, 3), {}); }) == Errc::EmptyMarking);
    CHECK(code_of([] { MarkedDiagram(catalog(Family::A, 3), {4}); }) == Errc::IndexOutOfRange);
}

TEST_CASE("fiber_diagram") {
    const CartanMatrix a3 = catalog(Family::A, 3);
    const MarkedDiagram f1 = fiber_diagram(a3, {1, 2, 3}, {1, 3});
    CHECK(f1.matrix == catalog(Family::A, 1));
    CHECK(f1.marked == NodeSet{1});
    CHECK(f1.labels == std::vector<int>{2});

    const MarkedDiagram f2 = fiber_diagram(a3, {1, 3}, {1});
    CHECK(f2.matrix == catalog(Family::A, 2));
    CHECK(f2.labels == std::vector<int>{2, 3});
    CHECK(f2.marked == NodeSet{2});  // node 3 of A3 is local node 2

    const MarkedDiagram f3 = fiber_diagram(a3, {1, 2, 3}, {});
    CHECK(f3.matrix == a3);
    CHECK(f3.marked == NodeSet{1, 2, 3});

    CHECK(code_of([&] { fiber_diagram(a3, {1}, {2}); }) == Errc::NotNested);
    CHECK(code_of([&] { fiber_diagram(a3, {1, 2}, {1, 2}); }) == Errc::EmptyResidualMarking);
}

TEST_CASE("fiber_diagram composes") {
    // Fibering J -> I1 and then the fiber over I2 \ I1 equals fibering J -> I2 directly.
    std::mt19937 rng(13);
    for (const char* spec : {"A5", "B4", "D5", "E6", "F4"}) {
        const CartanMatrix m = parse_diagram_spec(spec);
        const int n = m.rank();
        for (int trial = 0; trial < 30; ++trial) {
            const NodeSet J = random_subset(n, rng);
            NodeSet I2, I1;
            for (int x : J)
                if (rng() % 3) I2.push_back(x);
            for (int x : I2)
                if (rng() % 2) I1.push_back(x);
            if (minus(J, I2).empty()) continue;
            CAPTURE(spec);
            const MarkedDiagram direct = fiber_diagram(m, J, I2);
            const MarkedDiagram first = fiber_diagram(m, J, I1);
            // Nodes of I2 \ I1 in the local numbering of `first`.
            NodeSet local;
            for (std::size_t k = 0; k < first.labels.size(); ++k)
                if (std::find(I2.begin(), I2.end(), first.labels[k]) != I2.end()) local.push_back(static_cast<int>(k) + 1);
            const MarkedDiagram second = fiber_diagram(first.matrix, first.marked, local);
            CHECK(second.matrix == direct.matrix);
            CHECK(second.marked == direct.marked);
            std::vector<int> carried;
            for (int l : second.labels) carried.push_back(first.labels[static_cast<std::size_t>(l - 1)]);
            CHECK(carried == direct.labels);
        }
    }
}

TEST_CASE("neighbors") {
    const CartanMatrix a4 = catalog(Family::A, 4);
    CHECK(neighbors(a4, 2) == NodeSet{1, 3});
    CHECK(neighbors(a4, 1) == NodeSet{2});
    CHECK(neighbors(parse_diagram_spec("A1xA1"), 1).empty());
    CHECK(code_of([&] { neighbors(a4, 5); }) == Errc::IndexOutOfRange);
}

TEST_CASE("is_exposed_short") {
    CHECK(is_exposed_short(kB2, {1}, 1));
    CHECK_FALSE(is_exposed_short(kB2, {2}, 2));
    CHECK(code_of([] { is_exposed_short(kB2, {2}, 1); }) == Errc::NodeNotMarked);

    // The arrow of B3 points at node 2 (entry (2,3) = -1 > (3,2) = -2). Node 1 sees
    // it through node 2 when 2 is unmarked, but not when 2 separates them.
    const CartanMatrix b3 = catalog(Family::B, 3);
    CHECK(is_exposed_short(b3, {1}, 1));
    CHECK_FALSE(is_exposed_short(b3, {1, 2}, 1));
    CHECK_FALSE(is_exposed_short(b3, {3}, 3));
}

TEST_CASE("simply-laced diagrams have no exposed short nodes") {
    for (int n = 1; n <= 6; ++n)
        for (const CartanType& t : catalog_types_of_rank(n)) {
            const char f = t.name()[0];
            if (f != 'A' && f != 'D' && f != 'E') continue;
            const CartanMatrix m = catalog(t);
            for (unsigned mask = 1; mask < (1u << n); ++mask) {
                NodeSet I;
                for (int i = 0; i < n; ++i)
                    if (mask & (1u << i)) I.push_back(i + 1);
                for (int i : I) CHECK_FALSE(is_exposed_short(m, I, i));
            }
        }
}

TEST_CASE("onestep_extend") {
    const CartanMatrix a4 = catalog(Family::A, 4);
    const OneStep ok = onestep_extend(a4, {1, 4}, 1);
    CHECK(ok.I_prime == NodeSet{1, 2, 4});
    CHECK(ok.J_prime == NodeSet{2, 4});
    CHECK(ok.valid());

    const OneStep grows_two = onestep_extend(a4, {2}, 2);
    CHECK(grows_two.I_prime == NodeSet{1, 2, 3});
    CHECK_FALSE(grows_two.grows_by_one);
    CHECK_FALSE(grows_two.valid());

    const OneStep small = onestep_extend(kB2, {1, 2}, 1);
    CHECK(small.I_prime == NodeSet{1, 2});
    CHECK_FALSE(small.grows_by_one);
    CHECK_FALSE(small.large_enough);
    CHECK_FALSE(small.valid());

    CHECK(code_of([&] { onestep_extend(a4, {1}, 2); }) == Errc::NodeNotMarked);
}

TEST_CASE("induction_sequence for A_n follows the closed form") {
    using S = std::vector<InductionStep>;
    CHECK(induction_sequence(CartanType{Family::A, 4}) == S{{{1, 4}, 1}, {{1, 2, 4}, 2}, {{1, 2, 3, 4}, 3}});
    CHECK(induction_sequence(CartanType{Family::A, 3}) == S{{{1, 3}, 1}, {{1, 2, 3}, 2}});
    for (int n = 3; n <= 8; ++n) {
        const auto seq = induction_sequence(CartanType{Family::A, n});
        REQUIRE(seq.size() == static_cast<std::size_t>(n - 1));
        for (int k = 1; k <= n - 1; ++k) {
            NodeSet I;
            for (int x = 1; x <= k; ++x) I.push_back(x);
            if (k < n) I.push_back(n);
            I.erase(std::unique(I.begin(), I.end()), I.end());
            CHECK(seq[static_cast<std::size_t>(k - 1)].I == I);
            CHECK(seq[static_cast<std::size_t>(k - 1)].i == k);
        }
    }
}

TEST_CASE("induction sequences are valid for B, C, D, E and F") {
    for (const char* spec : {"B3", "B4", "B5", "C3", "C4", "C5", "D4", "D5", "D6", "E6", "E7", "E8", "F4"}) {
        CAPTURE(spec);
        const CartanType t = parse_cartan_type(spec);
        const auto seq = induction_sequence(t);
        REQUIRE_FALSE(seq.empty());
        CHECK(seq.front().I == induction_start(t));
        CHECK(check_induction_sequence(catalog(t), seq).empty());
        CHECK(seq.back().I == complement({}, t.rank));
    }
}

TEST_CASE("the opposite F4 orientation admits no sequence from {1,2}") {
    // Node 2 becomes exposed short once the double-edge arrow points back at it.
    const CartanMatrix flipped = validate_gcm(
        matrix_from_rows({{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}}));
    CHECK(code_of([&] { induction_sequence(flipped, {1, 2}); }) == Errc::NoValidSequence);
}

TEST_CASE("check_induction_sequence rejects broken sequences") {
    const CartanMatrix a4 = catalog(Family::A, 4);
    CHECK_FALSE(check_induction_sequence(a4, {{{1, 4}, 1}, {{1, 2, 4}, 2}}).empty());
    CHECK_FALSE(check_induction_sequence(a4, {{{1, 4}, 1}, {{1, 2, 4}, 4}, {{1, 2, 3, 4}, 3}}).empty());
    CHECK_FALSE(check_induction_sequence(a4, {{{2}, 2}, {{1, 2, 3}, 1}, {{1, 2, 3, 4}, 3}}).empty());
}

TEST_CASE("induction_start table") {
    CHECK(induction_start(CartanType{Family::A, 5}) == NodeSet{1, 5});
    CHECK(induction_start(CartanType{Family::E, 7}) == NodeSet{2, 7});
    CHECK(induction_start(CartanType{Family::F, 4}) == NodeSet{1, 2});
    CHECK(induction_start(CartanType{Family::G, 2}) == NodeSet{1, 2});
}

TEST_CASE("minimal_ample_weight") {
    CHECK(minimal_ample_weight(MarkedDiagram(catalog(Family::A, 3), {1, 3})).coords ==
          (IntVector(3) << 1, 0, 1).finished());
    CHECK(minimal_ample_weight(MarkedDiagram(catalog(Family::A, 2), {1, 2})).coords ==
          (IntVector(2) << 1, 1).finished());
    CHECK(minimal_ample_weight(MarkedDiagram(catalog(Family::A, 4), {2})).coords ==
          (IntVector(4) << 0, 1, 0, 0).finished());
}
