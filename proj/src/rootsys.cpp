#include "ftflag/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>

#include "ftflag/linalg.hpp"

namespace ftflag {

namespace {

std::vector<Int> key_of(const IntMatrix& m) { return {m.data(), m.data() + m.size()}; }
std::vector<Int> key_of(const RootVector& v) { return {v.data(), v.data() + v.size()}; }

bool is_positive(const RootVector& v) { return (v.array() >= 0).all() && (v.array() > 0).any(); }

bool root_order(const RootVector& a, const RootVector& b) {
    const Int ha = a.sum(), hb = b.sum();
    if (ha != hb) return ha < hb;
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

std::vector<RootVector> compute_positive_roots(const CartanMatrix& m) {
    const int n = m.rank();
    std::set<std::vector<Int>> seen;
    std::vector<RootVector> roots;
    std::deque<RootVector> frontier;
    for (int i = 0; i < n; ++i) {
        RootVector e = RootVector::Unit(n, i);
        seen.insert(key_of(e));
        roots.push_back(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        const RootVector x = frontier.front();
        frontier.pop_front();
        for (int i = 1; i <= n; ++i) {
            RootVector y = reflect(m, x, i);
            if (!is_positive(y)) continue;
            if (seen.insert(key_of(y)).second) {
                roots.push_back(y);
                frontier.push_back(std::move(y));
            }
        }
    }
    std::sort(roots.begin(), roots.end(), root_order);
    return roots;
}

struct RootCache {
    std::mutex mutex;
    std::map<std::vector<Int>, std::shared_ptr<const std::vector<RootVector>>> entries;
};

RootCache& root_cache() {
    static RootCache cache;
    return cache;
}

} // namespace

Int pairing(const CartanMatrix& m, const RootVector& x, int i) {
    return x.dot(m.matrix().col(i - 1));
}

RootVector reflect(const CartanMatrix& m, const RootVector& x, int i) {
    RootVector y = x;
    y(i - 1) -= pairing(m, x, i);
    return y;
}

WeightVector to_weight(const CartanMatrix& m, const RootVector& x) {
    return WeightVector{m.matrix().transpose() * x};
}

bool is_finite(const CartanMatrix& m) { return classify(m).kind == Kind::Finite; }

const std::vector<RootVector>& positive_roots(const CartanMatrix& m) {
    auto& cache = root_cache();
    const auto key = key_of(m.matrix());
    {
        std::lock_guard lock(cache.mutex);
        if (auto it = cache.entries.find(key); it != cache.entries.end()) return *it->second;
    }
    if (!is_finite(m)) throw Error(Errc::NotFinite, "matrix is not of finite type");
    auto roots = std::make_shared<const std::vector<RootVector>>(compute_positive_roots(m));
    std::lock_guard lock(cache.mutex);
    return *cache.entries.emplace(key, std::move(roots)).first->second;
}

Int height(const RootVector& r) {
    if ((r.array() < 0).any()) throw Error(Errc::NegativeRoot, "height is defined on positive roots");
    return r.sum();
}

NodeSet complement(const NodeSet& s, int n) {
    NodeSet out;
    for (int i = 1; i <= n; ++i)
        if (std::find(s.begin(), s.end(), i) == s.end()) out.push_back(i);
    return out;
}

std::vector<RootVector> phi_plus_sub(const CartanMatrix& m, const NodeSet& support) {
    const auto& all = positive_roots(m);
    const NodeSet outside = complement(support, m.rank());
    std::vector<RootVector> out;
    for (const auto& r : all) {
        bool inside = true;
        for (int i : outside) inside = inside && r(i - 1) == 0;
        if (inside) out.push_back(r);
    }
    return out;
}

bool is_admissible(const CartanMatrix& m, const std::vector<RootVector>& psi) {
    const auto& all = positive_roots(m);
    std::set<std::vector<Int>> roots, members;
    for (const auto& r : all) roots.insert(key_of(r));
    for (const auto& r : psi) {
        if (!roots.count(key_of(r))) throw Error(Errc::NotARoot, "element of psi is not a positive root");
        members.insert(key_of(r));
    }
    for (const auto& gamma : psi)
        for (const auto& a : all) {
            const RootVector b = gamma - a;
            if (!roots.count(key_of(b))) continue;
            if (!members.count(key_of(a)) || !members.count(key_of(b))) return false;
        }
    return true;
}

std::vector<FiltrationStep> build_filtration(const CartanMatrix& m) {
    const auto& roots = positive_roots(m);
    const int n = m.rank();
    std::map<std::vector<Int>, int> position; // 0-based
    for (std::size_t p = 0; p < roots.size(); ++p) position[key_of(roots[p])] = static_cast<int>(p);

    std::vector<FiltrationStep> steps;
    for (int k = 0; k < static_cast<int>(roots.size()); ++k) {
        if (height(roots[static_cast<std::size_t>(k)]) == 1) continue;
        bool found = false;
        for (int j = 0; j < k && !found; ++j)
            for (int l = 1; l <= n && !found; ++l) {
                const RootVector sum = roots[static_cast<std::size_t>(j)] + RootVector::Unit(n, l - 1);
                if (sum != roots[static_cast<std::size_t>(k)]) continue;
                // beta_j' + alpha_l must lie in V_k: a non-root or one of beta_1..beta_k.
                bool prefix_ok = true;
                for (int jp = 0; jp < j && prefix_ok; ++jp) {
                    const RootVector s = roots[static_cast<std::size_t>(jp)] + RootVector::Unit(n, l - 1);
                    auto it = position.find(key_of(s));
                    prefix_ok = it == position.end() || it->second <= k;
                }
                if (prefix_ok) {
                    steps.push_back({k + 1, j + 1, l});
                    found = true;
                }
            }
        if (!found)
            throw Error(Errc::NoStepFound, "no filtration step at position " + std::to_string(k + 1), {k + 1});
    }
    return steps;
}

IntVector sum_roots_coords(const std::vector<RootVector>& roots, int rank) {
    IntVector s = IntVector::Zero(rank);
    for (const auto& r : roots) s += r;
    return s;
}

RatVector anticanonical_coefficients(const CartanMatrix& m) {
    const int n = m.rank();
    const auto& roots = positive_roots(m);
    const RatVector rhs = RatVector::Constant(n, Rational(2));
    const auto v = linalg::solve<Rational>(to_rational(m.matrix()).transpose(), rhs);
    if (!v) throw Error(Errc::SingularSystem, "anticanonical system is singular");
    if (*v != to_rational(sum_roots_coords(roots, n)))
        throw std::logic_error("anticanonical solve disagrees with the positive-root sum");
    return *v;
}

std::map<int, Int> relative_canonical_coefficients(const CartanMatrix& m, const NodeSet& marked) {
    const NodeSet rest = complement(marked, m.rank());
    if (rest.empty()) throw Error(Errc::FullSubset, "marking covers every node");
    const IntVector s = sum_roots_coords(phi_plus_sub(m, rest), m.rank());
    std::map<int, Int> out;
    for (int i : rest) out[i] = s(i - 1);
    return out;
}

int flag_dimension(const CartanMatrix& m, const NodeSet& marked) {
    if (marked.empty()) throw Error(Errc::EmptyMarking, "flag dimension needs a nonempty marking");
    for (int i : marked)
        if (i < 1 || i > m.rank())
            throw Error(Errc::IndexOutOfRange, "node " + std::to_string(i) + " out of range", {i});
    const auto total = positive_roots(m).size();
    const auto fiber = phi_plus_sub(m, complement(marked, m.rank())).size();
    return static_cast<int>(total - fiber);
}

} // namespace ftflag
