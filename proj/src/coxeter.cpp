#include "ftflag/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

#include "ftflag/exact_trig.hpp"

namespace ftflag {

bool WeylElement::operator<(const WeylElement& o) const {
    return std::lexicographical_compare(action.data(), action.data() + action.size(), o.action.data(),
                                        o.action.data() + o.action.size());
}

std::map<std::pair<int, int>, int> coxeter_exponents(const CartanMatrix& m) {
    const DynkinDiagram d = to_diagram(m);
    std::map<std::pair<int, int>, int> out;
    for (int i = 1; i <= m.rank(); ++i)
        for (int j = i + 1; j <= m.rank(); ++j) {
            const auto* e = d.edge(i, j);
            const int edges = e ? e->multiplicity : 0;
            int a = 2;
            while (four_cos_sq_pi_over(a) != edges) ++a; // edges <= 3 so a <= 6
            out[{i, j}] = a;
        }
    return out;
}

Word alternating_word(int first, int second, int letters) {
    Word w;
    for (int k = 0; k < letters; ++k) w.push_back(k % 2 == 0 ? first : second);
    return w;
}

WeylGroup::WeylGroup(const CartanMatrix& m) : m_(m), roots_(positive_roots(m)) {
    const int n = m.rank();
    for (int i = 1; i <= n; ++i) {
        IntMatrix s = IntMatrix::Identity(n, n);
        // sigma_i(x)_i = x_i - sum_j x_j m(j, i)
        s.row(i - 1) -= m.matrix().col(i - 1).transpose();
        generators_.push_back(WeylElement{s});
    }
}

WeylElement WeylGroup::identity() const { return WeylElement{IntMatrix::Identity(rank(), rank())}; }

void WeylGroup::check_letter(int i) const {
    if (i < 1 || i > rank())
        throw Error(Errc::BadLetter, "letter " + std::to_string(i) + " out of range 1.." + std::to_string(rank()),
                    {i});
}

const WeylElement& WeylGroup::generator(int i) const {
    check_letter(i);
    return generators_[static_cast<std::size_t>(i - 1)];
}

WeylElement WeylGroup::element_of_word(const Word& w) const {
    IntMatrix x = IntMatrix::Identity(rank(), rank());
    for (int i : w) x = x * generator(i).action;
    return WeylElement{x};
}

int WeylGroup::length(const WeylElement& w) const {
    int count = 0;
    for (const auto& beta : roots_) {
        const IntVector image = w.action * beta;
        if ((image.array() < 0).any()) ++count;
    }
    return count;
}

bool WeylGroup::is_reduced(const Word& w) const {
    return length(element_of_word(w)) == static_cast<int>(w.size());
}

HeckeElement WeylGroup::demazure_step(const HeckeElement& x, int i) const {
    WeylElement y{x.carrier.action * generator(i).action};
    if (length(y) > length(x.carrier)) return HeckeElement{std::move(y)};
    return x;
}

HeckeElement WeylGroup::demazure_product(const Word& w) const {
    HeckeElement x{identity()};
    for (int i : w) x = demazure_step(x, i);
    return x;
}

std::vector<HeckeElement> WeylGroup::monoid_elements() const {
    std::set<HeckeElement> seen{HeckeElement{identity()}};
    std::vector<HeckeElement> order{HeckeElement{identity()}};
    std::deque<HeckeElement> frontier{HeckeElement{identity()}};
    while (!frontier.empty()) {
        const HeckeElement x = frontier.front();
        frontier.pop_front();
        for (int i = 1; i <= rank(); ++i) {
            HeckeElement y = demazure_step(x, i);
            if (seen.insert(y).second) {
                order.push_back(y);
                frontier.push_back(std::move(y));
            }
        }
    }
    return order;
}

std::vector<WeylElement> WeylGroup::group_elements() const {
    std::set<WeylElement> seen{identity()};
    std::vector<WeylElement> order{identity()};
    std::deque<WeylElement> frontier{identity()};
    while (!frontier.empty()) {
        const WeylElement x = frontier.front();
        frontier.pop_front();
        for (int i = 1; i <= rank(); ++i) {
            WeylElement y{x.action * generator(i).action};
            if (seen.insert(y).second) {
                order.push_back(y);
                frontier.push_back(std::move(y));
            }
        }
    }
    return order;
}

std::pair<HeckeElement, int> WeylGroup::longest_element() const {
    const auto elements = monoid_elements();
    int best = -1;
    std::vector<const HeckeElement*> argmax;
    for (const auto& h : elements) {
        const int l = length(h);
        if (l > best) {
            best = l;
            argmax.clear();
        }
        if (l == best) argmax.push_back(&h);
    }
    if (argmax.size() != 1) throw std::logic_error("longest monoid element is not unique");
    if (best != static_cast<int>(roots_.size()))
        throw std::logic_error("longest element length differs from the number of positive roots");
    return {*argmax.front(), best};
}

std::set<Word> WeylGroup::reduced_words(const HeckeElement& h, int max_rank) const {
    if (rank() > max_rank)
        throw Error(Errc::RankTooLarge, "reduced-word enumeration limited to rank " + std::to_string(max_rank));
    const int target = length(h);
    std::set<Word> out;
    Word word;

    // x is the prefix product, x_inv its inverse. A prefix can be extended to
    // a reduced word for h only if l(x^-1 h) = l(h) - l(x).
    std::function<void(const IntMatrix&, const IntMatrix&)> extend = [&](const IntMatrix& x,
                                                                         const IntMatrix& x_inv) {
        const int done = static_cast<int>(word.size());
        if (done == target) {
            if (x == h.carrier.action) out.insert(word);
            return;
        }
        for (int i = 1; i <= rank(); ++i) {
            const IntMatrix& s = generators_[static_cast<std::size_t>(i - 1)].action;
            const WeylElement y{x * s};
            if (length(y) != done + 1) continue;
            const IntMatrix y_inv = s * x_inv;
            if (length(WeylElement{y_inv * h.carrier.action}) != target - done - 1) continue;
            word.push_back(i);
            extend(y.action, y_inv);
            word.pop_back();
        }
    };
    extend(identity().action, identity().action);
    return out;
}

} // namespace ftflag
