#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "ftflag/rootsys.hpp"

namespace ftflag {

/// Weyl group element as its action on simple-root coordinates: column i is
/// the image of alpha_i.
struct WeylElement {
    IntMatrix action;

    bool operator==(const WeylElement& o) const { return action == o.action; }
    bool operator<(const WeylElement& o) const;
};

/// Element of the 0-Hecke (Coxeter) monoid, realized on the underlying set of W.
struct HeckeElement {
    WeylElement carrier;

    bool operator==(const HeckeElement& o) const { return carrier == o.carrier; }
    bool operator<(const HeckeElement& o) const { return carrier < o.carrier; }
};

/// Braid exponents a_ij with 4cos²(pi/a_ij) = edge multiplicity, keyed by
/// (i, j) with i < j. Throws MultiplicityOverflow.
std::map<std::pair<int, int>, int> coxeter_exponents(const CartanMatrix& m);

/// r_k(i,j) = ijij... and l_k(i,j) = jiji..., k letters each.
Word alternating_word(int first, int second, int letters);

/// Weyl group and 0-Hecke monoid of a finite Cartan matrix.
class WeylGroup {
public:
    /// Throws NotFinite.
    explicit WeylGroup(const CartanMatrix& m);

    const CartanMatrix& cartan() const { return m_; }
    int rank() const { return m_.rank(); }
    const std::vector<RootVector>& roots() const { return roots_; }

    WeylElement identity() const;
    /// sigma_i; throws BadLetter.
    const WeylElement& generator(int i) const;

    /// s_{w1} s_{w2} ... s_{wk}. Throws BadLetter.
    WeylElement element_of_word(const Word& w) const;

    /// Number of positive roots sent to negative roots.
    int length(const WeylElement& w) const;
    int length(const HeckeElement& h) const { return length(h.carrier); }

    bool is_reduced(const Word& w) const;

    /// x * s_i if that is longer than x, else x.
    HeckeElement demazure_step(const HeckeElement& x, int i) const;
    /// Left-to-right fold of demazure_step from the identity. Throws BadLetter.
    HeckeElement demazure_product(const Word& w) const;

    /// Breadth-first closure of the identity under right Demazure multiplication.
    std::vector<HeckeElement> monoid_elements() const;
    /// Breadth-first closure of the identity under right multiplication by generators.
    std::vector<WeylElement> group_elements() const;

    /// Unique longest monoid element and its length; the length is checked against |Phi+|.
    std::pair<HeckeElement, int> longest_element() const;

    /// Words of length l(h) whose Demazure product is h. Throws RankTooLarge
    /// when rank() exceeds max_rank.
    std::set<Word> reduced_words(const HeckeElement& h, int max_rank = 4) const;

    /// Length of the Demazure product.
    int chain_dimension(const Word& w) const { return length(demazure_product(w)); }
    bool chain_equal(const Word& a, const Word& b) const {
        return demazure_product(a) == demazure_product(b);
    }

private:
    void check_letter(int i) const;

    CartanMatrix m_;
    std::vector<RootVector> roots_;
    std::vector<WeylElement> generators_;
};

} // namespace ftflag
