#pragma once

#include <set>
#include <vector>

#include "mset/rational.hpp"

namespace mset {

// Finite truncation of the compact-by-abelian example: a finite prime set
// S, V = direct sum of F_p, the acting group a direct sum of F_p x F_p^*
// pairs (b_p, a_p) with group law (b,a)(b',a') = (b + a b', a a'), acting
// on V + V through the twisted diagonal:
//   u_p -> b_p + a_p u_p,   v_p -> (b_p + 1 - a_p) + a_p v_p.
class FiniteScheme {
public:
    explicit FiniteScheme(std::vector<int> primes, long long budget = 10'000'000);

    const std::vector<int>& primes() const { return primes_; }
    long long group_order() const; // prod p (p - 1)

    // A pair (u, v) in V + V, stored as per-prime residues.
    struct Pair {
        std::vector<int> u, v;
        bool operator<(const Pair& o) const {
            if (u != o.u) return u < o.u;
            return v < o.v;
        }
        bool operator==(const Pair& o) const { return u == o.u && v == o.v; }
    };

    // Group element (b_p, a_p) per prime.
    struct Element {
        std::vector<int> b, a;
    };

    std::vector<Element> group_elements() const;
    Pair act(const Element& g, const Pair& x) const;

    // The subset of primes where v_p - u_p = 1; the predicted orbit label.
    std::set<int> orbit_label(const Pair& x) const;

    struct Orbit {
        std::set<int> label;       // I, as a set of primes
        long long size = 0;
        long long stabilizer = 0;  // prod over I of (p - 1)
    };

    // Expand every orbit of the twisted action on V + V and verify each
    // equals the predicted label set exactly; throws on any mismatch.
    std::vector<Orbit> orbit_classify() const;

    // Brute-force order of the stabilizer of a pair.
    long long stabilizer_order(const Pair& x) const;

    // Exact sum over subsets I of S of prod over I of 1/(p-1), computed
    // both termwise and in product form and compared exactly.
    Rational covolume_sum() const;

    // Orbit count 2^|S|, the finite-truncation shadow of the infinite
    // orbit family.
    long long noncocompact_witness() const;

    std::vector<Pair> all_pairs() const;

private:
    std::vector<int> primes_;
};

} // namespace mset
