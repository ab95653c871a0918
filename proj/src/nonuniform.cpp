#include "mset/nonuniform.hpp"

#include <algorithm>
#include <map>

#include "mset/error.hpp"

namespace mset {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

} // namespace

FiniteScheme::FiniteScheme(std::vector<int> primes, long long budget) : primes_(std::move(primes)) {
    std::vector<int> sorted = primes_;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (!is_prime(sorted[i]))
            throw ConfigError("InvalidScheme", "prime list contains a non-prime");
        if (i > 0 && sorted[i] == sorted[i - 1])
            throw ConfigError("InvalidScheme", "prime list contains a repeat");
    }
    primes_ = sorted;
    double pairs = 1;
    for (int p : primes_) pairs *= double(p) * double(p);
    if (pairs > double(budget))
        throw BudgetError("BudgetExceeded", "prime set too large for exact orbit expansion");
}

long long FiniteScheme::group_order() const {
    long long n = 1;
    for (int p : primes_) n *= (long long)p * (p - 1);
    return n;
}

std::vector<FiniteScheme::Element> FiniteScheme::group_elements() const {
    std::vector<Element> out;
    Element cur;
    cur.b.assign(primes_.size(), 0);
    cur.a.assign(primes_.size(), 1);
    while (true) {
        out.push_back(cur);
        // odometer over (b_p, a_p) with a_p in 1..p-1
        size_t i = 0;
        for (; i < primes_.size(); ++i) {
            int p = primes_[i];
            if (++cur.b[i] < p) break;
            cur.b[i] = 0;
            if (++cur.a[i] < p) break;
            cur.a[i] = 1;
        }
        if (i == primes_.size()) break;
    }
    return out;
}

FiniteScheme::Pair FiniteScheme::act(const Element& g, const Pair& x) const {
    Pair y = x;
    for (size_t i = 0; i < primes_.size(); ++i) {
        int p = primes_[i];
        y.u[i] = (g.b[i] + g.a[i] * x.u[i]) % p;
        y.v[i] = ((g.b[i] + 1 - g.a[i] + p) % p + g.a[i] * x.v[i]) % p;
    }
    return y;
}

std::set<int> FiniteScheme::orbit_label(const Pair& x) const {
    std::set<int> label;
    for (size_t i = 0; i < primes_.size(); ++i) {
        int p = primes_[i];
        if ((x.v[i] - x.u[i] + p) % p == 1 % p) label.insert(p);
    }
    return label;
}

std::vector<FiniteScheme::Pair> FiniteScheme::all_pairs() const {
    std::vector<Pair> out;
    Pair cur;
    cur.u.assign(primes_.size(), 0);
    cur.v.assign(primes_.size(), 0);
    while (true) {
        out.push_back(cur);
        size_t i = 0;
        for (; i < primes_.size(); ++i) {
            int p = primes_[i];
            if (++cur.u[i] < p) break;
            cur.u[i] = 0;
            if (++cur.v[i] < p) break;
            cur.v[i] = 0;
        }
        if (i == primes_.size()) break;
    }
    return out;
}

std::vector<FiniteScheme::Orbit> FiniteScheme::orbit_classify() const {
    std::vector<Element> group = group_elements();
    std::vector<Pair> pairs = all_pairs();
    std::set<Pair> unvisited(pairs.begin(), pairs.end());
    std::map<std::set<int>, Orbit> orbits;

    while (!unvisited.empty()) {
        Pair rep = *unvisited.begin();
        std::set<int> label = orbit_label(rep);
        std::set<Pair> orbit;
        for (const Element& g : group) {
            Pair img = act(g, rep);
            // the label is invariant along the orbit: v_p - u_p maps to
            // a_p (v_p - u_p) + 1 - a_p, which fixes the value 1
            if (orbit_label(img) != label)
                throw ConfigError("InvalidScheme", "orbit left its predicted label set");
            orbit.insert(img);
        }
        for (const Pair& x : orbit) unvisited.erase(x);

        Orbit rec;
        rec.label = label;
        rec.size = (long long)orbit.size();
        rec.stabilizer = 1;
        for (int p : label) rec.stabilizer *= (p - 1);
        auto [it, fresh] = orbits.emplace(label, rec);
        if (!fresh)
            throw ConfigError("InvalidScheme", "two distinct orbits share a label set");

        // exactness: the orbit must be all of the predicted set
        long long predicted = 1;
        for (int p : primes_)
            predicted *= label.count(p) ? (long long)p : (long long)p * p - p;
        if (rec.size != predicted)
            throw ConfigError("InvalidScheme", "orbit size disagrees with the predicted set");
    }

    std::vector<Orbit> out;
    for (auto& [label, orbit] : orbits) out.push_back(orbit);
    std::sort(out.begin(), out.end(), [](const Orbit& x, const Orbit& y) {
        if (x.size != y.size) return x.size > y.size;
        return x.label < y.label;
    });
    return out;
}

long long FiniteScheme::stabilizer_order(const Pair& x) const {
    long long count = 0;
    for (const Element& g : group_elements())
        if (act(g, x) == x) ++count;
    return count;
}

Rational FiniteScheme::covolume_sum() const {
    // termwise over subsets
    size_t n = primes_.size();
    Rational sum(0);
    for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
        Rational term(1);
        for (size_t i = 0; i < n; ++i)
            if (mask & (size_t(1) << i)) term = term * Rational(1, primes_[i] - 1);
        sum = sum + term;
    }
    // product form
    Rational prod(1);
    for (int p : primes_) prod = prod * (Rational(1) + Rational(1, p - 1));
    if (sum != prod)
        throw ConfigError("InvalidScheme", "covolume sum and product form disagree");
    return sum;
}

long long FiniteScheme::noncocompact_witness() const {
    return 1LL << primes_.size();
}

} // namespace mset
