/**
 * Exact root system data for the simple Lie types: Cartan matrix, symmetrizer,
 * positive roots, Cartan pairings and simple reflections.
 *
 * Roots are stored as integer coordinate vectors in the simple-root basis; no
 * Euclidean coordinates appear anywhere. The Cartan matrix convention is
 * C[i][j] = 2<a_i, a_j>/<a_i, a_i>, so that the simple reflection acts by
 * r_i(b) = b - (sum_j m_j C[i][j]) a_i for b = sum_j m_j a_j.
 */
#ifndef KCELL_ROOT_SYSTEM_HPP
#define KCELL_ROOT_SYSTEM_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "errors.hpp"
#include "lie_type.hpp"

namespace kcell {

/** Coordinates of a root (or any weight-lattice vector) in the simple-root basis. */
using Root = std::vector<int>;

namespace detail {

inline std::vector<std::vector<int>> cartan_matrix(LieType t) {
    const int n = t.rank;
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        c[i][i] = 2;
    auto bond = [&](int i, int j, int cij, int cji) {
        c[i][j] = cij;
        c[j][i] = cji;
    };
    auto chain = [&](int from, int to) {
        for (int i = from; i < to; ++i)
            bond(i, i + 1, -1, -1);
    };
    switch (t.family) {
        case Family::A:
            chain(0, n - 1);
            break;
        case Family::B:
            // Last simple root short.
            chain(0, n - 2);
            bond(n - 2, n - 1, -1, -2);
            break;
        case Family::C:
            // Last simple root long.
            chain(0, n - 2);
            bond(n - 2, n - 1, -2, -1);
            break;
        case Family::D:
            chain(0, n - 3);
            bond(n - 3, n - 2, -1, -1);
            bond(n - 3, n - 1, -1, -1);
            break;
        case Family::E:
            // Chain 1-3-4-...-n with node 2 attached to node 4 (Bourbaki numbering).
            bond(0, 2, -1, -1);
            bond(1, 3, -1, -1);
            chain(2, n - 1);
            break;
        case Family::F:
            // Roots 1,2 long, 3,4 short.
            bond(0, 1, -1, -1);
            bond(1, 2, -1, -2);
            bond(2, 3, -1, -1);
            break;
        case Family::G:
            // First simple root short.
            bond(0, 1, -3, -1);
            break;
    }
    return c;
}

/** Minimal positive integers d with d_i C[i][j] = d_j C[j][i]. */
inline std::vector<int> symmetrizer_from_cartan(const std::vector<std::vector<int>>& c) {
    const int n = static_cast<int>(c.size());
    std::vector<long long> d(n, 0);
    d[0] = 1;
    // The Dynkin diagrams handled here are connected, so one sweep per edge suffices.
    bool progress = true;
    while (progress) {
        progress = false;
        for (int i = 0; i < n; ++i) {
            if (d[i] == 0)
                continue;
            for (int j = 0; j < n; ++j) {
                if (i == j || c[i][j] == 0 || d[j] != 0)
                    continue;
                // d_j = d_i * c_ij / c_ji; both off-diagonal entries are negative.
                long long p = d[i] * c[i][j];
                long long q = c[j][i];
                if (p % q != 0) {
                    const long long scale = std::abs(q);
                    for (auto& v : d)
                        v *= scale;
                    p = d[i] * c[i][j];
                }
                d[j] = p / q;
                progress = true;
            }
        }
    }
    long long g = 0;
    for (auto v : d)
        g = std::gcd(g, v);
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i)
        out[i] = static_cast<int>(d[i] / g);
    return out;
}

/** Graded-lex comparison: lower height first, then larger leading coordinates first. */
inline bool graded_lex_less(const Root& a, const Root& b) {
    const int ha = std::accumulate(a.begin(), a.end(), 0);
    const int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb)
        return ha < hb;
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j] != b[j])
            return a[j] > b[j];
    return false;
}

} // namespace detail

/**
 * The root system of a given Lie type. Immutable after construction; all
 * operations on it are pure, so instances can be shared across threads.
 */
struct RootSystem {
    LieType lie_type;
    std::vector<std::vector<int>> cartan;
    std::vector<int> symmetrizer;
    std::vector<Root> positive_roots;

    int rank() const { return lie_type.rank; }

    Root simple_root(int i) const {
        Root a(rank(), 0);
        a[i] = 1;
        return a;
    }

    bool is_positive_root(const Root& b) const { return positive_index_.count(b) > 0; }

    bool is_root(const Root& b) const {
        if (is_positive_root(b))
            return true;
        Root neg(b);
        for (auto& v : neg)
            v = -v;
        return is_positive_root(neg);
    }

    /** Index of a positive root in the graded-lex ordering; -1 if absent. */
    int positive_root_index(const Root& b) const {
        auto it = positive_index_.find(b);
        return it == positive_index_.end() ? -1 : it->second;
    }

    std::map<Root, int> positive_index_;
};

/** 2<a_i, b>/<a_i, a_i>, an integer for every integer vector b. */
inline int cartan_pairing(const RootSystem& rs, int i, const Root& b) {
    int s = 0;
    for (int j = 0; j < rs.rank(); ++j)
        s += b[j] * rs.cartan[i][j];
    return s;
}

/** Simple reflection r_i applied to an integer vector. */
inline Root reflect(const RootSystem& rs, int i, const Root& b) {
    Root out(b);
    out[i] -= cartan_pairing(rs, i, b);
    return out;
}

/**
 * Build the root system of the given type: positive roots are generated by
 * closing the simple roots under simple reflections, then ordered graded-lex.
 * Throws InvalidArgument on an invalid (family, rank) combination.
 */
inline RootSystem build_root_system(LieType t) {
    if (!is_valid(t))
        throw InvalidArgument("invalid Lie type " + to_string(t));
    RootSystem rs;
    rs.lie_type = t;
    rs.cartan = detail::cartan_matrix(t);
    rs.symmetrizer = detail::symmetrizer_from_cartan(rs.cartan);

    std::vector<Root> positives;
    std::map<Root, bool> seen;
    for (int i = 0; i < t.rank; ++i) {
        positives.push_back(rs.simple_root(i));
        seen[positives.back()] = true;
    }
    for (std::size_t head = 0; head < positives.size(); ++head) {
        const Root b = positives[head];
        for (int i = 0; i < t.rank; ++i) {
            Root g = reflect(rs, i, b);
            const bool positive = std::all_of(g.begin(), g.end(), [](int v) { return v >= 0; });
            if (!positive || seen.count(g))
                continue;
            seen[g] = true;
            positives.push_back(std::move(g));
        }
    }
    std::sort(positives.begin(), positives.end(), detail::graded_lex_less);
    rs.positive_roots = std::move(positives);
    for (std::size_t k = 0; k < rs.positive_roots.size(); ++k)
        rs.positive_index_[rs.positive_roots[k]] = static_cast<int>(k);
    return rs;
}

} // namespace kcell

#endif // KCELL_ROOT_SYSTEM_HPP
