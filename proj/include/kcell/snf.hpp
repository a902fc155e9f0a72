/**
 * Exact Smith normal form over the integers, ranks over Z and Z/2, and the
 * homology groups of a validated cell complex.
 */
#ifndef KCELL_SNF_HPP
#define KCELL_SNF_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "chain.hpp"
#include "int_matrix.hpp"

namespace kcell {

namespace detail {

inline Integer int_abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

} // namespace detail

struct SmithResult {
    std::vector<Integer> invariant_factors;  // positive, each dividing the next
    int rank = 0;
};

/**
 * Smith normal form by unimodular row and column operations. Pivots pick the
 * nonzero entry of least absolute value to limit coefficient growth; entries
 * are arbitrary-precision throughout. The invariant factors satisfy
 * d_1 | d_2 | ... and their partial products equal the determinantal divisors.
 */
inline SmithResult smith_normal_form(const IntMatrix& m) {
    auto d = m.dense();
    const int rows = m.rows;
    const int cols = m.cols;
    std::vector<Integer> factors;
    int t = 0;
    while (t < rows && t < cols) {
        int pr = -1, pc = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (d[i][j] != 0 &&
                    (pr < 0 || detail::int_abs(d[i][j]) < detail::int_abs(d[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
        if (pr < 0)
            break;
        std::swap(d[t], d[pr]);
        if (pc != t)
            for (int i = 0; i < rows; ++i)
                std::swap(d[i][t], d[i][pc]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < rows; ++i) {
                if (d[i][t] == 0)
                    continue;
                const Integer q = d[i][t] / d[t][t];
                if (q != 0)
                    for (int j = t; j < cols; ++j)
                        d[i][j] -= q * d[t][j];
                if (d[i][t] != 0) {
                    // Remainder is smaller than the pivot; promote it and rerun.
                    std::swap(d[t], d[i]);
                    clean = false;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (d[t][j] == 0)
                    continue;
                const Integer q = d[t][j] / d[t][t];
                if (q != 0)
                    for (int i = t; i < rows; ++i)
                        d[i][j] -= q * d[i][t];
                if (d[t][j] != 0) {
                    for (int i = 0; i < rows; ++i)
                        std::swap(d[i][t], d[i][j]);
                    clean = false;
                }
            }
        }

        // The pivot must divide the whole trailing block before it is frozen.
        bool merged = false;
        for (int i = t + 1; i < rows && !merged; ++i)
            for (int j = t + 1; j < cols && !merged; ++j)
                if (d[i][j] % d[t][t] != 0) {
                    for (int jj = t; jj < cols; ++jj)
                        d[t][jj] += d[i][jj];
                    merged = true;
                }
        if (merged)
            continue;
        factors.push_back(detail::int_abs(d[t][t]));
        ++t;
    }
    return SmithResult{std::move(factors), t};
}

/** Rank over the field of two elements, by bit-packed Gaussian elimination. */
inline int rank_mod2(const IntMatrix& m) {
    const int words = (m.cols + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(m.rows, std::vector<std::uint64_t>(words, 0));
    for (const auto& [r, c, v] : m.entries)
        if (v % 2 != 0)
            rows[r][c / 64] ^= std::uint64_t{1} << (c % 64);
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < m.rows; ++i)
            if (rows[i][col / 64] >> (col % 64) & 1) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(rows[rank], rows[pivot]);
        for (int i = 0; i < m.rows; ++i)
            if (i != rank && (rows[i][col / 64] >> (col % 64) & 1))
                for (int w = 0; w < words; ++w)
                    rows[i][w] ^= rows[rank][w];
        ++rank;
    }
    return rank;
}

struct HomologyGroup {
    int free_rank = 0;
    std::vector<Integer> torsion;  // coefficients >= 2 in divisibility order

    bool operator==(const HomologyGroup&) const = default;
};

/** "0", "Z", "Z^2", "Z/2", "Z^2⊕Z/2", ... */
inline std::string to_string(const HomologyGroup& h) {
    std::vector<std::string> parts;
    if (h.free_rank == 1)
        parts.push_back("Z");
    else if (h.free_rank > 1)
        parts.push_back("Z^" + std::to_string(h.free_rank));
    for (const auto& f : h.torsion)
        parts.push_back("Z/" + f.str());
    if (parts.empty())
        return "0";
    std::string out = parts.front();
    for (std::size_t k = 1; k < parts.size(); ++k)
        out += "⊕" + parts[k];
    return out;
}

/**
 * Integral homology of a validated complex: in degree k the free rank is
 * dim_k - rank(d_k) - rank(d_{k+1}) and the torsion coefficients are the
 * invariant factors of d_{k+1} that exceed 1.
 * Throws ValidationError if the complex failed its d o d = 0 check.
 */
inline std::vector<HomologyGroup> homology(const CellComplex& cx) {
    if (!cx.validated)
        throw ValidationError("homology: complex did not pass its boundary validation");
    const int top = cx.top_dimension();
    std::vector<SmithResult> snf(top + 2);
    for (int d = 1; d <= top; ++d)
        snf[d] = smith_normal_form(cx.boundary[d]);
    std::vector<HomologyGroup> out;
    for (int k = 0; k <= top; ++k) {
        HomologyGroup h;
        h.free_rank = cx.dims[k] - snf[k].rank - snf[k + 1].rank;
        for (const auto& f : snf[k + 1].invariant_factors)
            if (f > 1)
                h.torsion.push_back(f);
        out.push_back(std::move(h));
    }
    return out;
}

/** Betti numbers over Z/2: b_k = dim_k - rank2(d_k) - rank2(d_{k+1}). */
inline std::vector<int> betti_mod2(const CellComplex& cx) {
    const int top = cx.top_dimension();
    if (top < 0)
        return {};
    std::vector<int> r2(top + 2, 0);
    for (int d = 1; d <= top; ++d)
        r2[d] = rank_mod2(cx.boundary[d]);
    std::vector<int> out;
    for (int k = 0; k <= top; ++k)
        out.push_back(cx.dims[k] - r2[k] - r2[k + 1]);
    return out;
}

} // namespace kcell

#endif // KCELL_SNF_HPP
