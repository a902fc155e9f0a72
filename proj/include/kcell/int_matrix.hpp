/**
 * Sparse integer matrices over arbitrary-precision integers. Storage is a
 * sorted coordinate list; the sizes handled here are small, so algorithms are
 * free to densify.
 */
#ifndef KCELL_INT_MATRIX_HPP
#define KCELL_INT_MATRIX_HPP

#include <algorithm>
#include <map>
#include <tuple>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kcell {

using Integer = boost::multiprecision::cpp_int;

struct IntMatrix {
    int rows = 0;
    int cols = 0;
    // Sorted by (row, col); no zero entries, no duplicates.
    std::vector<std::tuple<int, int, Integer>> entries;

    static IntMatrix from_triplets(int rows, int cols,
                                   const std::map<std::pair<int, int>, Integer>& t) {
        IntMatrix m;
        m.rows = rows;
        m.cols = cols;
        for (const auto& [rc, v] : t)
            if (v != 0)
                m.entries.emplace_back(rc.first, rc.second, v);
        return m;
    }

    bool is_zero() const { return entries.empty(); }

    std::vector<std::vector<Integer>> dense() const {
        std::vector<std::vector<Integer>> d(rows, std::vector<Integer>(cols, 0));
        for (const auto& [r, c, v] : entries)
            d[r][c] = v;
        return d;
    }

    Integer at(int r, int c) const {
        for (const auto& [er, ec, v] : entries)
            if (er == r && ec == c)
                return v;
        return 0;
    }
};

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    std::map<std::pair<int, int>, Integer> acc;
    // Group b's entries by row so each a-entry meets only matching b-entries.
    std::vector<std::vector<std::pair<int, Integer>>> b_by_row(b.rows);
    for (const auto& [r, c, v] : b.entries)
        b_by_row[r].emplace_back(c, v);
    for (const auto& [r, k, v] : a.entries)
        for (const auto& [c, w] : b_by_row[k])
            acc[{r, c}] += v * w;
    return IntMatrix::from_triplets(a.rows, b.cols, acc);
}

} // namespace kcell

#endif // KCELL_INT_MATRIX_HPP
