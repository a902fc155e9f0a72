/**
 * Cellular chain complexes: cells indexed by the lifted group U (compact
 * group) or by the Weyl group W (maximal flag manifold), graded by word
 * length, with exact integer boundary matrices.
 *
 * Boundary coefficients follow the two-kind cover pattern: for a cell with
 * canonical word r_1...r_d and a deletable position i (1-based in the sign
 * formulas), the kind-0 cover carries eps*(-1)^i and the kind-1 cover carries
 * eps*(-1)^(i+1+sigma), where sigma sums the Cartan pairings of the deleted
 * letter against the inversion set of the suffix r_{i+1}...r_d.
 *
 * The orientation factor eps compares two parametrizations of the cover cell:
 * the face of the source cube, read along the deletion word, and the cell's
 * own cube, read along its canonical word. Each commutation move between the
 * two words transposes a pair of cube coordinates (degree -1); an order-3
 * braid move is orientation-preserving (degree +1, computed from the
 * quarter-turn rotation model of the rank-2 subgroup). Words related only
 * through braid moves of order >= 4 have no degree under these rules and
 * such types are rejected. Every built complex is additionally checked for
 * d o d = 0 and construction fails loudly if the sign conventions do not
 * hold for a type.
 */
#ifndef KCELL_CHAIN_HPP
#define KCELL_CHAIN_HPP

#include <cstdint>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "int_matrix.hpp"
#include "ugroup.hpp"

namespace kcell {

enum class Space { CompactGroup, FlagManifold };

inline std::string to_string(Space s) {
    return s == Space::CompactGroup ? "compact" : "flag";
}

/** (-1)^e for a possibly negative exponent. */
inline int sign_pow(long long e) {
    return ((e % 2) + 2) % 2 == 0 ? 1 : -1;
}

/**
 * sigma for the cover at position pos (0-based) of a reduced word: the sum of
 * 2<a_i, b>/<a_i, a_i> over the inversion set of the suffix following pos,
 * where a_i is the simple root of the deleted letter. Only the parity enters
 * the boundary sign; the full integer is kept for inspection.
 * Throws InvalidArgument if the word is not reduced.
 */
inline long long sigma(const RootSystem& rs, const std::vector<int>& word, int pos) {
    inversion_set(rs, word);  // validates reducedness of the whole word
    const std::vector<int> suffix(word.begin() + pos + 1, word.end());
    long long s = 0;
    for (const Root& b : inversion_set(rs, suffix))
        s += cartan_pairing(rs, word[pos], b);
    return s;
}

namespace detail {

/**
 * Orientation comparison of two reduced words of the same element: the degree
 * of the cube reparametrization relating their lift parametrizations. The
 * word graph is explored breadth-first over commutation moves (degree -1,
 * a coordinate transposition) and order-3 braid moves (degree +1); the whole
 * component is labeled so that any parity inconsistency is detected. Throws
 * ValidationError if the target word is reachable only through braid moves of
 * order >= 4, whose degree these rules do not determine.
 */
inline int word_orientation_sign(const RootSystem& rs, const std::vector<int>& from,
                                 const std::vector<int>& to) {
    if (from == to)
        return 1;
    std::map<std::vector<int>, int> parity{{from, 0}};
    std::vector<std::vector<int>> queue{from};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::vector<int> w = queue[head];
        const int p = parity[w];
        auto visit = [&](std::vector<int>&& next, int np) {
            auto it = parity.find(next);
            if (it == parity.end()) {
                parity.emplace(next, np);
                queue.push_back(std::move(next));
            } else if (it->second != np) {
                throw ValidationError("orientation parity is inconsistent for type " +
                                      to_string(rs.lie_type));
            }
        };
        for (std::size_t k = 0; k + 1 < w.size(); ++k) {
            const int a = w[k], b = w[k + 1];
            if (a != b && rs.cartan[a][b] == 0) {
                auto next = w;
                std::swap(next[k], next[k + 1]);
                visit(std::move(next), p ^ 1);
            }
            if (k + 2 < w.size() && w[k + 2] == a && a != b &&
                rs.cartan[a][b] * rs.cartan[b][a] == 1) {
                auto next = w;
                next[k] = b;
                next[k + 1] = a;
                next[k + 2] = b;
                visit(std::move(next), p);
            }
        }
    }
    const auto it = parity.find(to);
    if (it == parity.end())
        throw ValidationError(
            "orientation degree undetermined for type " + to_string(rs.lie_type) +
            ": reduced words related only through braid moves of order >= 4");
    return it->second == 0 ? 1 : -1;
}

/** eps of the cover at one deletion position of a canonical word. */
inline int cover_orientation(const RootSystem& rs, const std::vector<int>& word, int pos,
                             const std::vector<int>& target_word) {
    std::vector<int> deleted(word);
    deleted.erase(deleted.begin() + pos);
    return word_orientation_sign(rs, deleted, target_word);
}

} // namespace detail

struct BoundaryCoefficient {
    UElement u;
    UElement v;
    int position = 0;    // 0-based position in the canonical word of u
    int kind = 0;        // 0 or 1
    long long sigma = 0; // kind 1 only; 0 for kind 0
    int epsilon = 1;     // orientation comparison of the two cover parametrizations
    int value = 0;       // the signed coefficient before aggregation, always +-1
};

/**
 * Boundary coefficients of one cell, one per (position, kind) cover of the
 * canonical word. Coefficients landing on the same target cell are summed
 * later, when matrices are assembled.
 */
inline std::vector<BoundaryCoefficient> boundary_of_cell(const UGroup& ug, UElement u) {
    const auto& word = ug.weyl().word(u.w);
    std::vector<BoundaryCoefficient> out;
    std::map<int, int> eps_by_pos;
    for (const auto& cov : ug.covers_below(u)) {
        BoundaryCoefficient bc;
        bc.u = u;
        bc.v = cov.target;
        bc.position = cov.position;
        bc.kind = cov.kind;
        auto it = eps_by_pos.find(cov.position);
        if (it == eps_by_pos.end())
            it = eps_by_pos
                     .emplace(cov.position,
                              detail::cover_orientation(ug.roots(), word, cov.position,
                                                        ug.weyl().word(cov.target.w)))
                     .first;
        bc.epsilon = it->second;
        if (cov.kind == 0) {
            bc.value = bc.epsilon * sign_pow(cov.position + 1);
        } else {
            bc.sigma = sigma(ug.roots(), word, cov.position);
            bc.value = bc.epsilon * sign_pow(cov.position + 2 + bc.sigma);
        }
        out.push_back(std::move(bc));
    }
    return out;
}

/**
 * Aggregated integer coefficient of one flag-manifold cover: the two kinds of
 * the compact-group formula collapse onto the same cell, giving
 * eps * (-1)^i (1 - (-1)^sigma), which is 0 for even sigma and +-2 for odd.
 */
inline int flag_cover_value(const WeylGroup& wg, int source, int pos, int target) {
    const long long s = sigma(wg.roots(), wg.word(source), pos);
    const int eps = detail::cover_orientation(wg.roots(), wg.word(source), pos, wg.word(target));
    return eps * sign_pow(pos + 1) * (1 - sign_pow(s));
}

struct CellComplex {
    Space space = Space::CompactGroup;
    LieType lie_type{Family::A, 1};
    std::vector<int> dims;                      // cell counts per dimension
    std::vector<std::vector<UElement>> cells;   // per dimension, ordered by (Weyl id, C bits)
    std::vector<IntMatrix> boundary;            // boundary[d]: dims[d] columns -> dims[d-1] rows
    bool validated = false;

    int top_dimension() const { return static_cast<int>(dims.size()) - 1; }

    int cell_index(int dim, UElement u) const {
        const auto& list = cells[dim];
        const auto it = std::lower_bound(list.begin(), list.end(), u);
        return static_cast<int>(it - list.begin());
    }
};

namespace detail {

inline std::string weyl_label(const WeylGroup& wg, int id, char letter) {
    std::string out;
    for (int gen : wg.word(id)) {
        if (!out.empty())
            out += ' ';
        out += letter + std::to_string(gen + 1);
    }
    return out.empty() ? "1" : out;
}

inline std::string cell_label(const CellComplex& cx, const UGroup& ug, int dim, int index) {
    const UElement u = cx.cells[dim][index];
    return cx.space == Space::CompactGroup ? render_element(ug, u)
                                           : weyl_label(ug.weyl(), u.w, 'r');
}

} // namespace detail

/**
 * Build the full graded complex for one space and verify that consecutive
 * boundary maps compose to zero. A nonzero composition means the orientation
 * convention fails for this type; the error names the offending cell pair.
 */
inline CellComplex build_complex(const UGroup& ug, Space space) {
    const auto& wg = ug.weyl();
    const int top = wg.max_length();
    CellComplex cx;
    cx.space = space;
    cx.lie_type = ug.roots().lie_type;
    cx.cells.resize(top + 1);
    for (int d = 0; d <= top; ++d) {
        for (int w : wg.by_length()[d]) {
            if (space == Space::CompactGroup) {
                for (std::uint32_t b = 0; b < ug.c_order(); ++b)
                    cx.cells[d].push_back(UElement{w, CVector(b)});
            } else {
                cx.cells[d].push_back(UElement{w, CVector()});
            }
        }
        cx.dims.push_back(static_cast<int>(cx.cells[d].size()));
    }

    cx.boundary.resize(top + 1);
    cx.boundary[0] = IntMatrix{0, cx.dims[0], {}};
    for (int d = 1; d <= top; ++d) {
        std::map<std::pair<int, int>, Integer> acc;
        for (int col = 0; col < cx.dims[d]; ++col) {
            const UElement u = cx.cells[d][col];
            if (space == Space::CompactGroup) {
                for (const auto& bc : boundary_of_cell(ug, u))
                    acc[{cx.cell_index(d - 1, bc.v), col}] += bc.value;
            } else {
                for (const auto& [pos, wi] : wg.cover_deletions(u.w)) {
                    const int v = flag_cover_value(wg, u.w, pos, wi);
                    if (v != 0)
                        acc[{cx.cell_index(d - 1, UElement{wi, CVector()}), col}] += v;
                }
            }
        }
        cx.boundary[d] = IntMatrix::from_triplets(cx.dims[d - 1], cx.dims[d], acc);
    }

    for (int d = 2; d <= top; ++d) {
        const IntMatrix p = multiply(cx.boundary[d - 1], cx.boundary[d]);
        if (!p.is_zero()) {
            const auto& [r, c, v] = p.entries.front();
            throw ValidationError("boundary composition is nonzero for type " +
                                  to_string(cx.lie_type) + " (" + to_string(space) +
                                  "): d(d(B(" + detail::cell_label(cx, ug, d, c) +
                                  "))) hits B(" + detail::cell_label(cx, ug, d - 2, r) +
                                  ") with coefficient " + v.str());
        }
    }
    cx.validated = true;
    return cx;
}

namespace detail {

inline std::string c_monomial(const UGroup& ug, std::uint32_t bits) {
    if (bits == 0)
        return "1";
    std::string out;
    for (int j = 0; j < ug.roots().rank(); ++j) {
        if (!(bits >> j & 1u))
            continue;
        if (!out.empty())
            out += ' ';
        out += 'c' + std::to_string(j + 1);
    }
    return out;
}

inline std::string term_text(long long magnitude, const std::string& monomial) {
    if (magnitude == 1)
        return monomial;
    if (monomial == "1")
        return std::to_string(magnitude);
    return std::to_string(magnitude) + " " + monomial;
}

} // namespace detail

/**
 * Boundary of one compact-group cell in the notation B(v)(c-polynomial),
 * grouping targets over the same Weyl part. Groups appear by descending word
 * position; inside a group, positive terms come first. A group whose terms
 * are all negative is written with the sign factored out.
 */
inline std::string render_boundary(const UGroup& ug, UElement u) {
    auto covers = boundary_of_cell(ug, u);
    std::sort(covers.begin(), covers.end(), [](const auto& a, const auto& b) {
        if (a.position != b.position)
            return a.position > b.position;
        return a.kind < b.kind;
    });

    struct Group {
        int w;
        std::vector<std::pair<std::uint32_t, long long>> terms;  // (bits, coefficient)
    };
    std::vector<Group> groups;
    for (const auto& bc : covers) {
        auto g = std::find_if(groups.begin(), groups.end(),
                              [&](const Group& x) { return x.w == bc.v.w; });
        if (g == groups.end()) {
            groups.push_back(Group{bc.v.w, {}});
            g = groups.end() - 1;
        }
        auto t = std::find_if(g->terms.begin(), g->terms.end(),
                              [&](const auto& x) { return x.first == bc.v.c.bits(); });
        if (t == g->terms.end())
            g->terms.emplace_back(bc.v.c.bits(), bc.value);
        else
            t->second += bc.value;
    }

    std::string out;
    for (auto& g : groups) {
        std::erase_if(g.terms, [](const auto& t) { return t.second == 0; });
        if (g.terms.empty())
            continue;
        std::stable_sort(g.terms.begin(), g.terms.end(), [](const auto& a, const auto& b) {
            const bool pa = a.second > 0, pb = b.second > 0;
            if (pa != pb)
                return pa;
            return a.first < b.first;
        });
        const bool all_negative = g.terms.front().second < 0;
        std::string poly;
        for (std::size_t k = 0; k < g.terms.size(); ++k) {
            const auto& [bits, coeff] = g.terms[k];
            const long long eff = all_negative ? -coeff : coeff;
            if (k == 0)
                poly = detail::term_text(eff, detail::c_monomial(ug, bits));
            else
                poly += (eff > 0 ? " + " : " - ") +
                        detail::term_text(std::abs(eff), detail::c_monomial(ug, bits));
        }
        std::string body;
        if (ug.weyl().length(g.w) == 0) {
            body = poly;
        } else {
            body = "B(" + detail::weyl_label(ug.weyl(), g.w, 's') + ")";
            if (!(g.terms.size() == 1 && g.terms.front().first == 0 &&
                  std::abs(g.terms.front().second) == 1))
                body += "(" + poly + ")";
        }
        if (out.empty())
            out = (all_negative ? "-" : "") + body;
        else
            out += (all_negative ? " - " : " + ") + body;
    }
    return out.empty() ? "0" : out;
}

/** Boundary of one flag-manifold cell, e.g. "-2 B(r2)". */
inline std::string render_flag_boundary(const WeylGroup& wg, int w_id) {
    std::vector<std::pair<int, long long>> terms;  // (target id, coefficient)
    auto deletions = wg.cover_deletions(w_id);
    for (auto it = deletions.rbegin(); it != deletions.rend(); ++it) {
        const long long v = flag_cover_value(wg, w_id, it->first, it->second);
        if (v == 0)
            continue;
        auto t = std::find_if(terms.begin(), terms.end(),
                              [&](const auto& x) { return x.first == it->second; });
        if (t == terms.end())
            terms.emplace_back(it->second, v);
        else
            t->second += v;
    }
    std::erase_if(terms, [](const auto& t) { return t.second == 0; });
    std::string out;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const auto& [id, coeff] = terms[k];
        const std::string body =
            detail::term_text(std::abs(coeff), "B(" + detail::weyl_label(wg, id, 'r') + ")");
        if (k == 0)
            out = (coeff < 0 ? "-" : "") + body;
        else
            out += (coeff > 0 ? " + " : " - ") + body;
    }
    return out.empty() ? "0" : out;
}

/**
 * Table of boundary expressions, one line "B(u) -> ..." per representative
 * cell (trivial C-part), dimensions 1 and up. The boundary of any other cell
 * follows by right multiplication with its C-part.
 */
inline std::vector<std::string> boundary_table(const UGroup& ug) {
    std::vector<std::string> lines;
    const auto& wg = ug.weyl();
    for (std::size_t d = 1; d < wg.by_length().size(); ++d)
        for (int w : wg.by_length()[d]) {
            const UElement u{w, CVector()};
            lines.push_back("B(" + detail::weyl_label(wg, w, 's') + ") -> " +
                            render_boundary(ug, u));
        }
    return lines;
}

inline std::vector<std::string> flag_boundary_table(const WeylGroup& wg) {
    std::vector<std::string> lines;
    for (std::size_t d = 1; d < wg.by_length().size(); ++d)
        for (int w : wg.by_length()[d])
            lines.push_back("B(" + detail::weyl_label(wg, w, 'r') + ") -> " +
                            render_flag_boundary(wg, w));
    return lines;
}

} // namespace kcell

#endif // KCELL_CHAIN_HPP
