/**
 * The lifted group U sitting over the Weyl group: elements are pairs
 * (w, c) with w in W and c in the torsion group C = (Z/2)^rank, representing
 * the normal form s_{i_1} ... s_{i_d} c along the canonical reduced word of w.
 *
 * The generators satisfy s_i^2 = c_i, conjugation by s_i acts linearly on C
 * through coroots reduced mod 2, and lifts of braid-related reduced words are
 * identified. That last convention is validated elsewhere three ways: an
 * explicit 3x3 matrix model in type A2, the d o d = 0 check on every built
 * chain complex, and reproduction of the known homology groups.
 */
#ifndef KCELL_UGROUP_HPP
#define KCELL_UGROUP_HPP

#include <cctype>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "weyl.hpp"

namespace kcell {

/** An element of C, the elementary abelian 2-group generated by c_1..c_rank. */
class CVector {
public:
    CVector() = default;
    explicit CVector(std::uint32_t bits) : bits_(bits) {}

    static CVector unit(int j) { return CVector(std::uint32_t{1} << j); }

    CVector operator*(CVector o) const { return CVector(bits_ ^ o.bits_); }
    bool test(int j) const { return (bits_ >> j) & 1u; }
    bool is_identity() const { return bits_ == 0; }
    std::uint32_t bits() const { return bits_; }

    auto operator<=>(const CVector&) const = default;

private:
    std::uint32_t bits_ = 0;
};

/** Normal form (w, c): the product of canonical-word lifts of w times c. */
struct UElement {
    int w = 0;
    CVector c;

    auto operator<=>(const UElement&) const = default;
};

/** One cover below a cell: position in the canonical word, kind 0 or 1, target. */
struct UCover {
    int position = 0;  // 0-based position in the canonical word of the source
    int kind = 0;      // 0: letter deleted; 1: letter replaced by its square c_i
    UElement target;

    bool operator==(const UCover&) const = default;
};

/**
 * Context object binding a root system and its Weyl group, with the
 * conjugation tables of the torsion group precomputed. Pure and immutable
 * after construction; safe to share read-only. The referenced RootSystem and
 * WeylGroup must outlive it.
 */
class UGroup {
public:
    UGroup(const RootSystem& rs, const WeylGroup& wg) : rs_(&rs), wg_(&wg) {
        conj_gen_.resize(rs.rank());
        for (int i = 0; i < rs.rank(); ++i) {
            conj_gen_[i].reserve(rs.rank());
            for (int j = 0; j < rs.rank(); ++j)
                conj_gen_[i].push_back(croot_vector(reflect(rs, i, rs.simple_root(j))));
        }
    }

    const RootSystem& roots() const { return *rs_; }
    const WeylGroup& weyl() const { return *wg_; }
    std::size_t c_order() const { return std::size_t{1} << rs_->rank(); }
    std::size_t order() const { return c_order() * wg_->size(); }

    /**
     * The coroot of a root expressed in the simple-coroot basis and reduced
     * mod 2: the C-coordinates of c_beta. Sign-insensitive, since the coroot
     * of -beta is the negative of the coroot of beta. Throws InvalidArgument
     * if beta is not a root.
     */
    CVector croot_vector(const Root& beta) const {
        if (!rs_->is_root(beta))
            throw InvalidArgument("croot_vector: not a root");
        // <beta, beta> in the scale where <a_j, a_j> = 2 d_j equals m^T G m
        // with G[j][k] = d_j C[j][k]; the coroot coordinate is m_j 2 d_j / <beta,beta>.
        long long norm2 = 0;
        const int n = rs_->rank();
        for (int j = 0; j < n; ++j) {
            if (beta[j] == 0)
                continue;
            for (int k = 0; k < n; ++k)
                norm2 += static_cast<long long>(beta[j]) * rs_->symmetrizer[j] * rs_->cartan[j][k] * beta[k];
        }
        CVector out;
        for (int j = 0; j < n; ++j) {
            const long long num = 2LL * beta[j] * rs_->symmetrizer[j];
            if (num % norm2 != 0)
                throw InvalidArgument("croot_vector: coroot is not integral");
            const long long coord = num / norm2;
            if (coord % 2 != 0)
                out = out * CVector::unit(j);
        }
        return out;
    }

    /** s_i c s_i^{-1}: an involutive linear map on C. */
    CVector conj_by_gen(int i, CVector c) const {
        CVector out;
        for (int j = 0; j < rs_->rank(); ++j)
            if (c.test(j))
                out = out * conj_gen_[i][j];
        return out;
    }

    /** Conjugation of c by any lift of w; independent of the lift since C is abelian. */
    CVector conj_by_weyl(int w_id, CVector c) const {
        CVector out;
        for (int j = 0; j < rs_->rank(); ++j)
            if (c.test(j))
                out = out * croot_vector(wg_->apply(w_id, rs_->simple_root(j)));
        return out;
    }

    /** Right multiplication u * s_i in normal form. */
    UElement mul_gen(UElement u, int i) const {
        const int wr = wg_->right_multiply(u.w, i);
        CVector c = conj_by_gen(i, u.c);
        if (wg_->length(wr) < wg_->length(u.w))
            c = c * CVector::unit(i);  // s_i s_i = c_i absorbed into the C-part
        return UElement{wr, c};
    }

    /** Right multiplication u * c. */
    UElement mul_c(UElement u, CVector c) const { return UElement{u.w, u.c * c}; }

    /** Normal form of the product s_{word} * c for an arbitrary generator word. */
    UElement normal_form(const std::vector<int>& word, CVector c) const {
        UElement u;
        for (int gen : word)
            u = mul_gen(u, gen);
        return mul_c(u, c);
    }

    /** Product of two normal forms. */
    UElement mul(UElement a, UElement b) const {
        for (int gen : wg_->word(b.w))
            a = mul_gen(a, gen);
        return mul_c(a, b.c);
    }

    /**
     * All covers below u: for every position of the canonical word whose
     * deletion is reduced, the kind-0 target drops the letter and the kind-1
     * target replaces it by c_i, which is then pushed rightwards through the
     * suffix by conjugation. Ordered by position ascending, kind 0 before 1.
     */
    std::vector<UCover> covers_below(UElement u) const {
        const auto& w = wg_->word(u.w);
        std::vector<UCover> out;
        for (const auto& [pos, wi] : wg_->cover_deletions(u.w)) {
            out.push_back(UCover{pos, 0, UElement{wi, u.c}});
            // Inverse of the suffix r_{pos+1}..r_d, walked along the reversed letters.
            int suffix_inv = 0;
            for (std::size_t k = w.size(); k-- > static_cast<std::size_t>(pos) + 1;)
                suffix_inv = wg_->right_multiply(suffix_inv, w[k]);
            const CVector pushed = croot_vector(wg_->apply(suffix_inv, rs_->simple_root(w[pos])));
            out.push_back(UCover{pos, 1, UElement{wi, pushed * u.c}});
        }
        return out;
    }

    /** All elements ordered by (Weyl id, C bits); the fixed cell order. */
    std::vector<UElement> all_elements() const {
        std::vector<UElement> out;
        out.reserve(order());
        for (std::size_t w = 0; w < wg_->size(); ++w)
            for (std::uint32_t b = 0; b < c_order(); ++b)
                out.push_back(UElement{static_cast<int>(w), CVector(b)});
        return out;
    }

private:
    const RootSystem* rs_;
    const WeylGroup* wg_;
    std::vector<std::vector<CVector>> conj_gen_;  // [i][j] = coroot bits of r_i(a_j)
};

/** Cover edge of the order graph: from the higher cell to the lower one. */
struct UOrderEdge {
    UElement from;
    UElement to;
    int position = 0;
    int kind = 0;
};

struct UOrderGraph {
    std::vector<UElement> vertices;  // ordered by (Weyl id, C bits)
    std::vector<UOrderEdge> edges;   // grouped by source vertex in that order
};

/** Full vertex set and all cover edges; the partial order is their transitive closure. */
inline UOrderGraph order_graph(const UGroup& ug) {
    UOrderGraph g;
    g.vertices = ug.all_elements();
    for (const auto& u : g.vertices)
        for (const auto& cov : ug.covers_below(u))
            g.edges.push_back(UOrderEdge{u, cov.target, cov.position, cov.kind});
    return g;
}

/** "s1 s2 c1"-style rendering of a normal form; the identity renders as "1". */
inline std::string render_element(const UGroup& ug, UElement u) {
    std::string out;
    for (int gen : ug.weyl().word(u.w)) {
        if (!out.empty())
            out += ' ';
        out += 's' + std::to_string(gen + 1);
    }
    for (int j = 0; j < ug.roots().rank(); ++j) {
        if (!u.c.test(j))
            continue;
        if (!out.empty())
            out += ' ';
        out += 'c' + std::to_string(j + 1);
    }
    return out.empty() ? "1" : out;
}

/**
 * Parse an element string of whitespace-separated tokens "s<i>", "c<i>" and
 * "1", multiplying left to right into normal form. Indices are 1-based and
 * bounded by the rank. Throws ParseError on unknown tokens.
 */
inline UElement parse_element(const UGroup& ug, std::string_view text) {
    UElement u;
    const int rank = ug.roots().rank();
    std::size_t p = 0;
    while (p < text.size()) {
        while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p])))
            ++p;
        if (p >= text.size())
            break;
        std::size_t q = p;
        while (q < text.size() && !std::isspace(static_cast<unsigned char>(text[q])))
            ++q;
        const std::string_view tok = text.substr(p, q - p);
        p = q;
        if (tok == "1")
            continue;
        if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'c'))
            throw ParseError("unknown token \"" + std::string(tok) + "\" in element string");
        int idx = 0;
        for (std::size_t k = 1; k < tok.size(); ++k) {
            if (!std::isdigit(static_cast<unsigned char>(tok[k])))
                throw ParseError("unknown token \"" + std::string(tok) + "\" in element string");
            idx = idx * 10 + (tok[k] - '0');
        }
        if (idx < 1 || idx > rank)
            throw ParseError("generator index out of range in token \"" + std::string(tok) + "\"");
        if (tok[0] == 's')
            u = ug.mul_gen(u, idx - 1);
        else
            u = ug.mul_c(u, CVector::unit(idx - 1));
    }
    return u;
}

} // namespace kcell

#endif // KCELL_UGROUP_HPP
