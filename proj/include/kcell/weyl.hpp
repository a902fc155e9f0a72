/**
 * Weyl group enumeration with canonical reduced words, inversion sets and
 * Bruhat cover data.
 *
 * Elements are identified by their action on the simple roots; the canonical
 * word of an element is the ShortLex-least reduced word, assigned during a
 * breadth-first enumeration over right multiplication. Element ids follow
 * that BFS order, so they are graded by length and deterministic across runs.
 */
#ifndef KCELL_WEYL_HPP
#define KCELL_WEYL_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "root_system.hpp"

namespace kcell {

struct WeylElement {
    int id = 0;
    std::vector<int> word;            // ShortLex-least reduced word, 0-based generator indices
    int length = 0;                   // == word.size()
    std::vector<Root> simple_images;  // action on the simple roots; the equality key
};

/**
 * Inversion roots of a reduced word r_1...r_d, in the telescoping order
 * {a_1, r_1 a_2, ..., r_1...r_{d-1} a_d}. Throws InvalidArgument if the word
 * is not reduced (detected by a repeated or negative root in the sequence).
 */
inline std::vector<Root> inversion_set(const RootSystem& rs, const std::vector<int>& word) {
    std::vector<Root> out;
    out.reserve(word.size());
    for (std::size_t k = 0; k < word.size(); ++k) {
        Root b = rs.simple_root(word[k]);
        for (std::size_t t = k; t-- > 0;)
            b = reflect(rs, word[t], b);
        const bool positive = rs.is_positive_root(b);
        const bool fresh = std::find(out.begin(), out.end(), b) == out.end();
        if (!positive || !fresh)
            throw InvalidArgument("word is not reduced: inversion sequence repeats or leaves the positive roots");
        out.push_back(std::move(b));
    }
    return out;
}

class WeylGroup {
public:
    /**
     * Enumerate the full group over the given root system. The RootSystem must
     * outlive the returned group. Throws EnumerationLimitError if more than
     * `budget` elements are produced.
     */
    static WeylGroup enumerate(const RootSystem& rs, std::size_t budget = 1000000) {
        WeylGroup g;
        g.rs_ = &rs;
        const int n = rs.rank();

        WeylElement e;
        e.id = 0;
        e.length = 0;
        for (int j = 0; j < n; ++j)
            e.simple_images.push_back(rs.simple_root(j));
        g.index_[g.key(e.simple_images)] = 0;
        g.elements_.push_back(std::move(e));
        g.cayley_.push_back(std::vector<int>(n, -1));

        for (std::size_t head = 0; head < g.elements_.size(); ++head) {
            for (int i = 0; i < n; ++i) {
                if (g.cayley_[head][i] >= 0)
                    continue;
                std::vector<Root> images(n);
                for (int j = 0; j < n; ++j)
                    images[j] = g.apply_element(static_cast<int>(head), reflect(rs, i, rs.simple_root(j)));
                const auto k = g.key(images);
                auto it = g.index_.find(k);
                int target;
                if (it != g.index_.end()) {
                    target = it->second;
                } else {
                    target = static_cast<int>(g.elements_.size());
                    if (g.elements_.size() >= budget)
                        throw EnumerationLimitError("Weyl group enumeration exceeded budget of " +
                                                    std::to_string(budget) + " elements");
                    WeylElement w;
                    w.id = target;
                    w.word = g.elements_[head].word;
                    w.word.push_back(i);
                    w.length = g.elements_[head].length + 1;
                    w.simple_images = std::move(images);
                    g.index_[k] = target;
                    g.elements_.push_back(std::move(w));
                    g.cayley_.push_back(std::vector<int>(n, -1));
                }
                g.cayley_[head][i] = target;
                g.cayley_[target][i] = static_cast<int>(head);
            }
        }

        g.by_length_.assign(static_cast<std::size_t>(g.max_length()) + 1, {});
        for (const auto& w : g.elements_)
            g.by_length_[w.length].push_back(w.id);
        g.longest_ = g.by_length_.back().front();
        return g;
    }

    std::size_t size() const { return elements_.size(); }
    const WeylElement& element(int id) const { return elements_[id]; }
    const std::vector<WeylElement>& elements() const { return elements_; }
    const std::vector<std::vector<int>>& by_length() const { return by_length_; }
    const RootSystem& roots() const { return *rs_; }

    int identity() const { return 0; }
    int longest() const { return longest_; }
    int max_length() const { return elements_.back().length; }
    int length(int id) const { return elements_[id].length; }
    const std::vector<int>& word(int id) const { return elements_[id].word; }

    /** Right multiplication by a simple reflection, via the cached Cayley table. */
    int right_multiply(int id, int gen) const { return cayley_[id][gen]; }

    /** Element of an arbitrary generator word (not necessarily reduced). */
    int element_of_word(const std::vector<int>& w) const {
        int id = 0;
        for (int gen : w)
            id = cayley_[id][gen];
        return id;
    }

    int multiply(int a, int b) const {
        int id = a;
        for (int gen : elements_[b].word)
            id = cayley_[id][gen];
        return id;
    }

    int inverse(int a) const {
        int id = 0;
        const auto& w = elements_[a].word;
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            id = cayley_[id][*it];
        return id;
    }

    /** Action on an integer vector in the simple-root basis. */
    Root apply(int id, const Root& b) const { return apply_element(id, b); }

    /**
     * Positions of the canonical word whose deletion leaves a reduced word,
     * paired with the resulting element: the Bruhat covers below this element.
     */
    std::vector<std::pair<int, int>> cover_deletions(int id) const {
        const auto& w = elements_[id].word;
        std::vector<std::pair<int, int>> out;
        for (std::size_t p = 0; p < w.size(); ++p) {
            int v = 0;
            for (std::size_t k = 0; k < w.size(); ++k)
                if (k != p)
                    v = cayley_[v][w[k]];
            if (elements_[v].length == elements_[id].length - 1)
                out.emplace_back(static_cast<int>(p), v);
        }
        return out;
    }

private:
    Root apply_element(int id, const Root& b) const {
        const auto& images = elements_[id].simple_images;
        Root out(rs_->rank(), 0);
        for (int j = 0; j < rs_->rank(); ++j) {
            if (b[j] == 0)
                continue;
            for (int k = 0; k < rs_->rank(); ++k)
                out[k] += b[j] * images[j][k];
        }
        return out;
    }

    std::vector<int> key(const std::vector<Root>& images) const {
        std::vector<int> k;
        k.reserve(images.size() * images.size());
        for (const auto& r : images)
            k.insert(k.end(), r.begin(), r.end());
        return k;
    }

    const RootSystem* rs_ = nullptr;
    std::vector<WeylElement> elements_;
    std::map<std::vector<int>, int> index_;
    std::vector<std::vector<int>> cayley_;
    std::vector<std::vector<int>> by_length_;
    int longest_ = 0;
};

} // namespace kcell

#endif // KCELL_WEYL_HPP
