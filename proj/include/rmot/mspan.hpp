#pragma once
// M-spans of homogeneous elements, decided one bidegree at a time.  In a
// fixed bidegree d the M-span of e_1..e_k is the F2-span of the products
// m e_i where m is the unique monomial of degree d - |e_i| (if any).

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "rmot/f2.hpp"
#include "rmot/lin.hpp"

namespace rmot {

template <class Key>
class GradedSpan {
  public:
    void add(MComb<Key> e, Bidegree d) {
        gens_.push_back(std::move(e));
        degs_.push_back(d);
    }
    size_t size() const { return gens_.size(); }
    const MComb<Key>& gen(size_t i) const { return gens_[i]; }
    Bidegree degree(size_t i) const { return degs_[i]; }

    // Coordinates of x (homogeneous of degree d) in terms of the generators,
    // or nullopt when x is outside the span.  Coordinates are not unique
    // unless the generators are M-independent at d.
    std::optional<std::vector<GroundElement>> solve(const MComb<Key>& x, Bidegree d) const {
        Work w = build(d);
        F2Vec v = w.vectorize(x);
        F2Vec combo;
        v = w.ech.reduce(std::move(v), &combo);
        if (!v.empty()) return std::nullopt;
        std::vector<GroundElement> coords(gens_.size());
        for (int tag : combo) coords[w.tags[tag].first] += w.tags[tag].second;
        return coords;
    }
    bool contains(const MComb<Key>& x, Bidegree d) const { return solve(x, d).has_value(); }

    // (number of shifted generators m e_i at d, F2-rank of their span)
    std::pair<int, int> count_and_rank(Bidegree d) const {
        Work w = build(d);
        return {static_cast<int>(w.tags.size()), w.ech.rank()};
    }

  private:
    struct Work {
        std::map<std::pair<Mono, Key>, int> cols;
        std::vector<std::pair<size_t, Mono>> tags;
        F2Echelon ech{true};
        F2Vec vectorize(const MComb<Key>& x) {
            F2Vec v;
            for (const auto& [k, c] : x.terms())
                for (const Mono& m : c.monos()) {
                    auto [it, fresh] = cols.try_emplace({m, k}, static_cast<int>(cols.size()));
                    v.push_back(it->second);
                }
            std::sort(v.begin(), v.end());
            return v;
        }
    };

    Work build(Bidegree d) const {
        Work w;
        for (size_t i = 0; i < gens_.size(); ++i) {
            Mono m;
            if (!mono_of_degree(d - degs_[i], m)) continue;
            F2Vec v = w.vectorize(gens_[i].scaled(GroundElement(m)));
            int tag = static_cast<int>(w.tags.size());
            w.tags.push_back({i, m});
            w.ech.insert(std::move(v), tag);
        }
        return w;
    }

    std::vector<MComb<Key>> gens_;
    std::vector<Bidegree> degs_;
};

// Minimal generators of the M-module spanned by the closure of `seeds` under
// `expand`, chosen by graded Nakayama.  Candidates are processed in
// lexicographic (stem, weight) order; expand must raise the stem.
template <class Key>
GradedSpan<Key> nakayama_closure(
    const std::vector<std::pair<MComb<Key>, Bidegree>>& seeds,
    const std::function<std::vector<std::pair<MComb<Key>, Bidegree>>(const MComb<Key>&, Bidegree)>& expand,
    int max_stem = 1 << 20) {
    using Item = std::tuple<Bidegree, size_t, MComb<Key>>;
    auto cmp = [](const Item& a, const Item& b) {
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) > std::get<0>(b);
        return std::get<1>(a) > std::get<1>(b);
    };
    std::priority_queue<Item, std::vector<Item>, decltype(cmp)> q(cmp);
    size_t counter = 0;
    for (const auto& [x, d] : seeds)
        if (!x.is_zero()) q.push({d, counter++, x});
    GradedSpan<Key> span;
    while (!q.empty()) {
        auto [d, id, x] = q.top();
        q.pop();
        if (span.contains(x, d)) continue;
        if (d.s > max_stem)
            throw std::runtime_error("closure exceeds the stem window " + std::to_string(max_stem) +
                                     " at bidegree " + to_string(d));
        span.add(x, d);
        for (auto& [y, e] : expand(x, d))
            if (!y.is_zero()) q.push({e, counter++, std::move(y)});
    }
    return span;
}

}  // namespace rmot
