#include "rmot/f2.hpp"

#include <algorithm>
#include <iterator>

namespace rmot {

void f2_add_into(F2Vec& a, const F2Vec& b) {
    F2Vec out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    a.swap(out);
}

F2Vec F2Echelon::reduce(F2Vec v, F2Vec* combo) const {
    size_t k = 0;
    while (k < v.size()) {
        auto it = rows_.find(v[k]);
        if (it == rows_.end()) {
            ++k;
            continue;
        }
        f2_add_into(v, it->second.v);
        if (combo) f2_add_into(*combo, it->second.combo);
    }
    return v;
}

bool F2Echelon::insert(F2Vec v, int tag) {
    F2Vec combo;
    if (track_ && tag >= 0) combo.push_back(tag);
    v = reduce(std::move(v), track_ ? &combo : nullptr);
    if (v.empty()) return false;
    int p = v.front();
    rows_.emplace(p, Row{std::move(v), std::move(combo)});
    return true;
}

std::vector<F2Vec> F2Echelon::reduced_basis() const {
    std::map<int, F2Vec> rows;
    for (const auto& [p, r] : rows_) rows[p] = r.v;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        F2Vec& v = it->second;
        size_t k = 1;
        while (k < v.size()) {
            auto jt = rows.find(v[k]);
            if (jt == rows.end() || jt->first == it->first) {
                ++k;
                continue;
            }
            f2_add_into(v, jt->second);
        }
    }
    std::vector<F2Vec> out;
    for (auto& [p, v] : rows) out.push_back(v);
    return out;
}

}  // namespace rmot
