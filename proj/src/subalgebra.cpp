#include "rmot/subalgebra.hpp"

#include <mutex>
#include <stdexcept>

namespace rmot {

GradedSpan<Seq> subalgebra_span(int n, int max_stem) {
    if (n < 0) throw std::invalid_argument("subalgebra_span: n must be >= 0");
    std::vector<SteenrodElement> gens;
    for (int k = 0; k <= n; ++k) gens.push_back(sq(1 << k));
    return nakayama_closure<Seq>(
        {{SteenrodElement(Seq{}), Bidegree{0, 0}}},
        [&](const SteenrodElement& x, Bidegree d) {
            std::vector<std::pair<SteenrodElement, Bidegree>> out;
            for (int k = 0; k <= n; ++k) out.push_back({multiply(gens[k], x), d + sq_degree(1 << k)});
            return out;
        },
        max_stem);
}

const std::vector<SteenrodElement>& subalgebra_basis(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<SteenrodElement>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        GradedSpan<Seq> s = subalgebra_span(n);
        std::vector<SteenrodElement> v;
        for (size_t i = 0; i < s.size(); ++i) v.push_back(s.gen(i));
        it = cache.emplace(n, std::move(v)).first;
    }
    return it->second;
}

bool in_subalgebra(const SteenrodElement& x, int n) {
    if (x.is_zero()) return true;
    static std::mutex mu;
    static std::map<int, GradedSpan<Seq>> cache;
    const GradedSpan<Seq>* span;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(n);
        if (it == cache.end()) it = cache.emplace(n, subalgebra_span(n)).first;
        span = &it->second;
    }
    return span->contains(x, element_degree(x));
}

}  // namespace rmot
