#include "rmot/fmodule.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "rmot/cartan.hpp"
#include "rmot/subalgebra.hpp"

namespace rmot {

namespace {
bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }
int log2i(int n) {
    int k = 0;
    while ((1 << (k + 1)) <= n) ++k;
    return k;
}
}  // namespace

FModule::FModule(const FModule& o) : gens_(o.gens_), by_name_(o.by_name_), table_(o.table_) {
    std::lock_guard<std::recursive_mutex> lk(*o.mu_);
    cache_ = o.cache_;
}

FModule& FModule::operator=(const FModule& o) {
    if (this == &o) return *this;
    gens_ = o.gens_;
    by_name_ = o.by_name_;
    table_ = o.table_;
    std::lock_guard<std::recursive_mutex> lk(*o.mu_);
    cache_ = o.cache_;
    return *this;
}

int FModule::add_generator(const std::string& name, Bidegree d) {
    if (by_name_.count(name)) throw std::invalid_argument("duplicate generator " + name);
    int i = static_cast<int>(gens_.size());
    gens_.push_back({name, d});
    by_name_[name] = i;
    cache_.clear();
    return i;
}

void FModule::set_action(int k, int g, const ModuleElement& x) {
    if (g < 0 || g >= static_cast<int>(gens_.size())) throw std::out_of_range("set_action: bad generator");
    table_[{k, g}] = x;
    std::lock_guard<std::recursive_mutex> lk(*mu_);
    cache_.clear();
}

int FModule::index(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) throw std::out_of_range("unknown generator " + name);
    return it->second;
}

std::optional<int> FModule::find(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

std::string FModule::str(const ModuleElement& x) const {
    return x.str([&](const int& i) { return gens_[i].name; });
}

std::optional<Bidegree> FModule::degree(const ModuleElement& x) const {
    if (x.is_zero()) return std::nullopt;
    const auto& [g, c] = *x.terms().begin();
    return gens_[g].deg + c.degree();
}

bool FModule::homogeneous(const ModuleElement& x) const {
    auto d = degree(x);
    for (const auto& [g, c] : x.terms())
        for (const Mono& m : c.monos())
            if (gens_[g].deg + m.degree() != *d) return false;
    return true;
}

int FModule::max_coweight() const {
    int c = 0;
    for (auto& g : gens_) c = std::max(c, g.deg.coweight());
    return c;
}

std::vector<ScanTarget> FModule::degree_scan(int g, int n) const {
    std::vector<ScanTarget> out;
    Bidegree target = gens_.at(g).deg + sq_degree(n);
    for (int h = 0; h < static_cast<int>(gens_.size()); ++h) {
        Mono m;
        if (mono_of_degree(target - gens_[h].deg, m)) out.push_back({m, h});
    }
    return out;
}

int FModule::relation_bound() const {
    int best = 0;
    const int cw = max_coweight();
    for (int g = 0; g < static_cast<int>(gens_.size()); ++g)
        for (int n = 1; n <= 2 * (cw - gens_[g].deg.coweight()) + 1; ++n)
            if (!degree_scan(g, n).empty()) best = std::max(best, n);
    return best;
}

ModuleElement FModule::act_gen(int n, int g) const {
    if (n == 0) return ModuleElement(g);
    if (degree_scan(g, n).empty()) return {};
    std::lock_guard<std::recursive_mutex> lk(*mu_);
    if (auto it = cache_.find({n, g}); it != cache_.end()) return it->second;
    ModuleElement out;
    if (is_pow2(n)) {
        int k = log2i(n);
        auto it = table_.find({k, g});
        if (it == table_.end())
            throw MissingAction("missing action entry Sq" + std::to_string(n) + "(" + gens_[g].name + ")");
        out = it->second;
    } else {
        const int p = 1 << log2i(n), r = n - p;
        SteenrodElement rest = reduce_seq({r, p});
        if (!rest.coeff(Seq{n}).is_one()) throw std::logic_error("Adem expansion lacks Sq^n");
        rest.add(Seq{n}, GroundElement::one());
        out = act_sq(r, act_gen(p, g));
        out += act(rest, ModuleElement(g));
    }
    cache_.emplace(std::make_pair(n, g), out);
    return out;
}

ModuleElement FModule::act_sq(int n, const ModuleElement& x) const {
    return cartan_act(n, x, [&](int j, int g) { return act_gen(j, g); });
}

ModuleElement FModule::act_seq(const Seq& s, const ModuleElement& x) const {
    ModuleElement y = x;
    for (auto it = s.rbegin(); it != s.rend() && !y.is_zero(); ++it) y = act_sq(*it, y);
    return y;
}

ModuleElement FModule::act(const SteenrodElement& a, const ModuleElement& x) const {
    ModuleElement out;
    for (const auto& [s, c] : a.terms()) out.add_scaled(act_seq(s, x), c);
    return out;
}

std::vector<Violation> FModule::validate() const {
    std::vector<Violation> out;
    for (const auto& [key, x] : table_) {
        auto [k, g] = key;
        if (x.is_zero()) continue;
        Bidegree want = gens_[g].deg + sq_degree(1 << k);
        if (!homogeneous(x) || *degree(x) != want)
            out.push_back({1 << k, 0, g, "inhomogeneous",
                           "Sq" + std::to_string(1 << k) + "(" + gens_[g].name + ") = " + str(x) +
                               " is not of bidegree " + to_string(want)});
    }
    const int N = relation_bound();
    for (int g = 0; g < static_cast<int>(gens_.size()); ++g)
        for (int n = 1; n <= N; n *= 2)
            if (!degree_scan(g, n).empty() && !has_entry(log2i(n), g))
                out.push_back({n, 0, g, "missing", "missing action entry Sq" + std::to_string(n) + "(" + gens_[g].name + ")"});
    if (!out.empty()) return out;

    // Checking generators suffices: the action on M satisfies the Adem
    // relations and the Cartan extension preserves them.
    for (int b = 1; b <= N; ++b)
        for (int a = 1; a < 2 * b && a + b <= N; ++a) {
            SteenrodElement rhs = reduce_seq({a, b});
            for (int g = 0; g < static_cast<int>(gens_.size()); ++g) {
                ModuleElement L = act_sq(a, act_gen(b, g));
                ModuleElement R = act(rhs, ModuleElement(g));
                if (L != R)
                    out.push_back({a, b, g, "adem",
                                   "Sq" + std::to_string(a) + " Sq" + std::to_string(b) + " on " + gens_[g].name +
                                       ": " + str(L) + " != " + str(R)});
            }
        }
    return out;
}

F2Vec FModule::reduce_mod_tr(const ModuleElement& x) const {
    F2Vec v;
    for (const auto& [g, c] : x.terms())
        if (c.contains(Mono{0, 0})) v.push_back(g);
    return v;
}

GradedSpan<int> generate_submodule(const FModule& m, const std::vector<ModuleElement>& seeds) {
    std::vector<std::pair<ModuleElement, Bidegree>> s;
    for (const auto& x : seeds) {
        if (x.is_zero()) continue;
        if (!m.homogeneous(x)) throw std::invalid_argument("generate_submodule: inhomogeneous seed " + m.str(x));
        s.push_back({x, *m.degree(x)});
    }
    const int N = std::max(1, m.relation_bound());
    return nakayama_closure<int>(s, [&](const ModuleElement& x, Bidegree d) {
        std::vector<std::pair<ModuleElement, Bidegree>> out;
        for (int n = 1; n <= N; n *= 2) out.push_back({m.act_sq(n, x), d + sq_degree(n)});
        return out;
    });
}

namespace {

// M-independence of the span's generators, checked in every bidegree of the
// ambient module where they could interact.
void check_independent(const FModule& m, const GradedSpan<int>& sub) {
    std::set<Bidegree> degs;
    int cw = m.max_coweight();
    for (size_t i = 0; i < sub.size(); ++i)
        for (size_t j = 0; j < sub.size(); ++j) {
            // bidegrees where both generator i and j can contribute
            Bidegree a = sub.degree(i), b = sub.degree(j);
            Bidegree d{std::max(a.s, b.s), std::max(a.w, b.w)};
            for (int r = 0; r <= cw + 2; ++r)
                for (int t = 0; t <= cw + 2; ++t) degs.insert(d + Mono{t, r}.degree());
        }
    for (Bidegree d : degs) {
        auto [count, rank] = sub.count_and_rank(d);
        if (count != rank)
            throw StructuralError("submodule generators are M-dependent in bidegree " + to_string(d));
    }
}

}  // namespace

FModule submodule_module(const FModule& m, const GradedSpan<int>& sub, const std::string& prefix) {
    check_independent(m, sub);
    FModule out;
    for (size_t i = 0; i < sub.size(); ++i) out.add_generator(prefix + std::to_string(i), sub.degree(i));
    const int N = std::max(1, m.relation_bound());
    for (size_t i = 0; i < sub.size(); ++i)
        for (int k = 0; (1 << k) <= N; ++k) {
            ModuleElement x = m.act_sq(1 << k, sub.gen(i));
            ModuleElement y;
            if (!x.is_zero()) {
                auto coords = sub.solve(x, *m.degree(x));
                if (!coords) throw StructuralError("submodule not closed at Sq" + std::to_string(1 << k));
                for (size_t j = 0; j < coords->size(); ++j) y.add(static_cast<int>(j), (*coords)[j]);
            }
            out.set_action(k, static_cast<int>(i), y);
        }
    return out;
}

FModule quotient_module(const FModule& m, const GradedSpan<int>& sub, std::vector<int>* complement_out) {
    F2Echelon ech;
    for (size_t i = 0; i < sub.size(); ++i)
        if (!ech.insert(m.reduce_mod_tr(sub.gen(i))))
            throw StructuralError("submodule is not an M-summand: generator " + m.str(sub.gen(i)) +
                                  " is dependent modulo (t,r)");
    std::vector<int> complement;
    for (int g = 0; g < static_cast<int>(m.rank()); ++g)
        if (ech.insert(F2Vec{g})) complement.push_back(g);
    if (sub.size() + complement.size() != m.rank()) throw StructuralError("quotient rank mismatch");

    GradedSpan<int> basis;
    for (size_t i = 0; i < sub.size(); ++i) basis.add(sub.gen(i), sub.degree(i));
    for (int g : complement) basis.add(ModuleElement(g), m.gen(g).deg);

    FModule out;
    for (int g : complement) out.add_generator(m.gen(g).name, m.gen(g).deg);
    const int N = std::max(1, m.relation_bound());
    for (size_t q = 0; q < complement.size(); ++q)
        for (int k = 0; (1 << k) <= N; ++k) {
            ModuleElement x = m.act_gen(1 << k, complement[q]);
            ModuleElement y;
            if (!x.is_zero()) {
                auto coords = basis.solve(x, *m.degree(x));
                if (!coords) throw StructuralError("quotient basis does not span");
                for (size_t j = 0; j < complement.size(); ++j) y.add(static_cast<int>(j), (*coords)[sub.size() + j]);
            }
            out.set_action(k, static_cast<int>(q), y);
        }
    if (complement_out) *complement_out = complement;
    return out;
}

MargolisResult margolis_homology(const FModule& m, const SteenrodElement& theta) {
    MargolisResult res;
    if (m.rank() == 0) return res;
    if (!is_homogeneous(theta) || theta.is_zero())
        throw std::invalid_argument("margolis_homology: theta must be nonzero and homogeneous");
    const Bidegree td = element_degree(theta);
    const int n = static_cast<int>(m.rank());
    std::vector<F2Vec> img(n);
    for (int g = 0; g < n; ++g) img[g] = m.reduce_mod_tr(m.act(theta, ModuleElement(g)));
    for (int g = 0; g < n; ++g) {
        F2Vec sq2;
        for (int h : img[g]) f2_add_into(sq2, img[h]);
        if (!sq2.empty())
            throw std::domain_error("theta acts with nonzero square on the reduced module, witness " + m.gen(g).name);
    }
    std::map<Bidegree, std::vector<int>> by_deg;
    for (int g = 0; g < n; ++g) by_deg[m.gen(g).deg].push_back(g);
    auto rank_from = [&](Bidegree d) {
        auto it = by_deg.find(d);
        if (it == by_deg.end()) return 0;
        F2Echelon e;
        for (int g : it->second) e.insert(img[g]);
        return e.rank();
    };
    for (auto& [d, gs] : by_deg) {
        int h = static_cast<int>(gs.size()) - rank_from(d) - rank_from(d - td);
        res.dims[d] = h;
        res.total += h;
    }
    return res;
}

FreenessResult freeness_certificate(const FModule& m, int n) {
    FreenessResult res;
    const auto& basis = subalgebra_basis(n);
    res.algebra_dim = static_cast<int>(basis.size());
    res.reduced_dim = static_cast<int>(m.rank());
    std::vector<int> order(m.rank());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return m.gen(a).deg < m.gen(b).deg; });
    F2Echelon span;
    bool independent = true;
    for (int g : order) {
        if (span.contains(F2Vec{g})) continue;
        res.generators.push_back(g);
        for (const auto& b : basis) {
            F2Vec v = m.reduce_mod_tr(m.act(b, ModuleElement(g)));
            if (!span.insert(v) && independent) {
                independent = false;
                res.witness = element_str(b) + " applied to " + m.gen(g).name + " is dependent on earlier images";
            }
        }
    }
    res.rank = static_cast<int>(res.generators.size());
    res.free = independent && res.reduced_dim == res.rank * res.algebra_dim;
    if (!res.free && res.witness.empty())
        res.witness = "dim " + std::to_string(res.reduced_dim) + " != " + std::to_string(res.rank) + " x " +
                      std::to_string(res.algebra_dim);
    return res;
}

}  // namespace rmot
