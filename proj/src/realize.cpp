#include "rmot/realize.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rmot {

int ClassicalModule::add_generator(const std::string& name, int deg) {
    gens_.push_back({name, deg});
    return static_cast<int>(gens_.size()) - 1;
}

void ClassicalModule::set_sq(int n, int g, F2Vec x) {
    std::sort(x.begin(), x.end());
    table_[{n, g}] = std::move(x);
    max_n_ = std::max(max_n_, n);
}

int ClassicalModule::index(const std::string& name) const {
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return static_cast<int>(i);
    throw std::out_of_range("unknown generator " + name);
}

F2Vec ClassicalModule::sq_gen(int n, int g) const {
    if (n == 0) return {g};
    auto it = table_.find({n, g});
    return it == table_.end() ? F2Vec{} : it->second;
}

F2Vec ClassicalModule::sq(int n, const F2Vec& x) const {
    F2Vec out;
    for (int g : x) f2_add_into(out, sq_gen(n, g));
    return out;
}

std::string ClassicalModule::str(const F2Vec& x) const {
    if (x.empty()) return "0";
    std::string s;
    for (int g : x) {
        if (!s.empty()) s += " + ";
        s += gens_[g].name;
    }
    return s;
}

std::vector<std::string> ClassicalModule::validate() const {
    std::vector<std::string> out;
    for (const auto& [key, x] : table_)
        for (int h : x)
            if (gens_[h].deg != gens_[key.second].deg + key.first)
                out.push_back("Sq" + std::to_string(key.first) + "(" + gens_[key.second].name + ") has wrong degree");
    const int N = max_n_;
    for (int b = 1; b <= N; ++b)
        for (int a = 1; a < 2 * b && a + b <= N; ++a)
            for (int g = 0; g < static_cast<int>(gens_.size()); ++g) {
                F2Vec lhs = sq(a, sq_gen(b, g)), rhs;
                for (int j = 0; 2 * j <= a; ++j)
                    if (binom2(b - 1 - j, a - 2 * j)) f2_add_into(rhs, sq(a + b - j, sq_gen(j, g)));
                if (lhs != rhs)
                    out.push_back("Sq" + std::to_string(a) + " Sq" + std::to_string(b) + " on " + gens_[g].name +
                                  ": " + str(lhs) + " != " + str(rhs));
            }
    return out;
}

namespace {

F2Vec to_vec(const ModuleElement& x, int tv, int rv) {
    F2Vec v;
    for (const auto& [g, c] : x.terms())
        if (c.evaluate(tv, rv)) v.push_back(g);
    return v;
}

}  // namespace

ClassicalModule underlying(const FModule& m) {
    ClassicalModule cm;
    int lo = 0, hi = 0;
    for (size_t i = 0; i < m.rank(); ++i) {
        cm.add_generator(m.gen(i).name, m.gen(i).deg.s);
        lo = i ? std::min(lo, m.gen(i).deg.s) : m.gen(i).deg.s;
        hi = i ? std::max(hi, m.gen(i).deg.s) : m.gen(i).deg.s;
    }
    for (int n = 1; n <= hi - lo; ++n)
        for (int g = 0; g < static_cast<int>(m.rank()); ++g) cm.set_sq(n, g, to_vec(m.act_gen(n, g), 1, 0));
    return cm;
}

ClassicalModule geometric_fixed_points(const FModule& m) {
    ClassicalModule cm;
    int lo = 0, hi = 0;
    for (size_t i = 0; i < m.rank(); ++i) {
        int d = m.gen(i).deg.coweight();
        cm.add_generator(m.gen(i).name, d);
        lo = i ? std::min(lo, d) : d;
        hi = i ? std::max(hi, d) : d;
    }
    // Odd motivic squares are dropped; Sq^{2n} becomes Sq^n.
    for (int n = 1; n <= hi - lo; ++n)
        for (int g = 0; g < static_cast<int>(m.rank()); ++g) cm.set_sq(n, g, to_vec(m.act_gen(2 * n, g), 0, 1));
    return cm;
}

A1Type a1_type(const ClassicalModule& cm) {
    if (cm.rank() != 8) throw StructuralError("a1_type: module of rank " + std::to_string(cm.rank()) + ", not 8");
    auto at = [&](int d) {
        int found = -1;
        for (int i = 0; i < static_cast<int>(cm.rank()); ++i)
            if (cm.gen(i).deg == d) {
                if (found >= 0) throw StructuralError("a1_type: two generators in degree " + std::to_string(d));
                found = i;
            }
        if (found < 0) throw StructuralError("a1_type: no generator in degree " + std::to_string(d));
        return found;
    };
    const int bottom = at(0);
    // A(1)-span of the bottom class.
    F2Echelon span;
    std::vector<F2Vec> todo{{bottom}};
    span.insert({bottom});
    for (size_t i = 0; i < todo.size(); ++i)
        for (int n : {1, 2}) {
            F2Vec y = cm.sq(n, todo[i]);
            if (span.insert(y)) todo.push_back(y);
        }
    if (span.rank() != 8)
        throw StructuralError("a1_type: bottom class generates a sub-A(1)-module of dimension " +
                              std::to_string(span.rank()) + ", module is not A(1)-free of rank one");
    A1Type t;
    F2Vec a = cm.sq_gen(4, bottom), b = cm.sq_gen(4, at(2));
    t.i = std::binary_search(a.begin(), a.end(), at(4));
    t.j = std::binary_search(b.begin(), b.end(), at(6));
    return t;
}

std::string phi_name(const std::string& motivic) {
    static const std::map<std::string, std::string> names = {
        {"x00", "s0"}, {"x21", "s1a"}, {"x10", "s1b"}, {"y31", "s2"},
        {"x31", "t2"}, {"y52", "t3a"}, {"y41", "t3b"}, {"y62", "t4"},
    };
    auto it = names.find(motivic);
    return it == names.end() ? motivic : it->second;
}

std::map<std::pair<int, std::string>, std::vector<std::string>> phi_expected(const StructureVector& v) {
    std::map<std::pair<int, std::string>, std::vector<std::string>> e;
    auto put = [&](int n, const std::string& g, std::vector<std::pair<int, std::string>> terms) {
        std::vector<std::string> out;
        for (auto& [bit, name] : terms)
            if (bit % 2) out.push_back(name);
        if (!out.empty()) e[{n, g}] = out;
    };
    put(1, "x00", {{1, "x21"}});
    put(1, "x10", {{1, "y31"}});
    put(1, "x31", {{1, "y52"}});
    put(1, "y41", {{1, "y62"}});
    put(2, "x00", {{v.beta03(), "y31"}, {v.alpha03(), "x31"}});
    put(2, "x21", {{v.beta25(), "y52"}, {v.j24(), "y41"}});
    put(2, "x10", {{1, "y52"}, {v.beta14(), "y41"}});
    put(2, "y31", {{v.gamma36(), "y62"}});
    put(2, "x31", {{v.beta25() + v.beta26(), "y62"}});
    put(4, "x00", {{v.beta06(), "y62"}});
    for (auto& [k, names] : e) std::sort(names.begin(), names.end());
    return e;
}

bool specialized_ses_exact(const SesSplit& ses, const FModule& whole, int tv, int rv, bool fixed_points,
                           std::string* why) {
    auto deg = [&](Bidegree d) { return fixed_points ? d.coweight() : d.s; };
    const size_t ns = ses.sub_span.size(), nq = ses.complement.size();
    GradedSpan<int> basis;
    for (size_t i = 0; i < ns; ++i) basis.add(ses.sub_span.gen(i), ses.sub_span.degree(i));
    for (int g : ses.complement) basis.add(ModuleElement(g), whole.gen(g).deg);

    std::map<int, std::vector<int>> sub_at, whole_at, quot_at;
    for (size_t i = 0; i < ns; ++i) sub_at[deg(ses.sub_span.degree(i))].push_back(static_cast<int>(i));
    for (size_t g = 0; g < whole.rank(); ++g) whole_at[deg(whole.gen(g).deg)].push_back(static_cast<int>(g));
    for (size_t q = 0; q < nq; ++q) quot_at[deg(whole.gen(ses.complement[q]).deg)].push_back(static_cast<int>(q));

    std::set<int> degrees;
    for (auto* mp : {&sub_at, &whole_at, &quot_at})
        for (auto& [d, v] : *mp) degrees.insert(d);
    for (int d : degrees) {
        F2Echelon inc, proj;
        for (int i : sub_at[d]) {
            F2Vec v = to_vec(ses.sub_span.gen(i), tv, rv);
            // p(i(x)) must vanish
            auto coords = basis.solve(ses.sub_span.gen(i), ses.sub_span.degree(i));
            for (size_t q = 0; q < nq; ++q)
                if ((*coords)[ns + q].evaluate(tv, rv)) {
                    if (why) *why = "composite nonzero in degree " + std::to_string(d);
                    return false;
                }
            inc.insert(v);
        }
        for (int g : whole_at[d]) {
            auto coords = basis.solve(ModuleElement(g), whole.gen(g).deg);
            F2Vec img;
            for (size_t q = 0; q < nq; ++q)
                if ((*coords)[ns + q].evaluate(tv, rv)) img.push_back(static_cast<int>(q));
            proj.insert(img);
        }
        const int s = static_cast<int>(sub_at[d].size()), w = static_cast<int>(whole_at[d].size()),
                  q = static_cast<int>(quot_at[d].size());
        if (inc.rank() != s || proj.rank() != q || s + q != w) {
            if (why)
                *why = "degree " + std::to_string(d) + ": dims " + std::to_string(s) + "," + std::to_string(w) + "," +
                       std::to_string(q) + " ranks " + std::to_string(inc.rank()) + "," + std::to_string(proj.rank());
            return false;
        }
    }
    return true;
}

}  // namespace rmot
