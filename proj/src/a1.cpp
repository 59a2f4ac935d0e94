#include "rmot/a1.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace rmot {

std::string StructureVector::str() const {
    std::string s;
    for (int i = 0; i < 7; ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

StructureVector StructureVector::parse(const std::string& s) {
    StructureVector out;
    int n = 0;
    std::string cur;
    auto flush = [&] {
        if (cur != "0" && cur != "1") throw std::invalid_argument("structure vector entries must be 0 or 1: '" + cur + "'");
        if (n >= 7) throw std::invalid_argument("structure vector has more than 7 entries");
        out.v[n++] = cur[0] - '0';
        cur.clear();
    };
    for (char c : s) {
        if (c == ',' || c == ' ') {
            if (!cur.empty()) flush();
        } else if (c != '(' && c != ')') {
            cur += c;
        }
    }
    if (!cur.empty()) flush();
    if (n != 7) throw std::invalid_argument("structure vector needs 7 entries, got " + std::to_string(n));
    return out;
}

StructureVector StructureVector::from_index(int i) {
    StructureVector out;
    for (int b = 0; b < 7; ++b) out.v[b] = (i >> (6 - b)) & 1;
    return out;
}

int StructureVector::index() const {
    int i = 0;
    for (int b = 0; b < 7; ++b) i = (i << 1) | v[b];
    return i;
}

FModule a1_skeleton() {
    FModule m;
    m.add_generator("x00", {0, 0});
    m.add_generator("x10", {1, 0});
    m.add_generator("x21", {2, 1});
    m.add_generator("x31", {3, 1});
    m.add_generator("y31", {3, 1});
    m.add_generator("y41", {4, 1});
    m.add_generator("y52", {5, 2});
    m.add_generator("y62", {6, 2});
    for (int g = 0; g < 8; ++g) {
        m.set_action(0, g, {});
        m.set_action(1, g, {});
    }
    m.set_action(0, "x00", m.g("x10"));
    m.set_action(0, "x21", m.g("x31"));
    m.set_action(0, "y31", m.g("y41"));
    m.set_action(0, "y52", m.g("y62"));
    m.set_action(1, "x00", m.g("x21"));
    m.set_action(1, "x10", m.g("y31"));
    m.set_action(1, "x21", m.g("y41", GroundElement::tau()));
    m.set_action(1, "x31", m.g("y52"));
    m.set_action(1, "y41", m.g("y62"));
    return m;
}

FModule from_vector(const StructureVector& v) {
    FModule m = a1_skeleton();
    const GroundElement t = GroundElement::tau(), r = GroundElement::rho(), r2 = GroundElement::rho(2);
    auto term = [&](int bit, const char* gen, const GroundElement& c) {
        return bit ? m.g(gen, c) : ModuleElement{};
    };
    for (int g = 0; g < 8; ++g) m.set_action(2, g, {});
    m.set_action(2, "x00", term(v.beta03(), "y31", r) + term((1 + v.beta03() + v.beta14()) % 2, "y41", t) +
                               term(v.alpha03(), "x31", r));
    m.set_action(2, "x10", m.g("y52") + term(v.beta14(), "y41", r));
    m.set_action(2, "x21", term(v.beta26(), "y62", t) + term(v.beta25(), "y52", r) + term(v.j24(), "y41", r2));
    m.set_action(2, "x31", term((v.beta25() + v.beta26()) % 2, "y62", r));
    m.set_action(2, "y31", term(v.gamma36(), "y62", r));
    m.set_action(3, "x00", term(v.beta06(), "y62", r2));
    return m;
}

std::vector<Unknown> a1_unknowns(const FModule& skel) {
    static const std::map<std::tuple<int, std::string, std::string>, std::string> symbols = {
        {{2, "x00", "y31"}, "beta03"}, {{2, "x00", "y41"}, "beta04"}, {{2, "x00", "x31"}, "alpha03"},
        {{2, "x10", "y41"}, "beta14"}, {{2, "x10", "y52"}, "beta15"}, {{2, "x21", "y41"}, "j24"},
        {{2, "x21", "y52"}, "beta25"}, {{2, "x21", "y62"}, "beta26"}, {{2, "x31", "y62"}, "beta36"},
        {{2, "y31", "y62"}, "gamma36"}, {{3, "x00", "y62"}, "beta06"},
    };
    std::vector<Unknown> out;
    const int N = skel.relation_bound();
    for (int k = 2; (1 << k) <= N; ++k)
        for (int g = 0; g < static_cast<int>(skel.rank()); ++g)
            for (const ScanTarget& t : skel.degree_scan(g, 1 << k)) {
                auto it = symbols.find({k, skel.gen(g).name, skel.gen(t.gen).name});
                std::string sym = it == symbols.end() ? "Sq" + std::to_string(1 << k) + "(" + skel.gen(g).name +
                                                            ")->" + GroundElement(t.coef).str() + "*" +
                                                            skel.gen(t.gen).name
                                                      : it->second;
                out.push_back({k, g, t.coef, t.gen, sym});
            }
    return out;
}

StructureVector read_vector(const FModule& m) {
    auto bit = [&](int n, const char* src, Mono c, const char* tgt) {
        return m.act_gen(n, m.index(src)).coeff(m.index(tgt)).contains(c) ? 1 : 0;
    };
    StructureVector v;
    v.v = {bit(4, "x00", {0, 1}, "x31"), bit(4, "x00", {0, 1}, "y31"), bit(4, "x10", {0, 1}, "y41"),
           bit(8, "x00", {0, 2}, "y62"), bit(4, "x21", {0, 1}, "y52"), bit(4, "x21", {1, 0}, "y62"),
           bit(4, "y31", {0, 1}, "y62")};
    return v;
}

std::vector<Enumerated> enumerate_structures(int* checked) {
    const FModule skel = a1_skeleton();
    const std::vector<Unknown> unknowns = a1_unknowns(skel);
    const int u = static_cast<int>(unknowns.size());
    std::vector<Enumerated> out;
    for (int mask = 0; mask < (1 << u); ++mask) {
        FModule m = skel;
        std::map<std::pair<int, int>, ModuleElement> entries;
        for (int g = 0; g < static_cast<int>(skel.rank()); ++g)
            for (int k = 2; (1 << k) <= skel.relation_bound(); ++k) entries[{k, g}] = {};
        std::vector<int> assignment(u);
        for (int i = 0; i < u; ++i) {
            assignment[i] = (mask >> (u - 1 - i)) & 1;
            if (assignment[i])
                entries[{unknowns[i].k, unknowns[i].gen}].add(unknowns[i].target, GroundElement(unknowns[i].coef));
        }
        for (auto& [key, x] : entries) m.set_action(key.first, key.second, x);
        if (m.validate().empty()) out.push_back({m, assignment, read_vector(m)});
    }
    if (checked) *checked = 1 << u;
    std::sort(out.begin(), out.end(), [](const Enumerated& a, const Enumerated& b) { return a.v < b.v; });
    return out;
}

char epsilon_formula(const StructureVector& v) { return (v.beta25() + v.beta26() + v.gamma36()) % 2 ? '2' : 'h'; }
char delta_formula(const StructureVector& v) { return (v.alpha03() + v.beta03()) % 2 ? '2' : 'h'; }

namespace {

// Position of the unique generator in degree d.
int unique_at(const std::vector<Bidegree>& degs, Bidegree d, const char* what) {
    int found = -1;
    for (int i = 0; i < static_cast<int>(degs.size()); ++i)
        if (degs[i] == d) {
            if (found >= 0) throw StructuralError(std::string(what) + ": two generators in degree " + to_string(d));
            found = i;
        }
    if (found < 0) throw StructuralError(std::string(what) + ": no generator in degree " + to_string(d));
    return found;
}

// Does Sq^4 of the bottom class hit r * (top class)?
char bottom_flag(const FModule& m, const char* what) {
    std::vector<Bidegree> degs;
    for (auto& g : m.generators()) degs.push_back(g.deg);
    Bidegree lo = *std::min_element(degs.begin(), degs.end());
    Bidegree hi = *std::max_element(degs.begin(), degs.end());
    int b = unique_at(degs, lo, what), t = unique_at(degs, hi, what);
    ModuleElement x = m.act_gen(4, b);
    return x.coeff(t).contains(Mono{0, 1}) ? '2' : 'h';
}

}  // namespace

SesSplit ses_split(const StructureVector& v) {
    FModule m = from_vector(v);
    SesSplit out;
    ModuleElement u = m.g("x31") + m.g("y31");
    out.sub_span = generate_submodule(m, {u});
    const std::vector<Bidegree> want = {{3, 1}, {4, 1}, {5, 2}, {6, 2}};
    std::vector<Bidegree> got;
    for (size_t i = 0; i < out.sub_span.size(); ++i) got.push_back(out.sub_span.degree(i));
    std::sort(got.begin(), got.end());
    if (got != want) {
        std::string s;
        for (auto d : got) s += to_string(d) + " ";
        throw StructuralError("sub-module generated by x31+y31 has generators in degrees " + s +
                              "instead of (3,1)+{(0,0),(1,0),(2,1),(3,1)}");
    }
    out.sub = submodule_module(m, out.sub_span, "u");
    out.quot = quotient_module(m, out.sub_span, &out.complement);
    if (out.quot.rank() != 4) throw StructuralError("quotient is not of rank 4");
    out.epsilon = bottom_flag(out.sub, "sub");
    out.delta = bottom_flag(out.quot, "quotient");
    return out;
}

}  // namespace rmot
