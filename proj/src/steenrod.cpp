#include "rmot/steenrod.hpp"

#include <mutex>
#include <set>
#include <sstream>

#include "rmot/cartan.hpp"

namespace rmot {

bool is_admissible(const Seq& s) {
    for (size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] < 2 * s[i + 1]) return false;
    for (int a : s)
        if (a < 1) return false;
    return true;
}

Bidegree seq_degree(const Seq& s) {
    Bidegree d;
    for (int a : s) d = d + sq_degree(a);
    return d;
}

std::string seq_str(const Seq& s) {
    std::string out;
    for (int a : s) {
        if (!out.empty()) out += " ";
        out += "Sq" + std::to_string(a);
    }
    return out;
}

std::string element_str(const SteenrodElement& x) {
    return x.str([](const Seq& s) { return seq_str(s); });
}

SteenrodElement sq(int n) {
    if (n == 0) return SteenrodElement(Seq{});
    return SteenrodElement(Seq{n});
}

SteenrodElement sq_word(const Seq& s) { return reduce_seq(s); }

namespace {

std::mutex g_parity_mu;
std::set<std::tuple<int, int, int>> g_parity_seen;
std::vector<ParityExclusion> g_parity_log;

void log_exclusion(int a, int b, int j, const std::string& term) {
    std::lock_guard<std::mutex> lk(g_parity_mu);
    if (g_parity_seen.insert({a, b, j}).second) g_parity_log.push_back({a, b, j, term});
}

Seq concat(const Seq& a, const Seq& b, const Seq& c = {}) {
    Seq out;
    out.reserve(a.size() + b.size() + c.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    out.insert(out.end(), c.begin(), c.end());
    return out;
}

}  // namespace

std::vector<ParityExclusion> parity_exclusions() {
    std::lock_guard<std::mutex> lk(g_parity_mu);
    return g_parity_log;
}

std::vector<AdemTerm> adem_relation(int a, int b) {
    std::vector<AdemTerm> out;
    const Mono one{0, 0}, t{1, 0}, r{0, 1};
    auto push = [&](Mono c, int x, int y) { out.push_back({c, x, y}); };
    const bool ae = a % 2 == 0, be = b % 2 == 0;
    for (int j = 0; 2 * j <= a; ++j) {
        const int main = binom2(b - 1 - j, a - 2 * j);
        const bool jodd = j % 2;
        if (ae && be) {
            if (main) push(jodd ? t : one, a + b - j, j);
        } else if (!ae && be) {
            // left term for even j, rho term for odd j
            if (main) {
                if (!jodd)
                    push(one, a + b - j, j);
                else
                    log_exclusion(a, b, j, "Sq" + std::to_string(a + b - j) + " Sq" + std::to_string(j));
            }
            const int rc = binom2(b - j, a - 2 * j);
            if (rc) {
                if (jodd)
                    push(r, a + b - j - 1, j);
                else
                    log_exclusion(a, b, j, "r Sq" + std::to_string(a + b - j - 1) + " Sq" + std::to_string(j));
            }
        } else if (ae && !be) {
            if (main) push(one, a + b - j, j);
            const int rc = binom2(b - 1 - j, a + 1 - 2 * j);
            if (rc) {
                if (jodd)
                    push(r, a + b - j - 1, j);
                else
                    log_exclusion(a, b, j, "r Sq" + std::to_string(a + b - j - 1) + " Sq" + std::to_string(j));
            }
        } else {
            if (main) push(one, a + b - j, j);
        }
    }
    return out;
}

std::map<Seq, GroundElement> commute_past(const Seq& s, Mono c) {
    thread_local std::map<std::pair<Seq, Mono>, std::map<Seq, GroundElement>> memo;
    if (s.empty()) return {{Seq{}, GroundElement(c)}};
    auto key = std::make_pair(s, c);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    std::map<Seq, GroundElement> out;
    Seq prefix(s.begin(), s.end() - 1);
    const int a = s.back();
    cartan_terms(a, [&](int i, int j, Mono weight) {
        Mono ci;
        if (!sq_on_mono(i, c, ci)) return;
        for (auto& [p, d] : commute_past(prefix, ci * weight)) {
            Seq k = p;
            if (j > 0) k.push_back(j);
            auto [it, fresh] = out.try_emplace(k, d);
            if (!fresh) {
                it->second += d;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    });
    memo.emplace(std::move(key), out);
    return out;
}

SteenrodElement reduce_seq(const Seq& s0) {
    Seq s;
    for (int a : s0)
        if (a != 0) s.push_back(a);
    thread_local std::map<Seq, SteenrodElement> memo;
    if (auto it = memo.find(s); it != memo.end()) return it->second;

    size_t i = 0;
    while (i + 1 < s.size() && s[i] >= 2 * s[i + 1]) ++i;
    SteenrodElement out;
    if (i + 1 >= s.size()) {
        out.add(s, GroundElement::one());
    } else {
        Seq prefix(s.begin(), s.begin() + i), suffix(s.begin() + i + 2, s.end());
        for (const AdemTerm& t : adem_relation(s[i], s[i + 1])) {
            Seq mid{t.first};
            if (t.second) mid.push_back(t.second);
            if (t.coef == Mono{0, 0}) {
                out += reduce_seq(concat(prefix, mid, suffix));
            } else {
                for (auto& [p, d] : commute_past(prefix, t.coef))
                    out.add_scaled(reduce_seq(concat(p, mid, suffix)), d);
            }
        }
    }
    memo.emplace(s, out);
    return out;
}

SteenrodElement adem_reduce(const SqWord& w) {
    std::map<Seq, GroundElement> acc{{Seq{}, GroundElement::one()}};
    for (const WordFactor& f : w) {
        std::map<Seq, GroundElement> next;
        auto add = [&](const Seq& k, const GroundElement& c) {
            if (c.is_zero()) return;
            auto [it, fresh] = next.try_emplace(k, c);
            if (!fresh) {
                it->second += c;
                if (it->second.is_zero()) next.erase(it);
            }
        };
        if (const int* n = std::get_if<int>(&f)) {
            for (auto& [k, c] : acc) {
                Seq k2 = k;
                if (*n > 0) k2.push_back(*n);
                add(k2, c);
            }
        } else {
            const GroundElement& g = std::get<GroundElement>(f);
            for (auto& [k, c] : acc)
                for (const Mono& m : g.monos())
                    for (auto& [k2, d] : commute_past(k, m)) add(k2, c * d);
        }
        acc.swap(next);
    }
    SteenrodElement out;
    for (auto& [k, c] : acc) out.add_scaled(reduce_seq(k), c);
    return out;
}

SteenrodElement adem_reduce(const SteenrodElement& x) {
    SteenrodElement out;
    for (const auto& [k, c] : x.terms()) out.add_scaled(reduce_seq(k), c);
    return out;
}

SteenrodElement multiply(const SteenrodElement& x, const SteenrodElement& y) {
    SteenrodElement out;
    for (const auto& [I, c] : x.terms())
        for (const auto& [J, d] : y.terms())
            for (const Mono& m : d.monos())
                for (auto& [I2, e] : commute_past(I, m)) out.add_scaled(reduce_seq(concat(I2, J)), c * e);
    return out;
}

SteenrodElement commutator(const SteenrodElement& x, const SteenrodElement& y) {
    return multiply(x, y) + multiply(y, x);
}

const MilnorPrimitives& milnor_primitives() {
    static const MilnorPrimitives q = [] {
        MilnorPrimitives p;
        p.Q0 = sq(1);
        p.Q1 = commutator(sq(2), p.Q0);
        p.Q2tilde = commutator(sq(4), p.Q1);
        p.Q2 = p.Q2tilde + SteenrodElement(Seq{5, 1}, GroundElement::rho());
        return p;
    }();
    return q;
}

SteenrodElement specialize(const SteenrodElement& x, Specialization mode) {
    SteenrodElement out;
    for (const auto& [k, c] : x.terms()) {
        if (mode == Specialization::CLASSICAL) {
            if (c.evaluate(1, 0)) out.add(k, GroundElement::one());
        } else {
            GroundElement d;
            for (const Mono& m : c.monos())
                if (m.r == 0) d += m;
            out.add(k, d);
        }
    }
    return out;
}

ClassicalElement classical_reduce(const Seq& s0) {
    Seq s;
    for (int a : s0)
        if (a) s.push_back(a);
    thread_local std::map<Seq, ClassicalElement> memo;
    if (auto it = memo.find(s); it != memo.end()) return it->second;
    size_t i = 0;
    while (i + 1 < s.size() && s[i] >= 2 * s[i + 1]) ++i;
    ClassicalElement out;
    auto toggle = [&](const Seq& k) {
        auto [it, fresh] = out.try_emplace(k, 1);
        if (!fresh) out.erase(it);
    };
    if (i + 1 >= s.size()) {
        out[s] = 1;
    } else {
        const int a = s[i], b = s[i + 1];
        for (int j = 0; 2 * j <= a; ++j) {
            if (!binom2(b - 1 - j, a - 2 * j)) continue;
            Seq k(s.begin(), s.begin() + i);
            k.push_back(a + b - j);
            if (j) k.push_back(j);
            k.insert(k.end(), s.begin() + i + 2, s.end());
            for (auto& [t, v] : classical_reduce(k)) toggle(t);
        }
    }
    memo.emplace(s, out);
    return out;
}

ClassicalElement classical_of(const SteenrodElement& x) {
    ClassicalElement out;
    for (const auto& [k, c] : x.terms())
        if (c.evaluate(1, 0)) out[k] = 1;
    return out;
}

bool is_homogeneous(const SteenrodElement& x) {
    bool first = true;
    Bidegree d;
    for (const auto& [k, c] : x.terms()) {
        if (!c.is_homogeneous()) return false;
        Bidegree e = seq_degree(k) + c.degree();
        if (first) {
            d = e;
            first = false;
        } else if (e != d) {
            return false;
        }
    }
    return true;
}

Bidegree element_degree(const SteenrodElement& x) {
    if (x.is_zero()) return {};
    const auto& [k, c] = *x.terms().begin();
    return seq_degree(k) + c.degree();
}

}  // namespace rmot
