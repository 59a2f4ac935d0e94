#include "rmot/io.hpp"

#include <cctype>
#include <sstream>

namespace rmot {

using nlohmann::json;

ParseError::ParseError(const std::string& input, size_t p, const std::string& msg)
    : std::runtime_error("parse error at column " + std::to_string(p + 1) + ": " + msg + "\n  " + input + "\n  " +
                         std::string(p, ' ') + "^"),
      pos(p) {}

namespace {

struct Lexer {
    const std::string& s;
    size_t i = 0;
    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool digit() const { return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); }
    int number() {
        if (!digit()) throw ParseError(s, i, "expected a number");
        size_t start = i;
        long v = 0;
        while (digit()) {
            v = v * 10 + (s[i++] - '0');
            if (v > 1000000) throw ParseError(s, start, "number too large");
        }
        return static_cast<int>(v);
    }
    int exponent() {
        skip();
        if (i < s.size() && s[i] == '^') {
            ++i;
            skip();
            return number();
        }
        return 1;
    }
};

}  // namespace

std::vector<SqWord> parse_terms(const std::string& s) {
    Lexer lx{s};
    std::vector<SqWord> out;
    lx.skip();
    if (lx.i == s.size()) throw ParseError(s, 0, "empty expression");
    for (;;) {
        SqWord w;
        bool any = false;
        for (;;) {
            lx.skip();
            if (lx.i == s.size() || s[lx.i] == '+') break;
            const size_t at = lx.i;
            if (s[at] == 't' || s[at] == 'r') {
                ++lx.i;
                int e = lx.exponent();
                w.push_back(s[at] == 't' ? GroundElement::tau(e) : GroundElement::rho(e));
            } else if (s.compare(at, 2, "Sq") == 0) {
                lx.i += 2;
                w.push_back(lx.number());
            } else if (s[at] == '1' && (at + 1 == s.size() || !std::isdigit(static_cast<unsigned char>(s[at + 1])))) {
                ++lx.i;
                w.push_back(GroundElement::one());
            } else if (s[at] == '0' && (at + 1 == s.size() || !std::isdigit(static_cast<unsigned char>(s[at + 1])))) {
                ++lx.i;
                w.push_back(GroundElement{});
            } else {
                throw ParseError(s, at, std::string("unexpected '") + s[at] + "'");
            }
            any = true;
        }
        if (!any) throw ParseError(s, lx.i, "empty term");
        out.push_back(std::move(w));
        if (lx.i == s.size()) break;
        ++lx.i;  // '+'
        lx.skip();
        if (lx.i == s.size()) throw ParseError(s, lx.i, "dangling '+'");
    }
    return out;
}

SteenrodElement parse_element(const std::string& s) {
    SteenrodElement out;
    for (const SqWord& w : parse_terms(s)) out += adem_reduce(w);
    return out;
}

namespace {

json coef_json(const GroundElement& c) {
    json a = json::array();
    for (const Mono& m : c.monos()) a.push_back({m.t, m.r});
    return a;
}

GroundElement coef_from(const json& a) {
    if (!a.is_array()) throw std::invalid_argument("coef must be a list of [a, b] pairs");
    GroundElement c;
    for (const auto& p : a) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer() || p[0] < 0 ||
            p[1] < 0)
            throw std::invalid_argument("bad monomial " + p.dump() + " (expected [a, b] with a, b >= 0)");
        c += Mono{p[0].get<int>(), p[1].get<int>()};
    }
    return c;
}

int power_key(const std::string& key) {
    if (key.rfind("Sq", 0) != 0) throw std::invalid_argument("action key '" + key + "' is not Sq<n>");
    int n = 0;
    try {
        size_t used = 0;
        n = std::stoi(key.substr(2), &used);
        if (used != key.size() - 2) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("action key '" + key + "' is not Sq<n>");
    }
    if (n < 1) throw std::invalid_argument("action key '" + key + "' must have n >= 1");
    return n;
}

const json& need(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace

json module_to_json(const FModule& m) {
    json gens = json::array();
    for (const auto& g : m.generators()) gens.push_back({{"name", g.name}, {"deg", {g.deg.s, g.deg.w}}});
    json actions = json::object();
    for (const auto& [key, x] : m.table()) {
        json terms = json::array();
        for (const auto& [h, c] : x.terms()) terms.push_back({{"coef", coef_json(c)}, {"gen", m.gen(h).name}});
        actions["Sq" + std::to_string(1 << key.first)][m.gen(key.second).name] = terms;
    }
    return {{"generators", gens}, {"actions", actions}};
}

bool is_classical_json(const json& j) {
    const json& gens = need(j, "generators");
    return gens.is_array() && !gens.empty() && gens[0].is_object() && gens[0].contains("deg") &&
           gens[0]["deg"].is_number_integer();
}

FModule module_from_json(const json& j) {
    FModule m;
    const json& gens = need(j, "generators");
    if (!gens.is_array()) throw std::invalid_argument("'generators' must be a list");
    for (const auto& g : gens) {
        const json& d = need(g, "deg");
        if (!d.is_array() || d.size() != 2 || !d[0].is_number_integer() || !d[1].is_number_integer())
            throw std::invalid_argument("generator deg must be [s, w]");
        const std::string name = need(g, "name").get<std::string>();
        if (m.find(name)) throw std::invalid_argument("duplicate generator '" + name + "'");
        m.add_generator(name, {d[0].get<int>(), d[1].get<int>()});
    }
    const json& actions = j.contains("actions") ? j.at("actions") : json::object();
    for (const auto& [key, table] : actions.items()) {
        const int n = power_key(key);
        if (n & (n - 1)) throw std::invalid_argument("action key '" + key + "' is not a power of two");
        int k = 0;
        while ((1 << k) < n) ++k;
        for (const auto& [src, terms] : table.items()) {
            auto g = m.find(src);
            if (!g) throw std::invalid_argument("unknown generator '" + src + "' in " + key);
            ModuleElement x;
            for (const auto& t : terms) {
                const std::string tgt = need(t, "gen").get<std::string>();
                auto h = m.find(tgt);
                if (!h) throw std::invalid_argument("unknown generator '" + tgt + "' in " + key + "(" + src + ")");
                x.add(*h, coef_from(need(t, "coef")));
            }
            m.set_action(k, *g, x);
        }
    }
    return m;
}

json classical_to_json(const ClassicalModule& m) {
    json gens = json::array();
    for (const auto& g : m.generators()) gens.push_back({{"name", g.name}, {"deg", g.deg}});
    json actions = json::object();
    for (const auto& [key, x] : m.table()) {
        json terms = json::array();
        for (int h : x) terms.push_back({{"coef", json::array({json::array({0, 0})})}, {"gen", m.gen(h).name}});
        actions["Sq" + std::to_string(key.first)][m.gen(key.second).name] = terms;
    }
    return {{"generators", gens}, {"actions", actions}};
}

ClassicalModule classical_from_json(const json& j) {
    ClassicalModule m;
    const json& gens = need(j, "generators");
    if (!gens.is_array()) throw std::invalid_argument("'generators' must be a list");
    for (const auto& g : gens) {
        const json& d = need(g, "deg");
        if (!d.is_number_integer()) throw std::invalid_argument("classical generator deg must be an integer");
        m.add_generator(need(g, "name").get<std::string>(), d.get<int>());
    }
    const json& actions = j.contains("actions") ? j.at("actions") : json::object();
    for (const auto& [key, table] : actions.items()) {
        const int n = power_key(key);
        for (const auto& [src, terms] : table.items()) {
            F2Vec x;
            for (const auto& t : terms) {
                GroundElement c = coef_from(need(t, "coef"));
                if (!(c.is_zero() || c.is_one())) throw std::invalid_argument("classical coefficients are 0 or 1");
                if (c.is_one()) f2_add_into(x, F2Vec{m.index(need(t, "gen").get<std::string>())});
            }
            m.set_sq(n, m.index(src), x);
        }
    }
    return m;
}

namespace {

const char* edge_color(int n) {
    switch (n) {
        case 1: return "black";
        case 2: return "blue";
        case 4: return "red";
        case 8: return "darkgreen";
        default: return "gray";
    }
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

std::string module_to_dot(const FModule& m, const std::string& title) {
    std::ostringstream os;
    os << "digraph " << quoted(title) << " {\n  rankdir=BT;\n  node [shape=circle, fontsize=10];\n";
    for (const auto& g : m.generators())
        os << "  " << quoted(g.name) << " [label=" << quoted(g.name + "\\n" + to_string(g.deg)) << "];\n";
    for (const auto& [key, x] : m.table()) {
        const int n = 1 << key.first;
        for (const auto& [h, c] : x.terms()) {
            bool twisted = false;
            for (const Mono& mo : c.monos()) twisted = twisted || mo.t > 0;
            os << "  " << quoted(m.gen(key.second).name) << " -> " << quoted(m.gen(h).name) << " [color=" << edge_color(n);
            if (twisted) os << ", style=dashed";
            if (!c.is_one()) os << ", label=" << quoted(c.str());
            os << "];\n";
        }
    }
    os << "}\n";
    return os.str();
}

std::string classical_to_dot(const ClassicalModule& m, const std::string& title) {
    std::ostringstream os;
    os << "digraph " << quoted(title) << " {\n  rankdir=BT;\n  node [shape=circle, fontsize=10];\n";
    for (const auto& g : m.generators())
        os << "  " << quoted(g.name) << " [label=" << quoted(g.name + "\\n" + std::to_string(g.deg)) << "];\n";
    for (const auto& [key, x] : m.table()) {
        if (key.first & (key.first - 1)) continue;  // only Sq^{2^k} are drawn
        for (int h : x)
            os << "  " << quoted(m.gen(key.second).name) << " -> " << quoted(m.gen(h).name)
               << " [color=" << edge_color(key.first) << "];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace rmot
