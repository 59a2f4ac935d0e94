#include "rmot/ground.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace rmot {

std::string to_string(Bidegree d) {
    return "(" + std::to_string(d.s) + "," + std::to_string(d.w) + ")";
}

bool mono_of_degree(Bidegree d, Mono& out) {
    int r = d.s, t = d.w - d.s;
    if (r < 0 || t < 0) return false;
    out = {t, r};
    return true;
}

GroundElement::GroundElement(std::initializer_list<Mono> ms) {
    for (Mono m : ms) *this += GroundElement(m);
}

bool GroundElement::contains(Mono m) const {
    return std::binary_search(monos_.begin(), monos_.end(), m);
}

bool GroundElement::is_homogeneous() const {
    for (const Mono& m : monos_)
        if (m.degree() != monos_.front().degree()) return false;
    return true;
}

Bidegree GroundElement::degree() const {
    return monos_.empty() ? Bidegree{} : monos_.front().degree();
}

GroundElement GroundElement::homogeneous_part(Bidegree d) const {
    GroundElement out;
    for (const Mono& m : monos_)
        if (m.degree() == d) out.monos_.push_back(m);
    return out;
}

GroundElement& GroundElement::operator+=(const GroundElement& o) {
    if (o.monos_.empty()) return *this;
    std::vector<Mono> res;
    res.reserve(monos_.size() + o.monos_.size());
    std::set_symmetric_difference(monos_.begin(), monos_.end(), o.monos_.begin(), o.monos_.end(),
                                  std::back_inserter(res));
    monos_.swap(res);
    return *this;
}

GroundElement GroundElement::operator*(Mono m) const {
    GroundElement out;
    out.monos_.reserve(monos_.size());
    for (const Mono& a : monos_) out.monos_.push_back(a * m);
    return out;
}

GroundElement GroundElement::operator*(const GroundElement& o) const {
    if (monos_.size() == 1) return o * monos_[0];
    if (o.monos_.size() == 1) return *this * o.monos_[0];
    std::vector<Mono> all;
    all.reserve(monos_.size() * o.monos_.size());
    for (const Mono& a : monos_)
        for (const Mono& b : o.monos_) all.push_back(a * b);
    std::sort(all.begin(), all.end());
    GroundElement out;
    for (size_t i = 0; i < all.size();) {
        size_t j = i;
        while (j < all.size() && all[j] == all[i]) ++j;
        if ((j - i) % 2) out.monos_.push_back(all[i]);
        i = j;
    }
    return out;
}

int GroundElement::evaluate(int tv, int rv) const {
    int acc = 0;
    for (const Mono& m : monos_) {
        int v = (m.t == 0 || tv) && (m.r == 0 || rv);
        acc ^= v;
    }
    return acc;
}

std::string GroundElement::str() const {
    if (monos_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Mono& m : monos_) {
        if (!first) os << " + ";
        first = false;
        if (m.t == 0 && m.r == 0) {
            os << "1";
            continue;
        }
        bool sp = false;
        if (m.t) {
            os << "t";
            if (m.t > 1) os << "^" << m.t;
            sp = true;
        }
        if (m.r) {
            if (sp) os << " ";
            os << "r";
            if (m.r > 1) os << "^" << m.r;
        }
    }
    return os.str();
}

GroundElement ground_mul(const GroundElement& x, const GroundElement& y) { return x * y; }

namespace {

// c[n][a] = coefficient of t^(a - ceil(n/2)) r^n in Sq^n(t^a).  Obtained by
// writing t^a = t * t^(a-1) and expanding with the motivic Cartan formula,
// using Sq^1 t = r and Sq^i t = 0 for i >= 2.
constexpr int kTable = 160;

struct TauTable {
    std::vector<std::array<uint8_t, kTable>> c;
    TauTable() : c(kTable) {
        for (auto& row : c) row.fill(0);
        c[0][0] = 1;
        for (int a = 1; a < kTable; ++a) {
            c[0][a] = 1;
            for (int n = 1; n < kTable; ++n) {
                int k = n / 2;
                if (n % 2 == 0)
                    c[n][a] = c[n][a - 1] ^ c[n - 1][a - 1];
                else
                    c[n][a] = c[n - 1][a - 1] ^ c[n][a - 1] ^ (k >= 1 ? c[n - 2][a - 1] : 0);
            }
        }
    }
};

int tau_coeff(int n, int a) {
    if (n < kTable && a < kTable) {
        static const TauTable table;
        return table.c[n][a];
    }
    // Outside the table: same recurrence, computed on demand.
    std::vector<std::vector<uint8_t>> c(n + 1, std::vector<uint8_t>(a + 1, 0));
    c[0][0] = 1;
    for (int b = 1; b <= a; ++b) {
        c[0][b] = 1;
        for (int m = 1; m <= n; ++m)
            c[m][b] = (m % 2 == 0) ? (c[m][b - 1] ^ c[m - 1][b - 1])
                                   : (c[m - 1][b - 1] ^ c[m][b - 1] ^ (m >= 3 ? c[m - 2][b - 1] : 0));
    }
    return c[n][a];
}

}  // namespace

bool sq_on_mono(int n, Mono m, Mono& out) {
    if (n == 0) {
        out = m;
        return true;
    }
    int up = (n + 1) / 2;
    if (m.t < up) return false;
    if (!tau_coeff(n, m.t)) return false;
    out = {m.t - up, m.r + n};
    return true;
}

GroundElement sq_on_coeff(int n, const GroundElement& c) {
    if (!c.is_homogeneous()) throw std::invalid_argument("sq_on_coeff: non-homogeneous input " + c.str());
    if (n < 0) throw std::invalid_argument("sq_on_coeff: negative index");
    GroundElement out;
    for (const Mono& m : c.monos()) {
        Mono o;
        if (sq_on_mono(n, m, o)) out += o;
    }
    return out;
}

}  // namespace rmot
