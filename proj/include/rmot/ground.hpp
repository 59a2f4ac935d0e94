#pragma once
// Bigraded ground ring M = F2[t, r] (t = tau, r = rho) and the Steenrod
// action on it.  Grading is cohomological: |t| = (0,1), |r| = (1,1).

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace rmot {

struct Bidegree {
    int s = 0;
    int w = 0;
    constexpr Bidegree operator+(Bidegree o) const { return {s + o.s, w + o.w}; }
    constexpr Bidegree operator-(Bidegree o) const { return {s - o.s, w - o.w}; }
    constexpr int coweight() const { return s - w; }
    constexpr auto operator<=>(const Bidegree&) const = default;
};

std::string to_string(Bidegree d);

// Bidegree of Sq^n: (n, floor(n/2)).
constexpr Bidegree sq_degree(int n) { return {n, n / 2}; }

struct Mono {
    int t = 0;  // tau exponent
    int r = 0;  // rho exponent
    constexpr Bidegree degree() const { return {r, t + r}; }
    constexpr Mono operator*(Mono o) const { return {t + o.t, r + o.r}; }
    constexpr auto operator<=>(const Mono&) const = default;
};

// Monomial with the given bidegree, if any.
bool mono_of_degree(Bidegree d, Mono& out);

class GroundElement {
  public:
    GroundElement() = default;
    GroundElement(Mono m) : monos_{m} {}
    GroundElement(std::initializer_list<Mono> ms);
    static GroundElement one() { return GroundElement(Mono{0, 0}); }
    static GroundElement tau(int a = 1) { return GroundElement(Mono{a, 0}); }
    static GroundElement rho(int b = 1) { return GroundElement(Mono{0, b}); }

    const std::vector<Mono>& monos() const { return monos_; }
    bool is_zero() const { return monos_.empty(); }
    bool is_one() const { return monos_.size() == 1 && monos_[0] == Mono{0, 0}; }
    bool contains(Mono m) const;
    bool is_homogeneous() const;
    // Only meaningful for nonzero homogeneous elements.
    Bidegree degree() const;
    GroundElement homogeneous_part(Bidegree d) const;

    GroundElement& operator+=(const GroundElement& o);
    GroundElement& operator+=(Mono m) { return *this += GroundElement(m); }
    GroundElement operator+(const GroundElement& o) const {
        GroundElement x = *this;
        x += o;
        return x;
    }
    GroundElement operator*(const GroundElement& o) const;
    GroundElement operator*(Mono m) const;
    bool operator==(const GroundElement&) const = default;
    auto operator<=>(const GroundElement& o) const { return monos_ <=> o.monos_; }

    // tau -> tv, rho -> rv for tv, rv in {0,1}; result in F2.
    int evaluate(int tv, int rv) const;

    std::string str() const;

  private:
    std::vector<Mono> monos_;  // sorted, distinct
};

GroundElement ground_mul(const GroundElement& x, const GroundElement& y);

// Sq^n on t^a r^b: a single monomial or zero.  Returns false for zero.
bool sq_on_mono(int n, Mono m, Mono& out);

// Sq^n acting on a homogeneous element of M.  Throws std::invalid_argument on
// a non-homogeneous input.
GroundElement sq_on_coeff(int n, const GroundElement& c);

// Mod-2 binomial coefficient (Lucas); zero outside 0 <= k <= n.
constexpr int binom2(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    return (k & ~n) == 0 ? 1 : 0;
}

}  // namespace rmot
