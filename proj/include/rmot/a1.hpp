#pragma once
// The 128 A^R-module structures on A^R(1) and their cofiber decompositions.

#include <array>
#include <string>
#include <vector>

#include "rmot/fmodule.hpp"

namespace rmot {

// v = (alpha03, beta03, beta14, beta06, beta25, beta26, gamma36)
struct StructureVector {
    std::array<int, 7> v{};
    int alpha03() const { return v[0]; }
    int beta03() const { return v[1]; }
    int beta14() const { return v[2]; }
    int beta06() const { return v[3]; }
    int beta25() const { return v[4]; }
    int beta26() const { return v[5]; }
    int gamma36() const { return v[6]; }
    int j24() const { return (beta03() * gamma36() + alpha03() * (beta25() + beta26())) % 2; }
    auto operator<=>(const StructureVector&) const = default;
    std::string str() const;  // "a,b,c,d,e,f,g"
    static StructureVector parse(const std::string& s);
    static StructureVector from_index(int i);  // bit 6 = alpha03, ..., bit 0 = gamma36
    int index() const;
};

// Sq^1 and Sq^2 on the basis x00 x10 x21 x31 y31 y41 y52 y62.
FModule a1_skeleton();

// The six Sq^4 / Sq^8 formulas for v.
FModule from_vector(const StructureVector& v);

// A coefficient left open by the skeleton: Sq^{2^k}(gen) may contain coef*target.
struct Unknown {
    int k;
    int gen;
    Mono coef;
    int target;
    std::string symbol;  // alpha03, beta04, j24, ...
};
std::vector<Unknown> a1_unknowns(const FModule& skeleton);

struct Enumerated {
    FModule module;
    std::vector<int> assignment;  // one bit per unknown, in a1_unknowns order
    StructureVector v;            // read off the module
};
// All Adem-consistent completions of the skeleton, sorted by v.
std::vector<Enumerated> enumerate_structures(int* candidates_checked = nullptr);

// Read v off a module on the A(1) basis.
StructureVector read_vector(const FModule& m);

struct SesSplit {
    char epsilon = 'h';
    char delta = 'h';
    FModule sub;
    FModule quot;
    GradedSpan<int> sub_span;     // sub generators inside from_vector(v)
    std::vector<int> complement;  // quotient generators as indices of from_vector(v)
};
SesSplit ses_split(const StructureVector& v);

// Closed forms for the flags.
char epsilon_formula(const StructureVector& v);
char delta_formula(const StructureVector& v);

}  // namespace rmot
