#pragma once
// The R-motivic Steenrod algebra: words, Adem normalization, products,
// Milnor primitives, specializations.

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "rmot/ground.hpp"
#include "rmot/lin.hpp"

namespace rmot {

using Seq = std::vector<int>;  // Sq^{a1} ... Sq^{ak}, entries >= 1
using SteenrodElement = MComb<Seq>;

// A word with interleaved coefficients; an int factor n means Sq^n.
using WordFactor = std::variant<int, GroundElement>;
using SqWord = std::vector<WordFactor>;

bool is_admissible(const Seq& s);
Bidegree seq_degree(const Seq& s);
std::string seq_str(const Seq& s);
std::string element_str(const SteenrodElement& x);

SteenrodElement sq(int n);
SteenrodElement sq_word(const Seq& s);  // reduced

// One Adem rewrite of Sq^a Sq^b (0 < a < 2b): the left coefficient is 1, t or r.
struct AdemTerm {
    Mono coef;
    int first;
    int second;  // 0 means the term is a single Sq^first
};
std::vector<AdemTerm> adem_relation(int a, int b);

// Monomials with a nonzero binomial that the parity rules exclude.  Filled
// lazily by adem_relation; expected to stay empty.
struct ParityExclusion {
    int a, b, j;
    std::string term;
};
std::vector<ParityExclusion> parity_exclusions();

// Sq^{s} o (c .) written as sum c_k . Sq^{s_k}, with s_k not reduced.
std::map<Seq, GroundElement> commute_past(const Seq& s, Mono c);

SteenrodElement reduce_seq(const Seq& s);
SteenrodElement adem_reduce(const SqWord& w);
SteenrodElement adem_reduce(const SteenrodElement& x);  // reduce every key
SteenrodElement multiply(const SteenrodElement& x, const SteenrodElement& y);
SteenrodElement commutator(const SteenrodElement& x, const SteenrodElement& y);

struct MilnorPrimitives {
    SteenrodElement Q0, Q1, Q2tilde, Q2;
};
const MilnorPrimitives& milnor_primitives();

enum class Specialization { C_MOTIVIC, CLASSICAL };
SteenrodElement specialize(const SteenrodElement& x, Specialization mode);

// Independent classical reducer over F2, used as an oracle.
using ClassicalElement = std::map<Seq, int>;  // only value 1 stored
ClassicalElement classical_reduce(const Seq& s);
ClassicalElement classical_of(const SteenrodElement& x);  // coefficients at t=1, r=0

bool is_homogeneous(const SteenrodElement& x);
Bidegree element_degree(const SteenrodElement& x);  // of a nonzero homogeneous element

}  // namespace rmot
