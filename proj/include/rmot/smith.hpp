#pragma once
// The complex K, its sixth tensor power, the (3,2,1) Young symmetrizer over
// F2, and the modules A_2 = e(K^6) (shifted) and B~(2).

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "rmot/fmodule.hpp"
#include "rmot/subalgebra.hpp"

namespace rmot {

using Perm = std::array<uint8_t, 6>;  // slot k -> p[k]

class GroupAlgebraElement {
  public:
    GroupAlgebraElement() = default;
    explicit GroupAlgebraElement(const Perm& p) { terms_.insert(p); }
    static GroupAlgebraElement identity();
    const std::set<Perm>& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    void toggle(const Perm& p);
    GroupAlgebraElement operator*(const GroupAlgebraElement& o) const;
    GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
    bool operator==(const GroupAlgebraElement&) const = default;

  private:
    std::set<Perm> terms_;
};

Perm perm_compose(const Perm& a, const Perm& b);  // (a o b)[k] = a[b[k]]

// Tableau cells 1..6 sit in slots 0..5: rows {0,1,2},{3,4},{5}; columns
// {0,3,5},{1,4},{2}.
GroupAlgebraElement row_sum();     // R
GroupAlgebraElement column_sum();  // C
GroupAlgebraElement young_symmetrizer();  // R * C

// F2-rank of e(V^6) for dim V = d (d <= 4).
int apply_symmetrizer(int d);

// NYD: entries in {0,1,3,7}; encoded as 2 bits per slot (index into {0,1,3,7}).
using NYD = uint16_t;
NYD nyd(const std::array<int, 6>& entries);  // throws on entries outside {0,1,3,7}
NYD nyd(const std::string& digits);          // "310100"
std::array<int, 6> nyd_entries(NYD t);
std::string nyd_str(NYD t);                  // [a b c / d e / f]
NYD permute(const Perm& p, NYD t);
Bidegree nyd_degree(NYD t);

using TensorElement = MComb<int>;  // keys are NYD codes

// The complex K: x0, x1, x3, x7 with Sq1 x0 = x1, Sq2 x1 = x3, Sq4 x3 = x7.
const FModule& build_K();

// Steenrod action on K^6 by the iterated motivic Cartan formula.
TensorElement tensor_sq(int n, NYD t);
TensorElement tensor_act_sq(int n, const TensorElement& x);
TensorElement tensor_act_seq(const Seq& s, const TensorElement& x);
TensorElement tensor_act(const SteenrodElement& a, const TensorElement& x);
TensorElement apply(const GroupAlgebraElement& g, const TensorElement& x);
std::string tensor_str(const TensorElement& x);

struct A2Build {
    FModule module;                   // shifted by (-5,-1)
    std::vector<TensorElement> basis; // generator i as an element of K^6 (unshifted)
    int iota = -1;                    // generator index of the bottom class
    int top = -1;
    Bidegree bottom_unshifted, top_unshifted;
    int degree51_nonzero = 0;         // NYDs of degree (5,1) with nonzero image
    bool degree51_images_equal = false;
};
const A2Build& build_A2();

TensorElement iota_tensor();  // R(NYD(3,1,0,1,0,0))

struct IdentityCheck {
    std::string name;
    bool ok = false;
    std::string lhs, rhs;
};
// Sq1, Sq2, Sq4, Q2tilde, Q2 on iota against the closed forms.
std::vector<IdentityCheck> iota_actions();
// The three Sq8 identities, plus the degree reduction to a in {1, Sq1, Sq2}.
std::vector<IdentityCheck> check_sq8_closure();
struct Q2NonClosure {
    bool expansion_matches = false;
    bool basis_ok = false;   // the 8 listed elements are an F2-basis of A(2) in (8,4)
    int span_dim = 0;
    bool outside = false;
    std::string detail;
};
Q2NonClosure check_q2_nonclosure();

// Golden closed forms: terms (coefficient, NYD digits) inside R(...).
struct GoldenTerm {
    Mono coef;
    std::string nyd;
};
const std::vector<std::pair<std::string, std::vector<GoldenTerm>>>& iota_golden();
TensorElement golden_value(const std::vector<GoldenTerm>& terms);  // R applied

// Degrees a in D for which Sq^{2^i}(a Q2~ iota) may leave the ideal, by degree
// count only: pairs (i, d).
std::vector<std::pair<int, Bidegree>> sq8_degree_candidates(const std::vector<Bidegree>& D);

struct BtildeBuild {
    FModule module;                       // A(2)-module: Sq1, Sq2, Sq4 tables
    std::vector<SteenrodElement> gens;    // representatives in A(2)
    std::vector<Bidegree> degrees;
    std::vector<Bidegree> ideal_degrees;  // generators of A(2).Q2~
    bool window_free = false;             // L + span(gens) = A(2), independent, in the window
    bool q2t_in_ideal = false;
    // Table action of every word of length <= 3 in Sq1, Sq2, Sq4 agrees with
    // left multiplication in A(2) followed by projection.
    bool words_consistent = false;
};
const BtildeBuild& build_Btilde2();

const std::vector<Bidegree>& btilde_degree_set();

// 0 -> S^{7,3} B~ -> A_2 -> B~ -> 0, with the sub generated by Q2~ iota.
struct BtildeSes {
    int sub_rank = 0, quotient_rank = 0;
    bool sub_degrees_shifted = false;   // sub generator degrees = B~ degrees + (7,3), as multisets
    bool quotient_degrees_match = false;
    bool counts_add_up = false;         // per bidegree: A_2 = B~ + S^{7,3} B~
    std::string detail;
};
BtildeSes check_btilde_ses();

}  // namespace rmot
