#pragma once
// Classical A-modules obtained from R-motivic ones: the underlying module
// (t -> 1, r -> 0) and geometric fixed points (t -> 0, r -> 1, degree s - w,
// Sq^n := image of Sq^{2n}).

#include <map>
#include <string>
#include <vector>

#include "rmot/a1.hpp"
#include "rmot/f2.hpp"
#include "rmot/fmodule.hpp"

namespace rmot {

class ClassicalModule {
  public:
    struct Generator {
        std::string name;
        int deg;
    };
    int add_generator(const std::string& name, int deg);
    void set_sq(int n, int g, F2Vec x);  // full table, any n >= 1

    size_t rank() const { return gens_.size(); }
    const std::vector<Generator>& generators() const { return gens_; }
    const Generator& gen(int i) const { return gens_.at(i); }
    int index(const std::string& name) const;
    int max_n() const { return max_n_; }
    const std::map<std::pair<int, int>, F2Vec>& table() const { return table_; }

    F2Vec sq_gen(int n, int g) const;
    F2Vec sq(int n, const F2Vec& x) const;
    std::string str(const F2Vec& x) const;

    // Classical Adem relations on generators; returns violated (a,b,gen) descriptions.
    std::vector<std::string> validate() const;

  private:
    std::vector<Generator> gens_;
    std::map<std::pair<int, int>, F2Vec> table_;
    int max_n_ = 0;
};

ClassicalModule underlying(const FModule& m);
ClassicalModule geometric_fixed_points(const FModule& m);

struct A1Type {
    int i = 0, j = 0;
};
// Throws StructuralError unless cm is free of rank one over classical A(1).
A1Type a1_type(const ClassicalModule& cm);

// Generator names used for the geometric fixed points of the A(1) family.
std::string phi_name(const std::string& motivic);

// The exact list of nonzero Sq^1, Sq^2, Sq^4 values on generators expected
// for geometric fixed points of from_vector(v), keyed by (n, source).
std::map<std::pair<int, std::string>, std::vector<std::string>> phi_expected(const StructureVector& v);

// Exactness of sub -> whole -> quotient after a specialization (tv, rv) with
// the given regrading; checked degree by degree.
bool specialized_ses_exact(const SesSplit& ses, const FModule& whole, int tv, int rv, bool fixed_points,
                           std::string* why = nullptr);

}  // namespace rmot
