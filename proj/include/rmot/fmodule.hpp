#pragma once
// Finite free bigraded M-modules with a Steenrod action given on generators
// by tables of Sq^{2^k}.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rmot/cartan.hpp"
#include "rmot/mspan.hpp"
#include "rmot/steenrod.hpp"

namespace rmot {

using ModuleElement = MComb<int>;  // generator index -> coefficient

// Sq^n on an M-combination of generators, given Sq^j on generators.
template <class GenAct>
ModuleElement cartan_act(int n, const ModuleElement& x, GenAct&& gen_act) {
    if (n == 0) return x;
    ModuleElement out;
    for (const auto& [g, c] : x.terms())
        for (const Mono& m : c.monos())
            cartan_terms(n, [&](int i, int j, Mono weight) {
                Mono mi;
                if (!sq_on_mono(i, m, mi)) return;
                const ModuleElement& y = gen_act(j, g);
                if (!y.is_zero()) out.add_scaled(y, GroundElement(mi * weight));
            });
    return out;
}

struct MissingAction : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ScanTarget {
    Mono coef;
    int gen;
    bool operator==(const ScanTarget&) const = default;
};

struct Violation {
    int a = 0, b = 0, gen = 0;
    std::string what;  // "adem", "missing", "inhomogeneous"
    std::string detail;
};

class FModule {
  public:
    struct Generator {
        std::string name;
        Bidegree deg;
    };

    FModule() = default;
    FModule(const FModule& o);
    FModule& operator=(const FModule& o);

    int add_generator(const std::string& name, Bidegree d);
    // Sq^{2^k}(g) := x.  An empty x records an explicit zero.
    void set_action(int k, int g, const ModuleElement& x);
    void set_action(int k, const std::string& g, const ModuleElement& x) { set_action(k, index(g), x); }

    size_t rank() const { return gens_.size(); }
    const std::vector<Generator>& generators() const { return gens_; }
    const Generator& gen(int i) const { return gens_.at(i); }
    int index(const std::string& name) const;
    std::optional<int> find(const std::string& name) const;
    const std::map<std::pair<int, int>, ModuleElement>& table() const { return table_; }
    bool has_entry(int k, int g) const { return table_.count({k, g}) > 0; }

    ModuleElement g(const std::string& name, GroundElement c = GroundElement::one()) const {
        return ModuleElement(index(name), c);
    }
    std::string str(const ModuleElement& x) const;
    bool homogeneous(const ModuleElement& x) const;
    std::optional<Bidegree> degree(const ModuleElement& x) const;
    int max_coweight() const;

    // Sq^n on a generator.  Non-powers of two are derived from the table via
    // Sq^n = Sq^r Sq^{2^k} + (rest of the Adem expansion of Sq^r Sq^{2^k}).
    ModuleElement act_gen(int n, int g) const;
    ModuleElement act_sq(int n, const ModuleElement& x) const;
    ModuleElement act_seq(const Seq& s, const ModuleElement& x) const;  // right to left
    ModuleElement act(const SteenrodElement& a, const ModuleElement& x) const;

    std::vector<ScanTarget> degree_scan(int g, int n) const;
    // Largest n with a degree-possible Sq^n on some generator.
    int relation_bound() const;

    std::vector<Violation> validate() const;

    // Reduced module: coefficients set to t = r = 0 (F2 vector over generators).
    F2Vec reduce_mod_tr(const ModuleElement& x) const;

  private:
    std::vector<Generator> gens_;
    std::map<std::string, int> by_name_;
    std::map<std::pair<int, int>, ModuleElement> table_;
    mutable std::map<std::pair<int, int>, ModuleElement> cache_;
    mutable std::unique_ptr<std::recursive_mutex> mu_ = std::make_unique<std::recursive_mutex>();
};

// Sub-A-module generated by `seeds` (closure under Sq^{2^k} and M).  Returns
// its minimal generators as elements of `m`.
GradedSpan<int> generate_submodule(const FModule& m, const std::vector<ModuleElement>& seeds);

// The span above as a module in its own right.  Throws StructuralError if
// the generators are not M-independent in some degree of the window.
FModule submodule_module(const FModule& m, const GradedSpan<int>& sub, const std::string& prefix = "u");

// Quotient by a sub that is an M-summand: the complement is chosen greedily
// among the generators of m, in order.  `complement` receives their indices.
FModule quotient_module(const FModule& m, const GradedSpan<int>& sub, std::vector<int>* complement = nullptr);

// Margolis homology of the reduced module for theta; keyed by bidegree.
struct MargolisResult {
    std::map<Bidegree, int> dims;
    int total = 0;
};
MargolisResult margolis_homology(const FModule& m, const SteenrodElement& theta);

struct FreenessResult {
    bool free = false;
    int rank = 0;
    int reduced_dim = 0;
    int algebra_dim = 0;
    std::vector<int> generators;  // module generators used as free generators
    std::string witness;          // when not free
};
FreenessResult freeness_certificate(const FModule& m, int n);

}  // namespace rmot
