#pragma once
// May E1 generators h_{i,j} and the vanishing-window scans behind the weak
// Toda realization and uniqueness conditions.

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rmot/ground.hpp"

namespace rmot {

using HIndex = std::pair<int, int>;  // (i, j), i >= 1, j >= 0

struct MayGenerator {
    int i = 1, j = 0;
    int stem = 0, filtration = 1, weight = 0, may = 0;
    int coweight() const { return stem - weight; }
    std::string name() const;  // "h12"
};
MayGenerator may_generator(int i, int j);

struct MayPresentation {
    std::set<HIndex> kill;
    int i_max = 8, j_max = 8;  // generator universe
    std::vector<MayGenerator> surviving() const;
};

enum class ScanMode { Existence, Uniqueness };
int scan_shift(ScanMode m);  // 2 or 1
int scan_fmin(ScanMode m);   // 3 or 2
ScanMode parse_mode(const std::string& s);
std::string mode_str(ScanMode m);

// A monomial t^k h^m in tridegree (s - shift + i, f, w + i) for the target (s, w).
struct Witness {
    Bidegree target;
    std::vector<HIndex> gens;  // sorted, with repeats
    int i = 0, k = 0;
    int stem = 0, f = 0, weight = 0;
    std::string monomial() const;  // "t^2 h12^2"
    bool operator==(const Witness&) const = default;
};

struct PointVerdict {
    Bidegree target;
    std::optional<Witness> witness;  // minimal for (f, sorted gens)
};

struct ScanResult {
    bool empty = true;
    std::optional<Witness> witness;   // first point of D (in order) with a witness
    std::vector<PointVerdict> points;
    bool sufficient = true;           // every generator outside the universe exceeds all coweight budgets
    std::string note;
};

ScanResult window_scan(const MayPresentation& e1, std::vector<Bidegree> D, ScanMode mode);
// Exhaustive over f <= f_max and i <= i_max (enumerating monomials by exact stem).
ScanResult brute_force_scan(const MayPresentation& e1, std::vector<Bidegree> D, ScanMode mode, int f_max, int i_max);

struct Instance {
    std::string name;
    MayPresentation e1;
    std::vector<Bidegree> D;
};
// "a1", "b1", "z"
Instance obstruction_instance(const std::string& name);

}  // namespace rmot
