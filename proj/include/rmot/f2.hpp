#pragma once
// Sparse F2 linear algebra: vectors are sorted index lists, rows are kept in
// echelon form keyed by their leading index.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace rmot {

using F2Vec = std::vector<int>;  // sorted, distinct

void f2_add_into(F2Vec& a, const F2Vec& b);

class F2Echelon {
  public:
    explicit F2Echelon(bool track = false) : track_(track) {}

    // Reduce v against the current rows; returns the remainder.  With
    // tracking enabled, *combo receives the input indices whose sum was
    // subtracted.
    F2Vec reduce(F2Vec v, F2Vec* combo = nullptr) const;
    // Add a vector; returns true if it was independent.  `tag` names the
    // input for combination tracking.
    bool insert(F2Vec v, int tag = -1);
    int rank() const { return static_cast<int>(rows_.size()); }
    bool contains(const F2Vec& v) const { return reduce(v).empty(); }
    // Fully reduced basis (each pivot appears in exactly one row).
    std::vector<F2Vec> reduced_basis() const;

  private:
    struct Row {
        F2Vec v;
        F2Vec combo;
    };
    bool track_;
    std::map<int, Row> rows_;  // pivot -> row
};

}  // namespace rmot
