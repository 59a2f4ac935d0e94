#pragma once
// A^R(n): the sub-M-algebra generated by Sq^1, ..., Sq^{2^n}.

#include <vector>

#include "rmot/mspan.hpp"
#include "rmot/steenrod.hpp"

namespace rmot {

// Minimal M-module generators of A^R(n), n = 1 or 2, with their bidegrees.
// Throws if the closure does not finish inside the stem window.
GradedSpan<Seq> subalgebra_span(int n, int max_stem = 64);

// Cached list of the generators above.
const std::vector<SteenrodElement>& subalgebra_basis(int n);

// Is x in A^R(n)?  (x homogeneous)
bool in_subalgebra(const SteenrodElement& x, int n);

}  // namespace rmot
