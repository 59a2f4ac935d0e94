#pragma once
// Motivic Cartan formula, in a form shared by the coefficient action, the
// action on modules, tensor products, and commutation of Sq^n past scalars:
//
//   Sq^{2k}(xy)   = sum_{i+j=2k} w_ij Sq^i x Sq^j y,   w_ij = t if i,j odd, else 1
//   Sq^{2k+1}(xy) = sum_{i+j=2k+1} Sq^i x Sq^j y + r sum_{i+j=2k, i odd} Sq^i x Sq^j y

#include "rmot/ground.hpp"

namespace rmot {

// Calls emit(i, j, weight) for each term of the expansion of Sq^n(xy).
template <class Emit>
void cartan_terms(int n, Emit&& emit) {
    const bool even = n % 2 == 0;
    for (int i = 0; i <= n; ++i) {
        int j = n - i;
        emit(i, j, (even && (i % 2)) ? Mono{1, 0} : Mono{0, 0});
    }
    if (!even)
        for (int i = 1; i <= n - 2; i += 2) emit(i, n - 1 - i, Mono{0, 1});
}

}  // namespace rmot
