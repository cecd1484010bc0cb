#pragma once

#include "normkit/core.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace normkit::testing {

inline CMatrix random_cmatrix(Index rows, Index cols, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) m(i, j) = Complex(g(rng), g(rng));
    return m;
}

inline CMatrix random_hermitian(Index n, std::mt19937_64& rng) {
    CMatrix m = random_cmatrix(n, n, rng);
    return 0.5 * (m + m.adjoint()).eval();
}

inline CVector random_cvector(Index n, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CVector v(n);
    for (Index i = 0; i < n; ++i) v(i) = Complex(g(rng), g(rng));
    return v;
}

/// Hausdorff-style multiset distance: greedily pair closest values.
inline double multiset_distance(CVector a, CVector b) {
    if (a.size() != b.size()) return 1e300;
    std::vector<Complex> rest(b.data(), b.data() + b.size());
    double worst = 0.0;
    for (Index i = 0; i < a.size(); ++i) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < rest.size(); ++k)
            if (std::abs(a(i) - rest[k]) < std::abs(a(i) - rest[best])) best = k;
        worst = std::max(worst, std::abs(a(i) - rest[best]));
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return worst;
}

}  // namespace normkit::testing
