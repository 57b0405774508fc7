#pragma once

#include <complex>
#include <initializer_list>
#include <numbers>

#include "fgrt/matrix.hpp"

namespace test_helpers {

using Complex = std::complex<double>;

// Third root of unity used by the d=3 golden matrices.
inline const Complex w = std::polar(1.0, 2.0 * std::numbers::pi_v<double> / 3.0);
inline const Complex w2 = std::conj(w);

/// Row-major 3x3 builder for golden-matrix literals.
inline fgrt::ComplexMatrix mat3(std::initializer_list<Complex> entries) {
    fgrt::ComplexMatrix m(3, 3);
    int k = 0;
    for (const Complex& e : entries) {
        m(k / 3, k % 3) = e;
        ++k;
    }
    return m;
}

}  // namespace test_helpers
