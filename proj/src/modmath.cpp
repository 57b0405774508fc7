#include "fgrt/modmath.hpp"

#include <numbers>

namespace fgrt {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) return false;
    }
    return true;
}

}  // namespace

PrimeDim::PrimeDim(int n) : d_(n) {
    if (n <= 0) throw NonPositiveError(n);
    if (n == 2) throw EvenPrimeError();
    if (!is_prime(n)) throw NotPrimeError(n);
}

PrimeDim validate_dim(int n) { return PrimeDim(n); }

Residue inv2(PrimeDim dim) { return Residue((dim.value() + 1) / 2, dim); }

Residue mod_inv(Residue a) {
    if (a.value() == 0) throw ZeroInverseError();
    // Extended Euclid on (a, d); d prime guarantees gcd 1.
    std::int64_t r0 = a.value(), r1 = a.dim().value();
    std::int64_t t0 = 1, t1 = 0;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    return Residue(t0, a.dim());
}

std::complex<double> omega_pow(PrimeDim dim, std::int64_t k) {
    int r = Residue::normalize(k, dim.value());
    double angle = 2.0 * std::numbers::pi_v<double> * r / dim.value();
    return std::polar(1.0, angle);
}

}  // namespace fgrt
