#pragma once

#include <cassert>
#include <complex>
#include <cstdint>

#include "fgrt/errors.hpp"

namespace fgrt {

/// A validated odd-prime Hilbert-space dimension. Construction throws unless
/// the value is prime and different from 2, so a PrimeDim in hand is always
/// admissible.
class PrimeDim {
public:
    explicit PrimeDim(int n);

    int value() const { return d_; }

    friend bool operator==(PrimeDim a, PrimeDim b) { return a.d_ == b.d_; }
    friend bool operator!=(PrimeDim a, PrimeDim b) { return a.d_ != b.d_; }

private:
    int d_;
};

/// Same as PrimeDim's constructor; kept as a named entry point for callers
/// that validate external input.
PrimeDim validate_dim(int n);

/// An element of Z_d. Arbitrary integers (including negatives) are normalized
/// into [0, d-1] by Euclidean remainder on construction.
class Residue {
public:
    Residue(std::int64_t v, PrimeDim dim) : dim_(dim), v_(normalize(v, dim.value())) {}

    int value() const { return v_; }
    PrimeDim dim() const { return dim_; }

    static int normalize(std::int64_t v, int d) {
        int r = static_cast<int>(v % d);
        return r < 0 ? r + d : r;
    }

    friend Residue operator+(Residue a, Residue b) {
        assert(a.dim_ == b.dim_);
        return Residue(std::int64_t{a.v_} + b.v_, a.dim_);
    }
    friend Residue operator-(Residue a, Residue b) {
        assert(a.dim_ == b.dim_);
        return Residue(std::int64_t{a.v_} - b.v_, a.dim_);
    }
    friend Residue operator*(Residue a, Residue b) {
        assert(a.dim_ == b.dim_);
        return Residue(std::int64_t{a.v_} * b.v_, a.dim_);
    }
    friend bool operator==(Residue a, Residue b) { return a.v_ == b.v_ && a.dim_ == b.dim_; }

private:
    PrimeDim dim_;
    int v_;
};

/// The inverse of 2 in Z_d, i.e. (d+1)/2. Half-integer labels like b/2 and
/// c/2 in the geometry formulas all mean multiplication by this residue.
Residue inv2(PrimeDim dim);

/// Multiplicative inverse in Z_d. Throws ZeroInverseError for a = 0.
Residue mod_inv(Residue a);

/// Reduce an arbitrary integer into [0, d-1].
inline int mod_reduce(std::int64_t v, PrimeDim dim) { return Residue::normalize(v, dim.value()); }

/// omega^k where omega = exp(2*pi*i/d); k is reduced mod d first.
std::complex<double> omega_pow(PrimeDim dim, std::int64_t k);

}  // namespace fgrt
