#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fgrt/modmath.hpp"

namespace fgrt {

struct SelftestResult {
    std::string name;
    bool passed = false;
    std::string detail;  // first counterexample when failed
};

/// The full identity battery at one dimension: geometry axioms, MUB
/// relations, operator identities, spectral structure, quasi-distribution
/// attributes, Radon roundtrips and the APG duality checks.
std::vector<SelftestResult> run_selftest(PrimeDim dim);

/// Prints one line per identity; returns true iff everything passed.
bool print_selftest(PrimeDim dim, std::ostream& out);

}  // namespace fgrt
