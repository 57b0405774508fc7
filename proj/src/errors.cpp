#include "fgrt/errors.hpp"

#include <cstdlib>

namespace fgrt {

double comparison_eps() {
    static const double eps = [] {
        if (const char* s = std::getenv("FGRT_EPS")) {
            char* end = nullptr;
            double v = std::strtod(s, &end);
            if (end != s && v > 0.0) return v;
        }
        return 1e-10;
    }();
    return eps;
}

}  // namespace fgrt
