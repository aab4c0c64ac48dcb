#include "apwt/types.hpp"

#include <cmath>

namespace apwt {

double squared_sum(const ComplexMatrix& m) {
    double acc = 0.0;
    for (const Complex& v : m.values()) acc += std::norm(v);
    return acc;
}

bool all_finite(const ComplexMatrix& m) {
    for (const Complex& v : m.values())
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

double relative_l2_error(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (!a.same_shape(b))
        throw std::invalid_argument("relative_l2_error: shape mismatch");
    double diff = 0.0, ref = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        diff += std::norm(a.values()[i] - b.values()[i]);
        ref += std::norm(b.values()[i]);
    }
    if (ref == 0.0) return diff == 0.0 ? 0.0 : std::sqrt(diff);
    return std::sqrt(diff / ref);
}

}  // namespace apwt
