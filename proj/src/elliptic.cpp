#include "cdtorus/elliptic.hpp"

#include <cmath>

namespace cdtorus {

LatticeBasis2D::LatticeBasis2D(std::complex<double> w1, std::complex<double> w2)
    : omega1(w1), omega2(w2) {
    if (w1 == std::complex<double>(0) || w2 == std::complex<double>(0))
        throw std::invalid_argument("lattice basis vector is zero");
    if (std::imag(w2 / w1) == 0.0)
        throw std::invalid_argument("lattice basis is not R-independent");
}

std::complex<double> eisenstein(const LatticeBasis2D& lattice, int weight,
                                int truncation) {
    if (weight != 4 && weight != 6)
        throw std::invalid_argument("Eisenstein weight must be 4 or 6");
    if (truncation < 1) throw std::invalid_argument("truncation must be positive");

    std::complex<double> total = 0;
    for (int s = 1; s <= truncation; ++s) {
        std::complex<double> shell = 0;
        auto add = [&](int m, int n) {
            const std::complex<double> w =
                double(m) * lattice.omega1 + double(n) * lattice.omega2;
            const std::complex<double> w2 = w * w;
            const std::complex<double> w4 = w2 * w2;
            shell += 1.0 / (weight == 4 ? w4 : w4 * w2);
        };
        for (int m = -s; m <= s; ++m) {
            add(m, -s);
            add(m, s);
        }
        for (int n = -s + 1; n <= s - 1; ++n) {
            add(-s, n);
            add(s, n);
        }
        total += shell;
    }
    return (weight == 4 ? 60.0 : 140.0) * total;
}

std::complex<double> j_from_invariants(std::complex<double> g2,
                                       std::complex<double> g3) {
    const std::complex<double> g2cubed = g2 * g2 * g2;
    const std::complex<double> disc = g2cubed - 27.0 * g3 * g3;
    const double scale = std::abs(g2cubed) + 27.0 * std::abs(g3 * g3);
    if (scale == 0.0 || std::abs(disc) < 1e-12 * scale)
        throw std::domain_error("degenerate discriminant");
    return 1728.0 * g2cubed / disc;
}

std::complex<double> j_invariant(const LatticeBasis2D& lattice, int truncation) {
    return j_from_invariants(eisenstein(lattice, 4, truncation),
                             eisenstein(lattice, 6, truncation));
}

}  // namespace cdtorus
