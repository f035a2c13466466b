#pragma once

#include <complex>
#include <stdexcept>

namespace cdtorus {

/// Rank-2 lattice basis in the plane. The only module that works in floating
/// point: the identities verified here (j = 1728 vs j = 0) have huge margins.
struct LatticeBasis2D {
    std::complex<double> omega1;
    std::complex<double> omega2;

    LatticeBasis2D(std::complex<double> w1, std::complex<double> w2);
};

/// Truncated weight-4 or weight-6 Eisenstein sum over nonzero m*omega1 +
/// n*omega2 with max(|m|,|n|) <= N, scaled by 60 resp. 140. Summation runs in
/// shells of max(|m|,|n|) ascending so that symmetric lattices cancel termwise.
std::complex<double> eisenstein(const LatticeBasis2D& lattice, int weight, int truncation);

/// 1728 g2^3 / (g2^3 - 27 g3^2); throws when the discriminant is degenerate
/// relative to |g2|^3 + |g3|^2.
std::complex<double> j_from_invariants(std::complex<double> g2, std::complex<double> g3);

std::complex<double> j_invariant(const LatticeBasis2D& lattice, int truncation = 100);

}  // namespace cdtorus
