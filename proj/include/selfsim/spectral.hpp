#pragma once

#include <optional>
#include <string>
#include <vector>

#include "selfsim/graph.hpp"
#include "selfsim/orbital.hpp"
#include "selfsim/partition.hpp"

namespace selfsim {

inline constexpr double kDefaultSpectralTol = 1e-12;
inline constexpr long kMaxPowerIterations = 1'000'000;

/// Perron data of a connected graph. `x` is the principal eigenvector normalised to sum 1.
struct PerronData {
    double rho = 0.0;
    std::vector<double> x;
    double gamma = 1.0;
    /// per-cell eigenvector values, filled only when a partition was supplied
    std::vector<double> alpha;
    long iterations = 0;
};

/// Power iteration on A + I from the all-ones start vector. Stops once successive Rayleigh
/// quotients and the residual ||Ax - rho x||_inf both drop below `tol`.
PerronData spectral_radius_adjacency(const Graph& g, double tol = kDefaultSpectralTol,
                                     const Partition* cells = nullptr);

/// Largest eigenvalue of an irreducible nonnegative divisor matrix (power iteration on S + I).
double spectral_radius_divisor(const DivisorMatrix& s, double tol = kDefaultSpectralTol);
double spectral_radius_divisor(const IntMatrix& s, double tol = kDefaultSpectralTol);

double principal_ratio(const Graph& g);

struct OrbitConstancyReport {
    double rho = 0.0;
    std::vector<double> alpha;
    /// max - min of x inside each cell
    std::vector<double> spreads;
    /// ||S alpha - rho alpha||_inf
    double eigen_residual = 0.0;
    std::vector<std::string> violations;

    bool ok() const noexcept { return violations.empty(); }
};

/// Checks that the principal eigenvector is constant on each cell of `cells` (up to `tol`)
/// and that the cell averages form an eigenvector of the divisor matrix for rho.
OrbitConstancyReport check_orbit_constancy(const Graph& g, const Partition& cells, double tol);
/// Same check from already computed data; `perron.alpha` must belong to `cells`.
OrbitConstancyReport check_orbit_constancy(const PerronData& perron, const DivisorMatrix& s, const Partition& cells,
                                           double tol);

}  // namespace selfsim
