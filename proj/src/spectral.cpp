#include "selfsim/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "selfsim/errors.hpp"

namespace selfsim {

namespace {

bool strongly_connected(const IntMatrix& s) {
    const std::size_t l = s.size();
    auto reach = [&](bool forward) {
        std::vector<char> seen(l, 0);
        std::vector<std::size_t> stack{0};
        seen[0] = 1;
        std::size_t count = 1;
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < l; ++j) {
                const auto entry = forward ? s[i][j] : s[j][i];
                if (entry > 0 && !seen[j]) {
                    seen[j] = 1;
                    ++count;
                    stack.push_back(j);
                }
            }
        }
        return count == l;
    };
    return reach(true) && reach(false);
}

double divisor_power_iteration(const IntMatrix& s, const std::vector<std::int64_t>* sizes, double tol) {
    const std::size_t l = s.size();
    if (l == 0) throw InvalidArgument("empty divisor matrix");
    for (const auto& row : s) {
        if (row.size() != l) throw InvalidArgument("divisor matrix is not square");
        for (auto v : row) {
            if (v < 0) throw InvalidArgument("divisor matrix has a negative entry");
        }
    }
    if (!strongly_connected(s)) throw InvalidDivisorMatrix("divisor matrix is reducible");

    // With cell sizes D the matrix is self-adjoint for <a,b>_D = sum d_i a_i b_i, which
    // makes the weighted Rayleigh quotient second-order accurate.
    std::vector<double> weight(l, 1.0);
    bool self_adjoint = sizes != nullptr && sizes->size() == l;
    if (self_adjoint) {
        for (std::size_t i = 0; i < l && self_adjoint; ++i) {
            for (std::size_t j = 0; j < l; ++j) {
                if ((*sizes)[i] * s[i][j] != (*sizes)[j] * s[j][i]) {
                    self_adjoint = false;
                    break;
                }
            }
        }
        if (self_adjoint) {
            for (std::size_t i = 0; i < l; ++i) weight[i] = static_cast<double>((*sizes)[i]);
        }
    }

    std::vector<double> x(l, 1.0 / static_cast<double>(l));
    std::vector<double> sx(l);
    double previous = std::numeric_limits<double>::infinity();
    for (long it = 0; it < kMaxPowerIterations; ++it) {
        for (std::size_t i = 0; i < l; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < l; ++j) acc += static_cast<double>(s[i][j]) * x[j];
            sx[i] = acc;
        }
        double lambda;
        if (self_adjoint) {
            double num = 0.0;
            double den = 0.0;
            for (std::size_t i = 0; i < l; ++i) {
                num += weight[i] * x[i] * sx[i];
                den += weight[i] * x[i] * x[i];
            }
            lambda = num / den;
        } else {
            lambda = std::accumulate(sx.begin(), sx.end(), 0.0) / std::accumulate(x.begin(), x.end(), 0.0);
        }
        double residual = 0.0;
        for (std::size_t i = 0; i < l; ++i) residual = std::max(residual, std::fabs(sx[i] - lambda * x[i]));
        if (std::fabs(lambda - previous) < tol && residual < tol) return lambda;
        previous = lambda;
        double total = 0.0;
        for (std::size_t i = 0; i < l; ++i) {
            sx[i] += x[i];
            total += sx[i];
        }
        for (std::size_t i = 0; i < l; ++i) x[i] = sx[i] / total;
    }
    throw ConvergenceError("divisor power iteration did not converge");
}

}  // namespace

PerronData spectral_radius_adjacency(const Graph& g, double tol, const Partition* cells) {
    const int n = g.order();
    if (n == 0) throw InvalidArgument("spectral radius of the empty graph is undefined");
    if (!is_connected(g)) throw DisconnectedError("principal eigenvector requires a connected graph");
    if (cells && cells->vertex_count() != n) throw InvalidArgument("partition does not match the graph order");

    const auto un = static_cast<std::size_t>(n);
    std::vector<double> x(un, 1.0 / n);
    std::vector<double> ax(un);
    PerronData out;
    double previous = std::numeric_limits<double>::infinity();
    bool converged = false;
    for (long it = 0; it < kMaxPowerIterations; ++it) {
        double xx = 0.0;
        double xax = 0.0;
        for (std::size_t v = 0; v < un; ++v) {
            double acc = 0.0;
            for (Vertex w : g.neighbors(static_cast<Vertex>(v))) acc += x[static_cast<std::size_t>(w)];
            ax[v] = acc;
            xx += x[v] * x[v];
            xax += x[v] * acc;
        }
        const double rq = xax / xx;
        double residual = 0.0;
        double peak = 0.0;
        for (std::size_t v = 0; v < un; ++v) {
            residual = std::max(residual, std::fabs(ax[v] - rq * x[v]));
            peak = std::max(peak, x[v]);
        }
        out.iterations = it;
        // relative to the largest entry, so the tolerance does not loosen as n grows
        if (std::fabs(rq - previous) < tol && residual < tol * peak) {
            out.rho = rq;
            converged = true;
            break;
        }
        previous = rq;
        // shift by the identity: A + I has no eigenvalue of modulus rho + 1 other than rho + 1
        double total = 0.0;
        for (std::size_t v = 0; v < un; ++v) {
            ax[v] += x[v];
            total += ax[v];
        }
        for (std::size_t v = 0; v < un; ++v) x[v] = ax[v] / total;
    }
    if (!converged) throw ConvergenceError("adjacency power iteration did not converge");

    out.x = std::move(x);
    auto [lo, hi] = std::minmax_element(out.x.begin(), out.x.end());
    out.gamma = *hi / *lo;
    if (cells) {
        for (const auto& cell : cells->cells()) {
            double sum = 0.0;
            for (Vertex v : cell) sum += out.x[static_cast<std::size_t>(v)];
            out.alpha.push_back(sum / static_cast<double>(cell.size()));
        }
    }
    return out;
}

double spectral_radius_divisor(const DivisorMatrix& s, double tol) {
    return divisor_power_iteration(s.s, &s.sizes, tol);
}

double spectral_radius_divisor(const IntMatrix& s, double tol) {
    return divisor_power_iteration(s, nullptr, tol);
}

double principal_ratio(const Graph& g) {
    return spectral_radius_adjacency(g).gamma;
}

OrbitConstancyReport check_orbit_constancy(const Graph& g, const Partition& cells, double tol) {
    const DivisorMatrix s = divisor_matrix(g, cells);
    const PerronData perron = spectral_radius_adjacency(g, kDefaultSpectralTol, &cells);
    return check_orbit_constancy(perron, s, cells, tol);
}

OrbitConstancyReport check_orbit_constancy(const PerronData& perron, const DivisorMatrix& s, const Partition& cells,
                                           double tol) {
    if (perron.alpha.size() != cells.cell_count() || s.ell() != cells.cell_count()) {
        throw InvalidArgument("eigenvector data, divisor matrix and partition disagree on the cell count");
    }
    OrbitConstancyReport report;
    report.rho = perron.rho;
    report.alpha = perron.alpha;
    for (std::size_t i = 0; i < cells.cell_count(); ++i) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (Vertex v : cells.cell(i)) {
            lo = std::min(lo, perron.x[static_cast<std::size_t>(v)]);
            hi = std::max(hi, perron.x[static_cast<std::size_t>(v)]);
        }
        report.spreads.push_back(hi - lo);
        if (hi - lo >= tol) {
            report.violations.push_back("cell " + std::to_string(i) + ": eigenvector spread " + std::to_string(hi - lo));
        }
    }
    for (std::size_t i = 0; i < s.ell(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < s.ell(); ++j) acc += static_cast<double>(s.s[i][j]) * perron.alpha[j];
        report.eigen_residual = std::max(report.eigen_residual, std::fabs(acc - perron.rho * perron.alpha[i]));
    }
    if (report.eigen_residual >= tol) {
        report.violations.push_back("divisor eigen-equation residual " + std::to_string(report.eigen_residual));
    }
    return report;
}

}  // namespace selfsim
