#include "spinpst/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "spinpst/stratification.hpp"

namespace spinpst {

namespace {

constexpr int kMaxOrder = 4096;
constexpr int kSweepLimit = 100;

double offdiagonal_mass(const std::vector<double>& a, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double v = a[static_cast<std::size_t>(i) * n + j];
            s += v * v;
        }
    }
    return std::sqrt(2.0 * s);
}

}  // namespace

EigenDecomposition sym_eigen(const HamiltonianMatrix& h) {
    const int n = h.order();
    if (n < 1 || n > kMaxOrder) throw Error("matrix order out of range 1.." + std::to_string(kMaxOrder));

    std::vector<double> a(h.data().begin(), h.data().end());
    std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;

    auto at = [n](std::vector<double>& m, int i, int j) -> double& {
        return m[static_cast<std::size_t>(i) * n + j];
    };

    const double stop = 1e-14 * h.frobenius_norm();
    int sweep = 0;
    // The negated comparison keeps NaN input looping into the sweep limit.
    while (!(offdiagonal_mass(a, n) <= stop)) {
        if (++sweep > kSweepLimit) throw ConvergenceError("plane-rotation sweep limit exceeded");
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(a, p, q);
                if (apq == 0.0) continue;
                const double tau = (at(a, q, q) - at(a, p, p)) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                at(a, p, p) -= t * apq;
                at(a, q, q) += t * apq;
                at(a, p, q) = 0.0;
                at(a, q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = at(a, k, p);
                    const double akq = at(a, k, q);
                    at(a, k, p) = c * akp - s * akq;
                    at(a, p, k) = at(a, k, p);
                    at(a, k, q) = s * akp + c * akq;
                    at(a, q, k) = at(a, k, q);
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = at(v, k, p);
                    const double vkq = at(v, k, q);
                    at(v, k, p) = c * vkp - s * vkq;
                    at(v, k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return a[static_cast<std::size_t>(x) * n + x] < a[static_cast<std::size_t>(y) * n + y]; });

    EigenDecomposition eig;
    eig.order = n;
    eig.eigenvalues.resize(n);
    eig.eigenvectors.resize(static_cast<std::size_t>(n) * n);
    for (int col = 0; col < n; ++col) {
        const int src = order[col];
        eig.eigenvalues[col] = a[static_cast<std::size_t>(src) * n + src];
        for (int row = 0; row < n; ++row) {
            eig.eigenvectors[static_cast<std::size_t>(row) * n + col] = v[static_cast<std::size_t>(row) * n + src];
        }
    }
    return eig;
}

std::vector<std::complex<double>> evolve(const HamiltonianMatrix& h, std::span<const std::complex<double>> source,
                                         double t) {
    const int n = h.order();
    if (static_cast<int>(source.size()) != n) throw Error("state dimension does not match matrix order");
    const EigenDecomposition eig = sym_eigen(h);

    std::vector<std::complex<double>> modal(n, 0.0);
    for (int j = 0; j < n; ++j) {
        std::complex<double> acc = 0.0;
        for (int i = 0; i < n; ++i) acc += eig.vector_entry(i, j) * source[i];
        modal[j] = acc * std::polar(1.0, -eig.eigenvalues[j] * t);
    }
    std::vector<std::complex<double>> out(n, 0.0);
    for (int i = 0; i < n; ++i) {
        std::complex<double> acc = 0.0;
        for (int j = 0; j < n; ++j) acc += eig.vector_entry(i, j) * modal[j];
        out[i] = acc;
    }
    return out;
}

std::complex<double> amplitude_full(const SpinNetwork& net, double t, TransferTarget target) {
    const int n = net.vertex_count();
    std::vector<std::complex<double>> source(n, 0.0);
    source[net.reference() - 1] = 1.0;
    const auto state = evolve(hamiltonian(net), source, t);

    if (target.kind == TransferTarget::Kind::vertex) {
        if (target.index < 1 || target.index > n)
            throw InvalidTargetError("target vertex " + std::to_string(target.index) + " out of range");
        return state[target.index - 1];
    }
    const Stratification strat = stratify(net);
    if (target.index < 0 || target.index > strat.depth())
        throw InvalidTargetError("target layer " + std::to_string(target.index) + " out of range");
    const auto phi = layer_vectors(strat, n);
    std::complex<double> acc = 0.0;
    for (int i = 0; i < n; ++i) acc += phi[target.index][i] * state[i];
    return acc;
}

std::uint64_t walk_count(const SpinNetwork& net, int steps) {
    if (!net.adjacency_mode()) throw ModeMismatchError("walk counting requires an adjacency-mode network");
    for (const Edge& e : net.edges()) {
        if (e.coupling != 1.0) throw ModeMismatchError("walk counting requires unit couplings");
    }
    if (steps < 0 || steps > 20) throw ModeMismatchError("walk length must be in 0..20");

    const auto adj = net.adjacency();
    const int n = net.vertex_count();
    std::vector<std::uint64_t> w(n + 1, 0);
    w[net.reference()] = 1;
    for (int s = 0; s < steps; ++s) {
        std::vector<std::uint64_t> next(n + 1, 0);
        for (int v = 1; v <= n; ++v) {
            if (w[v] == 0) continue;
            for (int u : adj[v]) next[u] += w[v];
        }
        w = std::move(next);
    }
    return w[net.reference()];
}

}  // namespace spinpst
