#include "spinpst/stratification.hpp"

#include <algorithm>
#include <cmath>

namespace spinpst {

Stratification stratify(const SpinNetwork& net) {
    const int n = net.vertex_count();
    const auto adj = net.adjacency();

    std::vector<int> distance(n + 1, -1);
    distance[net.reference()] = 0;
    std::vector<int> current{net.reference()};
    Stratification strat;
    while (!current.empty()) {
        strat.layers.push_back(current);
        std::vector<int> next;
        for (int v : current) {
            for (int w : adj[v]) {
                if (distance[w] < 0) {
                    distance[w] = distance[v] + 1;
                    next.push_back(w);
                }
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        current = std::move(next);
    }
    return strat;
}

LayerVectors layer_vectors(const Stratification& strat, int vertex_count) {
    LayerVectors vectors;
    vectors.reserve(strat.layers.size());
    for (const auto& layer : strat.layers) {
        std::vector<double> phi(vertex_count, 0.0);
        const double amp = 1.0 / std::sqrt(static_cast<double>(layer.size()));
        for (int v : layer) phi[v - 1] = amp;
        vectors.push_back(std::move(phi));
    }
    return vectors;
}

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

}  // namespace

JacobiSequences reduce(const SpinNetwork& net) {
    const HamiltonianMatrix h = hamiltonian(net);
    const Stratification strat = stratify(net);
    const LayerVectors phi = layer_vectors(strat, net.vertex_count());
    const int depth = strat.depth();

    JacobiSequences seq;
    seq.alpha.resize(depth + 1, 0.0);
    seq.omega.resize(depth, 0.0);

    std::vector<double> sqrt_omega(depth + 1, 0.0);  // sqrt_omega[k] pairs layers k-1, k
    for (int k = 0; k <= depth; ++k) {
        const std::vector<double> hk = h.apply(phi[k]);
        seq.alpha[k] = dot(phi[k], hk);
        if (k < depth) sqrt_omega[k + 1] = dot(phi[k + 1], hk);

        std::vector<double> residual = hk;
        for (std::size_t i = 0; i < residual.size(); ++i) {
            if (k > 0) residual[i] -= sqrt_omega[k] * phi[k - 1][i];
            residual[i] -= seq.alpha[k] * phi[k][i];
            if (k < depth) residual[i] -= sqrt_omega[k + 1] * phi[k + 1][i];
        }
        const double hk_norm = norm(hk);
        const double res_norm = norm(residual);
        if (res_norm > 1e-12 * hk_norm) {
            throw QuotientClosureError(k, hk_norm > 0.0 ? res_norm / hk_norm : res_norm);
        }
    }

    for (int k = 1; k <= depth; ++k) {
        if (!(sqrt_omega[k] > 0.0)) throw QuotientClosureError(k, 0.0);
        seq.omega[k - 1] = sqrt_omega[k] * sqrt_omega[k];
    }
    return seq;
}

HamiltonianMatrix quotient_matrix(const JacobiSequences& seq) {
    const int n = seq.depth() + 1;
    HamiltonianMatrix t(n);
    for (int i = 0; i < n; ++i) t.at(i, i) = seq.alpha[i];
    for (int i = 0; i + 1 < n; ++i) t.set_symmetric(i, i + 1, std::sqrt(seq.omega[i]));
    return t;
}

}  // namespace spinpst
