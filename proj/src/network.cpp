#include "spinpst/network.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <queue>
#include <set>
#include <string>

namespace spinpst {

QuotientClosureError::QuotientClosureError(int layer, double relative_residual)
    : Error("quotient closure violated at layer " + std::to_string(layer) +
            " (relative residual " + std::to_string(relative_residual) +
            "): network is not layer-regular from this reference vertex"),
      layer_(layer),
      residual_(relative_residual) {}

std::vector<double> HamiltonianMatrix::apply(std::span<const double> x) const {
    std::vector<double> y(order_, 0.0);
    for (int i = 0; i < order_; ++i) {
        double acc = 0.0;
        const double* row = entries_.data() + static_cast<std::size_t>(i) * order_;
        for (int j = 0; j < order_; ++j) acc += row[j] * x[j];
        y[i] = acc;
    }
    return y;
}

double HamiltonianMatrix::max_abs() const {
    double m = 0.0;
    for (double v : entries_) m = std::max(m, std::abs(v));
    return m;
}

double HamiltonianMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : entries_) s += v * v;
    return std::sqrt(s);
}

SpinNetwork SpinNetwork::as_adjacency_mode() const {
    return from_edge_list(vertex_count_, edges_, reference_, scale_, true);
}

SpinNetwork SpinNetwork::with_reference(int reference) const {
    return from_edge_list(vertex_count_, edges_, reference, scale_, adjacency_mode_);
}

SpinNetwork SpinNetwork::with_scale(double scale) const {
    return from_edge_list(vertex_count_, edges_, reference_, scale, adjacency_mode_);
}

std::vector<std::vector<int>> SpinNetwork::adjacency() const {
    std::vector<std::vector<int>> adj(vertex_count_ + 1);
    for (const Edge& e : edges_) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    return adj;
}

SpinNetwork from_edge_list(int vertex_count, const std::vector<Edge>& edges, int reference, double scale,
                           bool adjacency_mode) {
    if (vertex_count < 1) throw InvalidEdgeError("vertex count must be positive");
    if (reference < 1 || reference > vertex_count)
        throw InvalidEdgeError("reference vertex " + std::to_string(reference) + " out of range 1.." +
                               std::to_string(vertex_count));
    if (!(scale > 0.0)) throw InvalidEdgeError("scale must be positive");

    SpinNetwork net;
    net.vertex_count_ = vertex_count;
    net.reference_ = reference;
    net.scale_ = scale;
    net.adjacency_mode_ = adjacency_mode;
    net.edges_.reserve(edges.size());

    std::set<std::pair<int, int>> seen;
    for (const Edge& e : edges) {
        Edge n{std::min(e.a, e.b), std::max(e.a, e.b), e.coupling};
        if (n.a < 1 || n.b > vertex_count)
            throw InvalidEdgeError("edge (" + std::to_string(e.a) + "," + std::to_string(e.b) +
                                   ") references a vertex outside 1.." + std::to_string(vertex_count));
        if (n.a == n.b) throw InvalidEdgeError("self-loop at vertex " + std::to_string(n.a));
        if (!(n.coupling > 0.0))
            throw InvalidEdgeError("non-positive coupling on edge (" + std::to_string(n.a) + "," +
                                   std::to_string(n.b) + ")");
        if (!seen.insert({n.a, n.b}).second)
            throw InvalidEdgeError("duplicate edge (" + std::to_string(n.a) + "," + std::to_string(n.b) + ")");
        net.edges_.push_back(n);
    }

    // Connectivity from the reference vertex.
    std::vector<char> visited(vertex_count + 1, 0);
    std::queue<int> frontier;
    visited[reference] = 1;
    frontier.push(reference);
    int reached = 1;
    const auto adj = net.adjacency();
    while (!frontier.empty()) {
        int v = frontier.front();
        frontier.pop();
        for (int w : adj[v]) {
            if (!visited[w]) {
                visited[w] = 1;
                ++reached;
                frontier.push(w);
            }
        }
    }
    if (reached != vertex_count) {
        for (int v = 1; v <= vertex_count; ++v) {
            if (!visited[v])
                throw DisconnectedGraphError("vertex " + std::to_string(v) + " unreachable from reference " +
                                             std::to_string(reference));
        }
    }
    return net;
}

SpinNetwork build_hypercube_column(int dimension) {
    if (dimension < 1) throw InvalidEdgeError("hypercube dimension must be >= 1");
    const int n = 1 << dimension;

    // Number bitmasks column by column (Hamming weight), ascending mask
    // within a column; vertex ids are 1-based.
    std::vector<int> id_of_mask(n, 0);
    int next = 1;
    for (int weight = 0; weight <= dimension; ++weight) {
        for (int mask = 0; mask < n; ++mask) {
            if (std::popcount(static_cast<unsigned>(mask)) == weight) id_of_mask[mask] = next++;
        }
    }

    std::vector<Edge> edges;
    for (int mask = 0; mask < n; ++mask) {
        for (int bit = 0; bit < dimension; ++bit) {
            int other = mask | (1 << bit);
            if (other != mask) edges.push_back({id_of_mask[mask], id_of_mask[other], 1.0});
        }
    }
    return from_edge_list(n, edges);
}

SpinNetwork build_w_network() {
    std::vector<Edge> edges;
    for (int v = 2; v <= 7; ++v) {
        edges.push_back({1, v, 1.0});
        edges.push_back({v, 8, 1.0});
    }
    return from_edge_list(8, edges);
}

SpinNetwork build_binary_tree_unweighted() {
    std::vector<Edge> edges{{1, 2, 1.0}, {1, 3, 1.0}, {2, 4, 1.0}, {2, 5, 1.0}, {3, 6, 1.0}, {3, 7, 1.0}};
    return from_edge_list(7, edges);
}

SpinNetwork build_engineered_chain(int length) {
    if (length < 2) throw InvalidEdgeError("engineered chain needs at least 2 vertices");
    std::vector<Edge> edges;
    for (int k = 1; k < length; ++k) {
        edges.push_back({k, k + 1, std::sqrt(static_cast<double>(k) * (length - k))});
    }
    return from_edge_list(length, edges);
}

SpinNetwork build_star_extended() {
    std::vector<Edge> edges{{1, 2, std::sqrt(3.0)}, {2, 3, 1.0}, {2, 4, 1.0}, {2, 5, 1.0}};
    return from_edge_list(5, edges);
}

SpinNetwork build_circulant6() {
    // Outer couplings sqrt(3/2): the quotient off-diagonals come out as
    // (sqrt(3)/2, 1, sqrt(3)/2) and transfer completes at t = pi.
    const double outer = std::sqrt(1.5);
    std::vector<Edge> edges{{1, 2, outer}, {1, 3, outer}, {2, 4, 2.0}, {3, 5, 2.0}, {4, 6, outer}, {5, 6, outer}};
    return from_edge_list(6, edges);
}

SpinNetwork build_binary_tree_modulated() {
    const double s3 = std::sqrt(3.0);
    const double s2 = std::sqrt(2.0);
    std::vector<Edge> edges{{1, 2, 2.0},  {2, 3, s3},   {2, 4, s3},   {3, 5, s3},   {3, 6, s3},
                            {4, 7, s3},   {4, 8, s3},   {5, 9, s2},   {5, 10, s2},  {6, 11, s2},
                            {6, 12, s2},  {7, 13, s2},  {7, 14, s2},  {8, 15, s2},  {8, 16, s2}};
    return from_edge_list(16, edges);
}

HamiltonianMatrix hamiltonian(const SpinNetwork& net) {
    HamiltonianMatrix h(net.vertex_count());
    const double factor = net.adjacency_mode() ? net.scale() : net.scale() / 2.0;
    for (const Edge& e : net.edges()) {
        h.set_symmetric(e.a - 1, e.b - 1, factor * e.coupling);
    }
    return h;
}

}  // namespace spinpst
