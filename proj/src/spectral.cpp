#include "spinpst/spectral.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "spinpst/oracle.hpp"

namespace spinpst {

namespace {

constexpr double kPoleDistance = 1e-10;

template <class Scalar>
Scalar poly_value(const JacobiSequences& seq, int k, Scalar x, int shift) {
    // shift 0 evaluates P_k, shift 1 the first-associated family (indices
    // of both coefficient sequences advanced by one).
    Scalar prev = Scalar(0.0);
    Scalar cur = Scalar(1.0);
    for (int n = 0; n < k; ++n) {
        const double alpha = seq.alpha[n + shift];
        const double omega = n > 0 ? seq.omega[n - 1 + shift] : 0.0;
        Scalar next = (x - alpha) * cur - omega * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

void check_pole_distance(const std::vector<double>& atoms, std::complex<double> z) {
    for (double x : atoms) {
        if (std::abs(z - std::complex<double>(x, 0.0)) <= kPoleDistance)
            throw PoleProximityError("evaluation point within 1e-10 of spectral atom " + std::to_string(x));
    }
}

}  // namespace

double OrthoPolySystem::evaluate(int k, double x) const {
    if (k < 0 || k > degree_bound()) throw Error("polynomial index out of range");
    return poly_value(seq_, k, x, 0);
}

std::complex<double> OrthoPolySystem::evaluate(int k, std::complex<double> z) const {
    if (k < 0 || k > degree_bound()) throw Error("polynomial index out of range");
    return poly_value(seq_, k, z, 0);
}

double OrthoPolySystem::evaluate_associated(int k, double x) const {
    if (k < 0 || k > seq_.depth()) throw Error("associated polynomial index out of range");
    return poly_value(seq_, k, x, 1);
}

std::complex<double> OrthoPolySystem::evaluate_associated(int k, std::complex<double> z) const {
    if (k < 0 || k > seq_.depth()) throw Error("associated polynomial index out of range");
    return poly_value(seq_, k, z, 1);
}

SpectralMeasure gauss_measure(const JacobiSequences& seq) {
    for (double w : seq.omega) {
        if (!(w > 0.0)) throw DegenerateSequenceError("omega entries must be positive");
    }
    const EigenDecomposition eig = sym_eigen(quotient_matrix(seq));

    SpectralMeasure measure;
    measure.atoms = eig.eigenvalues;
    measure.weights.resize(eig.order);
    for (int l = 0; l < eig.order; ++l) {
        const double first = eig.vector_entry(0, l);
        measure.weights[l] = first * first;
        if (!(measure.weights[l] > 0.0)) throw Error("non-positive Gauss weight: eigensolver failure");
    }
    return measure;
}

std::complex<double> stieltjes_cf(const JacobiSequences& seq, std::complex<double> z) {
    check_pole_distance(gauss_measure(seq).atoms, z);

    const int d = seq.depth();
    std::complex<double> acc = z - seq.alpha[d];
    for (int k = d; k >= 1; --k) {
        if (acc == 0.0) acc = std::numeric_limits<double>::min();
        acc = z - seq.alpha[k - 1] - seq.omega[k - 1] / acc;
    }
    if (acc == 0.0) acc = std::numeric_limits<double>::min();
    return 1.0 / acc;
}

std::complex<double> stieltjes_pf(const SpectralMeasure& measure, std::complex<double> z) {
    check_pole_distance(measure.atoms, z);

    std::complex<double> acc = 0.0;
    for (std::size_t l = 0; l < measure.atoms.size(); ++l) {
        acc += measure.weights[l] / (z - measure.atoms[l]);
    }
    return acc;
}

double moment(const SpectralMeasure& measure, int order) {
    if (order < 0) throw Error("moment order must be non-negative");
    double acc = 0.0;
    for (std::size_t l = 0; l < measure.atoms.size(); ++l) {
        double power = 1.0;
        for (int m = 0; m < order; ++m) power *= measure.atoms[l];
        acc += measure.weights[l] * power;
    }
    return acc;
}

}  // namespace spinpst
