#pragma once

#include <complex>
#include <vector>

#include "spinpst/stratification.hpp"

namespace spinpst {

/// Atoms and Gauss weights of the quotient Hamiltonian's spectral
/// distribution: a probability measure supported on d+1 distinct points.
struct SpectralMeasure {
    std::vector<double> atoms;    // ascending
    std::vector<double> weights;  // positive, summing to 1
};

/// Monic orthogonal polynomials attached to a Jacobi sequence pair,
/// evaluated by the three-term recurrence
///   P_0 = 1,  P_1 = x - a_1,  P_{n+1} = (x - a_{n+1}) P_n - w_n P_{n-1},
/// plus the first-associated family with shifted coefficients.
class OrthoPolySystem {
public:
    explicit OrthoPolySystem(JacobiSequences seq) : seq_(std::move(seq)) {}

    /// Highest admissible index for evaluate(), d+1.
    int degree_bound() const noexcept { return seq_.depth() + 1; }

    double evaluate(int k, double x) const;
    std::complex<double> evaluate(int k, std::complex<double> z) const;

    /// First-associated polynomial P_k^(1); admissible k up to d.
    double evaluate_associated(int k, double x) const;
    std::complex<double> evaluate_associated(int k, std::complex<double> z) const;

    const JacobiSequences& sequences() const noexcept { return seq_; }

private:
    JacobiSequences seq_;
};

/// Spectral measure of the quotient matrix: atoms are its eigenvalues
/// (the roots of P_{d+1}), weights the squared first components of the
/// normalized eigenvectors. Throws DegenerateSequenceError when some
/// omega entry is non-positive.
SpectralMeasure gauss_measure(const JacobiSequences& seq);

/// Stieltjes transform as the finite continued fraction
/// 1/(z - a_1 - w_1/(z - a_2 - ...)), evaluated bottom-up. Throws
/// PoleProximityError within 1e-10 of an atom.
std::complex<double> stieltjes_cf(const JacobiSequences& seq, std::complex<double> z);

/// Stieltjes transform as the partial-fraction sum over atoms,
/// sum_l A_l / (z - x_l). Throws PoleProximityError within 1e-10 of an
/// atom.
std::complex<double> stieltjes_pf(const SpectralMeasure& measure, std::complex<double> z);

/// m-th moment of the measure, sum_l A_l x_l^m.
double moment(const SpectralMeasure& measure, int order);

}  // namespace spinpst
