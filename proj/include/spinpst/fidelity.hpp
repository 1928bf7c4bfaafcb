#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "spinpst/spectral.hpp"

namespace spinpst {

/// Time-sampled transfer amplitude onto a target layer vector.
struct FidelityTrace {
    std::vector<double> times;
    std::vector<std::complex<double>> amplitudes;
    int target_layer = 0;
};

/// Outcome of a perfect-state-transfer search.
struct PstCertificate {
    double time = 0.0;     // best transfer time found, > 0
    double deficit = 1.0;  // 1 - |f(time)|
    bool achieved = false;
    bool target_is_single_vertex = false;
};

/// Transfer amplitude from the reference layer onto layer k at time t:
///   f_{k,1}(t) = (w_1...w_k)^{-1/2} sum_l A_l exp(-i x_l t) P_k(x_l).
/// The measure must come from the same sequences.
std::complex<double> amplitude(const JacobiSequences& seq, const SpectralMeasure& measure, int layer, double t);

/// Uniform-grid evaluation of the amplitude over [t_start, t_end].
FidelityTrace trace(const JacobiSequences& seq, const SpectralMeasure& measure, int layer, double t_start,
                    double t_end, int samples);

/// Maximize |f_{d,1}|^2 over (0, t_max]: 4096-point coarse scan followed by
/// derivative-free local refinement to 1e-12 time resolution.
/// antipodal_layer_size distinguishes vertex-to-vertex transfer (size 1)
/// from transfer onto a multi-vertex layer state.
PstCertificate pst_search(const JacobiSequences& seq, const SpectralMeasure& measure,
                          std::size_t antipodal_layer_size, double t_max, double tolerance);

/// Fundamental period 2*pi/g of the quotient evolution when all atom gaps
/// are integer multiples of a common g (gap ratios approximated by
/// rationals with denominators <= 64); empty for incommensurate spectra.
std::optional<double> commensurate_period(const SpectralMeasure& measure, double tolerance);

/// Default PST search window: the commensurate period when one exists,
/// otherwise 4*pi over the smallest positive atom gap.
double default_search_window(const SpectralMeasure& measure);

}  // namespace spinpst
