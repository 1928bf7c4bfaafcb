#include "spinpst/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace spinpst {

namespace {

constexpr int kCoarseGridPoints = 4096;
constexpr int kMaxRatioDenominator = 64;

double omega_prefix_rsqrt(const JacobiSequences& seq, int layer) {
    double product = 1.0;
    for (int k = 0; k < layer; ++k) product *= seq.omega[k];
    return 1.0 / std::sqrt(product);
}

/// Best rational approximation p/q of r >= 0 with q <= max_den, by
/// continued-fraction convergents.
std::pair<long long, long long> rational_approx(double r, long long max_den) {
    long long p_prev = 1, q_prev = 0;
    long long p_cur = static_cast<long long>(std::floor(r));
    long long q_cur = 1;
    double frac = r - std::floor(r);
    for (int it = 0; it < 64 && frac > 1e-15; ++it) {
        const double inv = 1.0 / frac;
        const long long digit = static_cast<long long>(std::floor(inv));
        frac = inv - std::floor(inv);
        const long long p_next = digit * p_cur + p_prev;
        const long long q_next = digit * q_cur + q_prev;
        if (q_next > max_den) break;
        p_prev = p_cur;
        q_prev = q_cur;
        p_cur = p_next;
        q_cur = q_next;
    }
    return {p_cur, q_cur};
}

}  // namespace

std::complex<double> amplitude(const JacobiSequences& seq, const SpectralMeasure& measure, int layer, double t) {
    if (layer < 0 || layer > seq.depth()) throw Error("target layer out of range");
    const OrthoPolySystem polys(seq);
    std::complex<double> acc = 0.0;
    for (std::size_t l = 0; l < measure.atoms.size(); ++l) {
        acc += measure.weights[l] * std::polar(1.0, -measure.atoms[l] * t) * polys.evaluate(layer, measure.atoms[l]);
    }
    return omega_prefix_rsqrt(seq, layer) * acc;
}

FidelityTrace trace(const JacobiSequences& seq, const SpectralMeasure& measure, int layer, double t_start,
                    double t_end, int samples) {
    if (!(t_start < t_end)) throw InvalidWindowError("trace window must satisfy t_start < t_end");
    if (samples < 2) throw InvalidWindowError("trace needs at least 2 samples");

    FidelityTrace tr;
    tr.target_layer = layer;
    tr.times.reserve(samples);
    tr.amplitudes.reserve(samples);
    const double step = (t_end - t_start) / (samples - 1);
    for (int i = 0; i < samples; ++i) {
        const double t = i + 1 == samples ? t_end : t_start + step * i;
        tr.times.push_back(t);
        tr.amplitudes.push_back(amplitude(seq, measure, layer, t));
    }
    return tr;
}

PstCertificate pst_search(const JacobiSequences& seq, const SpectralMeasure& measure,
                          std::size_t antipodal_layer_size, double t_max, double tolerance) {
    if (!(t_max > 0.0)) throw InvalidWindowError("search window must be positive");
    if (!(tolerance > 0.0 && tolerance <= 1e-2)) throw Error("PST tolerance must lie in (0, 1e-2]");

    const int d = seq.depth();
    auto probability = [&](double t) {
        const double a = std::abs(amplitude(seq, measure, d, t));
        return a * a;
    };

    // Coarse scan over (0, t_max].
    double best_t = t_max;
    double best_p = probability(t_max);
    const double step = t_max / kCoarseGridPoints;
    for (int i = 1; i < kCoarseGridPoints; ++i) {
        const double t = step * i;
        const double p = probability(t);
        if (p > best_p) {
            best_p = p;
            best_t = t;
        }
    }

    // Golden-section refinement of the bracketing interval.
    double lo = std::max(best_t - step, step * 1e-6);
    double hi = std::min(best_t + step, t_max);
    const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - golden * (hi - lo);
    double x2 = lo + golden * (hi - lo);
    double p1 = probability(x1);
    double p2 = probability(x2);
    while (hi - lo > 1e-12) {
        if (p1 < p2) {
            lo = x1;
            x1 = x2;
            p1 = p2;
            x2 = lo + golden * (hi - lo);
            p2 = probability(x2);
        } else {
            hi = x2;
            x2 = x1;
            p2 = p1;
            x1 = hi - golden * (hi - lo);
            p1 = probability(x1);
        }
    }
    best_t = 0.5 * (lo + hi);

    // The probability is flat to machine precision near its maximum, so
    // golden section alone localizes the time only to ~1e-8. Two symmetric
    // parabolic fits with offsets well above the noise floor recover the
    // vertex to ~1e-10.
    for (double offset : {1e-4, 1e-6}) {
        const double left = probability(best_t - offset);
        const double mid = probability(best_t);
        const double right = probability(best_t + offset);
        const double denom = left - 2.0 * mid + right;
        if (denom < 0.0) {
            double shift = 0.5 * offset * (left - right) / denom;
            shift = std::clamp(shift, -offset, offset);
            const double candidate = best_t + shift;
            if (candidate > 0.0 && candidate <= t_max && probability(candidate) >= mid) best_t = candidate;
        }
    }

    PstCertificate cert;
    cert.time = best_t;
    cert.deficit = 1.0 - std::abs(amplitude(seq, measure, d, best_t));
    cert.achieved = cert.deficit <= tolerance;
    cert.target_is_single_vertex = antipodal_layer_size == 1;
    return cert;
}

std::optional<double> commensurate_period(const SpectralMeasure& measure, double tolerance) {
    const std::size_t n = measure.atoms.size();
    if (n < 2) return std::nullopt;

    std::vector<double> gaps(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) gaps[i] = measure.atoms[i + 1] - measure.atoms[i];
    const double smallest = *std::min_element(gaps.begin(), gaps.end());
    if (!(smallest > 0.0)) return std::nullopt;

    long long den_lcm = 1;
    for (double gap : gaps) {
        const auto [p, q] = rational_approx(gap / smallest, kMaxRatioDenominator);
        if (p <= 0 || q <= 0) return std::nullopt;
        den_lcm = std::lcm(den_lcm, q);
        if (den_lcm > kMaxRatioDenominator * kMaxRatioDenominator) return std::nullopt;
    }

    double g = smallest / static_cast<double>(den_lcm);
    std::vector<long long> multiples(gaps.size());
    long long common = 0;
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        multiples[i] = static_cast<long long>(std::llround(gaps[i] / g));
        if (multiples[i] < 1) return std::nullopt;
        common = std::gcd(common, multiples[i]);
    }
    if (common > 1) {
        g *= static_cast<double>(common);
        for (auto& m : multiples) m /= common;
    }

    // Least-squares refinement of g over the integer multiples, then the
    // tolerance gate on every gap.
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        num += static_cast<double>(multiples[i]) * gaps[i];
        den += static_cast<double>(multiples[i]) * static_cast<double>(multiples[i]);
    }
    g = num / den;
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        if (std::abs(gaps[i] - static_cast<double>(multiples[i]) * g) > tolerance * std::max(1.0, std::abs(gaps[i])))
            return std::nullopt;
    }
    return 2.0 * std::numbers::pi / g;
}

double default_search_window(const SpectralMeasure& measure) {
    if (auto period = commensurate_period(measure, 1e-9)) return *period;
    const std::size_t n = measure.atoms.size();
    if (n < 2) return 2.0 * std::numbers::pi;
    double smallest = measure.atoms[1] - measure.atoms[0];
    for (std::size_t i = 1; i + 1 < n; ++i) smallest = std::min(smallest, measure.atoms[i + 1] - measure.atoms[i]);
    return 4.0 * std::numbers::pi / smallest;
}

}  // namespace spinpst
