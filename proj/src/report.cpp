#include "spinpst/report.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <sstream>

#include "spinpst/oracle.hpp"

namespace spinpst {

std::string format_number(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

namespace {

std::string join_numbers(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ' ';
        out += format_number(values[i]);
    }
    return out;
}

}  // namespace

std::string AnalysisReport::to_text() const {
    std::ostringstream out;
    out << "network: " << (label.empty() ? "custom" : label) << '\n';
    out << "vertices: " << vertex_count << '\n';
    out << "reference: " << reference << '\n';
    out << "scale: " << format_number(scale) << '\n';
    out << "adjacency_mode: " << (adjacency_mode ? "true" : "false") << '\n';
    out << "strata_sizes:";
    for (std::size_t s : strata_sizes) out << ' ' << s;
    out << '\n';
    out << "depth: " << strata_sizes.size() - 1 << '\n';
    out << "omega: " << join_numbers(omega) << '\n';
    out << "alpha: " << join_numbers(alpha) << '\n';
    out << "atoms: " << join_numbers(atoms) << '\n';
    out << "weights: " << join_numbers(weights) << '\n';
    out << "search_window: " << format_number(search_window) << '\n';
    out << "pst_time: " << format_number(pst.time) << '\n';
    out << "pst_deficit: " << format_number(pst.deficit) << '\n';
    out << "pst_achieved: " << (pst.achieved ? "true" : "false") << '\n';
    out << "pst_target_single_vertex: " << (pst.target_is_single_vertex ? "true" : "false") << '\n';
    out << "oracle_residual: " << format_number(oracle_residual) << '\n';
    return out.str();
}

AnalysisReport analyze_network(const SpinNetwork& net, const AnalysisOptions& options) {
    AnalysisReport report;
    report.label = options.label;
    report.vertex_count = net.vertex_count();
    report.reference = net.reference();
    report.scale = net.scale();
    report.adjacency_mode = net.adjacency_mode();

    const Stratification strat = stratify(net);
    for (const auto& layer : strat.layers) report.strata_sizes.push_back(layer.size());

    const JacobiSequences seq = reduce(net);
    report.omega = seq.omega;
    report.alpha = seq.alpha;

    const SpectralMeasure measure = gauss_measure(seq);
    report.atoms = measure.atoms;
    report.weights = measure.weights;

    report.search_window = options.t_max.value_or(default_search_window(measure));
    report.pst = pst_search(seq, measure, strat.layers.back().size(), report.search_window, options.pst_tolerance);

    // Deterministic cross-check of the quotient amplitude against the
    // full-space evolution onto the antipodal layer vector.
    const int d = strat.depth();
    double residual = 0.0;
    const int samples = std::max(options.cross_check_samples, 2);
    for (int i = 0; i < samples; ++i) {
        const double t = report.search_window * i / (samples - 1);
        const std::complex<double> quotient = amplitude(seq, measure, d, t);
        const std::complex<double> full = amplitude_full(net, t, TransferTarget::layer(d));
        residual = std::max(residual, std::abs(quotient - full));
    }
    report.oracle_residual = residual;
    return report;
}

void write_trace_csv(const FidelityTrace& tr, std::ostream& out) {
    out << "t,re_f,im_f,abs_f\n";
    for (std::size_t i = 0; i < tr.times.size(); ++i) {
        out << format_number(tr.times[i]) << ',' << format_number(tr.amplitudes[i].real()) << ','
            << format_number(tr.amplitudes[i].imag()) << ',' << format_number(std::abs(tr.amplitudes[i])) << '\n';
    }
}

}  // namespace spinpst
