#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "spinpst/fidelity.hpp"
#include "spinpst/network.hpp"
#include "spinpst/spectral.hpp"
#include "spinpst/stratification.hpp"

namespace spinpst {

struct AnalysisOptions {
    std::optional<double> t_max;     // default: commensurate period / gap heuristic
    double pst_tolerance = 1e-9;
    int cross_check_samples = 16;    // deterministic oracle-agreement grid
    std::string label;               // echoed back in the report
};

/// Aggregate result of the stratify -> reduce -> measure -> PST pipeline
/// plus the full-space cross-check.
struct AnalysisReport {
    std::string label;
    int vertex_count = 0;
    int reference = 1;
    double scale = 1.0;
    bool adjacency_mode = false;
    std::vector<std::size_t> strata_sizes;
    std::vector<double> omega;
    std::vector<double> alpha;
    std::vector<double> atoms;
    std::vector<double> weights;
    double search_window = 0.0;
    PstCertificate pst;
    double oracle_residual = 0.0;

    /// Deterministic text form: stable field order, 12 significant digits.
    std::string to_text() const;
};

/// Run the full analysis pipeline. Propagates QuotientClosureError when the
/// network is not layer-regular from its reference vertex.
AnalysisReport analyze_network(const SpinNetwork& net, const AnalysisOptions& options = {});

/// Write a trace as CSV: header `t,re_f,im_f,abs_f`, one newline-terminated
/// row per sample, 12 significant digits, locale-independent.
void write_trace_csv(const FidelityTrace& tr, std::ostream& out);

/// Format a double with 12 significant digits (%.12g).
std::string format_number(double value);

}  // namespace spinpst
