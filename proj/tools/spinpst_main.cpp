// Command-line front end: analyze spin networks, dump fidelity traces, and
// verify quotient-space results against the full-space evolution.

#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "spinpst/document.hpp"
#include "spinpst/fidelity.hpp"
#include "spinpst/network.hpp"
#include "spinpst/oracle.hpp"
#include "spinpst/report.hpp"
#include "spinpst/spectral.hpp"
#include "spinpst/stratification.hpp"

namespace {

using namespace spinpst;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitClosureViolation = 2;

SpinNetwork resolve_demo(const std::string& name) {
    const auto colon = name.find(':');
    const std::string head = name.substr(0, colon);
    if (colon != std::string::npos) {
        const int value = std::stoi(name.substr(colon + 1));
        if (head == "chain") return build_engineered_chain(value);
        if (head == "hypercube") return build_hypercube_column(value);
        throw Error("unknown demo family '" + head + "'");
    }
    if (name == "w-network") return build_w_network();
    if (name == "tree7") return build_binary_tree_unweighted();
    if (name == "tree16") return build_binary_tree_modulated();
    if (name == "star5") return build_star_extended();
    if (name == "circulant6") return build_circulant6();
    throw Error("unknown demo '" + name + "'; available: chain:N, hypercube:d, w-network, tree7, tree16, star5, circulant6");
}

struct NetworkSelection {
    std::string demo;
    std::string input;
    std::optional<int> reference;
    std::optional<double> scale;

    SpinNetwork load() const {
        if (demo.empty() == input.empty()) throw Error("exactly one of --demo or --input is required");
        SpinNetwork net = demo.empty() ? load_network_document(input) : resolve_demo(demo);
        if (reference) net = net.with_reference(*reference);
        if (scale) net = net.with_scale(*scale);
        return net;
    }

    std::string label() const { return demo.empty() ? input : demo; }
};

void add_network_flags(CLI::App* cmd, NetworkSelection& sel) {
    cmd->add_option("--demo", sel.demo, "built-in network (chain:N, hypercube:d, w-network, tree7, tree16, star5, circulant6)");
    cmd->add_option("--input", sel.input, "path to a network document");
    cmd->add_option("--reference", sel.reference, "override the reference vertex");
    cmd->add_option("--scale", sel.scale, "override the global energy scale");
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write output file: " + out_path);
    out << text;
}

int run_analyze(const NetworkSelection& sel, std::optional<double> t_max, double tolerance,
                const std::string& out_path) {
    const SpinNetwork net = sel.load();
    AnalysisOptions options;
    options.t_max = t_max;
    options.pst_tolerance = tolerance;
    options.label = sel.label();
    try {
        const AnalysisReport report = analyze_network(net, options);
        write_output(report.to_text(), out_path);
    } catch (const QuotientClosureError& e) {
        std::cerr << "error: QuotientClosureViolation: " << e.what() << "\n";
        // The full-space oracle does not need layer regularity; show that
        // the evolution itself is healthy before failing.
        const Stratification strat = stratify(net);
        const std::complex<double> f = amplitude_full(net, 1.0, TransferTarget::layer(strat.depth()));
        std::vector<std::complex<double>> source(net.vertex_count(), 0.0);
        source[net.reference() - 1] = 1.0;
        const auto state = evolve(hamiltonian(net), source, 1.0);
        double norm = 0.0;
        for (const auto& amp : state) norm += std::norm(amp);
        std::ostringstream out;
        out << "quotient_reduction: failed\n";
        out << "oracle_evolution: ok\n";
        out << "oracle_unitarity_error: " << format_number(std::abs(norm - 1.0)) << "\n";
        out << "oracle_layer_amplitude_abs: " << format_number(std::abs(f)) << "\n";
        write_output(out.str(), out_path);
        return kExitClosureViolation;
    }
    return kExitOk;
}

int run_trace(const NetworkSelection& sel, double t_start, double t_end, int samples, const std::string& out_path) {
    const SpinNetwork net = sel.load();
    const JacobiSequences seq = reduce(net);
    const SpectralMeasure measure = gauss_measure(seq);
    const FidelityTrace tr = trace(seq, measure, seq.depth(), t_start, t_end, samples);

    std::ostringstream out;
    write_trace_csv(tr, out);
    write_output(out.str(), out_path);
    return kExitOk;
}

int run_verify(const NetworkSelection& sel, int trials, std::uint64_t seed, std::optional<double> t_max) {
    const SpinNetwork net = sel.load();
    const Stratification strat = stratify(net);
    const JacobiSequences seq = reduce(net);
    const SpectralMeasure measure = gauss_measure(seq);
    const int d = seq.depth();
    const double window = t_max.value_or(default_search_window(measure));
    if (!(window > 0.0)) throw InvalidWindowError("sampling window must be positive");

    // splitmix64 keeps the sampled times reproducible across platforms.
    std::uint64_t state = seed;
    auto next_time = [&]() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return window * static_cast<double>(z >> 11) / 9007199254740992.0;
    };

    double worst_residual = 0.0;
    double worst_time = 0.0;
    for (int i = 0; i < trials; ++i) {
        const double t = next_time();
        const double residual = std::abs(amplitude(seq, measure, d, t) - amplitude_full(net, t, TransferTarget::layer(d)));
        if (residual > worst_residual) {
            worst_residual = residual;
            worst_time = t;
        }
    }

    std::cout << "network: " << sel.label() << "\n";
    std::cout << "target_layer: " << d << "\n";
    std::cout << "target_layer_size: " << strat.layers.back().size() << "\n";
    std::cout << "trials: " << trials << "\n";
    std::cout << "max_residual: " << format_number(worst_residual) << "\n";
    if (worst_residual > 1e-9) {
        std::cerr << "error: VerificationFailure: worst (t, residual) = (" << format_number(worst_time) << ", "
                  << format_number(worst_residual) << ")\n";
        return kExitError;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Perfect-state-transfer analysis for spin networks"};
    app.require_subcommand(1);

    NetworkSelection analyze_sel;
    std::optional<double> analyze_t_max;
    double analyze_tolerance = 1e-9;
    std::string analyze_out;
    CLI::App* analyze = app.add_subcommand("analyze", "stratify, reduce, and certify state transfer");
    add_network_flags(analyze, analyze_sel);
    analyze->add_option("--t-max", analyze_t_max, "PST search window (default: spectral period)");
    analyze->add_option("--tolerance", analyze_tolerance, "PST deficit tolerance")->check(CLI::Range(1e-15, 1e-2));
    analyze->add_option("--out", analyze_out, "write the report to a file");

    NetworkSelection trace_sel;
    double trace_start = 0.0;
    double trace_end = 0.0;
    int trace_samples = 0;
    std::string trace_out;
    CLI::App* trace_cmd = app.add_subcommand("trace", "sample the transfer amplitude over a time grid");
    add_network_flags(trace_cmd, trace_sel);
    trace_cmd->add_option("--t-start", trace_start, "start of the time grid")->capture_default_str();
    trace_cmd->add_option("--t-end", trace_end, "end of the time grid")->required();
    trace_cmd->add_option("--samples", trace_samples, "number of grid points")->required()->check(CLI::Range(2, 100000000));
    trace_cmd->add_option("--out", trace_out, "CSV output path (default: stdout)");

    NetworkSelection verify_sel;
    int verify_trials = 50;
    std::uint64_t verify_seed = 1;
    std::optional<double> verify_t_max;
    CLI::App* verify = app.add_subcommand("verify", "compare quotient and full-space amplitudes at random times");
    add_network_flags(verify, verify_sel);
    verify->add_option("--trials", verify_trials, "number of sample times")->check(CLI::Range(1, 1000000));
    verify->add_option("--seed", verify_seed, "seed for the sample times");
    verify->add_option("--t-max", verify_t_max, "sampling window (default: spectral period)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (analyze->parsed()) return run_analyze(analyze_sel, analyze_t_max, analyze_tolerance, analyze_out);
        if (trace_cmd->parsed()) return run_trace(trace_sel, trace_start, trace_end, trace_samples, trace_out);
        return run_verify(verify_sel, verify_trials, verify_seed, verify_t_max);
    } catch (const QuotientClosureError& e) {
        std::cerr << "error: QuotientClosureViolation: " << e.what() << "\n";
        return kExitClosureViolation;
    } catch (const DocumentError& e) {
        std::cerr << "error: DocumentError: " << e.what() << "\n";
        return kExitError;
    } catch (const InvalidEdgeError& e) {
        std::cerr << "error: InvalidEdge: " << e.what() << "\n";
        return kExitError;
    } catch (const DisconnectedGraphError& e) {
        std::cerr << "error: DisconnectedGraph: " << e.what() << "\n";
        return kExitError;
    } catch (const InvalidWindowError& e) {
        std::cerr << "error: InvalidWindow: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
