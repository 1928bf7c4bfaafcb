#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "spinpst/document.hpp"
#include "spinpst/report.hpp"

using namespace spinpst;

TEST_CASE("parse a complete document") {
    const std::string text = R"({
        "vertices": 5,
        "edges": [[1, 2, 1.7320508075688772], [2, 3, 1.0], [2, 4, 1.0], [2, 5, 1.0]],
        "reference": 1,
        "scale": 1.0,
        "adjacency_mode": false
    })";
    const SpinNetwork net = parse_network_document(text);
    CHECK(net.vertex_count() == 5);
    CHECK(net.edges().size() == 4);
    CHECK(net.reference() == 1);
}

TEST_CASE("optional fields default") {
    const SpinNetwork net = parse_network_document(R"({"vertices": 2, "edges": [[1, 2, 1.0]]})");
    CHECK(net.reference() == 1);
    CHECK(net.scale() == 1.0);
    CHECK_FALSE(net.adjacency_mode());
}

TEST_CASE("document errors name the offending field") {
    auto message_of = [](const std::string& text) {
        try {
            parse_network_document(text);
        } catch (const DocumentError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };

    CHECK(message_of(R"({"edges": []})").find("vertices") != std::string::npos);
    CHECK(message_of(R"({"vertices": 0, "edges": []})").find("vertices") != std::string::npos);
    CHECK(message_of(R"({"vertices": 2})").find("edges") != std::string::npos);
    CHECK(message_of(R"({"vertices": 2, "edges": [[1, 2]]})").find("edges") != std::string::npos);
    CHECK(message_of(R"({"vertices": 2, "edges": [[1, 3, 1.0]]})").find("edges") != std::string::npos);
    CHECK(message_of(R"({"vertices": 2, "edges": [[1, 2, 1.0]], "reference": 9})").find("reference") !=
          std::string::npos);
    CHECK(message_of(R"({"vertices": 2, "edges": [[1, 2, 1.0]], "scale": -2.0})").find("scale") != std::string::npos);
    CHECK(message_of(R"({"vertices": 2, "edges": [[1, 2, 1.0]], "adjacency_mode": 3})").find("adjacency_mode") !=
          std::string::npos);
    CHECK(message_of("not json").find("JSON") != std::string::npos);
    CHECK_THROWS_AS(parse_network_document(R"({"vertices": 3, "edges": [[1, 2, 1.0]]})"), DocumentError);
}

TEST_CASE("documents round-trip every builder exactly") {
    const SpinNetwork variants[] = {
        build_hypercube_column(3),
        build_w_network(),
        build_binary_tree_unweighted(),
        build_engineered_chain(7),
        build_star_extended(),
        build_circulant6(),
        build_binary_tree_modulated(),
        build_w_network().as_adjacency_mode(),
        build_star_extended().with_reference(2).with_scale(2.5),
    };
    for (const SpinNetwork& net : variants) {
        const SpinNetwork reparsed = parse_network_document(write_network_document(net));
        CHECK(reparsed == net);
    }
}

TEST_CASE("number formatting uses 12 significant digits") {
    CHECK(format_number(std::numbers::pi) == "3.14159265359");
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(0.0625) == "0.0625");
}

TEST_CASE("analysis report for the five-site chain") {
    AnalysisOptions options;
    options.label = "chain:5";
    const AnalysisReport report = analyze_network(build_engineered_chain(5), options);

    CHECK(report.strata_sizes == std::vector<std::size_t>{1, 1, 1, 1, 1});
    REQUIRE(report.omega.size() == 4);
    CHECK(report.omega[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(report.omega[1] == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(std::abs(report.pst.time - std::numbers::pi) <= 1e-8);
    CHECK(report.pst.achieved);
    CHECK(report.pst.target_is_single_vertex);
    CHECK(report.oracle_residual <= 1e-9);

    SUBCASE("text form is deterministic and carries the label") {
        const std::string once = report.to_text();
        const std::string twice = analyze_network(build_engineered_chain(5), options).to_text();
        CHECK(once == twice);
        CHECK(once.find("network: chain:5\n") != std::string::npos);
        CHECK(once.find("pst_achieved: true\n") != std::string::npos);
    }
}

TEST_CASE("closure violations propagate out of the pipeline") {
    CHECK_THROWS_AS(analyze_network(build_star_extended().with_reference(3)), QuotientClosureError);
}

TEST_CASE("the single-vertex network survives the pipeline") {
    const AnalysisReport report = analyze_network(from_edge_list(1, {}));
    CHECK(report.strata_sizes == std::vector<std::size_t>{1});
    CHECK(report.omega.empty());
    CHECK(report.pst.achieved);
    CHECK(report.oracle_residual <= 1e-12);
}

TEST_CASE("trace CSV layout") {
    const SpinNetwork net = build_engineered_chain(2);
    const JacobiSequences seq = reduce(net);
    const SpectralMeasure measure = gauss_measure(seq);
    const FidelityTrace tr = trace(seq, measure, 1, 0.0, 2.0 * std::numbers::pi, 5);

    std::ostringstream out;
    write_trace_csv(tr, out);
    const std::string text = out.str();

    CHECK(text.rfind("t,re_f,im_f,abs_f\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 6);
    CHECK(text.find("0.707106781187") != std::string::npos);  // |f| at t = pi/2
}
