"""Smoke tests for the spinpst extension module."""

import cmath
import math

import spinpst as sp


def close(a, b, tol=1e-9):
    return abs(a - b) <= tol


def main():
    # Reduction of the engineered chain.
    net = sp.build_engineered_chain(5)
    assert net.vertex_count == 5
    seq = sp.reduce(net)
    assert [round(w, 12) for w in seq.omega] == [1.0, 1.5, 1.5, 1.0]
    assert all(a == 0.0 for a in seq.alpha)

    # Spectral measure and its normalization.
    measure = sp.gauss_measure(seq)
    assert close(sum(measure.weights), 1.0, 1e-12)
    assert [round(x, 10) for x in measure.atoms] == [-2.0, -1.0, 0.0, 1.0, 2.0]

    # Perfect transfer at t = pi.
    cert = sp.pst_search(seq, measure, 1, 2.0 * math.pi, 1e-9)
    assert close(cert.time, math.pi, 1e-8)
    assert cert.achieved and cert.target_is_single_vertex

    # Closed form on the hypercube column graph.
    cube = sp.build_hypercube_column(2)
    cube_seq = sp.reduce(cube)
    cube_measure = sp.gauss_measure(cube_seq)
    for t in (0.3, 1.1, 2.2):
        expected = (-1j * cmath.sin(t / 2)) ** 2
        assert close(sp.amplitude(cube_seq, cube_measure, 2, t), expected)

    # Quotient amplitudes agree with the dense evolution.
    for t in (0.5, 1.5, 2.5):
        assert close(
            sp.amplitude(seq, measure, 4, t),
            sp.amplitude_full(net, t, layer=4),
        )
    assert close(abs(sp.amplitude_full(sp.build_w_network(), math.pi / math.sqrt(3.0), vertex=8)), 1.0)

    # Walk counting on the adjacency-mode W network.
    w_adj = sp.build_w_network().as_adjacency_mode()
    assert sp.walk_count(w_adj, 2) == 6
    assert close(sp.moment(sp.gauss_measure(sp.reduce(w_adj)), 2), 6.0, 1e-8)

    # Stieltjes transform, both routes.
    pair = sp.reduce(sp.from_edge_list(2, [(1, 2, 1.0)]))
    assert close(sp.stieltjes_cf(pair, 1.0 + 0j), 4.0 / 3.0, 1e-12)
    assert close(sp.stieltjes_pf(sp.gauss_measure(pair), 1.0 + 0j), 4.0 / 3.0, 1e-12)

    # Error surfaces.
    try:
        sp.from_edge_list(3, [(1, 2, 1.0)])
        raise AssertionError("expected DisconnectedGraphError")
    except sp.DisconnectedGraphError:
        pass
    try:
        sp.reduce(sp.build_star_extended().with_reference(3))
        raise AssertionError("expected QuotientClosureViolation")
    except sp.QuotientClosureViolation:
        pass

    # Document round trip and the report surface.
    assert sp.parse_network_document(sp.write_network_document(net)) == net
    report = sp.analyze_text(net, label="chain:5")
    assert "pst_achieved: true" in report

    print("smoke ok")


if __name__ == "__main__":
    main()
