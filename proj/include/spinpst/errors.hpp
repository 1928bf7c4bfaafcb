#pragma once

#include <stdexcept>
#include <string>

namespace spinpst {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An edge references an out-of-range vertex, is a self-loop, duplicates
/// another edge, or carries a non-positive coupling.
class InvalidEdgeError : public Error {
public:
    using Error::Error;
};

/// Some vertex is unreachable from the reference vertex.
class DisconnectedGraphError : public Error {
public:
    using Error::Error;
};

/// The Hamiltonian does not close on the layer-vector subspace: the network
/// is not layer-regular from the chosen reference vertex.
class QuotientClosureError : public Error {
public:
    QuotientClosureError(int layer, double relative_residual);

    int layer() const noexcept { return layer_; }
    double relative_residual() const noexcept { return residual_; }

private:
    int layer_;
    double residual_;
};

/// A Jacobi sequence with a non-positive omega entry was passed where a
/// valid reduction is required.
class DegenerateSequenceError : public Error {
public:
    using Error::Error;
};

/// Evaluation point is too close to a spectral atom for the transform to
/// retain any significance.
class PoleProximityError : public Error {
public:
    using Error::Error;
};

/// The plane-rotation eigensolver exceeded its sweep limit.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// Operation requires an adjacency-mode network with unit couplings.
class ModeMismatchError : public Error {
public:
    using Error::Error;
};

/// Transfer target names a vertex or layer that does not exist.
class InvalidTargetError : public Error {
public:
    using Error::Error;
};

/// Search window is empty or otherwise unusable.
class InvalidWindowError : public Error {
public:
    using Error::Error;
};

/// A network document failed to parse or validate; the message names the
/// offending field.
class DocumentError : public Error {
public:
    using Error::Error;
};

}  // namespace spinpst
