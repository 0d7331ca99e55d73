#pragma once

#include <optional>
#include <vector>

#include "bcabe/tensor/types.hpp"

namespace bcabe {

/// `a` occupies the lower-numbered qubits of the result.
DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);
PureState tensor_product(const PureState& a, const PureState& b);

DensityMatrix partial_trace(const DensityMatrix& rho, const QubitSubset& discard);

/// The result is Hermitian but generally not positive, hence a plain matrix.
Matrix partial_transpose(const DensityMatrix& rho, const QubitSubset& subset);
Matrix partial_transpose(const Matrix& m, int num_qubits, const QubitSubset& subset);

/// Ascending. Throws std::invalid_argument if m is not Hermitian within tol::kStructure.
std::vector<double> hermitian_eigenvalues(const Matrix& m);

/// <psi|rho|psi>, clamped to [0, 1].
double fidelity_with_pure(const DensityMatrix& rho, const PureState& psi);

double trace_distance(const DensityMatrix& a, const DensityMatrix& b);
/// (1/2) * sum |eig(a - b)| for arbitrary Hermitian operands.
double trace_norm_distance(const Matrix& a, const Matrix& b);

/// Applies u (tensored with the identity) on `subset`, u's most significant
/// qubit on the subset's first index.
DensityMatrix apply_unitary_on_subset(const DensityMatrix& rho, const Matrix& u, const QubitSubset& subset);
PureState apply_unitary_on_subset(const PureState& psi, const Matrix& u, const QubitSubset& subset);

/// Reorders qubits: qubit i of the result is qubit order[i - 1] of the input.
DensityMatrix permute_qubits(const DensityMatrix& rho, std::span<const int> order);

/// Outcome of a projective measurement branch. A branch whose probability is
/// below tol::kZeroBranch carries no state.
struct MeasurementBranch {
    double probability = 0.0;
    std::optional<DensityMatrix> state;

    bool zero_probability() const { return !state.has_value(); }
};

MeasurementBranch project_and_renormalize(const DensityMatrix& rho, const Projector& p);

} // namespace bcabe
