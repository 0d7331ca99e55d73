#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bcabe/states/labels.hpp"
#include "bcabe/tensor/gates.hpp"
#include "bcabe/tensor/types.hpp"

namespace bcabe {

// ------------------------------------------------------------------ recursion

/// Where the Bell projector sits in the two_n-qubit recursion.
enum class BellPlacement { Leading, Trailing };

/// Right-hand side of the recursion for `label` at size two_n, assembled from
/// (two_n - 2)-qubit families and the Bell projector at `placement`.
DensityMatrix recursion_rhs(int two_n, FamilyLabel label, BellPlacement placement = BellPlacement::Leading);

struct RecursionCheck {
    FamilyLabel family;
    BellPlacement placement;
    double distance;
};

struct RecursionReport {
    int two_n = 0;
    std::vector<RecursionCheck> checks; // 4 families x 2 placements
    double max_distance() const;
};

RecursionReport verify_recursion(int two_n);

// ------------------------------------------------------------------ Pauli links

struct PauliConnection {
    int qubit;
    Pauli pauli;
    friend bool operator==(const PauliConnection&, const PauliConnection&) = default;
};

/// First (lowest qubit, then X, Y, Z) single-qubit Pauli conjugation mapping
/// family a onto family b within tol::kState, or none.
std::optional<PauliConnection> pauli_connection_search(FamilyLabel a, FamilyLabel b, int two_n);

// ------------------------------------------------------------------ Bell tuples

using QubitPair = std::pair<int, int>;
using Pairing = std::vector<QubitPair>;

/// (1,2)(3,4)...(n-1,n)
Pairing disjoint_pairing(int num_qubits);

struct BellTerm {
    std::vector<BellLabel> tuple; // one label per pair of the pairing
    double weight;
};

struct BellDecomposition {
    Pairing pairing;
    std::vector<BellTerm> terms;   // lexicographic in tuple order, weights > 1e-12
    double reconstruction_error;   // trace distance of the weighted mixture to the input
};

class NotBellCorrelated : public std::runtime_error {
public:
    explicit NotBellCorrelated(double error);
    double error() const { return error_; }

private:
    double error_;
};

/// Product of Bell states, tuple[k] on pairing[k], in natural qubit order.
PureState bell_product(const std::vector<BellLabel>& tuple, const Pairing& pairing);

/// Throws std::invalid_argument for a pairing that does not cover every qubit
/// exactly once, NotBellCorrelated when the Bell-diagonal part does not
/// reconstruct rho within 1e-12.
BellDecomposition bell_tuple_decomposition(const DensityMatrix& rho, const Pairing& pairing);

// ------------------------------------------------------------------ symmetry

/// Trace distance between rho and rho with its qubits reordered.
double permutation_distance(const DensityMatrix& rho, std::span<const int> order);

/// Worst trace distance over all qubit transpositions.
double permutation_invariance_check(int two_n, FamilyLabel label);

/// tr(rho_a rho_b) over the four families, indexed in kAllFamilies order.
std::array<std::array<double, 4>, 4> family_overlaps(int two_n);

} // namespace bcabe
