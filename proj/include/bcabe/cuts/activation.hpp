#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "bcabe/states/labels.hpp"
#include "bcabe/tensor/types.hpp"

namespace bcabe {

/// Single-qubit correction applied to the first residual qubit.
enum class Correction { I, Z, X, ZX };
std::string_view to_string(Correction c);
/// ZX is the product Z * X (X acts first).
Matrix correction_matrix(Correction c);

/// Validated corrections indexed by the residual Bell state, i.e. by the
/// source family's parity signature combined with the measured outcome's.
/// For a rho+ source: rho+ -> I, rho- -> Z, sigma+ -> X, sigma- -> ZX.
Correction frozen_correction(FamilyLabel source, FamilyLabel outcome);

/// First correction in the order I, Z, X, ZX that maps `residual` onto
/// [Phi+] within tol::kState, if any.
std::optional<Correction> search_correction(const DensityMatrix& residual);

struct ActivationOutcome {
    FamilyLabel outcome;
    double probability;
    Correction correction;
    DensityMatrix raw;      // residual before the correction
    DensityMatrix residual; // corrected two-qubit state on the excluded parties
    double fidelity;        // with [Phi+]
};

struct ActivationResult {
    int two_n;
    FamilyLabel source;
    QubitSubset together;
    std::pair<int, int> residual_pair;
    std::vector<ActivationOutcome> outcomes; // in kAllFamilies order

    double min_fidelity() const;
};

/// Parties in `together` (two_n - 2 of them) measure which family support
/// their joint state lies in; the two remaining parties then apply the
/// frozen correction. Throws std::invalid_argument for a wrong subset size.
ActivationResult activation_distill(int two_n, FamilyLabel label, const QubitSubset& together);

} // namespace bcabe
