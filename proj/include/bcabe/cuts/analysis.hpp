#pragma once

#include <string_view>
#include <vector>

#include "bcabe/cuts/cut.hpp"
#include "bcabe/states/labels.hpp"
#include "bcabe/tensor/types.hpp"

namespace bcabe {

enum class Classification { PPT, NPT };
std::string_view to_string(Classification c);

/// Eigenvalues of the partial transpose below this count as negative.
inline constexpr double kNptThreshold = -tol::kStructure;

struct CutReport {
    Cut cut;
    double min_pt_eigenvalue;
    double negativity; // sum of |lambda| over eigenvalues below kNptThreshold
    Classification classification;
    /// |min_pt_eigenvalue - kNptThreshold|: how far the verdict is from flipping.
    double margin;
};

/// Throws std::invalid_argument when the cut and state sizes differ.
CutReport analyze_cut(const DensityMatrix& rho, const Cut& cut);

/// Same as analyze_cut over every cut, evaluated in parallel; output order
/// follows `cuts`.
std::vector<CutReport> analyze_cuts(const DensityMatrix& rho, const std::vector<Cut>& cuts);

/// analyze_cuts on build_family(two_n, label) over the 1:(two_n - 1) cuts.
std::vector<CutReport> npt_one_vs_rest_scan(int two_n, FamilyLabel label);

} // namespace bcabe
