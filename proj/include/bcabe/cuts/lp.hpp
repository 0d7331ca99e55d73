#pragma once

#include <string_view>
#include <vector>

#include "bcabe/cuts/cut.hpp"
#include "bcabe/cuts/edge_weights.hpp"

namespace bcabe {

struct CutConstraint {
    Cut cut;
    double required_ebits;
};

class CutConstraintSet {
public:
    explicit CutConstraintSet(int num_parties);

    /// Throws std::invalid_argument for a negative requirement or a cut on a
    /// different number of parties.
    void add(const Cut& cut, double required_ebits);

    /// Every 1:(n-1) cut at the same requirement.
    static CutConstraintSet one_vs_rest(int num_parties, double required_ebits = 1.0);

    int num_parties() const { return num_parties_; }
    const std::vector<CutConstraint>& constraints() const { return constraints_; }

private:
    int num_parties_;
    std::vector<CutConstraint> constraints_;
};

enum class LpStatus { Optimal, Infeasible };
std::string_view to_string(LpStatus s);

struct LpResult {
    LpStatus status;
    double optimum;            // minimum total edge weight (0 when infeasible)
    EdgeWeights witness;       // an optimal assignment
    std::vector<double> dual;  // one multiplier per constraint, certifying the optimum
    int pivots;
};

/// minimize sum e_ij  s.t.  sum over edges crossing each cut >= requirement, e >= 0.
///
/// Solved through its packing dual (max b.y s.t. A^T y <= 1, y >= 0), which
/// starts feasible at y = 0, with a dense tableau simplex under Bland's rule.
/// The primal witness is read off the reduced costs of the dual slacks.
LpResult lp_lower_bound(const CutConstraintSet& constraints);

/// Every constraint satisfied within `tol`.
bool is_feasible(const CutConstraintSet& constraints, const EdgeWeights& w, double tol = 1e-9);

} // namespace bcabe
