#include "bcabe/cuts/lp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bcabe {

namespace {

constexpr double kPivotEps = 1e-12;
constexpr double kCheckTol = 1e-9;

std::vector<std::pair<int, int>> edges_of(int n)
{
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            e.emplace_back(i, j);
    return e;
}

} // namespace

CutConstraintSet::CutConstraintSet(int num_parties)
    : num_parties_(num_parties)
{
    if (num_parties < 2)
        throw std::invalid_argument("constraint set needs at least two parties");
}

void CutConstraintSet::add(const Cut& cut, double required_ebits)
{
    if (cut.num_parties() != num_parties_)
        throw std::invalid_argument("cut is over a different number of parties");
    if (!(required_ebits >= 0.0) || !std::isfinite(required_ebits))
        throw std::invalid_argument("required ebits must be finite and nonnegative");
    constraints_.push_back({cut, required_ebits});
}

CutConstraintSet CutConstraintSet::one_vs_rest(int num_parties, double required_ebits)
{
    CutConstraintSet set(num_parties);
    for (const Cut& c : enumerate_cuts(num_parties, 1))
        set.add(c, required_ebits);
    return set;
}

std::string_view to_string(LpStatus s)
{
    return s == LpStatus::Optimal ? "optimal" : "infeasible";
}

bool is_feasible(const CutConstraintSet& constraints, const EdgeWeights& w, double tol)
{
    const int n = constraints.num_parties();
    if (w.num_parties() != n)
        return false;
    for (double v : w.values())
        if (v < -tol)
            return false;
    for (const auto& c : constraints.constraints()) {
        double s = 0.0;
        for (auto [i, j] : edges_of(n))
            if (c.cut.crosses(i, j))
                s += w.at(i, j);
        if (s < c.required_ebits - tol)
            return false;
    }
    return true;
}

LpResult lp_lower_bound(const CutConstraintSet& constraints)
{
    const int n = constraints.num_parties();
    const auto edges = edges_of(n);
    const auto& cons = constraints.constraints();
    const int m = static_cast<int>(cons.size());
    const int e = static_cast<int>(edges.size());

    // Rows: one per edge (dual constraint). Columns: y_0..y_{m-1}, slacks s_0..s_{e-1}, rhs.
    const int cols = m + e + 1;
    const int rhs = m + e;
    std::vector<std::vector<double>> t(static_cast<std::size_t>(e + 1), std::vector<double>(cols, 0.0));
    std::vector<int> basis(static_cast<std::size_t>(e));
    for (int r = 0; r < e; ++r) {
        for (int k = 0; k < m; ++k)
            if (cons[k].cut.crosses(edges[r].first, edges[r].second))
                t[r][k] = 1.0;
        t[r][m + r] = 1.0;
        t[r][rhs] = 1.0;
        basis[r] = m + r;
    }
    auto& obj = t[static_cast<std::size_t>(e)];
    for (int k = 0; k < m; ++k)
        obj[k] = -cons[k].required_ebits;

    LpResult result{LpStatus::Optimal, 0.0, EdgeWeights(n), std::vector<double>(static_cast<std::size_t>(m), 0.0), 0};
    for (;;) {
        int enter = -1;
        for (int j = 0; j < rhs; ++j)
            if (obj[j] < -kPivotEps) {
                enter = j;
                break;
            }
        if (enter < 0)
            break;

        int leave = -1;
        double best = 0.0;
        for (int r = 0; r < e; ++r) {
            if (t[r][enter] <= kPivotEps)
                continue;
            const double ratio = t[r][rhs] / t[r][enter];
            if (leave < 0 || ratio < best - kPivotEps || (std::abs(ratio - best) <= kPivotEps && basis[r] < basis[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave < 0) {
            result.status = LpStatus::Infeasible;
            return result;
        }

        const double piv = t[leave][enter];
        for (double& v : t[leave])
            v /= piv;
        for (int r = 0; r <= e; ++r) {
            if (r == leave)
                continue;
            const double f = t[r][enter];
            if (f == 0.0)
                continue;
            for (int c = 0; c < cols; ++c)
                t[r][c] -= f * t[leave][c];
        }
        basis[leave] = enter;
        ++result.pivots;
    }

    result.optimum = obj[rhs];
    for (int r = 0; r < e; ++r) {
        const double x = std::max(0.0, obj[m + r]);
        result.witness.set(edges[r].first, edges[r].second, x < kPivotEps ? 0.0 : x);
    }
    for (int r = 0; r < e; ++r)
        if (basis[r] < m)
            result.dual[basis[r]] = t[r][rhs];

    if (!is_feasible(constraints, result.witness, kCheckTol) ||
        std::abs(result.witness.total() - result.optimum) > kCheckTol)
        throw std::logic_error("simplex finished without a consistent primal witness");
    return result;
}

} // namespace bcabe
