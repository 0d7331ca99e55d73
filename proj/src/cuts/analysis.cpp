#include "bcabe/cuts/analysis.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

#include "bcabe/states/families.hpp"
#include "bcabe/tensor/ops.hpp"

namespace bcabe {

std::string_view to_string(Classification c)
{
    return c == Classification::NPT ? "NPT" : "PPT";
}

CutReport analyze_cut(const DensityMatrix& rho, const Cut& cut)
{
    if (cut.num_parties() != rho.num_qubits())
        throw std::invalid_argument("cut has " + std::to_string(cut.num_parties()) + " parties but the state has " +
                                    std::to_string(rho.num_qubits()) + " qubits");
    const auto eig = hermitian_eigenvalues(partial_transpose(rho, cut.side_a()));
    double negativity = 0.0;
    for (double l : eig)
        if (l < kNptThreshold)
            negativity += -l;
    const double min_eig = eig.front();
    const auto cls = min_eig < kNptThreshold ? Classification::NPT : Classification::PPT;
    return {cut, min_eig, negativity, cls, std::abs(min_eig - kNptThreshold)};
}

std::vector<CutReport> analyze_cuts(const DensityMatrix& rho, const std::vector<Cut>& cuts)
{
    std::vector<std::optional<CutReport>> slots(cuts.size());
    const auto count = static_cast<std::int64_t>(cuts.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            slots[static_cast<std::size_t>(i)] = analyze_cut(rho, cuts[static_cast<std::size_t>(i)]);
        } catch (...) {
#pragma omp critical
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    std::vector<CutReport> out;
    out.reserve(cuts.size());
    for (auto& s : slots)
        out.push_back(std::move(*s));
    return out;
}

std::vector<CutReport> npt_one_vs_rest_scan(int two_n, FamilyLabel label)
{
    return analyze_cuts(build_family(two_n, label), enumerate_cuts(two_n, 1));
}

} // namespace bcabe
