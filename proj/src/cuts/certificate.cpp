#include "bcabe/cuts/certificate.hpp"

#include <cmath>
#include <stdexcept>

#include "bcabe/cuts/activation.hpp"
#include "bcabe/states/families.hpp"
#include "bcabe/tensor/ops.hpp"

namespace bcabe {

namespace {

std::vector<CutJustification> justify_cuts(int two_n, FamilyLabel label)
{
    std::vector<CutJustification> out;
    for (auto& report : npt_one_vs_rest_scan(two_n, label)) {
        const int lone = report.cut.smaller_side().indices().front();
        const int partner = lone == 1 ? 2 : 1;
        std::vector<int> together;
        for (int q = 1; q <= two_n; ++q)
            if (q != lone && q != partner)
                together.push_back(q);
        const double f = activation_distill(two_n, label, QubitSubset(std::move(together))).min_fidelity();
        const bool ok = report.classification == Classification::NPT && 1.0 - f < tol::kState;
        out.push_back({std::move(report), f, ok});
    }
    return out;
}

} // namespace

CostCertificate cost_certificate(int two_n, FamilyLabel label, const CertificateOptions& opts)
{
    if (two_n < 4 || two_n % 2 != 0)
        throw std::invalid_argument("two_n must be even and at least 4");

    auto cuts = justify_cuts(two_n, label);
    for (const auto& c : cuts)
        if (!c.justified)
            throw std::runtime_error("cut " + c.report.cut.to_string() + " does not carry a distillable ebit");

    const LpResult lp = lp_lower_bound(CutConstraintSet::one_vs_rest(two_n, 1.0));
    if (lp.status != LpStatus::Optimal)
        throw std::runtime_error("cut constraints are infeasible");

    PrepareOptions prep;
    prep.mode = opts.mode.value_or(two_n <= kMaxExactParties ? PrepareMode::Exact : PrepareMode::Sampled);
    prep.samples = opts.samples;
    prep.seed = opts.seed;
    auto run = prepare_bcabe(two_n, label, prep);
    if (run.transcripts.empty())
        throw std::runtime_error("protocol produced no transcripts");

    int achieved = -1;
    EdgeWeights achieved_weights(two_n);
    for (const auto& t : run.transcripts) {
        const auto audit = locc_audit(t);
        if (!audit.passed)
            throw std::runtime_error("transcript " + t.run_id + " fails the LOCC audit: " + audit.violation);
        const auto acc = ebit_accounting(t, two_n);
        if (achieved < 0) {
            achieved = acc.total;
            achieved_weights = acc.breakdown;
        } else if (acc.total != achieved) {
            throw std::runtime_error("protocol branches consume different numbers of singlets");
        }
    }

    CostCertificate cert{two_n,
                         label,
                         lp.optimum,
                         static_cast<double>(achieved),
                         false,
                         lp.witness,
                         achieved_weights,
                         lp.dual,
                         run.transcripts.front().run_id,
                         prep.mode,
                         trace_distance(run.ensemble.mixed, build_family(two_n, label)),
                         std::move(cuts),
                         std::move(run.transcripts)};
    cert.exact = std::abs(cert.lower_bound - cert.achieved) < 1e-9;
    return cert;
}

} // namespace bcabe
