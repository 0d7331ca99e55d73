// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "bcabe/cuts/activation.hpp"
#include "bcabe/cuts/analysis.hpp"
#include "bcabe/cuts/certificate.hpp"
#include "bcabe/cuts/lp.hpp"
#include "bcabe/protocol/network.hpp"
#include "bcabe/protocol/prepare.hpp"
#include "bcabe/states/basis.hpp"
#include "bcabe/states/checks.hpp"
#include "bcabe/states/families.hpp"
#include "bcabe/tensor/ops.hpp"
#include "oracles.hpp"

using namespace bcabe;

namespace {

struct Verdict {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail << "[first failure: " << what << "] ";
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void criterion(int id, const char* title, const std::function<void(Verdict&)>& body)
{
    Verdict v;
    const auto t0 = Clock::now();
    try {
        body(v);
    } catch (const std::exception& ex) {
        v.ok = false;
        v.detail << "[exception: " << ex.what() << "] ";
    }
    const double dt = seconds_since(t0);
    std::printf("AC%d %s  %-32s %7.2f s  %s\n", id, v.ok ? "PASS" : "FAIL", title, dt, v.detail.str().c_str());
    std::fflush(stdout);
    failures += v.ok ? 0 : 1;
}

} // namespace

int main()
{
    criterion(1, "Smolin equivalence", [](Verdict& v) {
        const auto t0 = Clock::now();
        const auto rho = build_family(4, FamilyLabel::RhoPlus);
        const auto smolin = smolin_state();
        const double d = oracle::jacobi_trace_distance(rho.matrix(), smolin.matrix());
        const double dt = seconds_since(t0);
        v.detail << "distance=" << d << " build=" << dt << "s ";
        v.require(d < 1e-12, "trace distance");
        v.require(trace_distance(rho, smolin) < 1e-12, "library trace distance");
        v.require(dt < 1.0, "runtime");
    });

    criterion(2, "Recursion at 2N = 4, 6, 8", [](Verdict& v) {
        for (int n : {4, 6, 8}) {
            const auto t0 = Clock::now();
            const auto rep = verify_recursion(n);
            const double dt = seconds_since(t0);
            v.detail << "2N=" << n << ":max=" << rep.max_distance() << " ";
            v.require(rep.checks.size() == 8, "eight checks");
            for (const auto& c : rep.checks)
                v.require(c.distance < 1e-12, "recursion distance");
            if (n == 8)
                v.require(dt < 30.0, "runtime at 2N=8");
        }
    });

    criterion(3, "Basis structure", [](Verdict& v) {
        for (int n : {4, 6}) {
            for (auto [sf, parity] : {std::pair{StringFamily::P, 0}, std::pair{StringFamily::Q, 1}}) {
                const auto strings = enumerate_parity_strings(n, sf);
                v.require(strings.size() == (std::size_t{1} << (n - 2)), "cardinality");
                const auto oracle_strings = oracle::brute_force_parity_strings(n, parity);
                v.require(strings.size() == oracle_strings.size(), "oracle cardinality");
                for (std::size_t i = 0; i < strings.size() && i < oracle_strings.size(); ++i)
                    v.require(strings[i].str() == oracle_strings[i], "oracle strings");
            }
            const auto basis = ghz_basis(n);
            v.require(basis.size() == (std::size_t{1} << n), "basis size");
            double residual = 0.0;
            for (std::size_t a = 0; a < basis.size(); ++a)
                for (std::size_t b = 0; b < basis.size(); ++b) {
                    const complex g = basis[a].state.amplitudes().dot(basis[b].state.amplitudes());
                    residual = std::max(residual, std::abs(g - (a == b ? 1.0 : 0.0)));
                }
            v.detail << "2N=" << n << ":gram=" << residual << " ";
            v.require(residual < 1e-12, "Gram residual");
        }
    });

    criterion(4, "Cut structure", [](Verdict& v) {
        for (int n : {4, 6}) {
            const auto t0 = Clock::now();
            double worst_npt = -1.0, worst_ppt = 1.0;
            for (FamilyLabel f : kAllFamilies) {
                const auto rho = build_family(n, f);
                for (const auto& r : analyze_cuts(rho, enumerate_cuts(n, 1))) {
                    v.require(r.min_pt_eigenvalue < -1e-10, "1-cut NPT");
                    worst_npt = std::max(worst_npt, r.min_pt_eigenvalue);
                }
                for (const auto& r : analyze_cuts(rho, enumerate_cuts(n, 2))) {
                    v.require(r.min_pt_eigenvalue >= -1e-10, "2-cut PPT");
                    worst_ppt = std::min(worst_ppt, r.min_pt_eigenvalue);
                }
            }
            v.detail << "2N=" << n << ":npt_margin=" << (-1e-10 - worst_npt) << ",ppt_min=" << worst_ppt << " ";
            if (n == 6)
                v.require(seconds_since(t0) < 60.0, "runtime at 2N=6");
        }
    });

    criterion(5, "Activation", [](Verdict& v) {
        double worst_p = 0.0, worst_f = 0.0;
        auto check = [&](int n, FamilyLabel f, const QubitSubset& together) {
            const auto res = activation_distill(n, f, together);
            for (const auto& o : res.outcomes) {
                worst_p = std::max(worst_p, std::abs(o.probability - 0.25));
                worst_f = std::max(worst_f, std::abs(1.0 - o.fidelity));
            }
        };
        for (FamilyLabel f : kAllFamilies) {
            for (std::uint64_t mask = 1; mask < 16; ++mask)
                if (std::popcount(mask) == 2)
                    check(4, f, QubitSubset::from_mask(4, mask));
            check(6, f, QubitSubset::range(3, 6));
        }
        v.detail << "max|p-1/4|=" << worst_p << " max|1-F|=" << worst_f << " ";
        v.require(worst_p < 1e-12, "outcome probabilities");
        v.require(worst_f < 1e-12, "fidelity");
    });

    criterion(6, "LP lower bound", [](Verdict& v) {
        const auto t0 = Clock::now();
        for (int n : {4, 6, 8, 10}) {
            const auto set = CutConstraintSet::one_vs_rest(n);
            const auto r = lp_lower_bound(set);
            v.detail << n << ":" << r.optimum << " ";
            v.require(r.status == LpStatus::Optimal, "status");
            v.require(std::abs(r.optimum - n / 2) < 1e-9, "optimum = N");
            v.require(is_feasible(set, r.witness), "witness feasible");
            v.require(std::abs(r.witness.total() - r.optimum) < 1e-9, "witness optimal");
        }
        v.require(seconds_since(t0) < 1.0, "runtime");
    });

    criterion(7, "Protocol exactness", [](Verdict& v) {
        for (int n : {4, 6}) {
            const auto t0 = Clock::now();
            double worst = 0.0;
            for (FamilyLabel f : kAllFamilies) {
                const auto res = prepare_bcabe(n, f);
                worst = std::max(worst, trace_distance(res.ensemble.mixed, build_family(n, f)));
                v.require(res.ensemble.singlets_used == n / 2, "singlets used");
                for (const auto& t : res.transcripts) {
                    v.require(locc_audit(t).passed, "audit");
                    v.require(ebit_accounting(t, n).total == n / 2, "ebits");
                }
                const auto cert = cost_certificate(n, f);
                v.require(cert.exact, "certificate exact");
            }
            v.detail << "2N=" << n << ":max_distance=" << worst << " ";
            v.require(worst < 1e-12, "trace distance");
            if (n == 6)
                v.require(seconds_since(t0) < 120.0, "runtime at 2N=6");
        }
    });

    criterion(8, "Sampled-mode sanity", [](Verdict& v) {
        const auto res = prepare_bcabe(4, FamilyLabel::RhoPlus, {PrepareMode::Sampled, 10000, 0, false});
        const double d = trace_distance(res.ensemble.mixed, build_family(4, FamilyLabel::RhoPlus));
        v.detail << "distance=" << d << " ";
        v.require(d < 0.05, "trace distance");
    });

    criterion(9, "Property suites", [](Verdict& v) {
        std::mt19937_64 rng(2024);

        // Teleportation branch-independence.
        double worst_branch = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            auto net = init_network(2, {{1, 2}});
            auto [q, aux] = bell_generate(net, 1, BellLabel::PhiPlus);
            local_measure(net, 1, {aux}, "0");
            local_unitary(net, 1, {q}, oracle::random_unitary(1, rng), "U");
            const auto branches = teleport(net, 1, 2, q);
            for (const auto& b : branches) {
                const complex phase =
                    final_state(branches[0].state).amplitudes().dot(final_state(b.state).amplitudes());
                worst_branch = std::max(worst_branch, 1.0 - std::abs(phase));
            }
        }
        v.require(worst_branch < 1e-12, "teleport branches");

        // Partial transpose is an involution; partial trace inverts the tensor product.
        double worst_pt = 0.0, worst_tr = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            const int n = 2 + trial % 3;
            const DensityMatrix rho(n, oracle::random_density(n, rng));
            const auto sub = QubitSubset::from_mask(n, 1 + rng() % ((1U << n) - 1));
            const Matrix twice = partial_transpose(partial_transpose(rho, sub), n, sub);
            worst_pt = std::max(worst_pt, (twice - rho.matrix()).cwiseAbs().maxCoeff());

            const DensityMatrix other(2, oracle::random_density(2, rng));
            const auto joint = tensor_product(rho, other);
            const auto back = partial_trace(joint, QubitSubset::range(n + 1, n + 2));
            worst_tr = std::max(worst_tr, (back.matrix() - rho.matrix()).cwiseAbs().maxCoeff());
            const auto front = partial_trace(joint, QubitSubset::range(1, n));
            worst_tr = std::max(worst_tr, (front.matrix() - other.matrix()).cwiseAbs().maxCoeff());
        }
        v.require(worst_pt < 1e-12, "PT involution");
        v.require(worst_tr < 1e-12, "partial trace of tensor product");

        // Pauli connection between every ordered family pair.
        int links = 0;
        for (int n : {4, 6})
            for (FamilyLabel a : kAllFamilies)
                for (FamilyLabel b : kAllFamilies)
                    if (a != b) {
                        const bool found = pauli_connection_search(a, b, n).has_value();
                        v.require(found, "Pauli connection");
                        links += found ? 1 : 0;
                    }
        v.detail << "branch=" << worst_branch << " pt=" << worst_pt << " trace=" << worst_tr << " links=" << links
                 << "/24 ";
    });

    std::printf("%s: %d of 9 criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
    return failures == 0 ? 0 : 1;
}
