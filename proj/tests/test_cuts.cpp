#include <doctest.h>

#include <cmath>
#include <map>

#include "bcabe/cuts/activation.hpp"
#include "bcabe/cuts/analysis.hpp"
#include "bcabe/cuts/certificate.hpp"
#include "bcabe/states/families.hpp"
#include "bcabe/tensor/gates.hpp"
#include "bcabe/tensor/ops.hpp"
#include "oracles.hpp"

using namespace bcabe;

namespace {

// Entry-by-entry partial transpose: swap row and column bits under the mask.
Matrix naive_partial_transpose(const Matrix& m, std::uint64_t mask)
{
    Matrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const auto ui = static_cast<std::uint64_t>(i), uj = static_cast<std::uint64_t>(j);
            const auto ni = (ui & ~mask) | (uj & mask);
            const auto nj = (uj & ~mask) | (ui & mask);
            out(static_cast<Eigen::Index>(ni), static_cast<Eigen::Index>(nj)) = m(i, j);
        }
    return out;
}

double oracle_negativity(const Matrix& rho, std::uint64_t mask)
{
    double s = 0.0;
    for (double l : oracle::jacobi_eigenvalues(naive_partial_transpose(rho, mask)))
        if (l < -1e-10)
            s -= l;
    return s;
}

std::vector<std::vector<int>> sides(const std::vector<Cut>& cuts)
{
    std::vector<std::vector<int>> out;
    for (const auto& c : cuts)
        out.push_back(c.smaller_side().indices());
    return out;
}

} // namespace

TEST_CASE("enumerate_cuts")
{
    CHECK(enumerate_cuts(4, 1).size() == 4);
    CHECK(enumerate_cuts(4).size() == 7);
    CHECK(enumerate_cuts(6, 2).size() == 15);
    CHECK(enumerate_cuts(6, 3).size() == 10);
    CHECK(enumerate_cuts(6).size() == 31);
    CHECK(sides(enumerate_cuts(4, 1)) == std::vector<std::vector<int>>{{1}, {2}, {3}, {4}});
    for (const auto& c : enumerate_cuts(5))
        CHECK(c.side_a().contains(1));
    CHECK_THROWS_AS(enumerate_cuts(4, 0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_cuts(4, 4), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_cuts(1), std::invalid_argument);
}

TEST_CASE("cut construction")
{
    const Cut c(4, QubitSubset{2, 3});
    CHECK(c.side_a() == QubitSubset{1, 4});
    CHECK(c.side_b() == QubitSubset{2, 3});
    CHECK(c.crosses(1, 2));
    CHECK_FALSE(c.crosses(2, 3));
    CHECK(c.to_string() == "1,4|2,3");
    CHECK_THROWS_AS(Cut(4, QubitSubset{}), std::invalid_argument);
    CHECK_THROWS_AS(Cut(4, QubitSubset{1, 2, 3, 4}), std::invalid_argument);
    CHECK_THROWS_AS(Cut(4, QubitSubset{5}), std::out_of_range);
}

TEST_CASE("analyze_cut")
{
    SUBCASE("Bell pair")
    {
        const auto rho = DensityMatrix::projector_of(bell_state(BellLabel::PhiPlus));
        const auto r = analyze_cut(rho, Cut(2, QubitSubset{1}));
        CHECK(r.classification == Classification::NPT);
        CHECK(r.negativity == doctest::Approx(oracle_negativity(rho.matrix(), 0b10)).epsilon(1e-12));
        CHECK(r.negativity == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(r.min_pt_eigenvalue == doctest::Approx(-0.5).epsilon(1e-12));
    }
    SUBCASE("product states")
    {
        std::mt19937_64 rng(3);
        const DensityMatrix a(2, oracle::random_density(2, rng));
        const DensityMatrix b(2, oracle::random_density(2, rng));
        const auto rho = tensor_product(a, b);
        for (const auto& c : enumerate_cuts(4)) {
            const auto r = analyze_cut(rho, c);
            if (c.side_a() == QubitSubset{1, 2}) {
                CHECK(r.classification == Classification::PPT);
                CHECK(r.negativity == 0.0);
            }
        }
    }
    SUBCASE("size mismatch")
    {
        CHECK_THROWS_AS(analyze_cut(DensityMatrix::maximally_mixed(3), Cut(4, QubitSubset{1})), std::invalid_argument);
    }
}

TEST_CASE("cut structure of every family")
{
    for (int two_n : {4, 6, 8}) {
        std::vector<double> reference;
        for (FamilyLabel f : kAllFamilies) {
            CAPTURE(two_n);
            CAPTURE(to_string(f));
            const auto rho = build_family(two_n, f);

            const auto ones = npt_one_vs_rest_scan(two_n, f);
            REQUIRE(ones.size() == static_cast<std::size_t>(two_n));
            std::vector<double> neg;
            for (const auto& r : ones) {
                CHECK(r.classification == Classification::NPT);
                CHECK(r.negativity > 0.0);
                neg.push_back(r.negativity);
            }
            if (two_n == 4)
                for (const auto& r : ones)
                    CHECK(r.negativity == doctest::Approx(oracle_negativity(rho.matrix(), r.cut.side_a().mask(4))).epsilon(1e-10));
            if (reference.empty()) {
                reference = neg;
                MESSAGE("2N = " << two_n << ": 1:(2N-1) negativity " << neg.front());
            }
            for (std::size_t i = 0; i < neg.size(); ++i)
                CHECK(neg[i] == doctest::Approx(reference[i]).epsilon(1e-10));

            for (const auto& r : analyze_cuts(rho, enumerate_cuts(two_n, 2))) {
                CHECK(r.classification == Classification::PPT);
                CHECK(r.min_pt_eigenvalue >= kNptThreshold);
                CHECK(r.negativity == 0.0);
            }
        }
    }
}

TEST_CASE("intermediate cuts are reported")
{
    const auto reports = analyze_cuts(build_family(6, FamilyLabel::RhoPlus), enumerate_cuts(6, 3));
    CHECK(reports.size() == 10);
    for (const auto& r : reports) {
        CHECK(std::isfinite(r.min_pt_eigenvalue));
        CHECK((r.negativity == 0.0) == (r.classification == Classification::PPT));
    }
    MESSAGE("3:3 cut " << reports.front().cut.to_string() << " -> " << to_string(reports.front().classification)
                       << " min eigenvalue " << reports.front().min_pt_eigenvalue);
}

TEST_CASE("parallel and serial cut analysis agree")
{
    const auto rho = build_family(6, FamilyLabel::SigmaMinus);
    const auto cuts = enumerate_cuts(6);
    const auto par = analyze_cuts(rho, cuts);
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        const auto one = analyze_cut(rho, cuts[i]);
        CHECK(par[i].cut == one.cut);
        CHECK(par[i].min_pt_eigenvalue == one.min_pt_eigenvalue);
    }
}

TEST_CASE("outcome projectors resolve the identity")
{
    for (int k : {2, 4}) {
        const auto dim = Eigen::Index{1} << k;
        Matrix sum = Matrix::Zero(dim, dim);
        for (FamilyLabel f : kAllFamilies)
            sum += family_support(k, f).matrix();
        CHECK((sum - Matrix::Identity(dim, dim)).norm() < 1e-12);
    }
}

TEST_CASE("activation at four parties")
{
    for (FamilyLabel source : kAllFamilies) {
        for (const auto& pair : enumerate_cuts(4, 2)) {
            for (const QubitSubset* together : {&pair.side_a(), &pair.side_b()}) {
                CAPTURE(to_string(source));
                const auto res = activation_distill(4, source, *together);
                REQUIRE(res.outcomes.size() == 4);
                for (const auto& o : res.outcomes) {
                    CHECK(std::abs(o.probability - 0.25) < 1e-12);
                    CHECK(1.0 - o.fidelity < 1e-12);
                    CHECK(oracle::jacobi_trace_distance(o.residual.matrix(),
                                                        DensityMatrix::projector_of(bell_state(BellLabel::PhiPlus)).matrix()) <
                          1e-12);
                }
            }
        }
    }
}

TEST_CASE("activation at six parties")
{
    for (FamilyLabel source : kAllFamilies) {
        const auto res = activation_distill(6, source, QubitSubset::range(3, 6));
        CHECK(res.residual_pair == std::pair{1, 2});
        for (const auto& o : res.outcomes) {
            CHECK(std::abs(o.probability - 0.25) < 1e-12);
            CHECK(1.0 - o.fidelity < 1e-12);
        }
    }
    CHECK_THROWS_AS(activation_distill(6, FamilyLabel::RhoPlus, QubitSubset{3, 4}), std::invalid_argument);
    CHECK_THROWS_AS(activation_distill(6, FamilyLabel::RhoPlus, QubitSubset{3, 4, 5, 7}), std::out_of_range);
}

TEST_CASE("correction table matches the search")
{
    const std::map<FamilyLabel, Correction> rho_plus{{FamilyLabel::RhoPlus, Correction::I},
                                                      {FamilyLabel::RhoMinus, Correction::Z},
                                                      {FamilyLabel::SigmaPlus, Correction::X},
                                                      {FamilyLabel::SigmaMinus, Correction::ZX}};
    for (auto [outcome, c] : rho_plus)
        CHECK(frozen_correction(FamilyLabel::RhoPlus, outcome) == c);

    for (int two_n : {4, 6})
        for (FamilyLabel source : kAllFamilies) {
            const auto res = activation_distill(two_n, source, QubitSubset::range(3, two_n));
            for (const auto& o : res.outcomes) {
                const auto found = search_correction(o.raw);
                REQUIRE(found.has_value());
                CHECK(*found == o.correction);
            }
        }

    const Matrix zx = correction_matrix(Correction::ZX);
    const Matrix y = pauli_matrix(Pauli::Y);
    CHECK(((zx - complex(0, 1) * y).norm() < 1e-15));
}

TEST_CASE("cost certificate")
{
    for (int two_n : {4, 6}) {
        const auto cert = cost_certificate(two_n, FamilyLabel::RhoPlus);
        CHECK(cert.lower_bound == doctest::Approx(two_n / 2).epsilon(1e-12));
        CHECK(cert.achieved == two_n / 2);
        CHECK(cert.exact);
        CHECK(cert.protocol_mode == PrepareMode::Exact);
        CHECK(cert.preparation_distance < 1e-12);
        CHECK(cert.cuts.size() == static_cast<std::size_t>(two_n));
        for (const auto& c : cert.cuts)
            CHECK(c.justified);
    }
    CHECK(cost_certificate(4, FamilyLabel::SigmaMinus).exact);

    const auto eight = cost_certificate(8, FamilyLabel::RhoPlus, {std::nullopt, 200, 3});
    CHECK(eight.lower_bound == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(eight.achieved == 4);
    CHECK(eight.exact);
    CHECK(eight.protocol_mode == PrepareMode::Sampled);
    CHECK(eight.achieved_weights.at(1, 2) == 1.0);
    CHECK(eight.achieved_weights.at(7, 8) == 1.0);
}
