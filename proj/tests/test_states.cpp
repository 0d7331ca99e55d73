#include <doctest.h>

#include <cmath>
#include <numeric>
#include <set>

#include "bcabe/states/basis.hpp"
#include "bcabe/states/checks.hpp"
#include "bcabe/states/families.hpp"
#include "bcabe/tensor/ops.hpp"
#include "oracles.hpp"

using namespace bcabe;

namespace {

std::vector<std::string> as_strings(const std::vector<BasisString>& v)
{
    std::vector<std::string> out;
    for (const auto& s : v)
        out.push_back(s.str());
    return out;
}

// X-parity and Z-parity bits of a Bell state: Phi+ (0,0), Phi- (1,0), Psi+ (0,1), Psi- (1,1).
std::pair<int, int> bell_parities(BellLabel b)
{
    switch (b) {
    case BellLabel::PhiPlus: return {0, 0};
    case BellLabel::PhiMinus: return {1, 0};
    case BellLabel::PsiPlus: return {0, 1};
    case BellLabel::PsiMinus: return {1, 1};
    }
    return {0, 0};
}

std::pair<int, int> family_parities(FamilyLabel f)
{
    return {sign_of(f) > 0 ? 0 : 1, is_rho(f) ? 0 : 1};
}

} // namespace

TEST_CASE("enumerate_parity_strings")
{
    CHECK(as_strings(enumerate_parity_strings(4, StringFamily::P)) ==
          std::vector<std::string>{"0000", "0011", "0101", "0110"});
    CHECK(as_strings(enumerate_parity_strings(4, StringFamily::Q)) ==
          std::vector<std::string>{"0001", "0010", "0100", "0111"});
    for (int n : {4, 6, 8}) {
        const auto p = enumerate_parity_strings(n, StringFamily::P);
        const auto q = enumerate_parity_strings(n, StringFamily::Q);
        CHECK(p.size() == (std::size_t{1} << (n - 2)));
        CHECK(q.size() == (std::size_t{1} << (n - 2)));
        CHECK(as_strings(p) == oracle::brute_force_parity_strings(n, 0));
        CHECK(as_strings(q) == oracle::brute_force_parity_strings(n, 1));
    }
    CHECK_THROWS_AS(enumerate_parity_strings(5, StringFamily::P), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_parity_strings(2, StringFamily::P), std::invalid_argument);
}

TEST_CASE("complement")
{
    CHECK(complement(BasisString("0011")).str() == "1100");
    for (const auto& s : enumerate_parity_strings(6, StringFamily::Q)) {
        CHECK(complement(complement(s)) == s);
        CHECK(complement(s).zero_count() % 2 == s.zero_count() % 2);
    }
}

TEST_CASE("p, complement(p), q, complement(q) partition all strings")
{
    for (int n : {4, 6, 8}) {
        std::set<std::uint64_t> seen;
        std::size_t total = 0;
        for (auto fam : {StringFamily::P, StringFamily::Q}) {
            for (const auto& s : enumerate_parity_strings(n, fam)) {
                seen.insert(s.index());
                seen.insert(complement(s).index());
                total += 2;
            }
        }
        CHECK(total == (std::size_t{1} << n));
        CHECK(seen.size() == (std::size_t{1} << n));
    }
}

TEST_CASE("ghz_state")
{
    const auto plus = ghz_state(BasisString("0000"), 1);
    const double h = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(plus.state[0] - complex{h, 0}) < 1e-15);
    CHECK(std::abs(plus.state[15] - complex{h, 0}) < 1e-15);
    CHECK((plus.state.amplitudes().cwiseAbs().array() > 0).count() == 2);
    const auto minus = ghz_state(BasisString("0000"), -1);
    CHECK(std::abs(plus.state.amplitudes().dot(minus.state.amplitudes())) < 1e-15);
    CHECK_THROWS_AS(ghz_state(BasisString("1000"), 1), std::invalid_argument);
}

TEST_CASE("GHZ states form an orthonormal basis")
{
    for (int n : {4, 6}) {
        const auto basis = ghz_basis(n);
        REQUIRE(basis.size() == (std::size_t{1} << n));
        Matrix vectors(static_cast<Eigen::Index>(basis.size()), static_cast<Eigen::Index>(basis.size()));
        for (std::size_t i = 0; i < basis.size(); ++i)
            vectors.col(static_cast<Eigen::Index>(i)) = basis[i].state.amplitudes();
        const Matrix gram = vectors.adjoint() * vectors;
        CHECK((gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("build_family")
{
    const auto rho4 = build_family(4, FamilyLabel::RhoPlus);
    const auto smolin = smolin_state();
    CHECK(trace_distance(rho4, smolin) < 1e-12);
    CHECK(oracle::jacobi_trace_distance(rho4.matrix(), smolin.matrix()) < 1e-12);

    for (int n : {4, 6}) {
        for (FamilyLabel f : kAllFamilies) {
            const auto rho = build_family(n, f);
            CHECK(std::abs(rho.matrix().trace().real() - 1.0) < 1e-12);
            const double level = 1.0 / static_cast<double>(std::size_t{1} << (n - 2));
            int rank = 0;
            for (double v : hermitian_eigenvalues(rho.matrix())) {
                const bool zero = std::abs(v) < 1e-12;
                CHECK((zero || std::abs(v - level) < 1e-12));
                rank += zero ? 0 : 1;
            }
            CHECK(rank == (1 << (n - 2)));
        }
    }

    const auto bell_proj = [](BellLabel b) { return DensityMatrix::projector_of(bell_state(b)); };
    CHECK(trace_distance(build_family(2, FamilyLabel::RhoPlus), bell_proj(BellLabel::PhiPlus)) < 1e-15);
    CHECK(trace_distance(build_family(2, FamilyLabel::RhoMinus), bell_proj(BellLabel::PhiMinus)) < 1e-15);
    CHECK(trace_distance(build_family(2, FamilyLabel::SigmaPlus), bell_proj(BellLabel::PsiPlus)) < 1e-15);
    CHECK(trace_distance(build_family(2, FamilyLabel::SigmaMinus), bell_proj(BellLabel::PsiMinus)) < 1e-15);

    CHECK_THROWS_AS(build_family(3, FamilyLabel::RhoPlus), std::invalid_argument);
    CHECK_THROWS_AS(build_family(0, FamilyLabel::RhoPlus), std::invalid_argument);
}

TEST_CASE("uniform mixture weight and orthogonal family supports")
{
    const auto rho4 = build_family(4, FamilyLabel::RhoPlus);
    CHECK(std::abs(fidelity_with_pure(rho4, ghz_state(BasisString("0000"), 1).state) - 0.25) < 1e-15);
    CHECK(std::abs(trace_distance(rho4, build_family(4, FamilyLabel::SigmaPlus)) - 1.0) < 1e-12);

    for (int n : {4, 6}) {
        const auto overlaps = family_overlaps(n);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                if (i != j)
                    CHECK(std::abs(overlaps[i][j]) < 1e-15);
    }
}

TEST_CASE("verify_recursion")
{
    for (int n : {4, 6, 8}) {
        const auto report = verify_recursion(n);
        CHECK(report.checks.size() == 8);
        CHECK(report.max_distance() < 1e-12);
    }
    // Six-qubit instance assembled by hand with the Bell pair first.
    const auto rhs = recursion_rhs(6, FamilyLabel::RhoPlus);
    CHECK(trace_distance(rhs, build_family(6, FamilyLabel::RhoPlus)) < 1e-12);
    CHECK_THROWS_AS(verify_recursion(2), std::invalid_argument);
}

TEST_CASE("Z on qubit 1 maps every Phi_i^+ to Phi_i^-")
{
    for (const auto& s : enumerate_parity_strings(4, StringFamily::P)) {
        const auto mapped = apply_unitary_on_subset(ghz_state(s, 1).state, pauli_matrix(Pauli::Z), QubitSubset{1});
        CHECK((mapped.amplitudes() - ghz_state(s, -1).state.amplitudes()).cwiseAbs().maxCoeff() < 1e-15);
    }
}

TEST_CASE("pauli_connection_search")
{
    CHECK(pauli_connection_search(FamilyLabel::RhoPlus, FamilyLabel::RhoMinus, 4) == PauliConnection{1, Pauli::Z});
    CHECK(pauli_connection_search(FamilyLabel::RhoPlus, FamilyLabel::SigmaPlus, 4) == PauliConnection{1, Pauli::X});
    CHECK(pauli_connection_search(FamilyLabel::RhoPlus, FamilyLabel::SigmaMinus, 4) == PauliConnection{1, Pauli::Y});
    for (int n : {4, 6}) {
        for (FamilyLabel a : kAllFamilies) {
            for (FamilyLabel b : kAllFamilies) {
                if (a == b)
                    continue;
                const auto ab = pauli_connection_search(a, b, n);
                const auto ba = pauli_connection_search(b, a, n);
                CHECK(ab.has_value());
                CHECK(ba.has_value());
            }
        }
    }
    CHECK_THROWS_AS(pauli_connection_search(FamilyLabel::RhoPlus, FamilyLabel::RhoPlus, 4), std::invalid_argument);
}

TEST_CASE("bell_tuple_decomposition")
{
    const auto d4 = bell_tuple_decomposition(build_family(4, FamilyLabel::RhoPlus), disjoint_pairing(4));
    REQUIRE(d4.terms.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(d4.terms[i].tuple == std::vector<BellLabel>{kAllBells[i], kAllBells[i]});
        CHECK(std::abs(d4.terms[i].weight - 0.25) < 1e-15);
    }

    const auto phi = DensityMatrix::projector_of(bell_state(BellLabel::PhiPlus));
    const auto single = bell_tuple_decomposition(tensor_product(phi, phi), disjoint_pairing(4));
    REQUIRE(single.terms.size() == 1);
    CHECK(single.terms[0].tuple == std::vector<BellLabel>{BellLabel::PhiPlus, BellLabel::PhiPlus});
    CHECK(std::abs(single.terms[0].weight - 1.0) < 1e-15);

    // Oracle: a Bell tuple lies in the family's support iff the XOR of the
    // pairs' X- and Z-parities equals the family's parity signature.
    for (int n : {4, 6}) {
        for (FamilyLabel f : kAllFamilies) {
            const auto d = bell_tuple_decomposition(build_family(n, f), disjoint_pairing(n));
            CHECK(d.reconstruction_error < 1e-12);
            CHECK(d.terms.size() == (std::size_t{1} << (n - 2)));
            for (const auto& t : d.terms) {
                int xp = 0, zp = 0;
                for (BellLabel b : t.tuple) {
                    xp ^= bell_parities(b).first;
                    zp ^= bell_parities(b).second;
                }
                CHECK(std::make_pair(xp, zp) == family_parities(f));
                CHECK(std::abs(t.weight - 1.0 / static_cast<double>(d.terms.size())) < 1e-15);
            }
        }
    }

    // A different pairing still decomposes the permutation-symmetric family.
    const Pairing crossed{{1, 4}, {2, 3}};
    CHECK(bell_tuple_decomposition(build_family(4, FamilyLabel::SigmaMinus), crossed).terms.size() == 4);
}

TEST_CASE("bell_tuple_decomposition errors")
{
    const auto rho = build_family(4, FamilyLabel::RhoPlus);
    CHECK_THROWS_AS(bell_tuple_decomposition(rho, Pairing{{1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(bell_tuple_decomposition(rho, Pairing{{1, 2}, {2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(bell_tuple_decomposition(rho, Pairing{{1, 2}, {3, 5}}), std::invalid_argument);
    const auto product = DensityMatrix::projector_of(PureState::basis("0000"));
    CHECK_THROWS_AS(bell_tuple_decomposition(product, disjoint_pairing(4)), NotBellCorrelated);
}

TEST_CASE("permutation invariance")
{
    CHECK(permutation_invariance_check(4, FamilyLabel::RhoPlus) < 1e-12);
    CHECK(permutation_invariance_check(6, FamilyLabel::RhoPlus) < 1e-12);
    const auto rho = build_family(4, FamilyLabel::SigmaMinus);
    const std::vector<int> identity{1, 2, 3, 4};
    CHECK(permutation_distance(rho, identity) == 0.0);
}

TEST_CASE("single-qubit marginals of the Smolin state are maximally mixed")
{
    const auto rho = smolin_state();
    for (int keep = 1; keep <= 4; ++keep) {
        std::vector<int> discard;
        for (int q = 1; q <= 4; ++q)
            if (q != keep)
                discard.push_back(q);
        const auto marginal = partial_trace(rho, QubitSubset(discard));
        CHECK((marginal.matrix() - Matrix::Identity(2, 2) * 0.5).cwiseAbs().maxCoeff() < 1e-15);
    }
}
