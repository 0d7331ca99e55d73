#include "bcabe/states/checks.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bcabe/states/families.hpp"
#include "bcabe/tensor/kernels.hpp"
#include "bcabe/tensor/ops.hpp"

namespace bcabe {

// ------------------------------------------------------------------ recursion

namespace {

struct RecursionTerm {
    BellLabel bell;
    bool rho;      // smaller family is a rho family
    bool flipped;  // smaller family carries the opposite sign
};

// rho^s  = 1/4 ([Phi+] rho^s + [Phi-] rho^-s + [Psi+] sigma^s + [Psi-] sigma^-s)
// sigma^s = 1/4 ([Psi+] rho^s + [Psi-] rho^-s + [Phi+] sigma^s + [Phi-] sigma^-s)
std::array<RecursionTerm, 4> recursion_terms(FamilyLabel label)
{
    if (is_rho(label))
        return {{{BellLabel::PhiPlus, true, false},
                 {BellLabel::PhiMinus, true, true},
                 {BellLabel::PsiPlus, false, false},
                 {BellLabel::PsiMinus, false, true}}};
    return {{{BellLabel::PsiPlus, true, false},
             {BellLabel::PsiMinus, true, true},
             {BellLabel::PhiPlus, false, false},
             {BellLabel::PhiMinus, false, true}}};
}

} // namespace

DensityMatrix recursion_rhs(int two_n, FamilyLabel label, BellPlacement placement)
{
    if (two_n < 4 || two_n % 2 != 0)
        throw std::invalid_argument("recursion needs an even size of at least 4");
    const int sign = sign_of(label);
    const auto dim = static_cast<Eigen::Index>(dimension_of(two_n));
    Matrix sum = Matrix::Zero(dim, dim);
    for (const auto& term : recursion_terms(label)) {
        const auto bell = DensityMatrix::projector_of(bell_state(term.bell));
        const auto smaller = build_family(two_n - 2, family_of(term.rho, term.flipped ? -sign : sign));
        const auto product = placement == BellPlacement::Leading ? tensor_product(bell, smaller)
                                                                 : tensor_product(smaller, bell);
        sum += 0.25 * product.matrix();
    }
    return DensityMatrix::trusted(two_n, std::move(sum));
}

double RecursionReport::max_distance() const
{
    double worst = 0.0;
    for (const auto& c : checks)
        worst = std::max(worst, c.distance);
    return worst;
}

RecursionReport verify_recursion(int two_n)
{
    RecursionReport report;
    report.two_n = two_n;
    for (BellPlacement placement : {BellPlacement::Leading, BellPlacement::Trailing}) {
        for (FamilyLabel f : kAllFamilies) {
            const double d = trace_distance(recursion_rhs(two_n, f, placement), build_family(two_n, f));
            report.checks.push_back({f, placement, d});
        }
    }
    return report;
}

// ------------------------------------------------------------------ Pauli links

std::optional<PauliConnection> pauli_connection_search(FamilyLabel a, FamilyLabel b, int two_n)
{
    if (a == b)
        throw std::invalid_argument("Pauli connection search needs two distinct families");
    const auto from = build_family(two_n, a);
    const auto to = build_family(two_n, b);
    for (int q = 1; q <= two_n; ++q) {
        for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
            const auto mapped = apply_unitary_on_subset(from, pauli_matrix(p), QubitSubset{q});
            // Cheap entrywise screen before the spectral distance.
            if ((mapped.matrix() - to.matrix()).cwiseAbs().maxCoeff() > 1e-6)
                continue;
            if (trace_distance(mapped, to) < tol::kState)
                return PauliConnection{q, p};
        }
    }
    return std::nullopt;
}

// ------------------------------------------------------------------ Bell tuples

Pairing disjoint_pairing(int num_qubits)
{
    if (num_qubits < 2 || num_qubits % 2 != 0)
        throw std::invalid_argument("disjoint pairing needs an even qubit count");
    Pairing p;
    for (int q = 1; q < num_qubits; q += 2)
        p.emplace_back(q, q + 1);
    return p;
}

NotBellCorrelated::NotBellCorrelated(double error)
    : std::runtime_error("not Bell-correlated: reconstruction error " + std::to_string(error))
    , error_(error)
{
}

namespace {

// order[i - 1] = position of natural qubit i in the pair-major layout
// (pair 1 first member, pair 1 second member, pair 2 first member, ...).
std::vector<int> pairing_order(const Pairing& pairing, int num_qubits)
{
    if (static_cast<int>(pairing.size()) * 2 != num_qubits)
        throw std::invalid_argument("pairing must cover every qubit exactly once");
    std::vector<int> order(static_cast<std::size_t>(num_qubits), 0);
    int slot = 1;
    for (const auto& [a, b] : pairing) {
        for (int q : {a, b}) {
            if (q < 1 || q > num_qubits)
                throw std::invalid_argument("pairing index out of range");
            if (order[static_cast<std::size_t>(q - 1)] != 0)
                throw std::invalid_argument("pairing uses qubit " + std::to_string(q) + " twice");
            order[static_cast<std::size_t>(q - 1)] = slot++;
        }
    }
    return order;
}

} // namespace

PureState bell_product(const std::vector<BellLabel>& tuple, const Pairing& pairing)
{
    if (tuple.size() != pairing.size())
        throw std::invalid_argument("Bell tuple length must match the pairing");
    const int n = static_cast<int>(2 * pairing.size());
    const auto order = pairing_order(pairing, n);
    Vector v = bell_state(tuple.front()).amplitudes();
    for (std::size_t k = 1; k < tuple.size(); ++k)
        v = kernels::kron(v, bell_state(tuple[k]).amplitudes());
    return PureState(n, kernels::permute_qubits(v, n, order));
}

BellDecomposition bell_tuple_decomposition(const DensityMatrix& rho, const Pairing& pairing)
{
    const int n = rho.num_qubits();
    (void)pairing_order(pairing, n);
    const std::size_t pairs = pairing.size();
    const std::size_t total = std::size_t{1} << (2 * pairs);

    BellDecomposition out;
    out.pairing = pairing;
    const auto dim = static_cast<Eigen::Index>(rho.dimension());
    Matrix rebuilt = Matrix::Zero(dim, dim);
    std::vector<BellLabel> tuple(pairs);
    for (std::size_t code = 0; code < total; ++code) {
        for (std::size_t k = 0; k < pairs; ++k)
            tuple[k] = kAllBells[(code >> (2 * (pairs - 1 - k))) & 3U];
        const auto psi = bell_product(tuple, pairing);
        const double w = kernels::expectation(rho.matrix(), psi.amplitudes());
        if (w > 1e-12) {
            out.terms.push_back({tuple, w});
            kernels::accumulate_outer(rebuilt, psi.amplitudes(), w);
        }
    }
    out.reconstruction_error = trace_norm_distance(0.5 * (rebuilt + rebuilt.adjoint()), rho.matrix());
    if (out.reconstruction_error > 1e-12)
        throw NotBellCorrelated(out.reconstruction_error);
    return out;
}

// ------------------------------------------------------------------ symmetry

double permutation_distance(const DensityMatrix& rho, std::span<const int> order)
{
    return trace_distance(permute_qubits(rho, order), rho);
}

double permutation_invariance_check(int two_n, FamilyLabel label)
{
    const auto rho = build_family(two_n, label);
    std::vector<int> order(static_cast<std::size_t>(two_n));
    double worst = 0.0;
    for (int i = 1; i <= two_n; ++i) {
        for (int j = i + 1; j <= two_n; ++j) {
            std::iota(order.begin(), order.end(), 1);
            std::swap(order[static_cast<std::size_t>(i - 1)], order[static_cast<std::size_t>(j - 1)]);
            worst = std::max(worst, permutation_distance(rho, order));
        }
    }
    return worst;
}

std::array<std::array<double, 4>, 4> family_overlaps(int two_n)
{
    std::array<Matrix, 4> fams;
    for (std::size_t i = 0; i < 4; ++i)
        fams[i] = build_family(two_n, kAllFamilies[i]).matrix();
    std::array<std::array<double, 4>, 4> out{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            out[i][j] = (fams[i] * fams[j]).trace().real();
    return out;
}

} // namespace bcabe
