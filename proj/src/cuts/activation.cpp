#include "bcabe/cuts/activation.hpp"

#include <algorithm>
#include <stdexcept>

#include "bcabe/states/families.hpp"
#include "bcabe/tensor/gates.hpp"
#include "bcabe/tensor/kernels.hpp"
#include "bcabe/tensor/ops.hpp"

namespace bcabe {

namespace {

constexpr std::array kSearchOrder{Correction::I, Correction::Z, Correction::X, Correction::ZX};

// Indexed by the residual's family label: X parity picks the sign, Z parity rho vs sigma.
constexpr std::array<std::pair<FamilyLabel, Correction>, 4> kCorrectionTable{{
    {FamilyLabel::RhoPlus, Correction::I},
    {FamilyLabel::RhoMinus, Correction::Z},
    {FamilyLabel::SigmaPlus, Correction::X},
    {FamilyLabel::SigmaMinus, Correction::ZX},
}};

int x_parity(FamilyLabel f) { return sign_of(f) < 0 ? 1 : 0; }
int z_parity(FamilyLabel f) { return is_rho(f) ? 0 : 1; }

DensityMatrix corrected(const DensityMatrix& residual, Correction c)
{
    Matrix m = residual.matrix();
    const int first[] = {1};
    const Matrix u = correction_matrix(c);
    kernels::apply_left(m, 2, u, first);
    kernels::apply_right_adjoint(m, 2, u, first);
    return DensityMatrix::trusted(2, std::move(m));
}

} // namespace

std::string_view to_string(Correction c)
{
    switch (c) {
    case Correction::I: return "I";
    case Correction::Z: return "Z";
    case Correction::X: return "X";
    case Correction::ZX: return "ZX";
    }
    return "?";
}

Matrix correction_matrix(Correction c)
{
    switch (c) {
    case Correction::I: return pauli_matrix(Pauli::I);
    case Correction::Z: return pauli_matrix(Pauli::Z);
    case Correction::X: return pauli_matrix(Pauli::X);
    case Correction::ZX: return pauli_matrix(Pauli::Z) * pauli_matrix(Pauli::X);
    }
    throw std::invalid_argument("unknown correction");
}

Correction frozen_correction(FamilyLabel source, FamilyLabel outcome)
{
    const int x = x_parity(source) ^ x_parity(outcome);
    const int z = z_parity(source) ^ z_parity(outcome);
    const FamilyLabel residual = family_of(z == 0, x == 0 ? 1 : -1);
    for (auto [f, c] : kCorrectionTable)
        if (f == residual)
            return c;
    throw std::logic_error("correction table incomplete");
}

std::optional<Correction> search_correction(const DensityMatrix& residual)
{
    if (residual.num_qubits() != 2)
        throw std::invalid_argument("correction search needs a two-qubit state");
    const PureState phi = bell_state(BellLabel::PhiPlus);
    for (Correction c : kSearchOrder)
        if (1.0 - fidelity_with_pure(corrected(residual, c), phi) < tol::kState)
            return c;
    return std::nullopt;
}

double ActivationResult::min_fidelity() const
{
    double f = 1.0;
    for (const auto& o : outcomes)
        f = std::min(f, o.fidelity);
    return f;
}

ActivationResult activation_distill(int two_n, FamilyLabel label, const QubitSubset& together)
{
    if (two_n < 4 || two_n % 2 != 0)
        throw std::invalid_argument("two_n must be even and at least 4");
    if (static_cast<int>(together.size()) != two_n - 2)
        throw std::invalid_argument("activation needs exactly " + std::to_string(two_n - 2) + " parties together");
    together.check_range(two_n);

    const auto rest = together.complement(two_n).indices();
    ActivationResult result{two_n, label, together, {rest[0], rest[1]}, {}};
    const DensityMatrix rho = build_family(two_n, label);
    const std::uint64_t discard = together.mask(two_n);
    const PureState phi = bell_state(BellLabel::PhiPlus);

    for (FamilyLabel outcome : kAllFamilies) {
        const Matrix p = family_support(two_n - 2, outcome).matrix();
        Matrix m = rho.matrix();
        kernels::apply_left(m, two_n, p, together.indices());
        kernels::apply_right_adjoint(m, two_n, p, together.indices());
        const double prob = m.trace().real();
        if (prob < tol::kZeroBranch)
            throw std::logic_error("activation outcome " + std::string(to_string(outcome)) + " never occurs");
        Matrix r = kernels::partial_trace(m, two_n, discard) / prob;
        r = 0.5 * (r + r.adjoint()).eval();

        const Correction c = frozen_correction(label, outcome);
        DensityMatrix raw = DensityMatrix::trusted(2, std::move(r));
        DensityMatrix fixed = corrected(raw, c);
        const double f = fidelity_with_pure(fixed, phi);
        result.outcomes.push_back({outcome, prob, c, std::move(raw), std::move(fixed), f});
    }
    return result;
}

} // namespace bcabe
