#include "bcabe/states/families.hpp"

#include <stdexcept>
#include <string>

#include "bcabe/states/basis.hpp"
#include "bcabe/tensor/ops.hpp"

namespace bcabe {

namespace {

// Unnormalized sum of the family's GHZ projectors; each has weight 1.
Matrix family_projector_sum(int two_n, FamilyLabel label, std::size_t& rank)
{
    const auto strings = detail::parity_strings(two_n, is_rho(label) ? StringFamily::P : StringFamily::Q);
    const double sign = sign_of(label);
    const auto dim = static_cast<Eigen::Index>(dimension_of(two_n));
    Matrix m = Matrix::Zero(dim, dim);
    for (const auto& s : strings) {
        const auto i = static_cast<Eigen::Index>(s.index());
        const auto j = static_cast<Eigen::Index>(complement(s).index());
        m(i, i) += 0.5;
        m(j, j) += 0.5;
        m(i, j) += 0.5 * sign;
        m(j, i) += 0.5 * sign;
    }
    rank = strings.size();
    return m;
}

void check_size(int two_n)
{
    if (two_n < 2 || two_n % 2 != 0 || two_n > kMaxQubits)
        throw std::invalid_argument("family size must be even, at least 2 and at most " + std::to_string(kMaxQubits));
}

} // namespace

DensityMatrix build_family(int two_n, FamilyLabel label)
{
    check_size(two_n);
    std::size_t rank = 0;
    Matrix m = family_projector_sum(two_n, label, rank);
    m /= static_cast<double>(rank);
    return DensityMatrix::trusted(two_n, std::move(m));
}

Projector family_support(int two_n, FamilyLabel label)
{
    check_size(two_n);
    std::size_t rank = 0;
    return Projector(two_n, family_projector_sum(two_n, label, rank));
}

DensityMatrix smolin_state()
{
    Matrix m = Matrix::Zero(16, 16);
    for (BellLabel b : kAllBells) {
        const Vector v = bell_state(b).amplitudes();
        const Matrix proj = v * v.adjoint();
        m += 0.25 * tensor_product(DensityMatrix::trusted(2, proj), DensityMatrix::trusted(2, proj)).matrix();
    }
    return DensityMatrix(4, std::move(m));
}

} // namespace bcabe
