#include "bcabe/tensor/ops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bcabe/tensor/kernels.hpp"

namespace bcabe {

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b)
{
    const int n = a.num_qubits() + b.num_qubits();
    (void)dimension_of(n);
    return DensityMatrix::trusted(n, kernels::kron(a.matrix(), b.matrix()));
}

PureState tensor_product(const PureState& a, const PureState& b)
{
    const int n = a.num_qubits() + b.num_qubits();
    (void)dimension_of(n);
    return PureState(n, kernels::kron(a.amplitudes(), b.amplitudes()));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const QubitSubset& discard)
{
    const int n = rho.num_qubits();
    const auto mask = discard.mask(n);
    if (discard.empty())
        return rho;
    if (static_cast<int>(discard.size()) == n)
        throw std::invalid_argument("cannot trace out every qubit");
    return DensityMatrix::trusted(n - static_cast<int>(discard.size()), kernels::partial_trace(rho.matrix(), n, mask));
}

Matrix partial_transpose(const DensityMatrix& rho, const QubitSubset& subset)
{
    return partial_transpose(rho.matrix(), rho.num_qubits(), subset);
}

Matrix partial_transpose(const Matrix& m, int num_qubits, const QubitSubset& subset)
{
    const auto dim = static_cast<Eigen::Index>(dimension_of(num_qubits));
    if (m.rows() != dim || m.cols() != dim)
        throw std::invalid_argument("matrix dimension does not match qubit count");
    return kernels::partial_transpose(m, num_qubits, subset.mask(num_qubits));
}

std::vector<double> hermitian_eigenvalues(const Matrix& m)
{
    if (!is_hermitian(m, tol::kStructure))
        throw std::invalid_argument("eigenvalue input is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(Eigen::MatrixXcd(m), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("Hermitian eigensolver did not converge");
    const auto& values = solver.eigenvalues();
    std::vector<double> out(values.data(), values.data() + values.size());
    std::sort(out.begin(), out.end());
    return out;
}

double fidelity_with_pure(const DensityMatrix& rho, const PureState& psi)
{
    if (rho.num_qubits() != psi.num_qubits())
        throw std::invalid_argument("fidelity: qubit counts differ");
    return std::clamp(kernels::expectation(rho.matrix(), psi.amplitudes()), 0.0, 1.0);
}

double trace_norm_distance(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("trace distance: dimensions differ");
    double sum = 0.0;
    for (double v : hermitian_eigenvalues(a - b))
        sum += std::abs(v);
    return 0.5 * sum;
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b)
{
    if (a.num_qubits() != b.num_qubits())
        throw std::invalid_argument("trace distance: qubit counts differ");
    return std::min(1.0, trace_norm_distance(a.matrix(), b.matrix()));
}

namespace {

void check_unitary_on(const Matrix& u, const QubitSubset& subset, int num_qubits)
{
    subset.check_range(num_qubits);
    const auto local = Eigen::Index{1} << subset.size();
    if (u.rows() != local || u.cols() != local)
        throw std::invalid_argument("unitary dimension does not match subset size");
    if (!is_unitary(u, tol::kStructure))
        throw std::invalid_argument("operator is not unitary");
}

} // namespace

DensityMatrix apply_unitary_on_subset(const DensityMatrix& rho, const Matrix& u, const QubitSubset& subset)
{
    check_unitary_on(u, subset, rho.num_qubits());
    Matrix m = rho.matrix();
    kernels::apply_left(m, rho.num_qubits(), u, subset.indices());
    kernels::apply_right_adjoint(m, rho.num_qubits(), u, subset.indices());
    // Restore exact Hermiticity lost to rounding.
    Matrix sym = 0.5 * (m + m.adjoint());
    return DensityMatrix::trusted(rho.num_qubits(), std::move(sym));
}

PureState apply_unitary_on_subset(const PureState& psi, const Matrix& u, const QubitSubset& subset)
{
    check_unitary_on(u, subset, psi.num_qubits());
    Vector v = psi.amplitudes();
    kernels::apply(v, psi.num_qubits(), u, subset.indices());
    v.normalize();
    return PureState(psi.num_qubits(), std::move(v));
}

DensityMatrix permute_qubits(const DensityMatrix& rho, std::span<const int> order)
{
    return DensityMatrix::trusted(rho.num_qubits(), kernels::permute_qubits(rho.matrix(), rho.num_qubits(), order));
}

MeasurementBranch project_and_renormalize(const DensityMatrix& rho, const Projector& p)
{
    if (rho.num_qubits() != p.num_qubits())
        throw std::invalid_argument("projector dimension does not match state");
    const Matrix& pm = p.matrix();
    Matrix projected = pm * rho.matrix() * pm;
    const double probability = std::clamp(projected.trace().real(), 0.0, 1.0);
    MeasurementBranch branch;
    branch.probability = probability;
    if (probability < tol::kZeroBranch)
        return branch;
    projected /= probability;
    Matrix sym = 0.5 * (projected + projected.adjoint());
    branch.state = DensityMatrix::trusted(rho.num_qubits(), std::move(sym));
    return branch;
}

} // namespace bcabe
