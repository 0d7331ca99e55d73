#include "bcabe/tensor/types.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "bcabe/tensor/ops.hpp"

namespace bcabe {

std::size_t dimension_of(int num_qubits)
{
    if (num_qubits < 1 || num_qubits > kMaxQubits)
        throw std::invalid_argument("qubit count " + std::to_string(num_qubits) + " outside 1.." +
                                    std::to_string(kMaxQubits));
    return std::size_t{1} << num_qubits;
}

// ---------------------------------------------------------------- QubitSubset

QubitSubset::QubitSubset(std::initializer_list<int> indices)
    : QubitSubset(std::vector<int>(indices))
{
}

QubitSubset::QubitSubset(std::vector<int> indices)
    : indices_(std::move(indices))
{
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (indices_[i] < 1)
            throw std::out_of_range("qubit indices are 1-based");
        if (i > 0 && indices_[i] <= indices_[i - 1])
            throw std::invalid_argument("qubit indices must be strictly increasing");
    }
}

QubitSubset QubitSubset::range(int first, int last)
{
    std::vector<int> v;
    for (int q = first; q <= last; ++q)
        v.push_back(q);
    return QubitSubset(std::move(v));
}

QubitSubset QubitSubset::from_mask(int num_qubits, std::uint64_t mask)
{
    std::vector<int> v;
    for (int q = 1; q <= num_qubits; ++q)
        if ((mask >> (num_qubits - q)) & 1U)
            v.push_back(q);
    return QubitSubset(std::move(v));
}

bool QubitSubset::contains(int q) const
{
    return std::binary_search(indices_.begin(), indices_.end(), q);
}

void QubitSubset::check_range(int num_qubits) const
{
    if (!indices_.empty() && indices_.back() > num_qubits)
        throw std::out_of_range("qubit index " + std::to_string(indices_.back()) + " exceeds system size " +
                                std::to_string(num_qubits));
}

QubitSubset QubitSubset::complement(int num_qubits) const
{
    check_range(num_qubits);
    std::vector<int> v;
    for (int q = 1; q <= num_qubits; ++q)
        if (!contains(q))
            v.push_back(q);
    return QubitSubset(std::move(v));
}

std::uint64_t QubitSubset::mask(int num_qubits) const
{
    check_range(num_qubits);
    std::uint64_t m = 0;
    for (int q : indices_)
        m |= std::uint64_t{1} << (num_qubits - q);
    return m;
}

// ---------------------------------------------------------------- PureState

PureState::PureState(int num_qubits, Vector amplitudes)
    : num_qubits_(num_qubits)
    , amplitudes_(std::move(amplitudes))
{
    if (static_cast<std::size_t>(amplitudes_.size()) != dimension_of(num_qubits))
        throw std::invalid_argument("amplitude vector length must be 2^num_qubits");
    if (std::abs(amplitudes_.squaredNorm() - 1.0) > tol::kState)
        throw std::invalid_argument("pure state is not normalized");
}

PureState PureState::basis(std::string_view bits)
{
    const int n = static_cast<int>(bits.size());
    Vector v = Vector::Zero(static_cast<Eigen::Index>(dimension_of(n)));
    Eigen::Index index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("basis string must contain only 0 and 1");
        index = (index << 1) | (c == '1' ? 1 : 0);
    }
    v(index) = 1.0;
    return PureState(n, std::move(v));
}

// ---------------------------------------------------------------- DensityMatrix

namespace {

void check_shape_and_trace(int num_qubits, const Matrix& m)
{
    const auto dim = static_cast<Eigen::Index>(dimension_of(num_qubits));
    if (m.rows() != dim || m.cols() != dim)
        throw std::invalid_argument("density matrix must be 2^n x 2^n");
    if (!is_hermitian(m, tol::kState))
        throw std::invalid_argument("density matrix is not Hermitian");
    if (std::abs(m.trace() - complex{1.0, 0.0}) > tol::kState)
        throw std::invalid_argument("density matrix trace differs from 1");
}

} // namespace

DensityMatrix::DensityMatrix(int num_qubits, Matrix entries)
    : num_qubits_(num_qubits)
    , entries_(std::move(entries))
{
    check_shape_and_trace(num_qubits_, entries_);
    const auto eig = hermitian_eigenvalues(entries_);
    if (eig.front() < -tol::kStructure)
        throw std::invalid_argument("density matrix is not positive semidefinite");
}

DensityMatrix::DensityMatrix(int num_qubits, Matrix entries, Unchecked)
    : num_qubits_(num_qubits)
    , entries_(std::move(entries))
{
    check_shape_and_trace(num_qubits_, entries_);
}

DensityMatrix DensityMatrix::projector_of(const PureState& psi)
{
    const Vector& a = psi.amplitudes();
    return DensityMatrix(psi.num_qubits(), a * a.adjoint(), Unchecked{});
}

DensityMatrix DensityMatrix::maximally_mixed(int num_qubits)
{
    const auto dim = static_cast<Eigen::Index>(dimension_of(num_qubits));
    return DensityMatrix(num_qubits, Matrix::Identity(dim, dim) / static_cast<double>(dim), Unchecked{});
}

DensityMatrix DensityMatrix::trusted(int num_qubits, Matrix entries)
{
    return DensityMatrix(num_qubits, std::move(entries), Unchecked{});
}

// ---------------------------------------------------------------- Projector

Projector::Projector(int num_qubits, Matrix entries)
    : num_qubits_(num_qubits)
    , entries_(std::move(entries))
{
    const auto dim = static_cast<Eigen::Index>(dimension_of(num_qubits));
    if (entries_.rows() != dim || entries_.cols() != dim)
        throw std::invalid_argument("projector must be 2^n x 2^n");
    if (!is_hermitian(entries_, tol::kStructure))
        throw std::invalid_argument("projector is not Hermitian");
    if ((entries_ * entries_ - entries_).cwiseAbs().maxCoeff() > tol::kStructure)
        throw std::invalid_argument("projector is not idempotent");
}

Projector Projector::onto(const PureState& psi)
{
    const Vector& a = psi.amplitudes();
    return Projector(psi.num_qubits(), a * a.adjoint());
}

Projector Projector::support_of(const DensityMatrix& rho)
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(Eigen::MatrixXcd(rho.matrix()));
    const auto& values = solver.eigenvalues();
    const auto& vectors = solver.eigenvectors();
    const auto dim = static_cast<Eigen::Index>(rho.dimension());
    Matrix p = Matrix::Zero(dim, dim);
    for (Eigen::Index k = 0; k < values.size(); ++k)
        if (values(k) > tol::kStructure)
            p += vectors.col(k) * vectors.col(k).adjoint();
    return Projector(rho.num_qubits(), std::move(p));
}

Projector Projector::identity(int num_qubits)
{
    const auto dim = static_cast<Eigen::Index>(dimension_of(num_qubits));
    return Projector(num_qubits, Matrix::Identity(dim, dim));
}

// ---------------------------------------------------------------- predicates

bool is_hermitian(const Matrix& m, double tolerance)
{
    if (m.rows() != m.cols())
        return false;
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tolerance;
}

bool is_unitary(const Matrix& m, double tolerance)
{
    if (m.rows() != m.cols())
        return false;
    return (m * m.adjoint() - Matrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <= tolerance;
}

} // namespace bcabe
