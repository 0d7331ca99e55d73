#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace bcabe {

using complex = std::complex<double>;
using Matrix = Eigen::Matrix<complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::Matrix<complex, Eigen::Dynamic, 1>;

namespace tol {
inline constexpr double kState = 1e-12;     // equality of states, trace, hermiticity
inline constexpr double kStructure = 1e-10; // PSD, idempotence, unitarity
inline constexpr double kZeroBranch = 1e-14;
} // namespace tol

inline constexpr int kMaxQubits = 12;

std::size_t dimension_of(int num_qubits);

/// Qubit positions (1-based, strictly increasing). Range against a concrete
/// system size is checked where the subset is used.
class QubitSubset {
public:
    QubitSubset() = default;
    QubitSubset(std::initializer_list<int> indices);
    explicit QubitSubset(std::vector<int> indices);

    /// {first, ..., last}; empty when last < first.
    static QubitSubset range(int first, int last);
    static QubitSubset from_mask(int num_qubits, std::uint64_t mask);

    const std::vector<int>& indices() const { return indices_; }
    std::size_t size() const { return indices_.size(); }
    bool empty() const { return indices_.empty(); }
    bool contains(int q) const;

    /// Throws std::out_of_range unless every index lies in 1..num_qubits.
    void check_range(int num_qubits) const;
    QubitSubset complement(int num_qubits) const;
    /// Bit (num_qubits - q) set for each member q.
    std::uint64_t mask(int num_qubits) const;

    friend bool operator==(const QubitSubset&, const QubitSubset&) = default;

private:
    std::vector<int> indices_;
};

/// Normalized state vector on num_qubits qubits; qubit 1 is the most
/// significant bit of the basis index.
class PureState {
public:
    PureState(int num_qubits, Vector amplitudes);

    /// Computational basis state from a '0'/'1' string, qubit 1 first.
    static PureState basis(std::string_view bits);

    int num_qubits() const { return num_qubits_; }
    std::size_t dimension() const { return static_cast<std::size_t>(amplitudes_.size()); }
    const Vector& amplitudes() const { return amplitudes_; }
    complex operator[](std::size_t i) const { return amplitudes_[static_cast<Eigen::Index>(i)]; }

private:
    int num_qubits_;
    Vector amplitudes_;
};

class DensityMatrix {
public:
    /// Validates Hermiticity, unit trace and positive semidefiniteness.
    DensityMatrix(int num_qubits, Matrix entries);

    /// [psi]
    static DensityMatrix projector_of(const PureState& psi);
    static DensityMatrix maximally_mixed(int num_qubits);
    /// For outputs of operations that preserve the invariants by construction
    /// (Kronecker products, partial traces, unitary conjugation). Hermiticity
    /// and trace are still checked; the spectrum is not.
    static DensityMatrix trusted(int num_qubits, Matrix entries);

    int num_qubits() const { return num_qubits_; }
    std::size_t dimension() const { return static_cast<std::size_t>(entries_.rows()); }
    const Matrix& matrix() const { return entries_; }
    complex operator()(std::size_t r, std::size_t c) const
    {
        return entries_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }

private:
    struct Unchecked {};
    DensityMatrix(int num_qubits, Matrix entries, Unchecked);

    int num_qubits_;
    Matrix entries_;
};

/// Hermitian idempotent operator.
class Projector {
public:
    Projector(int num_qubits, Matrix entries);

    static Projector onto(const PureState& psi);
    /// Orthogonal projector onto the support of rho (eigenvalues above tol::kStructure).
    static Projector support_of(const DensityMatrix& rho);
    static Projector identity(int num_qubits);

    int num_qubits() const { return num_qubits_; }
    const Matrix& matrix() const { return entries_; }

private:
    int num_qubits_;
    Matrix entries_;
};

bool is_hermitian(const Matrix& m, double tolerance);
bool is_unitary(const Matrix& m, double tolerance);

} // namespace bcabe
