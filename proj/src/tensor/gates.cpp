#include "bcabe/tensor/gates.hpp"

#include <cmath>

namespace bcabe {

std::string_view to_string(Pauli p)
{
    switch (p) {
    case Pauli::I: return "I";
    case Pauli::X: return "X";
    case Pauli::Y: return "Y";
    case Pauli::Z: return "Z";
    }
    return "?";
}

Matrix pauli_matrix(Pauli p)
{
    Matrix m = Matrix::Zero(2, 2);
    switch (p) {
    case Pauli::I:
        m(0, 0) = 1.0;
        m(1, 1) = 1.0;
        break;
    case Pauli::X:
        m(0, 1) = 1.0;
        m(1, 0) = 1.0;
        break;
    case Pauli::Y:
        m(0, 1) = complex{0.0, -1.0};
        m(1, 0) = complex{0.0, 1.0};
        break;
    case Pauli::Z:
        m(0, 0) = 1.0;
        m(1, 1) = -1.0;
        break;
    }
    return m;
}

namespace gates {

Matrix identity(int num_qubits)
{
    const auto dim = static_cast<Eigen::Index>(dimension_of(num_qubits));
    return Matrix::Identity(dim, dim);
}

Matrix hadamard()
{
    const double h = 1.0 / std::sqrt(2.0);
    Matrix m(2, 2);
    m << h, h, h, -h;
    return m;
}

Matrix cnot()
{
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    m(2, 3) = 1.0;
    m(3, 2) = 1.0;
    return m;
}

} // namespace gates

} // namespace bcabe
