#pragma once

#include <string_view>

#include "bcabe/tensor/types.hpp"

namespace bcabe {

enum class Pauli { I, X, Y, Z };

std::string_view to_string(Pauli p);
Matrix pauli_matrix(Pauli p);

namespace gates {
Matrix identity(int num_qubits);
Matrix hadamard();
/// Control on the first (most significant) qubit.
Matrix cnot();
} // namespace gates

} // namespace bcabe
