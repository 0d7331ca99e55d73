#pragma once

// Index-permutation and contraction kernels on dense row-major matrices.
//
// Every kernel exists twice: the OpenMP version in bcabe::kernels and a plain
// loop-per-element reference in bcabe::kernels::serial. The references are
// used by the tests and the benchmark; library code calls the parallel ones.
//
// Qubit q (1-based) of an n-qubit register sits at bit (n - q) of the basis
// index. Masks use that bit layout. Position lists are 1-based and may be in
// any order; the first listed position is the most significant qubit of the
// operator applied there.

#include <cstdint>
#include <span>

#include "bcabe/tensor/types.hpp"

namespace bcabe::kernels {

Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

Matrix partial_transpose(const Matrix& m, int num_qubits, std::uint64_t mask);
Matrix partial_trace(const Matrix& m, int num_qubits, std::uint64_t discard_mask);

/// m <- (u on positions) * m
void apply_left(Matrix& m, int num_qubits, const Matrix& u, std::span<const int> positions);
/// m <- m * (u on positions)^dagger
void apply_right_adjoint(Matrix& m, int num_qubits, const Matrix& u, std::span<const int> positions);
void apply(Vector& v, int num_qubits, const Matrix& u, std::span<const int> positions);

/// New qubit i takes old qubit order[i - 1].
Matrix permute_qubits(const Matrix& m, int num_qubits, std::span<const int> order);
Vector permute_qubits(const Vector& v, int num_qubits, std::span<const int> order);

/// acc += weight * |psi><psi|
void accumulate_outer(Matrix& acc, const Vector& psi, double weight);
/// Re <psi|m|psi>
double expectation(const Matrix& m, const Vector& psi);

namespace serial {

Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);
Matrix partial_transpose(const Matrix& m, int num_qubits, std::uint64_t mask);
Matrix partial_trace(const Matrix& m, int num_qubits, std::uint64_t discard_mask);
void apply_left(Matrix& m, int num_qubits, const Matrix& u, std::span<const int> positions);
void apply_right_adjoint(Matrix& m, int num_qubits, const Matrix& u, std::span<const int> positions);
void apply(Vector& v, int num_qubits, const Matrix& u, std::span<const int> positions);
Matrix permute_qubits(const Matrix& m, int num_qubits, std::span<const int> order);
Vector permute_qubits(const Vector& v, int num_qubits, std::span<const int> order);
void accumulate_outer(Matrix& acc, const Vector& psi, double weight);
double expectation(const Matrix& m, const Vector& psi);

} // namespace serial

} // namespace bcabe::kernels
