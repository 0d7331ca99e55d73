// Reference kernels: one element at a time, bit by bit, no precomputed
// tables and no threading. Kept for tests and the benchmark.

#include "bcabe/tensor/kernels.hpp"

#include <bit>
#include <stdexcept>

namespace bcabe::kernels::serial {

namespace {

using Index = std::int64_t;

int bit_of(Index value, int num_qubits, int qubit)
{
    return static_cast<int>((value >> (num_qubits - qubit)) & 1);
}

Index with_bit(Index value, int num_qubits, int qubit, int bit)
{
    const Index b = Index{1} << (num_qubits - qubit);
    return bit ? (value | b) : (value & ~b);
}

// Local index of `global` restricted to `positions`, first position most significant.
Index local_of(Index global, int num_qubits, std::span<const int> positions)
{
    Index l = 0;
    for (int p : positions)
        l = (l << 1) | bit_of(global, num_qubits, p);
    return l;
}

Index replace_local(Index global, int num_qubits, std::span<const int> positions, Index local)
{
    const int k = static_cast<int>(positions.size());
    for (int j = 0; j < k; ++j)
        global = with_bit(global, num_qubits, positions[static_cast<std::size_t>(j)],
                          static_cast<int>((local >> (k - 1 - j)) & 1));
    return global;
}

void check(int num_qubits, const Matrix& u, std::span<const int> positions)
{
    if (u.rows() != (Index{1} << positions.size()) || u.cols() != u.rows())
        throw std::invalid_argument("operator dimension does not match the number of positions");
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (positions[i] < 1 || positions[i] > num_qubits)
            throw std::out_of_range("kernel position out of range");
        for (std::size_t j = 0; j < i; ++j)
            if (positions[i] == positions[j])
                throw std::invalid_argument("kernel positions must be distinct");
    }
}

} // namespace

Matrix kron(const Matrix& a, const Matrix& b)
{
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            for (Index k = 0; k < b.rows(); ++k)
                for (Index l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

Vector kron(const Vector& a, const Vector& b)
{
    Vector out(a.size() * b.size());
    for (Index i = 0; i < a.size(); ++i)
        for (Index k = 0; k < b.size(); ++k)
            out(i * b.size() + k) = a(i) * b(k);
    return out;
}

Matrix partial_transpose(const Matrix& m, int num_qubits, std::uint64_t mask)
{
    const Index dim = m.rows();
    Matrix out(dim, dim);
    for (Index r = 0; r < dim; ++r) {
        for (Index c = 0; c < dim; ++c) {
            Index sr = r, sc = c;
            for (int q = 1; q <= num_qubits; ++q) {
                if (!((mask >> (num_qubits - q)) & 1U))
                    continue;
                const int br = bit_of(r, num_qubits, q), bc = bit_of(c, num_qubits, q);
                sr = with_bit(sr, num_qubits, q, bc);
                sc = with_bit(sc, num_qubits, q, br);
            }
            out(r, c) = m(sr, sc);
        }
    }
    return out;
}

Matrix partial_trace(const Matrix& m, int num_qubits, std::uint64_t discard_mask)
{
    auto compress = [&](Index value) {
        Index out = 0;
        for (int q = 1; q <= num_qubits; ++q)
            if (!((discard_mask >> (num_qubits - q)) & 1U))
                out = (out << 1) | bit_of(value, num_qubits, q);
        return out;
    };
    const int kept = num_qubits - std::popcount(discard_mask);
    const Index kdim = Index{1} << kept;
    Matrix out = Matrix::Zero(kdim, kdim);
    const auto dmask = static_cast<Index>(discard_mask);
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            if ((i & dmask) == (j & dmask))
                out(compress(i), compress(j)) += m(i, j);
    return out;
}

void apply_left(Matrix& m, int num_qubits, const Matrix& u, std::span<const int> positions)
{
    check(num_qubits, u, positions);
    const Matrix in = m;
    for (Index i = 0; i < m.rows(); ++i) {
        const Index li = local_of(i, num_qubits, positions);
        for (Index c = 0; c < m.cols(); ++c) {
            complex sum{0.0, 0.0};
            for (Index lp = 0; lp < u.cols(); ++lp)
                sum += u(li, lp) * in(replace_local(i, num_qubits, positions, lp), c);
            m(i, c) = sum;
        }
    }
}

void apply_right_adjoint(Matrix& m, int num_qubits, const Matrix& u, std::span<const int> positions)
{
    check(num_qubits, u, positions);
    const Matrix in = m;
    for (Index r = 0; r < m.rows(); ++r) {
        for (Index j = 0; j < m.cols(); ++j) {
            const Index lj = local_of(j, num_qubits, positions);
            complex sum{0.0, 0.0};
            for (Index lp = 0; lp < u.cols(); ++lp)
                sum += in(r, replace_local(j, num_qubits, positions, lp)) * std::conj(u(lj, lp));
            m(r, j) = sum;
        }
    }
}

void apply(Vector& v, int num_qubits, const Matrix& u, std::span<const int> positions)
{
    check(num_qubits, u, positions);
    const Vector in = v;
    for (Index i = 0; i < v.size(); ++i) {
        const Index li = local_of(i, num_qubits, positions);
        complex sum{0.0, 0.0};
        for (Index lp = 0; lp < u.cols(); ++lp)
            sum += u(li, lp) * in(replace_local(i, num_qubits, positions, lp));
        v(i) = sum;
    }
}

namespace {

Index permuted(Index old, int num_qubits, std::span<const int> order)
{
    Index out = 0;
    for (int i = 1; i <= num_qubits; ++i)
        out = with_bit(out, num_qubits, i, bit_of(old, num_qubits, order[static_cast<std::size_t>(i - 1)]));
    return out;
}

} // namespace

Matrix permute_qubits(const Matrix& m, int num_qubits, std::span<const int> order)
{
    if (static_cast<int>(order.size()) != num_qubits)
        throw std::invalid_argument("permutation length must equal the qubit count");
    Matrix out(m.rows(), m.cols());
    for (Index r = 0; r < m.rows(); ++r)
        for (Index c = 0; c < m.cols(); ++c)
            out(permuted(r, num_qubits, order), permuted(c, num_qubits, order)) = m(r, c);
    return out;
}

Vector permute_qubits(const Vector& v, int num_qubits, std::span<const int> order)
{
    if (static_cast<int>(order.size()) != num_qubits)
        throw std::invalid_argument("permutation length must equal the qubit count");
    Vector out(v.size());
    for (Index i = 0; i < v.size(); ++i)
        out(permuted(i, num_qubits, order)) = v(i);
    return out;
}

void accumulate_outer(Matrix& acc, const Vector& psi, double weight)
{
    for (Index r = 0; r < psi.size(); ++r)
        for (Index c = 0; c < psi.size(); ++c)
            acc(r, c) += weight * psi(r) * std::conj(psi(c));
}

double expectation(const Matrix& m, const Vector& psi)
{
    complex total{0.0, 0.0};
    for (Index r = 0; r < psi.size(); ++r)
        for (Index c = 0; c < psi.size(); ++c)
            total += std::conj(psi(r)) * m(r, c) * psi(c);
    return total.real();
}

} // namespace bcabe::kernels::serial
