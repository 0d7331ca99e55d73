#include "bcabe/tensor/kernels.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace bcabe::kernels {

namespace {

using Index = std::int64_t;

// Offsets of the 2^k local basis states inside the global index, the first
// position being the most significant local bit.
std::vector<Index> local_offsets(int num_qubits, std::span<const int> positions)
{
    const int k = static_cast<int>(positions.size());
    std::uint64_t seen = 0;
    for (int p : positions) {
        if (p < 1 || p > num_qubits)
            throw std::out_of_range("kernel position out of range");
        const std::uint64_t bit = std::uint64_t{1} << (num_qubits - p);
        if (seen & bit)
            throw std::invalid_argument("kernel positions must be distinct");
        seen |= bit;
    }
    std::vector<Index> offsets(std::size_t{1} << k, 0);
    for (std::size_t l = 0; l < offsets.size(); ++l)
        for (int j = 0; j < k; ++j)
            if ((l >> (k - 1 - j)) & 1U)
                offsets[l] |= Index{1} << (num_qubits - positions[static_cast<std::size_t>(j)]);
    return offsets;
}

std::uint64_t positions_mask(int num_qubits, std::span<const int> positions)
{
    std::uint64_t mask = 0;
    for (int p : positions)
        mask |= std::uint64_t{1} << (num_qubits - p);
    return mask;
}

// Global indices whose bits under `mask` are all zero, ascending.
std::vector<Index> bases_outside(int num_qubits, std::uint64_t mask)
{
    std::vector<Index> bases;
    const Index dim = Index{1} << num_qubits;
    bases.reserve(static_cast<std::size_t>(dim >> std::popcount(mask)));
    for (Index i = 0; i < dim; ++i)
        if ((static_cast<std::uint64_t>(i) & mask) == 0)
            bases.push_back(i);
    return bases;
}

void check_operator(const Matrix& u, std::size_t k)
{
    const Index local = Index{1} << k;
    if (u.rows() != local || u.cols() != local)
        throw std::invalid_argument("operator dimension does not match the number of positions");
}

} // namespace

Matrix kron(const Matrix& a, const Matrix& b)
{
    const Index ar = a.rows(), ac = a.cols(), br = b.rows(), bc = b.cols();
    Matrix out(ar * br, ac * bc);
#pragma omp parallel for schedule(static)
    for (Index row = 0; row < ar * br; ++row) {
        const Index i = row / br, k = row % br;
        for (Index j = 0; j < ac; ++j) {
            const complex aij = a(i, j);
            for (Index l = 0; l < bc; ++l)
                out(row, j * bc + l) = aij * b(k, l);
        }
    }
    return out;
}

Vector kron(const Vector& a, const Vector& b)
{
    const Index na = a.size(), nb = b.size();
    Vector out(na * nb);
#pragma omp parallel for schedule(static)
    for (Index i = 0; i < na * nb; ++i)
        out(i) = a(i / nb) * b(i % nb);
    return out;
}

Matrix partial_transpose(const Matrix& m, int num_qubits, std::uint64_t mask)
{
    const Index dim = Index{1} << num_qubits;
    const auto keep = ~mask;
    Matrix out(dim, dim);
#pragma omp parallel for schedule(static)
    for (Index r = 0; r < dim; ++r) {
        const auto ur = static_cast<std::uint64_t>(r);
        for (Index c = 0; c < dim; ++c) {
            const auto uc = static_cast<std::uint64_t>(c);
            const auto src_r = (ur & keep) | (uc & mask);
            const auto src_c = (uc & keep) | (ur & mask);
            out(r, c) = m(static_cast<Index>(src_r), static_cast<Index>(src_c));
        }
    }
    return out;
}

Matrix partial_trace(const Matrix& m, int num_qubits, std::uint64_t discard_mask)
{
    const int discarded = std::popcount(discard_mask);
    const int kept = num_qubits - discarded;
    const auto kept_mask = ((std::uint64_t{1} << num_qubits) - 1) & ~discard_mask;

    // Deposit a compact index into the bit positions of a mask.
    auto deposit = [](std::uint64_t value, std::uint64_t mask) {
        std::uint64_t out = 0;
        for (std::uint64_t bit = 1; mask != 0; bit <<= 1) {
            const std::uint64_t low = mask & (~mask + 1);
            if (value & bit)
                out |= low;
            mask &= mask - 1;
        }
        return out;
    };

    const Index kdim = Index{1} << kept, ddim = Index{1} << discarded;
    std::vector<Index> kept_at(static_cast<std::size_t>(kdim)), disc_at(static_cast<std::size_t>(ddim));
    for (Index a = 0; a < kdim; ++a)
        kept_at[static_cast<std::size_t>(a)] = static_cast<Index>(deposit(static_cast<std::uint64_t>(a), kept_mask));
    for (Index t = 0; t < ddim; ++t)
        disc_at[static_cast<std::size_t>(t)] = static_cast<Index>(deposit(static_cast<std::uint64_t>(t), discard_mask));

    Matrix out(kdim, kdim);
#pragma omp parallel for schedule(static)
    for (Index a = 0; a < kdim; ++a) {
        for (Index b = 0; b < kdim; ++b) {
            complex sum{0.0, 0.0};
            for (Index t : disc_at)
                sum += m(kept_at[static_cast<std::size_t>(a)] | t, kept_at[static_cast<std::size_t>(b)] | t);
            out(a, b) = sum;
        }
    }
    return out;
}

void apply_left(Matrix& m, int num_qubits, const Matrix& u, std::span<const int> positions)
{
    check_operator(u, positions.size());
    const auto offsets = local_offsets(num_qubits, positions);
    const auto bases = bases_outside(num_qubits, positions_mask(num_qubits, positions));
    const Index local = static_cast<Index>(offsets.size());
    const Index cols = m.cols();
    const Index nbases = static_cast<Index>(bases.size());

#pragma omp parallel
    {
        Matrix block(local, cols);
#pragma omp for schedule(static)
        for (Index b = 0; b < nbases; ++b) {
            const Index base = bases[static_cast<std::size_t>(b)];
            for (Index l = 0; l < local; ++l)
                block.row(l) = m.row(base + offsets[static_cast<std::size_t>(l)]);
            for (Index l = 0; l < local; ++l) {
                auto row = m.row(base + offsets[static_cast<std::size_t>(l)]);
                row.setZero();
                for (Index lp = 0; lp < local; ++lp)
                    if (u(l, lp) != complex{})
                        row += u(l, lp) * block.row(lp);
            }
        }
    }
}

void apply_right_adjoint(Matrix& m, int num_qubits, const Matrix& u, std::span<const int> positions)
{
    check_operator(u, positions.size());
    const auto offsets = local_offsets(num_qubits, positions);
    const auto bases = bases_outside(num_qubits, positions_mask(num_qubits, positions));
    const Index local = static_cast<Index>(offsets.size());
    const Matrix uc = u.conjugate();
    const Index rows = m.rows();

#pragma omp parallel
    {
        std::vector<complex> gathered(static_cast<std::size_t>(local));
#pragma omp for schedule(static)
        for (Index r = 0; r < rows; ++r) {
            for (Index base : bases) {
                for (Index l = 0; l < local; ++l)
                    gathered[static_cast<std::size_t>(l)] = m(r, base + offsets[static_cast<std::size_t>(l)]);
                for (Index l = 0; l < local; ++l) {
                    complex sum{0.0, 0.0};
                    for (Index lp = 0; lp < local; ++lp)
                        sum += uc(l, lp) * gathered[static_cast<std::size_t>(lp)];
                    m(r, base + offsets[static_cast<std::size_t>(l)]) = sum;
                }
            }
        }
    }
}

void apply(Vector& v, int num_qubits, const Matrix& u, std::span<const int> positions)
{
    check_operator(u, positions.size());
    const auto offsets = local_offsets(num_qubits, positions);
    const auto bases = bases_outside(num_qubits, positions_mask(num_qubits, positions));
    const Index local = static_cast<Index>(offsets.size());
    const Index nbases = static_cast<Index>(bases.size());

#pragma omp parallel
    {
        std::vector<complex> gathered(static_cast<std::size_t>(local));
#pragma omp for schedule(static)
        for (Index b = 0; b < nbases; ++b) {
            const Index base = bases[static_cast<std::size_t>(b)];
            for (Index l = 0; l < local; ++l)
                gathered[static_cast<std::size_t>(l)] = v(base + offsets[static_cast<std::size_t>(l)]);
            for (Index l = 0; l < local; ++l) {
                complex sum{0.0, 0.0};
                for (Index lp = 0; lp < local; ++lp)
                    sum += u(l, lp) * gathered[static_cast<std::size_t>(lp)];
                v(base + offsets[static_cast<std::size_t>(l)]) = sum;
            }
        }
    }
}

namespace {

std::vector<Index> permutation_map(int num_qubits, std::span<const int> order)
{
    if (static_cast<int>(order.size()) != num_qubits)
        throw std::invalid_argument("permutation length must equal the qubit count");
    // Validates range and distinctness.
    (void)local_offsets(num_qubits, order);
    const Index dim = Index{1} << num_qubits;
    std::vector<Index> map(static_cast<std::size_t>(dim), 0);
    for (Index old = 0; old < dim; ++old) {
        Index target = 0;
        for (int i = 1; i <= num_qubits; ++i) {
            const int src = order[static_cast<std::size_t>(i - 1)];
            if ((old >> (num_qubits - src)) & 1)
                target |= Index{1} << (num_qubits - i);
        }
        map[static_cast<std::size_t>(old)] = target;
    }
    return map;
}

} // namespace

Matrix permute_qubits(const Matrix& m, int num_qubits, std::span<const int> order)
{
    const auto map = permutation_map(num_qubits, order);
    const Index dim = m.rows();
    Matrix out(dim, dim);
#pragma omp parallel for schedule(static)
    for (Index r = 0; r < dim; ++r) {
        const Index nr = map[static_cast<std::size_t>(r)];
        for (Index c = 0; c < dim; ++c)
            out(nr, map[static_cast<std::size_t>(c)]) = m(r, c);
    }
    return out;
}

Vector permute_qubits(const Vector& v, int num_qubits, std::span<const int> order)
{
    const auto map = permutation_map(num_qubits, order);
    Vector out(v.size());
    for (Index i = 0; i < v.size(); ++i)
        out(map[static_cast<std::size_t>(i)]) = v(i);
    return out;
}

void accumulate_outer(Matrix& acc, const Vector& psi, double weight)
{
    const Index dim = psi.size();
    if (acc.rows() != dim || acc.cols() != dim)
        throw std::invalid_argument("accumulator dimension mismatch");
#pragma omp parallel for schedule(static)
    for (Index r = 0; r < dim; ++r) {
        const complex left = weight * psi(r);
        if (left == complex{})
            continue;
        for (Index c = 0; c < dim; ++c)
            acc(r, c) += left * std::conj(psi(c));
    }
}

double expectation(const Matrix& m, const Vector& psi)
{
    const Index dim = psi.size();
    if (m.rows() != dim || m.cols() != dim)
        throw std::invalid_argument("expectation dimension mismatch");
    // Per-row terms summed serially so the result does not depend on the thread count.
    std::vector<double> terms(static_cast<std::size_t>(dim), 0.0);
#pragma omp parallel for schedule(static)
    for (Index r = 0; r < dim; ++r) {
        if (psi(r) == complex{})
            continue;
        complex row{0.0, 0.0};
        for (Index c = 0; c < dim; ++c)
            row += m(r, c) * psi(c);
        terms[static_cast<std::size_t>(r)] = (std::conj(psi(r)) * row).real();
    }
    double total = 0.0;
    for (double t : terms)
        total += t;
    return total;
}

} // namespace bcabe::kernels
