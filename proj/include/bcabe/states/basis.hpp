#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bcabe/tensor/types.hpp"

namespace bcabe {

/// Binary string of even length >= 2; character i is qubit i + 1.
class BasisString {
public:
    explicit BasisString(std::string bits);

    std::size_t length() const { return bits_.size(); }
    bool bit(std::size_t i) const { return bits_[i] == '1'; }
    std::size_t zero_count() const;
    /// Computational basis index, first character most significant.
    std::uint64_t index() const;
    const std::string& str() const { return bits_; }

    friend auto operator<=>(const BasisString&, const BasisString&) = default;

private:
    std::string bits_;
};

/// p-strings have an even number of zeros, q-strings an odd number.
enum class StringFamily { P, Q };

/// Strings of length two_n starting with 0 and with the family's zero-count
/// parity, in lexicographic order. two_n must be even and >= 4.
std::vector<BasisString> enumerate_parity_strings(int two_n, StringFamily family);

BasisString complement(const BasisString& s);

struct GhzBasisState {
    BasisString base;
    int sign;
    PureState state;
};

/// (|base> + sign |complement(base)>) / sqrt(2). The base must start with 0.
GhzBasisState ghz_state(const BasisString& base, int sign);

/// All 2^two_n GHZ states: p-family then q-family, + before -, strings in
/// lexicographic order.
std::vector<GhzBasisState> ghz_basis(int two_n);

namespace detail {
/// As enumerate_parity_strings but also admits two_n = 2 (recursion base).
std::vector<BasisString> parity_strings(int two_n, StringFamily family);
} // namespace detail

} // namespace bcabe
