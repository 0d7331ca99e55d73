#include "bcabe/states/basis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bcabe {

BasisString::BasisString(std::string bits)
    : bits_(std::move(bits))
{
    if (bits_.size() < 2 || bits_.size() % 2 != 0)
        throw std::invalid_argument("basis string length must be even and at least 2");
    if (bits_.size() > 63)
        throw std::invalid_argument("basis string too long");
    if (!std::all_of(bits_.begin(), bits_.end(), [](char c) { return c == '0' || c == '1'; }))
        throw std::invalid_argument("basis string must contain only 0 and 1");
}

std::size_t BasisString::zero_count() const
{
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), '0'));
}

std::uint64_t BasisString::index() const
{
    std::uint64_t v = 0;
    for (char c : bits_)
        v = (v << 1) | (c == '1' ? 1U : 0U);
    return v;
}

namespace detail {

std::vector<BasisString> parity_strings(int two_n, StringFamily family)
{
    if (two_n < 2 || two_n % 2 != 0)
        throw std::invalid_argument("string length must be even and at least 2");
    if (two_n > kMaxQubits)
        throw std::invalid_argument("string length exceeds the supported qubit count");
    const std::size_t want_parity = family == StringFamily::P ? 0 : 1;
    std::vector<BasisString> out;
    // First bit fixed to 0: iterate the remaining two_n - 1 bits in order.
    const std::uint64_t count = std::uint64_t{1} << (two_n - 1);
    for (std::uint64_t tail = 0; tail < count; ++tail) {
        std::string bits(static_cast<std::size_t>(two_n), '0');
        for (int i = 1; i < two_n; ++i)
            if ((tail >> (two_n - 1 - i)) & 1U)
                bits[static_cast<std::size_t>(i)] = '1';
        BasisString s(std::move(bits));
        if (s.zero_count() % 2 == want_parity)
            out.push_back(std::move(s));
    }
    return out;
}

} // namespace detail

std::vector<BasisString> enumerate_parity_strings(int two_n, StringFamily family)
{
    if (two_n < 4 || two_n % 2 != 0)
        throw std::invalid_argument("parity strings need an even length of at least 4");
    return detail::parity_strings(two_n, family);
}

BasisString complement(const BasisString& s)
{
    std::string flipped = s.str();
    for (char& c : flipped)
        c = c == '0' ? '1' : '0';
    return BasisString(std::move(flipped));
}

GhzBasisState ghz_state(const BasisString& base, int sign)
{
    if (base.bit(0))
        throw std::invalid_argument("GHZ representative must start with 0");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("GHZ sign must be +1 or -1");
    const int n = static_cast<int>(base.length());
    const double h = 1.0 / std::sqrt(2.0);
    Vector v = Vector::Zero(static_cast<Eigen::Index>(dimension_of(n)));
    v(static_cast<Eigen::Index>(base.index())) = h;
    v(static_cast<Eigen::Index>(complement(base).index())) = sign * h;
    return GhzBasisState{base, sign, PureState(n, std::move(v))};
}

std::vector<GhzBasisState> ghz_basis(int two_n)
{
    std::vector<GhzBasisState> out;
    for (StringFamily fam : {StringFamily::P, StringFamily::Q})
        for (int sign : {1, -1})
            for (const auto& s : enumerate_parity_strings(two_n, fam))
                out.push_back(ghz_state(s, sign));
    return out;
}

} // namespace bcabe
