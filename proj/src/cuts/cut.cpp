#include "bcabe/cuts/cut.hpp"

#include <algorithm>
#include <stdexcept>

namespace bcabe {

Cut::Cut(int num_parties, const QubitSubset& side)
    : num_parties_(num_parties)
{
    if (num_parties < 2 || num_parties > 63)
        throw std::invalid_argument("a cut needs between 2 and 63 parties");
    side.check_range(num_parties);
    if (side.empty() || static_cast<int>(side.size()) == num_parties)
        throw std::invalid_argument("cut sides must both be nonempty");
    side_a_ = side.contains(1) ? side : side.complement(num_parties);
    side_b_ = side_a_.complement(num_parties);
}

const QubitSubset& Cut::smaller_side() const
{
    return side_b_.size() < side_a_.size() ? side_b_ : side_a_;
}

bool Cut::crosses(int i, int j) const
{
    return side_a_.contains(i) != side_a_.contains(j);
}

std::string Cut::to_string() const
{
    auto join = [](const QubitSubset& s) {
        std::string out;
        for (int q : s.indices()) {
            if (!out.empty())
                out += ',';
            out += std::to_string(q);
        }
        return out;
    };
    return join(side_a_) + "|" + join(side_b_);
}

std::vector<Cut> enumerate_cuts(int num_parties, std::optional<int> side_size)
{
    if (num_parties < 2 || num_parties > 20)
        throw std::invalid_argument("cut enumeration supports 2..20 parties");
    if (side_size && (*side_size < 1 || *side_size > num_parties - 1))
        throw std::invalid_argument("side size must lie in 1.." + std::to_string(num_parties - 1));

    std::vector<Cut> cuts;
    const std::uint64_t party_one = std::uint64_t{1} << (num_parties - 1);
    const std::uint64_t all = (std::uint64_t{1} << num_parties) - 1;
    for (std::uint64_t rest = 0; rest < party_one; ++rest) {
        const std::uint64_t mask = party_one | rest;
        if (mask == all)
            continue;
        Cut c(num_parties, QubitSubset::from_mask(num_parties, mask));
        if (side_size) {
            const int a = static_cast<int>(c.side_a().size());
            if (a != *side_size && num_parties - a != *side_size)
                continue;
        }
        cuts.push_back(std::move(c));
    }
    std::sort(cuts.begin(), cuts.end(), [](const Cut& x, const Cut& y) {
        const auto& sx = x.smaller_side().indices();
        const auto& sy = y.smaller_side().indices();
        if (sx.size() != sy.size())
            return sx.size() < sy.size();
        return sx < sy;
    });
    return cuts;
}

} // namespace bcabe
