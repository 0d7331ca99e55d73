#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bcabe/tensor/types.hpp"

namespace bcabe {

/// Bipartition of parties 1..n, stored with party 1 on side A.
class Cut {
public:
    /// Throws std::invalid_argument for an empty or full side.
    Cut(int num_parties, const QubitSubset& side);

    int num_parties() const { return num_parties_; }
    const QubitSubset& side_a() const { return side_a_; }
    const QubitSubset& side_b() const { return side_b_; }
    /// The side with fewer parties; side A on a tie.
    const QubitSubset& smaller_side() const;
    bool crosses(int i, int j) const;

    /// e.g. "1|2,3,4"
    std::string to_string() const;

    friend bool operator==(const Cut&, const Cut&) = default;

private:
    int num_parties_;
    QubitSubset side_a_;
    QubitSubset side_b_;
};

/// All bipartitions, optionally only those with a side of `side_size`
/// parties. Ordered by smaller-side size, then smaller side
/// lexicographically, so the 1:(n-1) cuts come out as {1}, {2}, ..., {n}.
std::vector<Cut> enumerate_cuts(int num_parties, std::optional<int> side_size = std::nullopt);

} // namespace bcabe
