#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

namespace bcabe {

/// Nonnegative weights on unordered party pairs i < j (1-based), stored once
/// per pair in lexicographic order (1,2), (1,3), ..., (n-1,n).
class EdgeWeights {
public:
    EdgeWeights() = default;
    explicit EdgeWeights(int num_parties)
        : num_parties_(num_parties)
        , weights_(static_cast<std::size_t>(num_parties * (num_parties - 1) / 2), 0.0)
    {
        if (num_parties < 2)
            throw std::invalid_argument("edge weights need at least two parties");
    }

    int num_parties() const { return num_parties_; }
    std::size_t num_edges() const { return weights_.size(); }

    /// Position of the unordered pair {i, j} in the lexicographic edge order.
    std::size_t edge_index(int i, int j) const
    {
        if (i > j)
            std::swap(i, j);
        if (i < 1 || j > num_parties_ || i == j)
            throw std::out_of_range("edge endpoints out of range");
        // Edges before row i: sum_{r < i} (n - r).
        const int before = (i - 1) * num_parties_ - (i - 1) * i / 2;
        return static_cast<std::size_t>(before + (j - i - 1));
    }

    double at(int i, int j) const { return weights_[edge_index(i, j)]; }
    void set(int i, int j, double w)
    {
        if (w < 0.0)
            throw std::invalid_argument("edge weights must be nonnegative");
        weights_[edge_index(i, j)] = w;
    }
    void add(int i, int j, double w) { set(i, j, at(i, j) + w); }

    const std::vector<double>& values() const { return weights_; }
    double total() const
    {
        double s = 0.0;
        for (double w : weights_)
            s += w;
        return s;
    }

private:
    int num_parties_ = 0;
    std::vector<double> weights_;
};

} // namespace bcabe
