#include "bcabe/protocol/prepare.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "bcabe/protocol/network.hpp"
#include "bcabe/states/checks.hpp"
#include "bcabe/states/families.hpp"
#include "bcabe/tensor/kernels.hpp"

namespace bcabe {

namespace {

struct Run {
    double probability;
    PureState state;
    ProtocolTranscript transcript;
};

std::vector<std::vector<BellLabel>> uniform_support(int two_n, FamilyLabel label)
{
    const auto dec = bell_tuple_decomposition(build_family(two_n, label), disjoint_pairing(two_n));
    const std::size_t expected = std::size_t{1} << tape_width(two_n);
    if (dec.terms.size() != expected)
        throw std::logic_error("family support has an unexpected number of Bell tuples");
    std::vector<std::vector<BellLabel>> tuples;
    for (const auto& t : dec.terms) {
        if (std::abs(t.weight - 1.0 / static_cast<double>(expected)) > tol::kState)
            throw std::logic_error("family support is not a uniform Bell mixture");
        tuples.push_back(t.tuple);
    }
    return tuples;
}

std::string tape_bits(std::uint64_t value, int width)
{
    return RandomTape::from_value(value, width).bits();
}

// Party 2k-1 reads the tuple index from its tape copy, generates the k-th
// Bell state and hands the second half back for teleportation.
int generate_pair(NetworkState& net, int k, const std::vector<std::vector<BellLabel>>& tuples, int width)
{
    const int party = 2 * k + 1;
    RandomTape& tape = net.tapes[static_cast<std::size_t>(party - 1)];
    const std::uint64_t index = tape.read(width);
    auto [keep, send] = bell_generate(net, party, tuples[index][static_cast<std::size_t>(k)], tape_bits(index, width));
    (void)keep;
    return send;
}

void enumerate_runs(const NetworkState& net, int k, int num_pairs, const std::vector<std::vector<BellLabel>>& tuples,
                    int width, const std::string& path, std::vector<Run>& out)
{
    if (k == num_pairs) {
        ProtocolTranscript t = net.transcript;
        t.run_id = path;
        t.probability = net.probability;
        out.push_back({net.probability, final_state(net), std::move(t)});
        return;
    }
    NetworkState next = net;
    const int send = generate_pair(next, k, tuples, width);
    for (auto& br : teleport(next, 2 * k + 1, 2 * k + 2, send))
        enumerate_runs(br.state, k + 1, num_pairs, tuples, width, path + "/" + br.outcome, out);
}

} // namespace

int tape_width(int two_n)
{
    if (two_n < 4 || two_n % 2 != 0)
        throw std::invalid_argument("two_n must be even and at least 4");
    return two_n - 2;
}

PreparationResult prepare_bcabe(int two_n, FamilyLabel label, const PrepareOptions& opts)
{
    const int width = tape_width(two_n);
    if (two_n + 2 > kMaxQubits)
        throw std::invalid_argument("two_n too large to simulate");
    const int num_pairs = two_n / 2;
    const auto tuples = uniform_support(two_n, label);
    const Pairing pairing = disjoint_pairing(two_n);

    std::vector<std::vector<Run>> per_job;
    if (opts.mode == PrepareMode::Exact) {
        if (two_n > kMaxExactParties)
            throw std::invalid_argument("exact mode supports at most " + std::to_string(kMaxExactParties) +
                                        " parties; use sampled mode");
        const auto count = static_cast<std::int64_t>(tuples.size());
        per_job.resize(tuples.size());
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t t = 0; t < count; ++t) {
            NetworkState net = init_network(two_n, pairing, RandomTape::from_value(static_cast<std::uint64_t>(t), width));
            net.probability = 1.0 / static_cast<double>(count);
            enumerate_runs(net, 0, num_pairs, tuples, width, "tape=" + tape_bits(static_cast<std::uint64_t>(t), width),
                           per_job[static_cast<std::size_t>(t)]);
        }
    } else {
        if (opts.samples < 1)
            throw std::invalid_argument("sampled mode needs at least one sample");
        const std::int64_t m = opts.samples;
        per_job.resize(static_cast<std::size_t>(m));
#pragma omp parallel for schedule(dynamic, 64)
        for (std::int64_t i = 0; i < m; ++i) {
            std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                              static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
            std::mt19937_64 rng(seq);
            std::uniform_int_distribution<std::uint64_t> pick(0, tuples.size() - 1);
            const std::uint64_t t = pick(rng);
            NetworkState net = init_network(two_n, pairing, RandomTape::from_value(t, width));
            std::string path = "sample=" + std::to_string(i) + "/tape=" + tape_bits(t, width);
            for (int k = 0; k < num_pairs; ++k) {
                const int send = generate_pair(net, k, tuples, width);
                TeleportBranch br = teleport_sampled(net, 2 * k + 1, 2 * k + 2, send, rng);
                path += "/" + br.outcome;
                net = std::move(br.state);
            }
            ProtocolTranscript tr = net.transcript;
            tr.run_id = path;
            tr.probability = 1.0 / static_cast<double>(m);
            per_job[static_cast<std::size_t>(i)].push_back(
                {1.0 / static_cast<double>(m), final_state(net), std::move(tr)});
        }
    }

    const auto dim = Eigen::Index{1} << two_n;
    Matrix acc = Matrix::Zero(dim, dim);
    std::vector<EnsembleBranch> branches;
    std::vector<ProtocolTranscript> transcripts;
    int singlets_used = 0;
    double total = 0.0;
    for (auto& job : per_job) {
        for (auto& run : job) {
            kernels::accumulate_outer(acc, run.state.amplitudes(), run.probability);
            total += run.probability;
            singlets_used = std::max(singlets_used, ebit_accounting(run.transcript, two_n).total);
            branches.push_back({run.probability, std::move(run.state)});
            if (opts.keep_transcripts)
                transcripts.push_back(std::move(run.transcript));
        }
    }
    if (std::abs(total - 1.0) > tol::kState)
        throw std::logic_error("branch probabilities do not sum to one");
    acc = 0.5 * (acc + acc.adjoint()).eval();

    return PreparationResult{
        EnsembleResult{std::move(branches), DensityMatrix::trusted(two_n, std::move(acc)), singlets_used},
        std::move(transcripts)};
}

} // namespace bcabe
