#pragma once

#include <cstdint>
#include <vector>

#include "bcabe/protocol/transcript.hpp"
#include "bcabe/states/labels.hpp"
#include "bcabe/tensor/types.hpp"

namespace bcabe {

enum class PrepareMode { Exact, Sampled };

struct PrepareOptions {
    PrepareMode mode = PrepareMode::Exact;
    int samples = 10000;     // sampled mode only
    std::uint64_t seed = 0;  // sampled mode only
    bool keep_transcripts = true;
};

/// Largest register for which exact mode enumerates every branch.
inline constexpr int kMaxExactParties = 6;

struct EnsembleBranch {
    double probability;
    PureState state;
};

struct EnsembleResult {
    std::vector<EnsembleBranch> branches;
    DensityMatrix mixed;
    int singlets_used = 0;
};

struct PreparationResult {
    EnsembleResult ensemble;
    std::vector<ProtocolTranscript> transcripts; // one per branch, same order
};

/// Singlets on (1,2)(3,4)...; the shared tape indexes one Bell tuple of the
/// family's support; party 2k-1 generates the k-th Bell state and teleports
/// its second half to party 2k.
///
/// Exact mode enumerates every tape value and teleportation outcome and is
/// limited to two_n <= kMaxExactParties. Sampled mode runs `samples`
/// independent runs seeded from (seed, run index), each weighted equally.
/// Throws std::invalid_argument for an unsupported two_n or options.
PreparationResult prepare_bcabe(int two_n, FamilyLabel label, const PrepareOptions& opts = {});

/// Tape width in bits: log2 of the number of Bell tuples in the support.
int tape_width(int two_n);

} // namespace bcabe
