#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bcabe/cuts/analysis.hpp"
#include "bcabe/cuts/edge_weights.hpp"
#include "bcabe/cuts/lp.hpp"
#include "bcabe/protocol/prepare.hpp"

namespace bcabe {

struct CertificateOptions {
    /// Defaults to exact up to kMaxExactParties parties, sampled beyond.
    std::optional<PrepareMode> mode;
    int samples = 10000;
    std::uint64_t seed = 0;
};

struct CutJustification {
    CutReport report;
    double activation_fidelity; // worst outcome, residual pair = the cut's lone party + a partner
    bool justified;
};

struct CostCertificate {
    int two_n;
    FamilyLabel label;
    double lower_bound;
    double achieved;
    bool exact;
    EdgeWeights witness_weights;   // LP optimum
    EdgeWeights achieved_weights;  // singlets consumed per pair by the protocol
    std::vector<double> lp_dual;
    std::string protocol_transcript_id;
    PrepareMode protocol_mode;
    double preparation_distance;   // trace distance of the prepared mixture to the family
    std::vector<CutJustification> cuts;
    std::vector<ProtocolTranscript> transcripts;
};

/// Lower bound from the 1:(two_n - 1) cut LP (each cut's unit requirement
/// checked by NPT scan and activation), achieved cost from ebit accounting
/// over the preparation protocol's transcripts. Throws std::runtime_error
/// when a cut requirement cannot be justified, a transcript fails the audit,
/// or the LP reports infeasibility.
CostCertificate cost_certificate(int two_n, FamilyLabel label, const CertificateOptions& opts = {});

} // namespace bcabe
