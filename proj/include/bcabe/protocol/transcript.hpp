#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bcabe/cuts/edge_weights.hpp"

namespace bcabe {

enum class EventKind {
    SingletDistributed, // pre-shared resource: party/peer own qubits[0]/qubits[1]
    BellGenerated,      // fresh pair owned by party; name = Bell label, bits = tape bits read
    LocalUnitary,       // name = gate
    LocalMeasurement,   // computational basis, destructive; bits = outcome
    ClassicalMessage,   // party -> peer, bits = payload
    SingletConsumed,    // singlet between party and peer used up (qubits = its halves)
};

std::string_view to_string(EventKind kind);
EventKind parse_event_kind(std::string_view text);

struct ProtocolEvent {
    EventKind kind{};
    int party = 0;
    int peer = 0;
    std::vector<int> qubits;
    std::string name;
    std::string bits;
    double probability = 1.0;

    friend bool operator==(const ProtocolEvent&, const ProtocolEvent&) = default;
};

/// One protocol run along one measurement branch.
struct ProtocolTranscript {
    std::string run_id;
    double probability = 1.0;
    std::vector<ProtocolEvent> events;

    friend bool operator==(const ProtocolTranscript&, const ProtocolTranscript&) = default;
};

// Line-delimited JSON: a {"kind":"run",...} header line per transcript
// followed by one line per event with the fields
// kind, party, peer, qubits, name, bits, probability.
std::string to_json_line(const ProtocolEvent& event);
ProtocolEvent parse_event_line(std::string_view line);
void write_transcripts(std::ostream& out, std::span<const ProtocolTranscript> transcripts);
/// Throws std::runtime_error on malformed input.
std::vector<ProtocolTranscript> read_transcripts(std::istream& in);

struct AuditResult {
    bool passed = true;
    std::string violation;       // empty when passed
    std::size_t event_index = 0; // offending event when failed
};

/// Replays ownership through the transcript and checks that every quantum
/// event touches only the acting party's live qubits, that singlets are
/// registered before use and consumed at most once, and that a consumed
/// singlet had one half measured out by its owner.
AuditResult locc_audit(const ProtocolTranscript& transcript);

struct EbitAccount {
    int total = 0;
    EdgeWeights breakdown;
};

/// One ebit per consumed singlet, keyed by the party pair.
EbitAccount ebit_accounting(const ProtocolTranscript& transcript, int num_parties);

} // namespace bcabe
