#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "bcabe/protocol/transcript.hpp"
#include "bcabe/states/checks.hpp"
#include "bcabe/states/labels.hpp"
#include "bcabe/tensor/types.hpp"

namespace bcabe {

class PartyId {
public:
    PartyId(int index, int num_parties);
    int index() const { return index_; }
    friend auto operator<=>(const PartyId&, const PartyId&) = default;

private:
    int index_;
};

/// Pre-shared classical string. Every party holds its own copy, so two
/// parties reading the same positions see the same bits.
class RandomTape {
public:
    RandomTape() = default;
    explicit RandomTape(std::string bits);
    /// `width` bits of `value`, most significant first.
    static RandomTape from_value(std::uint64_t value, int width);

    /// Next `count` bits as an unsigned integer (first bit most significant).
    /// Throws std::out_of_range past the end.
    std::uint64_t read(int count);
    const std::string& bits() const { return bits_; }
    std::size_t cursor() const { return cursor_; }

private:
    std::string bits_;
    std::size_t cursor_ = 0;
};

struct Singlet {
    int party_a, party_b;
    int qubit_a, qubit_b;
    bool consumed = false;
};

struct NetworkState {
    int num_parties = 0;
    std::vector<int> live;         // qubit ids in tensor order, first = most significant
    std::map<int, int> owner;      // qubit id -> party
    Vector amplitudes;
    std::vector<Singlet> singlets;
    std::vector<RandomTape> tapes; // index party - 1
    ProtocolTranscript transcript;
    int next_qubit = 1;
    double probability = 1.0;      // of the branch this state represents
};

/// Each listed pair shares one [Phi+]; the pairing must cover 1..two_n
/// disjointly (std::invalid_argument otherwise).
NetworkState init_network(int two_n, const Pairing& pairing, const RandomTape& tape = {});

/// Appends two fresh qubits in the Bell state `label`, both owned by `party`,
/// and returns their ids. `tape_bits` is recorded on the event.
std::pair<int, int> bell_generate(NetworkState& net, int party, BellLabel label, const std::string& tape_bits = {});

/// Throws std::invalid_argument ("nonlocal quantum operation") if `party`
/// does not own every qubit.
void local_unitary(NetworkState& net, int party, const std::vector<int>& qubits, const Matrix& u,
                   const std::string& name);

/// Destructive computational-basis measurement forced onto `outcome`
/// ('0'/'1' per qubit). Returns the outcome probability; the state is
/// renormalized unless that probability is below tol::kZeroBranch.
double local_measure(NetworkState& net, int party, const std::vector<int>& qubits, const std::string& outcome);

void classical_send(NetworkState& net, int from, int to, const std::string& bits);

struct TeleportBranch {
    NetworkState state;
    std::string outcome; // two bits: sender qubit, sender singlet half
    int delivered;       // receiver's qubit now carrying the teleported state
};

/// All four measurement branches, each with probability 1/4 folded into
/// state.probability. Throws std::runtime_error("no available singlet") or
/// std::invalid_argument when `qubit` is not owned by the sender.
std::vector<TeleportBranch> teleport(const NetworkState& net, int sender, int receiver, int qubit);

/// One branch chosen by `outcome`.
TeleportBranch teleport_forced(const NetworkState& net, int sender, int receiver, int qubit,
                               const std::string& outcome);

/// One branch drawn from its Born probability.
TeleportBranch teleport_sampled(const NetworkState& net, int sender, int receiver, int qubit,
                                std::mt19937_64& rng);

/// Live qubits reordered by owning party (ties by qubit id).
PureState final_state(const NetworkState& net);

} // namespace bcabe
