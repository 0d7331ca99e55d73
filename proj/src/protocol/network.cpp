#include "bcabe/protocol/network.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "bcabe/tensor/gates.hpp"
#include "bcabe/tensor/kernels.hpp"

namespace bcabe {

PartyId::PartyId(int index, int num_parties)
    : index_(index)
{
    if (index < 1 || index > num_parties)
        throw std::out_of_range("party " + std::to_string(index) + " outside 1.." + std::to_string(num_parties));
}

RandomTape::RandomTape(std::string bits)
    : bits_(std::move(bits))
{
    if (bits_.find_first_not_of("01") != std::string::npos)
        throw std::invalid_argument("tape bits must be 0 or 1");
}

RandomTape RandomTape::from_value(std::uint64_t value, int width)
{
    if (width < 0 || width > 63)
        throw std::invalid_argument("tape width out of range");
    std::string bits(static_cast<std::size_t>(width), '0');
    for (int i = 0; i < width; ++i)
        if ((value >> (width - 1 - i)) & 1U)
            bits[static_cast<std::size_t>(i)] = '1';
    return RandomTape(std::move(bits));
}

std::uint64_t RandomTape::read(int count)
{
    if (count < 0 || count > 63 || cursor_ + static_cast<std::size_t>(count) > bits_.size())
        throw std::out_of_range("read past the end of the tape");
    std::uint64_t v = 0;
    for (int i = 0; i < count; ++i)
        v = (v << 1) | (bits_[cursor_++] == '1' ? 1U : 0U);
    return v;
}

namespace {

int position_of(const NetworkState& net, int qubit)
{
    auto it = std::find(net.live.begin(), net.live.end(), qubit);
    if (it == net.live.end())
        throw std::invalid_argument("qubit " + std::to_string(qubit) + " is not live");
    return static_cast<int>(it - net.live.begin()) + 1;
}

void require_owner(const NetworkState& net, int party, const std::vector<int>& qubits)
{
    for (int q : qubits) {
        auto it = net.owner.find(q);
        if (it == net.owner.end())
            throw std::invalid_argument("qubit " + std::to_string(q) + " is not live");
        if (it->second != party)
            throw std::invalid_argument("nonlocal quantum operation");
    }
}

std::pair<int, int> append_pair(NetworkState& net, const Vector& pair_state, int owner_a, int owner_b)
{
    const int qa = net.next_qubit++;
    const int qb = net.next_qubit++;
    if (static_cast<int>(net.live.size()) + 2 > kMaxQubits)
        throw std::length_error("network register exceeds the qubit limit");
    net.amplitudes = kernels::kron(net.amplitudes, pair_state);
    net.live.push_back(qa);
    net.live.push_back(qb);
    net.owner[qa] = owner_a;
    net.owner[qb] = owner_b;
    return {qa, qb};
}

ProtocolEvent make_event(EventKind kind, int party, int peer, std::vector<int> qubits, std::string name,
                         std::string bits, double p = 1.0)
{
    return ProtocolEvent{kind, party, peer, std::move(qubits), std::move(name), std::move(bits), p};
}

Singlet& find_singlet(NetworkState& net, int sender, int receiver)
{
    for (auto& s : net.singlets) {
        if (s.consumed)
            continue;
        if ((s.party_a == sender && s.party_b == receiver) || (s.party_a == receiver && s.party_b == sender))
            return s;
    }
    throw std::runtime_error("no available singlet between parties " + std::to_string(sender) + " and " +
                             std::to_string(receiver));
}

double outcome_probability(const NetworkState& net, const std::vector<int>& qubits, const std::string& outcome)
{
    const int n = static_cast<int>(net.live.size());
    std::uint64_t mask = 0, want = 0;
    for (std::size_t k = 0; k < qubits.size(); ++k) {
        const int bit = n - position_of(net, qubits[k]);
        mask |= std::uint64_t{1} << bit;
        if (outcome[k] == '1')
            want |= std::uint64_t{1} << bit;
    }
    double p = 0.0;
    for (Eigen::Index i = 0; i < net.amplitudes.size(); ++i)
        if ((static_cast<std::uint64_t>(i) & mask) == want)
            p += std::norm(net.amplitudes[i]);
    return p;
}

TeleportBranch run_teleport(const NetworkState& net, int sender, int receiver, int qubit, const std::string& outcome)
{
    if (sender == receiver)
        throw std::invalid_argument("teleport needs two distinct parties");
    auto it = net.owner.find(qubit);
    if (it == net.owner.end() || it->second != sender)
        throw std::invalid_argument("qubit " + std::to_string(qubit) + " not owned by sender");

    TeleportBranch br{net, outcome, 0};
    NetworkState& s = br.state;
    Singlet& singlet = find_singlet(s, sender, receiver);
    const bool sender_is_a = singlet.party_a == sender;
    const int half = sender_is_a ? singlet.qubit_a : singlet.qubit_b;
    const int far = sender_is_a ? singlet.qubit_b : singlet.qubit_a;
    const std::vector<int> singlet_qubits{singlet.qubit_a, singlet.qubit_b};

    local_unitary(s, sender, {qubit, half}, gates::cnot(), "CNOT");
    local_unitary(s, sender, {qubit}, gates::hadamard(), "H");
    const double p = local_measure(s, sender, {qubit, half}, outcome);
    s.probability *= p;
    classical_send(s, sender, receiver, outcome);
    singlet.consumed = true;
    s.transcript.events.push_back(
        make_event(EventKind::SingletConsumed, sender, receiver, singlet_qubits, "teleport", outcome));
    if (outcome[1] == '1')
        local_unitary(s, receiver, {far}, pauli_matrix(Pauli::X), "X");
    if (outcome[0] == '1')
        local_unitary(s, receiver, {far}, pauli_matrix(Pauli::Z), "Z");
    br.delivered = far;
    return br;
}

const char* const kOutcomes[] = {"00", "01", "10", "11"};

} // namespace

NetworkState init_network(int two_n, const Pairing& pairing, const RandomTape& tape)
{
    if (two_n < 2 || two_n % 2 != 0)
        throw std::invalid_argument("party count must be even and at least 2");
    std::set<int> seen;
    for (auto [a, b] : pairing) {
        if (a < 1 || b < 1 || a > two_n || b > two_n || a == b)
            throw std::invalid_argument("singlet pair outside 1.." + std::to_string(two_n));
        if (!seen.insert(a).second || !seen.insert(b).second)
            throw std::invalid_argument("singlet pairing is not disjoint");
    }
    if (static_cast<int>(seen.size()) != two_n)
        throw std::invalid_argument("singlet pairing does not cover every party");

    NetworkState net;
    net.num_parties = two_n;
    net.amplitudes = Vector::Ones(1);
    net.tapes.assign(static_cast<std::size_t>(two_n), tape);
    const Vector phi = bell_state(BellLabel::PhiPlus).amplitudes();
    for (auto [a, b] : pairing) {
        auto [qa, qb] = append_pair(net, phi, a, b);
        net.singlets.push_back({a, b, qa, qb, false});
        net.transcript.events.push_back(make_event(EventKind::SingletDistributed, a, b, {qa, qb}, "Phi+", {}));
    }
    return net;
}

std::pair<int, int> bell_generate(NetworkState& net, int party, BellLabel label, const std::string& tape_bits)
{
    PartyId(party, net.num_parties);
    const Vector psi = bell_state(label).amplitudes();
    auto qs = append_pair(net, psi, party, party);
    net.transcript.events.push_back(
        make_event(EventKind::BellGenerated, party, party, {qs.first, qs.second}, std::string(to_string(label)), tape_bits));
    return qs;
}

void local_unitary(NetworkState& net, int party, const std::vector<int>& qubits, const Matrix& u,
                   const std::string& name)
{
    require_owner(net, party, qubits);
    std::vector<int> pos;
    for (int q : qubits)
        pos.push_back(position_of(net, q));
    kernels::apply(net.amplitudes, static_cast<int>(net.live.size()), u, pos);
    net.transcript.events.push_back(make_event(EventKind::LocalUnitary, party, party, qubits, name, {}));
}

double local_measure(NetworkState& net, int party, const std::vector<int>& qubits, const std::string& outcome)
{
    require_owner(net, party, qubits);
    if (outcome.size() != qubits.size() || outcome.find_first_not_of("01") != std::string::npos)
        throw std::invalid_argument("measurement outcome must give one bit per qubit");

    const int n = static_cast<int>(net.live.size());
    std::uint64_t mask = 0, want = 0;
    for (std::size_t k = 0; k < qubits.size(); ++k) {
        const int bit = n - position_of(net, qubits[k]);
        mask |= std::uint64_t{1} << bit;
        if (outcome[k] == '1')
            want |= std::uint64_t{1} << bit;
    }

    const int kept = n - static_cast<int>(qubits.size());
    Vector out = Vector::Zero(Eigen::Index{1} << kept);
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
        if ((i & mask) != want)
            continue;
        std::uint64_t j = 0;
        for (int bit = n - 1; bit >= 0; --bit) {
            if (mask & (std::uint64_t{1} << bit))
                continue;
            j = (j << 1) | ((i >> bit) & 1U);
        }
        out[static_cast<Eigen::Index>(j)] = net.amplitudes[static_cast<Eigen::Index>(i)];
    }
    const double p = out.squaredNorm();
    if (p >= tol::kZeroBranch)
        out /= std::sqrt(p);
    net.amplitudes = std::move(out);
    for (int q : qubits) {
        net.live.erase(std::find(net.live.begin(), net.live.end(), q));
        net.owner.erase(q);
    }
    net.transcript.events.push_back(make_event(EventKind::LocalMeasurement, party, party, qubits, "Z", outcome, p));
    return p;
}

void classical_send(NetworkState& net, int from, int to, const std::string& bits)
{
    PartyId(from, net.num_parties);
    PartyId(to, net.num_parties);
    if (from == to)
        throw std::invalid_argument("classical message to self");
    net.transcript.events.push_back(make_event(EventKind::ClassicalMessage, from, to, {}, "bits", bits));
}

std::vector<TeleportBranch> teleport(const NetworkState& net, int sender, int receiver, int qubit)
{
    std::vector<TeleportBranch> out;
    for (const char* o : kOutcomes)
        out.push_back(run_teleport(net, sender, receiver, qubit, o));
    return out;
}

TeleportBranch teleport_forced(const NetworkState& net, int sender, int receiver, int qubit,
                               const std::string& outcome)
{
    if (outcome.size() != 2 || outcome.find_first_not_of("01") != std::string::npos)
        throw std::invalid_argument("teleport outcome must be two bits");
    return run_teleport(net, sender, receiver, qubit, outcome);
}

TeleportBranch teleport_sampled(const NetworkState& net, int sender, int receiver, int qubit, std::mt19937_64& rng)
{
    NetworkState probe = net;
    Singlet& singlet = find_singlet(probe, sender, receiver);
    const int half = singlet.party_a == sender ? singlet.qubit_a : singlet.qubit_b;
    auto it = probe.owner.find(qubit);
    if (it == probe.owner.end() || it->second != sender)
        throw std::invalid_argument("qubit " + std::to_string(qubit) + " not owned by sender");
    local_unitary(probe, sender, {qubit, half}, gates::cnot(), "CNOT");
    local_unitary(probe, sender, {qubit}, gates::hadamard(), "H");

    std::uniform_real_distribution<double> u(0.0, 1.0);
    double r = u(rng);
    const char* pick = kOutcomes[3];
    for (const char* o : kOutcomes) {
        r -= outcome_probability(probe, {qubit, half}, o);
        if (r < 0.0) {
            pick = o;
            break;
        }
    }
    return run_teleport(net, sender, receiver, qubit, pick);
}

PureState final_state(const NetworkState& net)
{
    std::vector<int> ids = net.live;
    std::stable_sort(ids.begin(), ids.end(), [&](int a, int b) {
        const int pa = net.owner.at(a), pb = net.owner.at(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::vector<int> order;
    for (int q : ids)
        order.push_back(position_of(net, q));
    const int n = static_cast<int>(net.live.size());
    return PureState(n, kernels::permute_qubits(net.amplitudes, n, order));
}

} // namespace bcabe
