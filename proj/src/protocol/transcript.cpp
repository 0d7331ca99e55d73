#include "bcabe/protocol/transcript.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace bcabe {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr std::pair<EventKind, std::string_view> kKindNames[] = {
    {EventKind::SingletDistributed, "singlet-distributed"},
    {EventKind::BellGenerated, "bell-generated"},
    {EventKind::LocalUnitary, "local-unitary"},
    {EventKind::LocalMeasurement, "local-measurement"},
    {EventKind::ClassicalMessage, "classical-message"},
    {EventKind::SingletConsumed, "singlet-consumed"},
};

constexpr std::string_view kRunKind = "run";

ordered_json event_json(const ProtocolEvent& e)
{
    ordered_json j;
    j["kind"] = to_string(e.kind);
    j["party"] = e.party;
    j["peer"] = e.peer;
    j["qubits"] = e.qubits;
    j["name"] = e.name;
    j["bits"] = e.bits;
    j["probability"] = e.probability;
    return j;
}

ProtocolEvent event_from_json(const ordered_json& j)
{
    ProtocolEvent e;
    e.kind = parse_event_kind(j.at("kind").get<std::string>());
    e.party = j.at("party").get<int>();
    e.peer = j.at("peer").get<int>();
    e.qubits = j.at("qubits").get<std::vector<int>>();
    e.name = j.at("name").get<std::string>();
    e.bits = j.at("bits").get<std::string>();
    e.probability = j.at("probability").get<double>();
    return e;
}

} // namespace

std::string_view to_string(EventKind kind)
{
    for (const auto& [k, name] : kKindNames)
        if (k == kind)
            return name;
    return "?";
}

EventKind parse_event_kind(std::string_view text)
{
    for (const auto& [k, name] : kKindNames)
        if (name == text)
            return k;
    throw std::invalid_argument("unknown event kind '" + std::string(text) + "'");
}

std::string to_json_line(const ProtocolEvent& event)
{
    return event_json(event).dump();
}

ProtocolEvent parse_event_line(std::string_view line)
{
    try {
        return event_from_json(ordered_json::parse(line));
    } catch (const nlohmann::json::exception& ex) {
        throw std::runtime_error(std::string("malformed transcript event: ") + ex.what());
    }
}

void write_transcripts(std::ostream& out, std::span<const ProtocolTranscript> transcripts)
{
    for (const auto& t : transcripts) {
        ordered_json header;
        header["kind"] = kRunKind;
        header["run"] = t.run_id;
        header["probability"] = t.probability;
        header["events"] = t.events.size();
        out << header.dump() << '\n';
        for (const auto& e : t.events)
            out << to_json_line(e) << '\n';
    }
}

std::vector<ProtocolTranscript> read_transcripts(std::istream& in)
{
    std::vector<ProtocolTranscript> out;
    std::string line;
    std::size_t line_no = 0;
    std::size_t pending = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        ordered_json j;
        try {
            j = ordered_json::parse(line);
        } catch (const nlohmann::json::exception& ex) {
            throw std::runtime_error("transcript line " + std::to_string(line_no) + ": " + ex.what());
        }
        try {
            if (j.at("kind").get<std::string>() == kRunKind) {
                if (pending != 0)
                    throw std::runtime_error("run ended early");
                ProtocolTranscript t;
                t.run_id = j.at("run").get<std::string>();
                t.probability = j.at("probability").get<double>();
                pending = j.at("events").get<std::size_t>();
                out.push_back(std::move(t));
                continue;
            }
            if (out.empty() || pending == 0)
                throw std::runtime_error("event outside a run");
            out.back().events.push_back(event_from_json(j));
            --pending;
        } catch (const nlohmann::json::exception& ex) {
            throw std::runtime_error("transcript line " + std::to_string(line_no) + ": " + ex.what());
        } catch (const std::exception& ex) {
            throw std::runtime_error("transcript line " + std::to_string(line_no) + ": " + ex.what());
        }
    }
    if (pending != 0)
        throw std::runtime_error("transcript truncated");
    return out;
}

AuditResult locc_audit(const ProtocolTranscript& transcript)
{
    struct SingletRecord {
        int a, b, qa, qb;
        bool consumed;
    };
    std::map<int, int> owner;
    std::set<int> retired;
    std::set<int> measured;
    std::vector<SingletRecord> singlets;

    auto fail = [](std::size_t i, std::string what) { return AuditResult{false, std::move(what), i}; };
    auto fresh = [&](int q) { return !owner.contains(q) && !retired.contains(q); };

    for (std::size_t i = 0; i < transcript.events.size(); ++i) {
        const auto& e = transcript.events[i];
        switch (e.kind) {
        case EventKind::SingletDistributed:
            if (e.qubits.size() != 2 || e.party == e.peer || e.party < 1 || e.peer < 1)
                return fail(i, "malformed singlet distribution");
            if (!fresh(e.qubits[0]) || !fresh(e.qubits[1]))
                return fail(i, "singlet reuses an existing qubit");
            owner[e.qubits[0]] = e.party;
            owner[e.qubits[1]] = e.peer;
            singlets.push_back({e.party, e.peer, e.qubits[0], e.qubits[1], false});
            break;
        case EventKind::BellGenerated:
            if (e.qubits.size() != 2 || e.party < 1)
                return fail(i, "malformed Bell generation");
            if (!fresh(e.qubits[0]) || !fresh(e.qubits[1]))
                return fail(i, "Bell generator reuses an existing qubit");
            owner[e.qubits[0]] = e.party;
            owner[e.qubits[1]] = e.party;
            break;
        case EventKind::LocalUnitary:
        case EventKind::LocalMeasurement:
            if (e.qubits.empty())
                return fail(i, "quantum event without qubits");
            for (int q : e.qubits) {
                if (!owner.contains(q))
                    return fail(i, "operation on a qubit that is not live");
                if (owner.at(q) != e.party)
                    return fail(i, "nonlocal quantum operation");
            }
            if (e.kind == EventKind::LocalMeasurement) {
                if (e.bits.size() != e.qubits.size())
                    return fail(i, "measurement outcome width mismatch");
                for (int q : e.qubits) {
                    owner.erase(q);
                    retired.insert(q);
                    measured.insert(q);
                }
            }
            break;
        case EventKind::ClassicalMessage:
            if (e.party < 1 || e.peer < 1 || e.party == e.peer)
                return fail(i, "malformed classical message");
            break;
        case EventKind::SingletConsumed: {
            SingletRecord* match = nullptr;
            for (auto& s : singlets) {
                const bool same_pair = (s.a == e.party && s.b == e.peer) || (s.a == e.peer && s.b == e.party);
                const bool same_qubits =
                    e.qubits.size() == 2 && ((s.qa == e.qubits[0] && s.qb == e.qubits[1]) ||
                                             (s.qa == e.qubits[1] && s.qb == e.qubits[0]));
                if (same_pair && same_qubits) {
                    match = &s;
                    break;
                }
            }
            if (match == nullptr)
                return fail(i, "unregistered singlet");
            if (match->consumed)
                return fail(i, "singlet double-spend");
            if (!measured.contains(match->qa) && !measured.contains(match->qb))
                return fail(i, "singlet consumed without a teleportation measurement");
            match->consumed = true;
            break;
        }
        }
    }
    return {};
}

EbitAccount ebit_accounting(const ProtocolTranscript& transcript, int num_parties)
{
    EbitAccount account{0, EdgeWeights(num_parties)};
    for (const auto& e : transcript.events) {
        if (e.kind != EventKind::SingletConsumed)
            continue;
        ++account.total;
        account.breakdown.add(e.party, e.peer, 1.0);
    }
    return account;
}

} // namespace bcabe
