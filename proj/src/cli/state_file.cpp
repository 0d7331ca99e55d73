#include "bcabe/cli/state_file.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace bcabe::cli {

namespace {

void append_number(std::string& out, double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

template <class Entries>
std::string format_entries(int qubits, std::string_view kind, Eigen::Index count, Entries&& entry)
{
    std::string out = "{\n  \"qubits\": " + std::to_string(qubits) + ",\n  \"kind\": \"" + std::string(kind) +
                      "\",\n  \"data\": [\n";
    for (Eigen::Index i = 0; i < count; ++i) {
        const complex z = entry(i);
        out += "    [";
        append_number(out, z.real());
        out += ", ";
        append_number(out, z.imag());
        out += i + 1 < count ? "],\n" : "]\n";
    }
    out += "  ]\n}\n";
    return out;
}

} // namespace

std::string format_state(const DensityMatrix& rho)
{
    const Matrix& m = rho.matrix();
    const Eigen::Index dim = m.rows();
    return format_entries(rho.num_qubits(), "density", dim * dim,
                          [&](Eigen::Index i) { return m(i / dim, i % dim); });
}

std::string format_state(const PureState& psi)
{
    const Vector& v = psi.amplitudes();
    return format_entries(psi.num_qubits(), "pure", v.size(), [&](Eigen::Index i) { return v[i]; });
}

LoadedState parse_state(std::string_view text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw IoError(std::string("state file is not valid JSON: ") + ex.what());
    }
    try {
        const int qubits = j.at("qubits").get<int>();
        const std::string kind = j.at("kind").get<std::string>();
        const auto& data = j.at("data");
        if (qubits < 1 || qubits > kMaxQubits)
            throw IoError("state file qubit count out of range");
        const auto dim = static_cast<Eigen::Index>(dimension_of(qubits));
        auto entry = [&](std::size_t i) {
            const auto& pair = data.at(i);
            if (!pair.is_array() || pair.size() != 2)
                throw IoError("state file entries must be [re, im] pairs");
            return complex(pair.at(0).get<double>(), pair.at(1).get<double>());
        };
        if (kind == "density") {
            if (data.size() != static_cast<std::size_t>(dim * dim))
                throw IoError("density data must hold 4^qubits entries");
            Matrix m(dim, dim);
            for (Eigen::Index r = 0; r < dim; ++r)
                for (Eigen::Index c = 0; c < dim; ++c)
                    m(r, c) = entry(static_cast<std::size_t>(r * dim + c));
            return DensityMatrix(qubits, std::move(m));
        }
        if (kind == "pure") {
            if (data.size() != static_cast<std::size_t>(dim))
                throw IoError("pure data must hold 2^qubits entries");
            Vector v(dim);
            for (Eigen::Index i = 0; i < dim; ++i)
                v[i] = entry(static_cast<std::size_t>(i));
            return PureState(qubits, std::move(v));
        }
        throw IoError("state kind must be \"density\" or \"pure\"");
    } catch (const nlohmann::json::exception& ex) {
        throw IoError(std::string("malformed state file: ") + ex.what());
    }
}

void write_text_file(const std::string& path, std::string_view content)
{
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw IoError("cannot open '" + path + "' for writing");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.close();
    if (!f)
        throw IoError("failed writing '" + path + "'");
}

std::string read_text_file(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << f.rdbuf();
    if (f.bad())
        throw IoError("failed reading '" + path + "'");
    return ss.str();
}

void write_state_file(const std::string& path, const DensityMatrix& rho)
{
    write_text_file(path, format_state(rho));
}

void write_state_file(const std::string& path, const PureState& psi)
{
    write_text_file(path, format_state(psi));
}

LoadedState read_state_file(const std::string& path)
{
    return parse_state(read_text_file(path));
}

} // namespace bcabe::cli
