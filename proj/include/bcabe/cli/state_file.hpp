#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "bcabe/tensor/types.hpp"

namespace bcabe::cli {

/// Unreadable, unwritable or malformed files.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using LoadedState = std::variant<DensityMatrix, PureState>;

// {"qubits": n, "kind": "density"|"pure", "data": [[re, im], ...]} with the
// matrix in row-major order and every number written to 17 significant digits.
std::string format_state(const DensityMatrix& rho);
std::string format_state(const PureState& psi);

/// Throws IoError on a schema violation and propagates the type invariants'
/// exceptions for data that is well-formed but not a valid state.
LoadedState parse_state(std::string_view text);

void write_text_file(const std::string& path, std::string_view content);
std::string read_text_file(const std::string& path);

void write_state_file(const std::string& path, const DensityMatrix& rho);
void write_state_file(const std::string& path, const PureState& psi);
LoadedState read_state_file(const std::string& path);

} // namespace bcabe::cli
