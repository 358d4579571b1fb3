#ifndef WQAP_IO_HPP
#define WQAP_IO_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wqap/arith.hpp"
#include "wqap/instance.hpp"

namespace wqap {

struct LoadMetadata {
    // order[i] = 1-based position, in the raw input, of the value that ended
    // up at sorted position i+1 (stable sort).
    std::vector<int> alpha_order;
    std::vector<int> beta_order;
    std::string format;  // "json" or "qaplib"
};

struct LoadedInstance {
    WienerQapInstance instance;
    LoadMetadata meta;
};

/**
 * Auto-detecting instance reader. A leading '{' selects the native JSON
 * format {"alphas": [...], "betas": [...]}; anything else is read as
 * QAPLIB-style text (n, then A row-major, then B row-major) and routed
 * through the product-matrix and point-set recognizers.
 */
LoadedInstance parse_instance(const std::string& bytes);

/// Whitespace-separated integers; throws Malformed on anything else,
/// Empty when there are none.
std::vector<std::int64_t> parse_integer_list(const std::string& bytes);

/// Native JSON instance text (sorted sequences), newline-terminated.
std::string instance_to_json(const WienerQapInstance& inst);

std::uint64_t fnv1a64(std::string_view bytes);

/// "fnv1a64:<16 hex digits>" content digest used in run reports.
std::string digest_hex(std::string_view bytes);

/// JSON value for a 128-bit integer: a plain number when it fits in 64 bits,
/// otherwise a decimal string.
nlohmann::json wide_json(Wide v);

}  // namespace wqap

#endif
