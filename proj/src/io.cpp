#include "wqap/io.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

#include "wqap/errors.hpp"
#include "wqap/matrix.hpp"
#include "wqap/recognize.hpp"

namespace wqap {

namespace {

std::vector<int> sort_order(const std::vector<std::int64_t>& raw) {
    std::vector<int> order(raw.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&raw](int a, int b) { return raw[a] < raw[b]; });
    for (int& idx : order) ++idx;  // report 1-based source positions
    return order;
}

std::vector<std::int64_t> int_array(const nlohmann::json& node,
                                    const char* key) {
    if (!node.contains(key) || !node[key].is_array())
        throw Error(ErrorCode::Malformed,
                    std::string("missing integer array \"") + key + "\"");
    std::vector<std::int64_t> values;
    values.reserve(node[key].size());
    for (const auto& item : node[key]) {
        if (!item.is_number_integer())
            throw Error(ErrorCode::Malformed,
                        std::string("non-integer entry in \"") + key + "\"");
        values.push_back(item.get<std::int64_t>());
    }
    return values;
}

LoadedInstance from_parts(std::vector<std::int64_t> alphas,
                          std::vector<std::int64_t> betas,
                          const char* format) {
    LoadMetadata meta;
    meta.alpha_order = sort_order(alphas);
    meta.beta_order = sort_order(betas);
    meta.format = format;
    return LoadedInstance{
        WienerQapInstance(std::move(alphas), std::move(betas)),
        std::move(meta)};
}

}  // namespace

std::vector<std::int64_t> parse_integer_list(const std::string& bytes) {
    std::istringstream in(bytes);
    std::vector<std::int64_t> values;
    std::string token;
    while (in >> token) {
        try {
            std::size_t used = 0;
            std::int64_t value = std::stoll(token, &used);
            if (used != token.size())
                throw Error(ErrorCode::Malformed,
                            "trailing characters in token: " + token);
            values.push_back(value);
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            throw Error(ErrorCode::Malformed, "not an integer: " + token);
        }
    }
    if (values.empty())
        throw Error(ErrorCode::Empty, "no integers in input");
    return values;
}

LoadedInstance parse_instance(const std::string& bytes) {
    auto first = std::find_if_not(bytes.begin(), bytes.end(), [](char c) {
        return std::isspace(static_cast<unsigned char>(c));
    });
    if (first == bytes.end())
        throw Error(ErrorCode::Empty, "empty instance file");

    if (*first == '{') {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(bytes);
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorCode::Malformed,
                        std::string("invalid JSON: ") + e.what());
        }
        return from_parts(int_array(doc, "alphas"), int_array(doc, "betas"),
                          "json");
    }

    // QAPLIB-style text: n, then A row-major, then B row-major.
    auto tokens = parse_integer_list(bytes);
    if (tokens[0] < 1)
        throw Error(ErrorCode::Malformed, "dimension must be positive");
    auto n = tokens[0];
    if (n > 4096)
        throw Error(ErrorCode::InstanceTooLarge,
                    "matrix dimension too large for the text reader");
    std::size_t expected = 1 + 2 * static_cast<std::size_t>(n) * n;
    if (tokens.size() != expected)
        throw Error(ErrorCode::Malformed,
                    "expected " + std::to_string(expected) +
                        " integers, found " + std::to_string(tokens.size()));
    IntMatrix a(static_cast<int>(n)), b(static_cast<int>(n));
    std::copy(tokens.begin() + 1, tokens.begin() + 1 + n * n,
              a.cells.begin());
    std::copy(tokens.begin() + 1 + n * n, tokens.end(), b.cells.begin());
    return from_parts(factor_product_matrix(a), recover_point_set(b),
                      "qaplib");
}

std::string instance_to_json(const WienerQapInstance& inst) {
    nlohmann::json doc;
    doc["alphas"] = inst.alphas();
    doc["betas"] = inst.betas();
    return doc.dump() + "\n";
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    return hash;
}

std::string digest_hex(std::string_view bytes) {
    static const char* hex = "0123456789abcdef";
    std::uint64_t h = fnv1a64(bytes);
    std::string out = "fnv1a64:";
    for (int shift = 60; shift >= 0; shift -= 4)
        out.push_back(hex[(h >> shift) & 0xf]);
    return out;
}

nlohmann::json wide_json(Wide v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return wide_to_string(v);
}

}  // namespace wqap
