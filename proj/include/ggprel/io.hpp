#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ggprel/parameters.hpp"
#include "ggprel/partitions.hpp"
#include "ggprel/relevance.hpp"

namespace ggprel {

struct ParseDiagnostic {
    std::size_t byte_offset = 0;
    int line = 1;   // 1-based
    int column = 1; // 1-based, in code points
    std::string message;
    std::string expected;
};

class ParseError : public std::runtime_error {
public:
    explicit ParseError(ParseDiagnostic diag);
    const ParseDiagnostic &diagnostic() const { return diag_; }

private:
    ParseDiagnostic diag_;
};

/*
 * Text form of parameters:
 *
 *   param    := term ("+" term)* | "0"
 *   term     := [mult "*"] symbol ("x" | "⊠") "S" int
 *   symbol   := "L(" label ["," "k=" int] ["," "s=" int "/" int] ")"
 *
 * Whitespace between tokens is ignored.  Integers are positive decimals
 * without leading zeros; labels are [A-Za-z_][A-Za-z0-9_]*.  k defaults to
 * 1 and the presence of s makes the symbol complementary.
 */
UnitaryParameter parse_parameter(std::string_view text);
EtaSymbol parse_symbol(std::string_view text);

std::string print_symbol(const EtaSymbol &eta);
std::string print_parameter(const UnitaryParameter &p);
std::string print_partition(const Partition &lambda);

// -- reports ---------------------------------------------------------------

/// Raised by decoders; path is a JSON pointer to the offending field.
class SchemaError : public std::runtime_error {
public:
    SchemaError(std::string path, const std::string &message);
    const std::string &path() const { return path_; }

private:
    std::string path_;
};

struct LambdaTable {
    int a_max = 0;
    std::vector<LambdaEntry> entries; // non-zero values only
};

struct RelevanceReport {
    UnitaryParameter pi;
    UnitaryParameter sigma;
    bool relevant = false;
    std::optional<Witness> witness;
    LambdaTable lambda_table;
    Partition sl2_pi;
    Partition sl2_sigma;
    bool close = false;
    long nt_pi = 0;
    long nt_sigma = 0;
};

bool operator==(const LambdaEntry &a, const LambdaEntry &b);
bool operator==(const LambdaTable &a, const LambdaTable &b);
bool operator==(const RelevanceReport &a, const RelevanceReport &b);

/// Decide the pair by the criterion and fill every report field.
RelevanceReport build_report(const UnitaryParameter &pi, const UnitaryParameter &sigma, SearchLimits limits = {});

/*
 * Document layout:
 *   { "pi": str, "sigma": str, "relevant": bool,
 *     "witness": { "I": str, "J": str, "K": str, "psi0": str },   (only when relevant)
 *     "lambda_table": { "a_max": int,
 *                       "entries": [ { "eta": str, "a": int, "order": "pi,sigma" | "sigma,pi", "value": int } ] },
 *     "sl2_pi": [int], "sl2_sigma": [int], "close": bool, "nt_pi": int, "nt_sigma": int }
 * Parameters and symbols use the text form above.
 */
nlohmann::json encode_report(const RelevanceReport &report);
RelevanceReport decode_report(const nlohmann::json &doc);

} // namespace ggprel
