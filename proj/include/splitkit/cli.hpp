#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "splitkit/digraph.hpp"
#include "splitkit/errors.hpp"
#include "splitkit/oracle.hpp"
#include "splitkit/sequence.hpp"
#include "splitkit/splittance.hpp"

namespace splitkit::cli {

/// Process exit codes shared by every command.
enum ExitCode : int {
    kSplit = 0,
    kNotSplit = 1,
    kParseError = 2,
    kInvalidSequence = 3,
    kOracleDisagreement = 4,
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Either a degree sequence or a concrete digraph, read from a text file.
///
///     seq                 digraph 5
///     2 1                 1 2
///     3 2                 2 3
///     ...                 ...
///
/// Digraph labels are 1-based. Blank lines and `#` comments are ignored.
struct InputDocument {
    std::variant<IntegerPairSequence, Digraph> content;

    bool is_digraph() const noexcept { return std::holds_alternative<Digraph>(content); }
    /// The sequence itself, or the digraph's degree sequence.
    IntegerPairSequence sequence() const;
};

/// Throws ParseError.
InputDocument parse_input(std::string_view text);

std::string format_sequence(const IntegerPairSequence& d);
std::string format_digraph(const Digraph& g);

enum class Format { Kv, Csv };

struct Options {
    /// nullopt selects the command's default (csv for matrix, kv otherwise).
    std::optional<Format> format;
    bool oracle = false;
    /// matrix: also emit s_bar, s_under, m_bar, m_under rows.
    bool slack = false;
    oracle::EnumerationBudget budget;
};

/// Reads SPLITKIT_ORACLE_MAX_N when set.
oracle::EnumerationBudget budget_from_env();

std::string matrix_csv(const SplittanceMatrix& sigma);
/// Reads leading all-numeric rows; throws ParseError unless they form a square.
SplittanceMatrix parse_matrix_csv(std::string_view text);

int cmd_check(const InputDocument& doc, const Options& opts, std::ostream& out, std::ostream& err);
int cmd_matrix(const InputDocument& doc, const Options& opts, std::ostream& out, std::ostream& err);
int cmd_partitions(const InputDocument& doc, const Options& opts, std::ostream& out, std::ostream& err);
int cmd_repair(const InputDocument& doc, const Options& opts, std::ostream& out, std::ostream& err);

/// Parses `text` and dispatches on `command`; maps parse failures to kParseError.
int run(std::string_view command, std::string_view text, const Options& opts,
        std::ostream& out, std::ostream& err);

} // namespace splitkit::cli
