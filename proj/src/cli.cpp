#include "splitkit/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <ostream>
#include <vector>

namespace splitkit::cli {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (start <= line.size()) {
        const auto end = line.find(sep, start);
        const auto stop = end == std::string_view::npos ? line.size() : end;
        out.push_back(line.substr(start, stop - start));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return out;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> words(std::string_view line) {
    std::vector<std::string_view> out;
    for (auto tok : split_tokens(line, ' '))
        for (auto t : split_tokens(tok, '\t'))
            if (!trim(t).empty()) out.push_back(trim(t));
    return out;
}

std::optional<std::int64_t> to_int(std::string_view s) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

struct Line {
    std::size_t number;
    std::vector<std::string_view> words;
};

std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    for (auto raw : split_tokens(text, '\n')) {
        ++number;
        if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        auto w = words(raw);
        if (!w.empty()) out.push_back({number, std::move(w)});
    }
    return out;
}

std::pair<std::int64_t, std::int64_t> two_ints(const Line& line) {
    if (line.words.size() != 2) throw ParseError(line.number, "expected two integers");
    const auto a = to_int(line.words[0]);
    const auto b = to_int(line.words[1]);
    if (!a || !b) throw ParseError(line.number, "expected two integers");
    return {*a, *b};
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

Format resolve(const Options& opts, Format fallback) { return opts.format.value_or(fallback); }

std::string label_set(const QuadPartition& p, Block b, char sep) {
    std::string out;
    for (auto v : p.members(b)) {
        if (!out.empty()) out += sep;
        out += std::to_string(v + 1);
    }
    return out;
}

std::string join(const std::vector<Degree>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

std::vector<Degree> widen(const std::vector<std::size_t>& values) {
    return {values.begin(), values.end()};
}

/// Collects oracle cross-checks for one command invocation.
class OracleReport {
public:
    explicit OracleReport(std::ostream& err) : err_(err) {}

    void expect(bool agree, const std::string& what) {
        ++checks_;
        if (!agree) {
            ++failures_;
            err_ << "oracle disagreement: " << what << '\n';
        }
    }

    /// Overrides `code` when a check failed.
    int finish(int code) const {
        if (failures_ > 0) return kOracleDisagreement;
        if (checks_ == 0) err_ << "oracle: skipped (outside enumeration budget)\n";
        else err_ << "oracle: agree (" << checks_ << " checks)\n";
        return code;
    }

private:
    std::ostream& err_;
    int checks_ = 0;
    int failures_ = 0;
};

bool within(std::size_t n, std::size_t bound) { return n <= bound; }

bool partitions_fit(std::size_t n, const oracle::EnumerationBudget& budget) {
    return n < 32 && (std::uint64_t{1} << (2 * n)) <= budget.max_partitions;
}

} // namespace

IntegerPairSequence InputDocument::sequence() const {
    if (const auto* g = std::get_if<Digraph>(&content)) return degree_sequence(*g);
    return std::get<IntegerPairSequence>(content);
}

InputDocument parse_input(std::string_view text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw ParseError(1, "empty input; expected `seq` or `digraph N` header");
    const auto& header = lines.front();
    if (header.words[0] == "seq") {
        if (header.words.size() != 1) throw ParseError(header.number, "`seq` header takes no arguments");
        std::vector<DegreePair> pairs;
        for (std::size_t i = 1; i < lines.size(); ++i) {
            const auto [out, in] = two_ints(lines[i]);
            pairs.push_back({out, in});
        }
        return {IntegerPairSequence(std::move(pairs))};
    }
    if (header.words[0] == "digraph") {
        if (header.words.size() != 2) throw ParseError(header.number, "expected `digraph N`");
        const auto n = to_int(header.words[1]);
        if (!n || *n < 0) throw ParseError(header.number, "vertex count must be a non-negative integer");
        std::vector<Arc> arcs;
        for (std::size_t i = 1; i < lines.size(); ++i) {
            const auto [u, v] = two_ints(lines[i]);
            if (u < 1 || u > *n || v < 1 || v > *n)
                throw ParseError(lines[i].number, "arc label outside [1," + std::to_string(*n) + "]");
            arcs.push_back({static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1)});
        }
        try {
            return {Digraph(static_cast<std::size_t>(*n), std::move(arcs))};
        } catch (const InvalidDigraphError& e) {
            throw ParseError(header.number, e.what());
        }
    }
    throw ParseError(header.number, "unknown header `" + std::string(header.words[0]) + "`");
}

std::string format_sequence(const IntegerPairSequence& d) {
    std::string out = "seq\n";
    for (const auto& p : d) out += std::to_string(p.out) + ' ' + std::to_string(p.in) + '\n';
    return out;
}

std::string format_digraph(const Digraph& g) {
    std::string out = "digraph " + std::to_string(g.vertex_count()) + '\n';
    for (const auto& a : g.arcs()) out += std::to_string(a.from + 1) + ' ' + std::to_string(a.to + 1) + '\n';
    return out;
}

oracle::EnumerationBudget budget_from_env() {
    const char* raw = std::getenv("SPLITKIT_ORACLE_MAX_N");
    if (raw == nullptr) return {};
    const auto n = to_int(trim(raw));
    if (!n || *n < 0) return {};
    return oracle::EnumerationBudget::for_vertices(static_cast<std::size_t>(*n));
}

std::string matrix_csv(const SplittanceMatrix& sigma) {
    std::string out;
    for (std::size_t k = 0; k < sigma.dim(); ++k) {
        for (std::size_t l = 0; l < sigma.dim(); ++l) {
            if (l) out += ',';
            out += std::to_string(sigma(k, l));
        }
        out += '\n';
    }
    return out;
}

SplittanceMatrix parse_matrix_csv(std::string_view text) {
    std::vector<std::vector<Degree>> rows;
    std::size_t number = 0;
    for (auto raw : split_tokens(text, '\n')) {
        ++number;
        const auto line = trim(raw);
        if (line.empty()) break;
        std::vector<Degree> row;
        bool numeric = true;
        for (auto cell : split_tokens(line, ',')) {
            const auto v = to_int(trim(cell));
            if (!v) {
                numeric = false;
                break;
            }
            row.push_back(*v);
        }
        if (!numeric) break;
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError(1, "no matrix rows");
    SplittanceMatrix sigma(rows.size() - 1);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (rows[k].size() != rows.size()) throw ParseError(k + 1, "matrix is not square");
        for (std::size_t l = 0; l < rows.size(); ++l) sigma(k, l) = rows[k][l];
    }
    return sigma;
}

int cmd_check(const InputDocument& doc, const Options& opts, std::ostream& out, std::ostream& err) {
    const auto d = doc.sequence();
    const bool valid = is_valid(d);
    const bool digraphic = valid && is_digraphic(d);
    std::optional<Degree> splittance;
    if (digraphic && !d.empty()) splittance = digraph_splittance(d);
    const bool split = splittance && *splittance == 0;

    const std::string value = splittance ? std::to_string(*splittance) : "none";
    if (resolve(opts, Format::Kv) == Format::Csv) {
        out << "digraphic,split,splittance\n"
            << bool_text(digraphic) << ',' << bool_text(split) << ',' << value << '\n';
    } else {
        out << "digraphic=" << bool_text(digraphic) << '\n'
            << "split=" << bool_text(split) << '\n'
            << "splittance=" << value << '\n';
    }
    if (!valid) {
        try {
            validate(d);
        } catch (const Error& e) {
            err << "invalid sequence: " << e.what() << '\n';
        }
    }

    const int code = !digraphic ? kInvalidSequence : split ? kSplit : kNotSplit;
    if (!opts.oracle) return code;

    OracleReport report(err);
    if (within(d.size(), opts.budget.max_search_vertices)) {
        const bool realized = oracle::brute_realize(d, opts.budget).has_value();
        report.expect(realized == digraphic, "realization search says digraphic=" + std::string(bool_text(realized)));
    }
    if (splittance && partitions_fit(d.size(), opts.budget)) {
        const auto brute = oracle::brute_min_partition_measure(d, opts.budget);
        report.expect(brute == *splittance, "partition enumeration gives splittance " + std::to_string(brute));
    }
    if (const auto* g = std::get_if<Digraph>(&doc.content);
        g && g->vertex_count() > 0 && within(g->vertex_count(), opts.budget.max_vertices)) {
        const auto brute = oracle::brute_splittance(*g, opts.budget);
        report.expect(brute == *splittance, "edit-radius search gives splittance " + std::to_string(brute));
    }
    return report.finish(code);
}

int cmd_matrix(const InputDocument& doc, const Options& opts, std::ostream& out, std::ostream& err) {
    const auto d = doc.sequence();
    try {
        validate(d);
    } catch (const Error& e) {
        err << "invalid sequence: " << e.what() << '\n';
        return kInvalidSequence;
    }
    const auto sigma = splittance_matrix(d);
    const auto ord = proper_order(d);

    if (resolve(opts, Format::Csv) == Format::Csv) {
        out << matrix_csv(sigma);
    } else {
        for (std::size_t k = 0; k < sigma.dim(); ++k) {
            std::vector<Degree> row;
            for (std::size_t l = 0; l < sigma.dim(); ++l) row.push_back(sigma(k, l));
            out << "sigma." << k << '=' << join(row) << '\n';
        }
    }
    if (opts.slack) {
        const auto slack = fulkerson_slack(d);
        const auto maximal = maximal_sequences(d, ord);
        const char sep = resolve(opts, Format::Csv) == Format::Csv ? ',' : '=';
        out << "s_bar" << sep << join(slack.s_bar) << '\n'
            << "s_under" << sep << join(slack.s_under) << '\n'
            << "m_bar" << sep << join(widen(maximal.m_bar)) << '\n'
            << "m_under" << sep << join(widen(maximal.m_under)) << '\n';
    }

    const bool digraphic = is_digraphic(d);
    const int code = !digraphic ? kInvalidSequence : is_split_sequence(d) ? kSplit : kNotSplit;
    if (!digraphic) err << "sequence is not digraphic\n";
    if (!opts.oracle) return code;

    OracleReport report(err);
    report.expect(splittance_matrix_literal(d) == sigma, "per-cell evaluation differs from prefix-sum matrix");
    if (digraphic && !d.empty() && partitions_fit(d.size(), opts.budget)) {
        const auto cell = *minimizing_cell(sigma);
        const auto brute = oracle::brute_min_partition_measure(d, opts.budget);
        report.expect(brute == sigma(cell.first, cell.second),
                      "partition enumeration minimum " + std::to_string(brute));
    }
    return report.finish(code);
}

int cmd_partitions(const InputDocument& doc, const Options& opts, std::ostream& out, std::ostream& err) {
    const auto d = doc.sequence();
    if (!is_digraphic(d)) {
        err << "sequence is not digraphic\n";
        return kInvalidSequence;
    }
    const auto found = split_partitions(d);
    const bool csv = resolve(opts, Format::Kv) == Format::Csv;
    if (csv) out << "k,l,Spm,Sp,Sm,S0,corner\n";
    for (const auto& sp : found) {
        const auto& p = sp.partition;
        if (csv) {
            out << sp.k << ',' << sp.l << ',' << label_set(p, Block::PlusMinus, ' ') << ','
                << label_set(p, Block::Plus, ' ') << ',' << label_set(p, Block::Minus, ' ') << ','
                << label_set(p, Block::Zero, ' ') << ',' << bool_text(sp.corner) << '\n';
        } else {
            out << "k=" << sp.k << " l=" << sp.l << " Spm={" << label_set(p, Block::PlusMinus, ',')
                << "} Sp={" << label_set(p, Block::Plus, ',') << "} Sm={" << label_set(p, Block::Minus, ',')
                << "} S0={" << label_set(p, Block::Zero, ',') << '}' << (sp.corner ? " corner=true" : "")
                << '\n';
        }
    }
    const int code = found.empty() ? kNotSplit : kSplit;
    if (!opts.oracle) return code;

    OracleReport report(err);
    const auto* g = std::get_if<Digraph>(&doc.content);
    for (const auto& sp : found) {
        report.expect(sp.partition.non_trivial() && partition_measure_neg(d, sp.partition) == 0,
                      "partition at (" + std::to_string(sp.k) + "," + std::to_string(sp.l) + ") has nonzero measure");
        if (g) report.expect(verify_split_partition(*g, sp.partition), "partition fails arc constraints");
    }
    if (!d.empty() && partitions_fit(d.size(), opts.budget)) {
        const bool brute_split = oracle::brute_min_partition_measure(d, opts.budget) == 0;
        report.expect(brute_split == !found.empty(), "partition enumeration disagrees on splitness");
    }
    return report.finish(code);
}

int cmd_repair(const InputDocument& doc, const Options& opts, std::ostream& out, std::ostream& err) {
    const auto* g = std::get_if<Digraph>(&doc.content);
    if (g == nullptr) {
        err << "repair needs a `digraph` input\n";
        return kParseError;
    }
    if (g->vertex_count() == 0) {
        err << "the null digraph has no non-trivial partition\n";
        return kNotSplit;
    }
    const auto result = repair(*g);
    const bool csv = resolve(opts, Format::Kv) == Format::Csv;
    if (csv) out << "op,from,to\n";
    const auto emit = [&](char op, const Arc& a) {
        if (csv) out << op << ',' << a.from + 1 << ',' << a.to + 1 << '\n';
        else out << op << ' ' << a.from + 1 << ' ' << a.to + 1 << '\n';
    };
    for (const auto& a : result.edits.add) emit('+', a);
    for (const auto& a : result.edits.remove) emit('-', a);

    const int code = result.edits.empty() ? kSplit : kNotSplit;
    if (!opts.oracle) return code;

    OracleReport report(err);
    const auto repaired = apply(*g, result.edits);
    report.expect(verify_split_partition(repaired, result.partition), "repaired digraph fails arc constraints");
    report.expect(repair(repaired).edits.empty(), "repairing the repaired digraph is not a no-op");
    if (within(g->vertex_count(), opts.budget.max_vertices)) {
        const auto brute = oracle::brute_splittance(*g, opts.budget);
        report.expect(brute == static_cast<Degree>(result.edits.size()),
                      "edit-radius search gives splittance " + std::to_string(brute));
    }
    return report.finish(code);
}

int run(std::string_view command, std::string_view text, const Options& opts,
        std::ostream& out, std::ostream& err) {
    InputDocument doc;
    try {
        doc = parse_input(text);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParseError;
    }
    try {
        if (command == "check") return cmd_check(doc, opts, out, err);
        if (command == "matrix") return cmd_matrix(doc, opts, out, err);
        if (command == "partitions") return cmd_partitions(doc, opts, out, err);
        if (command == "repair") return cmd_repair(doc, opts, out, err);
    } catch (const BudgetExceededError& e) {
        err << "oracle: " << e.what() << '\n';
        return kOracleDisagreement;
    }
    err << "unknown command `" << command << "`\n";
    return kParseError;
}

} // namespace splitkit::cli
