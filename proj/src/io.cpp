#include "lcsrate/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>

#include <fmt/format.h>

#include "lcsrate/errors.hpp"

namespace lcsrate {

namespace {

std::string_view trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        const auto start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
        if (i > start) {
            out.push_back(s.substr(start, i - start));
        }
    }
    return out;
}

double parse_real(std::string_view tok, std::size_t line_no)
{
    double v = 0.0;
    const auto* first = tok.data();
    if (!tok.empty() && tok.front() == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw InputError(fmt::format("line {}: '{}' is not a number", line_no, tok));
    }
    return v;
}

// Content lines with their 1-based line numbers.
std::vector<std::pair<std::size_t, std::string>> content_lines(std::istream& in)
{
    std::vector<std::pair<std::size_t, std::string>> out;
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        const auto t = trim(line);
        if (t.empty() || t.front() == '#') {
            continue;
        }
        out.emplace_back(no, std::string(t));
    }
    return out;
}

// Splits "key: rest" and returns rest if the key matches.
std::optional<std::string_view> keyed(std::string_view line, std::string_view key)
{
    if (line.size() <= key.size() || line.substr(0, key.size()) != key || line[key.size()] != ':') {
        return std::nullopt;
    }
    return trim(line.substr(key.size() + 1));
}

std::ifstream open_or_throw(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw InputError(fmt::format("cannot read '{}'", path.string()));
    }
    return in;
}

}  // namespace

SchemeFile parse_scheme(std::istream& in)
{
    const auto lines = content_lines(in);
    std::optional<std::vector<std::string>> symbols;
    std::optional<double> delta;
    std::vector<double> matrix;
    std::size_t i = 0;
    for (; i < lines.size(); ++i) {
        const auto& [no, text] = lines[i];
        if (auto rest = keyed(text, "alphabet")) {
            symbols.emplace();
            for (auto tok : split_ws(*rest)) {
                symbols->emplace_back(tok);
            }
        } else if (auto rest = keyed(text, "delta")) {
            delta = parse_real(*rest, no);
        } else if (text == "matrix:") {
            ++i;
            break;
        } else {
            throw InputError(fmt::format("line {}: unexpected '{}'", no, text));
        }
    }
    if (!symbols || symbols->empty()) {
        throw InputError("scheme file lacks a nonempty 'alphabet:' line");
    }
    if (!delta) {
        throw InputError("scheme file lacks a 'delta:' line");
    }
    const auto size = symbols->size();
    if (lines.size() - std::min(i, lines.size()) != size) {
        throw InputError(fmt::format("scheme file needs a 'matrix:' line followed by {} rows", size));
    }
    for (; i < lines.size(); ++i) {
        const auto& [no, text] = lines[i];
        const auto toks = split_ws(text);
        if (toks.size() != size) {
            throw InputError(fmt::format("line {}: expected {} scores, got {}", no, size, toks.size()));
        }
        for (auto tok : toks) {
            matrix.push_back(parse_real(tok, no));
        }
    }
    ScoringScheme scheme(size, std::move(matrix), *delta);
    return SchemeFile{std::move(*symbols), std::move(scheme)};
}

SchemeFile load_scheme(const std::filesystem::path& path)
{
    auto in = open_or_throw(path);
    return parse_scheme(in);
}

LetterDistribution parse_distribution(std::istream& in)
{
    const auto lines = content_lines(in);
    if (lines.size() != 1) {
        throw InputError("distribution file must contain exactly one 'probs:' line");
    }
    const auto& [no, text] = lines.front();
    const auto rest = keyed(text, "probs");
    if (!rest) {
        throw InputError(fmt::format("line {}: expected 'probs: <p0> <p1> ...'", no));
    }
    std::vector<double> probs;
    for (auto tok : split_ws(*rest)) {
        probs.push_back(parse_real(tok, no));
    }
    return LetterDistribution(std::move(probs));
}

LetterDistribution load_distribution(const std::filesystem::path& path)
{
    auto in = open_or_throw(path);
    return parse_distribution(in);
}

std::string format_real(double v) { return fmt::format("{}", v); }

void write_estimate_csv(std::ostream& out, const EstimateReport& report)
{
    out << "replicate_index,score\n";
    for (std::size_t i = 0; i < report.per_replicate_scores.size(); ++i) {
        out << fmt::format("{},{}\n", i, format_real(report.per_replicate_scores[i]));
    }
    out << "mean_per_letter," << format_real(report.mean_per_letter) << '\n';
}

}  // namespace lcsrate
