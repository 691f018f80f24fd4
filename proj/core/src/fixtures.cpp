#include "hitcalc/fixtures.hpp"

#include "hitcalc/error.hpp"
#include "hitcalc/relation.hpp"
#include "text_scanner.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <unordered_set>

namespace hitcalc {

namespace {

struct ParamUse
{
    bool s = false;
    bool t = false;
    bool u = false;
};

unsigned param_value(char name, const FamilyParams& p, ParamUse& used, detail::TextScanner& sc)
{
    const std::optional<unsigned>* v = nullptr;
    switch (name) {
    case 's':
        v = &p.s;
        used.s = true;
        break;
    case 't':
        v = &p.t;
        used.t = true;
        break;
    case 'u':
        v = &p.u;
        used.u = true;
        break;
    default:
        sc.fail(std::string("unknown parameter '") + name + "'");
    }
    if (!*v)
        sc.fail(std::string("parameter ") + name + " is used by the family but blank");
    return **v;
}

std::uint64_t exponent_atom(detail::TextScanner& sc, const FamilyParams& p, ParamUse& used)
{
    const char c = sc.peek();
    if (c == 's' || c == 't' || c == 'u') {
        sc.seek(sc.position() + 1);
        return param_value(c, p, used, sc);
    }
    return sc.uint();
}

}  // namespace

std::uint64_t evaluate_family(std::string_view family, const FamilyParams& params)
{
    detail::TextScanner sc(family);
    ParamUse used;
    std::int64_t total = 0;
    int sign = 1;
    for (;;) {
        sc.skip_space();
        std::int64_t value = 0;
        if (sc.accept("2^")) {
            std::uint64_t e = 0;
            if (sc.accept('{')) {
                for (;;) {
                    e += exponent_atom(sc, params, used);
                    if (sc.accept('}'))
                        break;
                    sc.expect('+');
                }
            } else {
                e = exponent_atom(sc, params, used);
            }
            if (e >= 62)
                sc.fail("power of two too large");
            value = std::int64_t(1) << e;
        } else {
            value = static_cast<std::int64_t>(sc.uint());
        }
        total += sign * value;
        sc.skip_space();
        if (sc.done())
            break;
        if (sc.accept('+'))
            sign = 1;
        else if (sc.accept('-'))
            sign = -1;
        else
            sc.fail("expected '+' or '-'");
    }
    if ((params.s && !used.s) || (params.t && !used.t) || (params.u && !used.u))
        throw ParseError("a parameter is set but the family " + std::string(family) + " does not use it", 0, 0);
    if (total < 0)
        throw ParseError("family " + std::string(family) + " evaluates to a negative degree", 0, 0);
    return static_cast<std::uint64_t>(total);
}

namespace {

std::vector<std::string_view> split_csv(std::string_view line)
{
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        cells.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return cells;
}

std::optional<unsigned> optional_uint(std::string_view cell, std::size_t line, std::size_t column)
{
    if (cell.empty())
        return std::nullopt;
    detail::TextScanner sc(cell, line);
    const std::uint64_t v = sc.uint();
    if (!sc.done() || v > 1000)
        throw ParseError("bad parameter value \"" + std::string(cell) + "\"", line, column);
    return static_cast<unsigned>(v);
}

std::uint64_t required_uint(std::string_view cell, std::size_t line, std::size_t column)
{
    detail::TextScanner sc(cell, line);
    const std::uint64_t v = sc.uint();
    if (!sc.done())
        throw ParseError("bad integer \"" + std::string(cell) + "\"", line, column);
    return v;
}

}  // namespace

std::vector<TableRow> parse_table(std::string_view csv)
{
    static constexpr std::string_view kHeader = "family,s,t,u,degree,expected_dim,tier";
    std::vector<TableRow> rows;
    std::size_t line_no = 0;
    std::size_t start = 0;
    bool header_seen = false;
    while (start < csv.size()) {
        std::size_t end = csv.find('\n', start);
        if (end == std::string_view::npos)
            end = csv.size();
        std::string_view line = csv.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (line.empty())
            continue;
        if (!header_seen) {
            if (line != kHeader)
                throw ParseError("expected header \"" + std::string(kHeader) + "\"", line_no, 1);
            header_seen = true;
            continue;
        }
        const auto cells = split_csv(line);
        if (cells.size() != 7)
            throw ParseError("expected 7 fields, found " + std::to_string(cells.size()), line_no, 1);
        TableRow row;
        row.line = line_no;
        row.family = std::string(cells[0]);
        row.params = {optional_uint(cells[1], line_no, 2), optional_uint(cells[2], line_no, 3),
                      optional_uint(cells[3], line_no, 4)};
        row.degree = required_uint(cells[4], line_no, 5);
        row.expected = static_cast<std::size_t>(required_uint(cells[5], line_no, 6));
        if (cells[6] == "required")
            row.tier = Tier::required;
        else if (cells[6] == "optional")
            row.tier = Tier::optional;
        else
            throw ParseError("tier must be \"required\" or \"optional\"", line_no, 7);
        std::uint64_t formula = 0;
        try {
            formula = evaluate_family(row.family, row.params);
        } catch (const ParseError& e) {
            throw ParseError(e.what(), line_no, 1);
        }
        if (formula != row.degree)
            throw ParseError("degree " + std::to_string(row.degree) + " does not match " + row.family + " = " +
                                 std::to_string(formula),
                             line_no, 5);
        rows.push_back(std::move(row));
    }
    if (!header_seen)
        throw ParseError("empty table", 1, 1);
    return rows;
}

std::vector<TableRow> load_table(const std::filesystem::path& path)
{
    return parse_table(read_text_file(path));
}

TableReport verify_table(const std::vector<TableRow>& rows, TierSelection tier, HitSpaceCache& cache)
{
    TableReport report;
    for (const TableRow& row : rows) {
        if (tier == TierSelection::required && row.tier != Tier::required)
            continue;
        TableRowResult r{row, RowStatus::skipped, 0, {}};
        try {
            r.computed = cache.get(4, row.degree)->dimension();
            r.status = r.computed == row.expected ? RowStatus::pass : RowStatus::fail;
        } catch (const CapacityError& e) {
            r.note = e.what();
        }
        switch (r.status) {
        case RowStatus::pass:
            ++report.passed;
            break;
        case RowStatus::fail:
            ++report.failed;
            break;
        case RowStatus::skipped:
            ++report.skipped;
            break;
        }
        report.rows.push_back(std::move(r));
    }
    return report;
}

BasisFixture parse_basis(std::string_view json)
{
    BasisFixture f;
    try {
        const auto j = nlohmann::json::parse(json);
        f.vars = j.at("k").get<std::size_t>();
        f.degree = j.at("degree").get<std::uint64_t>();
        for (const auto& m : j.at("expected")) {
            const auto exps = m.get<std::vector<Exponent>>();
            if (exps.size() > kMaxVars)
                throw ParseError("too many variables in " + m.dump(), 0, 0);
            f.expected.emplace_back(std::span<const Exponent>(exps));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed basis fixture: ") + e.what(), 0, 0);
    }
    std::unordered_set<Monomial, MonomialHash> seen;
    for (const Monomial& m : f.expected) {
        if (m.vars() != f.vars || m.degree() != f.degree)
            throw DegreeError("basis fixture monomial " + to_string(m) + " is not of degree " +
                              std::to_string(f.degree) + " in " + std::to_string(f.vars) + " variables");
        if (!seen.insert(m).second)
            throw DegreeError("basis fixture lists " + to_string(m) + " twice");
    }
    return f;
}

BasisFixture load_basis(const std::filesystem::path& path)
{
    return parse_basis(read_text_file(path));
}

BasisDiff verify_basis(const BasisFixture& fixture, HitSpaceCache& cache)
{
    const auto space = cache.get(fixture.vars, fixture.degree);
    std::set<Monomial, LexLess> computed;
    for (const Monomial& m : space->admissible())
        computed.insert(m);
    std::set<Monomial, LexLess> expected(fixture.expected.begin(), fixture.expected.end());
    BasisDiff diff;
    std::set_difference(expected.begin(), expected.end(), computed.begin(), computed.end(),
                        std::back_inserter(diff.missing), LexLess{});
    std::set_difference(computed.begin(), computed.end(), expected.begin(), expected.end(),
                        std::back_inserter(diff.extra), LexLess{});
    return diff;
}

std::vector<CatalogEntry> parse_matrix_catalog(std::string_view text)
{
    std::vector<CatalogEntry> out;
    std::set<std::string> names;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        const std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        detail::TextScanner sc(line, line_no);
        sc.skip_space();
        if (sc.done() || sc.peek() == '#')
            continue;

        CatalogEntry e;
        e.line = line_no;
        while (!sc.done() && sc.peek() != ':' && !sc.at_space()) {
            e.name += sc.peek();
            sc.seek(sc.position() + 1);
        }
        if (e.name.empty())
            sc.fail("expected a matrix name");
        sc.expect(':');
        std::vector<std::vector<int>> rows;
        for (;;) {
            sc.skip_space();
            if (sc.done() || sc.peek() == '=')
                break;
            std::vector<int> row;
            while (sc.peek() == '0' || sc.peek() == '1') {
                row.push_back(sc.peek() - '0');
                sc.seek(sc.position() + 1);
            }
            if (row.empty())
                sc.fail("expected a row of 0/1 digits");
            if (!rows.empty() && row.size() != rows.front().size())
                sc.fail("rows have different lengths");
            rows.push_back(std::move(row));
        }
        if (rows.empty())
            sc.fail("matrix " + e.name + " has no rows");
        if (rows.front().size() > kMaxVars)
            sc.fail("too many columns");
        e.matrix = EpsilonMatrix::from_bits(rows);
        if (sc.accept('=')) {
            const std::size_t col = sc.column();
            e.stated = sc.monomial();
            sc.skip_space();
            if (!sc.done())
                sc.fail("unexpected trailing input");
            const Monomial actual = monomial_of_matrix(e.matrix);
            if (*e.stated != actual)
                throw ParseError("matrix " + e.name + " encodes " + to_string(actual) + ", not " +
                                     to_string(*e.stated),
                                 line_no, col);
        }
        if (!names.insert(e.name).second)
            throw ParseError("duplicate matrix name " + e.name, line_no, 1);
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<CatalogEntry> load_matrix_catalog(const std::filesystem::path& path)
{
    return parse_matrix_catalog(read_text_file(path));
}

}  // namespace hitcalc
