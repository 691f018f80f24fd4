#include "hitcalc/relation.hpp"

#include "hitcalc/error.hpp"
#include "hitcalc/steenrod.hpp"
#include "text_scanner.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace hitcalc {

std::vector<std::pair<std::uint64_t, Polynomial>> Relation::rhs_squares() const
{
    std::vector<std::pair<std::uint64_t, Polynomial>> out;
    for (const RelationTerm& t : terms)
        if (const auto* sq = std::get_if<SquareTerm>(&t))
            out.emplace_back(sq->index, Polynomial::from_terms(sq->argument));
    return out;
}

Polynomial Relation::rhs_monomials() const
{
    std::vector<Monomial> monos;
    for (const RelationTerm& t : terms)
        if (const auto* m = std::get_if<Monomial>(&t))
            monos.push_back(*m);
    return Polynomial::from_terms(std::move(monos));
}

namespace {

class RelationParser
{
public:
    RelationParser(std::string_view text, std::size_t line, std::vector<std::string>* warnings)
        : sc_(text, line), line_(line), warnings_(warnings)
    {
    }

    Relation parse()
    {
        Relation r;
        r.lhs = sc_.monomial();
        degree_ = r.lhs.degree();
        vars_ = r.lhs.vars();
        sc_.skip_space();
        sc_.expect('=');
        for (;;) {
            sc_.skip_space();
            r.terms.push_back(term());
            const std::size_t before = sc_.position();
            sc_.skip_space();
            if (sc_.accept('+'))
                continue;
            if (sc_.done())
                break;
            if (sc_.position() == before)
                sc_.fail("expected '+', \"mod\" or end of line");
            if (!sc_.accept("mod"))
                sc_.fail("expected '+' or \"mod\"");
            if (!sc_.at_space())
                sc_.fail("expected whitespace after \"mod\"");
            sc_.skip_space();
            sc_.expect("L(");
            const std::size_t col = sc_.column();
            TauSequence t = sc_.tau_body();
            sc_.expect(')');
            if (t.degree() != degree_)
                throw ParseError("modulus L" + to_string(t) + " has degree " + std::to_string(t.degree()) +
                                     ", expected " + std::to_string(degree_),
                                 line_, col);
            r.modulus = std::move(t);
            sc_.skip_space();
            if (!sc_.done())
                sc_.fail("unexpected trailing input");
            break;
        }
        warn_duplicates(r);
        return r;
    }

private:
    RelationTerm term()
    {
        const std::size_t col = sc_.column();
        if (sc_.accept("Sq^")) {
            SquareTerm sq;
            sq.index = sc_.uint();
            sc_.expect('[');
            if (sq.index > degree_)
                throw ParseError("Sq^" + std::to_string(sq.index) + " exceeds the relation degree " +
                                     std::to_string(degree_),
                                 line_, col);
            for (;;) {
                sc_.skip_space();
                const std::size_t mcol = sc_.column();
                Monomial m = sc_.monomial();
                check(m, degree_ - sq.index, mcol, "argument of Sq^" + std::to_string(sq.index));
                sq.argument.push_back(m);
                sc_.skip_space();
                if (sc_.accept(']'))
                    break;
                sc_.expect('+');
            }
            return sq;
        }
        Monomial m = sc_.monomial();
        check(m, degree_, col, "term");
        return m;
    }

    void check(const Monomial& m, std::uint64_t expected, std::size_t col, const std::string& role) const
    {
        if (m.vars() != vars_)
            throw ParseError(role + " " + to_string(m) + " has " + std::to_string(m.vars()) + " variables, expected " +
                                 std::to_string(vars_),
                             line_, col);
        if (m.degree() != expected)
            throw ParseError(role + " " + to_string(m) + " has degree " + std::to_string(m.degree()) + ", expected " +
                                 std::to_string(expected),
                             line_, col);
    }

    void report(const std::vector<Monomial>& list, const std::string& where) const
    {
        if (!warnings_)
            return;
        std::vector<Monomial> sorted = list;
        std::sort(sorted.begin(), sorted.end(), LexLess{});
        for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
            if (sorted[i] == sorted[i + 1] && (i == 0 || sorted[i - 1] != sorted[i]))
                warnings_->push_back("line " + std::to_string(line_) + ": " + to_string(sorted[i]) +
                                     " occurs more than once in " + where + "; reduced mod 2");
    }

    void warn_duplicates(const Relation& r) const
    {
        std::vector<Monomial> monos;
        for (const RelationTerm& t : r.terms) {
            if (const auto* m = std::get_if<Monomial>(&t))
                monos.push_back(*m);
            else
                report(std::get<SquareTerm>(t).argument, "the argument of Sq^" + std::to_string(std::get<SquareTerm>(t).index));
        }
        report(monos, "the right-hand side");
    }

    detail::TextScanner sc_;
    std::size_t line_;
    std::vector<std::string>* warnings_;
    std::uint64_t degree_ = 0;
    std::size_t vars_ = 0;
};

}  // namespace

Relation parse_relation(std::string_view text, std::size_t line, std::vector<std::string>* warnings)
{
    return RelationParser(text, line, warnings).parse();
}

std::string to_string(const Relation& relation)
{
    std::string s = to_string(relation.lhs) + " = ";
    bool first = true;
    for (const RelationTerm& t : relation.terms) {
        if (!first)
            s += " + ";
        first = false;
        if (const auto* m = std::get_if<Monomial>(&t)) {
            s += to_string(*m);
        } else {
            const auto& sq = std::get<SquareTerm>(t);
            s += "Sq^" + std::to_string(sq.index) + "[";
            for (std::size_t i = 0; i < sq.argument.size(); ++i) {
                if (i != 0)
                    s += " + ";
                s += to_string(sq.argument[i]);
            }
            s += "]";
        }
    }
    if (relation.modulus) {
        const std::string t = to_string(*relation.modulus);
        s += " mod L" + t;
    }
    return s;
}

RelationVerdict verify_relation(const Relation& relation)
{
    Polynomial residual = Polynomial(relation.lhs) + relation.rhs_monomials();
    for (const auto& [i, arg] : relation.rhs_squares())
        residual += sq(i, arg);
    if (residual.is_zero())
        return {RelationStatus::exact, {}};
    if (relation.modulus && in_lower_tau_span(residual, *relation.modulus))
        return {RelationStatus::holds_mod_L, std::move(residual)};
    return {RelationStatus::fails, std::move(residual)};
}

std::string to_string(RelationStatus status)
{
    switch (status) {
    case RelationStatus::exact:
        return "exact";
    case RelationStatus::holds_mod_L:
        return "holds_mod_L";
    case RelationStatus::fails:
        return "fails";
    }
    return "?";
}

std::vector<RelationEntry> parse_relation_file(std::string_view contents, std::vector<std::string>* warnings)
{
    std::vector<RelationEntry> out;
    std::string label;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= contents.size()) {
        std::size_t end = contents.find('\n', start);
        if (end == std::string_view::npos)
            end = contents.size();
        std::string_view line = contents.substr(start, end - start);
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string_view::npos) {
            // blank
        } else if (line[first] == '#') {
            std::string_view text = line.substr(first + 1);
            const auto b = text.find_first_not_of(" \t");
            label = b == std::string_view::npos ? std::string() : std::string(text.substr(b));
        } else {
            out.push_back({line_no, label, parse_relation(line, line_no, warnings)});
        }
        if (end == contents.size())
            break;
        start = end + 1;
    }
    return out;
}

std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<RelationEntry> load_relation_file(const std::filesystem::path& path, std::vector<std::string>* warnings)
{
    return parse_relation_file(read_text_file(path), warnings);
}

}  // namespace hitcalc
