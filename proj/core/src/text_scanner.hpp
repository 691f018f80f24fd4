#pragma once

#include "hitcalc/error.hpp"
#include "hitcalc/monomial.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

namespace hitcalc::detail {

// Cursor over one line of text with 1-based error positions.
class TextScanner
{
public:
    explicit TextScanner(std::string_view text, std::size_t line = 1) : text_(text), line_(line) {}

    bool done() const noexcept { return pos_ >= text_.size(); }
    char peek() const noexcept { return done() ? '\0' : text_[pos_]; }
    std::size_t column() const noexcept { return pos_ + 1; }
    std::size_t position() const noexcept { return pos_; }
    void seek(std::size_t pos) noexcept { pos_ = pos; }

    void skip_space() noexcept
    {
        while (!done() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r'))
            ++pos_;
    }

    bool at_space() const noexcept
    {
        return !done() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r');
    }

    bool accept(char c) noexcept
    {
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }

    bool accept(std::string_view s) noexcept
    {
        if (text_.substr(pos_, s.size()) != s)
            return false;
        pos_ += s.size();
        return true;
    }

    void expect(char c)
    {
        if (!accept(c))
            fail(std::string("expected '") + c + "'" + found());
    }

    void expect(std::string_view s)
    {
        if (!accept(s))
            fail("expected \"" + std::string(s) + "\"" + found());
    }

    std::uint64_t uint()
    {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected an unsigned integer" + found());
        std::uint64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            const unsigned d = static_cast<unsigned>(text_[pos_] - '0');
            if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10)
                fail("integer too large");
            v = v * 10 + d;
            ++pos_;
        }
        return v;
    }

    Exponent exponent()
    {
        const std::size_t start = pos_;
        const std::uint64_t v = uint();
        if (v > std::numeric_limits<Exponent>::max()) {
            pos_ = start;
            fail("exponent exceeds 2^32-1");
        }
        return static_cast<Exponent>(v);
    }

    // "(" uint ("," uint)* ")" with optional whitespace between tokens
    Monomial monomial()
    {
        skip_space();
        expect('(');
        std::vector<Exponent> exps;
        for (;;) {
            skip_space();
            exps.push_back(exponent());
            skip_space();
            if (accept(')'))
                break;
            expect(',');
        }
        if (exps.size() > kMaxVars)
            fail("at most " + std::to_string(kMaxVars) + " variables are supported");
        return Monomial(std::span<const Exponent>(exps));
    }

    // uint (";" uint)*
    TauSequence tau_body()
    {
        std::vector<unsigned> t;
        for (;;) {
            skip_space();
            const std::uint64_t v = uint();
            if (v > std::numeric_limits<unsigned>::max())
                fail("τ entry too large");
            t.push_back(static_cast<unsigned>(v));
            skip_space();
            if (!accept(';'))
                break;
        }
        return TauSequence(std::move(t));
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column()); }

private:
    std::string found() const
    {
        if (done())
            return ", found end of input";
        return std::string(", found '") + text_[pos_] + "'";
    }

    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

}  // namespace hitcalc::detail
