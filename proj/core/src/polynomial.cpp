#include "hitcalc/polynomial.hpp"

#include "hitcalc/error.hpp"
#include "text_scanner.hpp"

#include <algorithm>
#include <iterator>

namespace hitcalc {

Polynomial Polynomial::from_terms(std::vector<Monomial> terms)
{
    std::sort(terms.begin(), terms.end(), LexLess{});
    Polynomial p;
    p.terms_.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i + 1;
        while (j < terms.size() && terms[j] == terms[i])
            ++j;
        if ((j - i) % 2 == 1)
            p.terms_.push_back(terms[i]);
        i = j;
    }
    return p;
}

Polynomial Polynomial::from_sorted_unique(std::vector<Monomial> terms)
{
    Polynomial p;
    p.terms_ = std::move(terms);
    return p;
}

bool Polynomial::contains(const Monomial& m) const
{
    return std::binary_search(terms_.begin(), terms_.end(), m, LexLess{});
}

bool Polynomial::is_homogeneous() const noexcept
{
    for (const Monomial& m : terms_)
        if (m.degree() != terms_.front().degree() || m.vars() != terms_.front().vars())
            return false;
    return true;
}

std::optional<std::uint64_t> Polynomial::degree() const noexcept
{
    if (terms_.empty() || !is_homogeneous())
        return std::nullopt;
    return terms_.front().degree();
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    std::vector<Monomial> sum;
    sum.reserve(terms_.size() + other.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
                                  std::back_inserter(sum), LexLess{});
    terms_ = std::move(sum);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    std::vector<Monomial> terms;
    terms.reserve(a.size() * b.size());
    for (const Monomial& x : a.terms_)
        for (const Monomial& y : b.terms_)
            terms.push_back(x * y);
    return Polynomial::from_terms(std::move(terms));
}

Polynomial squared(const Polynomial& f)
{
    std::vector<Monomial> terms;
    terms.reserve(f.size());
    for (const Monomial& m : f.terms())
        terms.push_back(m * m);
    // doubling preserves the lexicographic order
    return Polynomial::from_sorted_unique(std::move(terms));
}

bool in_lower_tau_span(const Polynomial& f, const TauSequence& t)
{
    return std::all_of(f.terms().begin(), f.terms().end(),
                       [&](const Monomial& m) { return in_lower_tau_span(m, t); });
}

std::string to_string(const Polynomial& f)
{
    if (f.is_zero())
        return "0";
    std::string s;
    for (const Monomial& m : f.terms()) {
        if (!s.empty())
            s += '+';
        s += to_string(m);
    }
    return s;
}

Polynomial parse_polynomial(std::string_view text)
{
    detail::TextScanner sc(text);
    sc.skip_space();
    if (sc.accept('0')) {
        sc.skip_space();
        if (!sc.done())
            sc.fail("unexpected trailing input");
        return {};
    }
    std::vector<Monomial> terms;
    for (;;) {
        terms.push_back(sc.monomial());
        sc.skip_space();
        if (sc.done())
            break;
        sc.expect('+');
    }
    return Polynomial::from_terms(std::move(terms));
}

}  // namespace hitcalc
