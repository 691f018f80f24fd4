#include "hitcalc/steenrod.hpp"

#include "hitcalc/error.hpp"

#include <limits>

namespace hitcalc {

Polynomial sq(std::uint64_t i, const Monomial& m)
{
    if (std::uint64_t(m.degree()) + i > std::numeric_limits<Exponent>::max())
        throw DegreeError("Sq image exceeds the exponent range");
    std::vector<Monomial> terms;
    for_each_sq_term(i, m, [&](const Monomial& t) { terms.push_back(t); });
    return Polynomial::from_terms(std::move(terms));
}

Polynomial sq(std::uint64_t i, const Polynomial& f)
{
    std::vector<Monomial> terms;
    for (const Monomial& m : f.terms())
        for_each_sq_term(i, m, [&](const Monomial& t) { terms.push_back(t); });
    return Polynomial::from_terms(std::move(terms));
}

std::vector<std::uint64_t> generator_squares(std::uint64_t n)
{
    std::vector<std::uint64_t> squares;
    for (std::uint64_t s = 1; s != 0 && s <= n; s <<= 1)
        squares.push_back(s);
    return squares;
}

GeneratorImageSet hit_generator_images(std::size_t k, std::uint64_t n)
{
    GeneratorImageSet set;
    set.vars = k;
    set.degree = n;
    for (std::uint64_t s : generator_squares(n))
        for (const Monomial& m : monomials_of_degree(k, n - s))
            set.entries.push_back({s, m, sq(s, m)});
    return set;
}

Monomial kameko_phi(const Monomial& m)
{
    Monomial r(m.vars());
    for (std::size_t j = 0; j < m.vars(); ++j) {
        if (m[j] > (std::numeric_limits<Exponent>::max() - 1) / 2)
            throw DegreeError("exponent overflow in kameko_phi");
        r.set(j, 2 * m[j] + 1);
    }
    return r;
}

std::optional<Monomial> kameko_down(const Monomial& m)
{
    Monomial r(m.vars());
    for (std::size_t j = 0; j < m.vars(); ++j) {
        if ((m[j] & 1U) == 0)
            return std::nullopt;
        r.set(j, (m[j] - 1) / 2);
    }
    return r;
}

Polynomial kameko_down(const Polynomial& f)
{
    std::vector<Monomial> terms;
    for (const Monomial& m : f.terms())
        if (auto y = kameko_down(m))
            terms.push_back(*y);
    // injective on its domain, so no cancellation; re-sort since halving can reorder
    return Polynomial::from_terms(std::move(terms));
}

}  // namespace hitcalc
