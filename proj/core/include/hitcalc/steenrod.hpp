#pragma once

#include "hitcalc/monomial.hpp"
#include "hitcalc/polynomial.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

namespace hitcalc {

/// Sq^i(x^a) = C(a, i) x^{a+i}. Returns a + i when the binomial coefficient is odd
/// (i is a binary submask of a), otherwise empty. Sq^0 is the identity.
constexpr std::optional<std::uint64_t> sq_power(std::uint64_t i, std::uint64_t a) noexcept
{
    if ((i & a) != i)
        return std::nullopt;
    return a + i;
}

namespace detail {

template <class Fn>
void sq_terms(std::uint64_t remaining, std::size_t j, std::uint64_t tail_capacity, const Monomial& m,
              Monomial& out, Fn& fn)
{
    const Exponent a = m[j];
    if (j + 1 == m.vars()) {
        if ((remaining & a) == remaining) {
            out.set(j, static_cast<Exponent>(a + remaining));
            fn(static_cast<const Monomial&>(out));
        }
        return;
    }
    const std::uint64_t rest = tail_capacity - a;
    // submasks of a below the top bit of `remaining`, largest first; the parts left for later
    // variables can be at most `rest`
    const std::uint64_t below = remaining == 0 ? 0 : (~std::uint64_t(0) >> std::countl_zero(remaining));
    for (std::uint64_t part = a & below;; part = (part - 1) & a) {
        if (part <= remaining && remaining - part <= rest) {
            out.set(j, static_cast<Exponent>(a + part));
            sq_terms(remaining - part, j + 1, rest, m, out, fn);
        }
        if (part == 0)
            break;
    }
}

}  // namespace detail

/// Calls fn(term) for every monomial of Sq^i(m). The terms are pairwise distinct, so no
/// cancellation happens inside a single monomial's image.
template <class Fn>
void for_each_sq_term(std::uint64_t i, const Monomial& m, Fn&& fn)
{
    if (m.vars() == 0)
        return;
    const std::uint64_t d = m.degree();
    if (i > d)
        return;
    Monomial out = m;
    detail::sq_terms(i, 0, d, m, out, fn);
}

Polynomial sq(std::uint64_t i, const Monomial& m);
Polynomial sq(std::uint64_t i, const Polynomial& f);

/// Spanning set of the hit subspace in degree n: Sq^{2^j}(m) for every 2^j <= n and every
/// monomial m of degree n - 2^j. Zero images are kept.
struct GeneratorImageSet
{
    struct Entry
    {
        std::uint64_t square;
        Monomial source;
        Polynomial image;
    };

    std::size_t vars = 0;
    std::uint64_t degree = 0;
    std::vector<Entry> entries;
};

GeneratorImageSet hit_generator_images(std::size_t k, std::uint64_t n);

/// The squares Sq^{2^j} with 2^j <= n.
std::vector<std::uint64_t> generator_squares(std::uint64_t n);

/// x_1 x_2 ... x_k m^2
Monomial kameko_phi(const Monomial& m);

/// y when m = kameko_phi(y), otherwise empty.
std::optional<Monomial> kameko_down(const Monomial& m);

/// Linear extension of kameko_down; monomials with an even exponent map to zero.
Polynomial kameko_down(const Polynomial& f);

}  // namespace hitcalc
