#pragma once

#include "hitcalc/monomial.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hitcalc {

/// An element of F_2[x_1, ..., x_k]: a finite set of monomials. Terms are kept sorted in
/// plain lexicographic order without duplicates, so equality is structural.
class Polynomial
{
public:
    Polynomial() = default;
    Polynomial(const Monomial& m) : terms_{m} {}  // NOLINT(google-explicit-constructor)

    /// Sum of the given terms over F_2: a monomial listed twice cancels.
    static Polynomial from_terms(std::vector<Monomial> terms);

    /// Adopts terms that are already sorted by lex_less and pairwise distinct.
    static Polynomial from_sorted_unique(std::vector<Monomial> terms);

    const std::vector<Monomial>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool contains(const Monomial& m) const;

    /// True for the zero polynomial and for polynomials whose terms share one degree and arity.
    bool is_homogeneous() const noexcept;

    /// Degree of a nonzero homogeneous polynomial.
    std::optional<std::uint64_t> degree() const noexcept;

    Polynomial& operator+=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b)
    {
        a += b;
        return a;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::vector<Monomial> terms_;
};

/// f^2: every exponent doubled (cross terms cancel over F_2).
Polynomial squared(const Polynomial& f);

/// Every term satisfies tau(term) < t. Throws DegreeError on a degree mismatch.
bool in_lower_tau_span(const Polynomial& f, const TauSequence& t);

/// "+"-joined monomial tuples; "0" for the zero polynomial.
std::string to_string(const Polynomial& f);

/// Parses "(..)+(..)+..." or "0".
Polynomial parse_polynomial(std::string_view text);

}  // namespace hitcalc
