#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hitcalc {

inline constexpr std::size_t kMaxVars = 8;

using Exponent = std::uint32_t;

/// x_1^{a_1} ... x_k^{a_k} in F_2[x_1, ..., x_k], stored inline for k <= kMaxVars.
class Monomial
{
public:
    Monomial() = default;

    /// The unit monomial in k variables.
    explicit Monomial(std::size_t k);
    Monomial(std::initializer_list<Exponent> exponents);
    explicit Monomial(std::span<const Exponent> exponents);

    std::size_t vars() const noexcept { return k_; }
    Exponent operator[](std::size_t j) const noexcept { return e_[j]; }
    void set(std::size_t j, Exponent a) noexcept { e_[j] = a; }
    std::span<const Exponent> exponents() const noexcept { return {e_.data(), k_}; }

    std::uint64_t degree() const noexcept
    {
        std::uint64_t d = 0;
        for (std::size_t j = 0; j < k_; ++j)
            d += e_[j];
        return d;
    }

    /// True when every exponent is positive (the monomial lies in R_k).
    bool all_positive() const noexcept
    {
        for (std::size_t j = 0; j < k_; ++j)
            if (e_[j] == 0)
                return false;
        return true;
    }

    /// Product: exponent tuples add. Both factors must have the same number of variables.
    Monomial operator*(const Monomial& other) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// Plain lexicographic order on (k, a_1, ..., a_k); used for storage, not the admissibility order.
    friend bool lex_less(const Monomial& x, const Monomial& y) noexcept
    {
        if (x.k_ != y.k_)
            return x.k_ < y.k_;
        for (std::size_t j = 0; j < x.k_; ++j)
            if (x.e_[j] != y.e_[j])
                return x.e_[j] < y.e_[j];
        return false;
    }

private:
    // unused slots stay zero so that defaulted equality is exact
    std::array<Exponent, kMaxVars> e_{};
    std::uint8_t k_ = 0;
};

struct MonomialHash
{
    std::size_t operator()(const Monomial& m) const noexcept
    {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ m.vars();
        for (Exponent a : m.exponents()) {
            h ^= a + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdULL;
        }
        return static_cast<std::size_t>(h ^ (h >> 33));
    }
};

struct LexLess
{
    bool operator()(const Monomial& x, const Monomial& y) const noexcept { return lex_less(x, y); }
};

inline std::uint64_t degree(const Monomial& m) noexcept
{
    return m.degree();
}

/// Number of ones in the binary expansion of n.
unsigned alpha(std::uint64_t n) noexcept;

/// Least m >= 1 with alpha(n + m) <= m; beta(0) is 0 by convention.
std::uint64_t beta(std::uint64_t n) noexcept;

/// Dyadic digit matrix of a monomial: row i holds bit i of every exponent.
/// Rows are k-bit masks, bit j standing for column j.
class EpsilonMatrix
{
public:
    using Row = std::uint32_t;

    EpsilonMatrix() = default;
    EpsilonMatrix(std::size_t k, std::vector<Row> rows);

    /// Builds from explicit 0/1 rows, e.g. {{1,1,0,1},{1,1,1,0}}.
    static EpsilonMatrix from_bits(std::initializer_list<std::initializer_list<int>> rows);
    static EpsilonMatrix from_bits(const std::vector<std::vector<int>>& rows);

    std::size_t vars() const noexcept { return k_; }
    std::size_t row_count() const noexcept { return rows_.size(); }
    const std::vector<Row>& rows() const noexcept { return rows_; }
    int entry(std::size_t i, std::size_t j) const noexcept { return (rows_[i] >> j) & 1U; }

    /// Row sums.
    std::vector<unsigned> row_weights() const;

    friend bool operator==(const EpsilonMatrix&, const EpsilonMatrix&) = default;

private:
    std::vector<Row> rows_;
    std::size_t k_ = 0;
};

EpsilonMatrix epsilon_matrix(const Monomial& m);
Monomial monomial_of_matrix(const EpsilonMatrix& matrix);

/// Row sums of the epsilon matrix, trailing zeros trimmed. Compared lexicographically,
/// which agrees with comparing the zero-padded infinite sequences.
class TauSequence
{
public:
    TauSequence() = default;
    TauSequence(std::initializer_list<unsigned> entries);
    explicit TauSequence(std::vector<unsigned> entries);

    const std::vector<unsigned>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }

    /// tau_i with 1-based i; zero beyond the stored length.
    unsigned operator()(std::size_t i) const noexcept
    {
        return i >= 1 && i <= entries_.size() ? entries_[i - 1] : 0U;
    }

    /// sum of 2^{i-1} tau_i
    std::uint64_t degree() const noexcept;

    friend bool operator==(const TauSequence&, const TauSequence&) = default;
    friend std::strong_ordering operator<=>(const TauSequence& a, const TauSequence& b) noexcept
    {
        return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(),
                                                      b.entries_.begin(), b.entries_.end());
    }

private:
    void trim();
    std::vector<unsigned> entries_;
};

TauSequence tau(const Monomial& m);

/// The admissibility order: tau first, then the exponent tuple, both lexicographic.
std::strong_ordering compare(const Monomial& x, const Monomial& y);

struct OrderLess
{
    bool operator()(const Monomial& x, const Monomial& y) const { return compare(x, y) < 0; }
};

/// Every exponent has the form 2^s - 1 (zero included).
bool is_spike(const Monomial& m) noexcept;

/// The spike of degree n whose nonzero exponents 2^{s_1}-1, ..., 2^{s_r}-1 sit in the first r
/// positions with s_1 > ... > s_{r-1} >= s_r > 0, r <= k. Empty when no such spike exists.
std::optional<Monomial> minimal_spike(std::uint64_t n, std::size_t k);

/// All spikes of degree n in k variables whose exponents are non-increasing; the exhaustive
/// enumeration minimal_spike selects from.
std::vector<Monomial> sorted_spikes(std::uint64_t n, std::size_t k);

/// tau(m) < t. Throws DegreeError when deg m differs from the degree encoded by t.
bool in_lower_tau_span(const Monomial& m, const TauSequence& t);

/// All monomials of degree n in k variables, in plain lexicographic order.
std::vector<Monomial> monomials_of_degree(std::size_t k, std::uint64_t n);

/// C(n + k - 1, k - 1), saturating at UINT64_MAX.
std::uint64_t monomial_count(std::size_t k, std::uint64_t n) noexcept;

std::string to_string(const Monomial& m);
std::string to_string(const TauSequence& t);
std::string to_string(const EpsilonMatrix& matrix);

/// Parses "(a1,a2,...,ak)"; whitespace is tolerated around tokens.
Monomial parse_monomial(std::string_view text);

/// Parses "(t1;t2;...;tm)", or the bare "t1;t2;...;tm".
TauSequence parse_tau(std::string_view text);

}  // namespace hitcalc
