#include "hitcalc/gf2.hpp"

#include "hitcalc/error.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <string>

namespace hitcalc {

std::size_t default_column_cap()
{
    if (const char* env = std::getenv("HITCALC_COLUMN_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<std::size_t>(v);
    }
    return kDefaultColumnCap;
}

namespace {

// tau read off as a zero-padded byte string followed by the exponents; comparing these keys
// lexicographically is the admissibility order
struct OrderKey
{
    std::array<std::uint8_t, 32> tau{};
    Monomial m;

    explicit OrderKey(const Monomial& mono) : m(mono)
    {
        for (Exponent a : mono.exponents())
            for (; a != 0; a &= a - 1)
                ++tau[static_cast<std::size_t>(std::countr_zero(a))];
    }

    friend bool operator<(const OrderKey& x, const OrderKey& y) noexcept
    {
        if (x.tau != y.tau)
            return x.tau < y.tau;
        return lex_less(x.m, y.m);
    }
};

}  // namespace

ColumnUniverse::ColumnUniverse(std::vector<Monomial> monomials)
{
    if (monomials.size() >= std::numeric_limits<Column>::max())
        throw CapacityError(monomials.size(), std::numeric_limits<Column>::max() - 1);
    if (!monomials.empty()) {
        k_ = monomials.front().vars();
        degree_ = monomials.front().degree();
    }
    std::vector<OrderKey> keys;
    keys.reserve(monomials.size());
    for (const Monomial& m : monomials) {
        if (m.vars() != k_ || m.degree() != degree_)
            throw DegreeError("degree/arity mismatch: " + to_string(m) + " in a universe of degree " +
                              std::to_string(degree_) + " in " + std::to_string(k_) + " variables");
        keys.emplace_back(m);
    }
    std::sort(keys.begin(), keys.end());
    columns_.reserve(keys.size());
    index_.reserve(keys.size() * 2);
    for (const OrderKey& key : keys) {
        if (!index_.emplace(key.m, static_cast<Column>(columns_.size())).second)
            throw DegreeError("duplicate monomial " + to_string(key.m) + " in column universe");
        columns_.push_back(key.m);
    }
}

ColumnUniverse ColumnUniverse::of_degree(std::size_t k, std::uint64_t n, std::size_t cap)
{
    const std::uint64_t count = monomial_count(k, n);
    if (count > cap)
        throw CapacityError(static_cast<std::size_t>(std::min<std::uint64_t>(count, SIZE_MAX)), cap);
    ColumnUniverse u(monomials_of_degree(k, n));
    u.k_ = k;
    u.degree_ = n;
    return u;
}

std::optional<Column> ColumnUniverse::find(const Monomial& m) const
{
    const auto it = index_.find(m);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

Column ColumnUniverse::column_of(const Monomial& m) const
{
    if (auto c = find(m))
        return *c;
    throw DegreeError("degree/arity mismatch: " + to_string(m) + " is not a column of the universe of degree " +
                      std::to_string(degree_) + " in " + std::to_string(k_) + " variables");
}

bool BitRow::is_zero() const noexcept
{
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BitRow::count() const noexcept
{
    std::size_t n = 0;
    for (std::uint64_t w : words_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::size_t BitRow::highest() const noexcept
{
    for (std::size_t w = words_.size(); w-- > 0;)
        if (words_[w] != 0)
            return w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[w]));
    return npos;
}

std::vector<std::size_t> BitRow::ones() const
{
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w)
        for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1)
            out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
    return out;
}

BitRow& BitRow::operator^=(const BitRow& other) noexcept
{
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] ^= other.words_[w];
    return *this;
}

BitRow encode(const Polynomial& f, const ColumnUniverse& universe)
{
    BitRow row(universe.size());
    for (const Monomial& m : f.terms())
        row.flip(universe.column_of(m));
    return row;
}

Polynomial decode(const BitRow& row, const ColumnUniverse& universe)
{
    std::vector<Monomial> terms;
    for (std::size_t c : row.ones())
        terms.push_back(universe.monomial(static_cast<Column>(c)));
    return Polynomial::from_terms(std::move(terms));
}

BitRow EchelonBasis::reduce(BitRow row) const
{
    // rows are fully reduced, so clearing pivots in any order never reintroduces one
    for (const BitRow& r : rows_) {
        const std::size_t p = r.highest();
        if (row.test(p))
            row ^= r;
    }
    return row;
}

InsertResult EchelonBasis::insert(BitRow row)
{
    if (row.size() != columns_)
        throw DegreeError("row width " + std::to_string(row.size()) + " does not match " +
                          std::to_string(columns_) + " columns");
    row = reduce(std::move(row));
    const std::size_t pivot = row.highest();
    if (pivot == BitRow::npos)
        return {};
    for (BitRow& r : rows_)
        if (r.test(pivot))
            r ^= row;
    pivot_row_[pivot] = static_cast<std::uint32_t>(rows_.size());
    rows_.push_back(std::move(row));
    return {true, pivot};
}

bool EchelonBasis::contains(const BitRow& row) const
{
    if (row.size() != columns_)
        throw DegreeError("row width " + std::to_string(row.size()) + " does not match " +
                          std::to_string(columns_) + " columns");
    return reduce(row).is_zero();
}

std::vector<std::size_t> EchelonBasis::pivot_columns() const
{
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < columns_; ++c)
        if (pivot_row_[c] != kNone)
            out.push_back(c);
    return out;
}

SparseEchelon::SparseEchelon(std::size_t columns)
    : pivot_row_(columns, kNone), scratch_((columns + 63) / 64, 0), columns_(columns)
{
}

std::vector<Column> SparseEchelon::reduce(std::vector<std::uint64_t>& acc, std::span<const Column> row) const
{
    std::vector<Column> out;
    if (row.empty())
        return out;
    // count of set bits; every toggle moves it by one
    for (Column c : row)
        if (c >= columns_)
            throw DegreeError("column " + std::to_string(c) + " outside a universe of " + std::to_string(columns_));
    std::ptrdiff_t live = 0;
    std::size_t top = 0;
    for (Column c : row) {
        const std::uint64_t bit = std::uint64_t(1) << (c & 63);
        live += (acc[c >> 6] & bit) != 0 ? -1 : 1;
        acc[c >> 6] ^= bit;
        top = std::max<std::size_t>(top, c);
    }
    // pivot rows only carry columns at or below their pivot, so the leading column only descends
    std::size_t w = top >> 6;
    while (live > 0) {
        while (acc[w] == 0)
            --w;
        const std::size_t lead = w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(acc[w]));
        const std::uint32_t p = pivot_row_[lead];
        if (p == kNone) {
            out.reserve(static_cast<std::size_t>(live));
            for (;;) {
                while (acc[w] != 0) {
                    const std::size_t b = 63 - static_cast<std::size_t>(std::countl_zero(acc[w]));
                    out.push_back(static_cast<Column>(w * 64 + b));
                    acc[w] &= ~(std::uint64_t(1) << b);
                }
                if (static_cast<std::ptrdiff_t>(out.size()) == live)
                    break;
                --w;
            }
            return out;
        }
        for (Column c : rows_[p]) {
            const std::uint64_t bit = std::uint64_t(1) << (c & 63);
            live += (acc[c >> 6] & bit) != 0 ? -1 : 1;
            acc[c >> 6] ^= bit;
        }
    }
    return out;
}

InsertResult SparseEchelon::insert(std::span<const Column> row)
{
    std::vector<Column> rest = reduce(scratch_, row);
    if (rest.empty())
        return {};
    const std::size_t pivot = rest.front();
    pivot_row_[pivot] = static_cast<std::uint32_t>(rows_.size());
    rows_.push_back(std::move(rest));
    return {true, pivot};
}

bool SparseEchelon::contains(std::span<const Column> row) const
{
    std::vector<std::uint64_t> acc((columns_ + 63) / 64, 0);
    return reduce(acc, row).empty();
}

std::vector<std::size_t> SparseEchelon::pivot_columns() const
{
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < columns_; ++c)
        if (pivot_row_[c] != kNone)
            out.push_back(c);
    return out;
}

}  // namespace hitcalc
