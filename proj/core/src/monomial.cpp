#include "hitcalc/monomial.hpp"

#include "hitcalc/error.hpp"
#include "text_scanner.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace hitcalc {

Monomial::Monomial(std::size_t k)
{
    if (k > kMaxVars)
        throw DegreeError("at most " + std::to_string(kMaxVars) + " variables are supported");
    k_ = static_cast<std::uint8_t>(k);
}

Monomial::Monomial(std::initializer_list<Exponent> exponents)
    : Monomial(std::span<const Exponent>(exponents.begin(), exponents.size()))
{
}

Monomial::Monomial(std::span<const Exponent> exponents) : Monomial(exponents.size())
{
    std::copy(exponents.begin(), exponents.end(), e_.begin());
}

Monomial Monomial::operator*(const Monomial& other) const
{
    if (other.k_ != k_)
        throw DegreeError("cannot multiply monomials in different numbers of variables");
    Monomial r = *this;
    for (std::size_t j = 0; j < k_; ++j) {
        std::uint64_t a = std::uint64_t(e_[j]) + other.e_[j];
        if (a > std::numeric_limits<Exponent>::max())
            throw DegreeError("exponent overflow");
        r.e_[j] = static_cast<Exponent>(a);
    }
    return r;
}

unsigned alpha(std::uint64_t n) noexcept
{
    return static_cast<unsigned>(std::popcount(n));
}

std::uint64_t beta(std::uint64_t n) noexcept
{
    if (n == 0)
        return 0;
    std::uint64_t m = 1;
    while (alpha(n + m) > m)
        ++m;
    return m;
}

EpsilonMatrix::EpsilonMatrix(std::size_t k, std::vector<Row> rows) : rows_(std::move(rows)), k_(k)
{
    if (k > kMaxVars)
        throw DegreeError("at most " + std::to_string(kMaxVars) + " variables are supported");
    const Row mask = k == 32 ? ~Row(0) : ((Row(1) << k) - 1);
    for (Row r : rows_)
        if ((r & ~mask) != 0)
            throw DegreeError("matrix row has entries beyond column " + std::to_string(k));
}

EpsilonMatrix EpsilonMatrix::from_bits(std::initializer_list<std::initializer_list<int>> rows)
{
    std::vector<std::vector<int>> v;
    for (const auto& r : rows)
        v.emplace_back(r);
    return from_bits(v);
}

EpsilonMatrix EpsilonMatrix::from_bits(const std::vector<std::vector<int>>& rows)
{
    if (rows.empty())
        throw DegreeError("a matrix needs at least one row to fix its width");
    const std::size_t k = rows.front().size();
    std::vector<Row> packed;
    for (const auto& r : rows) {
        if (r.size() != k)
            throw DegreeError("matrix rows have different lengths");
        Row bits = 0;
        for (std::size_t j = 0; j < k; ++j) {
            if (r[j] != 0 && r[j] != 1)
                throw DegreeError("matrix entries must be 0 or 1");
            bits |= Row(r[j]) << j;
        }
        packed.push_back(bits);
    }
    return EpsilonMatrix(k, std::move(packed));
}

std::vector<unsigned> EpsilonMatrix::row_weights() const
{
    std::vector<unsigned> w;
    w.reserve(rows_.size());
    for (Row r : rows_)
        w.push_back(static_cast<unsigned>(std::popcount(r)));
    return w;
}

EpsilonMatrix epsilon_matrix(const Monomial& m)
{
    Exponent all = 0;
    for (Exponent a : m.exponents())
        all |= a;
    const int height = std::bit_width(all);
    std::vector<EpsilonMatrix::Row> rows(static_cast<std::size_t>(height), 0);
    for (std::size_t j = 0; j < m.vars(); ++j)
        for (int i = 0; i < height; ++i)
            rows[static_cast<std::size_t>(i)] |= ((m[j] >> i) & 1U) << j;
    return EpsilonMatrix(m.vars(), std::move(rows));
}

Monomial monomial_of_matrix(const EpsilonMatrix& matrix)
{
    if (matrix.row_count() > std::numeric_limits<Exponent>::digits)
        throw DegreeError("matrix has too many rows for 32-bit exponents");
    Monomial m(matrix.vars());
    for (std::size_t j = 0; j < matrix.vars(); ++j) {
        Exponent a = 0;
        for (std::size_t i = 0; i < matrix.row_count(); ++i)
            a |= Exponent(matrix.entry(i, j)) << i;
        m.set(j, a);
    }
    return m;
}

TauSequence::TauSequence(std::initializer_list<unsigned> entries) : entries_(entries)
{
    trim();
}

TauSequence::TauSequence(std::vector<unsigned> entries) : entries_(std::move(entries))
{
    trim();
}

void TauSequence::trim()
{
    while (!entries_.empty() && entries_.back() == 0)
        entries_.pop_back();
}

std::uint64_t TauSequence::degree() const noexcept
{
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        d += std::uint64_t(entries_[i]) << i;
    return d;
}

TauSequence tau(const Monomial& m)
{
    Exponent all = 0;
    for (Exponent a : m.exponents())
        all |= a;
    const int height = std::bit_width(all);
    std::vector<unsigned> t(static_cast<std::size_t>(height), 0);
    for (Exponent a : m.exponents())
        for (; a != 0; a &= a - 1)
            ++t[static_cast<std::size_t>(std::countr_zero(a))];
    return TauSequence(std::move(t));
}

std::strong_ordering compare(const Monomial& x, const Monomial& y)
{
    if (auto c = tau(x) <=> tau(y); c != 0)
        return c;
    const auto ex = x.exponents();
    const auto ey = y.exponents();
    return std::lexicographical_compare_three_way(ex.begin(), ex.end(), ey.begin(), ey.end());
}

bool is_spike(const Monomial& m) noexcept
{
    for (Exponent a : m.exponents())
        if ((a & (a + 1)) != 0)
            return false;
    return true;
}

namespace {

// Non-increasing sequences of all-ones parts 2^s - 1 (s >= 1) summing to n, at most k parts.
void enumerate_spikes(std::uint64_t remaining, unsigned max_s, std::size_t k, std::vector<Exponent>& parts,
                      std::vector<Monomial>& out)
{
    if (remaining == 0) {
        Monomial m(k);
        for (std::size_t j = 0; j < parts.size(); ++j)
            m.set(j, parts[j]);
        out.push_back(m);
        return;
    }
    if (parts.size() == k)
        return;
    for (unsigned s = max_s; s >= 1; --s) {
        const std::uint64_t part = (std::uint64_t(1) << s) - 1;
        if (part > remaining)
            continue;
        parts.push_back(static_cast<Exponent>(part));
        enumerate_spikes(remaining - part, s, k, parts, out);
        parts.pop_back();
    }
}

}  // namespace

std::vector<Monomial> sorted_spikes(std::uint64_t n, std::size_t k)
{
    std::vector<Monomial> out;
    if (k == 0 || k > kMaxVars || n > std::numeric_limits<Exponent>::max())
        return out;
    std::vector<Exponent> parts;
    enumerate_spikes(n, static_cast<unsigned>(std::bit_width(n + 1) - 1), k, parts, out);
    return out;
}

std::optional<Monomial> minimal_spike(std::uint64_t n, std::size_t k)
{
    for (const Monomial& m : sorted_spikes(n, k)) {
        std::size_t r = 0;
        while (r < m.vars() && m[r] != 0)
            ++r;
        bool ok = true;
        // strictly decreasing except that the last two parts may coincide
        for (std::size_t j = 0; j + 2 < r; ++j)
            if (m[j] <= m[j + 1])
                ok = false;
        if (ok)
            return m;
    }
    return std::nullopt;
}

bool in_lower_tau_span(const Monomial& m, const TauSequence& t)
{
    if (m.degree() != t.degree())
        throw DegreeError("degree incompatible with τ: monomial " + to_string(m) + " has degree " +
                          std::to_string(m.degree()) + " but " + to_string(t) + " encodes degree " +
                          std::to_string(t.degree()));
    return tau(m) < t;
}

std::uint64_t monomial_count(std::size_t k, std::uint64_t n) noexcept
{
    if (k == 0)
        return n == 0 ? 1 : 0;
    // C(n + k - 1, k - 1) built incrementally; each prefix product is itself a binomial
    __extension__ using Wide = unsigned __int128;
    Wide c = 1;
    for (std::uint64_t i = 1; i < k; ++i) {
        c = c * (n + i) / i;
        if (c > std::numeric_limits<std::uint64_t>::max())
            return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(c);
}

namespace {

void enumerate_monomials(Monomial& m, std::size_t j, std::uint64_t remaining, std::vector<Monomial>& out)
{
    if (j + 1 == m.vars()) {
        m.set(j, static_cast<Exponent>(remaining));
        out.push_back(m);
        return;
    }
    for (std::uint64_t a = 0; a <= remaining; ++a) {
        m.set(j, static_cast<Exponent>(a));
        enumerate_monomials(m, j + 1, remaining - a, out);
    }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t k, std::uint64_t n)
{
    if (k == 0)
        throw DegreeError("monomials need at least one variable");
    if (n > std::numeric_limits<Exponent>::max())
        throw DegreeError("degree exceeds the exponent range");
    std::vector<Monomial> out;
    out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(monomial_count(k, n), 1U << 24)));
    Monomial m(k);
    enumerate_monomials(m, 0, n, out);
    return out;
}

std::string to_string(const Monomial& m)
{
    std::string s = "(";
    for (std::size_t j = 0; j < m.vars(); ++j) {
        if (j != 0)
            s += ',';
        s += std::to_string(m[j]);
    }
    s += ')';
    return s;
}

std::string to_string(const TauSequence& t)
{
    std::string s = "(";
    if (t.size() == 0)
        s += '0';
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i != 0)
            s += ';';
        s += std::to_string(t.entries()[i]);
    }
    s += ')';
    return s;
}

std::string to_string(const EpsilonMatrix& matrix)
{
    std::string s = "[";
    for (std::size_t i = 0; i < matrix.row_count(); ++i) {
        if (i != 0)
            s += ',';
        s += '(';
        for (std::size_t j = 0; j < matrix.vars(); ++j) {
            if (j != 0)
                s += ',';
            s += char('0' + matrix.entry(i, j));
        }
        s += ')';
    }
    s += ']';
    return s;
}

Monomial parse_monomial(std::string_view text)
{
    detail::TextScanner sc(text);
    Monomial m = sc.monomial();
    sc.skip_space();
    if (!sc.done())
        sc.fail("unexpected trailing input");
    return m;
}

TauSequence parse_tau(std::string_view text)
{
    detail::TextScanner sc(text);
    sc.skip_space();
    const bool paren = sc.accept('(');
    TauSequence t = sc.tau_body();
    if (paren)
        sc.expect(')');
    sc.skip_space();
    if (!sc.done())
        sc.fail("unexpected trailing input");
    return t;
}

}  // namespace hitcalc
