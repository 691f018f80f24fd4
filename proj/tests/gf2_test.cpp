#include "hitcalc/error.hpp"
#include "hitcalc/gf2.hpp"

#include "support/oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace hitcalc;

namespace {

BitRow bits(std::string_view s)
{
    // leftmost character is the highest column
    BitRow r(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] == '1')
            r.set(s.size() - 1 - i);
    return r;
}

BitRow random_row(std::mt19937_64& rng, std::size_t cols, double density)
{
    std::bernoulli_distribution on(density);
    BitRow r(cols);
    for (std::size_t c = 0; c < cols; ++c)
        if (on(rng))
            r.set(c);
    return r;
}

oracle::Dense dense(const std::vector<BitRow>& rows, std::size_t cols)
{
    oracle::Dense d;
    for (const BitRow& r : rows) {
        std::vector<std::uint8_t> v(cols);
        for (std::size_t c = 0; c < cols; ++c)
            v[c] = r.test(c);
        d.push_back(std::move(v));
    }
    return d;
}

std::vector<Column> as_columns(const BitRow& r)
{
    std::vector<Column> out;
    for (std::size_t c : r.ones())
        out.push_back(static_cast<Column>(c));
    return out;
}

}  // namespace

TEST(BitRow, Basics)
{
    BitRow r(130);
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(r.highest(), BitRow::npos);
    r.set(0);
    r.set(64);
    r.set(129);
    EXPECT_EQ(r.count(), 3U);
    EXPECT_EQ(r.highest(), 129U);
    EXPECT_EQ(r.ones(), (std::vector<std::size_t>{0, 64, 129}));
    r.flip(129);
    EXPECT_EQ(r.highest(), 64U);
    r.reset(64);
    EXPECT_EQ(r ^ r, BitRow(130));
}

TEST(ColumnUniverse, SortedByOrder)
{
    const ColumnUniverse u = ColumnUniverse::of_degree(4, 7);
    ASSERT_EQ(u.size(), 120U);
    for (Column c = 0; c + 1 < u.size(); ++c)
        EXPECT_TRUE(compare(u.monomial(c), u.monomial(c + 1)) < 0);
    for (Column c = 0; c < u.size(); ++c)
        EXPECT_EQ(u.column_of(u.monomial(c)), c);
    EXPECT_FALSE(u.find(Monomial{1, 1, 1, 1}).has_value());
    EXPECT_THROW(u.column_of(Monomial{1, 1, 1, 1}), DegreeError);
    EXPECT_THROW(u.column_of(Monomial{7, 0, 0}), DegreeError);
}

TEST(ColumnUniverse, CapacityGuard)
{
    EXPECT_THROW(ColumnUniverse::of_degree(4, 20, 100), CapacityError);
    EXPECT_NO_THROW(ColumnUniverse::of_degree(4, 20, 1771));
}

TEST(Encode, Examples)
{
    const ColumnUniverse u = ColumnUniverse::of_degree(3, 4);
    EXPECT_TRUE(encode(Polynomial(), u).is_zero());
    const BitRow first = encode(Polynomial(u.monomial(0)), u);
    EXPECT_EQ(first.ones(), std::vector<std::size_t>{0});
    const Polynomial f = parse_polynomial("(1,1,2)+(4,0,0)");
    EXPECT_TRUE(encode(f + f, u).is_zero());
    EXPECT_EQ(decode(encode(f, u), u), f);
    EXPECT_THROW(encode(parse_polynomial("(1,1,1)"), u), DegreeError);
}

TEST(EchelonBasis, Examples)
{
    EchelonBasis b(4);
    EXPECT_EQ(b.rank(), 0U);
    EXPECT_FALSE(b.contains(bits("1000")));
    const auto r1 = b.insert(bits("1100"));
    const auto r2 = b.insert(bits("0110"));
    EXPECT_TRUE(r1.added);
    EXPECT_TRUE(r2.added);
    EXPECT_EQ(b.rank(), 2U);
    EXPECT_EQ(b.pivot_columns(), (std::vector<std::size_t>{2, 3}));
    EXPECT_FALSE(b.insert(bits("1010")).added);
    EXPECT_FALSE(b.insert(bits("0000")).added);
    EXPECT_EQ(b.rank(), 2U);
    EXPECT_TRUE(b.contains(bits("1100")));
    EXPECT_TRUE(b.contains(bits("1100") ^ bits("0110")));
    EXPECT_FALSE(b.contains(bits("0001")));
}

TEST(EchelonBasis, FullyReduced)
{
    std::mt19937_64 rng(41);
    EchelonBasis b(90);
    for (int i = 0; i < 60; ++i)
        b.insert(random_row(rng, 90, 0.2));
    for (std::size_t p : b.pivot_columns()) {
        const BitRow& row = b.row_of(p);
        EXPECT_EQ(row.highest(), p);
        for (std::size_t q : b.pivot_columns())
            if (q != p)
                EXPECT_FALSE(row.test(q));
    }
}

TEST(EchelonBasis, RankAgainstDenseOracle)
{
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = 1 + rng() % 200, cols = 1 + rng() % 200;
        const double density = trial % 3 == 0 ? 0.02 : 0.3;
        std::vector<BitRow> m;
        for (std::size_t i = 0; i < rows; ++i)
            m.push_back(random_row(rng, cols, density));
        EchelonBasis b(cols);
        for (const BitRow& r : m)
            b.insert(r);
        ASSERT_EQ(b.rank(), oracle::rank(dense(m, cols))) << rows << "x" << cols;
    }
}

TEST(EchelonBasis, ContainsMatchesSolvability)
{
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t cols = 20 + rng() % 60;
        std::vector<BitRow> m;
        for (std::size_t i = 0; i < cols / 2; ++i)
            m.push_back(random_row(rng, cols, 0.15));
        EchelonBasis b(cols);
        for (const BitRow& r : m)
            b.insert(r);
        const std::size_t base = oracle::rank(dense(m, cols));
        for (int q = 0; q < 10; ++q) {
            BitRow target = random_row(rng, cols, 0.1);
            if (q % 2 == 0)  // force some members
                for (const BitRow& r : m)
                    if (rng() % 2)
                        target ^= r;
            auto with = m;
            with.push_back(target);
            const bool solvable = oracle::rank(dense(with, cols)) == base;
            EXPECT_EQ(b.contains(target), solvable);
            EXPECT_EQ(b.reduce(target).is_zero(), solvable);
        }
    }
}

TEST(EchelonBasis, DeterministicUnderPermutation)
{
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t cols = 50 + rng() % 100;
        std::vector<BitRow> m;
        for (std::size_t i = 0; i < 80; ++i)
            m.push_back(random_row(rng, cols, 0.05));
        EchelonBasis a(cols);
        for (const BitRow& r : m)
            a.insert(r);
        std::shuffle(m.begin(), m.end(), rng);
        EchelonBasis b(cols);
        for (const BitRow& r : m)
            b.insert(r);
        ASSERT_EQ(a.rank(), b.rank());
        ASSERT_EQ(a.pivot_columns(), b.pivot_columns());
        // reduced echelon form is unique for a fixed pivot convention
        for (std::size_t p : a.pivot_columns())
            EXPECT_EQ(a.row_of(p), b.row_of(p));
    }
}

TEST(SparseEchelon, MatchesDensePivots)
{
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t cols = 10 + rng() % 300;
        EchelonBasis dense_basis(cols);
        SparseEchelon sparse(cols);
        std::vector<BitRow> rows;
        for (std::size_t i = 0; i < cols; ++i) {
            const BitRow r = random_row(rng, cols, 4.0 / double(cols));
            rows.push_back(r);
            const auto d = dense_basis.insert(r);
            const auto cs = as_columns(r);
            const auto s = sparse.insert(cs);
            ASSERT_EQ(d.added, s.added);
            if (d.added)
                ASSERT_EQ(d.pivot, s.pivot);
        }
        EXPECT_EQ(sparse.rank(), dense_basis.rank());
        EXPECT_EQ(sparse.pivot_columns(), dense_basis.pivot_columns());
        for (int q = 0; q < 20; ++q) {
            BitRow t = random_row(rng, cols, 0.05);
            if (q % 2 == 0)
                t ^= rows[rng() % rows.size()];
            EXPECT_EQ(sparse.contains(as_columns(t)), dense_basis.contains(t));
        }
        // row order does not matter for pivots
        std::shuffle(rows.begin(), rows.end(), rng);
        SparseEchelon again(cols);
        for (const BitRow& r : rows)
            again.insert(as_columns(r));
        EXPECT_EQ(again.pivot_columns(), sparse.pivot_columns());
    }
}

TEST(SparseEchelon, RepeatedColumnsCancel)
{
    SparseEchelon s(8);
    const Column twice[] = {3, 5, 3};
    const auto r = s.insert(twice);
    EXPECT_TRUE(r.added);
    EXPECT_EQ(r.pivot, 5U);
    const Column five[] = {5};
    EXPECT_TRUE(s.contains(five));
    const Column none[] = {2, 2};
    EXPECT_FALSE(s.insert(none).added);
}

TEST(ColumnCap, EnvironmentOverride)
{
    ::setenv("HITCALC_COLUMN_CAP", "1234", 1);
    EXPECT_EQ(default_column_cap(), 1234U);
    ::setenv("HITCALC_COLUMN_CAP", "junk", 1);
    EXPECT_EQ(default_column_cap(), kDefaultColumnCap);
    ::unsetenv("HITCALC_COLUMN_CAP");
    EXPECT_EQ(default_column_cap(), kDefaultColumnCap);
}
