#pragma once

#include "hitcalc/monomial.hpp"
#include "hitcalc/polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace hitcalc {

inline constexpr std::size_t kDefaultColumnCap = 150'000;

/// The column limit: HITCALC_COLUMN_CAP when set to a positive integer, else kDefaultColumnCap.
std::size_t default_column_cap();

using Column = std::uint32_t;

/// Homogeneous monomials of one (k, degree), sorted ascending in the admissibility order,
/// with a reverse index.
class ColumnUniverse
{
public:
    ColumnUniverse() = default;

    /// Takes any set of distinct monomials sharing arity and degree, and sorts it.
    explicit ColumnUniverse(std::vector<Monomial> monomials);

    /// Every monomial of degree n in k variables. Throws CapacityError above `cap` columns.
    static ColumnUniverse of_degree(std::size_t k, std::uint64_t n, std::size_t cap = default_column_cap());

    std::size_t size() const noexcept { return columns_.size(); }
    std::size_t vars() const noexcept { return k_; }
    std::uint64_t degree() const noexcept { return degree_; }

    const Monomial& monomial(Column c) const { return columns_[c]; }
    std::span<const Monomial> monomials() const noexcept { return columns_; }

    std::optional<Column> find(const Monomial& m) const;

    /// Column of m; throws DegreeError("degree/arity mismatch") when m is not in the universe.
    Column column_of(const Monomial& m) const;

private:
    std::vector<Monomial> columns_;
    std::unordered_map<Monomial, Column, MonomialHash> index_;
    std::size_t k_ = 0;
    std::uint64_t degree_ = 0;
};

/// Fixed-width bit vector packed into 64-bit words.
class BitRow
{
public:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    BitRow() = default;
    explicit BitRow(std::size_t size) : words_((size + 63) / 64, 0), size_(size) {}

    std::size_t size() const noexcept { return size_; }
    bool test(std::size_t c) const noexcept { return (words_[c >> 6] >> (c & 63)) & 1U; }
    void set(std::size_t c) noexcept { words_[c >> 6] |= std::uint64_t(1) << (c & 63); }
    void reset(std::size_t c) noexcept { words_[c >> 6] &= ~(std::uint64_t(1) << (c & 63)); }
    void flip(std::size_t c) noexcept { words_[c >> 6] ^= std::uint64_t(1) << (c & 63); }

    bool is_zero() const noexcept;
    std::size_t count() const noexcept;

    /// Highest set position, or npos for the zero row.
    std::size_t highest() const noexcept;

    /// Set positions in increasing order.
    std::vector<std::size_t> ones() const;

    BitRow& operator^=(const BitRow& other) noexcept;
    friend BitRow operator^(BitRow a, const BitRow& b) noexcept
    {
        a ^= b;
        return a;
    }
    friend bool operator==(const BitRow&, const BitRow&) = default;

    std::span<const std::uint64_t> words() const noexcept { return words_; }

private:
    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;
};

/// Characteristic vector of f's support. Throws DegreeError on terms outside the universe.
BitRow encode(const Polynomial& f, const ColumnUniverse& universe);

/// Inverse of encode.
Polynomial decode(const BitRow& row, const ColumnUniverse& universe);

struct InsertResult
{
    bool added = false;
    /// Pivot column of the new row when added.
    std::size_t pivot = BitRow::npos;
};

/// Fully reduced row echelon form over GF(2). A row's pivot is its highest set column; every
/// pivot column is set in exactly its own row. Dense storage: meant for universes up to a few
/// thousand columns.
class EchelonBasis
{
public:
    EchelonBasis() = default;
    explicit EchelonBasis(std::size_t columns) : pivot_row_(columns, kNone), columns_(columns) {}

    std::size_t columns() const noexcept { return columns_; }
    std::size_t rank() const noexcept { return rows_.size(); }

    /// Reduces `row` against the basis; if something survives it becomes a new row and is
    /// back-substituted into the earlier rows.
    InsertResult insert(BitRow row);

    bool contains(const BitRow& row) const;

    /// The remainder of `row` after clearing every pivot column.
    BitRow reduce(BitRow row) const;

    bool is_pivot(std::size_t c) const noexcept { return pivot_row_[c] != kNone; }

    /// Pivot columns in increasing order.
    std::vector<std::size_t> pivot_columns() const;

    /// The stored row whose pivot is c.
    const BitRow& row_of(std::size_t c) const { return rows_[pivot_row_[c]]; }
    const std::vector<BitRow>& rows() const noexcept { return rows_; }

private:
    static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

    std::vector<BitRow> rows_;
    std::vector<std::uint32_t> pivot_row_;
    std::size_t columns_ = 0;
};

/// Semi-reduced echelon form for large, sparse row sets: rows are stored as column lists with
/// their pivot (highest column) first, and reduction runs in a dense accumulator. Pivot columns
/// coincide with those of EchelonBasis for the same row space. Not fully reduced, so the stored
/// rows depend on insertion order; rank and pivot columns do not.
class SparseEchelon
{
public:
    SparseEchelon() = default;
    explicit SparseEchelon(std::size_t columns);

    std::size_t columns() const noexcept { return columns_; }
    std::size_t rank() const noexcept { return rows_.size(); }

    /// Inserts the sum of the given columns; a column listed twice cancels.
    InsertResult insert(std::span<const Column> row);

    bool contains(std::span<const Column> row) const;

    bool is_pivot(std::size_t c) const noexcept { return pivot_row_[c] != kNone; }

    /// Pivot columns in increasing order.
    std::vector<std::size_t> pivot_columns() const;

    /// Stored row for pivot c, columns in decreasing order.
    std::span<const Column> row_of(std::size_t c) const { return rows_[pivot_row_[c]]; }

private:
    static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

    // Reduces the accumulated row in `acc`; returns the surviving columns in decreasing order
    // (empty when the row lies in the span). Leaves `acc` zeroed.
    std::vector<Column> reduce(std::vector<std::uint64_t>& acc, std::span<const Column> row) const;

    std::vector<std::vector<Column>> rows_;
    std::vector<std::uint32_t> pivot_row_;
    std::vector<std::uint64_t> scratch_;
    std::size_t columns_ = 0;
};

}  // namespace hitcalc
