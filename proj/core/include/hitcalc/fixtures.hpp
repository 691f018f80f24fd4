#pragma once

#include "hitcalc/hit_solver.hpp"
#include "hitcalc/monomial.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hitcalc {

enum class Tier
{
    required,
    optional,
};

/// Degree family parameters; absent ones are blank in the CSV.
struct FamilyParams
{
    std::optional<unsigned> s;
    std::optional<unsigned> t;
    std::optional<unsigned> u;
};

/// Evaluates a degree family such as "2^{s+t+1}+2^{s+1}-3": a signed sum of integers and
/// powers 2^e, where e is a digit, a parameter letter, or a braced sum of both. Every parameter
/// the formula mentions must be present and every present parameter must be used.
std::uint64_t evaluate_family(std::string_view family, const FamilyParams& params);

struct TableRow
{
    std::string family;
    FamilyParams params;
    std::uint64_t degree = 0;
    std::size_t expected = 0;
    Tier tier = Tier::required;
    std::size_t line = 0;
};

/// CSV with header `family,s,t,u,degree,expected_dim,tier`. The degree column is checked
/// against the family formula.
std::vector<TableRow> parse_table(std::string_view csv);
std::vector<TableRow> load_table(const std::filesystem::path& path);

enum class TierSelection
{
    required,
    all,
};

enum class RowStatus
{
    pass,
    fail,
    skipped,
};

struct TableRowResult
{
    TableRow row;
    RowStatus status = RowStatus::skipped;
    std::size_t computed = 0;
    std::string note;
};

struct TableReport
{
    std::vector<TableRowResult> rows;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
};

/// Compares cohit dimensions in k = 4 variables with the expected column. Rows outside the
/// tier selection are left out; rows that exceed the column cap are reported as skipped.
TableReport verify_table(const std::vector<TableRow>& rows, TierSelection tier, HitSpaceCache& cache);

struct BasisFixture
{
    std::size_t vars = 0;
    std::uint64_t degree = 0;
    std::vector<Monomial> expected;
};

/// JSON `{"k":4,"degree":5,"expected":[[0,1,1,3],...]}`; monomials must be distinct and of the
/// stated degree and arity.
BasisFixture parse_basis(std::string_view json);
BasisFixture load_basis(const std::filesystem::path& path);

struct BasisDiff
{
    /// Expected but not computed.
    std::vector<Monomial> missing;
    /// Computed but not expected.
    std::vector<Monomial> extra;

    bool match() const noexcept { return missing.empty() && extra.empty(); }
};

BasisDiff verify_basis(const BasisFixture& fixture, HitSpaceCache& cache);

struct CatalogEntry
{
    std::string name;
    EpsilonMatrix matrix;
    /// Monomial written next to the matrix, already checked against the rows.
    std::optional<Monomial> stated;
    std::size_t line = 0;
};

/// One matrix per line, `NAME: row row ... [= (a1,...,ak)]`, rows as 0/1 strings with x1 first.
/// '#' starts a comment line. A stated monomial that disagrees with the rows is a ParseError.
std::vector<CatalogEntry> parse_matrix_catalog(std::string_view text);
std::vector<CatalogEntry> load_matrix_catalog(const std::filesystem::path& path);

}  // namespace hitcalc
