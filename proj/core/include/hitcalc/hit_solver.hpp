#pragma once

#include "hitcalc/gf2.hpp"
#include "hitcalc/monomial.hpp"
#include "hitcalc/polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace hitcalc {

struct SolverOptions
{
    std::size_t column_cap = default_column_cap();

    /// Seeds the elimination with unit rows for monomials the Wood and Singer criteria
    /// already declare hit. Off by default so that the criteria stay independently testable.
    bool accelerated = false;
};

/// Which summand of P_k to work in: everything, Q_k (some exponent zero) or R_k (all positive).
enum class Part
{
    all,
    q,
    r,
};

/// Cohit data for one (k, degree).
struct HitReport
{
    std::size_t vars = 0;
    std::uint64_t degree = 0;
    std::size_t monomials = 0;
    std::size_t hit_rank = 0;
    std::size_t dimension = 0;
    /// Admissible monomials ascending in the admissibility order.
    std::vector<Monomial> admissible;

    friend bool operator==(const HitReport&, const HitReport&) = default;
};

/// The hit subspace (A^+ P_k)_n as an echelon form over the degree-n monomials. Pivot columns
/// are exactly the inadmissible monomials; the remaining columns form the admissible basis.
class HitSpace
{
public:
    static HitSpace build(std::size_t k, std::uint64_t n, const SolverOptions& options = {}, Part part = Part::all);

    std::size_t vars() const noexcept { return k_; }
    std::uint64_t degree() const noexcept { return n_; }
    Part part() const noexcept { return part_; }

    const ColumnUniverse& universe() const noexcept { return universe_; }
    const SparseEchelon& echelon() const noexcept { return echelon_; }

    std::size_t hit_rank() const noexcept { return echelon_.rank(); }
    std::size_t dimension() const noexcept { return universe_.size() - echelon_.rank(); }

    /// f must be homogeneous of this degree with every term in the universe.
    bool is_hit(const Polynomial& f) const;

    /// A non-pivot column; throws DegreeError when m is outside the universe.
    bool is_admissible(const Monomial& m) const;

    std::vector<Monomial> admissible() const;
    HitReport report() const;

    /// Column list of f in this universe (throws DegreeError for foreign terms).
    std::vector<Column> columns_of(const Polynomial& f) const;

private:
    ColumnUniverse universe_;
    SparseEchelon echelon_;
    std::size_t k_ = 0;
    std::uint64_t n_ = 0;
    Part part_ = Part::all;
};

/// Shared, lazily built hit spaces keyed by (k, n, part). Safe for concurrent use; each key is
/// built at most once.
class HitSpaceCache
{
public:
    explicit HitSpaceCache(SolverOptions options = {}) : options_(options) {}

    std::shared_ptr<const HitSpace> get(std::size_t k, std::uint64_t n, Part part = Part::all);
    const SolverOptions& options() const noexcept { return options_; }

private:
    struct Slot
    {
        std::once_flag once;
        std::shared_ptr<const HitSpace> space;
    };

    SolverOptions options_;
    std::mutex mutex_;
    std::map<std::tuple<std::size_t, std::uint64_t, Part>, std::shared_ptr<Slot>> slots_;
};

/// Dimension and admissible basis of (F_2 (x)_A P_k)_n. n = 0 gives the unit monomial.
HitReport cohit(std::size_t k, std::uint64_t n, const SolverOptions& options = {});

/// Membership of a homogeneous polynomial in A^+ P_k. The zero polynomial is hit.
bool is_hit(const Polynomial& f, const SolverOptions& options = {});

enum class Verdict
{
    hit,
    unknown,
};

/// beta(deg x) > tau_1(x) implies x is hit.
Verdict wood_filter(const Monomial& x);

/// With alpha(n + k) <= k and z the minimal spike of degree n: tau(x) < tau(z) implies x is hit.
Verdict singer_filter(const Monomial& x);

/// Some row window of x's epsilon matrix equals `delta` (Delta |> x).
bool delta_matches(const EpsilonMatrix& delta, const Monomial& x);

/// Squares used when testing a matrix with s rows: every 0 < i < 2^s, or only the powers of two
/// below 2^s. Both span the same subspace.
enum class SquareSet
{
    powers_of_two,
    all,
};

/// Whether the monomial x of an s-row matrix equals a sum of smaller monomials plus a sum of
/// Sq^i(z_i) with 0 < i < 2^s. Decided exactly by elimination restricted to columns >= x.
bool strictly_inadmissible(const EpsilonMatrix& delta, const SolverOptions& options = {},
                           SquareSet squares = SquareSet::powers_of_two);

/// True when some catalog matrix matches x. Catalog entries are assumed strictly inadmissible.
bool catalog_inadmissible(const Monomial& x, const std::vector<EpsilonMatrix>& catalog);

/// Both clauses of the weight-descent property of admissible monomials: zeros in tau are
/// terminal, and entries below k never precede an entry equal to k.
bool weight_descent_holds(const Monomial& x);

struct QrSplit
{
    std::size_t q_dim = 0;
    std::size_t r_dim = 0;
};

QrSplit qr_split(std::size_t k, std::uint64_t n, const SolverOptions& options = {},
                 HitSpaceCache* cache = nullptr);

enum class KamekoStatus
{
    not_applicable,
    pass,
    fail,
};

struct KamekoResult
{
    KamekoStatus status = KamekoStatus::not_applicable;
    std::uint64_t lower_degree = 0;
    std::size_t upper_dimension = 0;
    std::size_t lower_dimension = 0;
    /// Rank of the images of the admissible basis in the lower cohit space.
    std::size_t image_rank = 0;
};

/// When beta(n) = k: checks that the degree-n and (n-k)/2 cohit spaces have equal dimension
/// and that the down map sends the admissible basis onto a basis below. Throws DegreeError
/// when n - k is odd.
KamekoResult kameko_check(std::size_t k, std::uint64_t n, const SolverOptions& options = {},
                          HitSpaceCache* cache = nullptr);

std::string to_string(KamekoStatus status);

/// {"k":..,"degree":..,"monomials":..,"hit_rank":..,"dimension":..,"admissible":[[..],..]}
std::string to_json(const HitReport& report);
HitReport hit_report_from_json(std::string_view text);

}  // namespace hitcalc
