#include "hitcalc/hit_solver.hpp"

#include "hitcalc/error.hpp"
#include "hitcalc/steenrod.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>

namespace hitcalc {

namespace {

bool in_part(const Monomial& m, Part part)
{
    switch (part) {
    case Part::all:
        return true;
    case Part::q:
        return !m.all_positive();
    case Part::r:
        return m.all_positive();
    }
    return true;
}

std::vector<Monomial> part_monomials(std::size_t k, std::uint64_t n, Part part)
{
    std::vector<Monomial> all = monomials_of_degree(k, n);
    if (part == Part::all)
        return all;
    std::erase_if(all, [part](const Monomial& m) { return !in_part(m, part); });
    return all;
}

}  // namespace

HitSpace HitSpace::build(std::size_t k, std::uint64_t n, const SolverOptions& options, Part part)
{
    if (k == 0 || k > kMaxVars)
        throw DegreeError("number of variables must be between 1 and " + std::to_string(kMaxVars));
    HitSpace space;
    space.k_ = k;
    space.n_ = n;
    space.part_ = part;
    const std::uint64_t count = monomial_count(k, n);
    if (count > options.column_cap)
        throw CapacityError(static_cast<std::size_t>(std::min<std::uint64_t>(count, SIZE_MAX)), options.column_cap);
    space.universe_ = ColumnUniverse(part_monomials(k, n, part));
    space.echelon_ = SparseEchelon(space.universe_.size());

    if (options.accelerated) {
        for (Column c = 0; c < space.universe_.size(); ++c) {
            const Monomial& m = space.universe_.monomial(c);
            if (wood_filter(m) == Verdict::hit || singer_filter(m) == Verdict::hit) {
                const Column unit[] = {c};
                space.echelon_.insert(unit);
            }
        }
    }

    std::vector<Column> row;
    for (std::uint64_t s : generator_squares(n)) {
        for (const Monomial& source : monomials_of_degree(k, n - s)) {
            if (!in_part(source, part))
                continue;
            row.clear();
            for_each_sq_term(s, source, [&](const Monomial& t) { row.push_back(space.universe_.column_of(t)); });
            space.echelon_.insert(row);
        }
    }
    return space;
}

std::vector<Column> HitSpace::columns_of(const Polynomial& f) const
{
    std::vector<Column> cols;
    cols.reserve(f.size());
    for (const Monomial& m : f.terms())
        cols.push_back(universe_.column_of(m));
    return cols;
}

bool HitSpace::is_hit(const Polynomial& f) const
{
    return echelon_.contains(columns_of(f));
}

bool HitSpace::is_admissible(const Monomial& m) const
{
    return !echelon_.is_pivot(universe_.column_of(m));
}

std::vector<Monomial> HitSpace::admissible() const
{
    std::vector<Monomial> out;
    out.reserve(dimension());
    for (Column c = 0; c < universe_.size(); ++c)
        if (!echelon_.is_pivot(c))
            out.push_back(universe_.monomial(c));
    return out;
}

HitReport HitSpace::report() const
{
    return {k_, n_, universe_.size(), hit_rank(), dimension(), admissible()};
}

std::shared_ptr<const HitSpace> HitSpaceCache::get(std::size_t k, std::uint64_t n, Part part)
{
    std::shared_ptr<Slot> slot;
    {
        std::lock_guard lock(mutex_);
        auto& s = slots_[{k, n, part}];
        if (!s)
            s = std::make_shared<Slot>();
        slot = s;
    }
    std::call_once(slot->once, [&] { slot->space = std::make_shared<const HitSpace>(HitSpace::build(k, n, options_, part)); });
    return slot->space;
}

HitReport cohit(std::size_t k, std::uint64_t n, const SolverOptions& options)
{
    return HitSpace::build(k, n, options).report();
}

bool is_hit(const Polynomial& f, const SolverOptions& options)
{
    if (f.is_zero())
        return true;
    const auto n = f.degree();
    if (!n)
        throw DegreeError("is_hit needs a homogeneous polynomial: " + to_string(f));
    return HitSpace::build(f.terms().front().vars(), *n, options).is_hit(f);
}

Verdict wood_filter(const Monomial& x)
{
    return beta(x.degree()) > tau(x)(1) ? Verdict::hit : Verdict::unknown;
}

Verdict singer_filter(const Monomial& x)
{
    const std::uint64_t n = x.degree();
    const std::size_t k = x.vars();
    if (n == 0 || alpha(n + k) > k)
        return Verdict::unknown;
    const auto z = minimal_spike(n, k);
    if (!z)
        return Verdict::unknown;
    return tau(x) < tau(*z) ? Verdict::hit : Verdict::unknown;
}

bool delta_matches(const EpsilonMatrix& delta, const Monomial& x)
{
    if (delta.vars() != x.vars())
        return false;
    const EpsilonMatrix eps = epsilon_matrix(x);
    const auto& rows = eps.rows();
    const auto& window = delta.rows();
    auto row_at = [&](std::size_t i) -> EpsilonMatrix::Row { return i < rows.size() ? rows[i] : 0U; };
    // windows that start past the last nonzero row only see zeros
    for (std::size_t shift = 0; shift <= rows.size(); ++shift) {
        bool match = true;
        for (std::size_t i = 0; i < window.size() && match; ++i)
            match = window[i] == row_at(shift + i);
        if (match)
            return true;
    }
    return false;
}

bool strictly_inadmissible(const EpsilonMatrix& delta, const SolverOptions& options, SquareSet squares)
{
    const Monomial x = monomial_of_matrix(delta);
    const std::uint64_t d = x.degree();
    const std::size_t k = x.vars();
    if (d == 0)
        return false;
    const std::uint64_t count = monomial_count(k, d);
    if (count > options.column_cap)
        throw CapacityError(static_cast<std::size_t>(std::min<std::uint64_t>(count, SIZE_MAX)), options.column_cap);

    // Smaller monomials are free, so only the coordinates at or above x matter: x qualifies
    // iff the unit vector at x lies in the projection of the square images onto them.
    std::vector<Monomial> upper = monomials_of_degree(k, d);
    std::erase_if(upper, [&](const Monomial& y) { return compare(y, x) < 0; });
    const ColumnUniverse universe(std::move(upper));
    EchelonBasis basis(universe.size());

    const std::uint64_t limit = delta.row_count() >= 63 ? d : std::min<std::uint64_t>(d, (std::uint64_t(1) << delta.row_count()) - 1);
    std::vector<std::uint64_t> indices;
    for (std::uint64_t i = 1; i <= limit; ++i)
        if (squares == SquareSet::all || std::has_single_bit(i))
            indices.push_back(i);

    for (std::uint64_t i : indices) {
        for (const Monomial& z : monomials_of_degree(k, d - i)) {
            BitRow row(universe.size());
            bool any = false;
            for_each_sq_term(i, z, [&](const Monomial& t) {
                if (auto c = universe.find(t)) {
                    row.flip(*c);
                    any = true;
                }
            });
            if (any)
                basis.insert(std::move(row));
        }
    }
    BitRow target(universe.size());
    target.set(universe.column_of(x));
    return basis.contains(target);
}

bool catalog_inadmissible(const Monomial& x, const std::vector<EpsilonMatrix>& catalog)
{
    return std::any_of(catalog.begin(), catalog.end(), [&](const EpsilonMatrix& d) { return delta_matches(d, x); });
}

bool weight_descent_holds(const Monomial& x)
{
    const TauSequence tx = tau(x);
    const auto& t = tx.entries();
    const unsigned k = static_cast<unsigned>(x.vars());
    // trailing zeros are trimmed, so an interior zero is the only possible violation
    if (std::find(t.begin(), t.end(), 0U) != t.end())
        return false;
    bool below_k = false;
    for (unsigned v : t) {
        if (v < k)
            below_k = true;
        else if (below_k)
            return false;
    }
    return true;
}

QrSplit qr_split(std::size_t k, std::uint64_t n, const SolverOptions& options, HitSpaceCache* cache)
{
    auto dim = [&](Part part) {
        if (cache)
            return cache->get(k, n, part)->dimension();
        return HitSpace::build(k, n, options, part).dimension();
    };
    return {dim(Part::q), dim(Part::r)};
}

KamekoResult kameko_check(std::size_t k, std::uint64_t n, const SolverOptions& options, HitSpaceCache* cache)
{
    KamekoResult result;
    if (beta(n) != k)
        return result;
    if (n < k || (n - k) % 2 != 0)
        throw DegreeError("Kameko's down map needs n - k even and non-negative, got n=" + std::to_string(n) +
                          ", k=" + std::to_string(k));
    result.lower_degree = (n - k) / 2;
    auto get = [&](std::uint64_t degree) {
        if (cache)
            return cache->get(k, degree);
        return std::shared_ptr<const HitSpace>(std::make_shared<HitSpace>(HitSpace::build(k, degree, options)));
    };
    const auto upper = get(n);
    const auto lower = get(result.lower_degree);
    result.upper_dimension = upper->dimension();
    result.lower_dimension = lower->dimension();

    SparseEchelon images = lower->echelon();
    bool all_odd = true;
    for (const Monomial& a : upper->admissible()) {
        const auto y = kameko_down(a);
        if (!y) {
            all_odd = false;
            continue;
        }
        const Column c[] = {lower->universe().column_of(*y)};
        if (images.insert(c).added)
            ++result.image_rank;
    }
    const bool ok = all_odd && result.upper_dimension == result.lower_dimension &&
                    result.image_rank == result.lower_dimension;
    result.status = ok ? KamekoStatus::pass : KamekoStatus::fail;
    return result;
}

std::string to_string(KamekoStatus status)
{
    switch (status) {
    case KamekoStatus::not_applicable:
        return "not_applicable";
    case KamekoStatus::pass:
        return "pass";
    case KamekoStatus::fail:
        return "fail";
    }
    return "?";
}

std::string to_json(const HitReport& report)
{
    nlohmann::ordered_json j;
    j["k"] = report.vars;
    j["degree"] = report.degree;
    j["monomials"] = report.monomials;
    j["hit_rank"] = report.hit_rank;
    j["dimension"] = report.dimension;
    auto& list = j["admissible"] = nlohmann::ordered_json::array();
    for (const Monomial& m : report.admissible)
        list.push_back(std::vector<Exponent>(m.exponents().begin(), m.exponents().end()));
    return j.dump();
}

HitReport hit_report_from_json(std::string_view text)
{
    try {
        const auto j = nlohmann::json::parse(text);
        HitReport r;
        r.vars = j.at("k").get<std::size_t>();
        r.degree = j.at("degree").get<std::uint64_t>();
        r.monomials = j.at("monomials").get<std::size_t>();
        r.hit_rank = j.at("hit_rank").get<std::size_t>();
        r.dimension = j.at("dimension").get<std::size_t>();
        for (const auto& m : j.at("admissible")) {
            const auto exps = m.get<std::vector<Exponent>>();
            if (exps.size() != r.vars)
                throw ParseError("admissible monomial has the wrong number of exponents", 0, 0);
            r.admissible.emplace_back(std::span<const Exponent>(exps));
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed hit report: ") + e.what(), 0, 0);
    }
}

}  // namespace hitcalc
