#pragma once

#include "hitcalc/monomial.hpp"
#include "hitcalc/polynomial.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace hitcalc {

/// Sq^index applied to a sum of monomials, kept as written.
struct SquareTerm
{
    std::uint64_t index = 0;
    std::vector<Monomial> argument;

    friend bool operator==(const SquareTerm&, const SquareTerm&) = default;
};

using RelationTerm = std::variant<Monomial, SquareTerm>;

/// lhs = (sum of Sq^i[..] and monomials) [mod L(tau)]. Terms keep their written order so that
/// printing reproduces the source.
struct Relation
{
    Monomial lhs;
    std::vector<RelationTerm> terms;
    std::optional<TauSequence> modulus;

    /// (i, argument) pairs with the arguments reduced over F_2.
    std::vector<std::pair<std::uint64_t, Polynomial>> rhs_squares() const;

    /// The bare monomials of the right-hand side, reduced over F_2.
    Polynomial rhs_monomials() const;

    friend bool operator==(const Relation&, const Relation&) = default;
};

/// Grammar (one relation per line):
///   relation := mono WS? "=" WS? term (WS? "+" WS? term)* (WS "mod" WS "L(" tau ")")?
///   term     := mono | "Sq^" uint "[" poly "]"
///   poly     := mono (WS? "+" WS? mono)*
///   mono     := "(" uint ("," uint)* ")"
///   tau      := uint (";" uint)*
/// Throws ParseError on syntax errors and on terms of the wrong degree. Monomials that occur
/// twice in one sum are accepted (they cancel) and reported through `warnings`.
Relation parse_relation(std::string_view text, std::size_t line = 1, std::vector<std::string>* warnings = nullptr);

std::string to_string(const Relation& relation);

enum class RelationStatus
{
    exact,
    holds_mod_L,
    fails,
};

struct RelationVerdict
{
    RelationStatus status = RelationStatus::fails;
    /// lhs + rhs over F_2; empty for exact relations.
    Polynomial residual;
};

RelationVerdict verify_relation(const Relation& relation);

std::string to_string(RelationStatus status);

struct RelationEntry
{
    std::size_t line = 0;
    /// Text of the closest preceding comment line, if any.
    std::string label;
    Relation relation;
};

/// Relation file: one relation per line; lines starting with '#' are comments, blank lines
/// are skipped.
std::vector<RelationEntry> parse_relation_file(std::string_view contents, std::vector<std::string>* warnings = nullptr);
std::vector<RelationEntry> load_relation_file(const std::filesystem::path& path,
                                              std::vector<std::string>* warnings = nullptr);

/// Whole file contents; throws Error when unreadable.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace hitcalc
