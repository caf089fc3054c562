#pragma once

#include "bbapart/lts.hpp"

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace bbapart
{

// Hennessy-Milner logic with until:  T | ~f | (f & g) | f <a> g.
// Immutable tree with shared subterms; copying is cheap.
class Formula
{
public:
    enum class Kind
    {
        top,
        neg,
        conj,
        diamond,
    };

    static Formula top();
    static Formula neg( Formula f );
    static Formula conj( Formula l, Formula r );
    static Formula diamond( Formula left, ActionLabel label, Formula right );

    // Sugar.
    static Formula bot() { return neg( top() ); }
    static Formula disj( Formula l, Formula r ) { return neg( conj( neg( std::move( l ) ), neg( std::move( r ) ) ) ); }
    static Formula diamond( ActionLabel label, Formula right ) { return diamond( top(), std::move( label ), std::move( right ) ); }

    [[nodiscard]] Kind kind() const;
    // neg: child(); conj and diamond: left(), right().
    [[nodiscard]] const Formula& child() const;
    [[nodiscard]] const Formula& left() const;
    [[nodiscard]] const Formula& right() const;
    [[nodiscard]] const ActionLabel& label() const;

    [[nodiscard]] std::size_t height() const;
    [[nodiscard]] std::size_t size() const;
    [[nodiscard]] bool has_modality() const;
    // Address of the shared node; stable for the lifetime of any copy.
    [[nodiscard]] const void* id() const { return _node.get(); }

    friend bool operator==( const Formula& a, const Formula& b );
    friend std::strong_ordering operator<=>( const Formula& a, const Formula& b );

private:
    struct Node;
    explicit Formula( std::shared_ptr<const Node> node ) : _node{ std::move( node ) } {}
    std::shared_ptr<const Node> _node;
};

// Positive HMLU:  T | F | (f & g) | (f | g) | f <a> (/\pos & /\~neg).
//
// Diamond pos/neg lists are kept in canonical order without duplicates, so structural
// equality is the identity used for deduplication.
class PFormula
{
public:
    enum class Kind
    {
        top,
        bot,
        conj,
        disj,
        diamond,
    };

    static PFormula top();
    static PFormula bot();
    static PFormula conj( PFormula l, PFormula r );
    static PFormula disj( PFormula l, PFormula r );
    static PFormula diamond( PFormula left, ActionLabel label, std::vector<PFormula> pos = {},
                             std::vector<PFormula> neg = {} );

    // Canonical n-ary forms: flatten nested members, drop units (T resp. F), sort, dedupe,
    // fold right-nested. Empty conjunction is T, empty disjunction is F.
    static PFormula conjunction( std::vector<PFormula> members );
    static PFormula disjunction( std::vector<PFormula> members );

    [[nodiscard]] Kind kind() const;
    [[nodiscard]] const PFormula& left() const;
    [[nodiscard]] const PFormula& right() const;
    [[nodiscard]] const ActionLabel& label() const;
    [[nodiscard]] const std::vector<PFormula>& pos() const;
    [[nodiscard]] const std::vector<PFormula>& neg() const;

    // Members of a right-nested conjunction (resp. disjunction); a single member otherwise.
    [[nodiscard]] std::vector<PFormula> conjuncts() const;
    [[nodiscard]] std::vector<PFormula> disjuncts() const;

    [[nodiscard]] std::size_t size() const;
    [[nodiscard]] std::size_t depth() const;  // diamond nesting depth
    [[nodiscard]] const void* id() const { return _node.get(); }

    friend bool operator==( const PFormula& a, const PFormula& b );
    friend std::strong_ordering operator<=>( const PFormula& a, const PFormula& b );

private:
    struct Node;
    explicit PFormula( std::shared_ptr<const Node> node ) : _node{ std::move( node ) } {}
    std::shared_ptr<const Node> _node;
};

bool is_positive( const Formula& f );
bool is_negative( const Formula& f );
// Every diamond has a positive left-hand side.
bool is_good( const Formula& f );

Formula p_embed( const PFormula& f );

// Fully parenthesised ASCII syntax, see parse_formula.
std::string to_string( const Formula& f );
std::string to_string( const PFormula& f );

// formula := "T" | "F" | "~" formula | "(" formula ")" | "(" formula "&" formula ")"
//          | "(" formula "|" formula ")" | "(" formula "<" label ">" formula ")"
//          | "<" label ">" formula
// label    := "tau" | identifier
Formula parse_formula( std::string_view text );

class NotReflexiveError : public std::invalid_argument
{
public:
    NotReflexiveError()
            : std::invalid_argument( "the model checker needs reflexive silent steps; apply reflexive_closure first" )
    {}
};

// Bottom-up evaluator over one LTS with reflexive silent steps. Satisfaction sets are cached
// per subformula node, so formulas sharing subterms are cheap to evaluate together.
class ModelChecker
{
public:
    // Throws NotReflexiveError unless every state has a tau self-loop.
    explicit ModelChecker( const Lts& lts );

    [[nodiscard]] const Lts& lts() const { return _lts; }
    const StateSet& sat( const Formula& f );
    const StateSet& sat( const PFormula& f );
    bool holds( StateId s, const Formula& f ) { return sat( f ).contains( s ); }
    bool holds( StateId s, const PFormula& f ) { return sat( f ).contains( s ); }

    // Direct evaluation of a P-formula on its own syntax, using the simple reachability
    // characterisation of diamonds with positive left side.
    StateSet psat_direct( const PFormula& f );

    // {p : p ->>tau p' ->alpha p'', p' |= delta, p'' |= psi}; agrees with sat of the diamond
    // whenever delta is positive.
    StateSet reach_diamond( const Formula& delta, const ActionLabel& alpha, const Formula& psi );

    struct Witness
    {
        std::vector<StateId> path;  // p = path.front() ->tau ... ->tau path.back() = p'
        StateId target;             // p' ->alpha target
    };
    // Shortest delta-path to a state with an alpha step into psi; ties broken by smallest index.
    std::optional<Witness> diamond_witness( StateId p, const Formula& delta, const ActionLabel& alpha,
                                            const Formula& psi );

private:
    StateSet diamond_set( const StateSet& left, const ActionLabel& alpha, const StateSet& right ) const;
    StateSet reach_set( const StateSet& left, const ActionLabel& alpha, const StateSet& right ) const;
    StateSet steps_into( const StateSet& from, const ActionLabel& alpha, const StateSet& right ) const;

    const Lts& _lts;
    std::vector<std::vector<StateId>> _tau_pred;
    std::unordered_map<const void*, std::pair<Formula, StateSet>> _cache;
    std::unordered_map<const void*, std::pair<PFormula, StateSet>> _pcache;
};

using SatSet = StateSet;

bool satisfies( const Lts& lts, StateId p, const Formula& f );
SatSet sat_set( const Lts& lts, const Formula& f );

// Exhaustive P-formulas up to diamond depth `depth` (at most 3) over `actions` plus tau,
// in this canonical shape:
//   depth 0: T, F
//   depth d: everything of depth d-1, plus
//            - L <a> (/\pos & /\~neg) with L in {T} u N(d-1), pos and neg each empty or a
//              single diamond from D(d-1), a ranging over tau and `actions`
//            - (A & B) and (A | B) for distinct diamonds A < B of D(d-1)
// where D(k) are the diamonds of depth <= k and N(k) the formulas of depth <= k other than T, F.
// Duplicates removed by structural equality. Throws std::invalid_argument past depth 3 or when
// the enumeration would exceed `max_size` formulas.
std::vector<PFormula> enumerate_pformulas( const std::vector<ActionLabel>& actions, std::size_t depth,
                                           std::size_t max_size = 2'000'000 );

// General HMLU formulas for property checks:
//   depth 0: T, ~T
//   depth d: everything of depth d-1, plus L <a> R and ~(L <a> R) with L, R in O(d-1),
//            plus C(d-1)
// where S(k) are the diamonds of depth <= k and their negations, C(k) the formulas (A & B) and
// (A | B) for distinct A < B in S(k), and O(k) = {T} u S(k) u C(k).
std::vector<Formula> enumerate_formulas( const std::vector<ActionLabel>& actions, std::size_t depth,
                                         std::size_t max_size = 2'000'000 );

} // namespace bbapart
