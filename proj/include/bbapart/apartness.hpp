#pragma once

#include "bbapart/lts.hpp"

#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

namespace bbapart
{

// Boolean relation over ordered state pairs. Each held pair carries the fixpoint round
// (1-based) in which it was first added; round 0 means "not held".
class DirectedPairRelation
{
public:
    DirectedPairRelation() = default;
    explicit DirectedPairRelation( std::size_t num_states )
            : _n{ num_states }, _round( num_states * num_states, 0 )
    {}

    [[nodiscard]] std::size_t num_states() const { return _n; }
    [[nodiscard]] bool holds( StateId p, StateId q ) const { return _round[ p * _n + q ] != 0; }
    [[nodiscard]] std::uint32_t round( StateId p, StateId q ) const { return _round[ p * _n + q ]; }
    // Held with a stamp strictly below `round`.
    [[nodiscard]] bool holds_before( StateId p, StateId q, std::uint32_t round ) const
    {
        auto r = _round[ p * _n + q ];
        return r != 0 && r < round;
    }
    [[nodiscard]] std::uint32_t rounds() const;
    [[nodiscard]] std::size_t size() const;

    void add( StateId p, StateId q, std::uint32_t round ) { _round[ p * _n + q ] = round; }
    void remove( StateId p, StateId q ) { _round[ p * _n + q ] = 0; }

    [[nodiscard]] DirectedPairRelation symmetric_closure() const;
    [[nodiscard]] bool is_symmetric() const;

    // Equality of the held pairs, ignoring round stamps.
    [[nodiscard]] bool same_pairs( const DirectedPairRelation& other ) const;

private:
    std::size_t _n = 0;
    std::vector<std::uint32_t> _round;
};

enum class ApartnessKind
{
    strong,
    directed_strong,
    branching,
    directed_branching,
};

std::string_view to_string( ApartnessKind kind );

// Least fixpoints, computed by round-based saturation: round k evaluates the rule body
// for every ordered pair against the relation of round k-1.
//
// The strong rules treat tau as an ordinary label and do not close the LTS.
DirectedPairRelation strong_apartness( const Lts& lts );
DirectedPairRelation directed_strong_apartness( const Lts& lts );
// Both branching engines work on reflexive_closure(lts).
DirectedPairRelation branching_apartness( const Lts& lts );
DirectedPairRelation directed_branching_apartness( const Lts& lts );
// Four-rule system on the LTS as given (no closure).
DirectedPairRelation directed_branching_apartness_nonreflexive( const Lts& lts );

DirectedPairRelation apartness( const Lts& lts, ApartnessKind kind );

enum class ChildTag
{
    left_pair,            // p  directed-apart q'
    right_pair_forward,   // p' directed-apart q''
    right_pair_backward,  // q'' directed-apart p'
};

std::string_view to_string( ChildTag tag );

struct Derivation;

struct DerivationChild
{
    StateId q_prime;
    StateId q_double_prime;
    ChildTag tag;
    std::shared_ptr<const Derivation> sub;
};

// Certificate for one application of the directed branching rule: the witness step
// left ->action witness_target, and one sub-certificate for every pair in triples(right, action).
// Sub-certificates for the same pair are shared, so the tree is stored as a DAG.
struct Derivation
{
    StateId left;
    StateId right;
    std::uint32_t round;
    ActionId action;
    StateId witness_target;
    std::vector<DerivationChild> children;
};

class NotApartError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// `lts` is the LTS the relation was computed for (closed internally, like the engine).
// Witness: the smallest (action, target) whose quantifier holds below the node's round.
// Each child takes the available sub-derivation with the smallest round stamp; equal stamps
// prefer left_pair, then right_pair_forward, then right_pair_backward.
std::shared_ptr<const Derivation> extract_derivation( const Lts& lts, const DirectedPairRelation& rel, StateId p,
                                                      StateId q );

// Re-checks every node against reflexive_closure(lts); throws InvariantViolation with the
// offending node otherwise.
void validate_derivation( const Lts& lts, const Derivation& d );

std::size_t derivation_size( const Derivation& d );

struct TauExtensionViolation
{
    StateId p, p_prime, q, q_prime;
};

// Reports every p ->>tau p', q ->>tau q' with rel(p', q) but not rel(p, q').
std::vector<TauExtensionViolation> check_tau_extension( const Lts& lts, const DirectedPairRelation& rel );

} // namespace bbapart
