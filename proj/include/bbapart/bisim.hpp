#pragma once

#include "bbapart/apartness.hpp"
#include "bbapart/lts.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace bbapart
{

// Boolean relation over ordered pairs produced by the greatest-fixpoint oracles.
class BisimRelation
{
public:
    BisimRelation() = default;
    BisimRelation( std::size_t num_states, bool filled ) : _n{ num_states }, _holds( num_states * num_states, filled ) {}

    [[nodiscard]] std::size_t num_states() const { return _n; }
    [[nodiscard]] bool holds( StateId p, StateId q ) const { return _holds[ p * _n + q ] != 0; }
    void set( StateId p, StateId q, bool v ) { _holds[ p * _n + q ] = v; }

    // true iff this relation is exactly the complement of `apart`.
    [[nodiscard]] bool is_complement_of( const DirectedPairRelation& apart ) const;

    friend bool operator==( const BisimRelation&, const BisimRelation& ) = default;

private:
    std::size_t _n = 0;
    std::vector<std::uint8_t> _holds;
};

// Greatest fixpoints by naive refinement: start from the full relation and delete pairs that
// violate the transfer clause until a pass deletes nothing. Pairs are scanned in row-major
// order unless `order` supplies a permutation of 0..n*n-1 (index p*n+q); the result does not
// depend on it.
struct RefinementOrder
{
    std::optional<std::vector<std::size_t>> pair_order;
};

// Strong kinds work on the LTS as given, with tau as an ordinary label.
BisimRelation strong_bisimilarity( const Lts& lts, const RefinementOrder& order = {} );
BisimRelation directed_strong_bisimilarity( const Lts& lts, const RefinementOrder& order = {} );
// Classic clause with the special tau case, evaluated on the LTS as given.
BisimRelation branching_bisimilarity( const Lts& lts, const RefinementOrder& order = {} );
// Directed clause, evaluated on reflexive_closure(lts).
BisimRelation directed_branching_bisimilarity( const Lts& lts, const RefinementOrder& order = {} );

BisimRelation bisimilarity( const Lts& lts, ApartnessKind kind, const RefinementOrder& order = {} );

// Pairs of `rel` that violate the transfer clause of `kind` w.r.t. `rel` itself; empty iff
// `rel` is a bisimulation of that kind.
std::vector<std::pair<StateId, StateId>> transfer_violations( const Lts& lts, ApartnessKind kind,
                                                              const BisimRelation& rel );

} // namespace bbapart
