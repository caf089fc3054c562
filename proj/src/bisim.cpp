#include "bbapart/bisim.hpp"

#include <functional>
#include <numeric>

namespace bbapart
{

bool BisimRelation::is_complement_of( const DirectedPairRelation& apart ) const
{
    if ( apart.num_states() != _n )
        return false;
    for ( StateId p = 0; p < _n; ++p )
        for ( StateId q = 0; q < _n; ++q )
            if ( holds( p, q ) == apart.holds( p, q ) )
                return false;
    return true;
}

namespace
{

// One direction of the strong clause: every a-step of p is matched by q.
bool strong_half( const Lts& lts, const BisimRelation& r, StateId p, StateId q, bool directed )
{
    for ( ActionId a = 0; a < lts.num_actions(); ++a )
        for ( auto p1 : lts.successors( p, a ) )
        {
            bool matched = false;
            for ( auto q1 : lts.successors( q, a ) )
                if ( r.holds( p1, q1 ) && ( !directed || r.holds( q1, p1 ) ) )
                {
                    matched = true;
                    break;
                }
            if ( !matched )
                return false;
        }
    return true;
}

// One direction of the classic branching clause on an LTS that need not be reflexive.
bool branching_half( const Lts& lts, const TauClosure& tc, const BisimRelation& r, StateId p, StateId q )
{
    for ( ActionId a = 0; a < lts.num_actions(); ++a )
        for ( auto p1 : lts.successors( p, a ) )
        {
            if ( a == kSilent && r.holds( p1, q ) )
                continue;
            bool matched = false;
            for ( auto [ q1, q2 ] : tc.triples( q, a ) )
                if ( r.holds( p, q1 ) && r.holds( p1, q2 ) )
                {
                    matched = true;
                    break;
                }
            if ( !matched )
                return false;
        }
    return true;
}

bool directed_branching_clause( const Lts& closed, const TauClosure& tc, const BisimRelation& r, StateId p, StateId q )
{
    for ( ActionId a = 0; a < closed.num_actions(); ++a )
        for ( auto p1 : closed.successors( p, a ) )
        {
            bool matched = false;
            for ( auto [ q1, q2 ] : tc.triples( q, a ) )
                if ( r.holds( p, q1 ) && r.holds( p1, q2 ) && r.holds( q2, p1 ) )
                {
                    matched = true;
                    break;
                }
            if ( !matched )
                return false;
        }
    return true;
}

using Clause = std::function<bool( const BisimRelation&, StateId, StateId )>;

BisimRelation refine( std::size_t n, bool symmetric, const Clause& clause, const RefinementOrder& order )
{
    std::vector<std::size_t> idx;
    if ( order.pair_order )
    {
        idx = *order.pair_order;
        if ( idx.size() != n * n )
            throw std::invalid_argument( "pair order must be a permutation of all pairs" );
    }
    else
    {
        idx.resize( n * n );
        std::iota( idx.begin(), idx.end(), 0 );
    }

    BisimRelation r( n, true );
    for ( bool changed = true; changed; )
    {
        changed = false;
        for ( auto i : idx )
        {
            StateId p = i / n, q = i % n;
            if ( r.holds( p, q ) && !clause( r, p, q ) )
            {
                r.set( p, q, false );
                if ( symmetric )
                    r.set( q, p, false );
                changed = true;
            }
        }
    }
    return r;
}

Clause clause_for( const Lts& lts, ApartnessKind kind, std::shared_ptr<Lts>& closed, std::shared_ptr<TauClosure>& tc )
{
    switch ( kind )
    {
    case ApartnessKind::strong:
        return [ &lts ]( const BisimRelation& r, StateId p, StateId q ) {
            return strong_half( lts, r, p, q, false ) && strong_half( lts, r, q, p, false );
        };
    case ApartnessKind::directed_strong:
        return [ &lts ]( const BisimRelation& r, StateId p, StateId q ) { return strong_half( lts, r, p, q, true ); };
    case ApartnessKind::branching:
        tc = std::make_shared<TauClosure>( lts );
        return [ &lts, tc ]( const BisimRelation& r, StateId p, StateId q ) {
            return branching_half( lts, *tc, r, p, q ) && branching_half( lts, *tc, r, q, p );
        };
    case ApartnessKind::directed_branching:
        closed = std::make_shared<Lts>( reflexive_closure( lts ) );
        tc = std::make_shared<TauClosure>( *closed );
        return [ closed, tc ]( const BisimRelation& r, StateId p, StateId q ) {
            return directed_branching_clause( *closed, *tc, r, p, q );
        };
    }
    throw std::invalid_argument( "unknown relation kind" );
}

bool symmetric_kind( ApartnessKind kind )
{
    return kind == ApartnessKind::strong || kind == ApartnessKind::branching;
}

} // namespace

BisimRelation bisimilarity( const Lts& lts, ApartnessKind kind, const RefinementOrder& order )
{
    std::shared_ptr<Lts> closed;
    std::shared_ptr<TauClosure> tc;
    auto clause = clause_for( lts, kind, closed, tc );
    return refine( lts.num_states(), symmetric_kind( kind ), clause, order );
}

BisimRelation strong_bisimilarity( const Lts& lts, const RefinementOrder& order )
{
    return bisimilarity( lts, ApartnessKind::strong, order );
}

BisimRelation directed_strong_bisimilarity( const Lts& lts, const RefinementOrder& order )
{
    return bisimilarity( lts, ApartnessKind::directed_strong, order );
}

BisimRelation branching_bisimilarity( const Lts& lts, const RefinementOrder& order )
{
    return bisimilarity( lts, ApartnessKind::branching, order );
}

BisimRelation directed_branching_bisimilarity( const Lts& lts, const RefinementOrder& order )
{
    return bisimilarity( lts, ApartnessKind::directed_branching, order );
}

std::vector<std::pair<StateId, StateId>> transfer_violations( const Lts& lts, ApartnessKind kind,
                                                              const BisimRelation& rel )
{
    std::shared_ptr<Lts> closed;
    std::shared_ptr<TauClosure> tc;
    auto clause = clause_for( lts, kind, closed, tc );
    std::vector<std::pair<StateId, StateId>> out;
    for ( StateId p = 0; p < rel.num_states(); ++p )
        for ( StateId q = 0; q < rel.num_states(); ++q )
            if ( rel.holds( p, q ) && !clause( rel, p, q ) )
                out.emplace_back( p, q );
    return out;
}

} // namespace bbapart
