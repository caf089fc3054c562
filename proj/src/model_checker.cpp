#include "bbapart/logic.hpp"

#include <algorithm>
#include <deque>

namespace bbapart
{

ModelChecker::ModelChecker( const Lts& lts ) : _lts{ lts }, _tau_pred( lts.num_states() )
{
    if ( !lts.has_reflexive_silent_steps() )
        throw NotReflexiveError();
    for ( StateId s = 0; s < lts.num_states(); ++s )
        for ( auto t : lts.successors( s, kSilent ) )
            if ( t != s )
                _tau_pred[ t ].push_back( s );
}

StateSet ModelChecker::steps_into( const StateSet& from, const ActionLabel& alpha, const StateSet& right ) const
{
    StateSet out( _lts.num_states() );
    auto a = _lts.find_action( alpha );
    if ( !a )
        return out;
    for ( auto s : from.elements() )
        for ( auto t : _lts.successors( s, *a ) )
            if ( right.contains( t ) )
            {
                out.insert( s );
                break;
            }
    return out;
}

// Backward silent reachability from the states that can take the alpha step, restricted to
// `left`: exactly the states with a delta-path to such a state.
StateSet ModelChecker::diamond_set( const StateSet& left, const ActionLabel& alpha, const StateSet& right ) const
{
    auto out = steps_into( left, alpha, right );
    std::deque<StateId> queue;
    for ( auto s : out.elements() )
        queue.push_back( s );
    while ( !queue.empty() )
    {
        auto v = queue.front();
        queue.pop_front();
        for ( auto u : _tau_pred[ v ] )
            if ( left.contains( u ) && !out.contains( u ) )
            {
                out.insert( u );
                queue.push_back( u );
            }
    }
    return out;
}

// Forward formulation, independent of diamond_set: p qualifies iff its silent closure meets a
// left state with an alpha step into `right`.
StateSet ModelChecker::reach_set( const StateSet& left, const ActionLabel& alpha, const StateSet& right ) const
{
    const auto n = _lts.num_states();
    const auto mid = steps_into( left, alpha, right );
    const auto all = StateSet::full( n );
    StateSet out( n );
    for ( StateId p = 0; p < n; ++p )
        if ( !( constrained_tau_reach( _lts, p, all ) & mid ).empty() )
            out.insert( p );
    return out;
}

const StateSet& ModelChecker::sat( const Formula& f )
{
    if ( auto it = _cache.find( f.id() ); it != _cache.end() )
        return it->second.second;

    const auto n = _lts.num_states();
    StateSet out;
    switch ( f.kind() )
    {
    case Formula::Kind::top: out = StateSet::full( n ); break;
    case Formula::Kind::neg: out = sat( f.child() ).complement(); break;
    case Formula::Kind::conj: out = sat( f.left() ) & sat( f.right() ); break;
    case Formula::Kind::diamond:
    {
        auto left = sat( f.left() );
        out = diamond_set( left, f.label(), sat( f.right() ) );
        break;
    }
    }
    return _cache.emplace( f.id(), std::pair{ f, std::move( out ) } ).first->second.second;
}

const StateSet& ModelChecker::sat( const PFormula& f )
{
    if ( auto it = _pcache.find( f.id() ); it != _pcache.end() )
        return it->second.second;

    const auto n = _lts.num_states();
    StateSet out;
    switch ( f.kind() )
    {
    case PFormula::Kind::top: out = StateSet::full( n ); break;
    case PFormula::Kind::bot: out = StateSet( n ); break;
    case PFormula::Kind::conj: out = sat( f.left() ) & sat( f.right() ); break;
    case PFormula::Kind::disj: out = sat( f.left() ) | sat( f.right() ); break;
    case PFormula::Kind::diamond:
    {
        auto right = StateSet::full( n );
        for ( const auto& g : f.pos() )
            right &= sat( g );
        for ( const auto& g : f.neg() )
            right &= sat( g ).complement();
        auto left = sat( f.left() );
        out = diamond_set( left, f.label(), right );
        break;
    }
    }
    return _pcache.emplace( f.id(), std::pair{ f, std::move( out ) } ).first->second.second;
}

StateSet ModelChecker::psat_direct( const PFormula& f )
{
    const auto n = _lts.num_states();
    switch ( f.kind() )
    {
    case PFormula::Kind::top: return StateSet::full( n );
    case PFormula::Kind::bot: return StateSet( n );
    case PFormula::Kind::conj: return psat_direct( f.left() ) & psat_direct( f.right() );
    case PFormula::Kind::disj: return psat_direct( f.left() ) | psat_direct( f.right() );
    case PFormula::Kind::diamond:
    {
        auto right = StateSet::full( n );
        for ( const auto& g : f.pos() )
            right &= psat_direct( g );
        for ( const auto& g : f.neg() )
            right &= psat_direct( g ).complement();
        return reach_set( psat_direct( f.left() ), f.label(), right );
    }
    }
    return StateSet( n );
}

StateSet ModelChecker::reach_diamond( const Formula& delta, const ActionLabel& alpha, const Formula& psi )
{
    auto left = sat( delta );
    return reach_set( left, alpha, sat( psi ) );
}

std::optional<ModelChecker::Witness> ModelChecker::diamond_witness( StateId p, const Formula& delta,
                                                                    const ActionLabel& alpha, const Formula& psi )
{
    const auto left = sat( delta );
    const auto right = sat( psi );
    auto a = _lts.find_action( alpha );
    if ( !a || !left.contains( p ) )
        return std::nullopt;

    const auto n = _lts.num_states();
    std::vector<StateId> parent( n, n );
    std::vector<StateId> level{ p };
    parent[ p ] = p;
    while ( !level.empty() )
    {
        std::sort( level.begin(), level.end() );
        for ( auto s : level )
            for ( auto t : _lts.successors( s, *a ) )
                if ( right.contains( t ) )
                {
                    Witness w{ {}, t };
                    for ( auto cur = s;; cur = parent[ cur ] )
                    {
                        w.path.push_back( cur );
                        if ( cur == p )
                            break;
                    }
                    std::reverse( w.path.begin(), w.path.end() );
                    return w;
                }
        std::vector<StateId> next;
        for ( auto s : level )
            for ( auto t : _lts.successors( s, kSilent ) )
                if ( left.contains( t ) && parent[ t ] == n )
                {
                    parent[ t ] = s;
                    next.push_back( t );
                }
        level = std::move( next );
    }
    return std::nullopt;
}

bool satisfies( const Lts& lts, StateId p, const Formula& f )
{
    ModelChecker mc( lts );
    return mc.holds( p, f );
}

SatSet sat_set( const Lts& lts, const Formula& f )
{
    ModelChecker mc( lts );
    return mc.sat( f );
}

} // namespace bbapart
