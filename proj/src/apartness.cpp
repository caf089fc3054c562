#include "bbapart/apartness.hpp"

#include <algorithm>

namespace bbapart
{

std::uint32_t DirectedPairRelation::rounds() const
{
    std::uint32_t r = 0;
    for ( auto x : _round )
        r = std::max( r, x );
    return r;
}

std::size_t DirectedPairRelation::size() const
{
    return static_cast<std::size_t>( std::count_if( _round.begin(), _round.end(), []( auto r ) { return r != 0; } ) );
}

DirectedPairRelation DirectedPairRelation::symmetric_closure() const
{
    DirectedPairRelation out( _n );
    for ( StateId p = 0; p < _n; ++p )
        for ( StateId q = 0; q < _n; ++q )
        {
            auto a = round( p, q ), b = round( q, p );
            if ( a != 0 || b != 0 )
                out.add( p, q, a == 0 ? b : b == 0 ? a : std::min( a, b ) );
        }
    return out;
}

bool DirectedPairRelation::is_symmetric() const
{
    for ( StateId p = 0; p < _n; ++p )
        for ( StateId q = p + 1; q < _n; ++q )
            if ( holds( p, q ) != holds( q, p ) )
                return false;
    return true;
}

bool DirectedPairRelation::same_pairs( const DirectedPairRelation& other ) const
{
    if ( _n != other._n )
        return false;
    for ( std::size_t i = 0; i < _round.size(); ++i )
        if ( ( _round[ i ] != 0 ) != ( other._round[ i ] != 0 ) )
            return false;
    return true;
}

std::string_view to_string( ApartnessKind kind )
{
    switch ( kind )
    {
    case ApartnessKind::strong: return "strong";
    case ApartnessKind::directed_strong: return "dstrong";
    case ApartnessKind::branching: return "branching";
    case ApartnessKind::directed_branching: return "dbranching";
    }
    return "?";
}

namespace
{

// Runs rounds until nothing changes. `rule(prev, p, q)` decides whether (p, q) is added given
// the relation of the previous round.
template <typename Rule>
DirectedPairRelation saturate( std::size_t n, Rule&& rule )
{
    DirectedPairRelation rel( n );
    std::vector<std::pair<StateId, StateId>> fresh;
    for ( std::uint32_t round = 1;; ++round )
    {
        fresh.clear();
        for ( StateId p = 0; p < n; ++p )
            for ( StateId q = 0; q < n; ++q )
                if ( !rel.holds( p, q ) && rule( rel, p, q ) )
                    fresh.emplace_back( p, q );
        if ( fresh.empty() )
            break;
        for ( auto [ p, q ] : fresh )
            rel.add( p, q, round );
        if ( round > n * n )
            throw InvariantViolation( "apartness saturation exceeded n^2 rounds" );
    }
    for ( StateId p = 0; p < n; ++p )
        if ( rel.holds( p, p ) )
            throw InvariantViolation( "apartness relation is not irreflexive at state " + std::to_string( p ) );
    return rel;
}

// IN_s body for (p, q) against prev; `directed` selects IN_ds (either orientation of the
// successor pair counts).
bool strong_rule( const Lts& lts, const DirectedPairRelation& prev, StateId p, StateId q, bool directed )
{
    for ( ActionId a = 0; a < lts.num_actions(); ++a )
        for ( auto p1 : lts.successors( p, a ) )
        {
            bool all = true;
            for ( auto q1 : lts.successors( q, a ) )
                if ( !prev.holds( p1, q1 ) && !( directed && prev.holds( q1, p1 ) ) )
                {
                    all = false;
                    break;
                }
            if ( all )
                return true;
        }
    return false;
}

// IN_b / IN_db body. With `directed`, the intermediate condition is p directed-apart q' and the
// end condition is the symmetric closure; without, both use the (symmetric) relation itself.
bool branching_rule( const Lts& closed, const TauClosure& tc, const DirectedPairRelation& prev, StateId p, StateId q,
                     bool directed )
{
    for ( ActionId a = 0; a < closed.num_actions(); ++a )
        for ( auto p1 : closed.successors( p, a ) )
        {
            bool all = true;
            for ( auto [ q1, q2 ] : tc.triples( q, a ) )
                if ( !prev.holds( p, q1 ) && !prev.holds( p1, q2 ) && !( directed && prev.holds( q2, p1 ) ) )
                {
                    all = false;
                    break;
                }
            if ( all )
                return true;
        }
    return false;
}

} // namespace

DirectedPairRelation strong_apartness( const Lts& lts )
{
    return saturate( lts.num_states(), [ & ]( const DirectedPairRelation& prev, StateId p, StateId q ) {
        return strong_rule( lts, prev, p, q, false ) || strong_rule( lts, prev, q, p, false );
    } );
}

DirectedPairRelation directed_strong_apartness( const Lts& lts )
{
    return saturate( lts.num_states(), [ & ]( const DirectedPairRelation& prev, StateId p, StateId q ) {
        return strong_rule( lts, prev, p, q, true );
    } );
}

DirectedPairRelation branching_apartness( const Lts& lts )
{
    const auto closed = reflexive_closure( lts );
    const TauClosure tc( closed );
    return saturate( lts.num_states(), [ & ]( const DirectedPairRelation& prev, StateId p, StateId q ) {
        return branching_rule( closed, tc, prev, p, q, false ) || branching_rule( closed, tc, prev, q, p, false );
    } );
}

DirectedPairRelation directed_branching_apartness( const Lts& lts )
{
    const auto closed = reflexive_closure( lts );
    const TauClosure tc( closed );
    return saturate( lts.num_states(), [ & ]( const DirectedPairRelation& prev, StateId p, StateId q ) {
        return branching_rule( closed, tc, prev, p, q, true );
    } );
}

DirectedPairRelation directed_branching_apartness_nonreflexive( const Lts& lts )
{
    // tau-reachability is reflexive-transitive regardless; only the step relation stays unclosed.
    const TauClosure tc( lts );
    auto apart = []( const DirectedPairRelation& r, StateId x, StateId y ) { return r.holds( x, y ) || r.holds( y, x ); };

    return saturate( lts.num_states(), [ & ]( const DirectedPairRelation& prev, StateId p, StateId q ) {
        // weak tau: p ->tau p' and p' directed-apart q
        for ( auto p1 : lts.successors( p, kSilent ) )
            if ( prev.holds( p1, q ) )
                return true;

        // tau, no step: every q' with q ->>tau q' is apart from p
        {
            bool all = true;
            for ( auto q1 : tc.reach( q ).elements() )
                if ( !apart( prev, p, q1 ) )
                {
                    all = false;
                    break;
                }
            if ( all )
                return true;
        }

        // tau step: p ->tau p', q directed-apart p', and the quantified tau condition
        for ( auto p1 : lts.successors( p, kSilent ) )
        {
            if ( !prev.holds( q, p1 ) )
                continue;
            bool all = true;
            for ( auto [ q1, q2 ] : tc.triples( q, kSilent ) )
                if ( !prev.holds( p, q1 ) && !apart( prev, p1, q2 ) )
                {
                    all = false;
                    break;
                }
            if ( all )
                return true;
        }

        // visible step
        for ( ActionId a = 1; a < lts.num_actions(); ++a )
            for ( auto p1 : lts.successors( p, a ) )
            {
                bool all = true;
                for ( auto [ q1, q2 ] : tc.triples( q, a ) )
                    if ( !prev.holds( p, q1 ) && !apart( prev, p1, q2 ) )
                    {
                        all = false;
                        break;
                    }
                if ( all )
                    return true;
            }
        return false;
    } );
}

DirectedPairRelation apartness( const Lts& lts, ApartnessKind kind )
{
    switch ( kind )
    {
    case ApartnessKind::strong: return strong_apartness( lts );
    case ApartnessKind::directed_strong: return directed_strong_apartness( lts );
    case ApartnessKind::branching: return branching_apartness( lts );
    case ApartnessKind::directed_branching: return directed_branching_apartness( lts );
    }
    throw std::invalid_argument( "unknown apartness kind" );
}

std::vector<TauExtensionViolation> check_tau_extension( const Lts& lts, const DirectedPairRelation& rel )
{
    const TauClosure tc( lts );
    const auto n = lts.num_states();
    std::vector<TauExtensionViolation> out;
    for ( StateId p = 0; p < n; ++p )
        for ( auto p1 : tc.reach( p ).elements() )
            for ( StateId q = 0; q < n; ++q )
            {
                if ( !rel.holds( p1, q ) )
                    continue;
                for ( auto q1 : tc.reach( q ).elements() )
                    if ( !rel.holds( p, q1 ) )
                        out.push_back( { p, p1, q, q1 } );
            }
    return out;
}

} // namespace bbapart
