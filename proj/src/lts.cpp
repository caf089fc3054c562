#include "bbapart/lts.hpp"

#include <algorithm>
#include <charconv>
#include <deque>

namespace bbapart
{

ActionLabel ActionLabel::visible( std::string name )
{
    if ( name.empty() )
        throw std::invalid_argument( "visible action label must be nonempty" );
    ActionLabel label;
    label._name = std::move( name );
    return label;
}

Lts::Lts( std::size_t num_states, const std::vector<LabelledTransition>& transitions, StateId initial,
          std::vector<std::string> names, const std::vector<ActionLabel>& extra_actions )
        : _num_states{ num_states }, _initial{ initial }, _names{ std::move( names ) }
{
    if ( num_states == 0 )
        throw std::invalid_argument( "an LTS needs at least one state" );
    if ( initial >= num_states )
        throw std::invalid_argument( "initial state out of range" );
    if ( !_names.empty() && _names.size() != num_states )
        throw std::invalid_argument( "name map must cover every state" );

    _actions.push_back( ActionLabel::silent() );
    for ( const auto& t : transitions )
        _actions.push_back( t.label );
    for ( const auto& a : extra_actions )
        _actions.push_back( a );
    std::sort( _actions.begin(), _actions.end() );
    _actions.erase( std::unique( _actions.begin(), _actions.end() ), _actions.end() );

    _transitions.reserve( transitions.size() );
    for ( const auto& t : transitions )
    {
        if ( t.src >= num_states || t.dst >= num_states )
            throw std::invalid_argument( "transition endpoint out of range" );
        _transitions.push_back( { t.src, *find_action( t.label ), t.dst } );
    }
    std::sort( _transitions.begin(), _transitions.end() );
    _transitions.erase( std::unique( _transitions.begin(), _transitions.end() ), _transitions.end() );

    const auto na = _actions.size();
    _offsets.assign( num_states * na + 1, 0 );
    for ( const auto& t : _transitions )
        ++_offsets[ t.src * na + t.action + 1 ];
    for ( std::size_t i = 1; i < _offsets.size(); ++i )
        _offsets[ i ] += _offsets[ i - 1 ];
    _targets.reserve( _transitions.size() );
    for ( const auto& t : _transitions )
        _targets.push_back( t.dst );
}

std::optional<ActionId> Lts::find_action( const ActionLabel& label ) const
{
    auto it = std::lower_bound( _actions.begin(), _actions.end(), label );
    if ( it == _actions.end() || *it != label )
        return std::nullopt;
    return static_cast<ActionId>( it - _actions.begin() );
}

std::span<const StateId> Lts::successors( StateId s, ActionId a ) const
{
    const auto i = s * _actions.size() + a;
    return std::span<const StateId>( _targets ).subspan( _offsets[ i ], _offsets[ i + 1 ] - _offsets[ i ] );
}

bool Lts::has_transition( StateId src, ActionId a, StateId dst ) const
{
    auto succ = successors( src, a );
    return std::binary_search( succ.begin(), succ.end(), dst );
}

bool Lts::has_silent_steps() const
{
    return std::any_of( _transitions.begin(), _transitions.end(),
                        []( const Transition& t ) { return t.action == kSilent; } );
}

bool Lts::has_reflexive_silent_steps() const
{
    for ( StateId s = 0; s < _num_states; ++s )
        if ( !has_transition( s, kSilent, s ) )
            return false;
    return true;
}

std::string Lts::state_name( StateId s ) const
{
    return _names.empty() ? std::to_string( s ) : _names[ s ];
}

std::optional<StateId> Lts::find_state( std::string_view name_or_index ) const
{
    for ( StateId s = 0; s < _names.size(); ++s )
        if ( _names[ s ] == name_or_index )
            return s;
    StateId index = 0;
    const auto* end = name_or_index.data() + name_or_index.size();
    auto [ ptr, ec ] = std::from_chars( name_or_index.data(), end, index );
    if ( ec != std::errc{} || ptr != end || index >= _num_states )
        return std::nullopt;
    return index;
}

std::vector<LabelledTransition> Lts::labelled_transitions() const
{
    std::vector<LabelledTransition> out;
    out.reserve( _transitions.size() );
    for ( const auto& t : _transitions )
        out.push_back( { t.src, _actions[ t.action ], t.dst } );
    return out;
}

Lts Lts::with_names( std::vector<std::string> names ) const
{
    std::vector<ActionLabel> extra( _actions.begin() + 1, _actions.end() );
    return Lts( _num_states, labelled_transitions(), _initial, std::move( names ), extra );
}

Lts reflexive_closure( const Lts& lts )
{
    auto ts = lts.labelled_transitions();
    for ( StateId s = 0; s < lts.num_states(); ++s )
        ts.push_back( { s, ActionLabel::silent(), s } );
    std::vector<ActionLabel> extra( lts.actions().begin() + 1, lts.actions().end() );
    return Lts( lts.num_states(), ts, lts.initial(), lts.names(), extra );
}

TauClosure::TauClosure( const Lts& lts ) : _num_actions{ lts.num_actions() }
{
    const auto n = lts.num_states();
    _reach.assign( n, StateSet( n ) );
    std::vector<StateId> stack;
    for ( StateId s = 0; s < n; ++s )
    {
        auto& row = _reach[ s ];
        row.insert( s );
        stack.assign( 1, s );
        while ( !stack.empty() )
        {
            auto u = stack.back();
            stack.pop_back();
            for ( auto v : lts.successors( u, kSilent ) )
                if ( !row.contains( v ) )
                {
                    row.insert( v );
                    stack.push_back( v );
                }
        }
    }

    _triples.resize( n * _num_actions );
    for ( StateId q = 0; q < n; ++q )
        for ( auto q1 : _reach[ q ].elements() )
            for ( ActionId a = 0; a < _num_actions; ++a )
                for ( auto q2 : lts.successors( q1, a ) )
                    _triples[ q * _num_actions + a ].emplace_back( q1, q2 );
}

StateSet constrained_tau_reach( const Lts& lts, StateId p, const StateSet& allowed )
{
    StateSet out( lts.num_states() );
    if ( !allowed.contains( p ) )
        return out;
    std::deque<StateId> queue{ p };
    out.insert( p );
    while ( !queue.empty() )
    {
        auto u = queue.front();
        queue.pop_front();
        for ( auto v : lts.successors( u, kSilent ) )
            if ( allowed.contains( v ) && !out.contains( v ) )
            {
                out.insert( v );
                queue.push_back( v );
            }
    }
    return out;
}

} // namespace bbapart
