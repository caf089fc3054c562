#include "bbapart/json_io.hpp"

#include <fstream>
#include <set>

namespace bbapart
{

using nlohmann::json;

std::vector<std::string> parse_names( const json& j, std::size_t num_states )
{
    std::vector<std::string> out( num_states );
    for ( std::size_t i = 0; i < num_states; ++i )
        out[ i ] = std::to_string( i );
    if ( j.is_array() )
    {
        if ( j.size() != num_states )
            throw ParseError( "name list has " + std::to_string( j.size() ) + " entries for " +
                              std::to_string( num_states ) + " states" );
        for ( std::size_t i = 0; i < num_states; ++i )
        {
            if ( !j[ i ].is_string() )
                throw ParseError( "state names must be strings" );
            out[ i ] = j[ i ].get<std::string>();
        }
    }
    else if ( j.is_object() )
    {
        for ( const auto& [ key, value ] : j.items() )
        {
            std::size_t idx = 0, used = 0;
            try
            {
                idx = std::stoul( key, &used );
            }
            catch ( const std::exception& )
            {
                used = 0;
            }
            if ( used != key.size() || key.empty() || idx >= num_states )
                throw ParseError( "name map key '" + key + "' is not a state index" );
            if ( !value.is_string() )
                throw ParseError( "state names must be strings" );
            out[ idx ] = value.get<std::string>();
        }
    }
    else
        throw ParseError( "name map must be a JSON array or object" );

    std::set<std::string> seen;
    for ( const auto& n : out )
        if ( n.empty() || !seen.insert( n ).second )
            throw ParseError( "state names must be non-empty and unique, offending name '" + n + "'" );
    return out;
}

std::vector<std::string> load_names( const std::string& path, std::size_t num_states )
{
    std::ifstream in( path );
    if ( !in )
        throw ParseError( "cannot open " + path );
    json j;
    try
    {
        j = json::parse( in );
    }
    catch ( const json::parse_error& e )
    {
        throw ParseError( path + ": " + e.what() );
    }
    return parse_names( j, num_states );
}

json to_json( const Formula& f )
{
    switch ( f.kind() )
    {
    case Formula::Kind::top: return { { "kind", "top" } };
    case Formula::Kind::neg: return { { "kind", "neg" }, { "child", to_json( f.child() ) } };
    case Formula::Kind::conj: return { { "kind", "and" }, { "left", to_json( f.left() ) }, { "right", to_json( f.right() ) } };
    case Formula::Kind::diamond:
        return { { "kind", "diamond" },
                 { "left", to_json( f.left() ) },
                 { "label", f.label().name() },
                 { "right", to_json( f.right() ) } };
    }
    return nullptr;
}

json to_json( const PFormula& f )
{
    switch ( f.kind() )
    {
    case PFormula::Kind::top: return { { "kind", "top" } };
    case PFormula::Kind::bot: return { { "kind", "bot" } };
    case PFormula::Kind::conj: return { { "kind", "and" }, { "left", to_json( f.left() ) }, { "right", to_json( f.right() ) } };
    case PFormula::Kind::disj: return { { "kind", "or" }, { "left", to_json( f.left() ) }, { "right", to_json( f.right() ) } };
    case PFormula::Kind::diamond:
    {
        json pos = json::array(), neg = json::array();
        for ( const auto& g : f.pos() )
            pos.push_back( to_json( g ) );
        for ( const auto& g : f.neg() )
            neg.push_back( to_json( g ) );
        return { { "kind", "diamond" }, { "left", to_json( f.left() ) }, { "label", f.label().name() },
                 { "pos", pos },        { "neg", neg } };
    }
    }
    return nullptr;
}

json to_json( const Lts& lts, const Derivation& d )
{
    json children = json::array();
    for ( const auto& c : d.children )
        children.push_back( { { "qPrime", lts.state_name( c.q_prime ) },
                              { "qDoublePrime", lts.state_name( c.q_double_prime ) },
                              { "tag", to_string( c.tag ) },
                              { "sub", to_json( lts, *c.sub ) } } );
    return { { "conclusion", { { "left", lts.state_name( d.left ) }, { "right", lts.state_name( d.right ) }, { "kind", "db" } } },
             { "witness",
               { { "from", lts.state_name( d.left ) },
                 { "label", lts.action( d.action ).name() },
                 { "to", lts.state_name( d.witness_target ) } } },
             { "round", d.round },
             { "children", children } };
}

json to_json( const Lts& lts, const CheckResult& r )
{
    json j = { { "kind", to_string( r.kind ) },
               { "p", lts.state_name( r.p ) },
               { "q", lts.state_name( r.q ) },
               { "apart", r.apart },
               { "apartReverse", r.apart_reverse },
               { "bisimilar", r.bisimilar } };
    if ( r.derivation )
        j[ "derivation" ] = to_json( lts, *r.derivation );
    return j;
}

json to_json( const Lts& lts, const DiamondTrace& t )
{
    json stages = json::array();
    for ( const auto& s : t.stages )
        stages.push_back( { { "index", s.index },
                            { "state", lts.state_name( s.state ) },
                            { "deltaPlus", to_string( s.delta_plus ) },
                            { "deltaMinus", to_string( s.delta_minus ) } } );
    json pos = json::array(), neg = json::array();
    for ( const auto& g : t.right.pos )
        pos.push_back( to_string( g ) );
    for ( const auto& g : t.right.neg )
        neg.push_back( to_string( g ) );
    return { { "p", lts.state_name( t.p ) },
             { "q", lts.state_name( t.q ) },
             { "stages", stages },
             { "target", lts.state_name( t.target ) },
             { "right", { { "pos", pos }, { "neg", neg } } },
             { "outcome", to_string( t.outcome ) } };
}

json to_json( const ValidationReport& r )
{
    json entries = json::array();
    for ( const auto& e : r.entries )
    {
        json j = { { "name", e.name }, { "status", e.pass ? "pass" : "fail" }, { "checks", e.checks } };
        if ( e.counterexample )
        {
            json c = { { "states", e.counterexample->states }, { "relations", e.counterexample->relation } };
            if ( e.counterexample->formula )
                c[ "formula" ] = *e.counterexample->formula;
            j[ "counterexample" ] = c;
        }
        entries.push_back( j );
    }
    return { { "pass", r.all_pass() }, { "entries", entries } };
}

json lts_stats( const Lts& lts )
{
    std::size_t silent = 0;
    for ( const auto& t : lts.transitions() )
        silent += t.action == kSilent;
    json actions = json::array();
    for ( const auto& a : lts.actions() )
        actions.push_back( a.name() );
    return { { "states", lts.num_states() },
             { "transitions", lts.num_transitions() },
             { "silentTransitions", silent },
             { "initial", lts.state_name( lts.initial() ) },
             { "actions", actions },
             { "reflexiveSilentSteps", lts.has_reflexive_silent_steps() } };
}

} // namespace bbapart
