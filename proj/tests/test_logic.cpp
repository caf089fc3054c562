#include "fixtures.hpp"

#include <doctest.h>

#include <functional>

using namespace bbapart;
using fixtures::act;
using fixtures::st;

namespace
{

Formula dia( const std::string& a, Formula right = Formula::top() ) { return Formula::diamond( act( a ), std::move( right ) ); }

// Satisfaction by literal unfolding of the definition: explore delta-paths state by state.
bool naive( const Lts& lts, StateId p, const Formula& f )
{
    switch ( f.kind() )
    {
    case Formula::Kind::top: return true;
    case Formula::Kind::neg: return !naive( lts, p, f.child() );
    case Formula::Kind::conj: return naive( lts, p, f.left() ) && naive( lts, p, f.right() );
    case Formula::Kind::diamond:
    {
        auto a = lts.find_action( f.label() );
        if ( !a )
            return false;
        std::vector<bool> seen( lts.num_states(), false );
        std::function<bool( StateId )> walk = [ & ]( StateId s ) {
            if ( seen[ s ] || !naive( lts, s, f.left() ) )
                return false;
            seen[ s ] = true;
            for ( auto t : lts.successors( s, *a ) )
                if ( naive( lts, t, f.right() ) )
                    return true;
            for ( auto t : lts.successors( s, kSilent ) )
                if ( walk( t ) )
                    return true;
            return false;
        };
        return walk( p );
    }
    }
    return false;
}

std::vector<ActionLabel> visible( const Lts& lts )
{
    return { lts.actions().begin() + 1, lts.actions().end() };
}

} // namespace

TEST_CASE( "positive, negative and good" )
{
    const auto t = Formula::top();
    CHECK( is_positive( t ) );
    CHECK( is_negative( t ) );

    const auto neither = Formula::diamond( Formula::neg( dia( "a" ) ), act( "b" ), t );
    CHECK_FALSE( is_positive( neither ) );
    CHECK_FALSE( is_negative( neither ) );
    CHECK_FALSE( is_good( neither ) );

    const auto dc = Formula::diamond( dia( "d" ), act( "c" ), t );
    CHECK( is_positive( dc ) );
    CHECK_FALSE( is_negative( dc ) );
    CHECK( is_good( dc ) );
    CHECK( is_good( t ) );

    CHECK( is_negative( Formula::neg( dc ) ) );
    CHECK_FALSE( is_positive( Formula::neg( dc ) ) );
    // Positivity of a diamond ignores its right-hand side.
    CHECK( is_positive( Formula::diamond( t, act( "a" ), neither ) ) );
    CHECK_FALSE( is_good( Formula::diamond( t, act( "a" ), neither ) ) );
}

TEST_CASE( "p_embed" )
{
    CHECK( p_embed( PFormula::diamond( PFormula::top(), act( "a" ) ) ) == dia( "a" ) );
    CHECK( p_embed( PFormula::bot() ) == Formula::neg( Formula::top() ) );

    auto phi1 = PFormula::diamond( PFormula::top(), ActionLabel::silent(), { PFormula::diamond( PFormula::top(), act( "c" ) ) },
                                   { PFormula::diamond( PFormula::top(), act( "b" ) ) } );
    auto expected = dia( "tau", Formula::conj( dia( "c" ), Formula::neg( dia( "b" ) ) ) );
    CHECK( p_embed( phi1 ) == expected );
    CHECK( is_positive( p_embed( phi1 ) ) );
    CHECK( is_good( p_embed( phi1 ) ) );
}

TEST_CASE( "canonical n-ary forms" )
{
    auto a = PFormula::diamond( PFormula::top(), act( "a" ) );
    auto b = PFormula::diamond( PFormula::top(), act( "b" ) );
    CHECK( PFormula::conjunction( {} ) == PFormula::top() );
    CHECK( PFormula::disjunction( {} ) == PFormula::bot() );
    CHECK( PFormula::conjunction( { b, PFormula::top(), a, b } ) == PFormula::conj( a, b ) );
    CHECK( PFormula::disjunction( { PFormula::disj( b, a ), PFormula::bot() } ) == PFormula::disj( a, b ) );
    CHECK( PFormula::conjunction( { a } ) == a );
    CHECK( a < PFormula::conj( a, b ) );
    CHECK( PFormula::diamond( PFormula::top(), act( "c" ), { b, a, a } ).pos() == std::vector<PFormula>{ a, b } );
}

TEST_CASE( "formula text round-trips" )
{
    for ( const char* text : { "T", "F", "<a> T", "((<d> T) <c> T)", "<tau> (<c> T & ~<b> T)", "((<a> T | ~<b> T) <c> T)",
                               "~(<a> T & (F <b> <c> T))" } )
    {
        auto f = parse_formula( text );
        CHECK( to_string( f ) == text );
        CHECK( parse_formula( to_string( f ) ) == f );
    }
    CHECK( parse_formula( "( (<d> T) <c> T )" ) == Formula::diamond( dia( "d" ), act( "c" ), Formula::top() ) );
    CHECK( parse_formula( "(<d> T <c> T)" ) == Formula::diamond( dia( "d" ), act( "c" ), Formula::top() ) );
    CHECK( parse_formula( "(<a> T & <b> T & <c> T)" ) == Formula::conj( dia( "a" ), Formula::conj( dia( "b" ), dia( "c" ) ) ) );
    CHECK( parse_formula( "<tau> T" ).label().is_silent() );

    for ( const char* bad : { "", "(T", "T T", "<> T", "(T & T | T)", "<a T", "X" } )
        CHECK_THROWS_AS( parse_formula( bad ), ParseError );
}

TEST_CASE( "model checking on fix_sr" )
{
    auto lts = reflexive_closure( fixtures::load( "fix_sr" ) );
    auto f = parse_formula( "((<d> T) <c> T)" );
    CHECK( satisfies( lts, st( lts, "s" ), f ) );
    CHECK_FALSE( satisfies( lts, st( lts, "r" ), f ) );
    for ( StateId p = 0; p < lts.num_states(); ++p )
        CHECK( satisfies( lts, p, Formula::top() ) );

    ModelChecker mc( lts );
    auto w = mc.diamond_witness( st( lts, "s" ), dia( "d" ), act( "c" ), Formula::top() );
    REQUIRE( w );
    CHECK( w->path == std::vector<StateId>{ st( lts, "s" ) } );
    CHECK( w->target == st( lts, "s2" ) );
    CHECK_FALSE( mc.diamond_witness( st( lts, "r" ), dia( "d" ), act( "c" ), Formula::top() ) );

    CHECK_THROWS_AS( ModelChecker( fixtures::load( "fix_sr" ) ), NotReflexiveError );
}

TEST_CASE( "model checking on fix_pq" )
{
    auto lts = reflexive_closure( fixtures::load( "fix_pq" ) );
    const auto p1 = st( lts, "p1" ), p2 = st( lts, "p2" ), q1 = st( lts, "q1" );
    auto phi1 = parse_formula( "<tau> (<c> T & ~<b> T)" );
    auto phi2 = parse_formula( "((<a> T | ~<b> T) <c> T)" );
    ModelChecker mc( lts );
    CHECK( mc.holds( p1, phi1 ) );
    CHECK( mc.holds( p2, phi1 ) );
    CHECK_FALSE( mc.holds( q1, phi1 ) );
    CHECK( mc.holds( p1, phi2 ) );
    CHECK( mc.holds( p2, phi2 ) );
    CHECK_FALSE( mc.holds( q1, phi2 ) );

    auto w = mc.diamond_witness( p1, Formula::top(), act( "c" ), Formula::top() );
    REQUIRE( w );
    CHECK( w->path == std::vector<StateId>{ p1, p2 } );
    CHECK( w->target == st( lts, "p2c" ) );
}

TEST_CASE( "until semantics: the left side holds along the path" )
{
    // 0 -c-> 3 and 0 -tau-> 1 -a-> 2: only 1 avoids c.
    auto lts = reflexive_closure( parse_aut( "des (0,3,4)\n(0,\"c\",3)\n(0,\"tau\",1)\n(1,\"a\",2)\n" ) );
    ModelChecker mc( lts );
    auto no_c = Formula::neg( dia( "c" ) );
    auto f = Formula::diamond( no_c, act( "a" ), Formula::top() );
    CHECK( mc.sat( f ).elements() == std::vector<StateId>{ 1 } );
    CHECK( mc.sat( f ).is_subset_of( mc.sat( no_c ) ) );
    // Plain reachability ignores the start state.
    CHECK( mc.reach_diamond( no_c, act( "a" ), Formula::top() ).elements() == std::vector<StateId>{ 0, 1 } );
}

TEST_CASE( "enumeration" )
{
    auto d0 = enumerate_pformulas( { act( "a" ) }, 0 );
    CHECK( d0 == std::vector<PFormula>{ PFormula::top(), PFormula::bot() } );

    auto d1 = enumerate_pformulas( { act( "a" ) }, 1 );
    auto has = [ & ]( const std::vector<PFormula>& v, const PFormula& f ) {
        return std::find( v.begin(), v.end(), f ) != v.end();
    };
    CHECK( has( d1, PFormula::diamond( PFormula::top(), act( "a" ) ) ) );
    CHECK( has( d1, PFormula::diamond( PFormula::top(), ActionLabel::silent() ) ) );

    auto d2 = enumerate_pformulas( { act( "b" ), act( "c" ) }, 2 );
    auto phi1 = PFormula::diamond( PFormula::top(), ActionLabel::silent(), { PFormula::diamond( PFormula::top(), act( "c" ) ) },
                                   { PFormula::diamond( PFormula::top(), act( "b" ) ) } );
    CHECK( has( d2, phi1 ) );
    CHECK( std::is_sorted( d2.begin(), d2.end() ) );
    CHECK( std::adjacent_find( d2.begin(), d2.end() ) == d2.end() );
    for ( const auto& f : d2 )
        CHECK( f.depth() <= 2 );

    CHECK_THROWS_AS( enumerate_pformulas( { act( "a" ) }, 4 ), std::invalid_argument );
    CHECK_THROWS_AS( enumerate_pformulas( { act( "a" ), act( "b" ) }, 3, 1000 ), std::invalid_argument );

    auto g2 = enumerate_formulas( { act( "a" ) }, 2 );
    auto neither = Formula::diamond( Formula::neg( dia( "a" ) ), act( "a" ), Formula::top() );
    CHECK( std::find( g2.begin(), g2.end(), neither ) != g2.end() );
}

TEST_CASE( "model checker agrees with literal path semantics" )
{
    for ( std::uint64_t seed = 1; seed <= 12; ++seed )
    {
        auto lts = reflexive_closure( random_lts( { 3 + seed % 4, 2, 1.5, 1.0, seed } ) );
        ModelChecker mc( lts );
        auto formulas = enumerate_formulas( visible( lts ), 2 );
        for ( std::size_t i = 0; i < formulas.size(); i += 7 )
        {
            const auto& f = formulas[ i ];
            for ( StateId p = 0; p < lts.num_states(); ++p )
                CHECK( mc.holds( p, f ) == naive( lts, p, f ) );
        }
    }
}

TEST_CASE( "semantic properties on the fixtures" )
{
    for ( const char* name : { "fix1", "fix_sr", "fix_pq", "fix_g2" } )
    {
        auto lts = reflexive_closure( fixtures::load( name ) );
        ModelChecker mc( lts );
        const auto tc = tau_closure( lts );
        for ( const auto& f : enumerate_formulas( visible( lts ), 2 ) )
        {
            const auto& s = mc.sat( f );
            for ( const auto& t : lts.transitions() )
                if ( t.action == kSilent )
                {
                    if ( is_positive( f ) && s.contains( t.dst ) )
                        CHECK( s.contains( t.src ) );
                    if ( is_negative( f ) && s.contains( t.src ) )
                        CHECK( s.contains( t.dst ) );
                }
            if ( f.kind() == Formula::Kind::diamond && is_positive( f.left() ) )
                CHECK( mc.reach_diamond( f.left(), f.label(), f.right() ) == s );
            if ( !f.has_modality() )
                CHECK( ( s.empty() || s.is_full() ) );
            if ( is_positive( f ) )
                for ( StateId p = 0; p < lts.num_states(); ++p )
                {
                    auto r = constrained_tau_reach( lts, p, s );
                    CHECK( r.empty() == !s.contains( p ) );
                    CHECK( r.is_subset_of( s ) );
                    if ( s.contains( p ) )
                        CHECK( r == ( tc.reach( p ) & s ) );
                }
        }
        for ( const auto& f : enumerate_pformulas( visible( lts ), 2 ) )
        {
            CHECK( mc.sat( f ) == mc.sat( p_embed( f ) ) );
            CHECK( mc.psat_direct( f ) == mc.sat( f ) );
        }
    }
}
