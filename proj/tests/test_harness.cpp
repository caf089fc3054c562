#include "fixtures.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace bbapart;
using fixtures::st;

namespace
{

std::string slurp( const std::string& path )
{
    std::ifstream in( path );
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE( "generator is deterministic" )
{
    GenParams g{ 6, 3, 2.0, 1.0, 7 };
    CHECK( random_lts( g ) == random_lts( g ) );
    CHECK( to_aut( random_lts( g ) ) == to_aut( random_lts( g ) ) );
    auto other = g;
    other.seed = 8;
    CHECK_FALSE( random_lts( g ) == random_lts( other ) );

    auto golden = random_lts( { 8, 2, 1.5, 0.5, 42 } );
    CHECK( to_aut( golden ) == slurp( fixtures::data( "random_8_2_seed42.aut" ) ) );
}

TEST_CASE( "generator parameters" )
{
    for ( std::uint64_t seed = 1; seed <= 20; ++seed )
    {
        auto lts = random_lts( { 6, 2, 1.5, 0.0, seed } );
        CHECK_FALSE( lts.has_silent_steps() );
        CHECK( lts.num_actions() == 3 );
        CHECK( lts.num_states() == 6 );
    }
    auto many = random_lts( { 2, 28, 1.0, 0.0, 1 } );
    CHECK( many.find_action( ActionLabel::visible( "z" ) ) );
    CHECK( many.find_action( ActionLabel::visible( "a27" ) ) );
    CHECK_THROWS_AS( random_lts( { 0, 2, 1.0, 1.0, 1 } ), std::invalid_argument );

    // Mean out-degree tracks the densities.
    std::size_t tau = 0, vis = 0, states = 0;
    for ( std::uint64_t seed = 1; seed <= 200; ++seed )
    {
        auto lts = random_lts( { 10, 2, 1.5, 0.7, seed } );
        states += lts.num_states();
        for ( const auto& t : lts.transitions() )
            ( t.action == kSilent ? tau : vis ) += 1;
    }
    CHECK( static_cast<double>( tau ) / states == doctest::Approx( 0.7 ).epsilon( 0.1 ) );
    CHECK( static_cast<double>( vis ) / states == doctest::Approx( 1.5 ).epsilon( 0.1 ) );
}

TEST_CASE( "campaign instances" )
{
    auto a = campaign_params( {} );
    REQUIRE( a.size() == 200 );
    CHECK( a[ 5 ].seed == 1000003u + 5 );
    for ( const auto& g : a )
    {
        CHECK( g.num_states >= 2 );
        CHECK( g.num_states <= 8 );
    }
    CHECK_THROWS_AS( campaign_params( { 1, 1, 5, 4 } ), std::invalid_argument );
}

TEST_CASE( "cross validation passes on the fixtures" )
{
    for ( const char* name : { "fix1", "fix_sr", "fix_pq", "fix_g2" } )
    {
        auto report = cross_validate( fixtures::load( name ) );
        CHECK( report.all_pass() );
        for ( const auto& e : report.entries )
        {
            INFO( name << " " << e.name );
            CHECK( e.pass );
            CHECK_FALSE( e.counterexample );
        }
        CHECK( report.find( "distinguish.hmlu_conversion" ) );
        CHECK( report.find( "characterization" ) == nullptr );
    }
    auto small = cross_validate( random_lts( { 4, 2, 1.5, 0.7, 3 } ) );
    CHECK( small.all_pass() );
    REQUIRE( small.find( "characterization" ) );
    CHECK( small.find( "characterization" )->checks > 0 );
}

TEST_CASE( "tampering is caught with a replayable counterexample" )
{
    auto lts = fixtures::load( "fix_sr" );
    const auto s = st( lts, "s" ), r = st( lts, "r" );
    ValidateOptions opt;
    opt.tamper = [ & ]( ApartnessKind k, DirectedPairRelation& rel ) {
        if ( k == ApartnessKind::directed_branching )
            rel.remove( s, r );
    };
    auto report = cross_validate( lts, opt );
    CHECK_FALSE( report.all_pass() );
    const auto* e = report.find( "duality.dbranching" );
    REQUIRE( e );
    CHECK_FALSE( e->pass );
    REQUIRE( e->counterexample );
    CHECK( e->counterexample->states == std::vector<StateId>{ s, r } );

    // Replaying on the untouched engines shows the pair really is apart and not bisimilar.
    const auto& cx = e->counterexample->states;
    CHECK( directed_branching_apartness( lts ).holds( cx[ 0 ], cx[ 1 ] ) );
    CHECK_FALSE( directed_branching_bisimilarity( lts ).holds( cx[ 0 ], cx[ 1 ] ) );
    CHECK( report.find( "duality.strong" )->pass );

    auto j = to_json( report );
    CHECK( j[ "pass" ] == false );
}

TEST_CASE( "check_pair" )
{
    auto sr = fixtures::load( "fix_sr" );
    const auto s = st( sr, "s" ), r = st( sr, "r" );
    auto c = check_pair( sr, ApartnessKind::directed_branching, s, r );
    CHECK( c.apart );
    CHECK( c.apart_reverse );
    CHECK_FALSE( c.bisimilar );
    REQUIRE( c.derivation );
    CHECK( c.derivation->left == s );

    auto same = check_pair( sr, ApartnessKind::branching, st( sr, "s1" ), st( sr, "r1" ) );
    CHECK_FALSE( same.apart );
    CHECK( same.bisimilar );
    CHECK_FALSE( same.derivation );

    auto pq = fixtures::load( "fix_pq" );
    auto d = check_pair( pq, ApartnessKind::directed_branching, st( pq, "p2" ), st( pq, "p1" ) );
    CHECK_FALSE( d.apart );
    CHECK( d.apart_reverse );
    CHECK( d.bisimilar );

    auto nr = check_pair( pq, ApartnessKind::directed_branching, st( pq, "p1" ), st( pq, "p2" ), true );
    CHECK( nr.apart );

    auto strong = check_pair( fixtures::load( "fix1" ), ApartnessKind::strong, 0, 2 );
    CHECK_FALSE( strong.apart );
    CHECK( strong.bisimilar );

    for ( auto kind : { ApartnessKind::strong, ApartnessKind::directed_strong, ApartnessKind::branching,
                        ApartnessKind::directed_branching } )
        for ( StateId x = 0; x < pq.num_states(); ++x )
        {
            auto self = check_pair( pq, kind, x, x );
            CHECK_FALSE( self.apart );
            CHECK( self.bisimilar );
        }
}

TEST_CASE( "distinguish_pair" )
{
    auto sr = fixtures::load( "fix_sr" );
    auto d = distinguish_pair( sr, st( sr, "s" ), st( sr, "r" ) );
    CHECK( to_string( d.formula ) == "((<d> T) <c> T)" );
    REQUIRE( d.derivation );
    try
    {
        distinguish_pair( sr, st( sr, "s1" ), st( sr, "r1" ) );
        FAIL( "expected NotApartError" );
    }
    catch ( const NotApartError& e )
    {
        CHECK( std::string( e.what() ) == "not apart: s1 and r1 are directed branching bisimilar" );
    }
}

TEST_CASE( "JSON output is stable" )
{
    auto sr = fixtures::load( "fix_sr" );
    auto c = check_pair( sr, ApartnessKind::directed_branching, st( sr, "s" ), st( sr, "r" ) );
    CHECK( to_json( sr, c ).dump() ==
           R"({"apart":true,"apartReverse":true,"bisimilar":false,"derivation":{"children":[{"qDoublePrime":"r3",)"
           R"("qPrime":"r1","sub":{"children":[],"conclusion":{"kind":"db","left":"s","right":"r1"},"round":1,)"
           R"("witness":{"from":"s","label":"d","to":"s3"}},"tag":"left"}],"conclusion":{"kind":"db","left":"s",)"
           R"("right":"r"},"round":2,"witness":{"from":"s","label":"c","to":"s2"}},"kind":"dbranching","p":"s","q":"r"})" );
    CHECK( to_json( sr, c ).dump() == to_json( sr, check_pair( sr, ApartnessKind::directed_branching, 0, 5 ) ).dump() );

    auto f = PFormula::diamond( PFormula::top(), ActionLabel::silent(), {}, { PFormula::diamond( PFormula::top(), ActionLabel::visible( "a" ) ) } );
    CHECK( to_json( f ).dump() ==
           R"({"kind":"diamond","label":"tau","left":{"kind":"top"},"neg":[{"kind":"diamond","label":"a",)"
           R"("left":{"kind":"top"},"neg":[],"pos":[]}],"pos":[]})" );
    CHECK( to_json( parse_formula( "~<a> T" ) ).dump() ==
           R"({"child":{"kind":"diamond","label":"a","left":{"kind":"top"},"right":{"kind":"top"}},"kind":"neg"})" );

    auto stats = lts_stats( sr );
    CHECK( stats[ "states" ] == 9 );
    CHECK( stats[ "transitions" ] == 7 );
}
