#include "fixtures.hpp"

#include <doctest.h>

#include <algorithm>

using namespace bbapart;
using fixtures::st;

namespace
{

std::vector<Lts> corpus()
{
    std::vector<Lts> out{ fixtures::load( "fix1" ), fixtures::load( "fix_sr" ), fixtures::load( "fix_pq" ),
                          fixtures::load( "fix_g2" ) };
    for ( std::uint64_t seed = 100; seed < 160; ++seed )
        out.push_back( random_lts( { 2 + seed % 7, 2, 1.5, 0.7, seed } ) );
    return out;
}

ActionId action_id( const Lts& lts, const std::string& name )
{
    return *lts.find_action( fixtures::act( name ) );
}

} // namespace

TEST_CASE( "strong apartness on fix1" )
{
    auto lts = fixtures::load( "fix1" );
    const auto s = st( lts, "s" ), t = st( lts, "t" ), q = st( lts, "q" ), p = st( lts, "p" );
    auto sa = strong_apartness( lts );
    CHECK_FALSE( sa.holds( s, t ) );
    CHECK_FALSE( sa.holds( st( lts, "s'" ), t ) );
    CHECK( sa.holds( q, p ) );
    CHECK( sa.holds( p, q ) );
    CHECK( sa.is_symmetric() );

    auto ds = directed_strong_apartness( lts );
    CHECK( ds.holds( q, p ) );
    CHECK( ds.holds( p, q ) );
    CHECK_FALSE( ds.holds( s, t ) );
    // A deadlock has no witness step.
    CHECK_FALSE( ds.holds( st( lts, "p3" ), s ) );
    CHECK( ds.holds( s, st( lts, "p3" ) ) );

    auto two = parse_aut( "des (0,0,2)\n" );
    CHECK( strong_apartness( two ).size() == 0 );
}

TEST_CASE( "branching apartness on fix_sr" )
{
    auto lts = fixtures::load( "fix_sr" );
    const auto s = st( lts, "s" ), r = st( lts, "r" );
    auto b = branching_apartness( lts );
    CHECK( b.holds( s, r ) );
    CHECK( b.holds( r, s ) );
    CHECK_FALSE( b.holds( st( lts, "s1" ), st( lts, "r1" ) ) );
    for ( StateId x = 0; x < lts.num_states(); ++x )
        CHECK_FALSE( b.holds( x, x ) );

    auto db = directed_branching_apartness( lts );
    CHECK( db.holds( s, r ) );
    CHECK( directed_branching_apartness_nonreflexive( lts ).holds( s, r ) );
}

TEST_CASE( "directed branching apartness on fix_g2 and fix_pq" )
{
    auto g2 = fixtures::load( "fix_g2" );
    CHECK( directed_branching_apartness( g2 ).holds( st( g2, "q0" ), st( g2, "p0" ) ) );
    // p0 ->tau p2 and q0 cannot idle in a state like p2.
    CHECK( directed_branching_apartness( g2 ).holds( st( g2, "p0" ), st( g2, "q0" ) ) );

    auto pq = fixtures::load( "fix_pq" );
    auto db = directed_branching_apartness( pq );
    const auto p1 = st( pq, "p1" ), p2 = st( pq, "p2" );
    CHECK( db.holds( p1, p2 ) );
    CHECK_FALSE( db.holds( p2, p1 ) );
    CHECK( db.round( p1, p2 ) == 1 );
    auto d = extract_derivation( pq, db, p1, p2 );
    CHECK( d->action == action_id( pq, "a" ) );
    CHECK( d->children.empty() );
}

TEST_CASE( "single state without transitions" )
{
    auto lts = parse_aut( "des (0,0,1)\n" );
    CHECK( directed_branching_apartness_nonreflexive( lts ).size() == 0 );
    CHECK( directed_branching_apartness( lts ).size() == 0 );
}

TEST_CASE( "derivation for fix_sr" )
{
    auto lts = fixtures::load( "fix_sr" );
    auto db = directed_branching_apartness( lts );
    const auto s = st( lts, "s" ), r = st( lts, "r" );
    auto d = extract_derivation( lts, db, s, r );
    CHECK( d->action == action_id( lts, "c" ) );
    CHECK( d->witness_target == st( lts, "s2" ) );
    REQUIRE( d->children.size() == 1 );
    const auto& c = d->children[ 0 ];
    CHECK( c.q_prime == st( lts, "r1" ) );
    CHECK( c.q_double_prime == st( lts, "r3" ) );
    CHECK( c.tag == ChildTag::left_pair );
    CHECK( c.sub->left == s );
    CHECK( c.sub->right == st( lts, "r1" ) );
    CHECK( c.sub->action == action_id( lts, "d" ) );
    CHECK( c.sub->witness_target == st( lts, "s3" ) );
    CHECK( c.sub->children.empty() );
    CHECK( c.sub->round < d->round );
    CHECK_NOTHROW( validate_derivation( lts, *d ) );
    CHECK( derivation_size( *d ) == 2 );
}

TEST_CASE( "derivation for fix_g2" )
{
    auto lts = fixtures::load( "fix_g2" );
    auto db = directed_branching_apartness( lts );
    auto d = extract_derivation( lts, db, st( lts, "q0" ), st( lts, "p0" ) );
    CHECK( d->action == action_id( lts, "d" ) );
    CHECK( d->witness_target == st( lts, "q2" ) );
    REQUIRE( d->children.size() == 2 );

    // q0 ->>tau p0 ->d p1: p1 does an e-step that q2 cannot.
    CHECK( d->children[ 0 ].q_prime == st( lts, "p0" ) );
    CHECK( d->children[ 0 ].tag == ChildTag::right_pair_backward );
    CHECK( d->children[ 0 ].sub->left == st( lts, "p1" ) );
    CHECK( d->children[ 0 ].sub->action == action_id( lts, "e" ) );

    // The sub-derivation Sigma: q0 apart p2 via q0 ->d q1, whose e-step p3 lacks.
    CHECK( d->children[ 1 ].q_prime == st( lts, "p2" ) );
    CHECK( d->children[ 1 ].tag == ChildTag::left_pair );
    const auto& sigma = *d->children[ 1 ].sub;
    CHECK( sigma.witness_target == st( lts, "q1" ) );
    REQUIRE( sigma.children.size() == 1 );
    CHECK( sigma.children[ 0 ].tag == ChildTag::right_pair_forward );
    CHECK( sigma.children[ 0 ].sub->left == st( lts, "q1" ) );
    CHECK( sigma.children[ 0 ].sub->right == st( lts, "p3" ) );
    CHECK_NOTHROW( validate_derivation( lts, *d ) );
}

TEST_CASE( "derivation errors" )
{
    auto lts = fixtures::load( "fix_sr" );
    auto db = directed_branching_apartness( lts );
    CHECK_THROWS_AS( extract_derivation( lts, db, 0, 0 ), NotApartError );

    auto d = extract_derivation( lts, db, st( lts, "s" ), st( lts, "r" ) );
    Derivation broken = *d;
    broken.witness_target = st( lts, "s4" );
    CHECK_THROWS_AS( validate_derivation( lts, broken ), InvariantViolation );

    Derivation uncovered = *d;
    uncovered.children.clear();
    CHECK_THROWS_AS( validate_derivation( lts, uncovered ), InvariantViolation );

    Derivation flat = *d;
    auto child = std::make_shared<Derivation>( *d->children[ 0 ].sub );
    child->round = d->round;
    flat.children[ 0 ].sub = child;
    CHECK_THROWS_AS( validate_derivation( lts, flat ), InvariantViolation );
}

TEST_CASE( "relations across the corpus" )
{
    for ( const auto& lts : corpus() )
    {
        const auto n = lts.num_states();
        auto s = strong_apartness( lts );
        auto ds = directed_strong_apartness( lts );
        auto b = branching_apartness( lts );
        auto db = directed_branching_apartness( lts );

        CHECK( ds.symmetric_closure().same_pairs( s ) );
        CHECK( db.symmetric_closure().same_pairs( b ) );
        CHECK( b.same_pairs( branching_apartness( reflexive_closure( lts ) ) ) );
        CHECK( db.same_pairs( directed_branching_apartness_nonreflexive( lts ) ) );
        CHECK( check_tau_extension( lts, db ).empty() );
        for ( const auto* rel : { &s, &ds, &b, &db } )
        {
            CHECK( rel->rounds() <= n * n );
            for ( StateId p = 0; p < n; ++p )
                CHECK_FALSE( rel->holds( p, p ) );
        }
        for ( StateId p = 0; p < n; ++p )
            for ( StateId q = 0; q < n; ++q )
                if ( db.holds( p, q ) )
                    CHECK_NOTHROW( validate_derivation( lts, *extract_derivation( lts, db, p, q ) ) );
    }
}

TEST_CASE( "tau extension reports a tampered relation" )
{
    auto lts = fixtures::load( "fix_sr" );
    auto db = directed_branching_apartness( lts );
    // s apart r forces s apart r1, since r ->tau r1.
    const auto s = st( lts, "s" ), r = st( lts, "r" ), r1 = st( lts, "r1" );
    REQUIRE( db.holds( s, r ) );
    db.remove( s, r1 );
    auto v = check_tau_extension( lts, db );
    CHECK( std::any_of( v.begin(), v.end(), [ & ]( const TauExtensionViolation& x ) {
        return x.p == s && x.p_prime == s && x.q == r && x.q_prime == r1;
    } ) );
}
