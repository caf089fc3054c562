// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "fixtures.hpp"

#include <iostream>

using namespace bbapart;
using fixtures::st;

namespace
{

struct Corpus
{
    std::vector<std::string> names;
    std::vector<ValidationReport> reports;
};

Corpus build_corpus()
{
    Corpus c;
    for ( const char* name : { "fix1", "fix_sr", "fix_pq", "fix_g2" } )
    {
        c.names.emplace_back( name );
        c.reports.push_back( cross_validate( fixtures::load( name ) ) );
    }
    auto campaign = run_campaign( {} );
    for ( std::size_t i = 0; i < campaign.reports.size(); ++i )
    {
        c.names.push_back( "random #" + std::to_string( i ) + " (seed " + std::to_string( campaign.instances[ i ].seed ) + ")" );
        c.reports.push_back( std::move( campaign.reports[ i ] ) );
    }
    return c;
}

// Every named suite must be present and pass on every corpus member.
bool suites_pass( const Corpus& c, const std::vector<std::string>& suites, std::string& detail )
{
    std::size_t checks = 0;
    for ( std::size_t i = 0; i < c.reports.size(); ++i )
        for ( const auto& s : suites )
        {
            const auto* e = c.reports[ i ].find( s );
            if ( !e )
            {
                detail = s + " missing on " + c.names[ i ];
                return false;
            }
            if ( !e->pass )
            {
                detail = s + " fails on " + c.names[ i ] + ": " + e->counterexample->relation;
                return false;
            }
            checks += e->checks;
        }
    detail = std::to_string( c.reports.size() ) + " LTSs, " + std::to_string( checks ) + " checks";
    return true;
}

struct Example
{
    std::string what;
    bool ok;
};

std::vector<Example> fixture_examples()
{
    std::vector<Example> out;
    auto add = [ & ]( std::string what, bool ok ) { out.push_back( { std::move( what ), ok } ); };

    auto fix1 = fixtures::load( "fix1" );
    {
        const auto s = st( fix1, "s" ), t = st( fix1, "t" ), q = st( fix1, "q" ), p = st( fix1, "p" );
        add( "FIX-1 s ~s t", strong_bisimilarity( fix1 ).holds( s, t ) );
        add( "FIX-1 q #s p", strong_apartness( fix1 ).holds( q, p ) );
        auto ds = directed_strong_apartness( fix1 );
        add( "FIX-1 q >ds p and p >ds q", ds.holds( q, p ) && ds.holds( p, q ) );
    }

    auto sr = fixtures::load( "fix_sr" );
    {
        const auto s = st( sr, "s" ), r = st( sr, "r" );
        add( "FIX-sr s >db r", directed_branching_apartness( sr ).holds( s, r ) );
        auto d = distinguish_pair( sr, s, r );
        add( "FIX-sr distinguish gives ((<d> T) <c> T)", to_string( d.formula ) == "((<d> T) <c> T)" );
        auto closed = reflexive_closure( sr );
        ModelChecker mc( closed );
        add( "FIX-sr s |= formula, r |/= formula", mc.holds( s, d.formula ) && !mc.holds( r, d.formula ) );
    }

    auto pq = reflexive_closure( fixtures::load( "fix_pq" ) );
    {
        const auto p1 = st( pq, "p1" ), p2 = st( pq, "p2" ), q1 = st( pq, "q1" );
        ModelChecker mc( pq );
        auto phi1 = parse_formula( "<tau> (<c> T & ~<b> T)" );
        auto phi2 = parse_formula( "((<a> T | ~<b> T) <c> T)" );
        add( "FIX-pq phi1 on p1, p2, q1", mc.holds( p1, phi1 ) && mc.holds( p2, phi1 ) && !mc.holds( q1, phi1 ) );
        add( "FIX-pq phi2 on p1, p2, q1", mc.holds( p1, phi2 ) && mc.holds( p2, phi2 ) && !mc.holds( q1, phi2 ) );
        add( "FIX-pq convert (phi2, p1, q1)", to_string( pformula_from_hmlu( pq, phi2, p1, q1 ) ) ==
                                                      "((<a> T & <b> T) <tau> (<c> T & (~<a> T & ~<b> T)))" );
        add( "FIX-pq convert (phi2, p2, q1)", to_string( pformula_from_hmlu( pq, phi2, p2, q1 ) ) == "(<a> T | <b> T)" );
    }

    auto g2 = fixtures::load( "fix_g2" );
    {
        const auto q0 = st( g2, "q0" ), p0 = st( g2, "p0" );
        add( "FIX-G2 q0 >db p0", directed_branching_apartness( g2 ).holds( q0, p0 ) );
        auto v = verify_distinguishes( g2, parse_formula( "((<d> <e> T) <d> ~<e> T)" ), q0, p0 );
        add( "FIX-G2 formula verifies leftHolds", v.distinguishes && v.direction == Direction::left_holds );
        auto phi = formula_from_derivation( g2, *extract_derivation( g2, directed_branching_apartness( g2 ), q0, p0 ) );
        add( "FIX-G2 synthesized formula", to_string( phi ) == "((<d> <e> T) <d> ~<e> T)" );
    }
    return out;
}

} // namespace

int main()
{
    bool all = true;
    auto report = [ & ]( int n, const std::string& title, bool ok, const std::string& detail ) {
        all = all && ok;
        std::cout << ( ok ? "PASS" : "FAIL" ) << " criterion " << n << ": " << title << " (" << detail << ")\n";
    };

    try
    {
        {
            auto examples = fixture_examples();
            bool ok = true;
            std::string detail = std::to_string( examples.size() ) + " examples";
            for ( const auto& e : examples )
                if ( !e.ok )
                {
                    ok = false;
                    detail = "failed: " + e.what;
                    break;
                }
            report( 1, "fixture example regressions", ok, detail );
        }

        const auto corpus = build_corpus();
        const std::vector<std::pair<std::string, std::vector<std::string>>> criteria = {
            { "duality of apartness and bisimilarity",
              { "duality.strong", "duality.dstrong", "duality.branching", "duality.dbranching" } },
            { "symmetric closure theorems", { "symmetric_closure.branching", "symmetric_closure.strong" } },
            { "reflexive-closure invariance and four-rule equivalence",
              { "reflexive_invariance", "nonreflexive_equivalence" } },
            { "tau-extension and stuttering", { "tau_extension", "stuttering.apartness", "stuttering.bisim" } },
            { "tau-transfer and simpler diamond", { "logic.tau_transfer", "logic.simpler_diamond" } },
            { "synthesis soundness and completeness, good-formula polarity",
              { "derivation.valid", "distinguish.derivation_soundness", "distinguish.good_formula" } },
        };
        int n = 2;
        for ( const auto& [ title, suites ] : criteria )
        {
            std::string detail;
            const bool ok = suites_pass( corpus, suites, detail );
            report( n++, title, ok, detail );
        }

        {
            auto small = run_campaign( { 30, 8, 2, 5 } );
            Corpus c;
            for ( std::size_t i = 0; i < small.reports.size(); ++i )
            {
                c.names.push_back( "small #" + std::to_string( i ) + " (seed " + std::to_string( small.instances[ i ].seed ) + ")" );
                c.reports.push_back( std::move( small.reports[ i ] ) );
            }
            std::string detail;
            const bool ok = suites_pass( c, { "characterization" }, detail );
            report( 8, "logical characterization at depth 2", ok, detail );
        }
    }
    catch ( const std::exception& e )
    {
        std::cout << "FAIL: uncaught exception: " << e.what() << '\n';
        return 1;
    }
    return all ? 0 : 1;
}
