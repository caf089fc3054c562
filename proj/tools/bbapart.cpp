// bbapart: apartness, bisimilarity and distinguishing formulas for .aut transition systems.

#include "bbapart/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace bbapart;
using nlohmann::json;

namespace
{

struct LtsArgs
{
    std::string path;
    std::string tau_label = "tau";
    std::string names;
};

void add_lts_options( CLI::App* cmd, LtsArgs& a, bool positional )
{
    if ( positional )
        cmd->add_option( "file", a.path, ".aut file" )->required();
    else
        cmd->add_option( "--lts", a.path, ".aut file" )->required();
    cmd->add_option( "--tau-label", a.tau_label, "label token of the silent action" )
            ->check( CLI::IsMember( { "tau", "i" } ) );
    cmd->add_option( "--names", a.names, "JSON state name map" );
}

Lts load( const LtsArgs& a )
{
    auto lts = load_aut( a.path, AutOptions{ a.tau_label } );
    if ( !a.names.empty() )
        lts = lts.with_names( load_names( a.names, lts.num_states() ) );
    return lts;
}

StateId state( const Lts& lts, const std::string& s )
{
    auto id = lts.find_state( s );
    if ( !id )
        throw std::invalid_argument( "unknown state '" + s + "'" );
    return *id;
}

ApartnessKind parse_kind( const std::string& k )
{
    for ( auto kind : { ApartnessKind::strong, ApartnessKind::directed_strong, ApartnessKind::branching,
                        ApartnessKind::directed_branching } )
        if ( to_string( kind ) == k )
            return kind;
    throw std::invalid_argument( "unknown kind '" + k + "'" );
}

void print( const json& j ) { std::cout << j.dump( 2 ) << '\n'; }

json states_json( const Lts& lts, const std::vector<StateId>& states )
{
    json out = json::array();
    for ( auto s : states )
        out.push_back( lts.state_name( s ) );
    return out;
}

} // namespace

int main( int argc, char** argv )
{
    CLI::App app{ "Apartness, bisimilarity and distinguishing formulas for labelled transition systems" };
    app.require_subcommand( 1 );

    LtsArgs lts_args;
    std::string p_arg, q_arg, kind_arg, formula_arg, state_arg, out_path;
    bool nonreflexive = false, do_simplify = false, campaign = false;

    auto* parse_cmd = app.add_subcommand( "parse", "read an .aut file and print statistics" );
    add_lts_options( parse_cmd, lts_args, true );

    auto* check_cmd = app.add_subcommand( "check", "decide apartness and bisimilarity of two states" );
    add_lts_options( check_cmd, lts_args, false );
    check_cmd->add_option( "--kind", kind_arg, "strong|dstrong|branching|dbranching" )
            ->required()
            ->check( CLI::IsMember( { "strong", "dstrong", "branching", "dbranching" } ) );
    check_cmd->add_flag( "--nonreflexive", nonreflexive, "use the four-rule engine without closure (dbranching)" );
    check_cmd->add_option( "p", p_arg )->required();
    check_cmd->add_option( "q", q_arg )->required();

    auto* dist_cmd = app.add_subcommand( "distinguish", "P-formula that holds in p but not in q" );
    add_lts_options( dist_cmd, lts_args, false );
    dist_cmd->add_flag( "--simplify", do_simplify, "also print a simplified formula" );
    dist_cmd->add_option( "p", p_arg )->required();
    dist_cmd->add_option( "q", q_arg )->required();

    auto* mc_cmd = app.add_subcommand( "mc", "model check a formula in one state" );
    add_lts_options( mc_cmd, lts_args, false );
    mc_cmd->add_option( "--state", state_arg )->required();
    mc_cmd->add_option( "--formula", formula_arg )->required();

    auto* conv_cmd = app.add_subcommand( "convert", "turn a distinguishing formula into a P-formula" );
    add_lts_options( conv_cmd, lts_args, false );
    conv_cmd->add_option( "--formula", formula_arg )->required();
    conv_cmd->add_option( "p", p_arg )->required();
    conv_cmd->add_option( "q", q_arg )->required();

    GenParams gen;
    auto* rand_cmd = app.add_subcommand( "random", "generate a random LTS" );
    rand_cmd->add_option( "--states", gen.num_states )->check( CLI::PositiveNumber );
    rand_cmd->add_option( "--actions", gen.visible_actions );
    rand_cmd->add_option( "--vdensity", gen.visible_density )->check( CLI::NonNegativeNumber );
    rand_cmd->add_option( "--tdensity", gen.tau_density )->check( CLI::NonNegativeNumber );
    rand_cmd->add_option( "--seed", gen.seed );
    rand_cmd->add_option( "-o,--output", out_path, "output file (stdout when absent)" );

    CampaignParams camp;
    auto* val_cmd = app.add_subcommand( "validate", "run the property suites" );
    auto* val_lts = val_cmd->add_option( "--lts", lts_args.path, ".aut file" );
    val_cmd->add_option( "--tau-label", lts_args.tau_label )->check( CLI::IsMember( { "tau", "i" } ) );
    auto* val_camp = val_cmd->add_flag( "--campaign", campaign, "validate a batch of random LTSs" );
    val_cmd->add_option( "--count", camp.count );
    val_cmd->add_option( "--seed", camp.seed );
    val_lts->excludes( val_camp );

    try
    {
        app.parse( argc, argv );
    }
    catch ( const CLI::ParseError& e )
    {
        auto code = app.exit( e );
        return code == 0 ? 0 : 2;
    }

    try
    {
        if ( *parse_cmd )
        {
            print( lts_stats( load( lts_args ) ) );
        }
        else if ( *check_cmd )
        {
            auto lts = load( lts_args );
            auto kind = parse_kind( kind_arg );
            if ( ( kind == ApartnessKind::strong || kind == ApartnessKind::directed_strong ) && lts.has_silent_steps() )
                std::cerr << "warning: strong relations treat tau as an ordinary action\n";
            print( to_json( lts, check_pair( lts, kind, state( lts, p_arg ), state( lts, q_arg ), nonreflexive ) ) );
        }
        else if ( *dist_cmd )
        {
            auto lts = load( lts_args );
            const auto p = state( lts, p_arg ), q = state( lts, q_arg );
            try
            {
                auto d = distinguish_pair( lts, p, q );
                json j = { { "apart", true },
                           { "formula", to_string( d.formula ) },
                           { "ast", to_json( d.formula ) },
                           { "derivation", to_json( lts, *d.derivation ) } };
                if ( do_simplify )
                    j[ "simplified" ] = to_string( simplify( d.formula, lts ) );
                print( j );
            }
            catch ( const NotApartError& e )
            {
                print( { { "apart", false }, { "bisimilar", true }, { "message", e.what() } } );
            }
        }
        else if ( *mc_cmd )
        {
            auto lts = load( lts_args );
            const auto p = state( lts, state_arg );
            const auto f = parse_formula( formula_arg );
            const auto closed = reflexive_closure( lts );
            ModelChecker mc( closed );
            json j = { { "state", lts.state_name( p ) }, { "formula", to_string( f ) }, { "holds", mc.holds( p, f ) } };
            if ( f.kind() == Formula::Kind::diamond )
                if ( auto w = mc.diamond_witness( p, f.left(), f.label(), f.right() ) )
                    j[ "witness" ] = { { "path", states_json( lts, w->path ) }, { "target", lts.state_name( w->target ) } };
            print( j );
        }
        else if ( *conv_cmd )
        {
            auto lts = load( lts_args );
            const auto p = state( lts, p_arg ), q = state( lts, q_arg );
            const auto f = parse_formula( formula_arg );
            const auto closed = reflexive_closure( lts );
            auto c = convert_hmlu( closed, f, p, q );
            auto v = verify_distinguishes( closed, p_embed( c.formula ), p, q );
            json j = { { "input", to_string( f ) },
                       { "formula", to_string( c.formula ) },
                       { "ast", to_json( c.formula ) },
                       { "direction", to_string( v.direction ) } };
            if ( c.trace )
                j[ "trace" ] = to_json( lts, *c.trace );
            print( j );
        }
        else if ( *rand_cmd )
        {
            auto lts = random_lts( gen );
            if ( out_path.empty() )
                write_aut( std::cout, lts );
            else
            {
                std::ofstream out( out_path );
                if ( !out )
                    throw std::invalid_argument( "cannot write " + out_path );
                write_aut( out, lts );
            }
        }
        else if ( *val_cmd )
        {
            if ( campaign )
            {
                auto r = run_campaign( camp );
                json failures = json::array();
                for ( std::size_t i = 0; i < r.reports.size(); ++i )
                    if ( !r.reports[ i ].all_pass() )
                        failures.push_back( { { "index", i },
                                              { "states", r.instances[ i ].num_states },
                                              { "seed", r.instances[ i ].seed },
                                              { "report", to_json( r.reports[ i ] ) } } );
                print( { { "pass", r.all_pass() }, { "count", r.reports.size() }, { "failures", failures } } );
                return r.all_pass() ? 0 : 3;
            }
            if ( lts_args.path.empty() )
                throw std::invalid_argument( "validate needs --lts or --campaign" );
            auto r = cross_validate( load( lts_args ) );
            print( to_json( r ) );
            return r.all_pass() ? 0 : 3;
        }
    }
    catch ( const InvariantViolation& e )
    {
        std::cerr << "internal invariant violated: " << e.what() << '\n';
        return 3;
    }
    catch ( const std::exception& e )
    {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
