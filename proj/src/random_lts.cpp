#include "bbapart/harness.hpp"

#include <random>
#include <stdexcept>

namespace bbapart
{

namespace
{

std::string visible_name( std::size_t i )
{
    if ( i < 26 )
        return std::string( 1, static_cast<char>( 'a' + i ) );
    return "a" + std::to_string( i );
}

double unit( std::mt19937_64& rng ) { return static_cast<double>( rng() >> 11 ) * 0x1.0p-53; }

} // namespace

Lts random_lts( const GenParams& g )
{
    if ( g.num_states == 0 )
        throw std::invalid_argument( "random LTS needs at least one state" );
    if ( !( g.visible_density >= 0 ) || !( g.tau_density >= 0 ) )
        throw std::invalid_argument( "densities must be non-negative" );

    std::vector<ActionLabel> labels{ ActionLabel::silent() };
    for ( std::size_t i = 0; i < g.visible_actions; ++i )
        labels.push_back( ActionLabel::visible( visible_name( i ) ) );

    const auto n = static_cast<double>( g.num_states );
    const double tau_pr = g.tau_density / n;
    const double vis_pr = g.visible_actions == 0 ? 0.0 : g.visible_density / ( n * static_cast<double>( g.visible_actions ) );

    std::mt19937_64 rng( g.seed );
    std::vector<LabelledTransition> ts;
    for ( StateId s = 0; s < g.num_states; ++s )
        for ( const auto& label : labels )
        {
            const double pr = label.is_silent() ? tau_pr : vis_pr;
            for ( StateId t = 0; t < g.num_states; ++t )
                if ( unit( rng ) < pr )
                    ts.push_back( { s, label, t } );
        }
    return Lts( g.num_states, ts, 0, {}, labels );
}

std::vector<GenParams> campaign_params( const CampaignParams& c )
{
    if ( c.min_states == 0 || c.min_states > c.max_states )
        throw std::invalid_argument( "invalid campaign state range" );
    std::mt19937_64 rng( c.seed );
    std::vector<GenParams> out;
    const auto span = c.max_states - c.min_states + 1;
    for ( std::size_t i = 0; i < c.count; ++i )
    {
        GenParams g;
        g.num_states = c.min_states + static_cast<std::size_t>( rng() % span );
        g.visible_actions = c.visible_actions;
        g.visible_density = c.visible_density;
        g.tau_density = c.tau_density;
        g.seed = c.seed * 1000003u + i;
        out.push_back( g );
    }
    return out;
}

} // namespace bbapart
