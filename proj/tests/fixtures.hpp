#pragma once

#include "bbapart/json_io.hpp"

#include <stdexcept>
#include <string>

namespace fixtures
{

inline std::string data( const std::string& file ) { return std::string( BBAPART_TEST_DATA_DIR ) + "/" + file; }

// Fixture with its display names: "fix1", "fix_sr", "fix_pq", "fix_g2".
inline bbapart::Lts load( const std::string& stem )
{
    auto lts = bbapart::load_aut( data( stem + ".aut" ) );
    return lts.with_names( bbapart::load_names( data( stem + ".names.json" ), lts.num_states() ) );
}

inline bbapart::StateId st( const bbapart::Lts& lts, const std::string& name )
{
    auto s = lts.find_state( name );
    if ( !s )
        throw std::invalid_argument( "no state " + name );
    return *s;
}

inline bbapart::ActionLabel act( const std::string& name )
{
    return name == "tau" ? bbapart::ActionLabel::silent() : bbapart::ActionLabel::visible( name );
}

} // namespace fixtures
