#include "bbapart/harness.hpp"

#include <algorithm>
#include <random>

namespace bbapart
{

bool ValidationReport::all_pass() const
{
    return std::all_of( entries.begin(), entries.end(), []( const ReportEntry& e ) { return e.pass; } );
}

const ReportEntry* ValidationReport::find( std::string_view name ) const
{
    for ( const auto& e : entries )
        if ( e.name == name )
            return &e;
    return nullptr;
}

bool CampaignResult::all_pass() const
{
    return std::all_of( reports.begin(), reports.end(), []( const ValidationReport& r ) { return r.all_pass(); } );
}

namespace
{

class Entry
{
public:
    explicit Entry( std::string name ) : _e{ std::move( name ), true, std::nullopt, 0 } {}

    // Records one instance; the counterexample of the first failure is kept.
    template <class MakeCex>
    void check( bool ok, MakeCex&& cex )
    {
        ++_e.checks;
        if ( !ok && _e.pass )
        {
            _e.pass = false;
            _e.counterexample = cex();
        }
    }

    ReportEntry done() { return std::move( _e ); }

private:
    ReportEntry _e;
};

std::string yn( bool b ) { return b ? "true" : "false"; }

std::string pair_str( StateId p, StateId q ) { return "(" + std::to_string( p ) + "," + std::to_string( q ) + ")"; }

Counterexample cex( std::vector<StateId> states, std::string relation, std::optional<std::string> formula = {} )
{
    return { std::move( states ), std::move( relation ), std::move( formula ) };
}

class Validator
{
public:
    Validator( const Lts& lts, const ValidateOptions& options )
            : _lts{ lts }, _opt{ options }, _closed{ reflexive_closure( lts ) }, _tc{ _closed }, _n{ lts.num_states() }
    {
        _apart[ 0 ] = strong_apartness( lts );
        _apart[ 1 ] = directed_strong_apartness( lts );
        _apart[ 2 ] = branching_apartness( lts );
        _apart[ 3 ] = directed_branching_apartness( lts );
        for ( std::size_t k = 0; k < 4; ++k )
            _bisim[ k ] = bisimilarity( lts, kinds[ k ] );

        for ( ActionId a = 1; a < lts.num_actions(); ++a )
            _visible.push_back( lts.action( a ) );
    }

    ValidationReport run()
    {
        ValidationReport r;
        for ( std::size_t k = 0; k < 4; ++k )
            r.entries.push_back( duality( k ) );
        r.entries.push_back( symmetric_closure( "symmetric_closure.branching", 3, 2 ) );
        r.entries.push_back( symmetric_closure( "symmetric_closure.strong", 1, 0 ) );
        r.entries.push_back( reflexive_invariance() );
        r.entries.push_back( nonreflexive_equivalence() );
        r.entries.push_back( tau_extension() );
        r.entries.push_back( apartness_stuttering() );
        r.entries.push_back( bisim_stuttering() );
        r.entries.push_back( conjunction_corollary() );
        r.entries.push_back( bisim_fixpoint() );
        r.entries.push_back( order_independence() );
        r.entries.push_back( derivations() );

        ModelChecker mc( _closed );
        const auto formulas = enumerate_formulas( _visible, _opt.formula_depth );
        const auto pformulas = enumerate_pformulas( _visible, _opt.formula_depth );
        r.entries.push_back( tau_transfer( mc, formulas ) );
        r.entries.push_back( simpler_diamond( mc, formulas ) );
        r.entries.push_back( embedding( mc, pformulas ) );
        r.entries.push_back( modality_free( mc ) );
        r.entries.push_back( constrained_reach( mc, formulas ) );
        r.entries.push_back( derivation_soundness() );
        r.entries.push_back( good_formulas( mc, formulas, pformulas ) );
        r.entries.push_back( hmlu_conversion( mc, formulas ) );
        if ( _n <= _opt.characterization_max_states )
            r.entries.push_back( characterization( mc, formulas, pformulas ) );
        return r;
    }

private:
    static constexpr ApartnessKind kinds[ 4 ] = { ApartnessKind::strong, ApartnessKind::directed_strong,
                                                  ApartnessKind::branching, ApartnessKind::directed_branching };

    const DirectedPairRelation& db() const { return _apart[ 3 ]; }
    const DirectedPairRelation& b() const { return _apart[ 2 ]; }

    ReportEntry duality( std::size_t k )
    {
        const auto name = std::string( to_string( kinds[ k ] ) );
        Entry e( "duality." + name );
        auto apart = _apart[ k ];
        if ( _opt.tamper )
            _opt.tamper( kinds[ k ], apart );
        for ( StateId p = 0; p < _n; ++p )
            for ( StateId q = 0; q < _n; ++q )
                e.check( apart.holds( p, q ) != _bisim[ k ].holds( p, q ), [ & ] {
                    return cex( { p, q }, name + " apart" + pair_str( p, q ) + "=" + yn( apart.holds( p, q ) ) +
                                                  ", bisim" + pair_str( p, q ) + "=" + yn( _bisim[ k ].holds( p, q ) ) );
                } );
        return e.done();
    }

    ReportEntry compare( std::string name, const DirectedPairRelation& x, std::string xn,
                         const DirectedPairRelation& y, std::string yn_ )
    {
        Entry e( std::move( name ) );
        for ( StateId p = 0; p < _n; ++p )
            for ( StateId q = 0; q < _n; ++q )
                e.check( x.holds( p, q ) == y.holds( p, q ), [ & ] {
                    return cex( { p, q }, xn + pair_str( p, q ) + "=" + yn( x.holds( p, q ) ) + ", " + yn_ +
                                                  pair_str( p, q ) + "=" + yn( y.holds( p, q ) ) );
                } );
        return e.done();
    }

    ReportEntry symmetric_closure( std::string name, std::size_t directed, std::size_t symmetric )
    {
        const auto closure = _apart[ directed ].symmetric_closure();
        return compare( std::move( name ), closure, "sym(" + std::string( to_string( kinds[ directed ] ) ) + ")",
                        _apart[ symmetric ], std::string( to_string( kinds[ symmetric ] ) ) );
    }

    ReportEntry reflexive_invariance()
    {
        return compare( "reflexive_invariance", b(), "branching", branching_apartness( _closed ), "branching(closed)" );
    }

    ReportEntry nonreflexive_equivalence()
    {
        return compare( "nonreflexive_equivalence", db(), "dbranching",
                        directed_branching_apartness_nonreflexive( _lts ), "dbranching(nonreflexive)" );
    }

    ReportEntry tau_extension()
    {
        Entry e( "tau_extension" );
        auto violations = check_tau_extension( _lts, db() );
        e.check( violations.empty(), [ & ] {
            const auto& v = violations.front();
            return cex( { v.p, v.p_prime, v.q, v.q_prime },
                        "dbranching apart" + pair_str( v.p_prime, v.q ) + "=true, apart" + pair_str( v.p, v.q_prime ) +
                                "=false" );
        } );
        return e.done();
    }

    ReportEntry apartness_stuttering()
    {
        Entry e( "stuttering.apartness" );
        for ( StateId r = 0; r < _n; ++r )
            for ( auto p : _tc.reach( r ).elements() )
                for ( auto t : _tc.reach( p ).elements() )
                    for ( StateId q = 0; q < _n; ++q )
                        if ( b().holds( p, q ) )
                            e.check( b().holds( r, q ) || b().holds( t, q ), [ & ] {
                                return cex( { r, p, t, q }, "branching apart" + pair_str( p, q ) + "=true, apart" +
                                                                    pair_str( r, q ) + "=false, apart" +
                                                                    pair_str( t, q ) + "=false" );
                            } );
        return e.done();
    }

    ReportEntry bisim_stuttering()
    {
        Entry e( "stuttering.bisim" );
        const auto& bb = _bisim[ 2 ];
        for ( StateId p = 0; p < _n; ++p )
            for ( auto r : _tc.reach( p ).elements() )
                for ( auto q : _tc.reach( r ).elements() )
                    if ( bb.holds( p, q ) )
                        e.check( bb.holds( p, r ), [ & ] {
                            return cex( { p, r, q }, "branching bisim" + pair_str( p, q ) + "=true, bisim" +
                                                             pair_str( p, r ) + "=false" );
                        } );
        return e.done();
    }

    ReportEntry conjunction_corollary()
    {
        Entry e( "conjunction_corollary" );
        for ( StateId p = 0; p < _n; ++p )
            for ( StateId q = 0; q < _n; ++q )
            {
                const bool lhs = _bisim[ 2 ].holds( p, q );
                const bool rhs = _bisim[ 3 ].holds( p, q ) && _bisim[ 3 ].holds( q, p );
                e.check( lhs == rhs, [ & ] {
                    return cex( { p, q }, "branching bisim" + pair_str( p, q ) + "=" + yn( lhs ) +
                                                  ", dbranching both ways=" + yn( rhs ) );
                } );
            }
        return e.done();
    }

    ReportEntry bisim_fixpoint()
    {
        Entry e( "bisim.fixpoint" );
        for ( std::size_t k = 0; k < 4; ++k )
        {
            auto v = transfer_violations( _lts, kinds[ k ], _bisim[ k ] );
            e.check( v.empty(), [ & ] {
                return cex( { v.front().first, v.front().second },
                            std::string( to_string( kinds[ k ] ) ) + " bisim" +
                                    pair_str( v.front().first, v.front().second ) + " violates its transfer clause" );
            } );
        }
        return e.done();
    }

    ReportEntry order_independence()
    {
        Entry e( "bisim.order_independence" );
        std::vector<std::size_t> order( _n * _n );
        for ( std::size_t i = 0; i < order.size(); ++i )
            order[ i ] = order.size() - 1 - i;
        std::mt19937_64 rng( _n );
        std::shuffle( order.begin(), order.end(), rng );
        for ( std::size_t k = 0; k < 4; ++k )
        {
            auto shuffled = bisimilarity( _lts, kinds[ k ], RefinementOrder{ order } );
            e.check( shuffled == _bisim[ k ], [ & ] {
                for ( StateId p = 0; p < _n; ++p )
                    for ( StateId q = 0; q < _n; ++q )
                        if ( shuffled.holds( p, q ) != _bisim[ k ].holds( p, q ) )
                            return cex( { p, q }, std::string( to_string( kinds[ k ] ) ) + " bisim" + pair_str( p, q ) +
                                                          " depends on the deletion order" );
                return cex( {}, "relations differ" );
            } );
        }
        return e.done();
    }

    ReportEntry derivations()
    {
        Entry e( "derivation.valid" );
        for ( StateId p = 0; p < _n; ++p )
            for ( StateId q = 0; q < _n; ++q )
                if ( db().holds( p, q ) )
                {
                    std::string error;
                    try
                    {
                        auto d = extract_derivation( _lts, db(), p, q );
                        validate_derivation( _lts, *d );
                    }
                    catch ( const std::exception& ex )
                    {
                        error = ex.what();
                    }
                    e.check( error.empty(), [ & ] { return cex( { p, q }, "derivation for" + pair_str( p, q ) + ": " + error ); } );
                }
        return e.done();
    }

    ReportEntry tau_transfer( ModelChecker& mc, const std::vector<Formula>& formulas )
    {
        Entry e( "logic.tau_transfer" );
        for ( const auto& f : formulas )
        {
            const bool pos = is_positive( f ), neg = is_negative( f );
            if ( !pos && !neg )
                continue;
            const auto& s = mc.sat( f );
            for ( StateId p = 0; p < _n; ++p )
                for ( auto p1 : _closed.successors( p, kSilent ) )
                {
                    if ( pos )
                        e.check( !s.contains( p1 ) || s.contains( p ), [ & ] {
                            return cex( { p, p1 }, "positive formula holds at " + std::to_string( p1 ) + " but not at " +
                                                           std::to_string( p ), to_string( f ) );
                        } );
                    if ( neg )
                        e.check( !s.contains( p ) || s.contains( p1 ), [ & ] {
                            return cex( { p, p1 }, "negative formula holds at " + std::to_string( p ) + " but not at " +
                                                           std::to_string( p1 ), to_string( f ) );
                        } );
                }
        }
        return e.done();
    }

    ReportEntry simpler_diamond( ModelChecker& mc, const std::vector<Formula>& formulas )
    {
        Entry e( "logic.simpler_diamond" );
        for ( const auto& f : formulas )
            if ( f.kind() == Formula::Kind::diamond && is_positive( f.left() ) )
            {
                const auto direct = mc.reach_diamond( f.left(), f.label(), f.right() );
                e.check( direct == mc.sat( f ), [ & ] {
                    return cex( {}, "until and reachability evaluations differ", to_string( f ) );
                } );
            }
        return e.done();
    }

    ReportEntry embedding( ModelChecker& mc, const std::vector<PFormula>& pformulas )
    {
        Entry e( "logic.p_embed" );
        for ( const auto& f : pformulas )
        {
            const auto g = p_embed( f );
            const auto& s = mc.sat( f );
            e.check( is_positive( g ) && is_good( g ), [ & ] { return cex( {}, "embedding is not positive and good", to_string( f ) ); } );
            e.check( mc.sat( g ) == s, [ & ] { return cex( {}, "embedding changes the satisfaction set", to_string( f ) ); } );
            e.check( mc.psat_direct( f ) == s, [ & ] { return cex( {}, "direct P-evaluation differs", to_string( f ) ); } );
        }
        return e.done();
    }

    ReportEntry modality_free( ModelChecker& mc )
    {
        Entry e( "logic.modality_free" );
        const auto t = Formula::top(), f = Formula::bot();
        const std::vector<Formula> samples{ t, f, Formula::conj( t, f ), Formula::neg( Formula::conj( t, t ) ),
                                            Formula::disj( f, Formula::neg( f ) ),
                                            Formula::conj( Formula::neg( f ), Formula::disj( t, f ) ) };
        for ( const auto& g : samples )
        {
            const auto& s = mc.sat( g );
            e.check( s.empty() || s.is_full(), [ & ] { return cex( {}, "modality-free formula is not constant", to_string( g ) ); } );
        }
        return e.done();
    }

    ReportEntry constrained_reach( ModelChecker& mc, const std::vector<Formula>& formulas )
    {
        Entry e( "logic.constrained_reach" );
        const auto all = StateSet::full( _n );
        for ( StateId p = 0; p < _n; ++p )
            e.check( constrained_tau_reach( _closed, p, all ) == _tc.reach( p ),
                     [ & ] { return cex( { p }, "unconstrained path reach differs from the closure" ); } );
        for ( const auto& f : formulas )
        {
            if ( !is_positive( f ) )
                continue;
            const auto& s = mc.sat( f );
            for ( StateId p = 0; p < _n; ++p )
            {
                const auto r = constrained_tau_reach( _closed, p, s );
                const auto expected = s.contains( p ) ? _tc.reach( p ) & s : StateSet( _n );
                e.check( r == expected, [ & ] {
                    return cex( { p }, "constrained reach differs from reach restricted to the formula", to_string( f ) );
                } );
            }
        }
        return e.done();
    }

    ReportEntry derivation_soundness()
    {
        Entry e( "distinguish.derivation_soundness" );
        for ( StateId p = 0; p < _n; ++p )
            for ( StateId q = 0; q < _n; ++q )
                if ( db().holds( p, q ) )
                {
                    std::optional<PFormula> phi;
                    std::string error;
                    try
                    {
                        phi = formula_from_derivation( _lts, *extract_derivation( _lts, db(), p, q ) );
                    }
                    catch ( const std::exception& ex )
                    {
                        error = ex.what();
                    }
                    e.check( phi.has_value(), [ & ] { return cex( { p, q }, "synthesis failed: " + error ); } );
                    if ( !phi )
                        continue;
                    auto v = verify_distinguishes( _closed, p_embed( *phi ), p, q );
                    e.check( v.distinguishes && v.direction == Direction::left_holds, [ & ] {
                        return cex( { p, q }, "dbranching apart" + pair_str( p, q ) + "=true, direction " +
                                                      std::string( to_string( v.direction ) ),
                                    to_string( *phi ) );
                    } );
                }
        return e.done();
    }

    ReportEntry good_formulas( ModelChecker& mc, const std::vector<Formula>& formulas,
                               const std::vector<PFormula>& pformulas )
    {
        Entry e( "distinguish.good_formula" );
        auto claim = [ & ]( const std::string& text, const StateSet& s, bool pos, bool neg ) {
            for ( auto p : s.elements() )
                for ( auto q : s.complement().elements() )
                {
                    e.check( b().holds( p, q ), [ & ] {
                        return cex( { p, q }, "distinguished but branching apart" + pair_str( p, q ) + "=false", text );
                    } );
                    if ( pos )
                        e.check( db().holds( p, q ), [ & ] {
                            return cex( { p, q }, "positive and distinguishing but dbranching apart" + pair_str( p, q ) +
                                                          "=false", text );
                        } );
                    if ( neg )
                        e.check( db().holds( q, p ), [ & ] {
                            return cex( { p, q }, "negative and distinguishing but dbranching apart" + pair_str( q, p ) +
                                                          "=false", text );
                        } );
                }
        };
        for ( const auto& f : formulas )
            if ( is_good( f ) )
                claim( to_string( f ), mc.sat( f ), is_positive( f ), is_negative( f ) );
        for ( const auto& f : pformulas )
            claim( to_string( f ), mc.sat( f ), true, false );
        return e.done();
    }

    ReportEntry hmlu_conversion( ModelChecker& mc, const std::vector<Formula>& formulas )
    {
        Entry e( "distinguish.hmlu_conversion" );
        for ( StateId p = 0; p < _n; ++p )
            for ( StateId q = 0; q < _n; ++q )
            {
                if ( p == q )
                    continue;
                std::vector<const Formula*> picks;
                for ( const auto& f : formulas )
                    if ( mc.holds( p, f ) && !mc.holds( q, f ) )
                    {
                        if ( picks.size() < 2 )
                            picks.push_back( &f );
                        else
                            picks.back() = &f;
                    }
                for ( const auto* f : picks )
                {
                    std::optional<PFormula> phi;
                    std::string error;
                    try
                    {
                        phi = pformula_from_hmlu( _closed, *f, p, q );
                    }
                    catch ( const std::exception& ex )
                    {
                        error = ex.what();
                    }
                    e.check( phi && verify_distinguishes( _closed, p_embed( *phi ), p, q ).distinguishes, [ & ] {
                        return cex( { p, q }, phi ? "converted formula " + to_string( *phi ) + " does not distinguish"
                                                  : "conversion failed: " + error,
                                    to_string( *f ) );
                    } );
                }
            }
        return e.done();
    }

    ReportEntry characterization( ModelChecker& mc, const std::vector<Formula>& formulas,
                                  const std::vector<PFormula>& pformulas )
    {
        Entry e( "characterization" );
        for ( StateId p = 0; p < _n; ++p )
            for ( StateId q = 0; q < _n; ++q )
            {
                const PFormula* p_only = nullptr;
                bool p_dist = false;
                for ( const auto& f : pformulas )
                {
                    const bool hp = mc.holds( p, f ), hq = mc.holds( q, f );
                    if ( hp && !hq && !p_only )
                        p_only = &f;
                    p_dist = p_dist || hp != hq;
                }
                const Formula* h_dist = nullptr;
                for ( const auto& f : formulas )
                    if ( mc.holds( p, f ) != mc.holds( q, f ) )
                    {
                        h_dist = &f;
                        break;
                    }

                // Th_P(p) not contained in Th_P(q) implies p directed branching apart from q.
                e.check( !p_only || db().holds( p, q ), [ & ] {
                    return cex( { p, q }, "Th_P not included but dbranching apart" + pair_str( p, q ) + "=false",
                                to_string( *p_only ) );
                } );
                e.check( !p_dist || b().holds( p, q ), [ & ] {
                    return cex( { p, q }, "P-distinguishable but branching apart" + pair_str( p, q ) + "=false" );
                } );
                e.check( !h_dist || b().holds( p, q ), [ & ] {
                    return cex( { p, q }, "HMLU-distinguishable but branching apart" + pair_str( p, q ) + "=false",
                                to_string( *h_dist ) );
                } );
                if ( b().holds( p, q ) )
                {
                    // Synthesis witnesses both P- and HMLU-distinguishability.
                    const bool forward = db().holds( p, q );
                    const auto l = forward ? p : q, r = forward ? q : p;
                    auto phi = formula_from_derivation( _lts, *extract_derivation( _lts, db(), l, r ) );
                    e.check( verify_distinguishes( _closed, p_embed( phi ), p, q ).distinguishes, [ & ] {
                        return cex( { p, q }, "branching apart but synthesized formula does not distinguish",
                                    to_string( phi ) );
                    } );
                }
                if ( h_dist )
                {
                    auto phi = pformula_from_hmlu( _closed, *h_dist, p, q );
                    e.check( verify_distinguishes( _closed, p_embed( phi ), p, q ).distinguishes, [ & ] {
                        return cex( { p, q }, "HMLU-distinguishable but converted formula does not distinguish",
                                    to_string( *h_dist ) );
                    } );
                }
            }
        return e.done();
    }

    const Lts& _lts;
    const ValidateOptions& _opt;
    Lts _closed;
    TauClosure _tc;
    std::size_t _n;
    DirectedPairRelation _apart[ 4 ];
    BisimRelation _bisim[ 4 ];
    std::vector<ActionLabel> _visible;
};

} // namespace

ValidationReport cross_validate( const Lts& lts, const ValidateOptions& options )
{
    Validator v( lts, options );
    return v.run();
}

CheckResult check_pair( const Lts& lts, ApartnessKind kind, StateId p, StateId q, bool nonreflexive )
{
    if ( p >= lts.num_states() || q >= lts.num_states() )
        throw std::invalid_argument( "state out of range" );
    if ( nonreflexive && kind != ApartnessKind::directed_branching )
        throw std::invalid_argument( "the nonreflexive engine exists only for dbranching" );

    const auto rel = nonreflexive ? directed_branching_apartness_nonreflexive( lts ) : apartness( lts, kind );
    const auto bis = bisimilarity( lts, kind );
    CheckResult out{ kind, p, q, rel.holds( p, q ), rel.holds( q, p ), bis.holds( p, q ), nullptr };
    if ( out.apart && ( kind == ApartnessKind::branching || kind == ApartnessKind::directed_branching ) )
    {
        const auto db = kind == ApartnessKind::directed_branching && !nonreflexive ? rel
                                                                                     : directed_branching_apartness( lts );
        out.derivation = db.holds( p, q ) ? extract_derivation( lts, db, p, q ) : extract_derivation( lts, db, q, p );
    }
    return out;
}

Distinction distinguish_pair( const Lts& lts, StateId p, StateId q )
{
    if ( p >= lts.num_states() || q >= lts.num_states() )
        throw std::invalid_argument( "state out of range" );
    const auto rel = directed_branching_apartness( lts );
    if ( !rel.holds( p, q ) )
        throw NotApartError( "not apart: " + lts.state_name( p ) + " and " + lts.state_name( q ) +
                             " are directed branching bisimilar" );
    auto d = extract_derivation( lts, rel, p, q );
    return { formula_from_derivation( lts, *d ), d };
}

CampaignResult run_campaign( const CampaignParams& c, const ValidateOptions& options )
{
    CampaignResult out;
    out.instances = campaign_params( c );
    for ( const auto& g : out.instances )
        out.reports.push_back( cross_validate( random_lts( g ), options ) );
    return out;
}

} // namespace bbapart
