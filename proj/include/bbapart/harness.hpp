#pragma once

#include "bbapart/apartness.hpp"
#include "bbapart/bisim.hpp"
#include "bbapart/distinguish.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace bbapart
{

struct GenParams
{
    std::size_t num_states = 8;
    std::size_t visible_actions = 2;
    double visible_density = 1.5;  // expected visible out-degree per state
    double tau_density = 0.7;      // expected silent out-degree per state
    std::uint64_t seed = 1;
};

// Generator: one std::mt19937_64 seeded with `seed`. For each source state s in order, then each
// label in order (tau, then visible labels "a", "b", ...), then each target t in order, one
// draw u = (x >> 11) * 2^-53 decides inclusion of s -label-> t with u < pr, where
// pr = tau_density / n for tau and visible_density / (n * visible_actions) otherwise.
// Labels with 26 or more visible actions continue as "a26", "a27", ...
Lts random_lts( const GenParams& g );

struct Counterexample
{
    std::vector<StateId> states;
    std::string relation;  // excerpt, e.g. "dbranching apart(1,2)=true, bisim(1,2)=true"
    std::optional<std::string> formula;
};

struct ReportEntry
{
    std::string name;
    bool pass;
    std::optional<Counterexample> counterexample;  // set iff !pass
    std::size_t checks = 0;                         // instances examined
};

struct ValidationReport
{
    std::vector<ReportEntry> entries;

    [[nodiscard]] bool all_pass() const;
    [[nodiscard]] const ReportEntry* find( std::string_view name ) const;
};

struct ValidateOptions
{
    // Formula enumeration depth for the logic and good-formula suites.
    std::size_t formula_depth = 2;
    // The characterisation suite runs only on LTSs with at most this many states.
    std::size_t characterization_max_states = 5;
    // Test hook: called on every apartness relation before the duality comparison.
    std::function<void( ApartnessKind, DirectedPairRelation& )> tamper;
};

// Runs every property suite on `lts`. Suite names:
//   duality.{strong,dstrong,branching,dbranching}, symmetric_closure.{branching,strong},
//   reflexive_invariance, nonreflexive_equivalence, tau_extension, stuttering.{apartness,bisim},
//   conjunction_corollary, bisim.{fixpoint,order_independence}, derivation.valid,
//   logic.{tau_transfer,simpler_diamond,p_embed,modality_free,constrained_reach},
//   distinguish.{derivation_soundness,good_formula,hmlu_conversion}, characterization
ValidationReport cross_validate( const Lts& lts, const ValidateOptions& options = {} );

struct CheckResult
{
    ApartnessKind kind;
    StateId p, q;
    bool apart;
    bool apart_reverse;
    bool bisimilar;
    // Directed branching certificate for the apart direction; present for the branching kinds
    // whenever apart (for symmetric branching apartness it may certify (q, p) instead).
    std::shared_ptr<const Derivation> derivation;
};

CheckResult check_pair( const Lts& lts, ApartnessKind kind, StateId p, StateId q, bool nonreflexive = false );

struct Distinction
{
    PFormula formula;
    std::shared_ptr<const Derivation> derivation;
};

// Throws NotApartError when (p, q) is not directed branching apart.
Distinction distinguish_pair( const Lts& lts, StateId p, StateId q );

struct CampaignParams
{
    std::size_t count = 200;
    std::uint64_t seed = 1;
    std::size_t min_states = 2;
    std::size_t max_states = 8;
    std::size_t visible_actions = 2;
    double visible_density = 1.5;
    double tau_density = 0.7;
};

// LTS i of the campaign: states drawn uniformly from [min_states, max_states] by an
// std::mt19937_64 seeded with `seed`, generator seed seed * 1000003 + i.
std::vector<GenParams> campaign_params( const CampaignParams& c );

struct CampaignResult
{
    std::vector<GenParams> instances;
    std::vector<ValidationReport> reports;
    [[nodiscard]] bool all_pass() const;
};

CampaignResult run_campaign( const CampaignParams& c, const ValidateOptions& options = {} );

} // namespace bbapart
