/*!
  \file generators.hpp
  \brief Seeded generation of uniform / WNC / NC functions and
         exhaustive small-domain censuses

  All sampling is driven by the splitmix64 stream in rng.hpp, so a
  given spec reproduces the same function on any platform. random_wnc
  samples uniformly over peel choices, not uniformly over the WNC class.
*/

#pragma once

#include "canalization.hpp"
#include "function.hpp"
#include "rng.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mvnc
{

/*! Output value set: a contiguous integer range or an explicit list. */
class codomain
{
public:
  static codomain integer_range( long lo, long hi )
  {
    if ( hi < lo )
      throw std::invalid_argument( "empty codomain range" );
    codomain c;
    for ( long v = lo; v <= hi; ++v )
      c.values_.emplace_back( v );
    return c;
  }

  static codomain of_values( std::vector<rational> values )
  {
    if ( values.empty() )
      throw std::invalid_argument( "empty codomain" );
    codomain c;
    c.values_ = std::move( values );
    return c;
  }

  std::size_t count() const { return values_.size(); }
  rational const& at( std::size_t i ) const { return values_.at( i ); }

private:
  codomain() = default;
  std::vector<rational> values_;
};

enum class gen_kind
{
  uniform,
  wnc,
  nc
};

struct gen_spec
{
  std::vector<int> cardinalities;
  codomain cod;
  gen_kind kind{ gen_kind::uniform };
  std::uint64_t seed{ 0 };
};

/*! I.i.d. uniform values over the codomain. */
inline mv_function random_function( gen_spec const& spec )
{
  product_domain dom( spec.cardinalities );
  splitmix64 rng( spec.seed );
  std::vector<rational> vals;
  vals.reserve( dom.size() );
  for ( std::uint64_t idx = 0; idx < dom.size(); ++idx )
    vals.push_back( spec.cod.at( rng.below( spec.cod.count() ) ) );
  return { std::move( dom ), std::move( vals ) };
}

/*! Builds a WNC function by random peeling: while the domain has more
    than one point, pick a coordinate with >= 2 active values, an active
    value, and a codomain value for the peeled hyperplane. The returned
    certificate verifies by construction. */
inline std::pair<mv_function, wnc_certificate> random_wnc( gen_spec const& spec )
{
  product_domain const dom( spec.cardinalities );
  splitmix64 rng( spec.seed );
  std::vector<rational> vals( dom.size() );

  wnc_certificate cert;
  product_domain region = dom;
  while ( region.size() > 1 )
  {
    std::vector<std::size_t> eligible;
    for ( std::size_t i = 0; i < region.arity(); ++i )
      if ( region.cardinality( i ) >= 2 )
        eligible.push_back( i );
    auto const i = eligible[rng.below( eligible.size() )];
    auto const a = region.values( i )[rng.below( region.cardinality( i ) )];
    auto const b = spec.cod.at( rng.below( spec.cod.count() ) );

    for ( std::uint64_t idx = 0; idx < region.size(); ++idx )
    {
      auto const p = region.point_at( idx );
      if ( p[i] == a )
        vals[dom.index_of( p )] = b;
    }
    cert.steps.push_back( { i, a, b } );
    region = region.remove( { i, a } );
  }
  cert.final_value = spec.cod.at( rng.below( spec.cod.count() ) );
  vals[dom.index_of( region.point_at( 0 ) )] = cert.final_value;

  return { mv_function( dom, std::move( vals ) ), std::move( cert ) };
}

/*! Uniform random permutation, proper segments, and outputs with
    c_n != c_{n+1}; materializes the function from the schema. Requires
    all k_i >= 2 and a codomain with >= 2 values. */
inline std::pair<mv_function, nc_decomposition> random_nc( gen_spec const& spec )
{
  for ( int k : spec.cardinalities )
    if ( k < 2 )
      throw std::invalid_argument( "random_nc requires k_i >= 2 for all coordinates" );
  if ( spec.cardinalities.empty() )
    throw std::invalid_argument( "random_nc requires arity >= 1" );
  if ( spec.cod.count() < 2 )
    throw std::invalid_argument( "random_nc requires >= 2 codomain values" );

  product_domain dom( spec.cardinalities );
  splitmix64 rng( spec.seed );
  std::size_t const n = dom.arity();

  nc_decomposition dec;
  dec.order.resize( n );
  for ( std::size_t i = 0; i < n; ++i )
    dec.order[i] = i;
  for ( std::size_t i = n; i-- > 1; )
    std::swap( dec.order[i], dec.order[rng.below( i + 1 )] );

  for ( std::size_t level = 0; level < n; ++level )
  {
    auto const segs = segments_of( spec.cardinalities[dec.order[level]] );
    dec.segments.push_back( segs[rng.below( segs.size() )] );
  }
  for ( std::size_t j = 0; j <= n; ++j )
    dec.outputs.push_back( spec.cod.at( rng.below( spec.cod.count() ) ) );
  while ( dec.outputs[n] == dec.outputs[n - 1] )
    dec.outputs[n] = spec.cod.at( rng.below( spec.cod.count() ) );

  std::vector<rational> vals;
  vals.reserve( dom.size() );
  for ( std::uint64_t idx = 0; idx < dom.size(); ++idx )
    vals.push_back( evaluate_nc_schema( dec, dom.point_at( idx ) ) );
  return { mv_function( std::move( dom ), std::move( vals ) ), std::move( dec ) };
}

struct census_counts
{
  std::uint64_t total;
  std::uint64_t weakly_canalizing;
  std::uint64_t canalizing;
  std::uint64_t nc;
  std::uint64_t wnc;
};

/*! Exhaustive classification of every function from the domain to the
    codomain. Uses the exhaustive WNC recognizer; the function count
    |codomain|^|domain| must not exceed 10^6. */
inline census_counts census( product_domain const& dom, codomain const& cod )
{
  std::uint64_t total = 1;
  for ( std::uint64_t i = 0; i < dom.size(); ++i )
  {
    if ( total > 1000000ull / cod.count() + 1 )
      throw std::invalid_argument( "census too large (> 10^6 functions)" );
    total *= cod.count();
  }
  if ( total > 1000000ull )
    throw std::invalid_argument( "census too large (> 10^6 functions)" );

  census_counts counts{ total, 0, 0, 0, 0 };
  std::vector<std::size_t> digits( dom.size(), 0 );
  for ( std::uint64_t fn = 0; fn < total; ++fn )
  {
    std::vector<rational> vals( dom.size() );
    for ( std::uint64_t i = 0; i < dom.size(); ++i )
      vals[i] = cod.at( digits[i] );
    mv_function const f( dom, std::move( vals ) );

    auto const wch = weakly_canalizing_hyperplanes( f );
    if ( !wch.empty() )
      ++counts.weakly_canalizing;
    bool canal = false;
    for ( auto const& [h, b] : wch )
      if ( is_canalizing( f, h ) )
      {
        canal = true;
        break;
      }
    if ( canal )
      ++counts.canalizing;
    if ( dom.is_full_range() && recognize_nc( f ) )
      ++counts.nc;
    if ( recognize_wnc( f, search_mode::exhaustive ) )
      ++counts.wnc;

    for ( std::size_t i = dom.size(); i-- > 0; )
    {
      if ( ++digits[i] < cod.count() )
        break;
      digits[i] = 0;
    }
  }
  return counts;
}

} // namespace mvnc
