/*!
  \file function.hpp
  \brief Multivalued functions as exact-rational value tables
*/

#pragma once

#include "domain.hpp"
#include "rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace mvnc
{

/*! A function on a product domain, stored as a dense table of exact
    rationals in mixed-radix index order. Immutable after construction. */
class mv_function
{
public:
  mv_function( product_domain domain, std::vector<rational> values )
      : domain_( std::move( domain ) ), values_( std::move( values ) )
  {
    if ( values_.size() != domain_.size() )
      throw std::invalid_argument( "value table size does not match domain size" );
  }

  product_domain const& domain() const { return domain_; }
  std::vector<rational> const& values() const { return values_; }

  rational const& value_at( std::uint64_t idx ) const { return values_.at( idx ); }
  rational const& evaluate( point const& p ) const { return values_[domain_.index_of( p )]; }

  rational max_value() const
  {
    rational m = values_.front();
    for ( auto const& v : values_ )
      if ( v > m )
        m = v;
    return m;
  }

  rational min_value() const
  {
    rational m = values_.front();
    for ( auto const& v : values_ )
      if ( v < m )
        m = v;
    return m;
  }

  bool operator==( mv_function const& other ) const = default;

private:
  product_domain domain_;
  std::vector<rational> values_;
};

/*! Restriction of f to x_{h.coord} != h.value. The restricted domain
    keeps original coordinate and value labels. Requires the coordinate
    to have at least two active values. */
inline mv_function restrict_function( mv_function const& f, hyperplane const& h )
{
  auto const dom = f.domain().remove( h );
  std::vector<rational> vals;
  vals.reserve( dom.size() );
  for ( std::uint64_t idx = 0; idx < dom.size(); ++idx )
    vals.push_back( f.evaluate( dom.point_at( idx ) ) );
  return { dom, std::move( vals ) };
}

/*! Returns b when f is constant b on {x | x_{h.coord} = h.value},
    otherwise nullopt. On a size-1 domain the hyperplane is a single
    point, so the result is always present. */
inline std::optional<rational> slice_constant( mv_function const& f, hyperplane const& h )
{
  auto const& dom = f.domain();
  if ( h.coord >= dom.arity() || dom.value_pos( h.coord, h.value ) < 0 )
    throw std::invalid_argument( "hyperplane not valid in domain" );

  std::optional<rational> b;
  for ( std::uint64_t idx = 0; idx < dom.size(); ++idx )
  {
    auto const p = dom.point_at( idx );
    if ( p[h.coord] != h.value )
      continue;
    if ( !b )
      b = f.value_at( idx );
    else if ( *b != f.value_at( idx ) )
      return std::nullopt;
  }
  return b;
}

} // namespace mvnc
