/*!
  \file sensitivity.hpp
  \brief Exact influences, average sensitivity, and the WNC bound

  Everything here is exact rational arithmetic: the bound
  AS[f] <= M^2 / (4 (1 - kappa)) for weakly nested canalizing f with
  values in [0, M], kappa = max_i (k_i - 1)/k_i, is checked with no
  tolerance.
*/

#pragma once

#include "canalization.hpp"
#include "function.hpp"

#include <vector>

namespace mvnc
{

/*! Exact Inf_i[f] = E_x[Var_{y_i} f(..., y_i, ...)] under uniform
    measures; 0 when coordinate i is a singleton. */
inline rational influence_exact( mv_function const& f, std::size_t i )
{
  auto const& dom = f.domain();
  if ( i >= dom.arity() )
    throw std::invalid_argument( "coordinate index out of range" );
  auto const k = static_cast<int>( dom.cardinality( i ) );
  if ( k == 1 )
    return 0;

  // Sum Var over all assignments of the other coordinates: group the
  // whole table by the conditioning point, one pass per fiber.
  rational total = 0;
  std::uint64_t const fibers = dom.size() / static_cast<std::uint64_t>( k );
  for ( std::uint64_t fidx = 0; fidx < fibers; ++fidx )
  {
    // Reconstruct the fiber by fixing coordinate i to each active value.
    rational sum = 0, sumsq = 0;
    auto p = dom.point_at( 0 );
    // Enumerate the fiber via the first point whose non-i digits encode fidx.
    std::uint64_t rem = fidx;
    for ( std::size_t j = dom.arity(); j-- > 0; )
    {
      if ( j == i )
        continue;
      auto const kj = static_cast<std::uint64_t>( dom.cardinality( j ) );
      p[j] = dom.values( j )[static_cast<std::size_t>( rem % kj )];
      rem /= kj;
    }
    for ( int a : dom.values( i ) )
    {
      p[i] = a;
      auto const& v = f.evaluate( p );
      sum += v;
      sumsq += v * v;
    }
    total += sumsq / k - ( sum / k ) * ( sum / k );
  }
  return total / rational( fibers );
}

/*! AS[f] = sum_i Inf_i[f], exact. */
inline rational average_sensitivity( mv_function const& f )
{
  rational as = 0;
  for ( std::size_t i = 0; i < f.domain().arity(); ++i )
    as += influence_exact( f, i );
  return as;
}

/*! kappa = max_i (k_i - 1)/k_i over the domain's active cardinalities. */
inline rational kappa( product_domain const& dom )
{
  rational k = 0;
  for ( int ki : dom.cardinalities() )
  {
    rational const r( ki - 1, ki );
    if ( r > k )
      k = r;
  }
  return k;
}

/*! M^2 / (4 (1 - kappa)). */
inline rational wnc_bound( rational const& max_value, rational const& kap )
{
  return max_value * max_value / ( 4 * ( 1 - kap ) );
}

/*! n * M^2 / 4, the bound for arbitrary [0, M]-valued functions. */
inline rational generic_bound( std::size_t arity, rational const& max_value )
{
  return rational( arity ) * max_value * max_value / 4;
}

struct sensitivity_report
{
  std::vector<rational> influences;
  rational as;
  rational max_value;
  rational min_value;
  rational kappa;
  rational wnc_bound;
  rational generic_bound;
  bool is_wnc;
  bool nonnegative;       //!< m(f) >= 0, the theorem's codomain assumption
  bool bound_applicable;  //!< is_wnc and nonnegative
  bool bound_holds;       //!< AS <= wnc_bound (exact); meaningful when applicable
};

/*! Fills the full report for f. Violated codomain preconditions are
    flagged (bound marked not applicable), never thrown. */
inline sensitivity_report check_theorem( mv_function const& f )
{
  sensitivity_report r;
  for ( std::size_t i = 0; i < f.domain().arity(); ++i )
    r.influences.push_back( influence_exact( f, i ) );
  r.as = 0;
  for ( auto const& inf : r.influences )
    r.as += inf;
  r.max_value = f.max_value();
  r.min_value = f.min_value();
  r.kappa = kappa( f.domain() );
  r.wnc_bound = wnc_bound( r.max_value, r.kappa );
  r.generic_bound = generic_bound( f.domain().arity(), r.max_value );
  r.is_wnc = is_wnc( f );
  r.nonnegative = r.min_value >= 0;
  r.bound_applicable = r.is_wnc && r.nonnegative;
  r.bound_holds = r.as <= r.wnc_bound;
  return r;
}

/*! Fraction of direction-i edges (x, x with coordinate i flipped) with
    f(x) != f(flip). Boolean domains (all k_i = 2) with at most two
    distinct values only; satisfies Inf_i = (M - m)^2 / 4 * fraction. */
inline rational boundary_edge_fraction( mv_function const& f, std::size_t i )
{
  auto const& dom = f.domain();
  if ( i >= dom.arity() )
    throw std::invalid_argument( "coordinate index out of range" );
  for ( std::size_t j = 0; j < dom.arity(); ++j )
    if ( dom.cardinality( j ) != 2 )
      throw std::invalid_argument( "boundary_edge_fraction requires a Boolean domain" );
  {
    std::set<rational> distinct( f.values().begin(), f.values().end() );
    if ( distinct.size() > 2 )
      throw std::invalid_argument( "boundary_edge_fraction requires a two-valued function" );
  }

  int const lo = dom.values( i )[0];
  int const hi = dom.values( i )[1];
  std::uint64_t boundary = 0;
  std::uint64_t edges = 0;
  for ( std::uint64_t idx = 0; idx < dom.size(); ++idx )
  {
    auto p = dom.point_at( idx );
    if ( p[i] != lo )
      continue;
    auto const& v = f.evaluate( p );
    p[i] = hi;
    ++edges;
    if ( v != f.evaluate( p ) )
      ++boundary;
  }
  return rational( boundary, edges );
}

} // namespace mvnc
