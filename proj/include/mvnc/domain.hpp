/*!
  \file domain.hpp
  \brief Finite product domains, points, and coordinate hyperplanes
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mvnc
{

/*! A point of a product domain: one value per coordinate. */
using point = std::vector<int>;

/*! The coordinate hyperplane {x | x_coord = value}. Coordinates are
    0-based throughout the library; the CLI prints them 1-based. */
struct hyperplane
{
  std::size_t coord;
  int value;

  bool operator==( hyperplane const& other ) const = default;
};

/*! A product of per-coordinate finite value sets. Each coordinate holds
    the currently active subset of its original range {0,...,k_i-1},
    sorted and duplicate-free. Restriction removes one value and keeps
    the original labels. */
class product_domain
{
public:
  /*! Full domain with coordinate i ranging over {0,...,cardinalities[i]-1}. */
  explicit product_domain( std::vector<int> const& cardinalities )
  {
    coords_.reserve( cardinalities.size() );
    for ( int k : cardinalities )
    {
      if ( k < 1 )
        throw std::invalid_argument( "coordinate cardinality must be >= 1" );
      std::vector<int> vals( static_cast<std::size_t>( k ) );
      for ( int t = 0; t < k; ++t )
        vals[static_cast<std::size_t>( t )] = t;
      coords_.push_back( std::move( vals ) );
    }
    recompute_size();
  }

  /*! Domain with explicit active value sets (must be sorted, nonempty,
      duplicate-free). */
  static product_domain from_values( std::vector<std::vector<int>> values )
  {
    for ( auto const& vals : values )
    {
      if ( vals.empty() )
        throw std::invalid_argument( "empty coordinate value set" );
      if ( !std::is_sorted( vals.begin(), vals.end() ) ||
           std::adjacent_find( vals.begin(), vals.end() ) != vals.end() )
        throw std::invalid_argument( "coordinate values must be sorted and duplicate-free" );
    }
    product_domain d;
    d.coords_ = std::move( values );
    d.recompute_size();
    return d;
  }

  std::size_t arity() const { return coords_.size(); }
  std::uint64_t size() const { return size_; }

  std::vector<int> const& values( std::size_t coord ) const { return coords_.at( coord ); }
  std::size_t cardinality( std::size_t coord ) const { return coords_.at( coord ).size(); }

  /*! All active cardinalities, in coordinate order. */
  std::vector<int> cardinalities() const
  {
    std::vector<int> ks;
    ks.reserve( coords_.size() );
    for ( auto const& vals : coords_ )
      ks.push_back( static_cast<int>( vals.size() ) );
    return ks;
  }

  /*! True when every coordinate is the full range {0,...,k_i-1}. */
  bool is_full_range() const
  {
    for ( auto const& vals : coords_ )
      for ( std::size_t t = 0; t < vals.size(); ++t )
        if ( vals[t] != static_cast<int>( t ) )
          return false;
    return true;
  }

  /*! Position of `value` within coordinate `coord`'s active set, or -1. */
  int value_pos( std::size_t coord, int value ) const
  {
    auto const& vals = coords_.at( coord );
    auto const it = std::lower_bound( vals.begin(), vals.end(), value );
    if ( it == vals.end() || *it != value )
      return -1;
    return static_cast<int>( it - vals.begin() );
  }

  bool contains( point const& p ) const
  {
    if ( p.size() != coords_.size() )
      return false;
    for ( std::size_t i = 0; i < p.size(); ++i )
      if ( value_pos( i, p[i] ) < 0 )
        return false;
    return true;
  }

  /*! Mixed-radix index of a point: lexicographic with the LAST coordinate
      varying fastest, active values in ascending order. */
  std::uint64_t index_of( point const& p ) const
  {
    if ( p.size() != coords_.size() )
      throw std::invalid_argument( "point arity mismatch" );
    std::uint64_t idx = 0;
    for ( std::size_t i = 0; i < coords_.size(); ++i )
    {
      int const pos = value_pos( i, p[i] );
      if ( pos < 0 )
        throw std::invalid_argument( "point coordinate value not active in domain" );
      idx = idx * coords_[i].size() + static_cast<std::uint64_t>( pos );
    }
    return idx;
  }

  point point_at( std::uint64_t idx ) const
  {
    if ( idx >= size_ )
      throw std::out_of_range( "point index out of range" );
    point p( coords_.size() );
    for ( std::size_t i = coords_.size(); i-- > 0; )
    {
      auto const k = static_cast<std::uint64_t>( coords_[i].size() );
      p[i] = coords_[i][static_cast<std::size_t>( idx % k )];
      idx /= k;
    }
    return p;
  }

  /*! Domain with `h.value` removed from coordinate `h.coord`. */
  product_domain remove( hyperplane const& h ) const
  {
    if ( h.coord >= coords_.size() )
      throw std::invalid_argument( "hyperplane coordinate out of range" );
    if ( value_pos( h.coord, h.value ) < 0 )
      throw std::invalid_argument( "hyperplane value not active in domain" );
    if ( coords_[h.coord].size() < 2 )
      throw std::invalid_argument( "cannot remove the last value of a coordinate" );
    product_domain d( *this );
    auto& vals = d.coords_[h.coord];
    vals.erase( std::find( vals.begin(), vals.end(), h.value ) );
    d.recompute_size();
    return d;
  }

  bool operator==( product_domain const& other ) const = default;

private:
  product_domain() = default;

  void recompute_size()
  {
    size_ = 1;
    for ( auto const& vals : coords_ )
      size_ *= static_cast<std::uint64_t>( vals.size() );
  }

  std::vector<std::vector<int>> coords_;
  std::uint64_t size_{ 1 };
};

} // namespace mvnc
