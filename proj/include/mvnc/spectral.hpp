/*!
  \file spectral.hpp
  \brief Fourier analysis on product domains under the uniform measure

  The orthonormal tensor-product basis, forward/inverse transforms,
  per-coordinate conditional expectations E_i and Laplacians L_i, and
  spectral influence. Basis construction and coefficients use floating
  point (orthonormalization needs square roots); E_i and L_i are exact
  since they are plain averages of rationals.
*/

#pragma once

#include "function.hpp"
#include "rng.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace mvnc
{

enum class basis_kind
{
  standard,
  random
};

/*! Per-coordinate orthonormal families under the uniform inner product
    (1/k) sum_t phi_j(t) phi_l(t) = delta_jl; row 0 is all-ones. The full
    basis is the tensor product phi_alpha(x) = prod_i phi^(i)_{alpha_i}(x_i). */
class fourier_basis
{
public:
  /*! standard: Gram-Schmidt on the monomials 1, t, t^2, ... over the
      coordinate's active values, each row scaled so its last nonzero
      entry is positive. random: Gram-Schmidt on a seeded random
      completion of the all-ones row. */
  static fourier_basis build( product_domain const& domain, basis_kind kind = basis_kind::standard,
                              std::uint64_t seed = 0 )
  {
    fourier_basis basis;
    splitmix64 rng( seed );
    for ( std::size_t i = 0; i < domain.arity(); ++i )
    {
      auto const k = domain.cardinality( i );
      std::vector<std::vector<double>> rows;
      rows.push_back( std::vector<double>( k, 1.0 ) );
      for ( std::size_t j = 1; j < k; ++j )
      {
        std::vector<double> row( k );
        if ( kind == basis_kind::standard )
        {
          for ( std::size_t t = 0; t < k; ++t )
            row[t] = std::pow( static_cast<double>( domain.values( i )[t] ),
                               static_cast<double>( j ) );
        }
        else
        {
          do
          {
            for ( auto& x : row )
              x = 2.0 * rng.next_double() - 1.0;
          } while ( norm_after_projection( rows, row ) < 1e-6 );
        }
        orthonormalize( rows, row );
        rows.push_back( std::move( row ) );
      }
      basis.families_.push_back( std::move( rows ) );
    }
    return basis;
  }

  std::size_t arity() const { return families_.size(); }
  std::vector<std::vector<double>> const& family( std::size_t coord ) const
  {
    return families_.at( coord );
  }

  /*! phi_alpha at the point with mixed-radix index `idx` (both alpha and
      points use the same addressing). */
  double evaluate( std::vector<std::size_t> const& alpha, std::vector<std::size_t> const& pos ) const
  {
    double v = 1.0;
    for ( std::size_t i = 0; i < families_.size(); ++i )
      v *= families_[i][alpha[i]][pos[i]];
    return v;
  }

private:
  static double inner( std::vector<double> const& a, std::vector<double> const& b )
  {
    double s = 0.0;
    for ( std::size_t t = 0; t < a.size(); ++t )
      s += a[t] * b[t];
    return s / static_cast<double>( a.size() );
  }

  static double norm_after_projection( std::vector<std::vector<double>> const& rows,
                                       std::vector<double> row )
  {
    for ( auto const& prev : rows )
    {
      double const c = inner( row, prev );
      for ( std::size_t t = 0; t < row.size(); ++t )
        row[t] -= c * prev[t];
    }
    return std::sqrt( inner( row, row ) );
  }

  static void orthonormalize( std::vector<std::vector<double>> const& rows, std::vector<double>& row )
  {
    // Two Gram-Schmidt passes for numerical orthogonality.
    for ( int pass = 0; pass < 2; ++pass )
      for ( auto const& prev : rows )
      {
        double const c = inner( row, prev );
        for ( std::size_t t = 0; t < row.size(); ++t )
          row[t] -= c * prev[t];
      }
    double const nrm = std::sqrt( inner( row, row ) );
    for ( auto& x : row )
      x /= nrm;
    for ( std::size_t t = row.size(); t-- > 0; )
    {
      if ( std::abs( row[t] ) > 1e-12 )
      {
        if ( row[t] < 0 )
          for ( auto& x : row )
            x = -x;
        break;
      }
    }
  }

  std::vector<std::vector<std::vector<double>>> families_;
};

/*! Fourier coefficient table, indexed by multi-index alpha with the same
    mixed-radix addressing as domain points. */
struct spectrum
{
  std::vector<double> coefficients;
};

namespace detail
{

inline std::vector<std::size_t> mixed_radix_digits( product_domain const& dom, std::uint64_t idx )
{
  std::vector<std::size_t> digits( dom.arity() );
  for ( std::size_t i = dom.arity(); i-- > 0; )
  {
    auto const k = static_cast<std::uint64_t>( dom.cardinality( i ) );
    digits[i] = static_cast<std::size_t>( idx % k );
    idx /= k;
  }
  return digits;
}

} // namespace detail

/*! hat f(alpha) = E_x[f(x) phi_alpha(x)]. */
inline spectrum fourier_transform( mv_function const& f, fourier_basis const& basis )
{
  auto const& dom = f.domain();
  if ( basis.arity() != dom.arity() )
    throw std::invalid_argument( "basis/domain shape mismatch" );
  for ( std::size_t i = 0; i < dom.arity(); ++i )
    if ( basis.family( i ).size() != dom.cardinality( i ) )
      throw std::invalid_argument( "basis/domain shape mismatch" );

  auto const size = dom.size();
  std::vector<double> fx( size );
  std::vector<std::vector<std::size_t>> pos( size );
  for ( std::uint64_t idx = 0; idx < size; ++idx )
  {
    fx[idx] = to_double( f.value_at( idx ) );
    pos[idx] = detail::mixed_radix_digits( dom, idx );
  }

  spectrum spec;
  spec.coefficients.resize( size );
  for ( std::uint64_t a = 0; a < size; ++a )
  {
    auto const alpha = detail::mixed_radix_digits( dom, a );
    double s = 0.0;
    for ( std::uint64_t idx = 0; idx < size; ++idx )
      s += fx[idx] * basis.evaluate( alpha, pos[idx] );
    spec.coefficients[a] = s / static_cast<double>( size );
  }
  return spec;
}

/*! f(x) = sum_alpha hat f(alpha) phi_alpha(x), as a dense table in point
    index order. */
inline std::vector<double> inverse_transform( spectrum const& spec, fourier_basis const& basis,
                                              product_domain const& dom )
{
  if ( spec.coefficients.size() != dom.size() )
    throw std::invalid_argument( "spectrum/domain shape mismatch" );
  std::vector<double> fx( dom.size(), 0.0 );
  for ( std::uint64_t idx = 0; idx < dom.size(); ++idx )
  {
    auto const pos = detail::mixed_radix_digits( dom, idx );
    for ( std::uint64_t a = 0; a < dom.size(); ++a )
      fx[idx] += spec.coefficients[a] * basis.evaluate( detail::mixed_radix_digits( dom, a ), pos );
  }
  return fx;
}

/*! (E_i f)(x): the average of f over coordinate i with the other
    coordinates fixed; independent of x_i and of the Fourier basis. */
inline mv_function conditional_expectation( mv_function const& f, std::size_t i )
{
  auto const& dom = f.domain();
  if ( i >= dom.arity() )
    throw std::invalid_argument( "coordinate index out of range" );
  auto const k = dom.cardinality( i );
  std::vector<rational> out( dom.size() );
  for ( std::uint64_t idx = 0; idx < dom.size(); ++idx )
  {
    auto p = dom.point_at( idx );
    rational sum = 0;
    for ( int a : dom.values( i ) )
    {
      p[i] = a;
      sum += f.evaluate( p );
    }
    out[idx] = sum / static_cast<int>( k );
  }
  return { dom, std::move( out ) };
}

/*! L_i f = f - E_i f. */
inline mv_function laplacian( mv_function const& f, std::size_t i )
{
  auto const ei = conditional_expectation( f, i );
  std::vector<rational> out( f.domain().size() );
  for ( std::uint64_t idx = 0; idx < f.domain().size(); ++idx )
    out[idx] = f.value_at( idx ) - ei.value_at( idx );
  return { f.domain(), std::move( out ) };
}

/*! <f, g> = E_x[f(x) g(x)], exact. */
inline rational inner_product( mv_function const& f, mv_function const& g )
{
  if ( f.domain() != g.domain() )
    throw std::invalid_argument( "inner_product: domain mismatch" );
  rational sum = 0;
  for ( std::uint64_t idx = 0; idx < f.domain().size(); ++idx )
    sum += f.value_at( idx ) * g.value_at( idx );
  return sum / rational( f.domain().size() );
}

/*! Inf_i[f] = sum over alpha with alpha_i != 0 of hat f(alpha)^2. */
inline double influence_spectral( mv_function const& f, fourier_basis const& basis, std::size_t i )
{
  auto const spec = fourier_transform( f, basis );
  auto const& dom = f.domain();
  double s = 0.0;
  for ( std::uint64_t a = 0; a < dom.size(); ++a )
    if ( detail::mixed_radix_digits( dom, a )[i] != 0 )
      s += spec.coefficients[a] * spec.coefficients[a];
  return s;
}

} // namespace mvnc
