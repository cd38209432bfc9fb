/*!
  \file rng.hpp
  \brief Deterministic 64-bit random source (splitmix64)

  splitmix64 (Steele, Lea, Flood 2014): state advances by the constant
  0x9e3779b97f4a7c15 and the output is a fixed avalanche mix of the
  state. Chosen because the algorithm is short enough to restate in any
  implementation language, making seeds and test vectors portable.
  Bounded draws use rejection sampling, so they are unbiased and
  platform-independent.
*/

#pragma once

#include <cstdint>

namespace mvnc
{

class splitmix64
{
public:
  explicit splitmix64( std::uint64_t seed ) : state_( seed ) {}

  std::uint64_t next()
  {
    std::uint64_t z = ( state_ += 0x9e3779b97f4a7c15ull );
    z = ( z ^ ( z >> 30 ) ) * 0xbf58476d1ce4e5b9ull;
    z = ( z ^ ( z >> 27 ) ) * 0x94d049bb133111ebull;
    return z ^ ( z >> 31 );
  }

  /*! Uniform in {0,...,bound-1}, rejection-sampled. */
  std::uint64_t below( std::uint64_t bound )
  {
    std::uint64_t const threshold = ( 0 - bound ) % bound;
    for ( ;; )
    {
      std::uint64_t const v = next();
      if ( v >= threshold )
        return v % bound;
    }
  }

  /*! Uniform in [0, 1) with 53 bits of precision. */
  double next_double()
  {
    return static_cast<double>( next() >> 11 ) * 0x1.0p-53;
  }

  /*! Child stream seeded from this stream. */
  splitmix64 split()
  {
    return splitmix64( next() );
  }

private:
  std::uint64_t state_;
};

} // namespace mvnc
