// Shared oracles for the unit and acceptance tests.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <ringsynth/circuit.hpp>
#include <ringsynth/ring.hpp>
#include <ringsynth/unitary.hpp>

namespace oracle
{

using namespace ringsynth;

/* 100 decimal digits; 64-bit coordinates multiply to ~40 digits */
using real = boost::multiprecision::cpp_bin_float_100;

struct cplx
{
  real re, im;
};

inline const real& inv_sqrt2()
{
  static const real v = 1 / boost::multiprecision::sqrt( real( 2 ) );
  return v;
}

/* x0 + x1 w + x2 i + x3 i w with w = (1 + i)/sqrt2 */
inline cplx evaluate( const zomega& x )
{
  const real x0( x[0] ), x1( x[1] ), x2( x[2] ), x3( x[3] );
  return { x0 + inv_sqrt2() * ( x1 - x3 ), x2 + inv_sqrt2() * ( x1 + x3 ) };
}

inline cplx evaluate( const ring_scalar& z )
{
  auto c = evaluate( z.num() );
  const real scale = boost::multiprecision::pow( inv_sqrt2(), static_cast<int>( z.k() ) );
  return { c.re * scale, c.im * scale };
}

inline cplx mul( const cplx& a, const cplx& b )
{
  return { a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re };
}

inline real abs_diff( const cplx& a, const cplx& b )
{
  return boost::multiprecision::abs( a.re - b.re ) + boost::multiprecision::abs( a.im - b.im );
}

inline real magnitude( const cplx& a )
{
  return boost::multiprecision::abs( a.re ) + boost::multiprecision::abs( a.im );
}

/* Valuation of a + sqrt2 b by repeated division in Z[sqrt2]; -1 for zero. */
inline int64_t gde_real_by_division( integer a, integer b )
{
  if ( a == 0 && b == 0 )
    return -1;
  int64_t e = 0;
  /* (a + sqrt2 b) / sqrt2 = b + sqrt2 (a / 2) */
  while ( a % 2 == 0 )
  {
    integer na = b;
    b = a / 2;
    a = na;
    ++e;
  }
  return e;
}

inline zomega random_zomega( std::mt19937_64& rng )
{
  auto draw = [&]() { return integer( static_cast<int64_t>( rng() ) ); };
  return zomega( draw(), draw(), draw(), draw() );
}

inline zomega random_small_zomega( std::mt19937_64& rng, int bound )
{
  std::uniform_int_distribution<int> d( -bound, bound );
  return zomega( d( rng ), d( rng ), d( rng ), d( rng ) );
}

/* every x with |x_i| <= 2 */
inline std::vector<zomega> small_box()
{
  std::vector<zomega> out;
  for ( int a = -2; a <= 2; ++a )
    for ( int b = -2; b <= 2; ++b )
      for ( int c = -2; c <= 2; ++c )
        for ( int d = -2; d <= 2; ++d )
          out.emplace_back( a, b, c, d );
  return out;
}

inline circuit random_ht_word( std::mt19937_64& rng, std::size_t length )
{
  circuit c;
  for ( std::size_t i = 0; i < length; ++i )
    c.push_back( ( rng() & 1 ) ? gate::h : gate::t );
  return c;
}

/* all phase classes of {H, T} words of length <= max_length */
inline std::vector<ring_unitary> ht_closure( int max_length )
{
  std::unordered_map<std::string, bool> seen;
  std::vector<ring_unitary> all{ ring_unitary::identity() };
  seen[phase_key( all.front() )] = true;
  std::vector<ring_unitary> layer = all;
  for ( int d = 0; d < max_length; ++d )
  {
    std::vector<ring_unitary> next;
    for ( const auto& u : layer )
    {
      for ( auto g : { gate::h, gate::t } )
      {
        auto v = apply_gate( g, u );
        if ( seen.emplace( phase_key( v ), true ).second )
          next.push_back( v );
      }
    }
    all.insert( all.end(), next.begin(), next.end() );
    layer = std::move( next );
  }
  return all;
}

/* sde-scaled numerators of a state column: x = z sqrt2^s, y = w sqrt2^s */
inline std::pair<zomega, zomega> lift_column( const ring_state& s, int64_t e )
{
  auto scale = [e]( const ring_scalar& v ) {
    zomega n = v.num();
    for ( int64_t i = v.k(); i < e; ++i )
      n = n.mul_sqrt2();
    return n;
  };
  return { scale( s.z ), scale( s.w ) };
}

} // namespace oracle
