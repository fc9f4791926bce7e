/*!
  \file verifier.hpp
  \brief Exhaustive mod-8 check that every descent step can move sde by -1, 0 or +1

  For x, y in Z[omega] with |x|^2 + |y|^2 = 2^m (m >= 4) and
  gde(|x|^2) = gde(|y|^2) = j in {0, 1}, the valuation gde(|x + omega^k y|^2)
  must reach each of 1 + j, 2 + j, 3 + j for some k in 0..3. All quantities
  involved are decided by the coordinates mod 8, so the claim reduces to a
  finite check over residue vectors.
*/

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "ring.hpp"

namespace ringsynth
{

/*! \brief Z[omega] coordinates reduced mod 8. */
struct residue_vector
{
  std::array<uint8_t, 4> r{};

  bool operator==( const residue_vector& ) const = default;

  static residue_vector from_index( unsigned idx )
  {
    return { { static_cast<uint8_t>( idx & 7 ), static_cast<uint8_t>( ( idx >> 3 ) & 7 ),
               static_cast<uint8_t>( ( idx >> 6 ) & 7 ), static_cast<uint8_t>( ( idx >> 9 ) & 7 ) } };
  }
  static residue_vector from_zomega( const zomega& x )
  {
    residue_vector v;
    for ( int i = 0; i < 4; ++i )
    {
      integer m = x[i] % 8;
      if ( m < 0 )
        m += 8;
      v.r[i] = static_cast<uint8_t>( m.convert_to<int>() );
    }
    return v;
  }

  residue_vector operator+( const residue_vector& o ) const
  {
    residue_vector v;
    for ( int i = 0; i < 4; ++i )
      v.r[i] = ( r[i] + o.r[i] ) & 7;
    return v;
  }

  residue_vector mul_omega() const
  {
    return { { static_cast<uint8_t>( ( 8 - r[3] ) & 7 ), r[0], r[1], r[2] } };
  }

  residue_vector mul_omega_power( int k ) const
  {
    residue_vector v = *this;
    for ( int i = 0; i < ( ( k % 8 ) + 8 ) % 8; ++i )
      v = v.mul_omega();
    return v;
  }

  residue_vector mul_sqrt2() const
  {
    return { { static_cast<uint8_t>( ( r[1] - r[3] ) & 7 ), static_cast<uint8_t>( ( r[0] + r[2] ) & 7 ),
               static_cast<uint8_t>( ( r[1] + r[3] ) & 7 ), static_cast<uint8_t>( ( r[2] - r[0] ) & 7 ) } };
  }
};

/*! \brief gde value known exactly in 0..5, or only known to be at least 6. */
class capped_gde
{
public:
  static constexpr int cap = 6;

  static capped_gde exact( int v ) { return capped_gde( v ); }
  static capped_gde at_least_cap() { return capped_gde( cap ); }

  bool is_exact() const noexcept { return value_ < cap; }
  int value() const noexcept { return value_; }

  bool operator==( const capped_gde& ) const = default;

private:
  explicit capped_gde( int v ) : value_( v ) {}
  int value_;
};

/*! \brief (P mod 8, Q mod 8) */
inline std::pair<int, int> residue_forms( const residue_vector& x )
{
  const int x0 = x.r[0], x1 = x.r[1], x2 = x.r[2], x3 = x.r[3];
  const int p = x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3;
  const int q = x0 * ( x1 - x3 ) + x2 * ( x1 + x3 );
  return { p & 7, q & 7 };
}

namespace detail
{
/* 2-adic valuation of a residue mod 8, 3 meaning "at least 3" */
inline int v2_mod8( int a )
{
  a &= 7;
  if ( a == 0 )
    return 3;
  int v = 0;
  while ( !( a & 1 ) )
  {
    a >>= 1;
    ++v;
  }
  return v;
}
} // namespace detail

/*! \brief gde(|x|^2) from the residues of P(x) and Q(x).
 *
 * gde(a + sqrt2 b) = 2 v2(a) when v2(b) >= v2(a), else 2 v2(b) + 1. With only
 * mod-8 data the valuations saturate at 3; if both saturate the result is at
 * least 6.
 */
inline capped_gde residue_gde_abs_sq( const residue_vector& x )
{
  const auto [p, q] = residue_forms( x );
  const int va = detail::v2_mod8( p );
  const int vb = detail::v2_mod8( q );
  if ( va == 3 && vb == 3 )
    return capped_gde::at_least_cap();
  if ( vb >= va )
    return capped_gde::exact( 2 * va );
  return capped_gde::exact( 2 * vb + 1 );
}

struct verification_witness
{
  residue_vector x;
  residue_vector y;
  int j = 0;
  int d = 0;
};

struct verification_options
{
  std::vector<int> ks{ 0, 1, 2, 3 };
  std::vector<int> ds{ 1, 2, 3 };
  std::vector<int> js{ 0, 1 };
};

struct verification_result
{
  bool ok = true;
  std::optional<verification_witness> witness; /* first failing case */
  uint64_t pairs_checked = 0;
};

/*! \brief Runs the residue-class check; options allow ablations. */
inline verification_result verify_lemma_detailed( const verification_options& options = {} )
{
  /* buckets[j][a][b] */
  std::array<std::array<std::array<std::vector<residue_vector>, 8>, 8>, 2> buckets;
  for ( unsigned idx = 0; idx < 4096; ++idx )
  {
    const auto x = residue_vector::from_index( idx );
    const auto g = residue_gde_abs_sq( x );
    if ( g.value() > 1 )
      continue;
    const auto [a, b] = residue_forms( x );
    buckets[g.value()][a][b].push_back( x );
  }

  verification_result result;
  for ( int j : options.js )
  {
    for ( int ax = 0; ax < 8; ++ax )
    {
      for ( int bx = 0; bx < 8; ++bx )
      {
        const int ay = ( 8 - ax ) & 7;
        const int by = ( 8 - bx ) & 7;
        for ( const auto& x : buckets[j][ax][bx] )
        {
          for ( const auto& y : buckets[j][ay][by] )
          {
            ++result.pairs_checked;
            for ( int d : options.ds )
            {
              bool found = false;
              for ( int k : options.ks )
              {
                const auto g = residue_gde_abs_sq( x + y.mul_omega_power( k ) );
                if ( g.is_exact() && g.value() == d + j )
                {
                  found = true;
                  break;
                }
              }
              if ( !found )
              {
                result.ok = false;
                result.witness = verification_witness{ x, y, j, d };
                return result;
              }
            }
          }
        }
      }
    }
  }
  return result;
}

inline bool verify_lemma()
{
  return verify_lemma_detailed().ok;
}

} // namespace ringsynth
