/*!
  \file unitary.hpp
  \brief Unit vectors and 2x2 unitaries with entries in Z[1/sqrt2, i]
*/

#pragma once

#include <array>
#include <optional>
#include <string>

#include "ring.hpp"

namespace ringsynth
{

/*! \brief Column vector (z, w). */
struct ring_state
{
  ring_scalar z;
  ring_scalar w;

  bool operator==( const ring_state& ) const = default;

  static ring_state zero_ket() { return { ring_scalar::from_int( 1 ), ring_scalar{} }; }

  bool is_normalized() const { return z.abs_sq() + w.abs_sq() == ring_scalar::from_int( 1 ); }
};

/*! \brief Matrix [[z00, z01], [z10, z11]]. */
class ring_unitary
{
public:
  ring_unitary() : ring_unitary( identity() ) {}
  ring_unitary( ring_scalar z00, ring_scalar z01, ring_scalar z10, ring_scalar z11 )
      : e_{ std::move( z00 ), std::move( z01 ), std::move( z10 ), std::move( z11 ) }
  {
  }

  static ring_unitary identity()
  {
    return { ring_scalar::from_int( 1 ), {}, {}, ring_scalar::from_int( 1 ) };
  }
  static ring_unitary diagonal( int j0, int j1 )
  {
    return { ring_scalar::omega_power( j0 ), {}, {}, ring_scalar::omega_power( j1 ) };
  }

  static ring_unitary h()
  {
    const auto s = ring_scalar::inv_sqrt2();
    return { s, s, s, -s };
  }
  static ring_unitary t() { return diagonal( 0, 1 ); }
  static ring_unitary tdag() { return diagonal( 0, 7 ); }
  static ring_unitary p() { return diagonal( 0, 2 ); }
  static ring_unitary pdag() { return diagonal( 0, 6 ); }
  static ring_unitary z() { return diagonal( 0, 4 ); }
  static ring_unitary x() { return { {}, ring_scalar::from_int( 1 ), ring_scalar::from_int( 1 ), {} }; }
  static ring_unitary y() { return { {}, ring_scalar::omega_power( 6 ), ring_scalar::omega_power( 2 ), {} }; }
  /*! \brief T^k for any integer k */
  static ring_unitary t_power( int k ) { return diagonal( 0, k ); }

  const ring_scalar& operator()( int row, int col ) const { return e_[2 * row + col]; }
  ring_scalar& operator()( int row, int col ) { return e_[2 * row + col]; }
  const std::array<ring_scalar, 4>& entries() const noexcept { return e_; }

  bool operator==( const ring_unitary& ) const = default;

  ring_unitary operator*( const ring_unitary& o ) const
  {
    const auto& a = *this;
    return { a( 0, 0 ) * o( 0, 0 ) + a( 0, 1 ) * o( 1, 0 ), a( 0, 0 ) * o( 0, 1 ) + a( 0, 1 ) * o( 1, 1 ),
             a( 1, 0 ) * o( 0, 0 ) + a( 1, 1 ) * o( 1, 0 ), a( 1, 0 ) * o( 0, 1 ) + a( 1, 1 ) * o( 1, 1 ) };
  }

  ring_unitary dagger() const { return { e_[0].conj(), e_[2].conj(), e_[1].conj(), e_[3].conj() }; }

  ring_state apply( const ring_state& s ) const
  {
    return { e_[0] * s.z + e_[1] * s.w, e_[2] * s.z + e_[3] * s.w };
  }

  ring_state column( int c ) const { return { ( *this )( 0, c ), ( *this )( 1, c ) }; }

  ring_unitary mul_omega_power( int j ) const
  {
    return { e_[0].mul_omega_power( j ), e_[1].mul_omega_power( j ), e_[2].mul_omega_power( j ),
             e_[3].mul_omega_power( j ) };
  }

  /* the cheap left/right actions used on hot paths */

  /*! \brief H * this */
  ring_unitary left_h() const
  {
    return { ( e_[0] + e_[2] ).div_sqrt2(), ( e_[1] + e_[3] ).div_sqrt2(), ( e_[0] - e_[2] ).div_sqrt2(),
             ( e_[1] - e_[3] ).div_sqrt2() };
  }
  /*! \brief diag(omega^j0, omega^j1) * this */
  ring_unitary left_diagonal( int j0, int j1 ) const
  {
    return { e_[0].mul_omega_power( j0 ), e_[1].mul_omega_power( j0 ), e_[2].mul_omega_power( j1 ),
             e_[3].mul_omega_power( j1 ) };
  }
  /*! \brief X * this */
  ring_unitary left_x() const { return { e_[2], e_[3], e_[0], e_[1] }; }
  /*! \brief this * diag(omega^j0, omega^j1) */
  ring_unitary right_diagonal( int j0, int j1 ) const
  {
    return { e_[0].mul_omega_power( j0 ), e_[1].mul_omega_power( j1 ), e_[2].mul_omega_power( j0 ),
             e_[3].mul_omega_power( j1 ) };
  }
  /*! \brief this * H */
  ring_unitary right_h() const
  {
    return { ( e_[0] + e_[1] ).div_sqrt2(), ( e_[0] - e_[1] ).div_sqrt2(), ( e_[2] + e_[3] ).div_sqrt2(),
             ( e_[2] - e_[3] ).div_sqrt2() };
  }

  ring_scalar determinant() const { return e_[0] * e_[3] - e_[1] * e_[2]; }

private:
  std::array<ring_scalar, 4> e_;
};

/*! \brief Checks unit columns, orthogonality and det = omega^k; returns k. */
inline int validate( const ring_unitary& u )
{
  const auto one = ring_scalar::from_int( 1 );
  for ( int c = 0; c < 2; ++c )
  {
    if ( u( 0, c ).abs_sq() + u( 1, c ).abs_sq() != one )
    {
      throw unitarity_error( "column " + std::to_string( c ) + " is not a unit vector" );
    }
  }
  if ( !( u( 0, 0 ).conj() * u( 0, 1 ) + u( 1, 0 ).conj() * u( 1, 1 ) ).is_zero() )
  {
    throw unitarity_error( "columns are not orthogonal" );
  }
  const auto k = is_unit_modulus( u.determinant() );
  if ( !k )
  {
    throw unitarity_error( "determinant is not a power of omega" );
  }
  return *k;
}

inline ring_unitary u_mul( const ring_unitary& a, const ring_unitary& b ) { return a * b; }
inline ring_unitary u_dagger( const ring_unitary& a ) { return a.dagger(); }
inline ring_state u_apply( const ring_unitary& a, const ring_state& s ) { return a.apply( s ); }

/*! \brief sde(|z|^2) shared by all entries; 0 for monomial unitaries.
 *
 * When some entry has positive sde every entry has the same sde(|.|^2), so the
 * top-left entry is representative. Diagonal and anti-diagonal unitaries
 * have unit-modulus entries and are assigned 0.
 */
inline int64_t sde_measure( const ring_unitary& u )
{
  if ( u( 0, 0 ).is_zero() || u( 0, 1 ).is_zero() )
  {
    return 0;
  }
  return std::max<int64_t>( 0, sde_abs_sq( u( 0, 0 ) ).value() );
}

/*! \brief k with a = omega^k b, if any. */
inline std::optional<int> equal_up_to_phase( const ring_unitary& a, const ring_unitary& b )
{
  /* locate a nonzero entry of b to fix the candidate phase */
  for ( int i = 0; i < 4; ++i )
  {
    const auto& be = b.entries()[i];
    if ( be.is_zero() )
      continue;
    const auto& ae = a.entries()[i];
    for ( int k = 0; k < 8; ++k )
    {
      if ( be.mul_omega_power( k ) == ae )
      {
        return a == b.mul_omega_power( k ) ? std::optional<int>( k ) : std::nullopt;
      }
    }
    return std::nullopt;
  }
  return std::nullopt;
}

/*! \brief Unitary [[z, -w* omega^k], [w, z* omega^k]] with first column s. */
inline ring_unitary complete_from_column( const ring_state& s, int k )
{
  return { s.z, ( -s.w.conj() ).mul_omega_power( k ), s.w, s.z.conj().mul_omega_power( k ) };
}

/*! \brief Lexicographic ordering on (numerator coordinates, exponents). */
inline bool lex_less( const ring_unitary& a, const ring_unitary& b )
{
  for ( int i = 0; i < 4; ++i )
  {
    const auto& x = a.entries()[i].num();
    const auto& y = b.entries()[i].num();
    if ( x != y )
      return x < y;
  }
  for ( int i = 0; i < 4; ++i )
  {
    const auto ka = a.entries()[i].k();
    const auto kb = b.entries()[i].k();
    if ( ka != kb )
      return ka < kb;
  }
  return false;
}

/*! \brief Representative of the global-phase class of u.
 *
 * The least of the eight multiples omega^j u under lex_less. The returned
 * index is j, so canonical = omega^j u.
 */
struct phase_class
{
  ring_unitary representative;
  int phase_index = 0;
};

inline phase_class canonicalize_phase( const ring_unitary& u )
{
  /* omega^j acts on each numerator without fixed points, so the first nonzero
     entry alone decides the lexicographic minimum */
  for ( const auto& e : u.entries() )
  {
    if ( e.is_zero() )
      continue;
    int best_j = 0;
    zomega best = e.num();
    for ( int j = 1; j < 8; ++j )
    {
      auto cand = e.num().mul_omega_power( j );
      if ( cand < best )
      {
        best = std::move( cand );
        best_j = j;
      }
    }
    return { u.mul_omega_power( best_j ), best_j };
  }
  return { u, 0 };
}

/*! \brief Compact string identifying the phase class; used as hash key. */
inline std::string phase_key( const ring_unitary& u )
{
  const auto rep = canonicalize_phase( u ).representative;
  std::string key;
  for ( const auto& e : rep.entries() )
  {
    key += e.num().to_string();
    key += '/';
    key += std::to_string( e.k() );
    key += ';';
  }
  return key;
}

} // namespace ringsynth
