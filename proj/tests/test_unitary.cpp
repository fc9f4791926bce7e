#include <gtest/gtest.h>

#include "ring_laws.hpp"

using namespace ringsynth;

namespace
{

ring_unitary ht_power( int n )
{
  auto u = ring_unitary::identity();
  for ( int i = 0; i < n; ++i )
    u = u_mul( u, u_mul( ring_unitary::h(), ring_unitary::t() ) );
  return u;
}

} // namespace

TEST( unitary, products )
{
  EXPECT_EQ( u_mul( ring_unitary::h(), ring_unitary::h() ), ring_unitary::identity() );
  EXPECT_EQ( u_mul( ring_unitary::t(), ring_unitary::t() ), ring_unitary::p() );
  EXPECT_EQ( u_mul( ring_unitary::p(), ring_unitary::p() ), ring_unitary::z() );
  EXPECT_EQ( u_mul( ring_unitary::t(), ring_unitary::tdag() ), ring_unitary::identity() );
  EXPECT_EQ( u_mul( ring_unitary::x(), ring_unitary::x() ), ring_unitary::identity() );
  /* XY = iZ */
  EXPECT_EQ( u_mul( ring_unitary::x(), ring_unitary::y() ), ring_unitary::z().mul_omega_power( 2 ) );
  EXPECT_EQ( u_dagger( ring_unitary::t() ), ring_unitary::tdag() );

  const auto s = u_apply( u_mul( ring_unitary::h(), ring_unitary::t() ), ring_state::zero_ket() );
  EXPECT_EQ( s.z, ring_scalar::inv_sqrt2() );
  EXPECT_EQ( s.w, ring_scalar::inv_sqrt2() );
}

TEST( unitary, validate )
{
  EXPECT_EQ( validate( ring_unitary::h() ), 4 );
  EXPECT_EQ( validate( ring_unitary::identity() ), 0 );
  EXPECT_EQ( validate( ring_unitary::t() ), 1 );
  EXPECT_NO_THROW( validate( ht_power( 4 ) ) );
  const auto one = ring_scalar::from_int( 1 );
  const ring_unitary bad( one, one, ring_scalar{}, one );
  EXPECT_THROW( validate( bad ), unitarity_error );
  try
  {
    validate( ring_unitary( one, ring_scalar{}, ring_scalar{}, ring_scalar::from_int( 2 ) ) );
    FAIL();
  }
  catch ( const unitarity_error& e )
  {
    EXPECT_NE( std::string( e.what() ).find( "column 1" ), std::string::npos ) << e.what();
  }
}

TEST( unitary, determinant_phase_is_additive )
{
  std::mt19937_64 rng( 21 );
  for ( int i = 0; i < 300; ++i )
  {
    circuit a, b;
    for ( int j = 0; j < 12; ++j )
    {
      a.push_back( all_gates[rng() % all_gates.size()] );
      b.push_back( all_gates[rng() % all_gates.size()] );
    }
    const auto ua = a.evaluate(), ub = b.evaluate();
    EXPECT_EQ( validate( u_mul( ua, ub ) ), ( validate( ua ) + validate( ub ) ) % 8 );
  }
}

TEST( unitary, sde_measure_examples )
{
  for ( int j0 = 0; j0 < 8; ++j0 )
    for ( int j1 = 0; j1 < 8; ++j1 )
      EXPECT_EQ( sde_measure( ring_unitary::diagonal( j0, j1 ) ), 0 );
  EXPECT_EQ( sde_measure( ring_unitary::x() ), 0 );
  // |1/sqrt2|^2 = 1/2 = 1/sqrt2^2
  EXPECT_EQ( sde_measure( ring_unitary::h() ), 2 );
  EXPECT_EQ( sde_measure( ht_power( 4 ) ), 5 );
}

TEST( unitary, sde_measure_is_entry_independent )
{
  std::mt19937_64 rng( 22 );
  for ( int i = 0; i < 500; ++i )
  {
    const auto u = oracle::random_ht_word( rng, 40 ).evaluate();
    if ( sde_measure( u ) == 0 )
      continue;
    for ( const auto& e : u.entries() )
      EXPECT_EQ( sde_abs_sq( e ).value(), sde_measure( u ) );
  }
}

TEST( unitary, equal_up_to_phase )
{
  const auto u = ht_power( 3 );
  EXPECT_EQ( equal_up_to_phase( u, u ), 0 );
  EXPECT_EQ( equal_up_to_phase( u.mul_omega_power( 3 ), u ), 3 );
  EXPECT_EQ( equal_up_to_phase( ring_unitary::h(), ring_unitary::t() ), std::nullopt );
  EXPECT_EQ( equal_up_to_phase( ring_unitary::z(), ring_unitary::identity() ), std::nullopt );
}

TEST( unitary, complete_from_column )
{
  EXPECT_EQ( complete_from_column( ring_state::zero_ket(), 0 ), ring_unitary::identity() );
  const ring_state plus{ ring_scalar::inv_sqrt2(), ring_scalar::inv_sqrt2() };
  EXPECT_EQ( complete_from_column( plus, 4 ), ring_unitary::h() );

  std::mt19937_64 rng( 23 );
  for ( int i = 0; i < 300; ++i )
  {
    const auto u = oracle::random_ht_word( rng, 1 + rng() % 30 ).evaluate();
    int matches = 0;
    for ( int k = 0; k < 8; ++k )
    {
      const auto c = complete_from_column( u.column( 0 ), k );
      EXPECT_NO_THROW( validate( c ) );
      if ( equal_up_to_phase( c, u ) )
        ++matches;
    }
    EXPECT_EQ( matches, 1 );
  }
}

TEST( unitary, phase_canonicalization )
{
  std::mt19937_64 rng( 24 );
  for ( int i = 0; i < 300; ++i )
  {
    const auto u = oracle::random_ht_word( rng, 1 + rng() % 30 ).evaluate();
    const auto c = canonicalize_phase( u );
    EXPECT_EQ( c.representative, u.mul_omega_power( c.phase_index ) );
    /* brute-force lexicographic minimum over all eight multiples */
    auto best = u;
    for ( int j = 1; j < 8; ++j )
      if ( lex_less( u.mul_omega_power( j ), best ) )
        best = u.mul_omega_power( j );
    EXPECT_EQ( c.representative, best );
    for ( int j = 0; j < 8; ++j )
      EXPECT_EQ( phase_key( u.mul_omega_power( j ) ), phase_key( u ) );
  }
  EXPECT_NE( phase_key( ring_unitary::h() ), phase_key( ring_unitary::t() ) );
}

TEST( unitary, state_lemmas )
{
  const auto rep = oracle::check_state_lemmas( 10000, 2026 );
  for ( const auto& [name, v] : rep.violations )
    EXPECT_EQ( v, 0u ) << name;
  EXPECT_TRUE( rep.violations.count( "every sde delta in {-1,0,1} reachable" ) );
}
