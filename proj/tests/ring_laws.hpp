// Randomized and exhaustive checks of the ring identities and the column lemmas.
// Each check returns violation counts keyed by property name.

#pragma once

#include <map>
#include <string>

#include "support.hpp"

namespace oracle
{

struct law_report
{
  uint64_t instances = 0;
  std::map<std::string, uint64_t> violations;

  void check( const std::string& name, bool ok )
  {
    auto& v = violations[name];
    if ( !ok )
      ++v;
  }

  uint64_t total_violations() const
  {
    uint64_t n = 0;
    for ( const auto& [_, v] : violations )
      n += v;
    return n;
  }
};

inline int64_t gde_int( const zomega& x ) { return gde( x ).value(); }

inline int64_t gde_abs_sq_int( const zomega& x ) { return gde_real( norm_sq( x ) ).value(); }

inline bool odd( const integer& n ) { return n % 2 != 0; }

/* Single-element laws. */
inline void check_unary_laws( law_report& rep, const zomega& x )
{
  const auto nx = norm_sq( x );
  rep.check( "|x|^2 = P + sqrt2 Q equals x conj(x)", nx.to_zomega() == x * x.conj() );
  rep.check( "mod2 P", !odd( form_p( x ) - ( x[1] + x[3] ) - ( x[0] + x[2] ) ) );
  rep.check( "mod2 Q", !odd( form_q( x ) - ( x[1] + x[3] ) * ( x[0] + x[2] ) ) );
  rep.check( "F(sqrt2 x, x) = 2 Q(x)", form_f( x.mul_sqrt2(), x ) == 2 * form_q( x ) );
  rep.check( "F(x, x) = P(x)", form_f( x, x ) == form_p( x ) );
  rep.check( "sqrt2 sqrt2 x = 2 x", x.mul_sqrt2().mul_sqrt2() == x * integer( 2 ) );

  if ( x.is_zero() )
  {
    rep.check( "gde(0) infinite", gde( x ).is_infinite() && gde_real( nx ).is_infinite() );
    return;
  }
  const auto g = gde_int( x );
  const auto gr = gde_abs_sq_int( x );
  rep.check( "gde_real matches division oracle", gr == gde_real_by_division( nx.a, nx.b ) );
  rep.check( "0 <= gde(|x|^2) - 2 gde(x) <= 1", gr - 2 * g == 0 || gr - 2 * g == 1 );
  rep.check( "gde dual method", g == gde_real_by_division( nx.a, nx.b ) / 2 );
  for ( int e = 0; e <= 3; ++e )
  {
    zomega y = x;
    for ( int i = 0; i < e; ++i )
      y = y.mul_sqrt2();
    rep.check( "sqrt2 power extraction", gde_int( y ) == e + g );
  }
  if ( g == 0 )
    rep.check( "parity alternatives", odd( form_p( x ) ) != odd( form_q( x ) ) );
  const bool divisible = x.try_div_sqrt2().has_value();
  const bool two_divides = !odd( nx.a ) && !odd( nx.b );
  rep.check( "divisibility equivalence", divisible == two_divides && divisible == ( gr >= 2 ) );
  if ( divisible )
    rep.check( "div_sqrt2 inverts mul_sqrt2", x.div_sqrt2().mul_sqrt2() == x );
  rep.check( "omega/conj images keep gde", gde_int( x.mul_omega().conj() ) == g );
}

/* Two-element laws. */
inline void check_binary_laws( law_report& rep, const zomega& x, const zomega& y )
{
  const auto ex = evaluate( x ), ey = evaluate( y );
  const real tol = real( "1e-80" ) * ( 1 + magnitude( ex ) ) * ( 1 + magnitude( ey ) );
  rep.check( "product matches complex oracle", abs_diff( evaluate( x * y ), mul( ex, ey ) ) <= tol );
  rep.check( "sum matches complex oracle",
             abs_diff( evaluate( x + y ), { ex.re + ey.re, ex.im + ey.im } ) <= tol );
  rep.check( "conj matches complex oracle", abs_diff( evaluate( x.conj() ), { ex.re, -ex.im } ) <= tol );
  rep.check( "omega multiplication matches complex oracle",
             abs_diff( evaluate( x.mul_omega() ), mul( ex, evaluate( zomega::omega() ) ) ) <= tol );
  rep.check( "conj is multiplicative", ( x * y ).conj() == x.conj() * y.conj() );
  rep.check( "mod2 F(sqrt2 x, y)", !odd( form_f( x.mul_sqrt2(), y ) - ( x[1] + x[3] ) * ( y[0] + y[2] ) -
                                          ( x[0] + x[2] ) * ( y[1] + y[3] ) ) );

  /* Re(sqrt2 x conj(y)) two ways: ring arithmetic and the F identity */
  const auto p = x * y.conj();
  const auto twice_re = ( p + p.conj() ).mul_sqrt2();
  const real_zsqrt2 via_f{ form_f( x.mul_sqrt2(), y ), form_f( x, y ) };
  rep.check( "Re(sqrt2 x y*) = sqrt2 F(x,y) + F(sqrt2 x, y)", twice_re == via_f.to_zomega() * integer( 2 ) );

  if ( x.is_zero() || y.is_zero() )
    return;
  const auto gx = gde_int( x ), gy = gde_int( y );
  const auto s = x + y;
  if ( !s.is_zero() )
  {
    const auto gs = gde_int( s );
    rep.check( "absorption bound", gs >= std::min( gx, gy ) );
    if ( gx != gy )
      rep.check( "absorption equality", gs == std::min( gx, gy ) );
  }
  const auto rx = gde_abs_sq_int( x ), ry = gde_abs_sq_int( y );
  if ( !via_f.is_zero() )
    rep.check( "gde of F(x, y) floor bound", gde( via_f.to_zomega() ).value() >= ( rx + ry ) / 2 );
  if ( rx == ry )
    rep.check( "gde invariance reduction", gx == gy );
}

/* Random 64-bit values, with a share pre-multiplied by sqrt2^e to reach higher valuations. */
inline law_report check_ring_laws_random( uint64_t count, uint64_t seed )
{
  std::mt19937_64 rng( seed );
  law_report rep;
  auto draw = [&]() {
    auto x = random_zomega( rng );
    const int e = static_cast<int>( rng() % 8 );
    if ( e < 4 )
      for ( int i = 0; i < e; ++i )
        x = x.mul_sqrt2();
    return x;
  };
  for ( uint64_t i = 0; i < count; ++i )
  {
    const auto x = draw();
    const auto y = draw();
    check_unary_laws( rep, x );
    check_binary_laws( rep, x, y );
    ++rep.instances;
  }
  return rep;
}

/* All |x_i| <= 2 for unary laws; pairs drawn from the box. */
inline law_report check_ring_laws_box( uint64_t pair_samples, uint64_t seed )
{
  std::mt19937_64 rng( seed );
  const auto box = small_box();
  law_report rep;
  for ( const auto& x : box )
  {
    check_unary_laws( rep, x );
    ++rep.instances;
  }
  for ( uint64_t i = 0; i < pair_samples; ++i )
  {
    check_binary_laws( rep, box[rng() % box.size()], box[rng() % box.size()] );
    ++rep.instances;
  }
  return rep;
}

/* Column lemmas on states from random {H, T} words. */
inline law_report check_state_lemmas( uint64_t count, uint64_t seed )
{
  std::mt19937_64 rng( seed );
  law_report rep;
  for ( uint64_t i = 0; i < count; ++i )
  {
    const auto u = random_ht_word( rng, 8 + rng() % 56 ).evaluate();
    const auto s = u.column( 0 );
    ++rep.instances;

    const auto sz = sde( s.z ), sw = sde( s.w );
    if ( ( !s.z.is_zero() && sz.value() >= 1 ) || ( !s.w.is_zero() && sw.value() >= 1 ) )
    {
      rep.check( "column sde(z) = sde(w)", sz == sw );
      const auto [x, y] = lift_column( s, sz.value() );
      const auto gx = gde_abs_sq_int( x ), gy = gde_abs_sq_int( y );
      rep.check( "column gde(|x|^2) = gde(|y|^2) <= 1", gx == gy && gx <= 1 );

      /* |x|^2 + |y|^2 = sqrt2^m with m = 2 sde */
      const int64_t m = 2 * sz.value();
      rep.check( "unit column norm", ( norm_sq( x ) + norm_sq( y ) ).to_zomega() ==
                                            ( [m] {
                                              zomega p = zomega::from_int( 1 );
                                              for ( int64_t e = 0; e < m; ++e )
                                                p = p.mul_sqrt2();
                                              return p;
                                            } )() );
      for ( int k = 0; k < 8; ++k )
      {
        const auto t = x + y.mul_omega_power( k );
        if ( t.is_zero() )
          continue;
        rep.check( "sum gde lower bound", gde_abs_sq_int( t ) >= std::min<int64_t>( m, 1 + ( gx + gy ) / 2 ) );
      }
    }

    const auto s0 = sde_abs_sq( s.z );
    if ( !s.z.is_zero() && s0.value() >= 4 )
    {
      bool seen[3] = { false, false, false };
      for ( int k = 0; k < 4; ++k )
      {
        const auto v = ring_unitary::h() * ring_unitary::t_power( k );
        const auto n = v.apply( s );
        const auto d = sde_abs_sq( n.z ).value() - s0.value();
        rep.check( "single step |delta sde| <= 1", d >= -1 && d <= 1 );
        if ( d >= -1 && d <= 1 )
          seen[d + 1] = true;
      }
      rep.check( "every sde delta in {-1,0,1} reachable", seen[0] && seen[1] && seen[2] );
    }
  }
  return rep;
}

} // namespace oracle
