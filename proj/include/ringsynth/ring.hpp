/*!
  \file ring.hpp
  \brief Exact arithmetic in Z[omega] and Z[1/sqrt2, i], omega = e^{i pi/4}

  Elements of Z[omega] are stored by their four integer coordinates in the
  basis 1, omega, omega^2, omega^3. Elements of Z[1/sqrt2, i] are stored as a
  Z[omega] numerator over a power of sqrt2, always reduced so that sqrt2 does
  not divide the numerator.
*/

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace ringsynth
{

using integer = boost::multiprecision::cpp_int;

/*! \brief Valuation that is either a non-negative integer or infinite.
 *
 * Infinity is a tag, never a large number, so it cannot leak into
 * arithmetic by accident.
 */
class gde_value
{
public:
  constexpr gde_value() = default;
  constexpr explicit gde_value( int64_t v ) : finite_( true ), value_( v ) {}

  static constexpr gde_value infinite() { return gde_value{}; }

  constexpr bool is_infinite() const noexcept { return !finite_; }
  constexpr bool is_finite() const noexcept { return finite_; }

  int64_t value() const
  {
    if ( !finite_ )
    {
      throw std::logic_error( "gde_value: value() on infinite valuation" );
    }
    return value_;
  }

  constexpr bool operator==( const gde_value& other ) const noexcept
  {
    return finite_ == other.finite_ && ( !finite_ || value_ == other.value_ );
  }

  /* infinity compares greater than every finite value */
  constexpr bool operator<( const gde_value& other ) const noexcept
  {
    if ( !finite_ )
      return false;
    if ( !other.finite_ )
      return true;
    return value_ < other.value_;
  }
  constexpr bool operator>( const gde_value& other ) const noexcept { return other < *this; }
  constexpr bool operator<=( const gde_value& other ) const noexcept { return !( other < *this ); }
  constexpr bool operator>=( const gde_value& other ) const noexcept { return !( *this < other ); }

  friend std::ostream& operator<<( std::ostream& os, const gde_value& g )
  {
    return g.finite_ ? ( os << g.value_ ) : ( os << "inf" );
  }

private:
  bool finite_ = false;
  int64_t value_ = 0;
};

/*! \brief Smallest denominator exponent; negative infinity for zero. */
class sde_value
{
public:
  constexpr sde_value() = default;
  constexpr explicit sde_value( int64_t v ) : finite_( true ), value_( v ) {}

  static constexpr sde_value negative_infinite() { return sde_value{}; }

  constexpr bool is_negative_infinite() const noexcept { return !finite_; }

  int64_t value() const
  {
    if ( !finite_ )
    {
      throw std::logic_error( "sde_value: value() on -infinity" );
    }
    return value_;
  }

  constexpr bool operator==( const sde_value& other ) const noexcept
  {
    return finite_ == other.finite_ && ( !finite_ || value_ == other.value_ );
  }

  friend std::ostream& operator<<( std::ostream& os, const sde_value& s )
  {
    return s.finite_ ? ( os << s.value_ ) : ( os << "-inf" );
  }

private:
  bool finite_ = false;
  int64_t value_ = 0;
};

/*! \brief 2-adic valuation of an integer; infinite for zero. */
inline gde_value gde_base2( const integer& n )
{
  if ( n.is_zero() )
  {
    return gde_value::infinite();
  }
  return gde_value( static_cast<int64_t>( boost::multiprecision::lsb( boost::multiprecision::abs( n ) ) ) );
}

class zomega;

/*! \brief Real element a + sqrt2 * b of Z[omega]. */
struct real_zsqrt2
{
  integer a;
  integer b;

  bool operator==( const real_zsqrt2& ) const = default;
  bool is_zero() const { return a.is_zero() && b.is_zero(); }

  real_zsqrt2 operator+( const real_zsqrt2& o ) const { return { a + o.a, b + o.b }; }
  real_zsqrt2 operator-( const real_zsqrt2& o ) const { return { a - o.a, b - o.b }; }
  real_zsqrt2 operator*( const real_zsqrt2& o ) const { return { a * o.a + 2 * b * o.b, a * o.b + b * o.a }; }

  zomega to_zomega() const;

  friend std::ostream& operator<<( std::ostream& os, const real_zsqrt2& r )
  {
    return os << r.a << ( r.b < 0 ? "-" : "+" ) << "sqrt2*" << boost::multiprecision::abs( r.b );
  }
};

/*! \brief sqrt2-adic valuation of a + sqrt2 * b.
 *
 * Even valuations come from the rational part, odd ones from the sqrt2
 * part, depending on which integer has the smaller 2-adic valuation.
 */
inline gde_value gde_real( const real_zsqrt2& r )
{
  if ( r.is_zero() )
  {
    return gde_value::infinite();
  }
  const auto ga = gde_base2( r.a );
  const auto gb = gde_base2( r.b );
  if ( gb >= ga )
  {
    return gde_value( 2 * ga.value() );
  }
  return gde_value( 2 * gb.value() + 1 );
}

/*! \brief Element x0 + x1 w + x2 w^2 + x3 w^3 of Z[omega]. */
class zomega
{
public:
  zomega() = default;
  zomega( integer x0, integer x1, integer x2, integer x3 )
      : c_{ std::move( x0 ), std::move( x1 ), std::move( x2 ), std::move( x3 ) }
  {
  }
  explicit zomega( std::array<integer, 4> coords ) : c_( std::move( coords ) ) {}

  static zomega from_int( const integer& n ) { return zomega( n, 0, 0, 0 ); }
  static zomega omega() { return zomega( 0, 1, 0, 0 ); }
  /*! \brief omega^k for any integer k */
  static zomega omega_power( int k )
  {
    zomega r = from_int( 1 );
    return r.mul_omega_power( k );
  }
  static zomega sqrt2() { return zomega( 0, 1, 0, -1 ); }

  const integer& operator[]( std::size_t i ) const { return c_[i]; }
  const std::array<integer, 4>& coords() const noexcept { return c_; }

  bool is_zero() const { return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

  bool operator==( const zomega& ) const = default;
  bool operator<( const zomega& o ) const { return c_ < o.c_; }

  zomega operator+( const zomega& o ) const
  {
    return zomega( c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3] );
  }
  zomega operator-( const zomega& o ) const
  {
    return zomega( c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2], c_[3] - o.c_[3] );
  }
  zomega operator-() const { return zomega( -c_[0], -c_[1], -c_[2], -c_[3] ); }

  /* omega^4 = -1 */
  zomega operator*( const zomega& o ) const
  {
    const auto& a = c_;
    const auto& b = o.c_;
    return zomega( a[0] * b[0] - a[1] * b[3] - a[2] * b[2] - a[3] * b[1],
                   a[0] * b[1] + a[1] * b[0] - a[2] * b[3] - a[3] * b[2],
                   a[0] * b[2] + a[1] * b[1] + a[2] * b[0] - a[3] * b[3],
                   a[0] * b[3] + a[1] * b[2] + a[2] * b[1] + a[3] * b[0] );
  }
  zomega operator*( const integer& n ) const { return zomega( c_[0] * n, c_[1] * n, c_[2] * n, c_[3] * n ); }

  zomega conj() const { return zomega( c_[0], -c_[3], -c_[2], -c_[1] ); }

  zomega mul_omega() const { return zomega( -c_[3], c_[0], c_[1], c_[2] ); }

  /*! \brief Multiplies by omega^k, k taken mod 8. */
  zomega mul_omega_power( int k ) const
  {
    k = ( ( k % 8 ) + 8 ) % 8;
    const bool negate = k >= 4;
    k %= 4;
    std::array<integer, 4> r;
    for ( int i = 0; i < 4; ++i )
    {
      const int src = i - k;
      r[i] = src >= 0 ? c_[src] : integer( -c_[src + 4] );
    }
    zomega out( std::move( r ) );
    return negate ? -out : out;
  }

  /* sqrt2 = omega - omega^3 as a linear map on coordinates */
  zomega mul_sqrt2() const
  {
    return zomega( c_[1] - c_[3], c_[0] + c_[2], c_[1] + c_[3], c_[2] - c_[0] );
  }

  /*! \brief Exact quotient by sqrt2, or nullopt when sqrt2 does not divide. */
  std::optional<zomega> try_div_sqrt2() const
  {
    zomega m = mul_sqrt2();
    for ( const auto& x : m.c_ )
    {
      if ( boost::multiprecision::bit_test( x, 0 ) )
      {
        return std::nullopt;
      }
    }
    for ( auto& x : m.c_ )
    {
      x >>= 1; /* exact: x is even, so arithmetic shift equals division */
    }
    return m;
  }

  zomega div_sqrt2() const
  {
    auto r = try_div_sqrt2();
    if ( !r )
    {
      throw divisibility_error( "sqrt2 does not divide " + to_string() );
    }
    return std::move( *r );
  }

  /*! \brief Canonical text "a,b,c,d". */
  std::string to_string() const
  {
    std::ostringstream os;
    os << c_[0] << "," << c_[1] << "," << c_[2] << "," << c_[3];
    return os.str();
  }

  static zomega parse( const std::string& text );

  friend std::ostream& operator<<( std::ostream& os, const zomega& z ) { return os << z.to_string(); }

private:
  std::array<integer, 4> c_;
};

inline zomega real_zsqrt2::to_zomega() const
{
  return zomega( a, b, 0, -b );
}

inline zomega zomega::parse( const std::string& text )
{
  std::array<integer, 4> c;
  std::size_t pos = 0;
  for ( int i = 0; i < 4; ++i )
  {
    const auto end = i < 3 ? text.find( ',', pos ) : text.size();
    if ( end == std::string::npos )
    {
      throw parse_error( "expected four comma-separated integers: '" + text + "'" );
    }
    const auto field = text.substr( pos, end - pos );
    const std::size_t digits_from = ( !field.empty() && field[0] == '-' ) ? 1 : 0;
    if ( field.size() == digits_from || field.find_first_not_of( "0123456789", digits_from ) != std::string::npos )
    {
      throw parse_error( "malformed integer '" + field + "' in '" + text + "'" );
    }
    c[i] = integer( field );
    pos = end + 1;
  }
  return zomega( std::move( c ) );
}

inline zomega mul_sqrt2( const zomega& x ) { return x.mul_sqrt2(); }
inline zomega div_sqrt2( const zomega& x ) { return x.div_sqrt2(); }

/*! \brief P(x) = x0^2 + x1^2 + x2^2 + x3^2 */
inline integer form_p( const zomega& x )
{
  return x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
}

/*! \brief Q(x) = x0 (x1 - x3) + x2 (x1 + x3) */
inline integer form_q( const zomega& x )
{
  return x[0] * ( x[1] - x[3] ) + x[2] * ( x[1] + x[3] );
}

/*! \brief Coordinate dot product; F(x, x) = P(x) and F(sqrt2 x, x) = 2 Q(x). */
inline integer form_f( const zomega& x, const zomega& y )
{
  return x[0] * y[0] + x[1] * y[1] + x[2] * y[2] + x[3] * y[3];
}

/*! \brief |x|^2 = P(x) + sqrt2 Q(x) */
inline real_zsqrt2 norm_sq( const zomega& x )
{
  return { form_p( x ), form_q( x ) };
}

/*! \brief Greatest e with sqrt2^e dividing x, by repeated exact division. */
inline gde_value gde( const zomega& x )
{
  if ( x.is_zero() )
  {
    return gde_value::infinite();
  }
  int64_t e = 0;
  zomega cur = x;
  while ( auto next = cur.try_div_sqrt2() )
  {
    cur = std::move( *next );
    ++e;
  }
  return gde_value( e );
}

/*! \brief Strips every sqrt2 factor; returns the cofactor and the exponent removed. */
inline std::pair<zomega, int64_t> strip_sqrt2( zomega x )
{
  int64_t e = 0;
  if ( x.is_zero() )
  {
    return { std::move( x ), 0 };
  }
  while ( auto next = x.try_div_sqrt2() )
  {
    x = std::move( *next );
    ++e;
  }
  return { std::move( x ), e };
}

/*! \brief Element num / sqrt2^k of Z[1/sqrt2, i] in canonical form.
 *
 * Canonical means sqrt2 does not divide num, or num = 0 and k = 0. With that
 * normalization the smallest denominator exponent is k itself.
 */
class ring_scalar
{
public:
  ring_scalar() = default;

  /*! \brief Builds num / sqrt2^k and reduces it. */
  ring_scalar( zomega num, int64_t k )
  {
    auto [reduced, e] = strip_sqrt2( std::move( num ) );
    num_ = std::move( reduced );
    k_ = num_.is_zero() ? 0 : k - e;
  }

  static ring_scalar from_int( const integer& n ) { return ring_scalar( zomega::from_int( n ), 0 ); }
  static ring_scalar omega_power( int k ) { return ring_scalar( zomega::omega_power( k ), 0 ); }
  static ring_scalar inv_sqrt2() { return ring_scalar( zomega::from_int( 1 ), 1 ); }

  /*! \brief Accepts (num, k) only if it is already canonical. */
  static std::optional<ring_scalar> from_canonical( zomega num, int64_t k )
  {
    if ( num.is_zero() ? k != 0 : num.try_div_sqrt2().has_value() )
    {
      return std::nullopt;
    }
    ring_scalar r;
    r.num_ = std::move( num );
    r.k_ = k;
    return r;
  }

  const zomega& num() const noexcept { return num_; }
  int64_t k() const noexcept { return k_; }
  bool is_zero() const { return num_.is_zero(); }

  bool operator==( const ring_scalar& ) const = default;

  ring_scalar operator+( const ring_scalar& o ) const
  {
    if ( is_zero() )
      return o;
    if ( o.is_zero() )
      return *this;
    const auto k = std::max( k_, o.k_ );
    return ring_scalar( scaled( num_, k - k_ ) + scaled( o.num_, k - o.k_ ), k );
  }
  ring_scalar operator-() const
  {
    ring_scalar r = *this;
    r.num_ = -r.num_;
    return r;
  }
  ring_scalar operator-( const ring_scalar& o ) const { return *this + ( -o ); }
  ring_scalar operator*( const ring_scalar& o ) const { return ring_scalar( num_ * o.num_, k_ + o.k_ ); }

  ring_scalar conj() const
  {
    ring_scalar r = *this;
    r.num_ = r.num_.conj();
    return r;
  }

  /*! \brief Multiplication by omega^j keeps canonical form. */
  ring_scalar mul_omega_power( int j ) const
  {
    ring_scalar r;
    r.num_ = num_.mul_omega_power( j );
    r.k_ = k_;
    return r;
  }

  ring_scalar div_sqrt2() const { return ring_scalar( num_, k_ + 1 ); }

  /*! \brief Real-valued |z|^2 as a canonical scalar. */
  ring_scalar abs_sq() const { return ring_scalar( norm_sq( num_ ).to_zomega(), 2 * k_ ); }

  friend std::ostream& operator<<( std::ostream& os, const ring_scalar& z )
  {
    return os << "(" << z.num_ << ")/sqrt2^" << z.k_;
  }

private:
  static zomega scaled( const zomega& x, int64_t e )
  {
    zomega r = x;
    if ( e >= 2 )
    {
      r = r * ( integer( 1 ) << static_cast<unsigned>( e / 2 ) );
    }
    if ( e % 2 )
    {
      r = r.mul_sqrt2();
    }
    return r;
  }

  zomega num_;
  int64_t k_ = 0;
};

inline zomega zw_add( const zomega& a, const zomega& b ) { return a + b; }
inline zomega zw_mul( const zomega& a, const zomega& b ) { return a * b; }
inline zomega zw_conj( const zomega& a ) { return a.conj(); }
inline zomega zw_mul_omega( const zomega& a ) { return a.mul_omega(); }

inline ring_scalar scalar_add( const ring_scalar& a, const ring_scalar& b ) { return a + b; }
inline ring_scalar scalar_mul( const ring_scalar& a, const ring_scalar& b ) { return a * b; }
inline ring_scalar scalar_conj( const ring_scalar& a ) { return a.conj(); }
inline ring_scalar scalar_abs_sq( const ring_scalar& a ) { return a.abs_sq(); }

/*! \brief sde(z) = k for canonical nonzero z; -infinity for zero. */
inline sde_value sde( const ring_scalar& z )
{
  if ( z.is_zero() )
  {
    return sde_value::negative_infinite();
  }
  return sde_value( z.k() );
}

/*! \brief sde(|z|^2) without forming the square.
 *
 * For canonical z = x / sqrt2^k the valuation gde(|x|^2) is 0 or 1 and equals
 * 1 exactly when P(x) is even, so sde(|z|^2) = 2k - [P(x) even].
 */
inline sde_value sde_abs_sq( const ring_scalar& z )
{
  if ( z.is_zero() )
  {
    return sde_value::negative_infinite();
  }
  const auto& x = z.num();
  const bool p_even = !boost::multiprecision::bit_test( integer( x[0] + x[1] + x[2] + x[3] ), 0 );
  return sde_value( 2 * z.k() - ( p_even ? 1 : 0 ) );
}

/*! \brief Returns j when z = omega^j. */
inline std::optional<int> is_unit_modulus( const ring_scalar& z )
{
  if ( z.k() != 0 || z.is_zero() )
  {
    return std::nullopt;
  }
  const auto& x = z.num();
  int found = -1;
  for ( int i = 0; i < 4; ++i )
  {
    if ( x[i].is_zero() )
      continue;
    if ( found >= 0 )
      return std::nullopt;
    if ( x[i] == 1 )
      found = i;
    else if ( x[i] == -1 )
      found = i + 4;
    else
      return std::nullopt;
  }
  return found;
}

} // namespace ringsynth
