/*!
  \file circuit.hpp
  \brief Single-qubit circuits over {H, T, T+, P, P+, Z, X, Y}

  Gates are listed in application order: the first gate acts on the ket
  first. The corresponding matrix is the product taken right to left, so the
  text "HT" evaluates to T * H.
*/

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "unitary.hpp"

namespace ringsynth
{

enum class gate : uint8_t
{
  h,
  t,
  tdag,
  p,
  pdag,
  z,
  x,
  y
};

inline constexpr std::array<gate, 8> all_gates = { gate::h, gate::t, gate::tdag, gate::p,
                                                  gate::pdag, gate::z, gate::x, gate::y };

inline char gate_token( gate g )
{
  constexpr char tokens[] = { 'H', 'T', 't', 'P', 'p', 'Z', 'X', 'Y' };
  return tokens[static_cast<int>( g )];
}

inline ring_unitary gate_matrix( gate g )
{
  switch ( g )
  {
  case gate::h:
    return ring_unitary::h();
  case gate::t:
    return ring_unitary::t();
  case gate::tdag:
    return ring_unitary::tdag();
  case gate::p:
    return ring_unitary::p();
  case gate::pdag:
    return ring_unitary::pdag();
  case gate::z:
    return ring_unitary::z();
  case gate::x:
    return ring_unitary::x();
  case gate::y:
    return ring_unitary::y();
  }
  return ring_unitary::identity();
}

/*! \brief Exponent of T for diagonal phase gates, -1 otherwise. */
inline int t_exponent( gate g )
{
  switch ( g )
  {
  case gate::t:
    return 1;
  case gate::tdag:
    return 7;
  case gate::p:
    return 2;
  case gate::pdag:
    return 6;
  case gate::z:
    return 4;
  default:
    return -1;
  }
}

/*! \brief g * u, specialised per gate. */
inline ring_unitary apply_gate( gate g, const ring_unitary& u )
{
  switch ( g )
  {
  case gate::h:
    return u.left_h();
  case gate::x:
    return u.left_x();
  case gate::y:
    return u.left_x().left_diagonal( 6, 2 );
  default:
    return u.left_diagonal( 0, t_exponent( g ) );
  }
}

struct gate_counts
{
  uint64_t n_g = 0;  /* all gates */
  uint64_t n_t = 0;  /* T and T+ */
  uint64_t n_h = 0;
  uint64_t n_p = 0;  /* P and P+ */
  uint64_t n_pl = 0; /* X, Y, Z */

  bool operator==( const gate_counts& ) const = default;
};

class circuit
{
public:
  circuit() = default;
  explicit circuit( std::vector<gate> gates ) : gates_( std::move( gates ) ) {}

  /*! \brief Parses tokens H T t P p Z X Y; whitespace is not allowed. */
  static circuit parse( std::string_view text )
  {
    std::vector<gate> gates;
    gates.reserve( text.size() );
    for ( std::size_t i = 0; i < text.size(); ++i )
    {
      switch ( text[i] )
      {
      case 'H': gates.push_back( gate::h ); break;
      case 'T': gates.push_back( gate::t ); break;
      case 't': gates.push_back( gate::tdag ); break;
      case 'P': gates.push_back( gate::p ); break;
      case 'p': gates.push_back( gate::pdag ); break;
      case 'Z': gates.push_back( gate::z ); break;
      case 'X': gates.push_back( gate::x ); break;
      case 'Y': gates.push_back( gate::y ); break;
      default:
        throw parse_error( "unknown gate token '" + std::string( 1, text[i] ) + "' at position " + std::to_string( i ) );
      }
    }
    return circuit( std::move( gates ) );
  }

  std::string to_string() const
  {
    std::string s;
    s.reserve( gates_.size() );
    for ( auto g : gates_ )
      s.push_back( gate_token( g ) );
    return s;
  }

  const std::vector<gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }

  void push_back( gate g ) { gates_.push_back( g ); }
  void append( const circuit& other ) { gates_.insert( gates_.end(), other.gates_.begin(), other.gates_.end() ); }

  bool operator==( const circuit& ) const = default;

  gate_counts counts() const
  {
    gate_counts c;
    c.n_g = gates_.size();
    for ( auto g : gates_ )
    {
      switch ( g )
      {
      case gate::h: ++c.n_h; break;
      case gate::t:
      case gate::tdag: ++c.n_t; break;
      case gate::p:
      case gate::pdag: ++c.n_p; break;
      case gate::z:
      case gate::x:
      case gate::y: ++c.n_pl; break;
      }
    }
    return c;
  }

  /*! \brief Matrix of the circuit: last gate leftmost. */
  ring_unitary evaluate() const
  {
    auto u = ring_unitary::identity();
    for ( auto g : gates_ )
    {
      u = apply_gate( g, u );
    }
    return u;
  }

  circuit inverse() const
  {
    std::vector<gate> inv;
    inv.reserve( gates_.size() );
    for ( auto it = gates_.rbegin(); it != gates_.rend(); ++it )
    {
      switch ( *it )
      {
      case gate::t: inv.push_back( gate::tdag ); break;
      case gate::tdag: inv.push_back( gate::t ); break;
      case gate::p: inv.push_back( gate::pdag ); break;
      case gate::pdag: inv.push_back( gate::p ); break;
      default: inv.push_back( *it ); break;
      }
    }
    return circuit( std::move( inv ) );
  }

private:
  std::vector<gate> gates_;
};

/*! \brief How T^3 and T^5 are spelled. */
enum class phase_style
{
  prefer_z, /* T^3 = Z T+, T^5 = Z T */
  prefer_p  /* T^3 = P T,  T^5 = P+ T+ */
};

/*! \brief Appends the cheapest spelling of T^k (k mod 8). */
inline void append_t_power( circuit& c, int k, phase_style style = phase_style::prefer_z )
{
  k = ( ( k % 8 ) + 8 ) % 8;
  switch ( k )
  {
  case 0:
    break;
  case 1:
    c.push_back( gate::t );
    break;
  case 2:
    c.push_back( gate::p );
    break;
  case 3:
    if ( style == phase_style::prefer_z )
    {
      c.push_back( gate::z );
      c.push_back( gate::tdag );
    }
    else
    {
      c.push_back( gate::p );
      c.push_back( gate::t );
    }
    break;
  case 4:
    c.push_back( gate::z );
    break;
  case 5:
    if ( style == phase_style::prefer_z )
    {
      c.push_back( gate::z );
      c.push_back( gate::t );
    }
    else
    {
      c.push_back( gate::pdag );
      c.push_back( gate::tdag );
    }
    break;
  case 6:
    c.push_back( gate::pdag );
    break;
  case 7:
    c.push_back( gate::tdag );
    break;
  }
}

/*! \brief Merges runs of diagonal phase gates and cancels adjacent H pairs.
 *
 * Each maximal run of {T, T+, P, P+, Z} is replaced by the spelling of its
 * total T exponent, so a run carries at most one T-type gate. The evaluated
 * matrix is unchanged exactly (not only up to phase).
 */
inline circuit normalize_ht( const circuit& c, phase_style style = phase_style::prefer_z )
{
  /* items: gate index >= 0 for H/X/Y, or diagonal exponent encoded as -(1 + e) */
  std::vector<int> items;
  items.reserve( c.size() );
  auto is_diag = []( int item ) { return item < 0; };
  for ( auto g : c.gates() )
  {
    const int e = t_exponent( g );
    if ( e >= 0 )
    {
      if ( !items.empty() && is_diag( items.back() ) )
      {
        const int merged = ( -items.back() - 1 + e ) % 8;
        items.back() = -( 1 + merged );
      }
      else
      {
        items.push_back( -( 1 + e ) );
      }
      continue;
    }
    if ( g == gate::h )
    {
      if ( !items.empty() && items.back() == -1 )
      {
        items.pop_back(); /* identity run */
      }
      if ( !items.empty() && items.back() == static_cast<int>( gate::h ) )
      {
        items.pop_back();
        continue;
      }
    }
    items.push_back( static_cast<int>( g ) );
  }
  circuit out;
  for ( int item : items )
  {
    if ( is_diag( item ) )
      append_t_power( out, -item - 1, style );
    else
      out.push_back( static_cast<gate>( item ) );
  }
  return out;
}

} // namespace ringsynth
