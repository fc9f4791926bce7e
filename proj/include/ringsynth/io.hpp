/*!
  \file io.hpp
  \brief JSON forms of scalars, states, unitaries, reports and the lookup table

  Integers that fit in 64 bits are written as JSON numbers and larger ones as
  decimal strings; readers accept both, so every form round-trips exactly.
*/

#pragma once

#include <fstream>
#include <limits>
#include <string>

#include "json.hpp"

#include "circuit.hpp"
#include "synthesis.hpp"

namespace ringsynth
{

using json = nlohmann::json;

inline json integer_to_json( const integer& n )
{
  if ( n >= std::numeric_limits<int64_t>::min() && n <= std::numeric_limits<int64_t>::max() )
  {
    return n.convert_to<int64_t>();
  }
  return n.str();
}

inline integer integer_from_json( const json& j )
{
  if ( j.is_number_integer() )
  {
    return j.is_number_unsigned() ? integer( j.get<uint64_t>() ) : integer( j.get<int64_t>() );
  }
  if ( j.is_string() )
  {
    const auto& s = j.get_ref<const std::string&>();
    const std::size_t from = ( !s.empty() && s[0] == '-' ) ? 1 : 0;
    if ( s.size() == from || s.find_first_not_of( "0123456789", from ) != std::string::npos )
    {
      throw parse_error( "malformed integer string '" + s + "'" );
    }
    return integer( s );
  }
  throw parse_error( "expected an integer, got " + j.dump() );
}

inline json zomega_to_json( const zomega& x )
{
  return json::array( { integer_to_json( x[0] ), integer_to_json( x[1] ), integer_to_json( x[2] ),
                        integer_to_json( x[3] ) } );
}

inline zomega zomega_from_json( const json& j )
{
  if ( !j.is_array() || j.size() != 4 )
  {
    throw parse_error( "expected four coordinates, got " + j.dump() );
  }
  return zomega( integer_from_json( j[0] ), integer_from_json( j[1] ), integer_from_json( j[2] ),
                 integer_from_json( j[3] ) );
}

inline json scalar_to_json( const ring_scalar& z )
{
  return { { "c", zomega_to_json( z.num() ) }, { "k", z.k() } };
}

/*! \brief Reads {"c":[a,b,c,d],"k":k}; rejects non-canonical input. */
inline ring_scalar scalar_from_json( const json& j )
{
  if ( !j.is_object() || !j.contains( "c" ) || !j.contains( "k" ) )
  {
    throw parse_error( "scalar must be an object with fields c and k: " + j.dump() );
  }
  if ( !j["k"].is_number_integer() )
  {
    throw parse_error( "scalar exponent k must be an integer: " + j.dump() );
  }
  auto num = zomega_from_json( j["c"] );
  const auto k = j["k"].get<int64_t>();
  auto z = ring_scalar::from_canonical( num, k );
  if ( !z )
  {
    throw parse_error( num.is_zero() ? "non-canonical scalar: zero must have k = 0"
                                     : "non-canonical scalar: sqrt2 divides numerator " + num.to_string() );
  }
  return *z;
}

inline json unitary_to_json( const ring_unitary& u )
{
  return { { "z00", scalar_to_json( u( 0, 0 ) ) },
           { "z01", scalar_to_json( u( 0, 1 ) ) },
           { "z10", scalar_to_json( u( 1, 0 ) ) },
           { "z11", scalar_to_json( u( 1, 1 ) ) } };
}

/*! \brief Reads and validates a unitary; throws parse_error or unitarity_error. */
inline ring_unitary unitary_from_json( const json& j )
{
  if ( !j.is_object() )
  {
    throw parse_error( "matrix must be an object with fields z00, z01, z10, z11" );
  }
  for ( const char* f : { "z00", "z01", "z10", "z11" } )
  {
    if ( !j.contains( f ) )
      throw parse_error( std::string( "matrix is missing field " ) + f );
  }
  ring_unitary u( scalar_from_json( j["z00"] ), scalar_from_json( j["z01"] ), scalar_from_json( j["z10"] ),
                  scalar_from_json( j["z11"] ) );
  validate( u );
  return u;
}

inline json state_to_json( const ring_state& s )
{
  return { { "z", scalar_to_json( s.z ) }, { "w", scalar_to_json( s.w ) } };
}

inline ring_state state_from_json( const json& j )
{
  if ( !j.is_object() || !j.contains( "z" ) || !j.contains( "w" ) )
  {
    throw parse_error( "state must be an object with fields z and w" );
  }
  ring_state s{ scalar_from_json( j["z"] ), scalar_from_json( j["w"] ) };
  if ( !s.is_normalized() )
  {
    throw unitarity_error( "state is not a unit vector: |z|^2 + |w|^2 != 1" );
  }
  return s;
}

inline json counts_to_json( const gate_counts& c )
{
  return { { "n_g", c.n_g }, { "n_T", c.n_t }, { "n_H", c.n_h }, { "n_P", c.n_p }, { "n_Pl", c.n_pl } };
}

inline json certificate_to_json( const optimality_certificate& c )
{
  return { { "h", c.h_claimed }, { "t", c.t_claimed }, { "l", c.l }, { "j", c.j } };
}

/* table file */

inline constexpr const char* table_format = "ringsynth-lookup-table";
inline constexpr int table_version = 1;
inline constexpr const char* table_generators = "H,T,t,P,p,Z,X,Y";
inline constexpr const char* table_canonicalization = "lex-min-omega-phase-v1";

inline json table_to_json( const lookup_table& table )
{
  json entries = json::array();
  for ( const auto& [key, entry] : table.sorted_entries() )
  {
    entries.push_back( { { "key", unitary_to_json( entry->key ) }, { "circuit", entry->gates.to_string() } } );
  }
  return { { "format", table_format },
           { "version", table_version },
           { "generators", table_generators },
           { "canonicalization", table_canonicalization },
           { "max_sde", lookup_table::max_sde },
           { "max_length", table.max_length() },
           { "entries", std::move( entries ) } };
}

/*! \brief Loads a table file, checking the header and every entry. */
inline lookup_table table_from_json( const json& j )
{
  if ( !j.is_object() || j.value( "format", "" ) != table_format )
    throw parse_error( "not a lookup table file" );
  if ( j.value( "version", -1 ) != table_version )
    throw parse_error( "unsupported table version" );
  if ( j.value( "generators", "" ) != table_generators ||
       j.value( "canonicalization", "" ) != table_canonicalization )
    throw parse_error( "table was built with a different generator set or canonicalization" );

  lookup_table table;
  for ( const auto& e : j.at( "entries" ) )
  {
    const auto key = unitary_from_json( e.at( "key" ) );
    auto c = circuit::parse( e.at( "circuit" ).get<std::string>() );
    if ( !equal_up_to_phase( c.evaluate(), key ) || sde_measure( key ) > lookup_table::max_sde )
      throw parse_error( "table entry does not evaluate to its key: " + c.to_string() );
    table.insert( phase_key( key ), { canonicalize_phase( key ).representative, std::move( c ) } );
  }
  return table;
}

inline void save_table( const lookup_table& table, const std::string& path )
{
  std::ofstream os( path );
  if ( !os )
    throw parse_error( "cannot write table file " + path );
  os << table_to_json( table ).dump( 1 ) << "\n";
}

inline lookup_table load_table( const std::string& path )
{
  std::ifstream is( path );
  if ( !is )
    throw parse_error( "cannot read table file " + path );
  json j;
  try
  {
    is >> j;
  }
  catch ( const json::exception& e )
  {
    throw parse_error( std::string( "table file is not valid JSON: " ) + e.what() );
  }
  return table_from_json( j );
}

/*! \brief Loads the table at path, or builds and writes it when absent. */
inline lookup_table load_or_build_table( const std::string& path )
{
  if ( path.empty() )
    return build_table();
  if ( std::ifstream( path ).good() )
    return load_table( path );
  auto table = build_table();
  save_table( table, path );
  return table;
}

} // namespace ringsynth
