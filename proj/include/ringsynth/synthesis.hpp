/*!
  \file synthesis.hpp
  \brief Exact synthesis of ring-valued unitaries into H/T-optimal circuits

  A unitary whose sde(|z|^2) exceeds 3 is peeled by H T^-k steps, each
  lowering the measure by exactly one; the residue is looked up in a table of
  every unitary with measure at most 3.
*/

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "circuit.hpp"
#include "unitary.hpp"

namespace ringsynth
{

struct table_entry
{
  ring_unitary key; /* phase-canonical representative */
  circuit gates;
};

/*! \brief Optimal circuits for every unitary with sde_measure <= 3, up to phase. */
class lookup_table
{
public:
  static constexpr int max_sde = 3;

  void insert( const std::string& key, table_entry entry )
  {
    max_length_ = std::max( max_length_, entry.gates.size() );
    entries_.insert_or_assign( key, std::move( entry ) );
  }

  const table_entry* find( const ring_unitary& u ) const
  {
    const auto it = entries_.find( phase_key( u ) );
    return it == entries_.end() ? nullptr : &it->second;
  }

  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t max_length() const noexcept { return max_length_; }

  /*! \brief Entries ordered by key, for deterministic output. */
  std::vector<std::pair<std::string, const table_entry*>> sorted_entries() const
  {
    std::vector<std::pair<std::string, const table_entry*>> out;
    out.reserve( entries_.size() );
    for ( const auto& [k, v] : entries_ )
      out.emplace_back( k, &v );
    std::sort( out.begin(), out.end(), []( const auto& a, const auto& b ) { return a.first < b.first; } );
    return out;
  }

  std::set<std::string> keys() const
  {
    std::set<std::string> out;
    for ( const auto& [k, v] : entries_ )
      out.insert( k );
    return out;
  }

private:
  std::unordered_map<std::string, table_entry> entries_;
  std::size_t max_length_ = 0;
};

namespace detail
{

/* (n_H, n_T, n_P, n_Pl, n_g, text), compared lexicographically */
using search_cost = std::tuple<uint64_t, uint64_t, uint64_t, uint64_t, uint64_t, std::string>;

inline search_cost cost_of( const circuit& c )
{
  const auto n = c.counts();
  return { n.n_h, n.n_t, n.n_p, n.n_pl, n.n_g, c.to_string() };
}

} // namespace detail

/*! \brief Uniform-cost search from the identity over all eight library gates.
 *
 * Circuits are ordered by (H count, T count, P count, Pauli count, length,
 * text). Unitaries with sde_measure <= 4 are expanded; those with measure
 * <= 3 are retained together with the first (cheapest) circuit reaching them.
 * The reachable set is finite: a unit column with sde(z) = m <= 2 has its
 * numerator coordinates bounded by sqrt(2^m).
 */
inline lookup_table build_table()
{
  using item = std::pair<detail::search_cost, circuit>;
  auto cmp = []( const item& a, const item& b ) { return a.first > b.first; };
  std::priority_queue<item, std::vector<item>, decltype( cmp )> frontier( cmp );
  std::unordered_map<std::string, bool> settled;

  lookup_table table;
  frontier.emplace( detail::cost_of( circuit{} ), circuit{} );
  while ( !frontier.empty() )
  {
    auto [cost, c] = frontier.top();
    frontier.pop();
    const auto u = c.evaluate();
    auto key = phase_key( u );
    if ( settled.count( key ) )
      continue;
    settled.emplace( key, true );

    const auto measure = sde_measure( u );
    if ( measure <= lookup_table::max_sde )
    {
      table.insert( key, { canonicalize_phase( u ).representative, c } );
    }
    if ( measure > lookup_table::max_sde + 1 )
      continue;
    for ( auto g : all_gates )
    {
      circuit next = c;
      next.push_back( g );
      if ( settled.count( phase_key( apply_gate( g, u ) ) ) )
        continue;
      auto next_cost = detail::cost_of( next );
      frontier.emplace( std::move( next_cost ), std::move( next ) );
    }
  }
  return table;
}

/*! \brief Direct enumeration of the phase classes with sde_measure <= 3.
 *
 * Independent of the circuit search: writes the first column as
 * (x, y) / sqrt2^m with |x|^2 + |y|^2 = 2^m for m = 0, 1, 2, bounds the
 * coordinates by P(x) <= 2^m, and completes each column over all eight
 * determinant phases.
 */
inline std::set<std::string> enumerate_sde_le3()
{
  std::vector<zomega> box;
  for ( int a = -2; a <= 2; ++a )
    for ( int b = -2; b <= 2; ++b )
      for ( int c = -2; c <= 2; ++c )
        for ( int d = -2; d <= 2; ++d )
          box.emplace_back( a, b, c, d );

  std::set<std::string> out;
  for ( int m = 0; m <= 2; ++m )
  {
    const integer bound = integer( 1 ) << m;
    std::vector<std::pair<zomega, real_zsqrt2>> candidates;
    for ( const auto& x : box )
    {
      auto n = norm_sq( x );
      if ( n.a <= bound )
        candidates.emplace_back( x, std::move( n ) );
    }
    for ( const auto& [x, nx] : candidates )
    {
      for ( const auto& [y, ny] : candidates )
      {
        if ( nx.a + ny.a != bound || nx.b + ny.b != 0 )
          continue;
        const ring_state s{ ring_scalar( x, m ), ring_scalar( y, m ) };
        for ( int k = 0; k < 8; ++k )
        {
          const auto u = complete_from_column( s, k );
          if ( sde_measure( u ) <= lookup_table::max_sde )
            out.insert( phase_key( u ) );
        }
      }
    }
  }
  return out;
}

/*! \brief Which exponents a descent step scans. */
enum class descent_powers
{
  positive, /* k = 0, 1, 2, 3 */
  negative  /* k = 0, -1, -2, -3 */
};

struct synthesis_options
{
  descent_powers powers = descent_powers::positive;
  phase_style style = phase_style::prefer_z;
};

struct reduction
{
  int k;            /* emitted gate pair is T^k H (matrix order) */
  ring_unitary next; /* H T^-k u */
};

/*! \brief One descent step: the first k with sde_measure(H T^-k u) = sde_measure(u) - 1.
 *
 * Only the top-left entry of the candidate is formed while scanning.
 */
inline reduction reduce_step( const ring_unitary& u, descent_powers powers = descent_powers::positive )
{
  const auto s = sde_measure( u );
  if ( s <= lookup_table::max_sde )
  {
    throw internal_invariant_error( "reduce_step called with sde_measure " + std::to_string( s ) );
  }
  const int sign = powers == descent_powers::positive ? 1 : -1;
  for ( int step = 0; step < 4; ++step )
  {
    const int k = sign * step;
    const auto top = ( u( 0, 0 ) + u( 1, 0 ).mul_omega_power( -k ) ).div_sqrt2();
    if ( sde_abs_sq( top ) == sde_value( s - 1 ) )
    {
      return { k, u.left_diagonal( 0, -k ).left_h() };
    }
  }
  throw internal_invariant_error( "no k in 0..3 lowers sde_measure " + std::to_string( s ) );
}

struct synthesis_result
{
  circuit gates;
  int phase_k = 0;           /* evaluate(gates) = omega^phase_k * u */
  std::size_t iterations = 0; /* descent steps performed */
  int64_t initial_sde = 0;
};

/*! \brief Full decomposition with descent statistics. */
inline synthesis_result synthesize_detailed( const ring_unitary& u, const lookup_table& table,
                                             const synthesis_options& options = {} )
{
  synthesis_result result;
  result.initial_sde = sde_measure( u );

  std::vector<int> powers;
  ring_unitary cur = u;
  int64_t s = result.initial_sde;
  while ( s > lookup_table::max_sde )
  {
    auto step = reduce_step( cur, options.powers );
    powers.push_back( step.k );
    cur = std::move( step.next );
    const auto next_s = sde_measure( cur );
    if ( next_s != s - 1 )
    {
      throw internal_invariant_error( "descent step did not lower sde_measure by one" );
    }
    s = next_s;
  }
  result.iterations = powers.size();

  const auto* entry = table.find( cur );
  if ( !entry )
  {
    throw table_miss_error( "residual unitary with sde_measure " + std::to_string( s ) + " missing from table" );
  }

  /* u = T^k1 H T^k2 H ... T^kn H * residual; in application order the residual comes first */
  circuit raw = entry->gates;
  for ( auto it = powers.rbegin(); it != powers.rend(); ++it )
  {
    raw.push_back( gate::h );
    append_t_power( raw, *it, options.style );
  }
  result.gates = normalize_ht( raw, options.style );

  const auto phase = equal_up_to_phase( result.gates.evaluate(), u );
  if ( !phase )
  {
    throw internal_invariant_error( "synthesized circuit does not reproduce the input" );
  }
  result.phase_k = *phase;
  return result;
}

inline circuit synthesize( const ring_unitary& u, const lookup_table& table, const synthesis_options& options = {} )
{
  return synthesize_detailed( u, table, options ).gates;
}

/*! \brief Circuit C with C |0> = s exactly.
 *
 * Synthesizes every completion of the column and keeps the cheapest after
 * removing the global phase on |0>: X T^-p X multiplies |0> by omega^-p.
 */
inline circuit prepare_state( const ring_state& s, const lookup_table& table, const synthesis_options& options = {} )
{
  std::optional<circuit> best;
  for ( int k = 0; k < 8; ++k )
  {
    const auto r = synthesize_detailed( complete_from_column( s, k ), table, options );
    circuit c;
    if ( r.phase_k != 0 )
    {
      c.push_back( gate::x );
      append_t_power( c, -r.phase_k, options.style );
      c.push_back( gate::x );
    }
    c.append( r.gates );
    c = normalize_ht( c, options.style );
    if ( !best || detail::cost_of( c ) < detail::cost_of( *best ) )
      best = std::move( c );
  }
  if ( best->evaluate().column( 0 ) != s )
  {
    throw internal_invariant_error( "prepared column differs from the requested state" );
  }
  return *best;
}

struct optimality_certificate
{
  int64_t h_claimed = 0;
  int64_t t_claimed = 0;
  int l = 0;
  int j = 0;
};

/*! \brief Finds l, j in 0..3 with sde_measure(H T^l u T^j H) = sde_measure(u) + 2. */
inline std::optional<std::pair<int, int>> find_extension( const ring_unitary& u )
{
  const auto s = sde_measure( u );
  for ( int l = 0; l < 4; ++l )
  {
    const auto left = u.left_diagonal( 0, l ).left_h();
    for ( int j = 0; j < 4; ++j )
    {
      if ( sde_measure( left.right_diagonal( 0, j ).right_h() ) == s + 2 )
        return std::make_pair( l, j );
    }
  }
  return std::nullopt;
}

/*! \brief T-count of an H-optimal HT-normal circuit for u.
 *
 * Extending u to H T^l u T^j H adds one T-type gate between each new H and
 * the old boundary segment; an odd l (resp. j) already supplies it, so the
 * leading (trailing) segment of u carries a T exactly when l (j) is even.
 */
inline int64_t t_count_formula( int64_t h, int l, int j )
{
  return h + 1 - ( l % 2 ) - ( j % 2 );
}

/*! \brief Checks the H and T counts of c against the closed forms for u.
 *
 * h = sde_measure(u) - 1, and t follows from the parities of the exponents
 * l, j that extend u by two Hadamards.
 */
inline optimality_certificate certify_optimality( const ring_unitary& u, const circuit& c )
{
  const auto s = sde_measure( u );
  if ( s < 4 )
  {
    throw certificate_error( "certificate needs sde_measure >= 4, got " + std::to_string( s ) );
  }
  optimality_certificate cert;
  cert.h_claimed = s - 1;
  const auto ext = find_extension( u );
  if ( !ext )
  {
    throw certificate_error( "no l, j in 0..3 raise sde_measure by two" );
  }
  std::tie( cert.l, cert.j ) = *ext;
  cert.t_claimed = t_count_formula( cert.h_claimed, cert.l, cert.j );

  const auto n = c.counts();
  if ( static_cast<int64_t>( n.n_h ) != cert.h_claimed )
  {
    throw certificate_error( "circuit has " + std::to_string( n.n_h ) + " H gates, expected " +
                             std::to_string( cert.h_claimed ) );
  }
  if ( static_cast<int64_t>( n.n_t ) != cert.t_claimed )
  {
    throw certificate_error( "circuit has " + std::to_string( n.n_t ) + " T gates, expected " +
                             std::to_string( cert.t_claimed ) );
  }
  return cert;
}

} // namespace ringsynth
