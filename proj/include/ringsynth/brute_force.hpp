/*!
  \file brute_force.hpp
  \brief Exhaustive minimum H- and T-counts over the full gate library

  Used as an independent oracle for the optimality claims. A 0-1 breadth
  first search runs over phase classes: gates of the counted kind cost one,
  every other gate costs zero. Zero-cost closures are finite (the monomial
  group for H counting, the Clifford group for T counting), so each cost
  layer is finite.
*/

#pragma once

#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>

#include "circuit.hpp"

namespace ringsynth
{

enum class counted_gate
{
  hadamard,
  t_type
};

/*! \brief Minimal count of one gate kind for every unitary up to a cost bound. */
class brute_force_oracle
{
public:
  brute_force_oracle( counted_gate kind, int bound ) : kind_( kind ), bound_( bound ) { run( nullptr ); }

  /*! \brief Exact minimum, or nullopt if it exceeds the bound. */
  std::optional<int> min_count( const ring_unitary& u ) const
  {
    const auto it = cost_.find( phase_key( u ) );
    return it == cost_.end() ? std::nullopt : std::optional<int>( it->second );
  }

  std::size_t size() const noexcept { return cost_.size(); }
  int bound() const noexcept { return bound_; }

  /*! \brief Searches only until u is settled. */
  static std::optional<int> search( counted_gate kind, int bound, const ring_unitary& u )
  {
    brute_force_oracle o( kind, bound, phase_key( u ) );
    return o.min_count( u );
  }

private:
  brute_force_oracle( counted_gate kind, int bound, const std::string& target ) : kind_( kind ), bound_( bound )
  {
    run( &target );
  }

  bool costs( gate g ) const
  {
    return kind_ == counted_gate::hadamard ? g == gate::h : ( g == gate::t || g == gate::tdag );
  }

  void run( const std::string* target )
  {
    std::deque<std::pair<ring_unitary, int>> queue;
    const auto id = ring_unitary::identity();
    cost_.emplace( phase_key( id ), 0 );
    queue.emplace_back( id, 0 );
    while ( !queue.empty() )
    {
      auto [u, c] = std::move( queue.front() );
      queue.pop_front();
      if ( cost_.at( phase_key( u ) ) < c )
        continue;
      if ( target && cost_.count( *target ) && cost_.at( *target ) <= c )
        return;
      for ( auto g : all_gates )
      {
        const int nc = c + ( costs( g ) ? 1 : 0 );
        if ( nc > bound_ )
          continue;
        auto v = apply_gate( g, u );
        auto key = phase_key( v );
        const auto it = cost_.find( key );
        if ( it != cost_.end() && it->second <= nc )
          continue;
        cost_.insert_or_assign( std::move( key ), nc );
        if ( nc == c )
          queue.emplace_front( std::move( v ), nc );
        else
          queue.emplace_back( std::move( v ), nc );
      }
    }
  }

  counted_gate kind_;
  int bound_;
  std::unordered_map<std::string, int> cost_;
};

/*! \brief (min H count, min T count) of u over circuits in the full library.
 *
 * `depth` bounds the searched count of each kind; nullopt when either
 * minimum exceeds it.
 */
inline std::optional<std::pair<int, int>> brute_force_min_counts( const ring_unitary& u, int depth )
{
  const auto h = brute_force_oracle::search( counted_gate::hadamard, depth, u );
  if ( !h )
    return std::nullopt;
  const auto t = brute_force_oracle::search( counted_gate::t_type, depth, u );
  if ( !t )
    return std::nullopt;
  return std::make_pair( *h, *t );
}

} // namespace ringsynth
