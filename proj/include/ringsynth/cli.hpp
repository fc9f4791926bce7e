/*!
  \file cli.hpp
  \brief Command-line front end (library part, so tests can drive it in-process)

  Exit codes: 0 success, 1 malformed input, 2 lemma check false,
  3 internal invariant violation.
*/

#pragma once

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "brute_force.hpp"
#include "io.hpp"
#include "synthesis.hpp"
#include "verifier.hpp"

namespace ringsynth::cli
{

enum exit_code : int
{
  ok = 0,
  malformed_input = 1,
  lemma_false = 2,
  internal_violation = 3
};

namespace detail
{

inline json read_json_input( const std::string& source )
{
  std::string text;
  if ( source == "-" )
  {
    text.assign( std::istreambuf_iterator<char>( std::cin ), std::istreambuf_iterator<char>() );
  }
  else
  {
    std::ifstream is( source );
    if ( !is )
    {
      /* inline JSON is accepted as well as a path */
      if ( !source.empty() && ( source.front() == '{' || source.front() == '[' ) )
        text = source;
      else
        throw parse_error( "cannot open input '" + source + "'" );
    }
    else
    {
      text.assign( std::istreambuf_iterator<char>( is ), std::istreambuf_iterator<char>() );
    }
  }
  try
  {
    return json::parse( text );
  }
  catch ( const json::exception& e )
  {
    throw parse_error( std::string( "invalid JSON: " ) + e.what() );
  }
}

inline json synth_report( const ring_unitary& u, const lookup_table& table, const synthesis_options& options,
                          bool timing )
{
  const auto start = std::chrono::steady_clock::now();
  const auto r = synthesize_detailed( u, table, options );
  json report = { { "circuit", r.gates.to_string() },
                  { "counts", counts_to_json( r.gates.counts() ) },
                  { "phase_k", r.phase_k },
                  { "sde", r.initial_sde },
                  { "iterations", r.iterations } };
  if ( r.initial_sde >= 4 )
    report["certificate"] = certificate_to_json( certify_optimality( u, r.gates ) );
  else
    report["certificate"] = nullptr;
  if ( timing )
  {
    report["elapsed_ms"] =
        std::chrono::duration<double, std::milli>( std::chrono::steady_clock::now() - start ).count();
  }
  return report;
}

inline std::vector<ring_unitary> read_matrices( const std::string& matrix_src, const std::string& word,
                                                bool& batch )
{
  batch = false;
  if ( !word.empty() || matrix_src.empty() )
  {
    return { circuit::parse( word ).evaluate() };
  }
  const auto j = read_json_input( matrix_src );
  if ( j.is_array() )
  {
    batch = true;
    std::vector<ring_unitary> out;
    for ( const auto& m : j )
      out.push_back( unitary_from_json( m ) );
    return out;
  }
  return { unitary_from_json( j ) };
}

inline json error_json( const error& e )
{
  return { { "error", to_string( e.kind() ) }, { "message", e.what() } };
}

} // namespace detail

/*! \brief Parses argv and runs one subcommand; the report goes to out. */
inline int run( int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr )
{
  CLI::App app{ "Exact Clifford+T synthesis of single-qubit unitaries over Z[1/sqrt2, i]" };
  app.require_subcommand( 1 );

  std::string matrix_src, word, state_src, out_path, table_path;
  int jobs = 1;
  int depth = 8;
  bool negative_powers = false, prefer_p = false, timing = false;
  bool word_given = false;

  auto add_synthesis_flags = [&]( CLI::App* sub ) {
    sub->add_option( "--table", table_path, "Lookup table cache file (built and written when absent)" );
    sub->add_flag( "--negative-powers", negative_powers, "Descend with T^k, k in {0,-1,-2,-3}" );
    sub->add_flag( "--prefer-p", prefer_p, "Spell T^3 as P T instead of Z T+" );
  };

  auto* synth = app.add_subcommand( "synth", "Synthesize a unitary given as matrix JSON or as a circuit word" );
  synth->add_option( "--matrix", matrix_src, "Matrix JSON file, '-' for stdin, or a JSON array for batches" );
  auto* synth_word = synth->add_option( "--word", word, "Circuit text to evaluate and re-synthesize" );
  synth->add_option( "--jobs", jobs, "Worker threads for batch input" )->check( CLI::PositiveNumber );
  synth->add_flag( "--timing", timing, "Add elapsed_ms to each report" );
  add_synthesis_flags( synth );

  auto* prepare = app.add_subcommand( "prepare", "Circuit preparing a state from |0>" );
  prepare->add_option( "--state", state_src, "State JSON {\"z\":..,\"w\":..}, file or '-'" )->required();
  add_synthesis_flags( prepare );

  auto* verify = app.add_subcommand( "verify-lemma", "Exhaustive mod-8 check of the descent lemma" );

  auto* gen = app.add_subcommand( "gen-table", "Build the lookup table and write it to a file" );
  gen->add_option( "--out", out_path, "Output path" )->required();

  auto* oracle = app.add_subcommand( "oracle-check", "Compare synthesized counts with brute-force minima" );
  oracle->add_option( "--matrix", matrix_src, "Matrix JSON file or '-'" );
  auto* oracle_word = oracle->add_option( "--word", word, "Circuit text" );
  oracle->add_option( "--depth", depth, "Bound on the counted gate kind in the brute-force search" );
  add_synthesis_flags( oracle );

  auto* eval = app.add_subcommand( "eval", "Evaluate circuit text to a matrix" );
  auto* eval_word = eval->add_option( "--word", word, "Circuit text (application order)" )->required();

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::Success& e )
  {
    app.exit( e, out, err );
    return ok;
  }
  catch ( const CLI::ParseError& e )
  {
    out << json{ { "error", "USAGE-ERROR" }, { "message", e.what() } }.dump() << "\n";
    app.exit( e, err, err );
    return malformed_input;
  }

  synthesis_options options;
  options.powers = negative_powers ? descent_powers::negative : descent_powers::positive;
  options.style = prefer_p ? phase_style::prefer_p : phase_style::prefer_z;

  try
  {
    if ( *synth )
    {
      word_given = synth_word->count() > 0;
      if ( !word_given && matrix_src.empty() )
        throw parse_error( "synth needs --matrix or --word" );
      bool batch = false;
      const auto matrices = detail::read_matrices( matrix_src, word_given ? word : std::string(), batch );
      const auto table = load_or_build_table( table_path );
      std::vector<json> reports( matrices.size() );
      std::vector<std::exception_ptr> failures( matrices.size() );
      auto work = [&]( std::size_t begin, std::size_t stride ) {
        for ( std::size_t i = begin; i < matrices.size(); i += stride )
        {
          try
          {
            reports[i] = detail::synth_report( matrices[i], table, options, timing );
          }
          catch ( ... )
          {
            failures[i] = std::current_exception();
          }
        }
      };
      const auto workers = std::min<std::size_t>( static_cast<std::size_t>( jobs ), matrices.size() );
      std::vector<std::thread> pool;
      for ( std::size_t w = 1; w < workers; ++w )
        pool.emplace_back( work, w, workers );
      work( 0, std::max<std::size_t>( workers, 1 ) );
      for ( auto& t : pool )
        t.join();
      for ( auto& f : failures )
        if ( f )
          std::rethrow_exception( f );
      out << ( batch ? json( reports ) : reports.front() ).dump() << "\n";
      return ok;
    }
    if ( *prepare )
    {
      const auto s = state_from_json( detail::read_json_input( state_src ) );
      const auto table = load_or_build_table( table_path );
      const auto c = prepare_state( s, table, options );
      out << json{ { "circuit", c.to_string() }, { "counts", counts_to_json( c.counts() ) }, { "state", state_to_json( s ) } }
                 .dump()
          << "\n";
      return ok;
    }
    if ( *verify )
    {
      const auto r = verify_lemma_detailed();
      json report = { { "result", r.ok }, { "pairs_checked", r.pairs_checked } };
      if ( r.witness )
      {
        const auto& w = *r.witness;
        report["witness"] = { { "x", w.x.r }, { "y", w.y.r }, { "j", w.j }, { "d", w.d } };
      }
      out << report.dump() << "\n";
      return r.ok ? ok : lemma_false;
    }
    if ( *gen )
    {
      const auto table = build_table();
      save_table( table, out_path );
      out << json{ { "entries", table.size() }, { "max_length", table.max_length() }, { "out", out_path } }.dump()
          << "\n";
      return ok;
    }
    if ( *oracle )
    {
      word_given = oracle_word->count() > 0;
      if ( !word_given && matrix_src.empty() )
        throw parse_error( "oracle-check needs --matrix or --word" );
      bool batch = false;
      const auto matrices = detail::read_matrices( matrix_src, word_given ? word : std::string(), batch );
      if ( batch )
        throw parse_error( "oracle-check takes a single matrix" );
      const auto& u = matrices.front();
      const auto table = load_or_build_table( table_path );
      const auto c = synthesize( u, table, options );
      const auto n = c.counts();
      const auto brute = brute_force_min_counts( u, depth );
      json report = { { "circuit", c.to_string() },
                      { "counts", counts_to_json( n ) },
                      { "brute_force", brute ? json{ { "min_h", brute->first }, { "min_t", brute->second } } : json( nullptr ) } };
      const bool agree = brute && static_cast<int>( n.n_h ) == brute->first && static_cast<int>( n.n_t ) == brute->second;
      report["agree"] = brute ? json( agree ) : json( nullptr );
      out << report.dump() << "\n";
      return ( brute && !agree ) ? internal_violation : ok;
    }
    if ( *eval )
    {
      (void)eval_word;
      out << unitary_to_json( circuit::parse( word ).evaluate() ).dump() << "\n";
      return ok;
    }
  }
  catch ( const error& e )
  {
    out << detail::error_json( e ).dump() << "\n";
    switch ( e.kind() )
    {
    case error_kind::parse:
    case error_kind::unitarity:
    case error_kind::divisibility:
      return malformed_input;
    default:
      return internal_violation;
    }
  }
  return malformed_input;
}

} // namespace ringsynth::cli
