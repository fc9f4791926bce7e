#include <ringsynth/cli.hpp>

int main( int argc, char** argv )
{
  return ringsynth::cli::run( argc, argv );
}
