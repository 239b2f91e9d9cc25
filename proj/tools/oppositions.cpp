#include <iostream>

#include <oppositions/cli.hpp>

int main( int argc, char** argv )
{
  return opp::cli::run( argc, argv, std::cin, std::cout, std::cerr );
}
