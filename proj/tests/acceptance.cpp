#include <monodec/selftest.hpp>

#include <cstdio>
#include <cstdlib>

/* Runs the full acceptance suite and prints one line per criterion.
   Exits nonzero if any criterion fails. */
int main()
{
  monodec::selftest_options o;
  o.full = true;
  if ( char const* jobs = std::getenv( "MONODEC_JOBS" ) )
    o.jobs = std::atoi( jobs );

  bool all = true;
  for ( auto const& r : monodec::run_acceptance( o ) )
  {
    std::printf( "criterion %2d [%s] %s (%s)\n", r.id, r.pass ? "PASS" : "FAIL",
                 r.name.c_str(), r.detail.c_str() );
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
