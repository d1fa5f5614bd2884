// Command-line front end. Subcommands: eval, orbit, cayley, diagram,
// scenario, validate. Exit status 0 on success including void results,
// 1 on input errors, 2 on capacity errors. All output is deterministic.

#ifndef OIE_CLI_HPP
#define OIE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "oie/analysis.hpp"
#include "oie/core.hpp"
#include "oie/semigroup.hpp"
#include "oie/sequential.hpp"

namespace oie {

// The streams are parameters so the whole tool can be driven in-process.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

// Plain-text renderings shared by the subcommands and the test suite.
std::string format_oie(const OIE& o);
std::string format_eval_outcome(const OIE& value, VoidStep voided);
std::string format_orbit(const OrbitSpace& space);
std::string format_cayley(const CayleyTable& table);

} // namespace oie

#endif
