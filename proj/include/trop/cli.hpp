#pragma once

namespace trop {

/// Command line entry point.  Exit codes: 0 feasible / solution found /
/// certificate valid, 10 infeasible, 20 inconclusive (empty column set),
/// 1 invalid certificate (verify-cert), 2 usage or input errors.
int run_cli(int argc, const char* const* argv);

}  // namespace trop
