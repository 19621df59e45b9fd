// cli.hpp - the `wigner` command-line front end.
//
//   wigner simulate --model quantum --angles a,b,c | --model classical --atoms w1,...,w8 [--symmetrize]
//                   --design three|two --n N --seed S --out FILE [--workers W]
//   wigner test FILE --alpha A --report FILE [--seed S] [--symmetry-tol T]
//   wigner search --grid K --refine-tol T [--floor-samples N] [--seed S] [--workers W]
//   wigner interference --p P --p1 P1 --p2 P2
//
// Exit codes: 0 success, 2 invalid input, 3 degenerate or inconclusive analysis.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wigner::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitInconclusive = 3;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wigner::cli
