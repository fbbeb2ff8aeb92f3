#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wittcurve::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name).
///
///   reduce <form> | equal <form> <form> | invariants <form> | enumerate | verify
///   --q-mod-4 {1|3}  --picard-rank <r>  --format {json|csv|text}  --out <path>
///
/// Returns 0 on success or a true answer, 1 on a false answer or failed verification,
/// 2 on usage errors (reported on err).
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wittcurve::cli
