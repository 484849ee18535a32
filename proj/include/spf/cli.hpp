#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInternal = 3;

/// Runs one CLI invocation; `args` excludes the program name. Reports go to
/// `out` once computation is complete, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Writes the LR and character memo tables as
/// {"lr": {...}, "characters": {...}}.
void save_cache(const std::string& path);
/// Seeds the memo tables from a file written by save_cache. A missing file is
/// not an error.
void load_cache(const std::string& path);

}  // namespace spf::cli
