// Deterministic CSV emission: fixed 9-significant-digit formatting, LF line
// endings, atomic file replacement.

#pragma once

#include <string>

#include "catwig/analysis.hpp"
#include "catwig/types.hpp"

namespace catwig {

// %.9g rendering, identical across runs.
std::string format_sig9(double v);

// Header "x,y,w", one row per cell, x varying fastest.
std::string grid_to_csv(const WignerGrid& g);

// Header "param,metric"; skipped parameters, if any, on a trailing
// "# skipped: ..." comment line.
std::string sweep_to_csv(const SweepResult& r);

// Write-to-temp-then-rename in the destination directory. Throws
// std::runtime_error on I/O failure.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace catwig
