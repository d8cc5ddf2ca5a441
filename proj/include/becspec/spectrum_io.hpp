#pragma once

#include <string>
#include <vector>

#include "becspec/spectra.hpp"

namespace becspec {

enum class OutputFormat { csv, json };

/// CSV columns are exactly "detuning_hz,amplitude". The JSON variant embeds
/// the lines and the resolved config; numbers keep full double precision.
void write_spectrum_csv(const Spectrum& spec, const std::string& path);
void write_spectrum_json(const Spectrum& spec,
                         const std::vector<std::pair<std::string, std::string>>& config,
                         const std::string& path);

Spectrum read_spectrum_json(const std::string& path);

}  // namespace becspec
