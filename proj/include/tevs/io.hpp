#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "tevs/core.hpp"

namespace tevs::io {

enum class Format { Json, Csv };

/// Picks a format from the file extension; anything but ".csv" is JSON.
Format format_for(const std::filesystem::path& path);
Format parse_format(const std::string& name);

struct LoadOptions {
    bool sanitize = false;             // replace exact zeros instead of rejecting them
    double epsilon = kDefaultEpsilon;  // used when sanitize is set
};

// JSON: {"d": 1, "series": [{"label": "A", "samples": [{"t": 0.0, "v": [1.0]}]}]}
// CSV (d = 1): header "label,t,v", one sample per row, series grouped by label.
Dataset read(std::istream& in, Format format, const LoadOptions& options = {});
void write(std::ostream& out, const Dataset& data, Format format);

Dataset load(const std::filesystem::path& path, Format format, const LoadOptions& options = {});
Dataset load(const std::filesystem::path& path, const LoadOptions& options = {});
void store(const Dataset& data, const std::filesystem::path& path, Format format);

/// Formats a double with 17 significant digits.
std::string format_real(double x);

}  // namespace tevs::io
