#pragma once

#include <string>

#include "colehopf/field.hpp"

namespace colehopf {

/// Shortest representation that round-trips to the same double. Keeps every
/// emitted file byte-deterministic for identical inputs.
std::string format_double(double v);

/// Writes to <path>.tmp and renames over <path>.
void write_text_atomic(const std::string& path, const std::string& content);

/// Field CSV: a "# field=<role> time=<t>" comment line, a "x,re,im" header,
/// then one row per node.
void write_field_csv(const ComplexField& f, const std::string& role, const std::string& path);

/// Reads the format above; also accepts the solver's x,re,im,abs output
/// (extra columns are ignored).
ComplexField read_field_csv(const std::string& path);

}  // namespace colehopf
