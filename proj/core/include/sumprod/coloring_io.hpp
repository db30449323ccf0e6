#ifndef SUMPROD_COLORING_IO_HPP
#define SUMPROD_COLORING_IO_HPP

#include <string>
#include <string_view>

#include "sumprod/coloring.hpp"

namespace sumprod {

enum class ColoringFormat { text, json };

/// Parse a coloring from its serialized form.
///
/// Text format, one coloring per stream:
///   schur-coloring v1 <lo> <hi> <r>
///   <hi-lo+1 space-separated color indices>
/// JSON format: {"version":"1","lo":...,"hi":...,"num_colors":...,"colors":[...]}
///
/// Throws ParseError with line/offset context on malformed input.
Coloring read_coloring(std::string_view source, ColoringFormat format);

/// Guess the format from the first non-whitespace byte ('{' means JSON).
Coloring read_coloring_auto(std::string_view source);

/// Serialize; read_coloring(write_coloring(c, f), f) == c for both formats.
/// The text form is canonical: exact spacing, '\n' line ends, no trailing blanks.
std::string write_coloring(const Coloring& c, ColoringFormat format);

/// Hex SHA-256 of the canonical text form; embedded in certificates.
std::string coloring_digest(const Coloring& c);

}  // namespace sumprod

#endif
