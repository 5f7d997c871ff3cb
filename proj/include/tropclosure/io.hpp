#pragma once

// Text format for matrices and vectors: one row per line, whitespace
// separated tokens, "-inf" for ε, "inf" or "+inf" for ε′. Blank lines and
// everything after '#' are ignored.

#include <cstdint>
#include <string>
#include <string_view>

#include "tropclosure/matrix.hpp"

namespace tropclosure {

/// Throws std::invalid_argument on a malformed token.
template <class T>
Ext<T> parse_scalar(std::string_view token);

/// Throws ParseError (with 1-based line and column) on malformed tokens,
/// ragged rows or empty input.
template <class T>
Matrix<T> parse_matrix(std::string_view text);

/// Accepts a single row or a single column.
template <class T>
Vector<T> parse_vector(std::string_view text);

template <class T>
std::string serialize_matrix(const Matrix<T>& m);

/// One line, entries separated by spaces.
template <class T>
std::string serialize_vector(const Vector<T>& v);

/// 64-bit FNV-1a of the raw bytes, as 16 hex digits.
std::string fnv1a64_hex(std::string_view bytes);

}  // namespace tropclosure
