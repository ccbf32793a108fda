#pragma once

#include <iosfwd>
#include <string>

#include "dsrg/bit_matrix.hpp"

namespace dsrg {

/// On-disk encodings. The text form is a line-oriented 0/1 grid:
/// optional '#' comment lines, a "rows cols" header, then one line of
/// exactly `cols` characters from {0,1} per row, each newline-terminated
/// with no other whitespace. The binary form is the magic "DSRGB1\n",
/// rows and cols as little-endian 64-bit counts, then each row as
/// ceil(cols/8) bytes, most significant bit first, padding bits zero.
enum class MatrixFileFormat { text, binary };

/// Decides the format of an existing file by its leading bytes.
MatrixFileFormat sniff_format(const std::string& path);

/// Reads a matrix in either format (auto-detected). Text problems raise
/// ParseError with 1-based line/column; structural problems with binary
/// files, unreadable paths, or text files above 2 GiB raise IoError.
BinaryMatrix read_matrix(const std::string& path);

BinaryMatrix read_matrix_text(std::istream& in, const std::string& name);
BinaryMatrix read_matrix_binary(std::istream& in, const std::string& name);

/// Writes a matrix to a file in the requested format. A text rendering
/// that would exceed 2 GiB is refused (IoError) with a pointer to the
/// binary format.
void write_matrix(const std::string& path, const BinaryMatrix& m, MatrixFileFormat format);

void write_matrix_text(std::ostream& out, const BinaryMatrix& m);
void write_matrix_binary(std::ostream& out, const BinaryMatrix& m);

const char* to_string(MatrixFileFormat format);

}  // namespace dsrg
