#include "dsrg/io.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "dsrg/errors.hpp"

namespace dsrg {

namespace {

constexpr char kMagic[] = "DSRGB1\n";
constexpr std::size_t kMagicLen = 7;
constexpr std::uint64_t kTextLimitBytes = std::uint64_t{2} * 1024 * 1024 * 1024;

void put_u64_le(std::ostream& out, std::uint64_t value) {
  std::array<char, 8> bytes;
  for (int i = 0; i < 8; ++i) bytes[static_cast<std::size_t>(i)] =
      static_cast<char>((value >> (8 * i)) & 0xFF);
  out.write(bytes.data(), 8);
}

std::uint64_t get_u64_le(std::istream& in, const std::string& name, const char* what) {
  std::array<char, 8> bytes;
  in.read(bytes.data(), 8);
  if (in.gcount() != 8)
    throw IoError(name + ": truncated while reading " + std::string(what));
  std::uint64_t value = 0;
  for (int i = 0; i < 8; ++i)
    value |= static_cast<std::uint64_t>(static_cast<unsigned char>(
                 bytes[static_cast<std::size_t>(i)]))
             << (8 * i);
  return value;
}

// A row's bytes come straight out of its MSB-first words: byte b lives in
// word b/8 at shift 56 - 8*(b%8).
unsigned char row_byte(const std::uint64_t* words, std::size_t b) {
  return static_cast<unsigned char>((words[b / 8] >> (56 - 8 * (b % 8))) & 0xFF);
}

std::uint64_t parsed_count(const std::string& token, std::size_t line,
                           std::size_t column, const std::string& name) {
  if (token.empty() || token.size() > 19)
    throw ParseError(name + ": malformed dimension in header", line, column);
  std::uint64_t value = 0;
  for (char ch : token) {
    if (ch < '0' || ch > '9')
      throw ParseError(name + ": malformed dimension in header", line, column);
    value = value * 10 + static_cast<std::uint64_t>(ch - '0');
  }
  return value;
}

}  // namespace

const char* to_string(MatrixFileFormat format) {
  return format == MatrixFileFormat::text ? "text" : "binary";
}

MatrixFileFormat sniff_format(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::array<char, kMagicLen> head{};
  in.read(head.data(), kMagicLen);
  if (in.gcount() == static_cast<std::streamsize>(kMagicLen) &&
      std::string(head.data(), kMagicLen) == kMagic)
    return MatrixFileFormat::binary;
  return MatrixFileFormat::text;
}

BinaryMatrix read_matrix_text(std::istream& in, const std::string& name) {
  std::string line;
  std::size_t line_no = 0;

  // Comments, then the header.
  for (;;) {
    if (!std::getline(in, line))
      throw ParseError(name + ": missing header line", line_no + 1, 1);
    ++line_no;
    if (!line.empty() && line.front() == '#') continue;
    break;
  }
  std::size_t space = line.find(' ');
  if (space == std::string::npos)
    throw ParseError(name + ": header must be \"rows cols\"", line_no, 1);
  std::uint64_t rows = parsed_count(line.substr(0, space), line_no, 1, name);
  std::uint64_t cols = parsed_count(line.substr(space + 1), line_no, space + 2, name);
  if (rows == 0 || cols == 0)
    throw ParseError(name + ": dimensions must be >= 1", line_no, 1);

  BinaryMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (std::uint64_t i = 0; i < rows; ++i) {
    if (!std::getline(in, line))
      throw ParseError(name + ": expected " + std::to_string(rows) +
                           " data rows, found " + std::to_string(i),
                       line_no + 1, 1);
    ++line_no;
    bool missing_newline = in.eof();
    if (line.size() != cols) {
      std::size_t col = std::min<std::size_t>(line.size(), cols) + 1;
      throw ParseError(name + ": row has " + std::to_string(line.size()) +
                           " characters, expected " + std::to_string(cols),
                       line_no, col);
    }
    if (missing_newline)
      throw ParseError(name + ": final row is not newline-terminated", line_no,
                       cols + 1);
    for (std::size_t j = 0; j < line.size(); ++j) {
      char ch = line[j];
      if (ch == '1')
        m.set(static_cast<std::size_t>(i), j, true);
      else if (ch != '0')
        throw ParseError(name + ": invalid character '" + std::string(1, ch) + "'",
                         line_no, j + 1);
    }
  }
  if (std::getline(in, line))
    throw ParseError(name + ": unexpected content after the last row", line_no + 1, 1);
  return m;
}

BinaryMatrix read_matrix_binary(std::istream& in, const std::string& name) {
  std::array<char, kMagicLen> head{};
  in.read(head.data(), kMagicLen);
  if (in.gcount() != static_cast<std::streamsize>(kMagicLen) ||
      std::string(head.data(), kMagicLen) != kMagic)
    throw IoError(name + ": missing binary matrix magic");
  std::uint64_t rows = get_u64_le(in, name, "row count");
  std::uint64_t cols = get_u64_le(in, name, "column count");
  BinaryMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));

  std::size_t bytes_per_row = (static_cast<std::size_t>(cols) + 7) / 8;
  std::vector<char> buffer(bytes_per_row);
  unsigned char pad_mask =
      (cols % 8 == 0) ? 0 : static_cast<unsigned char>(0xFF >> (cols % 8));
  for (std::uint64_t i = 0; i < rows; ++i) {
    in.read(buffer.data(), static_cast<std::streamsize>(bytes_per_row));
    if (in.gcount() != static_cast<std::streamsize>(bytes_per_row))
      throw IoError(name + ": truncated in row " + std::to_string(i));
    if (bytes_per_row > 0 &&
        (static_cast<unsigned char>(buffer[bytes_per_row - 1]) & pad_mask))
      throw IoError(name + ": nonzero padding bits in row " + std::to_string(i));
    auto row = m.row_words(static_cast<std::size_t>(i));
    for (std::size_t b = 0; b < bytes_per_row; ++b) {
      std::uint64_t byte = static_cast<unsigned char>(buffer[b]);
      row[b / 8] |= byte << (56 - 8 * (b % 8));
    }
  }
  char extra;
  if (in.read(&extra, 1) && in.gcount() == 1)
    throw IoError(name + ": trailing bytes after the last row");
  return m;
}

BinaryMatrix read_matrix(const std::string& path) {
  MatrixFileFormat format = sniff_format(path);
  if (format == MatrixFileFormat::text) {
    std::error_code ec;
    std::uintmax_t size = std::filesystem::file_size(path, ec);
    if (!ec && size > kTextLimitBytes)
      throw IoError(path + ": text matrices above 2 GiB are not supported; "
                           "convert to the binary format");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return format == MatrixFileFormat::binary ? read_matrix_binary(in, path)
                                            : read_matrix_text(in, path);
}

void write_matrix_text(std::ostream& out, const BinaryMatrix& m) {
  std::uint64_t payload = (static_cast<std::uint64_t>(m.rows())) *
                          (static_cast<std::uint64_t>(m.cols()) + 1);
  if (payload > kTextLimitBytes)
    throw IoError("text rendering would exceed 2 GiB; use the binary format");
  out << m.rows() << ' ' << m.cols() << '\n';
  std::string line(m.cols(), '0');
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::fill(line.begin(), line.end(), '0');
    m.for_each_set_in_row(i, [&](std::size_t j) { line[j] = '1'; });
    out.write(line.data(), static_cast<std::streamsize>(line.size()));
    out.put('\n');
  }
}

void write_matrix_binary(std::ostream& out, const BinaryMatrix& m) {
  out.write(kMagic, kMagicLen);
  put_u64_le(out, m.rows());
  put_u64_le(out, m.cols());
  std::size_t bytes_per_row = (m.cols() + 7) / 8;
  std::vector<char> buffer(bytes_per_row);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto row = m.row_words(i);
    for (std::size_t b = 0; b < bytes_per_row; ++b)
      buffer[b] = static_cast<char>(row_byte(row.data(), b));
    out.write(buffer.data(), static_cast<std::streamsize>(bytes_per_row));
  }
}

void write_matrix(const std::string& path, const BinaryMatrix& m,
                  MatrixFileFormat format) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  if (format == MatrixFileFormat::text)
    write_matrix_text(out, m);
  else
    write_matrix_binary(out, m);
  out.flush();
  if (!out) throw IoError("failed while writing " + path);
}

}  // namespace dsrg
