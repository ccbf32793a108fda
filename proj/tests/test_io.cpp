#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using namespace std::string_literals;

#include "dsrg/errors.hpp"
#include "dsrg/io.hpp"
#include "dsrg/manifest.hpp"
#include "dsrg/rng.hpp"
#include "support/test_support.hpp"

using dsrg::BinaryMatrix;
using dsrg::MatrixFileFormat;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("dsrg_io_test_" + name);
}

struct FileGuard {
  std::filesystem::path path;
  ~FileGuard() { std::filesystem::remove(path); }
};

BinaryMatrix parse_text(const std::string& body) {
  std::istringstream in(body);
  return dsrg::read_matrix_text(in, "inline");
}

}  // namespace

TEST_CASE("text writing round-trips through parsing") {
  dsrg::SplitMix64 rng(31);
  for (auto [r, c] : {std::pair<std::size_t, std::size_t>{1, 1},
                      {3, 5},
                      {64, 64},
                      {65, 70},
                      {10, 128}}) {
    BinaryMatrix m = testsup::random_binary(rng, r, c);
    std::ostringstream out;
    dsrg::write_matrix_text(out, m);
    CHECK(parse_text(out.str()) == m);
  }
}

TEST_CASE("binary writing round-trips through parsing") {
  dsrg::SplitMix64 rng(37);
  for (auto [r, c] : {std::pair<std::size_t, std::size_t>{1, 1},
                      {3, 5},
                      {64, 64},
                      {65, 70},
                      {10, 128}}) {
    BinaryMatrix m = testsup::random_binary(rng, r, c);
    std::ostringstream out(std::ios::binary);
    dsrg::write_matrix_binary(out, m);
    std::istringstream in(out.str(), std::ios::binary);
    CHECK(dsrg::read_matrix_binary(in, "inline") == m);
  }
}

TEST_CASE("file level round-trip with format sniffing") {
  dsrg::SplitMix64 rng(41);
  BinaryMatrix m = testsup::random_binary(rng, 9, 33);
  FileGuard text{temp_file("roundtrip.txt")};
  FileGuard bin{temp_file("roundtrip.bin")};
  dsrg::write_matrix(text.path.string(), m, MatrixFileFormat::text);
  dsrg::write_matrix(bin.path.string(), m, MatrixFileFormat::binary);
  CHECK(dsrg::sniff_format(text.path.string()) == MatrixFileFormat::text);
  CHECK(dsrg::sniff_format(bin.path.string()) == MatrixFileFormat::binary);
  CHECK(dsrg::read_matrix(text.path.string()) == m);
  CHECK(dsrg::read_matrix(bin.path.string()) == m);
}

TEST_CASE("text and binary forms describe the same matrix") {
  dsrg::SplitMix64 rng(43);
  for (int it = 0; it < 10; ++it) {
    BinaryMatrix m = testsup::random_binary(rng, 1 + rng.below(70), 1 + rng.below(70));
    std::ostringstream t;
    dsrg::write_matrix_text(t, m);
    BinaryMatrix from_text = parse_text(t.str());
    std::ostringstream b(std::ios::binary);
    dsrg::write_matrix_binary(b, from_text);
    std::istringstream in(b.str(), std::ios::binary);
    CHECK(dsrg::read_matrix_binary(in, "inline") == m);
  }
}

TEST_CASE("comments and the header are honored") {
  BinaryMatrix m = parse_text("# produced by hand\n# second comment\n2 3\n101\n010\n");
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m.get(0, 0));
  CHECK_FALSE(m.get(1, 0));
}

TEST_CASE("text parse errors carry 1-based positions") {
  auto line_col = [](const std::string& body) {
    try {
      parse_text(body);
    } catch (const dsrg::ParseError& e) {
      return std::pair<std::size_t, std::size_t>{e.line(), e.column()};
    }
    return std::pair<std::size_t, std::size_t>{0, 0};
  };

  CHECK(line_col("2 3\n1x1\n010\n") == std::pair<std::size_t, std::size_t>{2, 2});
  CHECK(line_col("# c\n2 3\n101\n01\n") != std::pair<std::size_t, std::size_t>{0, 0});
  CHECK_THROWS_AS(parse_text(""), dsrg::ParseError);
  CHECK_THROWS_AS(parse_text("2\n10\n01\n"), dsrg::ParseError);       // header too short
  CHECK_THROWS_AS(parse_text("a b\n10\n01\n"), dsrg::ParseError);     // header not numeric
  CHECK_THROWS_AS(parse_text("2 2\n10\n"), dsrg::ParseError);         // missing row
  CHECK_THROWS_AS(parse_text("2 2\n10\n01\n11\n"), dsrg::ParseError); // extra row
  CHECK_THROWS_AS(parse_text("2 2\n10\n01"), dsrg::ParseError);       // missing newline
  CHECK_THROWS_AS(parse_text("0 2\n"), dsrg::ParseError);             // zero dimension
}

TEST_CASE("binary structural problems are IO errors") {
  BinaryMatrix m = dsrg::ones(3, 9);
  std::ostringstream out(std::ios::binary);
  dsrg::write_matrix_binary(out, m);
  std::string good = out.str();

  auto read_bytes = [](std::string bytes) {
    std::istringstream in(std::move(bytes), std::ios::binary);
    return dsrg::read_matrix_binary(in, "inline");
  };

  CHECK(read_bytes(good) == m);
  std::string bad_magic = good;
  bad_magic[0] = 'X';
  CHECK_THROWS_AS(read_bytes(bad_magic), dsrg::IoError);
  CHECK_THROWS_AS(read_bytes(good.substr(0, good.size() - 1)), dsrg::IoError);
  CHECK_THROWS_AS(read_bytes(good + "\0"s), dsrg::IoError);
  std::string dirty_padding = good;
  dirty_padding.back() = static_cast<char>(dirty_padding.back() | 0x01);
  CHECK_THROWS_AS(read_bytes(dirty_padding), dsrg::IoError);
}

TEST_CASE("binary layout is exactly the documented one") {
  // 9 columns: each row is two bytes, first byte = bits 0..7 MSB first.
  BinaryMatrix m(2, 9);
  m.set(0, 0, true);
  m.set(0, 8, true);
  m.set(1, 7, true);
  std::ostringstream out(std::ios::binary);
  dsrg::write_matrix_binary(out, m);
  std::string bytes = out.str();
  REQUIRE(bytes.size() == 7 + 8 + 8 + 4);
  CHECK(bytes.substr(0, 7) == std::string("DSRGB1\n"));
  CHECK(static_cast<unsigned char>(bytes[7]) == 2);    // rows, little endian
  CHECK(static_cast<unsigned char>(bytes[15]) == 9);   // cols
  CHECK(static_cast<unsigned char>(bytes[23]) == 0x80);  // row 0: bit 0
  CHECK(static_cast<unsigned char>(bytes[24]) == 0x80);  // row 0: bit 8
  CHECK(static_cast<unsigned char>(bytes[25]) == 0x01);  // row 1: bit 7
  CHECK(static_cast<unsigned char>(bytes[26]) == 0x00);
}

TEST_CASE("manifest digest matches a known vector and stays stable") {
  FileGuard f{temp_file("digest.txt")};
  {
    std::ofstream out(f.path, std::ios::binary);
    out << "2 3\n101\n010\n";
  }
  CHECK(dsrg::sha256_hex_of_file(f.path.string()) ==
        "f06ad5601c60074767a468d28b676c50d742d9d57dcb6bff7a2d5ac0b1f38638");

  dsrg::Manifest man;
  man.add("tool", "dsrg");
  man.add("output-sha256", dsrg::sha256_hex_of_file(f.path.string()));
  std::string once = man.str();
  CHECK(once.find("tool: dsrg\n") != std::string::npos);
  CHECK(man.str() == once);

  FileGuard mf{temp_file("digest.txt.manifest")};
  CHECK(dsrg::manifest_path_for(f.path.string()) == mf.path.string());
  man.write(mf.path.string());
  std::ifstream in(mf.path);
  std::stringstream read_back;
  read_back << in.rdbuf();
  CHECK(read_back.str() == once);
}

TEST_CASE("identical matrices produce identical bytes in both formats") {
  dsrg::SplitMix64 rng(47);
  BinaryMatrix m = testsup::random_binary(rng, 31, 45);
  BinaryMatrix copy = m;
  std::ostringstream t1, t2, b1(std::ios::binary), b2(std::ios::binary);
  dsrg::write_matrix_text(t1, m);
  dsrg::write_matrix_text(t2, copy);
  dsrg::write_matrix_binary(b1, m);
  dsrg::write_matrix_binary(b2, copy);
  CHECK(t1.str() == t2.str());
  CHECK(b1.str() == b2.str());
}

TEST_CASE("reading a missing file is an IO error") {
  CHECK_THROWS_AS(dsrg::read_matrix("/nonexistent/definitely_missing.txt"), dsrg::IoError);
  CHECK_THROWS_AS(dsrg::sha256_hex_of_file("/nonexistent/definitely_missing.txt"),
                  dsrg::IoError);
}
