// Copyright 2026 The openbaker Authors
// SPDX-License-Identifier: Apache-2.0

#include <filesystem>
#include <fstream>
#include <cstring>
#include <string>

#include <gtest/gtest.h>

#include "openbaker/io/cache.hpp"
#include "openbaker/io/checksum.hpp"
#include "openbaker/io/csv.hpp"
#include "openbaker/io/manifest.hpp"
#include "openbaker/io/matrix_dump.hpp"
#include "openbaker/io/raster.hpp"
#include "openbaker/propagator.hpp"

namespace openbaker::io {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("openbaker-io-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

PropagatorSpec spec(int n, const char* centre, const char* width) {
  return {n, OpeningSpec(Rational::from_decimal(centre), Rational::from_decimal(width))};
}

TEST(CsvTest, HeadersAreExact) {
  const ResonanceSet set = resonance_set(spec(20, "0.5", "0.1"));
  EXPECT_EQ(first_line(sweep_csv({})), "q_c,delta_q,t,area");
  EXPECT_EQ(first_line(series_csv(SurvivalSeries{})), "t,area");
  EXPECT_EQ(first_line(spectrum_csv(set)), "index,re,im,modulus,gamma");
  EXPECT_EQ(first_line(cumulative_csv(cumulative_count(set))), "nu,n");
  EXPECT_EQ(first_line(histogram_csv(modulus_histogram(set))), "nu_bin_left,W");
  EXPECT_EQ(first_line(width_csv({})), "N,q_c,sigma");
  EXPECT_EQ(first_line(rescaled_csv(rescaled_decay_histogram(set, 0.1))), "gamma_over_gamma_cl,W");
  EXPECT_EQ(first_line(weyl_csv({})), "N,count,log10N,log10count");
}

TEST(CsvTest, SweepRowsUseTwelveDigits) {
  const std::vector<SweepPoint> points = {{Rational(3, 10), Rational(1, 10), 9, Rational(1, 3)}};
  EXPECT_EQ(sweep_csv(points), "q_c,delta_q,t,area\n0.3,0.1,9,0.333333333333\n");
}

TEST(CsvTest, SpectrumRowsAndInfinity) {
  const ResonanceSet set = resonance_set(spec(20, "0.5", "0.1"));
  const std::string csv = spectrum_csv(set);
  std::size_t rows = 0;
  for (char c : csv) rows += c == '\n';
  EXPECT_EQ(rows, 21u);
  EXPECT_NE(csv.find(",inf\n"), std::string::npos);
  EXPECT_EQ(csv.find("nan"), std::string::npos);
}

TEST(CsvTest, SpectrumRoundTripIsBitwiseAtSeventeenDigits) {
  const ResonanceSet set = resonance_set(spec(64, "0.3", "0.1"));
  const ResonanceSet back = parse_spectrum_csv(spectrum_csv(set, kRoundTripDigits), set.spec());
  ASSERT_EQ(back.size(), set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    EXPECT_EQ(back.eigenvalues()[i], set.eigenvalues()[i]);
    EXPECT_EQ(back.moduli()[i], set.moduli()[i]);
  }
  EXPECT_THROW(parse_spectrum_csv("a,b\n", set.spec()), std::invalid_argument);
  EXPECT_THROW(parse_spectrum_csv("index,re,im,modulus,gamma\n0,1,2\n", set.spec()), std::invalid_argument);
  EXPECT_THROW(parse_spectrum_csv("index,re,im,modulus,gamma\n0,1,x,1,0\n", set.spec()), std::invalid_argument);
}

TEST(CsvTest, WidthSkipsFailedPoints) {
  std::vector<WidthPoint> points(2);
  points[0] = {600, Rational(1, 2), 0.05, ""};
  points[1] = {602, Rational(1, 2), 0.0, "failed"};
  EXPECT_EQ(width_csv(points), "N,q_c,sigma\n600,0.5,0.05\n");
}

TEST(FileTest, AtomicWriteCreatesDirectoriesAndReplaces) {
  TempDir dir;
  const fs::path p = dir.path() / "a" / "b" / "file.txt";
  write_file_atomic(p, "one");
  write_file_atomic(p, "two");
  EXPECT_EQ(read_file(p), "two");
  std::size_t entries = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(p.parent_path())) ++entries;
  EXPECT_EQ(entries, 1u);
  EXPECT_THROW(read_file(dir.path() / "missing"), std::runtime_error);
}

TEST(ChecksumTest, KnownVectors) {
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(ManifestTest, RoundTripAndNoTimestampByDefault) {
  TempDir dir;
  write_with_manifest(dir.path() / "x.csv", "a,b\n1,2\n", "test", {{"N", "4"}, {"q_c", "3/10"}});
  const std::string text = read_file(manifest_path(dir.path() / "x.csv"));
  EXPECT_EQ(text.find("created"), std::string::npos);
  const Manifest m = parse_manifest(text);
  EXPECT_EQ(m.file, "x.csv");
  EXPECT_EQ(m.kind, "test");
  EXPECT_EQ(m.sha256, sha256_hex("a,b\n1,2\n"));
  ASSERT_EQ(m.parameters.size(), 2u);
  EXPECT_EQ(m.parameters[1].second, "3/10");
  EXPECT_EQ(to_text(m), text);
  EXPECT_EQ(utc_timestamp().size(), 20u);
}

TEST(MatrixDumpTest, LayoutAndRoundTrip) {
  ComplexMatrix m(2);
  m(0, 0) = {1, 2};
  m(0, 1) = {3, 4};
  m(1, 0) = {5, 6};
  m(1, 1) = {7, 8};
  const std::string bytes = dump_matrix(m);
  ASSERT_EQ(bytes.size(), 8u + 2 * 2 * 2 * 8);
  EXPECT_EQ(bytes[0], '\x02');
  for (int i = 1; i < 8; ++i) EXPECT_EQ(bytes[i], '\0');
  double second;
  std::memcpy(&second, bytes.data() + 16, 8);
  EXPECT_EQ(second, 2.0);
  double third;
  std::memcpy(&third, bytes.data() + 24, 8);
  EXPECT_EQ(third, 3.0);
  EXPECT_EQ(load_matrix(bytes), m);
  const ComplexMatrix b = open_propagator(spec(16, "0.3", "0.2"));
  EXPECT_EQ(load_matrix(dump_matrix(b)), b);
  EXPECT_THROW(load_matrix(bytes.substr(0, 20)), std::invalid_argument);
}

TEST(RasterTest, PortableGraymap) {
  const TrappedRaster r = render_trapped_set(OpeningSpec(0.5, 0.5), 0, 16, RasterMode::initial);
  const std::string img = pgm(r);
  const std::string header = "P5\n16 16\n255\n";
  ASSERT_EQ(img.size(), header.size() + 256);
  EXPECT_EQ(img.substr(0, header.size()), header);
  EXPECT_EQ(static_cast<unsigned char>(img[header.size()]), 0);
  EXPECT_EQ(static_cast<unsigned char>(img[header.size() + 8]), 255);
}

TEST(SpectrumCacheTest, HitIsBitwiseIdentical) {
  TempDir dir;
  const SpectrumCache cache(dir.path());
  const PropagatorSpec s = spec(96, "0.3", "0.1");
  const ResonanceSet first = cache.get_or_compute(s);
  EXPECT_EQ(cache.misses(), 1u);
  const ResonanceSet second = cache.get_or_compute(s);
  EXPECT_EQ(cache.hits(), 1u);
  EXPECT_EQ(spectrum_csv(first, kRoundTripDigits), spectrum_csv(second, kRoundTripDigits));
  EXPECT_EQ(spectrum_csv(first), spectrum_csv(resonance_set(s)));
  const Manifest m = parse_manifest(read_file(manifest_path(cache.payload_path(s))));
  EXPECT_TRUE(m.created.has_value());
  EXPECT_EQ(m.kind, "spectrum-cache");
}

TEST(SpectrumCacheTest, KeysSeparateSpecs) {
  EXPECT_NE(SpectrumCache::key(spec(96, "0.3", "0.1")), SpectrumCache::key(spec(98, "0.3", "0.1")));
  EXPECT_NE(SpectrumCache::key(spec(96, "0.3", "0.1")), SpectrumCache::key(spec(96, "0.5", "0.1")));
  EXPECT_NE(SpectrumCache::key(spec(96, "0.3", "0.1")), SpectrumCache::key(spec(96, "0.3", "0.05")));
  EXPECT_EQ(SpectrumCache::key(spec(96, "0.3", "0.1")), SpectrumCache::key(spec(96, "3/10", "1/10")));
}

TEST(SpectrumCacheTest, CorruptEntriesAreRejected) {
  TempDir dir;
  const SpectrumCache cache(dir.path());
  const PropagatorSpec s = spec(40, "0.5", "0.1");
  const ResonanceSet good = cache.get_or_compute(s);
  const fs::path payload = cache.payload_path(s);

  std::string text = read_file(payload);
  text[text.size() / 2] = text[text.size() / 2] == '1' ? '2' : '1';
  write_file_atomic(payload, text);
  EXPECT_FALSE(cache.load(s).has_value());
  EXPECT_EQ(cache.rejected(), 1u);

  // A payload whose checksum is consistent but whose eigenvalues violate the
  // trace identity.
  std::string tampered = spectrum_csv(ResonanceSet(s, std::vector<Complex>(40, Complex(0.5, 0))), kRoundTripDigits);
  write_file_atomic(payload, tampered);
  Manifest m = parse_manifest(read_file(manifest_path(payload)));
  m.sha256 = sha256_hex(tampered);
  write_file_atomic(manifest_path(payload), to_text(m));
  EXPECT_FALSE(cache.load(s).has_value());
  EXPECT_EQ(cache.rejected(), 2u);

  const ResonanceSet again = cache.get_or_compute(s);
  EXPECT_EQ(spectrum_csv(again), spectrum_csv(good));
  EXPECT_TRUE(cache.load(s).has_value());
}

}  // namespace
}  // namespace openbaker::io
