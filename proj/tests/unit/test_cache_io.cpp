#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "hodge/cache_io.hpp"

using hodge::CacheCheck;
using hodge::CacheFormatError;
using hodge::MemoCache;
using hodge::Rational;
using hodge::WEngine;
using hodge::canonicalize;

namespace {

std::string serialize(const MemoCache& cache) {
  std::ostringstream out;
  hodge::write_cache(out, cache);
  return out.str();
}

MemoCache warm_cache() {
  WEngine engine;
  engine.value({1, 1, 1}, 2, 1);
  engine.value({2, 3}, 1, 0);
  return engine.cache();
}

}  // namespace

TEST(CacheIo, LineFormat) {
  EXPECT_EQ(hodge::format_cache_line(canonicalize({2, 1, 1}, 2, 1), Rational(-3, 6)), "2\t1\t1,1,2\t-1/2");
}

TEST(CacheIo, RoundTripIsByteIdentical) {
  const MemoCache cache = warm_cache();
  const std::string text = serialize(cache);
  for (CacheCheck check : {CacheCheck::syntax, CacheCheck::recompute}) {
    std::istringstream in(text);
    MemoCache loaded;
    hodge::read_cache(in, loaded, check);
    EXPECT_EQ(loaded.entries(), cache.entries());
    EXPECT_EQ(serialize(loaded), text);
  }
}

TEST(CacheIo, LoadedCacheServesQueries) {
  std::istringstream in(serialize(warm_cache()));
  MemoCache loaded;
  hodge::read_cache(in, loaded);
  const std::size_t before = loaded.size();
  WEngine engine(std::move(loaded));
  EXPECT_EQ(engine.value({1, 1, 1}, 2, 1), Rational(1, 120));
  EXPECT_EQ(engine.cache().size(), before);
}

TEST(CacheIo, RejectsMalformedLines) {
  const char* bad[] = {
      "1\t1\t3",                 // missing field
      "1\t1\t3\t1/3\textra",     // extra field
      "1\t1\t3\t2/6",            // value not reduced
      "1\t1\t3,1\t1/3",          // weights not sorted
      "1\t1\t3\t 1/3",           // stray space
      "1\t2\t3\t1",              // lambda out of range
      "0\t0\t3\t1",              // undefined exponent
      "x\t1\t3\t1/3",            // not a number
      "1\t1\t0\t0",              // nonpositive weight
  };
  for (const char* line : bad) {
    std::istringstream in(std::string(line) + "\n");
    MemoCache cache;
    EXPECT_THROW(hodge::read_cache(in, cache), CacheFormatError) << line;
    EXPECT_EQ(cache.size(), 0u);
  }
}

TEST(CacheIo, RecomputeCatchesWrongValues) {
  std::istringstream syntax_only("1\t1\t3\t1/2\n");
  MemoCache accepted;
  EXPECT_NO_THROW(hodge::read_cache(syntax_only, accepted, CacheCheck::syntax));

  std::istringstream checked("1\t1\t3\t1/2\n");
  MemoCache rejected;
  EXPECT_THROW(hodge::read_cache(checked, rejected, CacheCheck::recompute), CacheFormatError);
  EXPECT_EQ(rejected.size(), 0u);
}

TEST(CacheIo, ConflictReportsLine) {
  std::istringstream in("1\t1\t3\t1/3\n1\t1\t3\t1/2\n");
  MemoCache cache;
  try {
    hodge::read_cache(in, cache);
    FAIL() << "expected CacheFormatError";
  } catch (const CacheFormatError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_EQ(cache.size(), 0u);
}

TEST(CacheIo, ConflictWithExistingEntryLeavesCacheUntouched) {
  MemoCache cache;
  cache.insert(canonicalize({3}, 1, 1), Rational(1, 3));
  std::istringstream in("1\t1\t2\t1/8\n1\t1\t3\t1/2\n");
  EXPECT_THROW(hodge::read_cache(in, cache), CacheFormatError);
  EXPECT_EQ(cache.size(), 1u);
}

TEST(CacheIo, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "hodge_cache_io_test.tsv";
  const MemoCache cache = warm_cache();
  hodge::save_cache(path, cache);
  MemoCache loaded;
  hodge::load_cache(path, loaded, CacheCheck::recompute);
  EXPECT_EQ(loaded.entries(), cache.entries());
  std::filesystem::remove(path);
}
