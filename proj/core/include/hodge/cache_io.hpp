#pragma once

/// @file cache_io.hpp
/// @brief Line-oriented persistence for MemoCache.
///
/// One entry per line: "g<TAB>i<TAB>a1,a2,...,an<TAB>p/q" with weights
/// sorted and the value in canonical rational form. Entries are written in
/// key order, so equal caches serialize to identical bytes.

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "hodge/w_engine.hpp"

namespace hodge {

class CacheFormatError : public std::runtime_error {
 public:
  CacheFormatError(std::size_t line, const std::string& what)
      : std::runtime_error("cache line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

enum class CacheCheck {
  syntax,     ///< strict parse; every line must already be in canonical form
  recompute,  ///< additionally re-derive each value with a fresh engine
};

std::string format_cache_line(const WKey& key, const Rational& value);

void write_cache(std::ostream& out, const MemoCache& cache);
void save_cache(const std::filesystem::path& path, const MemoCache& cache);

/// Merges all entries from `in` into `cache`. Throws CacheFormatError on the
/// first bad line; `cache` is left untouched in that case.
void read_cache(std::istream& in, MemoCache& cache, CacheCheck check = CacheCheck::syntax);
void load_cache(const std::filesystem::path& path, MemoCache& cache,
                CacheCheck check = CacheCheck::syntax);

}  // namespace hodge
