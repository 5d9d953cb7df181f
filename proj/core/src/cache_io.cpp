#include "hodge/cache_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

namespace hodge {

namespace {

int parse_int(std::string_view field, std::size_t line, const char* name) {
  int value = 0;
  auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc() || end != field.data() + field.size()) {
    throw CacheFormatError(line, std::string("bad ") + name + " field '" + std::string(field) + "'");
  }
  return value;
}

std::vector<std::string_view> split_tabs(std::string_view text) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    auto tab = text.find('\t', pos);
    fields.push_back(text.substr(pos, tab == std::string_view::npos ? std::string_view::npos : tab - pos));
    if (tab == std::string_view::npos) break;
    pos = tab + 1;
  }
  return fields;
}

}  // namespace

std::string format_cache_line(const WKey& key, const Rational& value) {
  return std::to_string(key.genus) + '\t' + std::to_string(key.lambda) + '\t' + key.etas.str() +
         '\t' + value.str();
}

void write_cache(std::ostream& out, const MemoCache& cache) {
  for (const auto& [key, value] : cache.entries()) out << format_cache_line(key, value) << '\n';
}

void save_cache(const std::filesystem::path& path, const MemoCache& cache) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open cache file for writing: " + path.string());
  write_cache(out, cache);
  if (!out) throw std::runtime_error("failed writing cache file: " + path.string());
}

void read_cache(std::istream& in, MemoCache& cache, CacheCheck check) {
  MemoCache staged = cache;
  MemoCache scratch;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.empty()) continue;
    auto fields = split_tabs(text);
    if (fields.size() != 4) throw CacheFormatError(line, "expected 4 tab-separated fields");
    const int g = parse_int(fields[0], line, "genus");
    const int i = parse_int(fields[1], line, "lambda");
    WKey key;
    Rational value;
    try {
      auto etas = EtaMultiset::parse(fields[2]);
      key = canonicalize({etas.weights().begin(), etas.weights().end()}, g, i);
      value = Rational::parse(fields[3]);
    } catch (const std::invalid_argument& e) {
      throw CacheFormatError(line, e.what());
    }
    if (format_cache_line(key, value) != text) {
      throw CacheFormatError(line, "entry is not in canonical form");
    }
    if (!key.in_range() || (key.exponent() <= 0 && !key.is_initial_value())) {
      throw CacheFormatError(line, "key " + key.str() + " is never produced by the engine");
    }
    if (check == CacheCheck::recompute) {
      Rational expected;
      try {
        expected = w_value(key, scratch);
      } catch (const UndefinedExponent& e) {
        throw CacheFormatError(line, e.what());
      }
      if (expected != value) {
        throw CacheFormatError(line, "stored value " + value.str() + " differs from recomputed " +
                                         expected.str());
      }
    }
    try {
      staged.insert(key, value);
    } catch (const std::logic_error& e) {
      throw CacheFormatError(line, e.what());
    }
  }
  cache = std::move(staged);
}

void load_cache(const std::filesystem::path& path, MemoCache& cache, CacheCheck check) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open cache file: " + path.string());
  read_cache(in, cache, check);
}

}  // namespace hodge
