// Copyright 2026 The nsrte Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nsrte/embedding.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "nsrte/error.hpp"

namespace nsrte {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view s, const std::string& where) {
  s = trim(s);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw DatasetError(where + ": not a number '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DatasetError("cannot open " + path);
  return in;
}

}  // namespace

double cosine(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("dimensions " + std::to_string(a.size()) + " and " +
                            std::to_string(b.size()));
  }
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) throw ZeroVector("cosine of a zero vector");
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), -1.0, 1.0);
}

std::string normalize_text(std::string_view text) {
  std::string out;
  bool pending_space = false;
  for (const char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out += ' ';
    pending_space = false;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

SimilarityProvider SimilarityProvider::from_vectors(std::map<std::string, EmbeddingVector> vectors) {
  VectorStore store;
  for (auto& [text, vec] : vectors) {
    if (vec.empty()) throw DimensionMismatch("empty vector for '" + text + "'");
    if (store.dimension == 0) store.dimension = vec.size();
    if (vec.size() != store.dimension) {
      throw DimensionMismatch("vector for '" + text + "' has dimension " +
                              std::to_string(vec.size()));
    }
    if (std::all_of(vec.begin(), vec.end(), [](double d) { return d == 0.0; })) {
      throw ZeroVector("zero vector for '" + text + "'");
    }
    store.vectors.insert_or_assign(normalize_text(text), std::move(vec));
  }
  return SimilarityProvider(std::move(store));
}

SimilarityProvider SimilarityProvider::from_table(
    const std::vector<std::tuple<std::string, std::string, double>>& entries) {
  StubTable table;
  for (const auto& [a, b, score] : entries) {
    if (!(score >= -1.0 && score <= 1.0)) {
      throw DatasetError("stub score out of range for '" + a + "' / '" + b + "'");
    }
    table.scores.insert_or_assign({normalize_text(a), normalize_text(b)}, score);
  }
  return SimilarityProvider(std::move(table));
}

SimilarityProvider SimilarityProvider::load_vector_file(const std::string& path) {
  auto in = open(path);
  std::string line;
  std::size_t line_no = 0;
  std::size_t dim = 0;
  std::map<std::string, EmbeddingVector> vectors;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string where = path + ":" + std::to_string(line_no);
    if (trim(line).empty()) continue;
    if (dim == 0) {
      std::istringstream hs(line);
      std::string tag;
      if (!(hs >> tag >> dim) || tag != "#dim" || dim == 0) {
        throw DatasetError(where + ": expected '#dim D' header");
      }
      continue;
    }
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw DatasetError(where + ": missing tab");
    EmbeddingVector vec;
    vec.reserve(dim);
    for (auto field : split(std::string_view(line).substr(tab + 1), ' ')) {
      if (!trim(field).empty()) vec.push_back(parse_double(field, where));
    }
    if (vec.size() != dim) {
      throw DimensionMismatch(where + ": expected " + std::to_string(dim) + " values, got " +
                              std::to_string(vec.size()));
    }
    vectors.insert_or_assign(line.substr(0, tab), std::move(vec));
  }
  if (dim == 0) throw DatasetError(path + ": missing '#dim D' header");
  auto provider = from_vectors(std::move(vectors));
  std::get<VectorStore>(provider.data_).dimension = dim;
  return provider;
}

SimilarityProvider SimilarityProvider::load_stub_file(const std::string& path) {
  auto in = open(path);
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::tuple<std::string, std::string, double>> entries;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const std::string where = path + ":" + std::to_string(line_no);
    const auto fields = split(line, '\t');
    if (fields.size() != 3) throw DatasetError(where + ": expected 3 tab-separated fields");
    entries.emplace_back(std::string(fields[0]), std::string(fields[1]),
                         parse_double(fields[2], where));
  }
  return from_table(entries);
}

SimilarityProvider SimilarityProvider::load(const std::string& path) {
  auto in = open(path);
  std::string line;
  while (std::getline(in, line)) {
    const auto t = trim(line);
    if (t.empty()) continue;
    if (t.rfind("#dim", 0) == 0) return load_vector_file(path);
    break;
  }
  return load_stub_file(path);
}

std::optional<double> SimilarityProvider::try_similarity(std::string_view a,
                                                         std::string_view b) const {
  const std::string ka = normalize_text(a);
  const std::string kb = normalize_text(b);
  if (const auto* store = std::get_if<VectorStore>(&data_)) {
    const auto ia = store->vectors.find(ka);
    const auto ib = store->vectors.find(kb);
    if (ia == store->vectors.end() || ib == store->vectors.end()) return std::nullopt;
    return cosine(ia->second, ib->second);
  }
  const auto& table = std::get<StubTable>(data_).scores;
  if (auto it = table.find({ka, kb}); it != table.end()) return it->second;
  if (auto it = table.find({kb, ka}); it != table.end()) return it->second;
  return std::nullopt;
}

double SimilarityProvider::similarity(std::string_view a, std::string_view b) const {
  if (auto s = try_similarity(a, b)) return *s;
  const std::string ka = normalize_text(a);
  if (const auto* store = std::get_if<VectorStore>(&data_)) {
    throw MissingEmbedding(store->vectors.count(ka) == 0 ? ka : normalize_text(b));
  }
  throw MissingEmbedding(ka + " | " + normalize_text(b));
}

std::size_t SimilarityProvider::size() const {
  if (const auto* store = std::get_if<VectorStore>(&data_)) return store->vectors.size();
  return std::get<StubTable>(data_).scores.size();
}

std::string SimilarityProvider::format_vector_file(const VectorStore& store) {
  std::ostringstream os;
  os.precision(std::numeric_limits<double>::max_digits10);
  os << "#dim " << store.dimension << "\n";
  for (const auto& [text, vec] : store.vectors) {
    os << text << '\t';
    for (std::size_t i = 0; i < vec.size(); ++i) {
      if (i != 0) os << ' ';
      os << vec[i];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace nsrte
