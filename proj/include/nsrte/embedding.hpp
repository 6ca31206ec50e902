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

#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

namespace nsrte {

using EmbeddingVector = std::vector<double>;

/// Cosine of the angle between two vectors, clamped to [-1, 1].
/// Throws DimensionMismatch or ZeroVector.
double cosine(std::span<const double> a, std::span<const double> b);

/// Lower-cases and collapses runs of whitespace to one space. Underscores
/// are kept, so `lean_over` and `lean over` are different keys.
std::string normalize_text(std::string_view text);

/// Read-only source of similarity scores: either a store of embedding
/// vectors keyed by normalized text, or an explicit table of pair scores.
class SimilarityProvider {
 public:
  struct VectorStore {
    std::size_t dimension = 0;
    std::map<std::string, EmbeddingVector, std::less<>> vectors;
  };
  struct StubTable {
    std::map<std::pair<std::string, std::string>, double> scores;
  };

  /// Vectors must share one dimension and be non-zero.
  static SimilarityProvider from_vectors(std::map<std::string, EmbeddingVector> vectors);
  /// Scores must lie in [-1, 1]. Keys are normalized.
  static SimilarityProvider from_table(
      const std::vector<std::tuple<std::string, std::string, double>>& entries);

  /// `#dim D` header, then `text<TAB>d1 d2 ... dD` per line.
  static SimilarityProvider load_vector_file(const std::string& path);
  /// `textA<TAB>textB<TAB>score` per line.
  static SimilarityProvider load_stub_file(const std::string& path);
  /// Dispatches on the first non-blank line: `#dim` means a vector file.
  static SimilarityProvider load(const std::string& path);

  /// Throws MissingEmbedding when either fragment is unknown.
  double similarity(std::string_view a, std::string_view b) const;
  std::optional<double> try_similarity(std::string_view a, std::string_view b) const;

  bool is_vector_store() const { return std::holds_alternative<VectorStore>(data_); }
  std::size_t size() const;

  /// Writes the vector file format; values use max_digits10 so floats
  /// round-trip exactly.
  static std::string format_vector_file(const VectorStore& store);
  const VectorStore* vector_store() const { return std::get_if<VectorStore>(&data_); }

 private:
  explicit SimilarityProvider(std::variant<VectorStore, StubTable> data)
      : data_(std::move(data)) {}

  std::variant<VectorStore, StubTable> data_;
};

}  // namespace nsrte
