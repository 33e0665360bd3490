#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace hextet {

// Vertex labels are 1..8. Subsets of labels are stored as bitmasks with bit
// (label - 1) set.
using Label = int;
using VertexMask = std::uint8_t;

inline constexpr int kNumVertices = 8;
inline constexpr int kNumBases = 70;      // C(8,4)
inline constexpr int kNumTriangles = 56;  // C(8,3)
inline constexpr int kNumFiveSets = 56;   // C(8,5)

constexpr VertexMask bitOf(Label l) { return static_cast<VertexMask>(1u << (l - 1)); }

constexpr int popcount(VertexMask m) { return std::popcount(static_cast<unsigned>(m)); }

template <std::size_t N>
constexpr VertexMask maskOf(const std::array<Label, N>& labels) {
  VertexMask m = 0;
  for (Label l : labels) m |= bitOf(l);
  return m;
}

inline VertexMask maskOf(std::initializer_list<Label> labels) {
  VertexMask m = 0;
  for (Label l : labels) m |= bitOf(l);
  return m;
}

// Labels of a mask in increasing order.
inline std::vector<Label> labelsOf(VertexMask m) {
  std::vector<Label> out;
  for (Label l = 1; l <= kNumVertices; ++l)
    if (m & bitOf(l)) out.push_back(l);
  return out;
}

template <std::size_t N>
std::array<Label, N> sortedLabels(VertexMask m) {
  std::array<Label, N> out{};
  std::size_t k = 0;
  for (Label l = 1; l <= kNumVertices && k < N; ++l)
    if (m & bitOf(l)) out[k++] = l;
  return out;
}

// "1245" style rendering.
inline std::string maskString(VertexMask m) {
  std::string s;
  for (Label l : labelsOf(m)) s += static_cast<char>('0' + l);
  return s;
}

// All k-subsets of {1..8} in lexicographic order of their sorted labels,
// with a reverse lookup from mask to index.
template <int K>
class SubsetTable {
 public:
  static constexpr int kCount = K == 3 ? 56 : K == 4 ? 70 : K == 5 ? 56 : 0;

  constexpr SubsetTable() {
    index_.fill(-1);
    int n = 0;
    std::array<int, K> c{};
    for (int i = 0; i < K; ++i) c[i] = i + 1;
    while (true) {
      VertexMask m = 0;
      for (int l : c) m |= bitOf(l);
      masks_[n] = m;
      index_[m] = n;
      ++n;
      int i = K - 1;
      while (i >= 0 && c[i] == kNumVertices - (K - 1 - i)) --i;
      if (i < 0) break;
      ++c[i];
      for (int j = i + 1; j < K; ++j) c[j] = c[j - 1] + 1;
    }
  }

  constexpr int size() const { return kCount; }
  constexpr VertexMask mask(int idx) const { return masks_[idx]; }
  constexpr int index(VertexMask m) const { return index_[m]; }

 private:
  std::array<VertexMask, kCount> masks_{};
  std::array<int, 256> index_{};
};

inline constexpr SubsetTable<3> kTriangles{};
inline constexpr SubsetTable<4> kBases{};
inline constexpr SubsetTable<5> kFiveSets{};

// Sign of the permutation that sorts `tuple` (0 if it has repeated entries).
template <std::size_t N>
constexpr int sortSign(const std::array<Label, N>& tuple) {
  int sign = 1;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) {
      if (tuple[i] == tuple[j]) return 0;
      if (tuple[i] > tuple[j]) sign = -sign;
    }
  return sign;
}

}  // namespace hextet
