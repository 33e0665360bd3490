#include "hextet/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <thread>

#include "hextet/ball.hpp"

namespace hextet {

std::vector<BoundaryClass> enumerateBoundaryTriangulations() {
  std::map<std::uint8_t, int> classOf;
  std::vector<std::uint8_t> canon(64);
  for (int bits = 0; bits < 64; ++bits) {
    canon[bits] = canonicalBoundaryBits(BoundaryTriangulation(static_cast<std::uint8_t>(bits)));
    classOf.emplace(canon[bits], 0);
  }
  int next = 0;
  for (auto& [key, id] : classOf) id = next++;
  std::vector<BoundaryClass> out;
  for (int bits = 0; bits < 64; ++bits)
    out.push_back({BoundaryTriangulation(static_cast<std::uint8_t>(bits)), classOf[canon[bits]]});
  return out;
}

std::bitset<kNumBases> EnumerationOptions::defaultAllowed() {
  std::bitset<kNumBases> allowed;
  for (int i = 0; i < kNumBases; ++i) allowed[i] = !HexTemplate::isFacetQuadruple(kBases.mask(i));
  return allowed;
}

namespace {

struct TetFaces {
  VertexMask mask;
  int basis;
  std::array<int, 4> tris;
};

// For each triangle, the five tets obtained by adding one more label.
struct Cofaces {
  std::array<std::array<TetFaces, 5>, kNumTriangles> of{};

  Cofaces() {
    for (int t = 0; t < kNumTriangles; ++t) {
      const VertexMask tm = kTriangles.mask(t);
      int k = 0;
      for (Label l = 1; l <= 8; ++l) {
        if (tm & bitOf(l)) continue;
        TetFaces& f = of[t][k++];
        f.mask = static_cast<VertexMask>(tm | bitOf(l));
        f.basis = kBases.index(f.mask);
        int j = 0;
        for (Label m : labelsOf(f.mask)) f.tris[j++] = kTriangles.index(static_cast<VertexMask>(f.mask & ~bitOf(m)));
      }
    }
  }
};

const Cofaces& cofaces() {
  static const Cofaces kCofaces;
  return kCofaces;
}

class Search {
 public:
  Search(const BoundaryTriangulation& b, const EnumerationOptions& opts, EnumerationStats& stats)
      : boundary_(b), isBoundary_(b.triangleFlags()), opts_(opts), stats_(stats) {
    for (int t = 0; t < kNumTriangles; ++t)
      if (isBoundary_[t]) openSet_ |= std::uint64_t{1} << t;
  }

  std::vector<Triangulation> run() {
    recurse();
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  int capacity(int tri) const { return isBoundary_[tri] ? 1 : 2; }
  bool open(int tri) const { return isBoundary_[tri] ? count_[tri] == 0 : count_[tri] == 1; }

  bool fits(const TetFaces& f) const {
    if (!opts_.allowed[f.basis] || used_[f.basis]) return false;
    for (int t : f.tris)
      if (count_[t] + 1 > capacity(t)) return false;
    return true;
  }

  int extensions(int tri, std::array<const TetFaces*, 5>* out) const {
    int n = 0;
    for (const TetFaces& f : cofaces().of[tri])
      if (fits(f)) {
        if (out) (*out)[n] = &f;
        ++n;
      }
    return n;
  }

  void place(const TetFaces& f, int delta) {
    used_[f.basis] = delta > 0;
    for (int t : f.tris) {
      count_[t] += delta;
      const auto bit = std::uint64_t{1} << t;
      if (open(t))
        openSet_ |= bit;
      else
        openSet_ &= ~bit;
    }
    if (delta > 0)
      tets_.push_back(f.mask);
    else
      tets_.pop_back();
  }

  void recurse() {
    ++stats_.nodes;
    // Pick the open triangle with the fewest ways to close it. Each branch
    // adds a distinct tet through that triangle, and any completion contains
    // exactly one such tet, so every triangulation is produced exactly once.
    int bestTri = -1;
    int bestCount = 9;
    for (std::uint64_t rest = openSet_; rest; rest &= rest - 1) {
      const int tri = std::countr_zero(rest);
      const int n = extensions(tri, nullptr);
      if (n < bestCount) {
        bestTri = tri;
        bestCount = n;
        if (n == 0) return;
      }
    }
    if (bestTri < 0) {
      ++stats_.closedComplexes;
      accept();
      return;
    }
    if (static_cast<int>(tets_.size()) >= opts_.maxTets) return;
    std::array<const TetFaces*, 5> ext{};
    extensions(bestTri, &ext);
    for (int k = 0; k < bestCount; ++k) {
      place(*ext[k], +1);
      recurse();
      place(*ext[k], -1);
    }
  }

  void accept() {
    if (static_cast<int>(tets_.size()) < opts_.minTets) return;
    BallComplex c(tets_);
    if (!validateBall(c, boundary_)) {
      ++stats_.rejectedByValidation;
      return;
    }
    found_.emplace_back(tets_);
  }

  BoundaryTriangulation boundary_;
  std::array<bool, kNumTriangles> isBoundary_;
  const EnumerationOptions& opts_;
  EnumerationStats& stats_;
  std::array<int, kNumTriangles> count_{};
  std::bitset<kNumBases> used_;
  std::uint64_t openSet_ = 0;
  std::vector<VertexMask> tets_;
  std::vector<Triangulation> found_;
};

}  // namespace

std::vector<Triangulation> enumerateTriangulations(const BoundaryTriangulation& b, const EnumerationOptions& opts,
                                                   EnumerationStats* stats) {
  EnumerationStats local;
  return Search(b, opts, stats ? *stats : local).run();
}

std::vector<Triangulation> enumerateAllTriangulations(const EnumerationOptions& opts, int workers) {
  std::vector<std::vector<Triangulation>> perBoundary(64);
  std::atomic<int> next{0};
  auto work = [&] {
    for (int i; (i = next.fetch_add(1)) < 64;)
      perBoundary[i] = enumerateTriangulations(BoundaryTriangulation(static_cast<std::uint8_t>(i)), opts);
  };
  workers = std::max(1, workers);
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  std::vector<Triangulation> all;
  for (auto& v : perBoundary) all.insert(all.end(), v.begin(), v.end());
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace hextet
