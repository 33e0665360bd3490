#include "hextet/chirotope.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace hextet {

Chirotope Chirotope::parse(std::string_view text) {
  if (text.size() != kNumBases) throw std::invalid_argument("chirotope string must have 70 characters");
  std::array<std::int8_t, kNumBases> s{};
  for (int i = 0; i < kNumBases; ++i) {
    switch (text[i]) {
      case '+': s[i] = 1; break;
      case '-': s[i] = -1; break;
      case '0': s[i] = 0; break;
      default: throw std::invalid_argument("chirotope string: unexpected character");
    }
  }
  return Chirotope(s);
}

int Chirotope::operator()(const std::array<Label, 4>& tuple) const {
  const int s = sortSign(tuple);
  if (s == 0) return 0;
  return s * signs_[kBases.index(maskOf(tuple))];
}

bool Chirotope::uniform() const {
  return std::none_of(signs_.begin(), signs_.end(), [](std::int8_t s) { return s == 0; });
}

Chirotope Chirotope::negated() const {
  Chirotope c(*this);
  for (auto& s : c.signs_) s = static_cast<std::int8_t>(-s);
  return c;
}

Chirotope Chirotope::relabel(const Permutation& g) const {
  const Permutation inv = g.inverse();
  Chirotope out;
  for (int b = 0; b < kNumBases; ++b) {
    auto labels = sortedLabels<4>(kBases.mask(b));
    for (Label& l : labels) l = inv(l);
    out.signs_[b] = static_cast<std::int8_t>((*this)(labels));
  }
  return out;
}

std::string Chirotope::toString() const {
  std::string s(kNumBases, '0');
  for (int i = 0; i < kNumBases; ++i) s[i] = signs_[i] > 0 ? '+' : signs_[i] < 0 ? '-' : '0';
  return s;
}

std::array<int, 5> circuitSigns(const Chirotope& chi, VertexMask five) {
  const auto z = sortedLabels<5>(five);
  std::array<int, 5> s{};
  for (int i = 0; i < 5; ++i) {
    // Position i is 1-based index i+1, so (-1)^(i+1).
    const int parity = (i % 2 == 0) ? -1 : 1;
    s[i] = parity * chi.sign(static_cast<VertexMask>(five & ~bitOf(z[i])));
  }
  return s;
}

Circuit computeCircuit(const Chirotope& chi, VertexMask five) {
  const auto z = sortedLabels<5>(five);
  const auto s = circuitSigns(chi, five);
  Circuit c;
  int lead = 0;
  for (int i = 0; i < 5; ++i) {
    if (s[i] > 0) c.positive |= bitOf(z[i]);
    if (s[i] < 0) c.negative |= bitOf(z[i]);
    if (lead == 0) lead = s[i];
  }
  if (lead < 0) std::swap(c.positive, c.negative);
  return c;
}

ChirotopeCheck checkChirotope(const Chirotope& chi) {
  for (int a = 1; a <= 8; ++a)
    for (int b = a + 1; b <= 8; ++b) {
      std::vector<Label> rest;
      for (Label l = 1; l <= 8; ++l)
        if (l != a && l != b) rest.push_back(l);
      for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
          for (int k = j + 1; k < 6; ++k)
            for (int m = k + 1; m < 6; ++m) {
              const Label e1 = rest[i], e2 = rest[j], e3 = rest[k], e4 = rest[m];
              const int p1 = chi({a, b, e1, e2}) * chi({a, b, e3, e4});
              const int p2 = -chi({a, b, e1, e3}) * chi({a, b, e2, e4});
              const int p3 = chi({a, b, e1, e4}) * chi({a, b, e2, e3});
              const bool hasPos = p1 > 0 || p2 > 0 || p3 > 0;
              const bool hasNeg = p1 < 0 || p2 < 0 || p3 < 0;
              if ((hasPos || hasNeg) && !(hasPos && hasNeg)) {
                std::string where = std::to_string(a) + std::to_string(b) + "|" + std::to_string(e1) +
                                    std::to_string(e2) + std::to_string(e3) + std::to_string(e4);
                return {false, "exchange relation violated at " + where};
              }
            }
    }
  for (int z = 0; z < kNumFiveSets; ++z) {
    const auto s = circuitSigns(chi, kFiveSets.mask(z));
    const bool anyPos = std::any_of(s.begin(), s.end(), [](int v) { return v > 0; });
    const bool anyNeg = std::any_of(s.begin(), s.end(), [](int v) { return v < 0; });
    if (anyPos != anyNeg) return {false, "positive circuit on " + maskString(kFiveSets.mask(z))};
  }
  return {};
}

std::vector<int> coherentOrientation(const Triangulation& t) {
  const auto& tets = t.tets();
  const int n = static_cast<int>(tets.size());
  std::vector<int> o(n, 0);
  if (n == 0) return o;
  // Orientation induced on the face opposite the label at sorted position i.
  auto induced = [&](int tet, VertexMask face) {
    const auto l = sortedLabels<4>(tets[tet]);
    const auto missing = static_cast<VertexMask>(tets[tet] & ~face);
    int pos = 0;
    while (bitOf(l[pos]) != missing) ++pos;
    return (pos % 2 == 0 ? 1 : -1) * o[tet];
  };
  std::deque<int> queue{0};
  o[0] = 1;
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      if (j == i || popcount(tets[i] & tets[j]) != 3) continue;
      const auto face = static_cast<VertexMask>(tets[i] & tets[j]);
      if (o[j] == 0) {
        o[j] = 1;
        if (induced(j, face) == induced(i, face)) o[j] = -1;
        queue.push_back(j);
      } else if (induced(j, face) == induced(i, face)) {
        throw InvalidTriangulation("triangulation is not coherently orientable");
      }
    }
  }
  if (std::find(o.begin(), o.end(), 0) != o.end()) throw InvalidTriangulation("triangulation is not face-connected");
  return o;
}

// A circuit with positive part in one tet and negative part in another
// witnesses an improper intersection of the two.
std::optional<std::string> improperIntersection(const Chirotope& chi, const Triangulation& t) {
  const auto& tets = t.tets();
  for (std::size_t i = 0; i < tets.size(); ++i)
    for (std::size_t j = 0; j < tets.size(); ++j) {
      if (i == j) continue;
      const auto uni = static_cast<VertexMask>(tets[i] | tets[j]);
      if (popcount(uni) < 5) continue;
      for (int z = 0; z < kNumFiveSets; ++z) {
        const VertexMask five = kFiveSets.mask(z);
        if ((five & uni) != five) continue;
        const auto labels = sortedLabels<5>(five);
        const auto s = circuitSigns(chi, five);
        for (int sign : {1, -1}) {
          VertexMask pos = 0, neg = 0;
          for (int k = 0; k < 5; ++k) {
            if (s[k] * sign > 0) pos |= bitOf(labels[k]);
            if (s[k] * sign < 0) neg |= bitOf(labels[k]);
          }
          if (pos == 0 && neg == 0) continue;
          if ((pos & tets[i]) == pos && (neg & tets[j]) == neg)
            return "tets " + maskString(tets[i]) + " and " + maskString(tets[j]) + " intersect improperly (circuit on " +
                   maskString(five) + ")";
        }
      }
    }
  return std::nullopt;
}

std::optional<std::string> admissibilityViolation(const Chirotope& chi, const Triangulation& t, bool convex) {
  if (!chi.uniform()) return "chirotope is not uniform";
  if (auto c = checkChirotope(chi); !c) return c.reason;
  const auto o = coherentOrientation(t);
  for (std::size_t i = 0; i < o.size(); ++i)
    if (chi.sign(t.tets()[i]) != o[i]) return "tet " + maskString(t.tets()[i]) + " is negatively oriented";
  if (auto v = improperIntersection(chi, t)) return v;
  if (convex)
    for (int z = 0; z < kNumFiveSets; ++z) {
      const Circuit c = computeCircuit(chi, kFiveSets.mask(z));
      if (popcount(c.positive) == 1 || popcount(c.negative) == 1)
        return "point inside tetrahedron (circuit on " + maskString(kFiveSets.mask(z)) + ")";
    }
  return std::nullopt;
}

bool compatibleWith(const Chirotope& chi, const Triangulation& t) {
  const auto o = coherentOrientation(t);
  bool direct = true, flipped = true;
  for (std::size_t i = 0; i < o.size(); ++i) {
    const int s = chi.sign(t.tets()[i]);
    direct &= s == o[i];
    flipped &= s == -o[i];
  }
  if (!direct && !flipped) return false;
  return !improperIntersection(chi, t).has_value();
}

}  // namespace hextet
