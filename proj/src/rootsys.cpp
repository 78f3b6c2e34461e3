#include "thetabar/rootsys.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>

#include "thetabar/error.hpp"

namespace thetabar {

namespace {

int height(const RootVector& v) { return std::accumulate(v.begin(), v.end(), 0); }

// Gram matrix (alpha_i, alpha_j) of one irreducible component in Bourbaki
// numbering, scaled so that every entry is an integer.
std::vector<int> component_gram(Family f, int n) {
  std::vector<int> g(static_cast<std::size_t>(n * n), 0);
  auto at = [&](int i, int j) -> int& { return g[static_cast<std::size_t>(i * n + j)]; };
  auto link = [&](int i, int j, int value) {
    at(i, j) = value;
    at(j, i) = value;
  };
  switch (f) {
    case Family::A:
      for (int i = 0; i < n; ++i) at(i, i) = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::B:  // alpha_n short
      for (int i = 0; i < n; ++i) at(i, i) = 2;
      at(n - 1, n - 1) = 1;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::C:  // alpha_n long
      for (int i = 0; i < n; ++i) at(i, i) = 2;
      at(n - 1, n - 1) = 4;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 2, n - 1, -2);
      break;
    case Family::D:
      for (int i = 0; i < n; ++i) at(i, i) = 2;
      for (int i = 0; i + 2 < n - 1; ++i) link(i, i + 1, -1);
      link(n - 3, n - 2, -1);
      link(n - 3, n - 1, -1);
      break;
    case Family::E:  // 1-3-4-5-6-7-8 with 2 attached to 4
      for (int i = 0; i < n; ++i) at(i, i) = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::F:  // alpha_1, alpha_2 long
      at(0, 0) = 4;
      at(1, 1) = 4;
      at(2, 2) = 2;
      at(3, 3) = 2;
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case Family::G:  // alpha_1 short
      at(0, 0) = 2;
      at(1, 1) = 6;
      link(0, 1, -3);
      break;
  }
  return g;
}

bool valid_rank(Family f, int n) {
  switch (f) {
    case Family::A: return n >= 1;
    case Family::B:
    case Family::C: return n >= 2;
    case Family::D: return n >= 3;
    case Family::E: return n >= 6 && n <= 8;
    case Family::F: return n == 4;
    case Family::G: return n == 2;
  }
  return false;
}

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace

char family_letter(Family f) { return static_cast<char>('A' + static_cast<int>(f)); }

// ---------------------------------------------------------------------------
// ParabolicType

ParabolicType ParabolicType::from_indices(std::span<const int> indices) {
  std::uint32_t bits = 0;
  for (int i : indices) bits |= 1u << i;
  return ParabolicType(bits);
}

int ParabolicType::size() const { return std::popcount(bits_); }

std::vector<int> ParabolicType::indices() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string ParabolicType::bitstring(int rank) const {
  std::string s;
  for (int i = 0; i < rank; ++i) s.push_back(contains(i) ? '1' : '0');
  return s;
}

ParabolicType ParabolicType::parse_bitstring(std::string_view s) {
  if (s.size() > 32) throw Error(ErrorKind::Parse, "type bitstring too long");
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      bits |= 1u << i;
    else if (s[i] != '0')
      throw Error(ErrorKind::Parse, "bad type bitstring '" + std::string(s) + "'");
  }
  return ParabolicType(bits);
}

// ---------------------------------------------------------------------------
// RootSystem

RootSystem RootSystem::build(std::span<const ComponentSpec> spec) {
  if (spec.empty()) throw Error(ErrorKind::InvalidRootSystem, "empty root system");
  auto data = std::make_shared<Data>();
  for (const auto& c : spec) {
    if (!valid_rank(c.family, c.rank))
      throw Error(ErrorKind::InvalidRootSystem,
                  std::string("invalid rank ") + std::to_string(c.rank) + " for family " + family_letter(c.family));
    data->components.push_back({c.family, c.rank, data->rank});
    data->rank += c.rank;
  }
  const int n = data->rank;
  if (n > 32) throw Error(ErrorKind::InvalidRootSystem, "total rank above 32");

  data->gram.assign(static_cast<std::size_t>(n * n), 0);
  for (const auto& c : data->components) {
    const auto g = component_gram(c.family, c.rank);
    for (int i = 0; i < c.rank; ++i)
      for (int j = 0; j < c.rank; ++j)
        data->gram[static_cast<std::size_t>((c.offset + i) * n + c.offset + j)] =
            g[static_cast<std::size_t>(i * c.rank + j)];
  }
  for (int i = 0; i < n; ++i) data->norms.push_back(data->gram[static_cast<std::size_t>(i * n + i)]);

  RootSystem rs;
  rs.data_ = data;

  // Phi is the W-orbit of Delta.
  std::set<RootVector> seen;
  std::deque<RootVector> queue;
  for (int i = 0; i < n; ++i) {
    RootVector e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    if (seen.insert(e).second) queue.push_back(e);
  }
  while (!queue.empty()) {
    RootVector v = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      RootVector r = rs.reflect(v, i);
      if (seen.insert(r).second) queue.push_back(std::move(r));
    }
  }
  std::vector<RootVector> positive;
  for (const auto& v : seen)
    if (height(v) > 0) positive.push_back(v);
  std::sort(positive.begin(), positive.end(), [](const RootVector& a, const RootVector& b) {
    const int ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a > b;
  });
  data->roots = positive;
  for (const auto& v : positive) {
    RootVector neg(v.size());
    std::transform(v.begin(), v.end(), neg.begin(), std::negate<>());
    data->roots.push_back(std::move(neg));
  }
  for (std::size_t i = 0; i < data->roots.size(); ++i) data->index.emplace_back(data->roots[i], i);
  std::sort(data->index.begin(), data->index.end());
  return rs;
}

RootSystem RootSystem::parse(std::string_view spec) {
  std::vector<ComponentSpec> parts;
  std::size_t pos = 0;
  const std::string bad = "bad root system name '" + std::string(spec) + "'";
  while (pos < spec.size()) {
    std::size_t end = pos;
    while (end < spec.size() && spec[end] != 'x' && spec[end] != 'X') ++end;
    std::string_view part = spec.substr(pos, end - pos);
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.front()))) part.remove_prefix(1);
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.back()))) part.remove_suffix(1);
    if (part.size() < 2) throw Error(ErrorKind::InvalidRootSystem, bad);
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(part[0])));
    if (letter < 'A' || letter > 'G') throw Error(ErrorKind::InvalidRootSystem, bad);
    const std::string_view digits = part.substr(1);
    if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        digits.size() > 2)
      throw Error(ErrorKind::InvalidRootSystem, bad);
    parts.push_back({static_cast<Family>(letter - 'A'), std::stoi(std::string(digits))});
    pos = end + 1;
    if (end == spec.size() - 1) throw Error(ErrorKind::InvalidRootSystem, bad);  // trailing 'x'
  }
  return build(parts);
}

std::string RootSystem::name() const {
  std::string s;
  for (const auto& c : components()) {
    if (!s.empty()) s += 'x';
    s += family_letter(c.family);
    s += std::to_string(c.rank);
  }
  return s;
}

std::optional<std::size_t> RootSystem::index_of(const RootVector& v) const {
  const auto& idx = data_->index;
  auto it = std::lower_bound(idx.begin(), idx.end(), v,
                             [](const std::pair<RootVector, std::size_t>& e, const RootVector& key) { return e.first < key; });
  if (it == idx.end() || it->first != v) return std::nullopt;
  return it->second;
}

int RootSystem::coroot_pairing(const RootVector& v, int i) const {
  const int n = rank();
  int dot = 0;
  for (int j = 0; j < n; ++j) dot += v[static_cast<std::size_t>(j)] * data_->gram[static_cast<std::size_t>(j * n + i)];
  return 2 * dot / data_->norms[static_cast<std::size_t>(i)];
}

RootVector RootSystem::reflect(const RootVector& v, int i) const {
  RootVector r = v;
  r[static_cast<std::size_t>(i)] -= coroot_pairing(v, i);
  return r;
}

int RootSystem::component_of(int simple) const {
  for (std::size_t c = 0; c < components().size(); ++c) {
    const auto& comp = components()[c];
    if (simple >= comp.offset && simple < comp.offset + comp.rank) return static_cast<int>(c);
  }
  throw Error(ErrorKind::Domain, "simple root index out of range");
}

std::size_t RootSystem::classical_root_count(Family f, int n) {
  const auto un = static_cast<std::size_t>(n);
  std::size_t positive = 0;
  switch (f) {
    case Family::A: positive = un * (un + 1) / 2; break;
    case Family::B:
    case Family::C: positive = un * un; break;
    case Family::D: positive = un * (un - 1); break;
    case Family::E: positive = n == 6 ? 36 : n == 7 ? 63 : 120; break;
    case Family::F: positive = 24; break;
    case Family::G: positive = 6; break;
  }
  return 2 * positive;
}

std::uint64_t RootSystem::classical_weyl_order(Family f, int n) {
  switch (f) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return (std::uint64_t{1} << n) * factorial(n);
    case Family::D: return (std::uint64_t{1} << (n - 1)) * factorial(n);
    case Family::E: return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

std::uint64_t RootSystem::weyl_order() const {
  std::uint64_t order = 1;
  for (const auto& c : components()) {
    const std::uint64_t k = classical_weyl_order(c.family, c.rank);
    if (order > UINT64_MAX / k) return UINT64_MAX;
    order *= k;
  }
  return order;
}

// ---------------------------------------------------------------------------
// WeylElement

WeylElement WeylElement::identity(int n) {
  std::vector<int> m(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i * n + i)] = 1;
  return {n, m, m};
}

WeylElement WeylElement::simple_reflection(const RootSystem& rs, int i) {
  const int n = rs.rank();
  if (i < 0 || i >= n) throw Error(ErrorKind::Domain, "simple reflection index out of range: " + std::to_string(i));
  std::vector<int> m(static_cast<std::size_t>(n * n), 0);
  for (int j = 0; j < n; ++j) {
    RootVector e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(j)] = 1;
    const RootVector img = rs.reflect(e, i);
    for (int r = 0; r < n; ++r) m[static_cast<std::size_t>(r * n + j)] = img[static_cast<std::size_t>(r)];
  }
  return {n, m, m};
}

WeylElement WeylElement::from_word(const RootSystem& rs, std::span<const int> word) {
  WeylElement w = identity(rs.rank());
  for (int i : word) w = w * simple_reflection(rs, i);
  return w;
}

std::vector<int> WeylElement::multiply(int n, const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(static_cast<std::size_t>(n * n), 0);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) {
      const int x = a[static_cast<std::size_t>(r * n + k)];
      if (x == 0) continue;
      for (int col = 0; col < n; ++col)
        c[static_cast<std::size_t>(r * n + col)] += x * b[static_cast<std::size_t>(k * n + col)];
    }
  return c;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  if (a.rank_ != b.rank_) throw Error(ErrorKind::Domain, "Weyl elements of different rank");
  const int n = a.rank_;
  return {n, WeylElement::multiply(n, a.matrix_, b.matrix_), WeylElement::multiply(n, b.inverse_, a.inverse_)};
}

RootVector WeylElement::apply(std::span<const int> v) const {
  const int n = rank_;
  RootVector out(static_cast<std::size_t>(n), 0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out[static_cast<std::size_t>(r)] += matrix_[static_cast<std::size_t>(r * n + c)] * v[static_cast<std::size_t>(c)];
  return out;
}

RootVector WeylElement::apply_inverse(std::span<const int> v) const {
  const int n = rank_;
  RootVector out(static_cast<std::size_t>(n), 0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out[static_cast<std::size_t>(r)] += inverse_[static_cast<std::size_t>(r * n + c)] * v[static_cast<std::size_t>(c)];
  return out;
}

WeylElement WeylElement::inverse() const { return {rank_, inverse_, matrix_}; }

bool WeylElement::is_identity() const { return *this == identity(rank_); }

bool WeylElement::sends_simple_positive(int i) const {
  const int n = rank_;
  for (int r = 0; r < n; ++r)
    if (matrix_[static_cast<std::size_t>(r * n + i)] < 0) return false;
  return true;
}

std::vector<int> WeylElement::word(const RootSystem& rs) const {
  std::vector<int> letters;
  WeylElement w = *this;
  const int n = rank_;
  while (!w.is_identity()) {
    int descent = -1;
    for (int i = 0; i < n && descent < 0; ++i)
      if (!w.sends_simple_positive(i)) descent = i;
    letters.push_back(descent);
    w = w * simple_reflection(rs, descent);
  }
  std::reverse(letters.begin(), letters.end());
  return letters;
}

int WeylElement::length(const RootSystem& rs) const { return static_cast<int>(word(rs).size()); }

std::vector<std::size_t> WeylElement::root_permutation(const RootSystem& rs) const {
  std::vector<std::size_t> perm(rs.num_roots());
  for (std::size_t i = 0; i < rs.num_roots(); ++i) {
    const auto idx = rs.index_of(apply(rs.root(i)));
    if (!idx) throw Error(ErrorKind::Domain, "Weyl element does not preserve the root system");
    perm[i] = *idx;
  }
  return perm;
}

std::size_t WeylElement::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (int x : matrix_) h = (h ^ static_cast<std::size_t>(x + 1024)) * 1099511628211ull;
  return h;
}

// ---------------------------------------------------------------------------
// Weyl group and parabolic combinatorics

WeylGroup weyl_group(const RootSystem& rs, std::uint64_t cap) {
  const std::uint64_t expected = rs.weyl_order();
  if (expected > cap)
    throw Error(ErrorKind::CapExceeded, "|W(" + rs.name() + ")| = " + std::to_string(expected) +
                                            " exceeds the enumeration cap " + std::to_string(cap));
  const int n = rs.rank();
  std::vector<WeylElement> gens;
  for (int i = 0; i < n; ++i) gens.push_back(WeylElement::simple_reflection(rs, i));

  std::unordered_set<WeylElement> seen;
  std::deque<WeylElement> queue;
  std::vector<std::pair<std::vector<int>, WeylElement>> found;
  const WeylElement e = WeylElement::identity(n);
  seen.insert(e);
  queue.push_back(e);
  while (!queue.empty()) {
    WeylElement w = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      WeylElement ws = w * s;
      if (seen.insert(ws).second) {
        if (seen.size() > cap) throw Error(ErrorKind::CapExceeded, "Weyl group enumeration exceeded the cap");
        queue.push_back(std::move(ws));
      }
    }
  }
  for (const auto& w : seen) found.emplace_back(w.word(rs), w);
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return a.first.size() != b.first.size() ? a.first.size() < b.first.size() : a.first < b.first;
  });
  WeylGroup group;
  for (auto& f : found) group.elements.push_back(std::move(f.second));
  group.longest = group.elements.back();
  return group;
}

WeylElement longest_element(const RootSystem& rs) {
  WeylElement w = WeylElement::identity(rs.rank());
  for (;;) {
    int ascent = -1;
    for (int i = 0; i < rs.rank() && ascent < 0; ++i)
      if (w.sends_simple_positive(i)) ascent = i;
    if (ascent < 0) return w;
    w = w * WeylElement::simple_reflection(rs, ascent);
  }
}

ParabolicType opposite_type(const RootSystem& rs, ParabolicType tau) {
  const WeylElement w0 = longest_element(rs);
  std::uint32_t bits = 0;
  for (int i : tau.indices()) {
    RootVector e(static_cast<std::size_t>(rs.rank()), 0);
    e[static_cast<std::size_t>(i)] = 1;
    RootVector img = w0.apply(e);
    for (auto& x : img) x = -x;
    const auto idx = rs.index_of(img);
    if (!idx || *idx >= static_cast<std::size_t>(rs.rank()))
      throw Error(ErrorKind::Domain, "-w0 does not permute the simple roots");
    bits |= 1u << *idx;
  }
  return ParabolicType(bits);
}

WeylElement min_coset_representative(const RootSystem& rs, const WeylElement& w, ParabolicType tau) {
  WeylElement u = w;
  for (;;) {
    int descent = -1;
    for (int i : tau.indices())
      if (!u.sends_simple_positive(i)) {
        descent = i;
        break;
      }
    if (descent < 0) return u;
    u = u * WeylElement::simple_reflection(rs, descent);
  }
}

LeviDecomposition levi_and_radical_roots(const RootSystem& rs, ParabolicType tau) {
  LeviDecomposition out;
  for (std::size_t r = 0; r < rs.num_roots(); ++r) {
    const RootVector& v = rs.root(r);
    bool supported = true;
    for (int i = 0; i < rs.rank(); ++i)
      if (v[static_cast<std::size_t>(i)] != 0 && !tau.contains(i)) supported = false;
    if (supported) {
      out.levi.push_back(r);
      (rs.is_positive(r) ? out.levi_positive : out.levi_negative).push_back(r);
    } else if (rs.is_positive(r)) {
      out.radical.push_back(r);
    }
  }
  return out;
}

std::vector<std::pair<ParabolicType, ParabolicType>> TypePoset::covers() const {
  std::vector<std::pair<ParabolicType, ParabolicType>> out;
  for (const auto& t : types)
    for (int i = 0; i < rank; ++i)
      if (!t.contains(i)) out.emplace_back(t, t.with(i));
  return out;
}

TypePoset type_poset(const RootSystem& rs) {
  TypePoset p;
  p.rank = rs.rank();
  if (p.rank > 20) throw Error(ErrorKind::CapExceeded, "type poset of rank above 20");
  for (std::uint32_t b = 0; b < (1u << p.rank); ++b) p.types.emplace_back(b);
  return p;
}

bool is_degenerate(const RootSystem& rs, ParabolicType tau) {
  for (const auto& c : rs.components()) {
    bool full = true;
    for (int i = 0; i < c.rank; ++i)
      if (!tau.contains(c.offset + i)) full = false;
    if (full) return true;
  }
  return false;
}

}  // namespace thetabar
