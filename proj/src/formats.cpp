#include "thetabar/formats.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <iomanip>
#include <istream>
#include <set>
#include <sstream>

#include "thetabar/error.hpp"

namespace thetabar {

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  return out;
}

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return trim(hash == std::string::npos ? line : line.substr(0, hash));
}

[[noreturn]] void parse_fail(const std::string& source, int line, const std::string& msg) {
  throw Error(ErrorKind::Parse, source + ":" + std::to_string(line) + ": " + msg);
}

// Splits "key = value" and lowercases the key.
bool key_value(const std::string& field, std::string& key, std::string& value) {
  const auto eq = field.find('=');
  if (eq == std::string::npos) return false;
  key = trim(field.substr(0, eq));
  std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::tolower(c); });
  value = trim(field.substr(eq + 1));
  return true;
}

std::vector<int> parse_int_list(const std::string& value, const std::string& source, int line) {
  std::vector<int> out;
  if (value.empty()) return out;
  for (const auto& item : split(value, ',')) {
    if (item.empty()) parse_fail(source, line, "empty list entry");
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      parse_fail(source, line, "not an integer: '" + item + "'");
    }
  }
  return out;
}

WeylElement parse_chart(const RootSystem& rs, const std::string& value, const std::string& source, int line) {
  std::string v = value;
  if (!v.empty() && v.front() == '[' && v.back() == ']') v = trim(v.substr(1, v.size() - 2));
  const std::vector<int> word = parse_int_list(v, source, line);
  for (int i : word)
    if (i < 0 || i >= rs.rank()) parse_fail(source, line, "simple reflection index out of range: " + std::to_string(i));
  return WeylElement::from_word(rs, word);
}

std::string word_string(const RootSystem& rs, const WeylElement& w) {
  const auto word = w.word(rs);
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) s += (i ? "," : "") + std::to_string(word[i]);
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Points

ApartmentPoint PointRecord::as_apartment_point() const {
  if (!chart.is_identity())
    throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": an apartment point must use the standard chart");
  std::vector<Rational> v;
  for (const auto& x : vals) {
    if (x.is_infinite()) throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": apartment point with +inf");
    v.push_back(x.value());
  }
  return ApartmentPoint(std::move(v));
}

BoundaryPoint PointRecord::as_boundary_point() const { return {chart, vals}; }

std::vector<PointRecord> parse_point_file(const RootSystem& rs, std::istream& in, const std::string& source) {
  std::vector<PointRecord> out;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string text = strip_comment(raw);
    if (text.empty()) continue;
    PointRecord rec;
    rec.line = line;
    rec.chart = WeylElement::identity(rs.rank());
    const auto colon = text.find(':');
    const auto eq = text.find('=');
    if (colon != std::string::npos && (eq == std::string::npos || colon < eq)) {
      rec.label = trim(text.substr(0, colon));
      text = trim(text.substr(colon + 1));
    }
    bool have_vals = false;
    for (const auto& field : split(text, ';')) {
      std::string key, value;
      if (!key_value(field, key, value)) parse_fail(source, line, "expected 'key = value', got '" + field + "'");
      if (key == "chart") {
        rec.chart = parse_chart(rs, value, source, line);
      } else if (key == "vals") {
        for (const auto& item : split(value, ',')) {
          try {
            rec.vals.push_back(Val::parse(item));
          } catch (const Error& e) {
            parse_fail(source, line, e.what());
          }
        }
        have_vals = true;
      } else {
        parse_fail(source, line, "unknown field '" + key + "'");
      }
    }
    if (!have_vals) parse_fail(source, line, "missing 'vals'");
    if (static_cast<int>(rec.vals.size()) != rs.rank())
      parse_fail(source, line, "expected " + std::to_string(rs.rank()) + " values, got " + std::to_string(rec.vals.size()));
    out.push_back(std::move(rec));
  }
  return out;
}

std::string format_point(const RootSystem& rs, const BoundaryPoint& y, const std::string& label) {
  std::string s = label + ": chart = " + word_string(rs, y.chart()) + " ; vals = ";
  for (std::size_t i = 0; i < y.coords().size(); ++i) s += (i ? ", " : "") + y.coords()[i].to_string();
  return s;
}

std::string format_point(const ApartmentPoint& x) {
  std::string s = "x: vals = ";
  for (std::size_t i = 0; i < x.vals().size(); ++i) s += (i ? ", " : "") + x.vals()[i].get_str();
  return s;
}

// ---------------------------------------------------------------------------
// Polynomials

CellPolynomial parse_polynomial(const RootSystem& rs, const CoefficientModel& model, std::istream& in,
                                const std::string& source) {
  std::string raw;
  int line = 0;
  std::optional<CellPolynomial> poly;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = strip_comment(raw);
    if (text.empty()) continue;
    const auto fields = split(text, ';');
    if (!poly) {
      Ring ring = Ring::Laurent;
      WeylElement chart = WeylElement::identity(rs.rank());
      bool have_ring = false;
      for (const auto& field : fields) {
        std::string key, value;
        if (!key_value(field, key, value)) parse_fail(source, line, "expected header 'ring = laurent|monoid'");
        std::transform(value.begin(), value.end(), value.begin(), [](unsigned char c) { return std::tolower(c); });
        if (key == "ring") {
          if (value == "laurent")
            ring = Ring::Laurent;
          else if (value == "monoid")
            ring = Ring::Monoid;
          else
            parse_fail(source, line, "unknown ring '" + value + "'");
          have_ring = true;
        } else if (key == "chart") {
          chart = parse_chart(rs, value, source, line);
        } else {
          parse_fail(source, line, "unknown header field '" + key + "'");
        }
      }
      if (!have_ring) parse_fail(source, line, "header must name the ring");
      poly.emplace(rs, ring, chart);
      continue;
    }
    Coefficient coeff;
    try {
      coeff = model.parse(fields[0]);
    } catch (const Error& e) {
      parse_fail(source, line, e.what());
    }
    RootVector chi(static_cast<std::size_t>(rs.rank()), 0);
    std::vector<std::pair<std::size_t, int>> nu;
    for (std::size_t k = 1; k < fields.size(); ++k) {
      std::string key, value;
      if (!key_value(fields[k], key, value)) parse_fail(source, line, "expected 'key = value', got '" + fields[k] + "'");
      if (key == "chi") {
        chi = parse_int_list(value, source, line);
        if (static_cast<int>(chi.size()) != rs.rank())
          parse_fail(source, line, "chi needs " + std::to_string(rs.rank()) + " entries");
      } else if (key == "nu") {
        std::string v = value;
        if (v.size() < 2 || v.front() != '(' || v.back() != ')') parse_fail(source, line, "nu must be '(r:m, ...)'");
        v = trim(v.substr(1, v.size() - 2));
        if (v.empty()) continue;
        for (const auto& item : split(v, ',')) {
          const auto c = item.find(':');
          if (c == std::string::npos) parse_fail(source, line, "nu entry must be 'root:multiplicity'");
          const auto ri = parse_int_list(trim(item.substr(0, c)), source, line);
          const auto mi = parse_int_list(trim(item.substr(c + 1)), source, line);
          if (ri.size() != 1 || mi.size() != 1) parse_fail(source, line, "bad nu entry '" + item + "'");
          if (ri[0] < 0 || static_cast<std::size_t>(ri[0]) >= rs.num_roots())
            parse_fail(source, line, "root index out of range: " + std::to_string(ri[0]));
          if (mi[0] < 0) parse_fail(source, line, "negative multiplicity");
          nu.emplace_back(static_cast<std::size_t>(ri[0]), mi[0]);
        }
      } else {
        parse_fail(source, line, "unknown term field '" + key + "'");
      }
    }
    try {
      poly->add_term(coeff, chi, nu);
    } catch (const Error& e) {
      parse_fail(source, line, e.what());
    }
  }
  if (!poly) parse_fail(source, line, "missing header 'ring = laurent|monoid'");
  return *poly;
}

std::string format_polynomial(const CellPolynomial& f) {
  std::ostringstream out;
  out << "ring = " << (f.ring() == Ring::Laurent ? "laurent" : "monoid");
  if (!f.chart().is_identity()) out << " ; chart = " << word_string(f.root_system(), f.chart());
  out << '\n';
  for (const auto& [m, c] : f.terms()) {
    out << c.to_string() << " ; chi = ";
    for (std::size_t i = 0; i < m.chi.size(); ++i) out << (i ? "," : "") << m.chi[i];
    out << " ; nu = (";
    bool first = true;
    for (std::size_t r = 0; r < m.nu.size(); ++r)
      if (m.nu[r] != 0) {
        out << (first ? "" : ", ") << r << ':' << m.nu[r];
        first = false;
      }
    out << ")\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// DOT

std::string poset_dot(const RootSystem& rs, const ClosurePoset& poset) {
  std::ostringstream out;
  out << "digraph closure_poset {\n";
  out << "  label=\"" << rs.name() << "\";\n";
  out << "  node [shape=box];\n";
  for (const auto& t : poset.types) out << "  \"" << t.bitstring(rs.rank()) << "\";\n";
  auto edges = poset.covers();
  std::sort(edges.begin(), edges.end());
  for (const auto& [a, b] : edges)
    out << "  \"" << a.bitstring(rs.rank()) << "\" -> \"" << b.bitstring(rs.rank()) << "\";\n";
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Rank-2 plot

PlotGeometry plot_geometry(const RootSystem& rs, bool overlay) {
  if (rs.rank() != 2) throw Error(ErrorKind::Domain, "plot needs a rank-2 root system, got rank " + std::to_string(rs.rank()));
  const WeylGroup group = weyl_group(rs);
  PlotGeometry g;
  auto ray_index = [&](std::vector<Rational> v) {
    auto it = std::find(g.rays.begin(), g.rays.end(), v);
    if (it != g.rays.end()) return static_cast<std::size_t>(it - g.rays.begin());
    g.rays.push_back(std::move(v));
    return g.rays.size() - 1;
  };
  // The chamber c(B) = { v1 <= 0, v2 <= 0 } has rays (-1, 0) and (0, -1).
  const ApartmentPoint r0(std::vector<Rational>{-1, 0});
  const ApartmentPoint r1(std::vector<Rational>{0, -1});
  for (const auto& w : group.elements) {
    const std::size_t a = ray_index(r0.transformed(w).vals());
    const std::size_t b = ray_index(r1.transformed(w).vals());
    g.chambers.push_back({w.word(rs), a, b});
  }
  for (std::size_t r = 0; r < rs.num_positive(); ++r) g.walls.push_back(rs.root(r));
  if (overlay)
    for (const auto& t : type_poset(rs).types) g.base_points.emplace_back(t, base_point(rs, t));
  return g;
}

std::string plot_csv(const RootSystem& rs, const PlotGeometry& g) {
  std::ostringstream out;
  out << "kind,label,a,b\n";
  for (std::size_t i = 0; i < g.rays.size(); ++i)
    out << "ray," << i << ',' << g.rays[i][0].get_str() << ',' << g.rays[i][1].get_str() << '\n';
  for (const auto& c : g.chambers) {
    std::string w;
    for (std::size_t i = 0; i < c.word.size(); ++i) w += (i ? " " : "") + std::to_string(c.word[i]);
    out << "chamber," << (w.empty() ? "e" : w) << ',' << c.ray_a << ',' << c.ray_b << '\n';
  }
  for (const auto& beta : g.walls) out << "wall," << *rs.index_of(beta) << ',' << beta[0] << ',' << beta[1] << '\n';
  for (const auto& [t, p] : g.base_points)
    out << "base_point," << t.bitstring(rs.rank()) << ',' << p.coords()[0].to_string() << ',' << p.coords()[1].to_string()
        << '\n';
  return out.str();
}

namespace {

// Euclidean position of the apartment point with val_x(alpha_i) = v_i, using
// a Cholesky factor of the invariant form.
std::pair<double, double> euclid(const RootSystem& rs, double v1, double v2) {
  const double g11 = rs.gram(0, 0), g12 = rs.gram(0, 1), g22 = rs.gram(1, 1);
  const double e1x = std::sqrt(g11);
  const double e2x = g12 / e1x, e2y = std::sqrt(g22 - e2x * e2x);
  const double px = v1 / e1x;
  const double py = (v2 - px * e2x) / e2y;
  return {px, py};
}

}  // namespace

std::string plot_svg(const RootSystem& rs, const PlotGeometry& g) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3);
  const double size = 440, cx = 220, cy = 220, radius = 190;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size + 260 << "\" height=\"" << size << "\">\n";
  out << "  <title>Weyl fan of " << rs.name() << "</title>\n";
  auto to_screen = [&](const std::vector<Rational>& v) {
    auto [x, y] = euclid(rs, v[0].get_d(), v[1].get_d());
    const double norm = std::hypot(x, y);
    return std::pair<double, double>{cx + radius * x / norm, cy - radius * y / norm};
  };
  for (std::size_t i = 0; i < g.chambers.size(); ++i) {
    const auto& c = g.chambers[i];
    const auto [ax, ay] = to_screen(g.rays[c.ray_a]);
    const auto [bx, by] = to_screen(g.rays[c.ray_b]);
    const int shade = 200 + static_cast<int>((i * 37) % 50);
    out << "  <polygon points=\"" << cx << ',' << cy << ' ' << ax << ',' << ay << ' ' << bx << ',' << by
        << "\" fill=\"rgb(" << shade << ',' << shade << ",255)\" stroke=\"#446\" stroke-width=\"1\"/>\n";
  }
  // Compactified corner of c(B): coordinates c_i = val(-alpha_i) in [0, +inf],
  // drawn through c -> c / (1 + c) on a unit square.
  const double ox = size + 30, oy = 60, side = 180;
  out << "  <rect x=\"" << ox << "\" y=\"" << oy << "\" width=\"" << side << "\" height=\"" << side
      << "\" fill=\"#eef\" stroke=\"#446\"/>\n";
  out << "  <text x=\"" << ox << "\" y=\"" << oy - 12 << "\" font-size=\"12\">compactified chamber</text>\n";
  for (const auto& [t, p] : g.base_points) {
    auto squash = [](const Val& v) { return v.is_infinite() ? 1.0 : v.value().get_d() / (1.0 + v.value().get_d()); };
    const double px = ox + side * squash(p.coords()[0]);
    const double py = oy + side - side * squash(p.coords()[1]);
    out << "  <circle cx=\"" << px << "\" cy=\"" << py << "\" r=\"5\" fill=\"#c33\"/>\n";
    out << "  <text x=\"" << px + 6 << "\" y=\"" << py - 6 << "\" font-size=\"11\">e_" << t.bitstring(rs.rank())
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace thetabar
