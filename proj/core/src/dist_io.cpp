// Copyright 2026 The ggc-means Authors.
// SPDX-License-Identifier: Apache-2.0
#include "ggc/dist_io.hpp"

#include <charconv>
#include <map>
#include <sstream>

#include "ggc/catalog.hpp"
#include "ggc/error.hpp"
#include "ggc/io.hpp"

namespace ggc {

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(std::string_view s, std::size_t line) {
  s = trim(s);
  if (s == "inf") return kInf;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    parse_error(line, "expected a number, got '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto k = s.find(sep);
    out.push_back(trim(s.substr(0, k)));
    if (k == std::string_view::npos) break;
    s.remove_prefix(k + 1);
  }
  return out;
}

std::vector<std::pair<double, double>> parse_pairs(std::string_view s, std::size_t line) {
  std::vector<std::pair<double, double>> out;
  for (std::string_view item : split(s, ',')) {
    const auto c = item.find(':');
    if (c == std::string_view::npos) parse_error(line, "expected a:b pair, got '" + std::string(item) + "'");
    out.emplace_back(parse_number(item.substr(0, c), line), parse_number(item.substr(c + 1), line));
  }
  return out;
}

struct Transform {
  std::string name;
  std::vector<double> args;
  std::size_t line;
};

DistSpec apply(DistSpec d, const Transform& t) {
  auto argc = [&](std::size_t n) {
    if (t.args.size() != n)
      parse_error(t.line, "transform '" + t.name + "' takes " + std::to_string(n) + " argument(s)");
  };
  if (t.name == "affine") {
    argc(2);
    return affine_transform(d, t.args[0], t.args[1]);
  }
  if (t.name == "mix") {
    argc(1);
    return mix_with_atom(d, t.args[0]);
  }
  if (t.name == "tilt") {
    argc(1);
    return tilt_pushforward(d, t.args[0]);
  }
  parse_error(t.line, "unknown transform '" + t.name + "'");
}

}  // namespace

std::string serialize(const DistSpec& d) {
  const Provenance& p = d.provenance();
  std::ostringstream os;
  switch (p.kind) {
    case Provenance::Kind::NamedFamily:
      os << "kind = named-family\n" << "family = " << p.family << '\n';
      for (const auto& [k, v] : p.params) os << "param." << k << " = " << fmt_short(v) << '\n';
      break;
    case Provenance::Kind::Tabulated: {
      os << "kind = tabulated\n" << "label = " << p.family << '\n' << "points = ";
      for (std::size_t i = 0; i < p.table.size(); ++i)
        os << (i ? "," : "") << fmt_short(p.table[i].first) << ':' << fmt_short(p.table[i].second);
      os << '\n';
      if (!p.atoms.empty()) {
        os << "atoms = ";
        for (std::size_t i = 0; i < p.atoms.size(); ++i)
          os << (i ? "," : "") << fmt_short(p.atoms[i].location) << ':' << fmt_short(p.atoms[i].weight);
        os << '\n';
      }
      break;
    }
    case Provenance::Kind::Custom:
      throw Error(ErrorKind::InvalidInput,
                  "law '" + d.label() + "' is built from callables and cannot be serialized");
  }
  for (const auto& [name, args] : p.transforms) {
    os << "transform = " << name;
    for (double a : args) os << ' ' << fmt_short(a);
    os << '\n';
  }
  return os.str();
}

DistSpec parse_dist(std::string_view text) {
  std::string kind, family, label;
  std::map<std::string, double> params;
  std::vector<std::pair<std::string, double>> param_order;
  std::vector<std::pair<double, double>> points;
  std::vector<Atom> atoms;
  std::vector<Transform> transforms;
  std::size_t kind_line = 0;

  std::size_t lineno = 0;
  for (std::string_view rest = text; !rest.empty() || lineno == 0;) {
    const auto nl = rest.find('\n');
    std::string_view raw = rest.substr(0, nl);
    rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
    ++lineno;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) parse_error(lineno, "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) parse_error(lineno, "empty key");
    if (key == "kind") {
      kind = value;
      kind_line = lineno;
    } else if (key == "family") {
      family = value;
    } else if (key == "label") {
      label = value;
    } else if (key.starts_with("param.")) {
      const std::string name = key.substr(6);
      if (name.empty() || params.count(name)) parse_error(lineno, "bad or repeated parameter '" + key + "'");
      params[name] = parse_number(value, lineno);
      param_order.emplace_back(name, params[name]);
    } else if (key == "points") {
      points = parse_pairs(value, lineno);
    } else if (key == "atoms") {
      for (const auto& [loc, w] : parse_pairs(value, lineno)) atoms.push_back({loc, w});
    } else if (key == "transform") {
      const std::vector<std::string_view> words = split(value, ' ');
      Transform t{std::string(words.front()), {}, lineno};
      for (std::size_t i = 1; i < words.size(); ++i)
        if (!words[i].empty()) t.args.push_back(parse_number(words[i], lineno));
      transforms.push_back(std::move(t));
    } else {
      parse_error(lineno, "unknown key '" + key + "'");
    }
    if (rest.empty()) break;
  }

  if (kind.empty()) parse_error(lineno, "missing 'kind'");
  DistSpec d = DistSpec::point_mass(0.0);
  try {
    if (kind == "named-family") {
      if (family.empty()) parse_error(kind_line, "named-family needs 'family'");
      if (family == "point-mass") {
        if (!params.count("location") || params.size() != 1)
          parse_error(kind_line, "point-mass takes exactly param.location");
        d = DistSpec::point_mass(params["location"]);
      } else {
        d = get_entry(family, params).dist;
        // Reject parameters the family does not know about.
        for (const auto& [k, v] : param_order) {
          bool known = false;
          for (const auto& [pk, pv] : d.provenance().params) known = known || pk == k;
          if (!known) parse_error(kind_line, "family '" + family + "' has no parameter '" + k + "'");
        }
      }
    } else if (kind == "tabulated") {
      if (points.empty()) parse_error(kind_line, "tabulated law needs 'points'");
      d = tabulated(label.empty() ? "tabulated" : label, points, atoms);
    } else if (kind == "custom") {
      throw Error(ErrorKind::InvalidInput, "custom laws cannot be described in text");
    } else {
      parse_error(kind_line, "unknown kind '" + kind + "'");
    }
    for (const Transform& t : transforms) d = apply(std::move(d), t);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse) throw;
    if (e.kind() == ErrorKind::UnknownEntry)
      throw Error(ErrorKind::Parse, "line " + std::to_string(kind_line) + ": " + e.what());
    throw;
  }
  return d;
}

DistSpec load_dist(const std::string& path) { return parse_dist(read_file(path)); }

void save_dist(const DistSpec& d, const std::string& path) { write_file_atomic(path, serialize(d)); }

}  // namespace ggc
