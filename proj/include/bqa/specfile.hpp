#pragma once
// Text format for algebra presentations.  Line oriented, '#' starts a
// comment.  Keys: field, vertices, arrow, relation, max_path_length, order,
// and module ... end blocks carrying an explicit representation.  Everything
// references vertices and arrows by their declared names; resolution to
// indices happens when the algebra is built, so declaration order in the
// file is free.
#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bqa/quiver.hpp"
#include "bqa/rep.hpp"

namespace bqa {

struct SpecArrowDecl {
  std::string name;
  std::string source;
  std::string target;
  int line = 0;
};

struct SpecMap {
  std::string arrow;
  std::vector<std::vector<std::int64_t>> entries;  // row-major, possibly empty
  int line = 0;
};

struct SpecModule {
  std::string name;
  std::vector<int> dims;  // by declared vertex order
  std::vector<SpecMap> maps;
  int line = 0;
  int dims_line = 0;
};

struct SpecFile {
  std::string field = "32003";  // a prime, or "rational"
  std::vector<std::string> vertices;
  std::vector<SpecArrowDecl> arrows;
  std::vector<std::pair<std::string, int>> relations;  // raw text + line
  int max_path_length = 12;
  std::vector<std::pair<std::vector<std::string>, int>> orders;  // chains, each smallest first
  std::vector<SpecModule> modules;
};

namespace detail {

inline std::string spec_trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

inline std::vector<std::string> spec_words(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

inline std::string spec_loc(int line) {
  return line > 0 ? "line " + std::to_string(line) + ": " : "";
}

inline std::int64_t spec_int(const std::string& tok, int line, const std::string& what) {
  std::size_t pos = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    throw InputError(spec_loc(line) + what + " must be an integer, got '" + tok + "'");
  }
  if (pos != tok.size())
    throw InputError(spec_loc(line) + what + " must be an integer, got '" + tok + "'");
  return v;
}

// "2<3<1<4, 5<6" -> chains of names; used both for order lines and --order.
inline std::vector<std::vector<std::string>> spec_chains(const std::string& text, int line) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    std::vector<std::string> chain;
    std::istringstream cin_(part);
    std::string name;
    while (std::getline(cin_, name, '<')) {
      name = spec_trim(name);
      if (name.empty()) throw InputError(spec_loc(line) + "empty name in order chain");
      chain.push_back(name);
    }
    if (chain.size() < 2)
      throw InputError(spec_loc(line) + "an order chain needs at least two vertices separated by '<'");
    out.push_back(std::move(chain));
  }
  if (out.empty()) throw InputError(spec_loc(line) + "empty order line");
  return out;
}

}  // namespace detail

inline SpecFile parse_spec(const std::string& text) {
  using detail::spec_loc;
  using detail::spec_trim;
  using detail::spec_words;
  SpecFile sf;
  bool saw_field = false, saw_len = false;
  SpecModule* open_module = nullptr;

  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string s = spec_trim(raw);
    if (s.empty()) continue;

    std::istringstream ls(s);
    std::string key;
    ls >> key;
    std::string rest = spec_trim(s.substr(key.size()));

    if (open_module) {
      SpecModule& m = *open_module;
      if (key == "end") {
        if (!rest.empty()) throw InputError(spec_loc(line) + "unexpected text after 'end'");
        if (m.dims_line == 0)
          throw InputError(spec_loc(m.line) + "module '" + m.name + "' has no dims line");
        open_module = nullptr;
      } else if (key == "dims") {
        if (m.dims_line != 0)
          throw InputError(spec_loc(line) + "duplicate dims line in module '" + m.name + "'");
        for (const std::string& w : spec_words(rest)) {
          std::int64_t v = detail::spec_int(w, line, "a dimension");
          if (v < 0) throw InputError(spec_loc(line) + "dimensions must be nonnegative");
          m.dims.push_back(static_cast<int>(v));
        }
        if (m.dims.empty()) throw InputError(spec_loc(line) + "empty dims line");
        m.dims_line = line;
      } else if (key == "map") {
        std::size_t eq = rest.find('=');
        if (eq == std::string::npos)
          throw InputError(spec_loc(line) + "map line must look like 'map a = 1 0 ; 0 1'");
        SpecMap mp;
        mp.arrow = spec_trim(rest.substr(0, eq));
        mp.line = line;
        if (mp.arrow.empty()) throw InputError(spec_loc(line) + "map line names no arrow");
        std::string body = spec_trim(rest.substr(eq + 1));
        if (body.empty()) throw InputError(spec_loc(line) + "map line has no entries");
        std::istringstream rows(body);
        std::string rowtext;
        while (std::getline(rows, rowtext, ';')) {
          std::vector<std::int64_t> row;
          for (const std::string& w : spec_words(rowtext))
            row.push_back(detail::spec_int(w, line, "a matrix entry"));
          mp.entries.push_back(std::move(row));
        }
        m.maps.push_back(std::move(mp));
      } else {
        throw InputError(spec_loc(line) + "unknown key '" + key +
                         "' in module block (expected dims, map or end)");
      }
      continue;
    }

    if (key == "field") {
      if (saw_field) throw InputError(spec_loc(line) + "duplicate field line");
      if (spec_words(rest).size() != 1)
        throw InputError(spec_loc(line) + "field line needs exactly one value");
      sf.field = rest;
      saw_field = true;
    } else if (key == "vertices") {
      std::vector<std::string> ws = spec_words(rest);
      if (ws.empty()) throw InputError(spec_loc(line) + "vertices line names no vertices");
      for (std::string& w : ws) sf.vertices.push_back(std::move(w));
    } else if (key == "arrow") {
      // arrow a: 1 -> 2
      std::size_t colon = rest.find(':');
      if (colon == std::string::npos)
        throw InputError(spec_loc(line) + "arrow line must look like 'arrow a: 1 -> 2'");
      SpecArrowDecl d;
      d.name = spec_trim(rest.substr(0, colon));
      d.line = line;
      std::string ends = rest.substr(colon + 1);
      std::size_t arr = ends.find("->");
      if (d.name.empty() || arr == std::string::npos)
        throw InputError(spec_loc(line) + "arrow line must look like 'arrow a: 1 -> 2'");
      d.source = spec_trim(ends.substr(0, arr));
      d.target = spec_trim(ends.substr(arr + 2));
      if (d.source.empty() || d.target.empty())
        throw InputError(spec_loc(line) + "arrow '" + d.name + "' is missing an endpoint");
      sf.arrows.push_back(std::move(d));
    } else if (key == "relation") {
      if (rest.empty()) throw InputError(spec_loc(line) + "empty relation line");
      sf.relations.emplace_back(rest, line);
    } else if (key == "max_path_length") {
      if (saw_len) throw InputError(spec_loc(line) + "duplicate max_path_length line");
      std::int64_t v = detail::spec_int(rest, line, "max_path_length");
      if (v < 1 || v > 64) throw InputError(spec_loc(line) + "max_path_length must be in 1..64");
      sf.max_path_length = static_cast<int>(v);
      saw_len = true;
    } else if (key == "order") {
      for (auto& ch : detail::spec_chains(rest, line)) sf.orders.emplace_back(std::move(ch), line);
    } else if (key == "module") {
      std::vector<std::string> ws = spec_words(rest);
      if (ws.size() != 1) throw InputError(spec_loc(line) + "module line needs exactly one name");
      for (const SpecModule& m : sf.modules)
        if (m.name == ws[0])
          throw InputError(spec_loc(line) + "duplicate module name '" + ws[0] + "'");
      SpecModule m;
      m.name = ws[0];
      m.line = line;
      sf.modules.push_back(std::move(m));
      open_module = &sf.modules.back();
    } else {
      throw InputError(spec_loc(line) + "unknown key '" + key + "'");
    }
  }
  if (open_module)
    throw InputError(detail::spec_loc(open_module->line) + "module '" + open_module->name +
                     "' is missing its end line");
  if (sf.vertices.empty()) throw InputError("spec file declares no vertices");
  return sf;
}

inline SpecFile parse_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open spec file '" + path + "'");
  std::ostringstream all;
  all << in.rdbuf();
  return parse_spec(all.str());
}

// Canonical text; parse(serialize(sf)) reproduces sf up to line numbers.
inline std::string serialize_spec(const SpecFile& sf) {
  std::ostringstream out;
  out << "field " << sf.field << "\n";
  out << "vertices";
  for (const std::string& v : sf.vertices) out << " " << v;
  out << "\n";
  for (const SpecArrowDecl& a : sf.arrows)
    out << "arrow " << a.name << ": " << a.source << " -> " << a.target << "\n";
  for (const auto& [r, ln] : sf.relations) out << "relation " << r << "\n";
  out << "max_path_length " << sf.max_path_length << "\n";
  for (const auto& [chain, ln] : sf.orders) {
    out << "order ";
    for (std::size_t i = 0; i < chain.size(); ++i) out << (i ? "<" : "") << chain[i];
    out << "\n";
  }
  for (const SpecModule& m : sf.modules) {
    out << "module " << m.name << "\n";
    out << "  dims";
    for (int d : m.dims) out << " " << d;
    out << "\n";
    for (const SpecMap& mp : m.maps) {
      out << "  map " << mp.arrow << " =";
      for (std::size_t r = 0; r < mp.entries.size(); ++r) {
        if (r) out << " ;";
        for (std::int64_t e : mp.entries[r]) out << " " << e;
      }
      out << "\n";
    }
    out << "end\n";
  }
  return out.str();
}

inline Quiver spec_quiver(const SpecFile& sf) {
  Quiver q;
  q.vertices = sf.vertices;
  for (const SpecArrowDecl& d : sf.arrows) {
    int s = -1, t = -1;
    for (int i = 0; i < q.num_vertices(); ++i) {
      if (q.vertices[i] == d.source) s = i;
      if (q.vertices[i] == d.target) t = i;
    }
    if (s < 0)
      throw InputError(detail::spec_loc(d.line) + "arrow '" + d.name +
                       "' references unknown vertex '" + d.source + "'");
    if (t < 0)
      throw InputError(detail::spec_loc(d.line) + "arrow '" + d.name +
                       "' references unknown vertex '" + d.target + "'");
    q.arrows.push_back({d.name, s, t});
  }
  q.validate();
  return q;
}

template <class F>
AlgebraPtr<F> spec_algebra(const F& f, const SpecFile& sf) {
  Quiver q = spec_quiver(sf);
  std::vector<Relation<F>> rels;
  for (const auto& [text, ln] : sf.relations) {
    try {
      rels.push_back({parse_path_expr(q, f, text)});
    } catch (const InputError& e) {
      throw InputError(detail::spec_loc(ln) + e.what());
    }
  }
  return build_algebra(f, q, std::move(rels), sf.max_path_length);
}

// Builds the named module literal over the algebra; omitted maps are zero.
template <class F>
Rep<F> spec_rep(const F& f, AlgebraPtr<F> alg, const SpecFile& sf, const std::string& name) {
  const SpecModule* m = nullptr;
  for (const SpecModule& cand : sf.modules)
    if (cand.name == name) m = &cand;
  if (!m) throw InputError("no module named '" + name + "' in the spec file");
  const Quiver& q = alg->quiver();
  if (static_cast<int>(m->dims.size()) != q.num_vertices())
    throw InputError(detail::spec_loc(m->dims_line) + "module '" + name + "' needs " +
                     std::to_string(q.num_vertices()) + " dimensions, got " +
                     std::to_string(m->dims.size()));
  Rep<F> rep{alg, m->dims, {}};
  for (int a = 0; a < q.num_arrows(); ++a)
    rep.arrow_maps.push_back(
        Mat<F>(f, m->dims[q.arrows[a].source], m->dims[q.arrows[a].target]));
  for (const SpecMap& mp : m->maps) {
    int a = -1;
    for (int i = 0; i < q.num_arrows(); ++i)
      if (q.arrows[i].name == mp.arrow) a = i;
    if (a < 0)
      throw InputError(detail::spec_loc(mp.line) + "module '" + name +
                       "' maps unknown arrow '" + mp.arrow + "'");
    std::size_t want_r = static_cast<std::size_t>(m->dims[q.arrows[a].source]);
    std::size_t want_c = static_cast<std::size_t>(m->dims[q.arrows[a].target]);
    bool shape = mp.entries.size() == want_r;
    for (const auto& row : mp.entries) shape = shape && row.size() == want_c;
    if (!shape)
      throw InputError(detail::spec_loc(mp.line) + "map '" + mp.arrow + "' in module '" + name +
                       "' must be " + std::to_string(want_r) + " x " + std::to_string(want_c));
    for (std::size_t r = 0; r < want_r; ++r)
      for (std::size_t c = 0; c < want_c; ++c)
        rep.arrow_maps[a].at(r, c) = f.from_long(mp.entries[r][c]);
  }
  try {
    validate_rep(rep);
  } catch (const Error& e) {
    throw InputError(detail::spec_loc(m->line) + "module '" + name + "': " + e.what());
  }
  return rep;
}

// Resolves chains of vertex names to index chains for the order machinery.
inline std::vector<std::vector<int>> spec_order_chains(const Quiver& q, const SpecFile& sf) {
  std::vector<std::vector<int>> out;
  for (const auto& [chain, ln] : sf.orders) {
    std::vector<int> ix;
    for (const std::string& name : chain) {
      try {
        ix.push_back(q.vertex_index(name));
      } catch (const InputError&) {
        throw InputError(detail::spec_loc(ln) + "order names unknown vertex '" + name + "'");
      }
    }
    out.push_back(std::move(ix));
  }
  return out;
}

}  // namespace bqa
