#include "splitsteiner/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "splitsteiner/errors.hpp"

namespace splitsteiner {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line.substr(0, line.find('#')));
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

int to_int(const std::string& token, int line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected an integer, got '" + token + "'");
  }
  return value;
}

struct Directive {
  int line = 0;
  std::vector<std::string> tokens;
};

class Reader {
 public:
  Reader(int m, int n) : m_(m), n_(n) {}

  Vertex vertex(const std::string& token, int line) const {
    const int id = to_int(token, line);
    if (id < 1 || id > m_ + n_) throw ParseError(line, "vertex " + token + " out of range");
    return id - 1;
  }

  Vertex on_side(const std::string& token, int line, Side side) const {
    const Vertex v = vertex(token, line);
    if ((side == Side::Clique) != (v < m_)) {
      throw ParseError(line, "vertex " + token + " is not on side " + std::string(to_string(side)));
    }
    return v;
  }

  std::vector<Vertex> list(const std::vector<std::string>& t, std::size_t from, std::size_t to,
                           int line, Side side) const {
    std::vector<Vertex> out;
    for (std::size_t i = from; i < to; ++i) out.push_back(on_side(t[i], line, side));
    return out;
  }

  VertexSet side_vertices(Side side) const {
    VertexSet out;
    const int lo = side == Side::Clique ? 0 : m_;
    const int hi = side == Side::Clique ? m_ : m_ + n_;
    for (int v = lo; v < hi; ++v) out.push_back(v);
    return out;
  }

 private:
  int m_, n_;
};

ConvexStructure build_structure(const Reader& r, StructureKind kind, Side side, int structure_line,
                                const std::vector<Directive>& layout) {
  auto need_single = [&](const char* what) -> const Directive& {
    if (layout.empty()) throw ParseError(structure_line, std::string("missing '") + what + "' line");
    if (layout.size() > 1) throw ParseError(layout[1].line, std::string("repeated '") + what + "' line");
    if (layout[0].tokens[0] != what) {
      throw ParseError(layout[0].line, "'" + layout[0].tokens[0] + "' does not fit this structure");
    }
    return layout[0];
  };
  try {
    switch (kind) {
      case StructureKind::Path:
      case StructureKind::Cycle: {
        const auto& d = need_single("order");
        auto order = r.list(d.tokens, 1, d.tokens.size(), d.line, side);
        return kind == StructureKind::Path ? ConvexStructure::path(side, std::move(order))
                                           : ConvexStructure::cycle(side, std::move(order));
      }
      case StructureKind::Star: {
        const auto& d = need_single("star");
        if (d.tokens.size() != 3 || d.tokens[1] != "root") throw ParseError(d.line, "expected 'star root <v>'");
        const Vertex root = r.on_side(d.tokens[2], d.line, side);
        std::vector<Vertex> leaves;
        for (Vertex v : r.side_vertices(side)) {
          if (v != root) leaves.push_back(v);
        }
        return ConvexStructure::star(side, root, std::move(leaves));
      }
      case StructureKind::Comb: {
        const auto& d = need_single("comb");
        const auto& t = d.tokens;
        std::size_t teeth_at = 0;
        for (std::size_t i = 0; i < t.size(); ++i) {
          if (t[i] == "teeth") teeth_at = i;
        }
        if (t.size() < 2 || t[1] != "backbone" || teeth_at == 0) {
          throw ParseError(d.line, "expected 'comb backbone ... teeth ...'");
        }
        return ConvexStructure::comb(side, r.list(t, 2, teeth_at, d.line, side),
                                     r.list(t, teeth_at + 1, t.size(), d.line, side));
      }
      case StructureKind::Triad: {
        const auto& d = need_single("triad");
        const auto& t = d.tokens;
        if (t.size() < 4 || t[1] != "root" || t[3] != "legs") {
          throw ParseError(d.line, "expected 'triad root <v> legs ... | ... | ...'");
        }
        const Vertex root = r.on_side(t[2], d.line, side);
        std::array<std::vector<Vertex>, 3> legs;
        int leg = 0;
        for (std::size_t i = 4; i < t.size(); ++i) {
          if (t[i] == "|") {
            if (++leg > 2) throw ParseError(d.line, "a triad has three legs");
            continue;
          }
          legs[leg].push_back(r.on_side(t[i], d.line, side));
        }
        if (leg != 2) throw ParseError(d.line, "a triad has three legs");
        return ConvexStructure::triad(side, root, std::move(legs));
      }
      case StructureKind::Tree: {
        const auto& d = need_single("tree");
        const VertexSet vs = r.side_vertices(side);
        if (d.tokens.size() != vs.size() + 1) {
          throw ParseError(d.line, "tree needs one parent per side vertex");
        }
        std::optional<Vertex> root;
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < vs.size(); ++i) {
          if (d.tokens[i + 1] == "0") {
            if (root) throw ParseError(d.line, "tree has two roots");
            root = vs[i];
          } else {
            edges.emplace_back(r.on_side(d.tokens[i + 1], d.line, side), vs[i]);
          }
        }
        if (!root) throw ParseError(d.line, "tree has no root");
        return ConvexStructure::tree(side, *root, std::move(edges));
      }
      case StructureKind::Chordal: {
        std::vector<Edge> edges;
        for (const auto& d : layout) {
          if (d.tokens[0] != "chordal") throw ParseError(d.line, "'" + d.tokens[0] + "' does not fit this structure");
          if (d.tokens.size() != 4 || d.tokens[1] != "e") throw ParseError(d.line, "expected 'chordal e <u> <v>'");
          edges.emplace_back(r.on_side(d.tokens[2], d.line, side), r.on_side(d.tokens[3], d.line, side));
        }
        return ConvexStructure::chordal(side, r.side_vertices(side), std::move(edges));
      }
    }
  } catch (const InvalidLayout& e) {
    throw ParseError(layout.empty() ? structure_line : layout.front().line, e.what());
  }
  throw ParseError(structure_line, "unknown structure");
}

}  // namespace

ProblemInstance parse_instance(std::istream& in) {
  std::vector<Directive> directives;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    auto t = tokenize(line);
    if (!t.empty()) directives.push_back({line_no, std::move(t)});
  }
  if (directives.empty() || directives[0].tokens[0] != "split") {
    throw ParseError(directives.empty() ? 1 : directives[0].line, "file must start with 'split <m> <n>'");
  }
  const auto& head = directives[0];
  if (head.tokens.size() != 3) throw ParseError(head.line, "expected 'split <m> <n>'");
  const int m = to_int(head.tokens[1], head.line);
  const int n = to_int(head.tokens[2], head.line);
  if (m < 0 || n < 0) throw ParseError(head.line, "part sizes must be nonnegative");
  const Reader r(m, n);

  std::vector<Edge> edges;
  std::optional<Directive> structure_line, terminals_line, budget_line;
  std::vector<Directive> layout;
  for (std::size_t i = 1; i < directives.size(); ++i) {
    const auto& d = directives[i];
    const std::string& key = d.tokens[0];
    auto once = [&](std::optional<Directive>& slot) {
      if (slot) throw ParseError(d.line, "repeated '" + key + "' line");
      slot = d;
    };
    if (key == "e") {
      if (d.tokens.size() != 3) throw ParseError(d.line, "expected 'e <u> <v>'");
      edges.emplace_back(r.vertex(d.tokens[1], d.line), r.vertex(d.tokens[2], d.line));
    } else if (key == "structure") {
      once(structure_line);
    } else if (key == "order" || key == "tree" || key == "star" || key == "comb" || key == "triad" ||
               key == "chordal") {
      layout.push_back(d);
    } else if (key == "terminals") {
      once(terminals_line);
    } else if (key == "budget") {
      once(budget_line);
    } else if (key == "split") {
      throw ParseError(d.line, "repeated 'split' line");
    } else {
      throw ParseError(d.line, "unknown directive '" + key + "'");
    }
  }

  ProblemInstance out;
  out.graph = SplitGraph::build(m, n, edges);

  if (structure_line) {
    const auto& t = structure_line->tokens;
    if (t.size() != 4 || t[2] != "on" || (t[3] != "K" && t[3] != "I")) {
      throw ParseError(structure_line->line, "expected 'structure <kind> on <K|I>'");
    }
    const auto kind = parse_structure_kind(t[1]);
    if (!kind) throw ParseError(structure_line->line, "unknown structure kind '" + t[1] + "'");
    out.structure = build_structure(r, *kind, t[3] == "K" ? Side::Clique : Side::Independent,
                                    structure_line->line, layout);
  } else if (!layout.empty()) {
    throw ParseError(layout.front().line, "layout line without a 'structure' line");
  }

  if (!terminals_line) {
    out.terminals = out.graph.independent();
  } else if (terminals_line->tokens.size() == 2 && terminals_line->tokens[1] == "I") {
    out.terminals = out.graph.independent();
  } else {
    std::vector<Vertex> ts;
    for (std::size_t i = 1; i < terminals_line->tokens.size(); ++i) {
      ts.push_back(r.vertex(terminals_line->tokens[i], terminals_line->line));
    }
    out.terminals = make_vertex_set(std::move(ts));
  }

  if (budget_line) {
    if (budget_line->tokens.size() != 2) throw ParseError(budget_line->line, "expected 'budget <k>'");
    const int k = to_int(budget_line->tokens[1], budget_line->line);
    if (k < 0) throw ParseError(budget_line->line, "budget must be nonnegative");
    out.budget = k;
  }
  return out;
}

ProblemInstance parse_instance_string(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

ProblemInstance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot open " + path);
  return parse_instance(in);
}

std::string emit_instance(const ProblemInstance& instance) {
  const SplitGraph& g = instance.graph;
  std::ostringstream out;
  auto ids = [&](const std::vector<Vertex>& vs) {
    for (Vertex v : vs) out << ' ' << v + 1;
  };
  out << "split " << g.clique_size() << ' ' << g.independent_size() << '\n';
  for (auto [u, x] : g.cross_edges()) out << "e " << u + 1 << ' ' << x + 1 << '\n';

  if (instance.structure) {
    const auto& s = *instance.structure;
    out << "structure " << to_string(s.kind()) << " on " << to_string(s.side()) << '\n';
    if (const auto* p = s.get_if<PathLayout>()) {
      out << "order";
      ids(p->order);
      out << '\n';
    } else if (const auto* c = s.get_if<CycleLayout>()) {
      out << "order";
      ids(c->order);
      out << '\n';
    } else if (const auto* st = s.get_if<StarLayout>()) {
      out << "star root " << st->root + 1 << '\n';
    } else if (const auto* cb = s.get_if<CombLayout>()) {
      out << "comb backbone";
      ids(cb->backbone);
      out << " teeth";
      ids(cb->teeth);
      out << '\n';
    } else if (const auto* tr = s.get_if<TriadLayout>()) {
      out << "triad root " << tr->root + 1 << " legs";
      for (int i = 0; i < 3; ++i) {
        if (i > 0) out << " |";
        ids(tr->legs[i]);
      }
      out << '\n';
    } else if (const auto* tree = s.get_if<TreeLayout>()) {
      std::map<Vertex, Vertex> parent;
      for (auto [p, c] : tree->edges) parent[c] = p;
      out << "tree";
      for (Vertex v : g.side(s.side())) {
        const auto it = parent.find(v);
        out << ' ' << (it == parent.end() ? 0 : it->second + 1);
      }
      out << '\n';
    } else if (const auto* ch = s.get_if<ChordalLayout>()) {
      for (auto [a, b] : s.imaginary_edges()) out << "chordal e " << a + 1 << ' ' << b + 1 << '\n';
      (void)ch;
    }
  }

  if (instance.terminals == g.independent()) {
    out << "terminals I\n";
  } else {
    out << "terminals";
    ids(instance.terminals);
    out << '\n';
  }
  if (instance.budget) out << "budget " << *instance.budget << '\n';
  return out.str();
}

void write_instance_file(const std::string& path, const ProblemInstance& instance) {
  std::ofstream out(path);
  if (!out) throw InvalidParameter("cannot write " + path);
  out << emit_instance(instance);
}

SolutionClaim parse_solution(const std::string& text, const SplitGraph& graph) {
  SolutionClaim claim;
  auto take = [&](int id, int line) {
    if (id < 1 || id > graph.order()) {
      throw ParseError(line, "vertex " + std::to_string(id) + " out of range");
    }
    claim.vertices.push_back(id - 1);
  };

  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(1, std::string("bad JSON: ") + e.what());
    }
    const char* key = doc.contains("steiner_set") ? "steiner_set" : "dominating_set";
    if (!doc.contains(key) || !doc[key].is_array()) {
      throw ParseError(1, "JSON solution needs a steiner_set or dominating_set array");
    }
    if (std::string(key) == "dominating_set") claim.kind = SolutionClaim::Kind::Dominating;
    for (const auto& v : doc[key]) {
      if (!v.is_number_integer()) throw ParseError(1, "vertex ids must be integers");
      take(v.get<int>(), 1);
    }
  } else {
    std::istringstream in(text);
    int line_no = 0;
    bool seen = false;
    for (std::string line; std::getline(in, line);) {
      ++line_no;
      const auto t = tokenize(line);
      if (t.empty()) continue;
      if (seen) throw ParseError(line_no, "solution has more than one line");
      seen = true;
      if (t[0] == "dominating") {
        claim.kind = SolutionClaim::Kind::Dominating;
      } else if (t[0] != "steiner") {
        throw ParseError(line_no, "expected 'steiner <v> ...' or 'dominating <v> ...'");
      }
      for (std::size_t i = 1; i < t.size(); ++i) take(to_int(t[i], line_no), line_no);
    }
    if (!seen) throw ParseError(line_no == 0 ? 1 : line_no, "empty solution file");
  }
  claim.vertices = make_vertex_set(std::move(claim.vertices));
  return claim;
}

SolutionClaim read_solution_file(const std::string& path, const SplitGraph& graph) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_solution(buffer.str(), graph);
}

std::vector<int> to_file_ids(const VertexSet& vertices) {
  std::vector<int> out;
  for (Vertex v : vertices) out.push_back(v + 1);
  return out;
}

}  // namespace splitsteiner
