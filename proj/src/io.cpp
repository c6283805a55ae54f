// Copyright 2026 The symex Authors.
// SPDX-License-Identifier: Apache-2.0

#include "symex/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "symex/errors.hpp"
#include "symex/union_partition.hpp"

namespace symex {

using nlohmann::json;

namespace {

std::string strip_comment(std::string line) {
  auto hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  return line;
}

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

template <typename T>
T field(const json& j, const char* key) {
  if (!j.contains(key))
    throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string("field '") + key + "' has the wrong type");
  }
}

ElemSet resolve(const Matroid& m, const std::vector<std::string>& labels) {
  ElemSet out;
  for (const auto& l : labels) {
    try {
      out.push_back(m.find(l));
    } catch (const std::exception&) {
      throw ParseError("unknown element '" + l + "'");
    }
  }
  ElemSet sorted = normalized(out);
  if (sorted.size() != out.size()) throw ParseError("repeated element label");
  return sorted;
}

json labels_json(const Matroid& m, const ElemSet& s) {
  return json(m.labels_of(s));
}

MatroidPtr node_matroid(const json& node) {
  const std::string tag = field<std::string>(node, "tag");
  if (tag == "graphic" || tag == "cographic") {
    LabeledGraph lg = parse_graph_text(field<std::string>(node, "graph"));
    if (tag == "graphic") return make_graphic(lg);
    return std::make_shared<CographicMatroid>(lg.graph, lg.edge_labels);
  }
  if (tag == "gf2")
    return parse_matrix_text(field<std::string>(node, "matrix"));
  if (tag == "r10" || tag == "f7") {
    std::vector<std::string> labels;
    if (node.contains("labels")) {
      labels = field<std::vector<std::string>>(node, "labels");
      if (labels.size() != (tag == "r10" ? 10u : 7u)) {
        throw ParseError(tag + " node needs " + (tag == "r10" ? "10" : "7") +
                         " labels");
      }
    }
    if (tag == "r10")
      return labels.empty() ? r10_construct() : r10_construct(labels);
    return labels.empty() ? f7_construct() : f7_construct(labels);
  }
  throw ParseError("unknown node tag '" + tag + "'");
}

json node_json(const TreeNode& n) {
  json j{{"id", n.id}, {"tag", n.tag}};
  if (auto g = std::dynamic_pointer_cast<const GraphicMatroid>(n.m)) {
    j["graph"] = format_graph_text(g->graph(), g->labels());
  } else if (auto c = std::dynamic_pointer_cast<const CographicMatroid>(n.m)) {
    j["graph"] = format_graph_text(c->graph(), c->labels());
  } else if (n.tag == "r10" || n.tag == "f7") {
    j["labels"] = n.m->labels();
  } else if (auto b = std::dynamic_pointer_cast<const BinaryMatroid>(n.m)) {
    j["matrix"] = format_matrix_text(*b);
  } else {
    throw ParseError("node '" + n.id + "' has no serializable payload");
  }
  return j;
}

DecompositionTree tree_from_json(const json& j) {
  DecompositionTree tree;
  for (const json& node : field<json>(j, "nodes")) {
    tree.nodes.push_back({field<std::string>(node, "id"),
                          field<std::string>(node, "tag"), node_matroid(node)});
  }
  if (j.contains("sums")) {
    for (const json& s : j.at("sums")) {
      tree.sums.push_back({field<std::string>(s, "a"),
                           field<std::string>(s, "b"), field<int>(s, "arity"),
                           s.contains("shared")
                               ? field<std::vector<std::string>>(s, "shared")
                               : std::vector<std::string>{}});
    }
  }
  return tree;
}

json tree_to_json(const DecompositionTree& tree) {
  json nodes = json::array();
  for (const auto& n : tree.nodes) nodes.push_back(node_json(n));
  json sums = json::array();
  for (const auto& s : tree.sums) {
    sums.push_back(
        {{"a", s.a}, {"b", s.b}, {"arity", s.arity}, {"shared", s.shared}});
  }
  return {{"nodes", nodes}, {"sums", sums}};
}

std::string text_or_file(const json& j, const std::string& key,
                         const std::filesystem::path& base) {
  if (j.contains(key)) return field<std::string>(j, key.c_str());
  return read_file(base / field<std::string>(j, (key + "_file").c_str()));
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::shared_ptr<const BinaryMatroid> parse_matrix_text(
    const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> labels;
  std::vector<std::string> rows;
  for (std::string line; std::getline(in, line);) {
    std::istringstream fields(strip_comment(line));
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (labels.empty()) {
      labels = tok;
      continue;
    }
    std::string row;
    for (const auto& t : tok) row += t;
    if (row.size() != labels.size() ||
        row.find_first_not_of("01") != std::string::npos) {
      throw ParseError("matrix row " + std::to_string(rows.size() + 1) +
                       ": expected " + std::to_string(labels.size()) +
                       " characters of 0/1");
    }
    rows.push_back(row);
  }
  if (labels.empty()) throw ParseError("matrix has no label line");
  std::vector<BitVec> cols(labels.size(), BitVec(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t c = 0; c < labels.size(); ++c) {
      if (rows[i][c] == '1') cols[c].set(i);
    }
  }
  try {
    return std::make_shared<BinaryMatroid>(std::move(cols), rows.size(),
                                           std::move(labels));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("matrix: ") + e.what());
  }
}

std::string format_matrix_text(const BinaryMatroid& m) {
  std::ostringstream os;
  for (int c = 0; c < m.size(); ++c) os << (c ? " " : "") << m.label(c);
  os << "\n";
  for (std::size_t r = 0; r < m.num_rows(); ++r) {
    for (int c = 0; c < m.size(); ++c) os << (m.columns()[c][r] ? '1' : '0');
    os << "\n";
  }
  return os.str();
}

DecompositionTree parse_tree_json(const std::string& text) {
  return tree_from_json(parse_json(text, "tree"));
}

std::string format_tree_json(const DecompositionTree& tree) {
  return tree_to_json(tree).dump(2);
}

InstanceFile parse_instance_json(const std::string& text,
                                 const std::filesystem::path& base) {
  const json j = parse_json(text, "instance");
  if (!j.is_object()) throw ParseError("instance must be a JSON object");
  InstanceFile out;
  Instance& inst = out.inst;
  std::optional<Fixture> fix;
  int sources = 0;
  for (const char* k : {"graph", "matrix", "tree", "builtin"}) {
    sources += j.contains(k) || j.contains(std::string(k) + "_file");
  }
  if (sources != 1)
    throw ParseError("instance needs exactly one matroid source");
  try {
    if (j.contains("graph") || j.contains("graph_file")) {
      inst.m = make_graphic(parse_graph_text(text_or_file(j, "graph", base)));
    } else if (j.contains("matrix") || j.contains("matrix_file")) {
      inst.m = parse_matrix_text(text_or_file(j, "matrix", base));
    } else if (j.contains("tree") || j.contains("tree_file")) {
      json t =
          j.contains("tree")
              ? j.at("tree")
              : parse_json(read_file(base / field<std::string>(j, "tree_file")),
                           "tree");
      out.tree = tree_from_json(t);
      inst.m = compose_tree(*out.tree);
    } else {
      const std::string name = field<std::string>(j, "builtin");
      if (j.contains("labels")) {
        json node{{"tag", name}, {"labels", j.at("labels")}};
        inst.m = node_matroid(node);
      } else {
        fix = fixture(name);
        inst.m = fix->m;
      }
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid matroid: ") + e.what());
  }
  const Matroid& m = *inst.m;
  if (j.contains("mode")) {
    try {
      out.mode = parse_mode(field<std::string>(j, "mode"));
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }
  if (j.contains("x1") != j.contains("x2"))
    throw ParseError("x1 and x2 go together");
  if (j.contains("x1")) {
    inst.x = {resolve(m, field<std::vector<std::string>>(j, "x1")),
              resolve(m, field<std::vector<std::string>>(j, "x2"))};
  } else if (fix) {
    inst.x = fix->x;
  } else {
    UnionPartition u = two_basis_partition(m);
    if (!u.feasible)
      throw ParseError("no x given and no two disjoint bases exist");
    inst.x = {u.first, u.second};
  }
  if (j.contains("y1") != j.contains("y2"))
    throw ParseError("y1 and y2 go together");
  if (j.contains("y1")) {
    inst.y = {resolve(m, field<std::vector<std::string>>(j, "y1")),
              resolve(m, field<std::vector<std::string>>(j, "y2"))};
  } else if (fix && !j.contains("x1")) {
    inst.y = fix->y;
  } else {
    inst.y = swapped(inst.x);
  }
  if (!is_basis_pair(m, inst.x) || !is_basis_pair(m, inst.y)) {
    throw ParseError("x and y must be pairs of bases");
  }
  if (j.contains("forbidden")) {
    inst.forbidden =
        resolve(m, field<std::vector<std::string>>(j, "forbidden"));
  }
  if (j.contains("last") && !j.at("last").is_null()) {
    inst.last = resolve(m, {field<std::string>(j, "last")})[0];
  }
  return out;
}

InstanceFile load_instance(const std::filesystem::path& path) {
  return parse_instance_json(read_file(path), path.parent_path());
}

std::string format_instance_json(const InstanceFile& file) {
  const Instance& inst = file.inst;
  const Matroid& m = *inst.m;
  json j;
  if (file.tree) {
    j["tree"] = tree_to_json(*file.tree);
  } else if (auto g = std::dynamic_pointer_cast<const GraphicMatroid>(inst.m)) {
    j["graph"] = format_graph_text(g->graph(), g->labels());
  } else if (m.kind() == "r10" || m.kind() == "f7") {
    j["builtin"] = m.kind();
    j["labels"] = m.labels();
  } else if (auto b = std::dynamic_pointer_cast<const BinaryMatroid>(inst.m)) {
    j["matrix"] = format_matrix_text(*b);
  } else {
    throw ParseError("matroid of kind " + m.kind() + " cannot be serialized");
  }
  j["mode"] = to_string(file.mode);
  j["x1"] = labels_json(m, inst.x.first);
  j["x2"] = labels_json(m, inst.x.second);
  j["y1"] = labels_json(m, inst.y.first);
  j["y2"] = labels_json(m, inst.y.second);
  j["forbidden"] = labels_json(m, inst.forbidden);
  if (inst.last) j["last"] = m.label(*inst.last);
  return j.dump(2) + "\n";
}

ExchangeSequence parse_sequence(const Matroid& m, const std::string& text) {
  auto elem = [&](const std::string& l) { return resolve(m, {l})[0]; };
  ExchangeSequence seq;
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text[start] == '[') {
    const json j = parse_json(text, "sequence");
    for (const json& s : j) {
      if (s.is_array() && s.size() == 2) {
        seq.push_back(
            {elem(s[0].get<std::string>()), elem(s[1].get<std::string>())});
      } else {
        seq.push_back({elem(field<std::string>(s, "e")),
                       elem(field<std::string>(s, "f"))});
      }
    }
    return seq;
  }
  std::istringstream in(text);
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::istringstream fields(strip_comment(line));
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() != 4 || tok[0].back() != ':' || tok[2] != "<->") {
      throw ParseError("sequence line " + std::to_string(line_no) +
                       ": expected `k: e <-> f`");
    }
    seq.push_back({elem(tok[1]), elem(tok[3])});
  }
  return seq;
}

std::string format_sequence_json(const Matroid& m,
                                 const ExchangeSequence& seq) {
  json j = json::array();
  for (const auto& s : seq)
    j.push_back({{"e", m.label(s.e)}, {"f", m.label(s.f)}});
  return j.dump();
}

std::string format_report_text(const Matroid& m, const SolveReport& r) {
  std::ostringstream os;
  os << "mode " << to_string(r.mode) << "\n"
     << "size " << r.size << " rank " << r.rank << (r.graphic ? " graphic" : "")
     << "\n"
     << "length " << r.length << " (bound " << r.bound_length << ")\n"
     << "width " << r.width << " (bound " << r.bound_width << ")\n";
  for (const auto& c : r.trace) {
    os << "reduction " << to_string(c.kind) << " on " << c.parent_size
       << " elements\n";
  }
  os << format_sequence(m, r.sequence);
  return os.str();
}

std::string format_report_json(const Matroid& m, const SolveReport& r) {
  json trace = json::array();
  for (const auto& c : r.trace) {
    trace.push_back({{"kind", to_string(c.kind)},
                     {"elements", c.elements},
                     {"size", c.parent_size},
                     {"rank", c.parent_rank}});
  }
  json j{{"mode", to_string(r.mode)},
         {"size", r.size},
         {"rank", r.rank},
         {"graphic", r.graphic},
         {"length", r.length},
         {"width", r.width},
         {"bound_length", r.bound_length},
         {"bound_width", r.bound_width},
         {"within_bounds", r.within_bounds()},
         {"sequence", json::parse(format_sequence_json(m, r.sequence))},
         {"trace", trace}};
  return j.dump(2) + "\n";
}

}  // namespace symex
