#include "cutlattice/json_io.hpp"

#include <sstream>

#include "cutlattice/tiling.hpp"

namespace cutlattice {

Json skeleton_to_json(const Skeleton& g) {
  Json j;
  j["name"] = g.name;
  if (g.symbol) j["symbol"] = *g.symbol;
  j["n"] = g.n;
  j["adj"] = g.adj;
  if (g.core) {
    std::vector<bool> core(g.core->begin(), g.core->end());
    j["core"] = core;
  }
  if (g.coords) j["coords"] = *g.coords;
  return j;
}

Json patch_to_json(const Patch& p) {
  Json j = skeleton_to_json(p.g);
  j["faces"] = p.faces;
  j["radius"] = p.radius;
  j["margin"] = p.margin;
  return j;
}

LoadedGraph graph_from_json(const Json& j) {
  LoadedGraph out;
  try {
    out.g.name = j.value("name", std::string("graph"));
    if (j.contains("symbol")) out.g.symbol = j["symbol"].get<std::string>();
    out.g.n = j.at("n").get<int>();
    if (out.g.n < 0 || out.g.n > 5'000'000)
      fail(ErrorKind::Parse, "graph_from_json: bad vertex count");
    out.g.adj = j.at("adj").get<std::vector<std::vector<int>>>();
    out.g.sort_adjacency();
    if (j.contains("core")) {
      auto core = j["core"].get<std::vector<bool>>();
      out.g.core = std::vector<bool>(core.begin(), core.end());
    }
    if (j.contains("coords"))
      out.g.coords = j["coords"].get<std::vector<std::vector<double>>>();
    out.g.validate();
    if (j.contains("faces")) {
      Patch p;
      p.faces = j["faces"].get<std::vector<std::vector<int>>>();
      p.radius = j.value("radius", 0);
      p.margin = j.value("margin", 0);
      p.g = out.g;
      p.rotation = rotation_from_faces(p.g.n, p.faces);
      out.patch = std::move(p);
    }
  } catch (const Json::exception& e) {
    fail(ErrorKind::Parse, std::string("graph_from_json: ") + e.what());
  }
  return out;
}

Json embedding_to_json(const Embedding& e) {
  Json j;
  j["scale"] = e.scale;
  j["dim"] = e.dim;
  std::vector<std::string> labels;
  for (const auto& l : e.labels) labels.push_back(l.to_string());
  j["labels"] = labels;
  return j;
}

Embedding embedding_from_json(const Json& j) {
  Embedding e;
  try {
    e.scale = j.at("scale").get<int>();
    e.dim = j.at("dim").get<int>();
    for (const auto& s : j.at("labels")) {
      auto l = BitLabel::from_string(s.get<std::string>());
      if (l.width != e.dim)
        fail(ErrorKind::Parse, "embedding_from_json: label width != dim");
      e.labels.push_back(std::move(l));
    }
  } catch (const Json::exception& ex) {
    fail(ErrorKind::Parse, std::string("embedding_from_json: ") + ex.what());
  }
  return e;
}

Json cuts_to_json(const CutDecomposition& d) {
  Json j;
  j["scale"] = d.scale;
  Json cuts = Json::array();
  for (const auto& c : d.cuts) {
    Json jc;
    jc["side"] = c.side;
    jc["mult"] = c.mult;
    cuts.push_back(std::move(jc));
  }
  j["cuts"] = std::move(cuts);
  return j;
}

CutDecomposition cuts_from_json(const Json& j) {
  CutDecomposition d;
  try {
    d.scale = j.at("scale").get<int>();
    for (const auto& jc : j.at("cuts")) {
      CutDecomposition::Cut c;
      c.side = jc.at("side").get<std::vector<int>>();
      c.mult = jc.at("mult").get<long long>();
      d.cuts.push_back(std::move(c));
    }
  } catch (const Json::exception& ex) {
    fail(ErrorKind::Parse, std::string("cuts_from_json: ") + ex.what());
  }
  return d;
}

Json certificate_to_json(const ViolationCertificate& c) {
  Json j;
  j["k"] = c.k;
  j["positive"] = c.positive;
  j["negative"] = c.negative;
  j["lhs"] = c.lhs;
  j["rhs"] = c.rhs;
  j["tuple"] = c.tuple();
  j["dist"] = c.dist;
  return j;
}

ViolationCertificate certificate_from_json(const Json& j) {
  ViolationCertificate c;
  try {
    c.k = j.at("k").get<int>();
    c.positive = j.at("positive").get<std::vector<int>>();
    c.negative = j.at("negative").get<std::vector<int>>();
    c.lhs = j.at("lhs").get<long long>();
    c.rhs = j.at("rhs").get<long long>();
    c.dist = j.at("dist").get<std::vector<std::vector<int>>>();
  } catch (const Json::exception& ex) {
    fail(ErrorKind::Parse, std::string("certificate_from_json: ") + ex.what());
  }
  return c;
}

Json distance_matrix_to_json(const DistanceMatrix& d) {
  Json j;
  j["n"] = d.size();
  Json rows = Json::array();
  for (int u = 0; u < d.size(); ++u) {
    Json row = Json::array();
    for (int v = 0; v < d.size(); ++v)
      row.push_back(d(u, v) == DistanceMatrix::kInf ? -1 : d(u, v));
    rows.push_back(std::move(row));
  }
  j["d"] = std::move(rows);
  return j;
}

std::string distance_matrix_to_csv(const DistanceMatrix& d) {
  std::ostringstream out;
  for (int u = 0; u < d.size(); ++u) {
    for (int v = 0; v < d.size(); ++v) {
      if (v) out << ',';
      if (d(u, v) == DistanceMatrix::kInf)
        out << -1;
      else
        out << d(u, v);
    }
    out << '\n';
  }
  return out.str();
}

Json atlas_entry_to_json(const AtlasEntry& e) {
  Json j;
  j["symbol"] = e.symbol;
  j["status"] = to_string(e.status);
  if (e.status == AtlasStatus::Embeddable) {
    j["target"] = e.target;
    j["scale"] = e.scale;
    j["dim"] = e.dim;  // -1 = unbounded (Z_inf)
    if (!e.family.empty()) j["family"] = e.family;
  }
  if (!e.reason.empty()) j["reason"] = e.reason;
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

Json representation_to_json(const RepresentationEntry& e) {
  Json j;
  j["cell"] = format(e.cell);
  j["vertex_figure"] = format(e.vertex_figure);
  j["base"] = e.base;
  j["V"] = e.V;
  j["E"] = e.E;
  j["F"] = e.F;
  j["density"] = density(e);
  j["genus"] = genus(e);
  return j;
}

Json table2_to_json() {
  Json j = Json::array();
  for (const auto& e : enumerate_table2()) j.push_back(representation_to_json(e));
  return j;
}

std::string table2_to_text() {
  // Grid over the concrete fractions, cells and doubled-polygon families.
  std::vector<Fraction> fr = {{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 3},
                              {5, 1}, {5, 4}, {5, 2}, {5, 3}};
  std::ostringstream out;
  out << "cell\\vf";
  for (const auto& c : fr) out << '\t' << format(c);
  out << '\n';
  for (const auto& row : fr) {
    out << format(row);
    for (const auto& col : fr) {
      out << '\t';
      if (auto e = table2_lookup(row, col))
        out << density(*e);
      else
        out << '.';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace cutlattice
