#include "chyp/exporters.hpp"

#include <cstdio>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace chyp {

namespace {

void fprint_num(FILE* f, double v) {
  // %.12g keeps output byte-stable across runs and trims trailing noise.
  std::fprintf(f, "%.12g", v);
}

FILE* open_or_throw(const std::string& path) {
  FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  return f;
}

}  // namespace

void write_csv(const std::string& path, const std::vector<CsvRow>& rows) {
  FILE* f = open_or_throw(path);
  std::fprintf(f, "kind,label,alpha,beta,w,x,y,t\n");
  for (const CsvRow& r : rows) {
    std::fprintf(f, "%s,%s,", r.kind.c_str(), r.label.c_str());
    if (r.has_geo) {
      fprint_num(f, r.alpha);
      std::fputc(',', f);
      fprint_num(f, r.beta);
      std::fputc(',', f);
      fprint_num(f, r.w);
    } else {
      std::fprintf(f, ",,");
    }
    std::fputc(',', f);
    fprint_num(f, r.x);
    std::fputc(',', f);
    fprint_num(f, r.y);
    std::fputc(',', f);
    fprint_num(f, r.t);
    std::fputc('\n', f);
  }
  std::fclose(f);
}

void write_obj(const std::string& path, const ObjMesh& mesh) {
  FILE* f = open_or_throw(path);
  for (const auto& v : mesh.vertices) {
    std::fputs("v ", f);
    fprint_num(f, v[0]);
    std::fputc(' ', f);
    fprint_num(f, v[1]);
    std::fputc(' ', f);
    fprint_num(f, v[2]);
    std::fputc('\n', f);
  }
  for (const auto& tri : mesh.triangles)
    std::fprintf(f, "f %d %d %d\n", tri[0] + 1, tri[1] + 1, tri[2] + 1);
  for (const auto& line : mesh.polylines) {
    std::fputs("l", f);
    for (int idx : line) std::fprintf(f, " %d", idx + 1);
    std::fputc('\n', f);
  }
  std::fclose(f);
}

ObjMesh sphere_boundary_mesh(const IsometricSphere& s, int n_alpha, int n_beta) {
  ObjMesh mesh;
  // Two boundary sheets w = +-sqrt(cos alpha); together they close up along
  // the alpha = +-pi/2 poles.
  auto point = [&](double alpha, double beta, int sheet) {
    double w = (sheet ? -1.0 : 1.0) * std::sqrt(std::max(0.0, std::cos(alpha)));
    HoroPoint p = geographic_point({alpha, beta, w}, s);
    return std::array<double, 3>{p.z.real(), p.z.imag(), p.t};
  };
  auto index = [&](int i, int j, int sheet) {
    return sheet * (n_alpha + 1) * n_beta + i * n_beta + (j % n_beta);
  };
  for (int sheet = 0; sheet < 2; ++sheet)
    for (int i = 0; i <= n_alpha; ++i)
      for (int j = 0; j < n_beta; ++j) {
        double alpha = -kPi / 2.0 + kPi * i / n_alpha;
        double beta = kPi * j / n_beta;
        mesh.vertices.push_back(point(alpha, beta, sheet));
      }
  for (int sheet = 0; sheet < 2; ++sheet)
    for (int i = 0; i < n_alpha; ++i)
      for (int j = 0; j < n_beta; ++j) {
        int a = index(i, j, sheet), b = index(i + 1, j, sheet);
        int c = index(i + 1, j + 1, sheet), d = index(i, j + 1, sheet);
        mesh.triangles.push_back({a, b, c});
        mesh.triangles.push_back({a, c, d});
      }
  return mesh;
}

ObjMesh spheres_figure(const TriangleGroup& tg, int k_min, int k_max, int grid) {
  ObjMesh all;
  for (SphereFamily f : {SphereFamily::kPlus, SphereFamily::kMinus, SphereFamily::kStar,
                         SphereFamily::kDiamond}) {
    for (int k = k_min; k <= k_max; ++k) {
      ObjMesh one = sphere_boundary_mesh(sphere_of({f, k}, tg), grid, grid);
      int base = static_cast<int>(all.vertices.size());
      all.vertices.insert(all.vertices.end(), one.vertices.begin(), one.vertices.end());
      for (auto tri : one.triangles)
        all.triangles.push_back({tri[0] + base, tri[1] + base, tri[2] + base});
    }
  }
  return all;
}

ObjMesh triple_curves_figure(const TriangleGroup& tg, int samples, std::vector<CsvRow>* rows) {
  TripleCurves tc = triple_curves(tg, samples);
  ObjMesh mesh;
  auto arc = [&](const char* label, const std::vector<GeographicCoord>& params,
                 const std::vector<HoroPoint>& pts) {
    std::vector<int> line;
    for (size_t i = 0; i < pts.size(); ++i) {
      line.push_back(static_cast<int>(mesh.vertices.size()));
      mesh.vertices.push_back({pts[i].z.real(), pts[i].z.imag(), pts[i].t});
      if (rows)
        rows->push_back({"triple", label, true, params[i].alpha, params[i].beta, params[i].w,
                         pts[i].z.real(), pts[i].z.imag(), pts[i].t});
    }
    mesh.polylines.push_back(std::move(line));
  };
  arc("L1", tc.arc_l1_params, tc.arc_l1);
  arc("C1", tc.arc_c1_params, tc.arc_c1);
  arc("C2", tc.arc_c2_params, tc.arc_c2);
  if (rows)
    rows->push_back({"triple", "center", false, 0, 0, 0, tc.center.z.real(),
                     tc.center.z.imag(), tc.center.t});
  return mesh;
}

ObjMesh c0_figure(const TriangleGroup& tg, int samples, std::vector<CsvRow>* rows) {
  CurveC0 c0 = curve_c0(tg, samples);
  ObjMesh mesh;
  auto arc = [&](const char* label, const std::vector<HeisenbergPoint>& pts) {
    std::vector<int> line;
    for (const HeisenbergPoint& p : pts) {
      line.push_back(static_cast<int>(mesh.vertices.size()));
      mesh.vertices.push_back({p.z.real(), p.z.imag(), p.t});
      if (rows)
        rows->push_back({"c0", label, false, 0, 0, 0, p.z.real(), p.z.imag(), p.t});
    }
    mesh.polylines.push_back(std::move(line));
  };
  arc("c0+", c0.arc_plus);
  arc("c0-", c0.arc_minus);
  if (rows) {
    for (const auto& [label, q] :
         std::initializer_list<std::pair<const char*, const BoundaryPoint*>>{
             {"q3", &c0.endpoint_q3}, {"v0", &c0.endpoint_v0}})
      rows->push_back({"c0", label, false, 0, 0, 0, q->p.z.real(), q->p.z.imag(), q->p.t});
  }
  return mesh;
}

std::vector<CsvRow> giraud_figure(const TriangleGroup& tg, const SphereId& a,
                                  const SphereId& b, const TraceOptions& opt) {
  GiraudTrace tr = giraud_trace(sphere_of(a, tg), sphere_of(b, tg), opt);
  std::vector<CsvRow> rows;
  rows.reserve(tr.points.size());
  std::string label = to_string(a) + "^" + to_string(b);
  for (const TracedPoint& tp : tr.points)
    rows.push_back({"giraud", label, true, tp.gc.alpha, tp.gc.beta, tp.gc.w, tp.p.z.real(),
                    tp.p.z.imag(), tp.p.t});
  return rows;
}

std::vector<CsvRow> rcircle_figure(int samples, double x_min, double x_max) {
  auto pts = sample_rcircle({RCircleSpec::Kind::kTInvariantLine, x_min, x_max}, samples);
  std::vector<CsvRow> rows;
  for (const HeisenbergPoint& p : pts)
    rows.push_back({"rcircle", "L", false, 0, 0, 0, p.z.real(), p.z.imag(), p.t});
  return rows;
}

namespace {

constexpr double kInfinityStem = 4.0;  // vertical stub length for edges to infinity

ObjMesh labeled_graph(const TriangleGroup& tg, const std::vector<std::string>& vertices,
                      const std::vector<std::pair<std::string, std::string>>& edges,
                      const char* kind, std::vector<CsvRow>* rows) {
  auto pts = named_points(tg);
  ObjMesh mesh;
  std::map<std::string, int> index;
  for (const std::string& v : vertices) {
    if (v == "qinf") continue;
    const BoundaryPoint& p = pts.at(v);
    index[v] = static_cast<int>(mesh.vertices.size());
    mesh.vertices.push_back({p.p.z.real(), p.p.z.imag(), p.p.t});
    if (rows)
      rows->push_back({kind, v, false, 0, 0, 0, p.p.z.real(), p.p.z.imag(), p.p.t});
  }
  for (const auto& [a, b] : edges) {
    if (a == "qinf" || b == "qinf") {
      // Render as a vertical stub above the finite endpoint.
      const std::string& fin = a == "qinf" ? b : a;
      const BoundaryPoint& p = pts.at(fin);
      int i0 = index.at(fin);
      int i1 = static_cast<int>(mesh.vertices.size());
      mesh.vertices.push_back({p.p.z.real(), p.p.z.imag(), p.p.t + kInfinityStem});
      mesh.polylines.push_back({i0, i1});
    } else {
      mesh.polylines.push_back({index.at(a), index.at(b)});
    }
  }
  return mesh;
}

}  // namespace

ObjMesh complex_figure(const TriangleGroup& tg, std::vector<CsvRow>* rows) {
  CellComplex cc = tube_complex(tg);
  std::vector<std::string> vertices;
  for (const CellVertex& v : cc.vertices) vertices.push_back(v.label);
  std::vector<std::pair<std::string, std::string>> edges;
  for (const CellEdge& e : cc.edges) edges.emplace_back(e.v0, e.v1);
  return labeled_graph(tg, vertices, edges, "complex", rows);
}

ObjMesh polyhedron_figure(const TriangleGroup& tg, std::vector<CsvRow>* rows) {
  Polyhedron poly = polyhedron_data();
  std::set<std::string> vset;
  std::set<std::pair<std::string, std::string>> eset;
  for (const CellFace& f : poly.faces) {
    size_t n = f.vertices.size();
    for (size_t i = 0; i < n; ++i) {
      vset.insert(f.vertices[i]);
      std::string a = f.vertices[i], b = f.vertices[(i + 1) % n];
      if (b < a) std::swap(a, b);
      eset.insert({a, b});
    }
  }
  std::vector<std::string> vertices(vset.begin(), vset.end());
  std::vector<std::pair<std::string, std::string>> edges(eset.begin(), eset.end());
  return labeled_graph(tg, vertices, edges, "polyhedron", rows);
}

std::string cell_complex_json(const CellComplex& cc) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (const CellVertex& v : cc.vertices) {
    j["vertices"].push_back({{"label", v.label},
                             {"x", v.pos.p.z.real()},
                             {"y", v.pos.p.z.imag()},
                             {"t", v.pos.p.t}});
  }
  j["edges"] = nlohmann::json::array();
  for (const CellEdge& e : cc.edges)
    j["edges"].push_back({{"label", e.label}, {"v", {e.v0, e.v1}}, {"carriers", e.carriers}});
  j["faces"] = nlohmann::json::array();
  for (const CellFace& f : cc.faces)
    j["faces"].push_back(
        {{"label", f.label}, {"edges", f.edges}, {"vertices", f.vertices},
         {"carrier", f.carrier}});
  j["euler_characteristic"] = cc.euler_characteristic();
  return j.dump(2);
}

std::string polyhedron_json(const Polyhedron& p, const TriangleGroup& tg) {
  auto pts = named_points(tg);
  nlohmann::json j;
  j["faces"] = nlohmann::json::array();
  for (const CellFace& f : p.faces)
    j["faces"].push_back({{"label", f.label}, {"vertices", f.vertices}});
  j["pairings"] = nlohmann::json::array();
  for (const FacePairing& fp : p.pairings)
    j["pairings"].push_back({{"name", fp.name},
                             {"word", word_string(fp.map)},
                             {"src_face", fp.src_face},
                             {"dst_face", fp.dst_face},
                             {"src", fp.src},
                             {"dst", fp.dst}});
  j["census"] = nlohmann::json::object();
  for (const auto& [arity, count] : p.face_census)
    j["census"][std::to_string(arity)] = count;
  j["vertices"] = nlohmann::json::object();
  for (const auto& [label, q] : pts) {
    if (q.at_infinity)
      j["vertices"][label] = {{"infinity", true}};
    else
      j["vertices"][label] = {{"x", q.p.z.real()}, {"y", q.p.z.imag()}, {"t", q.p.t}};
  }
  return j.dump(2);
}

}  // namespace chyp
