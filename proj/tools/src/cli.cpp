// Copyright 2026 The quadfillet Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "quadfillet/cli.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "quadfillet/error.hpp"
#include "quadfillet/fillet.hpp"
#include "quadfillet/io.hpp"
#include "quadfillet/mesh.hpp"
#include "quadfillet/quadric_class.hpp"
#include "quadfillet/solid.hpp"
#include "quadfillet/verify.hpp"

namespace quadfillet::cli {
namespace {

// Text for report tables and CSV cells.
std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string vec(const Vec3& v) { return "(" + num(v.x) + ", " + num(v.y) + ", " + num(v.z) + ")"; }

std::vector<double> split_numbers(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size() || !std::isfinite(v)) throw std::invalid_argument(item);
    out.push_back(v);
  }
  return out;
}

int report_error(const Error& e, std::ostream& err) {
  err << "error: " << e.what() << "\n";
  if (const auto* v = dynamic_cast<const LatticeValidationError*>(&e)) {
    for (const ValidationIssue& i : v->report().issues)
      err << "  " << (i.severity == Severity::Error ? "error" : "warning") << " " << i.code << " ["
          << i.subject << "] " << i.message << "\n";
  }
  switch (e.code()) {
    case ErrorCode::IoError: return kExitIo;
    case ErrorCode::ParseError:
    case ErrorCode::ValidationError:
    case ErrorCode::InvalidArgument:
    case ErrorCode::DegenerateBounds: return kExitUsage;
    default: return kExitInvariant;
  }
}

void emit(const std::string& path, const std::string& bytes, std::ostream& out) {
  if (path.empty() || path == "-") out << bytes;
  else write_file(path, bytes);
}

struct VerifyArgs {
  std::string lattice;
  VerifyOptions options;
  std::string report;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const Lattice lattice = load_lattice_file(a.lattice);
  const VerifyReport report = run_verify(lattice, a.options);
  if (a.report == "-") {  // stdout carries only the JSON
    out << report.to_json();
    return report.exit_code();
  }
  for (const CheckResult& c : report.checks) {
    out << to_string(c.status) << "  " << c.name << "  measured " << num(c.measured) << "  tolerance "
        << num(c.tolerance);
    if (!c.detail.empty()) out << "  " << c.detail;
    out << "\n";
  }
  out << "summary: " << report.count(CheckStatus::Pass) << " pass, " << report.count(CheckStatus::Fail)
      << " fail, " << report.count(CheckStatus::Warn) << " warn\n";
  if (!a.report.empty()) emit(a.report, report.to_json(), out);
  return report.exit_code();
}

struct MeshArgs {
  std::string lattice;
  int resolution = 64;
  std::string bounds = "auto";
  std::string format = "stl";
  std::string output;
};

int cmd_mesh(const MeshArgs& a, std::ostream& out, std::ostream& err) {
  const Assembly assembly = build_assembly(load_lattice_file(a.lattice));
  Box box;
  if (a.bounds == "auto") {
    box = auto_bounds(assembly);
  } else {
    std::vector<double> v;
    try {
      v = split_numbers(a.bounds);
    } catch (const std::exception&) {
    }
    if (v.size() != 6) {
      err << "error: --bounds expects auto or x0,y0,z0,x1,y1,z1\n";
      return kExitUsage;
    }
    box = {{v[0], v[1], v[2]}, {v[3], v[4], v[5]}};
  }
  const Mesh mesh = marching_cubes(assembly, box, {a.resolution, a.resolution, a.resolution});
  write_file(a.output, a.format == "stl" ? stl_bytes(mesh) : obj_bytes(mesh));
  out << "triangles: " << mesh.triangles.size() << "\n";
  out << "vertices: " << mesh.vertices.size() << "\n";
  out << "watertight: " << (is_closed_manifold(mesh) ? "yes" : "no") << "\n";
  return kExitOk;
}

struct ConicsArgs {
  std::string lattice;
  int samples = 128;
  std::string output;
};

int cmd_conics(const ConicsArgs& a, std::ostream& out, std::ostream& err) {
  const Assembly assembly = build_assembly(load_lattice_file(a.lattice));
  if (assembly.fillets.empty()) {
    err << "error: lattice has no fillets\n";
    return kExitUsage;
  }
  std::vector<Polyline> lines;
  for (const FilletPart& f : assembly.fillets) {
    const FilletPatch& p = f.patch;
    const std::pair<const Conic*, const std::string*> sides[] = {{&p.conic1, &p.beam_i}, {&p.conic2, &p.beam_j}};
    for (const auto& [conic, beam] : sides) {
      const auto branches = sample_conic_branches(*conic, a.samples);
      for (std::size_t i = 0; i < branches.size(); ++i) {
        Polyline line;
        line.points = branches[i].points;
        line.closed = branches[i].closed;
        line.comments.push_back("fillet " + p.hub + ";" + p.beam_i + ";" + p.beam_j + " beta " + num(p.beta) +
                                " stub " + *beam);
        line.comments.push_back("class " + std::string(to_string(conic->kind)) + " branch " +
                                std::to_string(i + 1) + "/" + std::to_string(branches.size()) +
                                (branches[i].closed ? " closed" : " open"));
        line.comments.push_back("parameter [" + num(branches[i].param_min) + ", " +
                                num(branches[i].param_max) + "]");
        lines.push_back(std::move(line));
      }
    }
  }
  write_file(a.output, obj_polyline_bytes(lines));
  out << "polylines: " << lines.size() << "\n";
  return kExitOk;
}

struct SampleArgs {
  std::string lattice;
  std::string points;
  std::string grid;
  std::string output;
  double tol = 1e-9;
};

int cmd_sample(const SampleArgs& a, std::ostream& out, std::ostream& err) {
  const Assembly assembly = build_assembly(load_lattice_file(a.lattice));
  std::vector<Vec3> queries;
  if (!a.points.empty()) {
    queries = parse_points_csv(read_file(a.points));
  } else {
    std::vector<double> n;
    try {
      n = split_numbers(a.grid);
    } catch (const std::exception&) {
    }
    if (n.size() != 3 || std::any_of(n.begin(), n.end(), [](double v) { return v < 1 || v != std::floor(v); })) {
      err << "error: --grid expects three positive integers nx,ny,nz\n";
      return kExitUsage;
    }
    const Box box = auto_bounds(assembly);
    const int nx = static_cast<int>(n[0]), ny = static_cast<int>(n[1]), nz = static_cast<int>(n[2]);
    auto coord = [](double lo, double hi, int i, int count) {
      return count == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * i / (count - 1);
    };
    for (int k = 0; k < nz; ++k)
      for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i)
          queries.push_back({coord(box.lo.x, box.hi.x, i, nx), coord(box.lo.y, box.hi.y, j, ny),
                             coord(box.lo.z, box.hi.z, k, nz)});
  }
  std::string csv = "x,y,z,value,state,label\n";
  for (const Vec3& p : queries) {
    const PointClass c = classify_point(assembly, p, a.tol);
    csv += num(p.x) + "," + num(p.y) + "," + num(p.z) + "," + num(c.value) + "," +
           std::string(to_string(c.state)) + "," + c.label.to_string() + "\n";
  }
  emit(a.output, csv, out);
  return kExitOk;
}

void describe(std::ostream& out, const QuadricClass& cls) {
  out << "    diagonal " << vec({cls.diagonal[0], cls.diagonal[1], cls.diagonal[2]}) << "  linear "
      << vec({cls.linear[0], cls.linear[1], cls.linear[2]}) << "  constant " << num(cls.constant)
      << "  origin " << vec(cls.translation) << "\n";
}

int cmd_classify(const std::string& path, std::ostream& out) {
  const Assembly assembly = build_assembly(load_lattice_file(path));
  for (const BeamPart& b : assembly.beams) {
    const QuadricClass cls = classify_quadric(b.geometry.H);
    out << "beam " << b.id << "  " << to_string(cls.kind);
    if (is_circular(cls)) out << " (circular)";
    out << "\n";
    describe(out, cls);
  }
  for (const FilletPart& f : assembly.fillets) {
    const FilletPatch& p = f.patch;
    const QuadricClass cls = classify_quadric(p.Q);
    out << "fillet " << p.hub << ";" << p.beam_i << ";" << p.beam_j << "  beta " << num(p.beta) << "  "
        << to_string(cls.kind);
    if (p.degenerate()) out << "  degenerate (chamfer)";
    out << "\n";
    describe(out, cls);
    out << "    conics " << to_string(p.conic1.kind) << " (stub " << p.beam_i << "), "
        << to_string(p.conic2.kind) << " (stub " << p.beam_j << ")\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quadric fillets for sphere-and-beam lattices", "qfillet"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "qfillet 0.1.0");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run the invariant checks on a lattice");
  v->add_option("lattice", verify.lattice, "Lattice JSON file")->required();
  v->add_option("--tol", verify.options.tol, "Surface and boundary tolerance")->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  v->add_option("--samples", verify.options.samples, "Random points for the material check")
      ->capture_default_str()->check(CLI::NonNegativeNumber);
  v->add_option("--seed", verify.options.seed, "Random seed")->capture_default_str();
  v->add_option("--report", verify.report, "Write the JSON report here ('-' for stdout instead of the table)");
  v->add_flag("--inject-identity-fault", verify.options.inject_identity_fault)->group("");

  MeshArgs mesh;
  auto* m = app.add_subcommand("mesh", "Polygonize the lattice solid");
  m->add_option("lattice", mesh.lattice, "Lattice JSON file")->required();
  m->add_option("--resolution", mesh.resolution, "Cells per axis")->capture_default_str()
      ->check(CLI::Range(2, 1024));
  m->add_option("--bounds", mesh.bounds, "auto or x0,y0,z0,x1,y1,z1")->capture_default_str();
  m->add_option("--format", mesh.format, "stl or obj")->capture_default_str()
      ->check(CLI::IsMember({"stl", "obj"}));
  m->add_option("-o,--output", mesh.output, "Output file")->required();

  ConicsArgs conics;
  auto* c = app.add_subcommand("conics", "Export the fillet tangency conics as OBJ polylines");
  c->add_option("lattice", conics.lattice, "Lattice JSON file")->required();
  c->add_option("--samples-per-curve", conics.samples, "Points per conic")->capture_default_str()
      ->check(CLI::Range(2, 1 << 20));
  c->add_option("-o,--output", conics.output, "Output OBJ file")->required();

  SampleArgs sample;
  auto* s = app.add_subcommand("sample", "Classify query points against the solid");
  s->add_option("lattice", sample.lattice, "Lattice JSON file")->required();
  auto* points = s->add_option("--points", sample.points, "CSV file of x,y,z rows");
  auto* grid = s->add_option("--grid", sample.grid, "Grid counts nx,ny,nz over the auto bounds");
  points->excludes(grid);
  s->add_option("--tol", sample.tol, "Boundary band")->capture_default_str()->check(CLI::NonNegativeNumber);
  s->add_option("-o,--output", sample.output, "Output CSV file (default stdout)");

  std::string classify_path;
  auto* k = app.add_subcommand("classify", "Report the quadric class of each beam and fillet");
  k->add_option("lattice", classify_path, "Lattice JSON file")->required();

  std::vector<std::string> argv_storage{"qfillet"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (s->parsed() && points->count() + grid->count() != 1)
      throw CLI::RequiredError("exactly one of --points or --grid");
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (v->parsed()) return cmd_verify(verify, out);
    if (m->parsed()) return cmd_mesh(mesh, out, err);
    if (c->parsed()) return cmd_conics(conics, out, err);
    if (s->parsed()) return cmd_sample(sample, out, err);
    return cmd_classify(classify_path, out);
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

}  // namespace quadfillet::cli
