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

#include "quadfillet/io.hpp"

#include <bit>
#include <charconv>
#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include <json.hpp>

namespace quadfillet {
namespace {

using nlohmann::json;

std::string first_error_text(const ValidationReport& report) {
  for (const ValidationIssue& i : report.issues)
    if (i.severity == Severity::Error) return i.code + " (" + i.subject + "): " + i.message;
  return "lattice failed validation";
}

[[noreturn]] void parse_fail(const std::string& pointer, const std::string& message) {
  throw Error(ErrorCode::ParseError, (pointer.empty() ? "/" : pointer) + ": " + message, pointer);
}

void check_keys(const json& obj, const std::string& at, std::initializer_list<std::string_view> required,
                std::initializer_list<std::string_view> optional = {}) {
  if (!obj.is_object()) parse_fail(at, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    const bool known = std::find(required.begin(), required.end(), key) != required.end() ||
                       std::find(optional.begin(), optional.end(), key) != optional.end();
    if (!known) parse_fail(at + "/" + key, "unknown key '" + key + "'");
  }
  for (std::string_view key : required)
    if (!obj.contains(key)) parse_fail(at, "missing key '" + std::string(key) + "'");
}

double get_number(const json& v, const std::string& at) {
  if (!v.is_number()) parse_fail(at, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) parse_fail(at, "number is not finite");
  return d;
}

std::string get_string(const json& v, const std::string& at) {
  if (!v.is_string()) parse_fail(at, "expected a string");
  return v.get<std::string>();
}

const json& get_array(const json& v, const std::string& at, std::size_t length) {
  if (!v.is_array()) parse_fail(at, "expected an array");
  if (length > 0 && v.size() != length)
    parse_fail(at, "expected " + std::to_string(length) + " elements, got " + std::to_string(v.size()));
  return v;
}

Lattice parse_document(const json& doc) {
  check_keys(doc, "", {"hubs"}, {"beams", "fillets"});
  Lattice out;
  const json& hubs = get_array(doc["hubs"], "/hubs", 0);
  for (std::size_t i = 0; i < hubs.size(); ++i) {
    const std::string at = "/hubs/" + std::to_string(i);
    check_keys(hubs[i], at, {"id", "center", "radius"});
    Hub h;
    h.id = get_string(hubs[i]["id"], at + "/id");
    const json& c = get_array(hubs[i]["center"], at + "/center", 3);
    for (int k = 0; k < 3; ++k) h.center[k] = get_number(c[k], at + "/center/" + std::to_string(k));
    h.radius = get_number(hubs[i]["radius"], at + "/radius");
    out.hubs.push_back(std::move(h));
  }
  if (doc.contains("beams")) {
    const json& beams = get_array(doc["beams"], "/beams", 0);
    for (std::size_t i = 0; i < beams.size(); ++i) {
      const std::string at = "/beams/" + std::to_string(i);
      check_keys(beams[i], at, {"id", "hubs", "k"});
      Beam b;
      b.id = get_string(beams[i]["id"], at + "/id");
      const json& ends = get_array(beams[i]["hubs"], at + "/hubs", 2);
      b.hub_a = get_string(ends[0], at + "/hubs/0");
      b.hub_b = get_string(ends[1], at + "/hubs/1");
      b.k = get_number(beams[i]["k"], at + "/k");
      out.beams.push_back(std::move(b));
    }
  }
  if (doc.contains("fillets")) {
    const json& fillets = get_array(doc["fillets"], "/fillets", 0);
    for (std::size_t i = 0; i < fillets.size(); ++i) {
      const std::string at = "/fillets/" + std::to_string(i);
      check_keys(fillets[i], at, {"hub", "beams", "beta"});
      FilletSpec f;
      f.hub = get_string(fillets[i]["hub"], at + "/hub");
      const json& pair = get_array(fillets[i]["beams"], at + "/beams", 2);
      f.beam_i = get_string(pair[0], at + "/beams/0");
      f.beam_j = get_string(pair[1], at + "/beams/1");
      f.beta = get_number(fillets[i]["beta"], at + "/beta");
      out.fillets.push_back(std::move(f));
    }
  }
  return out;
}

template <typename T>
void put_le(std::string& out, T value) {
  static_assert(std::endian::native == std::endian::little || std::endian::native == std::endian::big);
  char bytes[sizeof(T)];
  std::memcpy(bytes, &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes, bytes + sizeof(T));
  out.append(bytes, sizeof(T));
}

template <typename T>
T get_le(std::string_view in, std::size_t offset) {
  char bytes[sizeof(T)];
  std::memcpy(bytes, in.data() + offset, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes, bytes + sizeof(T));
  T value;
  std::memcpy(&value, bytes, sizeof(T));
  return value;
}

bool is_header(std::string_view line) {
  std::string compact;
  for (char ch : line)
    if (ch != ' ' && ch != '\t') compact += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return compact == "x,y,z";
}

void put_vec_f32(std::string& out, const Vec3& v) {
  for (int i = 0; i < 3; ++i) put_le(out, static_cast<float>(v[i]));
}

}  // namespace

LatticeValidationError::LatticeValidationError(ValidationReport report)
    : Error(ErrorCode::ValidationError, first_error_text(report)), report_(std::move(report)) {}

Lattice load_lattice(std::string_view bytes) {
  json doc;
  try {
    doc = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what(),
                "byte " + std::to_string(e.byte));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what(), "");
  }
  Lattice lattice = parse_document(doc);
  ValidationReport report = validate_lattice(lattice);
  if (!report.ok()) throw LatticeValidationError(std::move(report));
  return lattice;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path, path);
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::IoError, "cannot read " + path, path);
  return data;
}

void write_file(const std::string& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path + " for writing", path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path, path);
}

Lattice load_lattice_file(const std::string& path) { return load_lattice(read_file(path)); }

std::string lattice_to_json(const Lattice& lattice) {
  json doc;
  doc["hubs"] = json::array();
  for (const Hub& h : lattice.hubs)
    doc["hubs"].push_back({{"id", h.id}, {"center", {h.center.x, h.center.y, h.center.z}}, {"radius", h.radius}});
  doc["beams"] = json::array();
  for (const Beam& b : lattice.beams)
    doc["beams"].push_back({{"id", b.id}, {"hubs", {b.hub_a, b.hub_b}}, {"k", b.k}});
  doc["fillets"] = json::array();
  for (const FilletSpec& f : lattice.fillets)
    doc["fillets"].push_back({{"hub", f.hub}, {"beams", {f.beam_i, f.beam_j}}, {"beta", f.beta}});
  return doc.dump(2) + "\n";
}

std::string stl_bytes(const Mesh& mesh) {
  std::string out;
  out.reserve(84 + 50 * mesh.triangles.size());
  std::string header = "quadfillet binary STL";
  header.resize(80, ' ');
  out += header;
  put_le(out, static_cast<std::uint32_t>(mesh.triangles.size()));
  for (const Triangle& t : mesh.triangles) {
    const Vec3 n = triangle_normal(mesh, t);
    const double len = norm(n);
    put_vec_f32(out, len > 0.0 ? n / len : Vec3{});
    for (int i = 0; i < 3; ++i) put_vec_f32(out, mesh.vertices[t[i]]);
    put_le(out, std::uint16_t{0});
  }
  return out;
}

Mesh parse_stl(std::string_view bytes) {
  if (bytes.size() < 84) throw Error(ErrorCode::ParseError, "STL shorter than its 84-byte header");
  const auto count = get_le<std::uint32_t>(bytes, 80);
  if (bytes.size() != 84 + 50 * static_cast<std::size_t>(count))
    throw Error(ErrorCode::ParseError, "STL length does not match its triangle count");
  Mesh mesh;
  for (std::uint32_t t = 0; t < count; ++t) {
    const std::size_t base = 84 + 50 * static_cast<std::size_t>(t) + 12;
    Triangle tri;
    for (int v = 0; v < 3; ++v) {
      Vec3 p;
      for (int k = 0; k < 3; ++k) p[k] = get_le<float>(bytes, base + 12 * v + 4 * k);
      tri[v] = static_cast<std::uint32_t>(mesh.vertices.size());
      mesh.vertices.push_back(p);
    }
    mesh.triangles.push_back(tri);
  }
  return mesh;
}

std::string format_double(double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string obj_bytes(const Mesh& mesh) {
  std::ostringstream out;
  out << "# quadfillet mesh: " << mesh.vertices.size() << " vertices, " << mesh.triangles.size()
      << " triangles\n";
  for (const Vec3& v : mesh.vertices)
    out << "v " << format_double(v.x) << ' ' << format_double(v.y) << ' ' << format_double(v.z) << '\n';
  for (const Triangle& t : mesh.triangles) out << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
  return out.str();
}

std::string obj_polyline_bytes(const std::vector<Polyline>& lines) {
  std::ostringstream out;
  out << "# quadfillet polylines: " << lines.size() << '\n';
  std::size_t base = 1;
  for (const Polyline& line : lines) {
    for (const std::string& c : line.comments) out << "# " << c << '\n';
    for (const Vec3& v : line.points)
      out << "v " << format_double(v.x) << ' ' << format_double(v.y) << ' ' << format_double(v.z) << '\n';
    out << 'l';
    for (std::size_t i = 0; i < line.points.size(); ++i) out << ' ' << base + i;
    if (line.closed && !line.points.empty()) out << ' ' << base;
    out << '\n';
    base += line.points.size();
  }
  return out.str();
}

std::vector<Vec3> parse_points_csv(std::string_view text) {
  std::vector<Vec3> out;
  std::size_t line_no = 0;
  bool first_row = true;
  while (!text.empty()) {
    const std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    Vec3 p;
    int fields = 0;
    bool ok = true;
    std::size_t pos = 0;
    while (ok) {
      const std::size_t comma = line.find(',', pos);
      std::string_view field = line.substr(pos, comma == std::string_view::npos ? line.npos : comma - pos);
      while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) field.remove_prefix(1);
      while (!field.empty() && (field.back() == ' ' || field.back() == '\t')) field.remove_suffix(1);
      double value = 0.0;
      const auto r = std::from_chars(field.data(), field.data() + field.size(), value);
      if (field.empty() || r.ec != std::errc{} || r.ptr != field.data() + field.size() ||
          !std::isfinite(value) || fields >= 3) {
        ok = false;
        break;
      }
      p[fields++] = value;
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    ok = ok && fields == 3;
    if (!ok && first_row && is_header(line)) {
      first_row = false;
      continue;
    }
    if (!ok)
      throw Error(ErrorCode::ParseError,
                  "row " + std::to_string(line_no) + ": expected three numbers x,y,z, got '" +
                      std::string(line) + "'",
                  std::to_string(line_no));
    first_row = false;
    out.push_back(p);
  }
  return out;
}

}  // namespace quadfillet
