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

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "quadfillet/conics.hpp"
#include "quadfillet/error.hpp"
#include "quadfillet/lattice.hpp"
#include "quadfillet/mesh.hpp"

namespace quadfillet {

// Thrown by load_lattice when the document parses but fails validation.
class LatticeValidationError : public Error {
 public:
  explicit LatticeValidationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

// Strict parse of the lattice JSON document:
//   {"hubs":    [{"id", "center": [x, y, z], "radius"}],
//    "beams":   [{"id", "hubs": [a, b], "k"}],
//    "fillets": [{"hub", "beams": [i, j], "beta"}]}
// "beams" and "fillets" may be omitted. Unknown keys, wrong types, wrong
// array lengths and non-finite numbers are ParseErrors whose detail() is a
// JSON pointer to the offending value. A document that parses but has
// validation errors throws LatticeValidationError.
Lattice load_lattice(std::string_view bytes);

// Reads a file and calls load_lattice; Error(IoError) if it cannot be read.
Lattice load_lattice_file(const std::string& path);

// Inverse of load_lattice; doubles are written so they parse back exactly.
std::string lattice_to_json(const Lattice& lattice);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view bytes);

// Binary STL: 80-byte header, uint32 count, then per triangle 12 float32
// (normal, three vertices) and a zero uint16, all little-endian.
std::string stl_bytes(const Mesh& mesh);
// Triangle soup from binary STL; vertices are not welded.
Mesh parse_stl(std::string_view bytes);

// ASCII OBJ with v and f records (1-based).
std::string obj_bytes(const Mesh& mesh);

struct Polyline {
  std::vector<Vec3> points;
  bool closed = false;         // written with the first index repeated
  std::vector<std::string> comments;  // emitted as "# ..." lines before the l record
};

// ASCII OBJ with v and l records.
std::string obj_polyline_bytes(const std::vector<Polyline>& lines);

// Query points, one "x,y,z" row per line. An optional first row "x,y,z"
// is a header. Blank lines are skipped. Malformed rows
// throw ParseError with detail() set to the 1-based line number.
std::vector<Vec3> parse_points_csv(std::string_view text);

// Shortest text that parses back to the same double.
std::string format_double(double v);

}  // namespace quadfillet
