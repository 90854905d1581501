// Copyright 2026 The Deltadome Authors.
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

#include <string>

#include "constructors.hpp"
#include "gaussmap.hpp"
#include "mesh.hpp"
#include "polygon.hpp"
#include "search.hpp"
#include "verifier.hpp"

namespace deltadome {

// All parsers throw Error(kParse) on malformed input.

// Polygon files: {"edges": [int, ...]}.
PolygonSpec ParsePolygonJson(const std::string& text);
std::string PolygonJson(const PolygonSpec& spec);

// Mesh JSON: {"vertices": [[x,y,z], ...], "faces": [[i, ...], ...],
// "base_face": int}. Doubles survive a round trip bit for bit.
Mesh ParseMeshJson(const std::string& text);
std::string MeshJson(const Mesh& mesh);

// Wavefront OBJ with 17 significant digits. The base face travels in a
// "# base <index>" comment line; foreign elements (vn, vt, groups) are
// skipped on input, negative indices count from the end as usual.
Mesh ParseObj(const std::string& text);
std::string MeshObj(const Mesh& mesh);

// Dispatch on the first non-space byte: '{' reads JSON, else OBJ.
Mesh ParseMeshAuto(const std::string& text);

// Copy with every dome face split into its unit triangles. The base stays
// a single polygon with its edges subdivided at the lattice points, so the
// result is still a closed edge-to-edge mesh. Throws when a dome face is
// not a union of unit lattice triangles.
Mesh Triangulated(const Mesh& mesh, const Tolerances& tol);

std::string ConditionJson(const ConditionReport& r);
std::string DecideJson(const DecideOutcome& o);
std::string AuditJson(const AuditReport& r);
std::string SearchJson(const SearchOutcome& o);
std::string GaussSweepJson(const GaussSweep& s);

// File helpers; throw Error(kParse) with the path on failure.
std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& text);

}  // namespace deltadome
