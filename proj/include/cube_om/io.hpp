// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CUBE_OM_IO_HPP_
#define CUBE_OM_IO_HPP_

// Line-delimited JSON files for hyperplane catalogs and orientations.
//
// Catalog:
//   {"version":1,"n":3,"count":20}
//   {"n":3,"h":[0,0,1],"b":-1,"points":"f0"}
//   ...
// Orientation:
//   {"version":1,"n":3,"catalog_count":20}
//   {"index":0,"positive":"0f","negative":"00"}
//   ...
// Bitsets use VertexSet::ToHex. Keys are written in the order shown, with no
// whitespace, so files are byte-identical across platforms.

#include <filesystem>
#include <iosfwd>

#include "cube_om/matroid.hpp"
#include "cube_om/orientation.hpp"

namespace cube_om {

void WriteCatalog(std::ostream& out, const HyperplaneCatalog& catalog);
// Parses and fully validates. Throws kMalformedFile on syntax or schema
// errors, kCacheMismatch when the file is for another n, and
// kInconsistentCatalog when an entry fails re-verification.
HyperplaneCatalog ReadCatalog(std::istream& in, int expected_n);

void SaveCatalog(const std::filesystem::path& path, const HyperplaneCatalog& catalog);
HyperplaneCatalog LoadCatalog(const std::filesystem::path& path, int expected_n);

void WriteOrientation(std::ostream& out, const Orientation& o);
// Entries may use either representative; they are canonicalized on load.
// Overlapping signed sets or bad records throw kMalformedFile; a file that
// does not fit the catalog throws kCacheMismatch.
Orientation ReadOrientation(std::istream& in, const HyperplaneCatalog& catalog);

void SaveOrientation(const std::filesystem::path& path, const Orientation& o);
Orientation LoadOrientation(const std::filesystem::path& path, const HyperplaneCatalog& catalog);

}  // namespace cube_om

#endif  // CUBE_OM_IO_HPP_
