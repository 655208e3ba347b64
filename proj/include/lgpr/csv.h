// Copyright 2026 The lgpr Authors.
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

#ifndef LGPR_CSV_H_
#define LGPR_CSV_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace lgpr::csv {

using Row = std::vector<std::string>;

// Splits every non-blank line on commas. Surrounding whitespace is trimmed;
// quoting is not supported. Throws IoError when the file cannot be opened.
std::vector<Row> ReadRows(const std::filesystem::path& path);

// Throw IoError naming `context` when the field is not a complete number.
double ParseDouble(std::string_view field, std::string_view context);
long long ParseInt(std::string_view field, std::string_view context);

// Shortest representation that round-trips to the same double.
std::string FormatDouble(double value);

// Writes `contents` to `path` atomically enough for the CLI: the data goes to
// a sibling temporary file which is renamed over the target on success.
void WriteFile(const std::filesystem::path& path, std::string_view contents);

}  // namespace lgpr::csv

#endif  // LGPR_CSV_H_
