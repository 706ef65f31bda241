// Copyright 2026 The ufh Authors
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

// Report assembly for the CLI subcommands. Reports are ordered JSON
// documents with a schema id, the echoed configuration and the seed; they
// carry no timestamps, so equal inputs give byte-identical output.

#ifndef UFH_REPORT_HPP_
#define UFH_REPORT_HPP_

#include <string>

#include "json.hpp"
#include "ufh/config.hpp"

namespace ufh {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "ufh.report/1";

Json config_json(const RunConfig& config);

Json cmd_generate(const RunConfig& config);
Json cmd_triad(const RunConfig& config);
Json cmd_tree_iso(const RunConfig& config);
Json cmd_basis(const RunConfig& config);
Json cmd_expansion(const RunConfig& config);

// Two-space indented text with a trailing newline.
std::string render(const Json& report);

}  // namespace ufh

#endif  // UFH_REPORT_HPP_
