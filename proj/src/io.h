// Copyright 2026 The privpart Authors.
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


// JSON serialization of instances and solve results.

#ifndef PRIVPART_IO_H_
#define PRIVPART_IO_H_

#include <string>

#include "instance.h"
#include "json.hpp"
#include "result.h"

namespace privpart {

nlohmann::json InstanceToJson(const Instance& instance);
// Throws Error(kParse) on malformed documents and Error(kInvalidArgument)
// when the decoded instance fails validation.
Instance InstanceFromJson(const nlohmann::json& doc);
Instance InstanceFromString(const std::string& text);

// Throws Error(kIo) when the file cannot be read or written.
Instance LoadInstance(const std::string& path);
void SaveInstance(const Instance& instance, const std::string& path);

nlohmann::json ResultToJson(const SolveResult& result);

void WriteTextFile(const std::string& path, const std::string& contents);
std::string ReadTextFile(const std::string& path);

}  // namespace privpart

#endif  // PRIVPART_IO_H_
