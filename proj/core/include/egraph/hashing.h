// Copyright 2026 The egraph Authors.
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

#ifndef EGRAPH_HASHING_H_
#define EGRAPH_HASHING_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace egraph {

// Lowercase hex SHA-256.
std::string Sha256Hex(std::string_view data);
std::array<std::uint8_t, 32> Sha256(std::string_view data);

std::string HashFile(const std::filesystem::path& path);

// Hash over the sorted relative paths and contents of every regular file
// below dir.
std::string HashDirectory(const std::filesystem::path& dir);

}  // namespace egraph

#endif  // EGRAPH_HASHING_H_
