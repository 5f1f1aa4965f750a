/*
 * Copyright 2026 The sentisearch Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace sentisearch {

/// Base class for every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Filesystem or network failure (CLI exit code 2).
class IoError : public Error {
public:
    using Error::Error;
};

/// Malformed records, bad parameters, unusable queries (CLI exit code 3).
class InputError : public Error {
public:
    using Error::Error;
};

/// Missing lexicons, unknown categories, invalid configuration (CLI exit code 4).
class ConfigError : public Error {
public:
    using Error::Error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 2;
inline constexpr int kExitInput = 3;
inline constexpr int kExitConfig = 4;

}  // namespace sentisearch
