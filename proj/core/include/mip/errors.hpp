// Copyright 2026 The mipsim Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace mip {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid or unparseable experiment configuration. `line` is 0 when the
// problem is not tied to a specific line of a config file.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, int line, const std::string& message)
      : Error(message), field_(std::move(field)), line_(line) {}

  const std::string& field() const { return field_; }
  int line() const { return line_; }

 private:
  std::string field_;
  int line_;
};

// Raised while deploying, routing, planning or simulating.
class SimulationError : public Error {
 public:
  using Error::Error;
};

// The unit-disk graph has at least one node without a path to the sink.
class NetworkPartitioned : public SimulationError {
 public:
  NetworkPartitioned(unsigned node, const std::string& message)
      : SimulationError(message), node_(node) {}
  unsigned unreachable_node() const { return node_; }

 private:
  unsigned node_;
};

}  // namespace mip
