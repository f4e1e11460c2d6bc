// Copyright 2026 markov-gauge contributors
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

#ifndef MGAUGE_ERRORS_HPP
#define MGAUGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mgauge {

// Structural problems with graphs: bad node, self loop, duplicate edge,
// directed cycle, no consistent extension.
struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Problems with datasets and files: unreadable CSV, missing value,
// column/node mismatch, singular covariance.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid user-supplied configuration (flags, config files, grids).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Statistical routines called outside their domain (too few values,
// degenerate baseline).
struct StatsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mgauge

#endif
