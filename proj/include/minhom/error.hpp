// Copyright 2026 The minhom Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace minhom {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input: bad files, loops, duplicate arcs,
/// dimension mismatches, targets that are not semicomplete bipartite, ...
class InputError : public Error {
 public:
    using Error::Error;
};

/// A result contradicted a guarantee the algorithms rely on. Seeing one of
/// these means a bug, not a bad input.
class InconsistencyError : public Error {
 public:
    using Error::Error;
};

/// An exhaustive search ran past its configured node budget.
class BudgetExceeded : public Error {
 public:
    using Error::Error;
};

/// Integer capacities or costs do not fit in 64 bits.
class OverflowError : public Error {
 public:
    using Error::Error;
};

}  // namespace minhom
