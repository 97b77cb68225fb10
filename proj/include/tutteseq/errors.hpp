// Copyright 2026 The tutteseq Authors
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

namespace tutteseq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidGraph : public Error {
 public:
  using Error::Error;
};

class DisconnectedGraph : public InvalidGraph {
 public:
  using InvalidGraph::InvalidGraph;
};

class ParseError : public InvalidGraph {
 public:
  using InvalidGraph::InvalidGraph;
};

class NoSuchEdge : public Error {
 public:
  using Error::Error;
};

class SameVertex : public Error {
 public:
  using Error::Error;
};

class InvalidPartition : public Error {
 public:
  using Error::Error;
};

class NotSourceOrSink : public Error {
 public:
  using Error::Error;
};

class NotEquivalent : public Error {
 public:
  using Error::Error;
};

/// An orientation does not fit the graph it was handed together with.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class NotStabilized : public Error {
 public:
  using Error::Error;
};

/// The edge handed to a deletion-contraction pipeline disconnects the graph.
class BridgeEdge : public Error {
 public:
  using Error::Error;
};

class SinkMismatch : public Error {
 public:
  using Error::Error;
};

class TooFewVertices : public Error {
 public:
  using Error::Error;
};

}  // namespace tutteseq
