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

#ifndef EGRAPH_ERRORS_H_
#define EGRAPH_ERRORS_H_

#include <stdexcept>
#include <string>
#include <utility>

namespace egraph {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define EGRAPH_DEFINE_ERROR(Name)        \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  }

// Malformed predicate or key string.
EGRAPH_DEFINE_ERROR(ParseError);
// Argument outside its documented domain.
EGRAPH_DEFINE_ERROR(ValidationError);
EGRAPH_DEFINE_ERROR(GenerationError);
EGRAPH_DEFINE_ERROR(MorphologyError);
EGRAPH_DEFINE_ERROR(IngestError);
// Non-finite values or logs of non-positive scores.
EGRAPH_DEFINE_ERROR(NumericError);
EGRAPH_DEFINE_ERROR(BuildError);
EGRAPH_DEFINE_ERROR(TransportError);
// A metric is undefined for the given input, e.g. single-class labels.
EGRAPH_DEFINE_ERROR(MetricError);
EGRAPH_DEFINE_ERROR(CorpusError);
EGRAPH_DEFINE_ERROR(ConfigError);
EGRAPH_DEFINE_ERROR(IoError);

#undef EGRAPH_DEFINE_ERROR

// Raised by the pipeline when a stage fails; carries the stage name.
class StageError : public Error {
 public:
  StageError(std::string stage, const std::string& cause)
      : Error("stage '" + stage + "' failed: " + cause),
        stage_(std::move(stage)) {}

  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

}  // namespace egraph

#endif  // EGRAPH_ERRORS_H_
