// Copyright 2026 The wilsonlab Authors
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

namespace wg {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define WG_DEFINE_ERROR(Name)                                  \
  struct Name : Error {                                        \
    explicit Name(const std::string& what) : Error(what) {}    \
  }

// groups
WG_DEFINE_ERROR(DimensionMismatch);
WG_DEFINE_ERROR(OverlappingSupports);
WG_DEFINE_ERROR(ZeroGenerator);
WG_DEFINE_ERROR(NotAGroupElement);
WG_DEFINE_ERROR(BadModulus);

// grid
WG_DEFINE_ERROR(BadParameters);
WG_DEFINE_ERROR(TooLarge);
WG_DEFINE_ERROR(OffGridShift);
WG_DEFINE_ERROR(PeriodTooSmall);

// synth
WG_DEFINE_ERROR(IncompatibleGrid);
WG_DEFINE_ERROR(WrongDimension);

// frames
WG_DEFINE_ERROR(NotShiftInvariant);
WG_DEFINE_ERROR(AlphaNotInDual);
WG_DEFINE_ERROR(SymmetryViolated);
WG_DEFINE_ERROR(SeparabilityRequired);
WG_DEFINE_ERROR(DegenerateFibers);
WG_DEFINE_ERROR(NotTight);

// contin
WG_DEFINE_ERROR(UnknownName);
WG_DEFINE_ERROR(NoTimeEvaluator);
WG_DEFINE_ERROR(TruncationInsufficient);

// sympl
WG_DEFINE_ERROR(OddDimension);
WG_DEFINE_ERROR(AllBlocksSingular);
WG_DEFINE_ERROR(IncompatibleDilation);
WG_DEFINE_ERROR(IncompatibleChirp);
WG_DEFINE_ERROR(IncompatiblePlan);

// cli
WG_DEFINE_ERROR(ConfigError);

#undef WG_DEFINE_ERROR

}  // namespace wg
