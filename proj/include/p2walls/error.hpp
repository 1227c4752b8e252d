////////////////////////////////////////////////////////////////////////////////
//                                                                            //
//  This file is part of p2walls.                                             //
//                                                                            //
//  Licensed under the Apache License, Version 2.0 (the "License");           //
//  you may not use this file except in compliance with the License.          //
//  You may obtain a copy of the License at                                   //
//                                                                            //
//      http://www.apache.org/licenses/LICENSE-2.0                            //
//                                                                            //
//  Unless required by applicable law or agreed to in writing, software       //
//  distributed under the License is distributed on an "AS IS" BASIS,         //
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.  //
//  See the License for the specific language governing permissions and       //
//  limitations under the License.                                            //
//                                                                            //
////////////////////////////////////////////////////////////////////////////////
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace p2walls {

enum class ErrorCode {
  ParseError,
  NotIntegral,
  NonPositiveRank,
  InvalidArgument,
  TreeDepthExceeded,
  NoStableCharacter,
  AdmissibilityFailed,
  NoAdmissible,
  UnexpectedPositiveChi,
  HeightZeroInput,
  NotSemistableInput,
  DependentCharacters,
  NoRoot,
  EmptyGiesekerWall,
  SearchBudgetExceeded,
};

std::string_view error_code_name(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above; the C
// API maps them one-to-one onto p2w_status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace p2walls
