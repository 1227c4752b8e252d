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
#include "p2walls/error.hpp"

namespace p2walls {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotIntegral: return "NotIntegral";
    case ErrorCode::NonPositiveRank: return "NonPositiveRank";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::TreeDepthExceeded: return "TreeDepthExceeded";
    case ErrorCode::NoStableCharacter: return "NoStableCharacter";
    case ErrorCode::AdmissibilityFailed: return "AdmissibilityFailed";
    case ErrorCode::NoAdmissible: return "NoAdmissible";
    case ErrorCode::UnexpectedPositiveChi: return "UnexpectedPositiveChi";
    case ErrorCode::HeightZeroInput: return "HeightZeroInput";
    case ErrorCode::NotSemistableInput: return "NotSemistableInput";
    case ErrorCode::DependentCharacters: return "DependentCharacters";
    case ErrorCode::NoRoot: return "NoRoot";
    case ErrorCode::EmptyGiesekerWall: return "EmptyGiesekerWall";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
  }
  return "Unknown";
}

}  // namespace p2walls
