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

#include <string>
#include <string_view>
#include <vector>

namespace p2walls {

/// Embedded golden data file for table 1, 2 or 3 (comment header included).
std::string_view golden_table(int which);

struct TableRowCheck {
  int row = 0;           ///< 1-based position in the golden file
  std::string expected;  ///< golden row, whitespace-normalized
  std::string computed;
  bool match = false;
  std::vector<std::string> notes;  ///< informational remarks (never failures)
};

struct TableReport {
  int table = 0;
  int rows = 0;
  int matched = 0;
  std::vector<TableRowCheck> checks;
  std::vector<std::string> extra;  ///< computed rows absent from the golden data
  bool ok() const { return matched == rows && extra.empty(); }
};

/// Recomputes a table from scratch and compares it with the golden rows.
/// Throws InvalidArgument for which outside 1..3.
TableReport tables_verify(int which);

}  // namespace p2walls
