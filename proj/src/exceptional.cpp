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
#include "p2walls/exceptional.hpp"

#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "p2walls/error.hpp"

namespace p2walls {

namespace {

// Memo of tree-walk results for slopes in [0, 1). Readers share the lock.
class HomeCache {
 public:
  bool find(const std::string& key, ExcSlope& out) const {
    std::shared_lock lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return false;
    out = it->second;
    return true;
  }
  void insert(const std::string& key, const ExcSlope& e) {
    std::unique_lock lock(mu_);
    if (map_.size() >= kMaxEntries) map_.clear();
    map_.emplace(key, e);
  }

 private:
  static constexpr size_t kMaxEntries = 1 << 16;
  mutable std::shared_mutex mu_;
  std::unordered_map<std::string, ExcSlope> map_;
};

HomeCache& home_cache() {
  static HomeCache cache;
  return cache;
}

ExcSlope walk_tree(const Rat& nu) {
  ExcSlope lo = exc_slope(Rat(0));
  ExcSlope hi = exc_slope(Rat(1));
  for (int depth = 0; depth < kTreeDepthLimit; ++depth) {
    if (lo.interval_contains(nu)) return lo;
    if (hi.interval_contains(nu)) return hi;
    ExcSlope mid = dot(lo, hi);
    if (nu == mid.alpha || mid.interval_contains(nu)) return mid;
    (nu < mid.alpha ? hi : lo) = mid;
  }
  throw Error(ErrorCode::TreeDepthExceeded, "no exceptional interval found for " + nu.str());
}

void collect(const ExcSlope& lo, const ExcSlope& hi, const Integer& max_rank, std::vector<ExcSlope>& out) {
  ExcSlope mid = dot(lo, hi);
  if (mid.rank > max_rank) return;
  collect(lo, mid, max_rank, out);
  out.push_back(mid);
  collect(mid, hi, max_rank, out);
}

}  // namespace

bool ExcSlope::interval_contains(const Rat& mu) const {
  return quad_cmp(QuadVal((mu - alpha).abs()), half_width) < 0;
}

ChernChar ExcSlope::character() const { return from_invariants(rank, alpha, disc); }

ExcSlope exc_slope(const Rat& alpha) {
  ExcSlope e;
  e.alpha = alpha;
  e.rank = alpha.den();
  e.disc = (Rat(1) - Rat(Integer(1), Integer(e.rank * e.rank))) / Rat(2);
  e.half_width = QuadVal(Rat(3, 2), (Rat(5) + Rat(8) * e.disc) / Rat(4), -1);
  return e;
}

ExcSlope dot(const ExcSlope& alpha, const ExcSlope& beta) {
  Rat v = (alpha.alpha + beta.alpha) / Rat(2) + (beta.disc - alpha.disc) / (Rat(3) + alpha.alpha - beta.alpha);
  return exc_slope(v);
}

ExcSlope containing_exceptional(const Rat& mu) {
  Integer shift = mu.floor();
  Rat nu = mu - Rat(shift);
  ExcSlope home;
  std::string key = nu.str();
  if (!home_cache().find(key, home)) {
    home = walk_tree(nu);
    home_cache().insert(key, home);
  }
  if (shift != 0) home.alpha += Rat(shift);
  return home;
}

bool is_exceptional_slope(const Rat& mu) { return containing_exceptional(mu).alpha == mu; }

Rat delta(const Rat& mu) {
  ExcSlope e = containing_exceptional(mu);
  return hilbert_p(-(mu - e.alpha).abs()) - e.disc;
}

std::vector<ExcSlope> exceptional_slopes_unit(const Integer& max_rank) {
  std::vector<ExcSlope> out;
  ExcSlope lo = exc_slope(Rat(0)), hi = exc_slope(Rat(1));
  out.push_back(lo);
  collect(lo, hi, max_rank, out);
  out.push_back(hi);
  return out;
}

}  // namespace p2walls
