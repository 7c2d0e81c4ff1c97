#pragma once

#include <string>
#include <utility>
#include <vector>

#include "stonedual/groupoid.hpp"
#include "stonedual/invsemi.hpp"

namespace stonedual {

/// Construction keys:
///   semigroups:  I_n | GZ(1) | GZ(Zk) | Rook(n,1) | Rook(n,Zk) | AxB
///   groupoids:   Pair(n) | Comp(p,H,p) with H in {1, Zk} | A+B
FinInvSemi make_semigroup(const std::string& key);
FinGroupoid make_groupoid(const std::string& key);
bool is_semigroup_key(const std::string& key);
bool is_groupoid_key(const std::string& key);

/// The named instances every cross-instance law suite runs over.
std::vector<std::string> semigroup_catalog_keys();

/// Named instances plus five pseudorandom subalgebras of I_3 (fixed seed).
std::vector<std::pair<std::string, FinInvSemi>> acceptance_catalog();

std::vector<std::string> groupoid_catalog_keys();

}  // namespace stonedual
