#include "gitkit/fan.hpp"

#include <algorithm>
#include <set>

#include "gitkit/error.hpp"

namespace gitkit {

Cone chamber_of(std::span<const Cone> cones, std::span<const Integer> y) {
  const Cone* first = nullptr;
  Cone acc;
  for (const auto& c : cones) {
    if (!c.contains(y)) continue;
    if (first == nullptr) {
      first = &c;
      acc = c;
    } else {
      acc = intersect(acc, c);
    }
  }
  if (first == nullptr) throw Error(ErrorKind::EmptyClass, "point lies in no cone of the collection");
  return acc;
}

std::vector<Cone> intersection_closure(std::span<const Cone> cones) {
  std::set<Cone> all(cones.begin(), cones.end());
  std::vector<Cone> frontier(all.begin(), all.end());
  while (!frontier.empty()) {
    std::vector<Cone> fresh;
    const std::vector<Cone> known(all.begin(), all.end());
    for (const auto& a : frontier)
      for (const auto& b : known) {
        Cone c = intersect(a, b);
        if (all.insert(c).second) fresh.push_back(std::move(c));
      }
    frontier = std::move(fresh);
  }
  return {all.begin(), all.end()};
}

std::vector<Cone> chamber_fan(std::span<const Cone> cones) {
  std::set<Cone> chambers;
  for (const auto& candidate : intersection_closure(cones))
    chambers.insert(chamber_of(cones, candidate.relative_interior_point()));
  std::vector<Cone> out(chambers.begin(), chambers.end());
  std::sort(out.begin(), out.end(), table_order);
  return out;
}

bool is_face_of(const Cone& face, const Cone& cone) {
  if (face.rank() != cone.rank()) return false;
  for (const auto& f : faces(cone))
    if (f.cone == face) return true;
  return false;
}

bool is_fan(std::span<const Cone> cones) {
  const std::set<Cone> members(cones.begin(), cones.end());
  for (const auto& c : cones)
    for (const auto& f : faces(c))
      if (!members.contains(f.cone)) return false;
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      Cone meet = intersect(cones[i], cones[j]);
      if (!is_face_of(meet, cones[i]) || !is_face_of(meet, cones[j])) return false;
    }
  return true;
}

}  // namespace gitkit
